//! Independent oracles and property runners shared by the integration tests.
//!
//! The oracles deliberately avoid the library's closure and search code:
//! the naive closure rescans the whole graph and applies one force at a
//! time, and the naive minimum search enumerates plain bitmasks. Agreement
//! with the library is the point of these tests.

#![allow(dead_code)]

use forcing_core::engine::{closure, closure_final};
use forcing_core::graph::Graph;
use forcing_core::search::{min_leaky_forcing_number, Budget};
use forcing_core::verify::is_leaky_forcing_set;
use forcing_core::VertexSet;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_subset(rng: &mut ChaCha8Rng, n: usize, p: f64) -> VertexSet {
    VertexSet::from_indices(n, (0..n).filter(|_| rng.gen_bool(p)))
}

/// One force applicable under the current coloring: `forcer` is colored, not
/// a leak, and `target` is its unique uncolored neighbor.
fn applicable_forces(g: &Graph, colored: &VertexSet, leaks: &VertexSet) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for v in colored.iter() {
        if leaks.contains(v) {
            continue;
        }
        if let Some(u) = g.neighbors(v).unique_not_in(colored) {
            out.push((v, u));
        }
    }
    out
}

/// Sequential closure applying one randomly chosen force at a time.
pub fn sequential_random_closure(
    g: &Graph,
    initial: &VertexSet,
    leaks: &VertexSet,
    rng: &mut ChaCha8Rng,
) -> VertexSet {
    let mut colored = initial.clone();
    loop {
        let forces = applicable_forces(g, &colored, leaks);
        match forces.choose(rng) {
            Some(&(_, target)) => colored.insert(target),
            None => return colored,
        }
    }
}

/// Deterministic one-at-a-time closure: always apply the first applicable
/// force in vertex order. Used as the engine-independent oracle.
pub fn naive_closure(g: &Graph, initial: &VertexSet, leaks: &VertexSet) -> VertexSet {
    let mut colored = initial.clone();
    loop {
        match applicable_forces(g, &colored, leaks).first() {
            Some(&(_, target)) => colored.insert(target),
            None => return colored,
        }
    }
}

/// Bitmask-enumeration leaky check; only usable for small n.
pub fn naive_is_leaky(g: &Graph, b: &VertexSet, ell: usize) -> bool {
    let n = g.vertex_count();
    assert!(n <= 20);
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == ell)
        .all(|m| {
            let leaks = VertexSet::from_indices(n, (0..n).filter(|v| m >> v & 1 == 1));
            naive_closure(g, b, &leaks).is_full()
        })
}

/// Minimum l-leaky forcing number by plain bitmask enumeration.
pub fn naive_min_leaky(g: &Graph, ell: usize) -> usize {
    let n = g.vertex_count();
    assert!(n <= 16);
    for size in 0..=n {
        for m in 0u32..1 << n {
            if m.count_ones() as usize != size {
                continue;
            }
            let b = VertexSet::from_indices(n, (0..n).filter(|v| m >> v & 1 == 1));
            if naive_is_leaky(g, &b, ell) {
                return size;
            }
        }
    }
    unreachable!("the full vertex set is always leaky forcing");
}

/// Synchronous closure vs random sequential orders. Returns counterexamples.
pub fn run_scheduling_independence(instances: usize, orders: usize) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let mut bad = 0;
    for _ in 0..instances {
        let n = rng.gen_range(1..=12);
        let g = random_graph(&mut rng, n, 0.4);
        let b = random_subset(&mut rng, n, 0.4);
        let leaks = random_subset(&mut rng, n, 0.15);
        let reference = closure_final(&g, &b, &leaks);
        for _ in 0..orders {
            if sequential_random_closure(&g, &b, &leaks, &mut rng) != reference {
                bad += 1;
            }
        }
    }
    bad
}

/// Removing leaks can only grow the closure. Returns counterexamples.
pub fn run_leak_monotonicity(instances: usize) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    let mut bad = 0;
    for _ in 0..instances {
        let n = rng.gen_range(1..=12);
        let g = random_graph(&mut rng, n, 0.4);
        let b = random_subset(&mut rng, n, 0.4);
        let leaks = random_subset(&mut rng, n, 0.3);
        let full = closure_final(&g, &b, &leaks);
        // drop each leak in turn
        for dropped in leaks.iter() {
            let mut fewer = leaks.clone();
            fewer.remove(dropped);
            if !full.is_subset_of(&closure_final(&g, &b, &fewer)) {
                bad += 1;
            }
        }
    }
    bad
}

/// Growing the initial set can only grow the closure. Returns counterexamples.
pub fn run_b_monotonicity(instances: usize) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(303);
    let mut bad = 0;
    for _ in 0..instances {
        let n = rng.gen_range(1..=12);
        let g = random_graph(&mut rng, n, 0.4);
        let b = random_subset(&mut rng, n, 0.3);
        let leaks = random_subset(&mut rng, n, 0.15);
        let mut bigger = b.clone();
        bigger.union_with(&random_subset(&mut rng, n, 0.2));
        let small = closure_final(&g, &b, &leaks);
        if !small.is_subset_of(&closure_final(&g, &bigger, &leaks)) {
            bad += 1;
        }
    }
    bad
}

/// ell = 0 verification agrees with plain zero forcing on every subset of
/// every sampled graph. Returns counterexamples.
pub fn run_ell0_equivalence(graphs: usize) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    let mut bad = 0;
    for _ in 0..graphs {
        let n = rng.gen_range(1..=10);
        let g = random_graph(&mut rng, n, 0.4);
        for m in 0u32..1 << n {
            let b = VertexSet::from_indices(n, (0..n).filter(|v| m >> v & 1 == 1));
            let report = is_leaky_forcing_set(&g, &b, 0).unwrap();
            let empty = VertexSet::empty(n);
            if report.passed != closure(&g, &b, &empty).final_colored.is_full() {
                bad += 1;
            }
        }
    }
    bad
}

/// Exact search agrees with the bitmask oracle. Returns counterexamples.
pub fn run_exact_oracle_agreement(graphs: usize) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(505);
    let mut bad = 0;
    for _ in 0..graphs {
        let n = rng.gen_range(1..=10);
        let g = random_graph(&mut rng, n, 0.5);
        for ell in 0..=2.min(n) {
            let expected = naive_min_leaky(&g, ell);
            let got = min_leaky_forcing_number(&g, ell, Some(1), None, Budget::unlimited())
                .unwrap()
                .value
                .unwrap_or(usize::MAX);
            if got != expected {
                bad += 1;
            }
        }
    }
    bad
}
