//! The forcing closure: iterated application of the color change rule from an
//! initial colored set, with an adversarial leak set whose members never force
//! (though they may be forced).
//!
//! Rounds are synchronous: every colored non-leak vertex with exactly one
//! uncolored neighbor (as of the round start) forces it. When two vertices
//! would force the same target in a round, the lower-indexed forcer is the one
//! recorded. The final colored set is the unique closure and does not depend
//! on this schedule; that independence is property-tested, not assumed.

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// One force: `forcer` colored `forced` in round `round` (1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ForceEvent {
    pub forcer: usize,
    pub forced: usize,
    pub round: usize,
}

/// Replayable record of a closure run.
#[derive(Clone, Debug)]
pub struct ForcingChronicle {
    pub events: Vec<ForceEvent>,
    pub final_colored: VertexSet,
    pub stalled: bool,
}

/// Run the leak-restricted forcing process to termination.
pub fn closure(g: &Graph, initial: &VertexSet, leaks: &VertexSet) -> ForcingChronicle {
    let n = g.vertex_count();
    debug_assert_eq!(initial.universe(), n);
    debug_assert_eq!(leaks.universe(), n);
    let mut colored = initial.clone();
    let mut events = Vec::new();
    let mut round = 1;
    loop {
        let start = colored.clone();
        let mut any = false;
        for forcer in start.iter() {
            if leaks.contains(forcer) {
                continue;
            }
            if let Some(target) = g.neighbors(forcer).unique_not_in(&start) {
                if !colored.contains(target) {
                    colored.insert(target);
                    events.push(ForceEvent { forcer, forced: target, round });
                    any = true;
                }
            }
        }
        if !any {
            break;
        }
        round += 1;
    }
    let stalled = !colored.is_full();
    ForcingChronicle { events, final_colored: colored, stalled }
}

/// Like [`closure`] but without the chronicle; the hot path for search.
pub fn closure_final(g: &Graph, initial: &VertexSet, leaks: &VertexSet) -> VertexSet {
    let mut colored = initial.clone();
    loop {
        let start = colored.clone();
        let mut any = false;
        for forcer in start.iter() {
            if leaks.contains(forcer) {
                continue;
            }
            if let Some(target) = g.neighbors(forcer).unique_not_in(&start) {
                if !colored.contains(target) {
                    colored.insert(target);
                    any = true;
                }
            }
        }
        if !any {
            return colored;
        }
    }
}

/// True iff the no-leak closure of `b` colors every vertex.
pub fn is_zero_forcing_set(g: &Graph, b: &VertexSet) -> bool {
    closure_final(g, b, &VertexSet::empty(g.vertex_count())).is_full()
}
