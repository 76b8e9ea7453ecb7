//! Binomial coefficients and colexicographic enumeration of k-subsets.
//!
//! Colex order on k-subsets compares the largest differing element; for
//! bitmask representations this coincides with numeric order of the masks.
//! Ranking follows the combinatorial number system:
//! `rank{c1 < c2 < ... < ck} = C(c1,1) + C(c2,2) + ... + C(ck,k)`.

/// `C(n, k)` saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        let num = (n - i) as u128;
        acc = match acc.checked_mul(num) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// The `rank`-th k-subset of the nonnegative integers in colex order,
/// as a strictly increasing index vector.
pub fn colex_unrank(mut rank: u128, k: usize) -> Vec<usize> {
    let mut out = vec![0usize; k];
    for i in (1..=k).rev() {
        // largest c with C(c, i) <= rank
        let mut c = i - 1;
        while binomial(c + 1, i) <= rank {
            c += 1;
        }
        rank -= binomial(c, i);
        out[i - 1] = c;
    }
    out
}

/// Colex rank of a strictly increasing index vector.
pub fn colex_rank(subset: &[usize]) -> u128 {
    subset
        .iter()
        .enumerate()
        .map(|(i, &c)| binomial(c, i + 1))
        .sum()
}

/// Advance `subset` to its colex successor among k-subsets of `0..n`.
/// Returns false (leaving the subset unspecified) when already at the last one.
pub fn colex_next(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    if k == 0 {
        return false;
    }
    // Find the first position whose element can move up without colliding
    // with its right neighbour; everything left of it resets to 0,1,2,...
    for i in 0..k {
        let limit = if i + 1 < k { subset[i + 1] } else { n };
        if subset[i] + 1 < limit {
            subset[i] += 1;
            for (j, slot) in subset.iter_mut().enumerate().take(i) {
                *slot = j;
            }
            return true;
        }
    }
    false
}
