//! Fixed-universe vertex sets backed by machine words.
//!
//! Graphs up to 64 vertices stay in a single inline word (no heap traffic in
//! the closure hot path); larger universes spill to a heap word vector, capped
//! at [`MAX_VERTICES`].

use smallvec::SmallVec;

/// Hard cap on the supported vertex count.
pub const MAX_VERTICES: usize = 1024;

const WORD_BITS: usize = 64;

#[inline]
fn word_count(universe: usize) -> usize {
    universe.div_ceil(WORD_BITS).max(1)
}

/// A set of vertex indices drawn from a fixed universe `0..universe`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VertexSet {
    words: SmallVec<[u64; 1]>,
    universe: usize,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        assert!(universe <= MAX_VERTICES, "universe exceeds {MAX_VERTICES}");
        VertexSet {
            words: SmallVec::from_elem(0, word_count(universe)),
            universe,
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for v in 0..universe {
            s.insert(v);
        }
        s
    }

    pub fn from_indices(universe: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(universe);
        for v in indices {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.universe);
        self.words[v / WORD_BITS] |= 1u64 << (v % WORD_BITS);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < self.universe);
        self.words[v / WORD_BITS] &= !(1u64 << (v % WORD_BITS));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < self.universe);
        self.words[v / WORD_BITS] & (1u64 << (v % WORD_BITS)) != 0
    }

    #[inline]
    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn subtract(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.universe
    }

    /// Iterate set members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * WORD_BITS + b)
            })
        })
    }

    /// The unique element of `self \ other`, if `|self \ other| == 1`.
    ///
    /// Returns `None` when the difference is empty or has two or more members.
    pub fn unique_not_in(&self, other: &VertexSet) -> Option<usize> {
        debug_assert_eq!(self.universe, other.universe);
        let mut found: Option<usize> = None;
        for (i, (a, b)) in self.words.iter().zip(&other.words).enumerate() {
            let d = a & !b;
            if d == 0 {
                continue;
            }
            if found.is_some() || d & (d - 1) != 0 {
                return None;
            }
            found = Some(i * WORD_BITS + d.trailing_zeros() as usize);
        }
        found
    }

    /// True when `self` and `other` share no members.
    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }
}

impl std::fmt::Display for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}
