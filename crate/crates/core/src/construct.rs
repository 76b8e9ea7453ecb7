//! Explicit 1-leaky forcing sets for K_n x P_t, K_n x C_t, and K_n x K_n,
//! parametric in (n, t), dispatching on the parities of n and t.
//!
//! Coordinates are 1-based (row, column): rows index the K_n factor, columns
//! the path/cycle factor. For even t each column carries exactly n-2 colored
//! vertices; odd t adds a fully colored last column. The even-t column rules:
//!
//!   column 1        rows 3..n
//!   column 2        rows 2..n-1
//!   odd interior    rows 2..n-1
//!   even interior   all rows except a middle pair: {n/2, n/2+1} for even n;
//!                   for odd n, {n-2, n-1} on columns = 0 mod 4 and {2, 3}
//!                   on columns = 2 mod 4
//!   column t        rows 1..n-2 (overriding the mod-4 families when t = 0
//!                   mod 4; the K5 x P8 layout fixes this reading)
//!
//! n = 3 is special: the general odd-n rule degenerates (column 1 keeps only
//! row 3, which is not adjacent to (3,2) in the direct product and can never
//! force it), so even-t sets for n = 3 instead alternate row 3 on odd columns
//! with row 2 on even columns. Exhaustive search confirms the general rule
//! fails at n = 3 while the alternating sets are exactly the minimum shape.

use crate::graph::GridLabeling;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error("n must be at least 3, got {0}")]
    NTooSmall(usize),
    #[error("t must be at least {min} for this family, got {got}")]
    TTooSmall { min: usize, got: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstructionFamily {
    KnPt,
    KnCt,
    KnKn,
}

/// A constructed colored set in grid coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructedSet {
    pub family: ConstructionFamily,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    pub case_tag: String,
    /// (row, column) pairs, sorted, 1-based.
    pub coords: Vec<(usize, usize)>,
    pub expected_size: usize,
}

impl ConstructedSet {
    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Vertex indices under the product labeling.
    pub fn indices(&self, labeling: &GridLabeling) -> Vec<usize> {
        self.coords.iter().map(|&(r, c)| labeling.to_index(r, c)).collect()
    }
}

fn parity_tag(n: usize, t: usize) -> String {
    format!(
        "t {}, n {}",
        if t % 2 == 0 { "even" } else { "odd" },
        if n % 2 == 0 { "even" } else { "odd" }
    )
}

/// Rows colored in column `c` of the even-length pattern on `t` columns.
fn even_pattern_rows(n: usize, t: usize, c: usize) -> Vec<usize> {
    debug_assert!(t % 2 == 0 && c >= 1 && c <= t);
    if n == 3 {
        // alternating two-row pattern; see module docs
        return vec![if c % 2 == 1 { 3 } else { 2 }];
    }
    if c == t {
        (1..=n - 2).collect()
    } else if c == 1 {
        (3..=n).collect()
    } else if c == 2 || c % 2 == 1 {
        (2..=n - 1).collect()
    } else {
        let excluded = if n % 2 == 0 {
            [n / 2, n / 2 + 1]
        } else if c % 4 == 0 {
            [n - 2, n - 1]
        } else {
            [2, 3]
        };
        (1..=n).filter(|r| !excluded.contains(r)).collect()
    }
}

fn collect(mut coords: Vec<(usize, usize)>) -> Vec<(usize, usize)> {
    coords.sort_unstable();
    coords.dedup();
    coords
}

/// The reference 1-leaky set for K_n x P_t: size (n-2)t for even t,
/// (n-2)t + 2 for odd t.
pub fn construct_b1_kn_pt(n: usize, t: usize) -> Result<ConstructedSet, ConstructError> {
    if n < 3 {
        return Err(ConstructError::NTooSmall(n));
    }
    if t < 2 {
        return Err(ConstructError::TTooSmall { min: 2, got: t });
    }
    let mut coords = Vec::new();
    if t % 2 == 0 {
        for c in 1..=t {
            coords.extend(even_pattern_rows(n, t, c).into_iter().map(|r| (r, c)));
        }
    } else {
        // even pattern on the first t-1 columns plus a fully colored column t
        for c in 1..=t - 1 {
            coords.extend(even_pattern_rows(n, t - 1, c).into_iter().map(|r| (r, c)));
        }
        coords.extend((1..=n).map(|r| (r, t)));
    }
    let expected_size = (n - 2) * t + if t % 2 == 0 { 0 } else { 2 };
    let set = ConstructedSet {
        family: ConstructionFamily::KnPt,
        n,
        t: Some(t),
        case_tag: parity_tag(n, t),
        coords: collect(coords),
        expected_size,
    };
    debug_assert_eq!(set.coords.len(), set.expected_size);
    Ok(set)
}

/// The reference 1-leaky set for K_n x C_t: size (n-2)t + 4 for even t,
/// (n-2)t + 2 for odd t. Odd t reuses the path coordinates verbatim.
pub fn construct_b1_kn_ct(n: usize, t: usize) -> Result<ConstructedSet, ConstructError> {
    if n < 3 {
        return Err(ConstructError::NTooSmall(n));
    }
    if t < 3 {
        return Err(ConstructError::TTooSmall { min: 3, got: t });
    }
    if t % 2 == 1 {
        let path = construct_b1_kn_pt(n, t)?;
        return Ok(ConstructedSet {
            family: ConstructionFamily::KnCt,
            case_tag: parity_tag(n, t),
            ..path
        });
    }
    let mut coords = Vec::new();
    for c in 1..=t {
        let rows: Vec<usize> = if c == 1 || c == t {
            (1..=n).collect()
        } else if n == 3 || c == 2 || c % 2 == 1 {
            (2..=n - 1).collect()
        } else {
            let excluded = if n % 2 == 0 {
                [n / 2, n / 2 + 1]
            } else if c % 4 == 0 {
                [n - 2, n - 1]
            } else {
                [2, 3]
            };
            (1..=n).filter(|r| !excluded.contains(r)).collect()
        };
        coords.extend(rows.into_iter().map(|r| (r, c)));
    }
    let set = ConstructedSet {
        family: ConstructionFamily::KnCt,
        n,
        t: Some(t),
        case_tag: parity_tag(n, t),
        coords: collect(coords),
        expected_size: (n - 2) * t + 4,
    };
    debug_assert_eq!(set.coords.len(), set.expected_size);
    Ok(set)
}

/// The reference 1-leaky set for K_n x K_n, size n^2 - 4: everything except the
/// four corners-adjacent vertices for n >= 4, and the five-vertex layout
/// for n = 3.
pub fn construct_b1_kn_kn(n: usize) -> Result<ConstructedSet, ConstructError> {
    if n < 3 {
        return Err(ConstructError::NTooSmall(n));
    }
    let coords = if n == 3 {
        vec![(1, 1), (1, 2), (2, 2), (3, 2), (3, 3)]
    } else {
        let excluded = [(1, n - 1), (1, n), (n, 1), (n, 2)];
        let mut cs = Vec::with_capacity(n * n - 4);
        for r in 1..=n {
            for c in 1..=n {
                if !excluded.contains(&(r, c)) {
                    cs.push((r, c));
                }
            }
        }
        cs
    };
    let set = ConstructedSet {
        family: ConstructionFamily::KnKn,
        n,
        t: None,
        case_tag: if n == 3 { "n = 3".into() } else { "n >= 4".into() },
        coords: collect(coords),
        expected_size: n * n - 4,
    };
    debug_assert_eq!(set.coords.len(), set.expected_size);
    Ok(set)
}

/// A hand-transcribed candidate set shipped with the crate (currently the
/// 18-vertex Q5 set); its provenance flag marks how trustworthy it is.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CandidateSet {
    pub graph: String,
    pub d: usize,
    pub provenance: String,
    /// Hypercube vertices as bit-string labels, most significant bit first.
    pub vertices: Vec<String>,
}

impl CandidateSet {
    pub fn indices(&self) -> Result<Vec<usize>, std::num::ParseIntError> {
        self.vertices.iter().map(|s| usize::from_str_radix(s, 2)).collect()
    }
}

/// The bundled Q5 candidate read off the published drawing. The drawing's
/// lower half is internally inconsistent (four connector curves disagree with
/// the sub-cube layout), so this transcription follows the sub-cube layout;
/// hence the unverified provenance flag.
pub fn bundled_q5_candidate() -> CandidateSet {
    serde_json::from_str(include_str!("../data/q5_candidate.json"))
        .expect("bundled candidate parses")
}
