//! Zero forcing and l-leaky forcing on graphs.
//!
//! A blue vertex forces its unique uncolored neighbor; a leak is a vertex
//! barred from forcing, placed adversarially. A set is l-leaky forcing when
//! it still colors the whole graph under every placement of l leaks, and
//! Z_(l)(G) is the smallest size of such a set.
//!
//! The crate provides:
//! - [`graph`]: bitset graphs, standard families, direct and Cartesian
//!   products, a plain-text file format ([`io`]);
//! - [`engine`]: the leak-restricted forcing closure with a replayable
//!   chronicle;
//! - [`verify`]: exhaustive leak-placement verification with witnesses;
//! - [`search`]: exact minimum Z_(l) by size-increasing subset enumeration,
//!   plus a budgeted randomized local search;
//! - [`construct`]: explicit 1-leaky forcing sets for K_n x P_t, K_n x C_t,
//!   and K_n x K_n;
//! - [`report`]: experiment drivers emitting machine-readable reports.

pub mod bitset;
pub mod combin;
pub mod construct;
pub mod engine;
pub mod graph;
pub mod io;
pub mod report;
pub mod search;
pub mod verify;

pub use bitset::VertexSet;
pub use engine::{closure, closure_final, is_zero_forcing_set, ForceEvent, ForcingChronicle};
pub use graph::{Family, Graph, GraphFamilySpec, GridLabeling};
pub use search::{Budget, SearchResult};
pub use verify::VerificationReport;
