//! Sequential-rank codes of i.i.d. uniform sequences.
//!
//! A real sequence `x_1, x_2, ...` is encoded by its sequential ranks
//! `t_n = 1 + #{k < n : x_k < x_n}`, a point of the triangular compact
//! `∏ {1..n}`. The one-sided shift of the reals becomes an explicit map on
//! codes, and the reals can be recovered from the code alone. Coarser
//! encodings come from the RSK correspondence, whose recording tableau
//! turns the shift into Schützenberger promotion, itself the involution
//! transfer on the Young graph.

pub mod error;
pub mod experiments;
mod fenwick;
pub mod graph;
pub mod prefix;
pub mod rng;
pub mod rsk;
pub mod shape;
pub mod skeleton;
pub mod triangular;

pub use error::{Error, Result};
pub use prefix::RealPrefix;
pub use shape::Shape;
pub use skeleton::{RankVector, TreePath};
pub use triangular::{SpecialProfile, TriCode};
