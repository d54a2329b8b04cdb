#![forbid(unsafe_code)]

//! Construction and exhaustive analysis of the cubic claw-ring graphs
//! FS(j,k), the family that contains the flower snarks.
//!
//! The crate builds each family member with a fixed canonical labelling,
//! enumerates its perfect matchings, classifies them, analyses the
//! complementary 2-factors, computes chromatic indices, encodes the even-k
//! matchings as block words, finds Jaeger decompositions, and checks every
//! closed-form count against plain exhaustive enumeration.
//!
//! ```
//! use flower_graphs::{FSGraph, matchings};
//!
//! let g = FSGraph::build(2, 5)?;
//! assert_eq!(matchings::enumerate_perfect_matchings(&g).len(), 32);
//! # Ok::<(), flower_graphs::FamilyError>(())
//! ```

pub mod coloring;
pub mod family;
pub mod fixtures;
pub mod formulas;
pub mod graph;
pub mod guide;
pub mod jaeger;
pub mod matchings;
pub mod two_factor;
pub mod words;

pub use coloring::EdgeColoring;
pub use family::{FSGraph, FamilyError, SeamPermutation};
pub use graph::{Cycle, Edge, EdgeId, EdgeTag, GraphError, MultiGraph, Role, VertexId};
pub use jaeger::JaegerDecomposition;
pub use matchings::{GapProfile, Matching, MatchingError, MatchingType};
pub use two_factor::{MajorProfile, TransformVariant, TwoFactor, Type2Structure};
pub use words::BlockWord;
