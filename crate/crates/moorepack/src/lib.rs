//! Moore graphs of girth 6, 8 and 12 built from finite geometries, together
//! with the machinery needed to study their packing colorings: ovoid
//! construction and verification, closed-form bounds evaluated in exact
//! rational arithmetic, and an exact backtracking solver for the packing
//! chromatic number.
//!
//! The crate is organised bottom-up:
//!
//! * [`ffield`] — dense arithmetic tables for GF(q), q a prime power
//! * [`graphcore`] — graphs, BFS distance matrices, girth, matchings,
//!   independent sets
//! * [`generators`] — incidence graphs of projective planes and generalized
//!   quadrangles, the (3,12)-cage, and classical small graphs
//! * [`geometry`] — ovoids, spreads and opposite-set searches inside the
//!   generated incidence graphs
//! * [`coloring`] — packing colorings, verification, and the closed-form
//!   colorings for each girth family
//! * [`solver`] — exact branch-and-bound packing chromatic solver
//! * [`bounds`] — closed-form bounds with exact rational values
//! * [`files`] — JSON interchange formats for graphs and colorings

pub mod bounds;
pub mod coloring;
pub mod ffield;
pub mod files;
pub mod fixtures;
pub mod generators;
pub mod geometry;
pub mod graphcore;
pub mod report;
pub mod solver;

pub use coloring::PackingColoring;
pub use files::{ColoringFile, GraphFile};
pub use geometry::Ovoid;
pub use graphcore::{DistanceMatrix, Graph, SearchBudget};
pub use report::{CheckItem, Report};
pub use solver::{ExactOutcome, SearchConfig, SolveOutcome, SolveRun, VertexOrder};
