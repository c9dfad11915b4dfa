//! Exact and approximate solvers for covering a planar point set with two
//! slabs of minimum maximum width, in four flavors: unrestricted, one slab
//! with a fixed orientation, both slabs with fixed orientations, and the two
//! slabs parallel.

pub mod anchor;
pub(crate) mod chain;
pub mod coreset;
pub mod degenerate;
pub mod error;
pub mod general;
pub mod geom;
pub mod one_fixed;
pub mod oracles;
pub mod parallel;
pub mod solution;
pub mod stream;
pub mod two_fixed;

pub use error::{Error, Result};
pub use geom::{Orientation, Point, PointSet, Slab, SlabPair};
pub use solution::{Mode, Problem, Solution};
