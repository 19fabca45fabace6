//! Two congruent axis-parallel squares for a set of line segments in the
//! plane: cover the segments with the union of the squares, hit every
//! segment, or contain each segment in one square. All solvers stream the
//! input twice and keep constant extra state.
//!
//! The geometry is generic over [`Scalar`] (`f32` or `f64`); the aliases at
//! the crate root fix it to `f64`.

pub mod error;
pub mod frame;
pub mod gen;
pub mod geom;
pub mod instance;
pub mod lcover;
pub mod lhit;
pub mod oracle;
pub mod rcover;
pub mod scalar;
pub mod solution;
pub mod twocenter;
pub mod verify;

pub use error::{Error, Result};
pub use frame::{SegmentSource, SliceSource, SourceStats};
pub use instance::InstanceReader;
pub use lcover::solve_cover;
pub use lhit::solve_hit;
pub use rcover::solve_rcover;
pub use scalar::Scalar;
pub use solution::{Problem, SquarePairSolution};
pub use twocenter::{approximate_two_center, DiskPairSolution};

pub type Point = geom::Point<f64>;
pub type Segment = geom::Segment<f64>;
pub type Square = geom::Square<f64>;
pub type Rect = geom::Rect<f64>;
pub type Polyline = geom::Polyline<f64>;
pub type Disk = geom::Disk<f64>;
pub type Solution = solution::SquarePairSolution<f64>;
pub type DiskPair = twocenter::DiskPairSolution<f64>;
