//! Direct feasibility checks for reported squares and disks.

use crate::frame::{scan, SegmentSource};
use crate::error::Result;
use crate::geom::{
    disk_covers_segment, disk_hits_segment, segment_minus_disk, segment_minus_square, square_covers_segment,
    square_hits_segment, Disk, Segment, Square,
};
use crate::scalar::Scalar;
use crate::solution::Problem;

/// Two shapes that can be checked against a segment.
pub trait Shape<T> {
    fn covers(&self, s: &Segment<T>, tol: T) -> bool;
    fn hits(&self, s: &Segment<T>, tol: T) -> bool;
    fn covers_rest(&self, other: &Self, s: &Segment<T>, tol: T) -> bool;
}

impl<T: Scalar> Shape<T> for Square<T> {
    fn covers(&self, s: &Segment<T>, tol: T) -> bool {
        square_covers_segment(self, s, tol)
    }
    fn hits(&self, s: &Segment<T>, tol: T) -> bool {
        square_hits_segment(self, s, tol)
    }
    fn covers_rest(&self, other: &Self, s: &Segment<T>, tol: T) -> bool {
        segment_minus_square(s, self, tol).iter().all(|r| square_covers_segment(other, r, tol))
    }
}

impl<T: Scalar> Shape<T> for Disk<T> {
    fn covers(&self, s: &Segment<T>, tol: T) -> bool {
        disk_covers_segment(self, s, tol)
    }
    fn hits(&self, s: &Segment<T>, tol: T) -> bool {
        disk_hits_segment(self, s, tol)
    }
    fn covers_rest(&self, other: &Self, s: &Segment<T>, tol: T) -> bool {
        segment_minus_disk(s, self, tol).iter().all(|r| disk_covers_segment(other, r, tol))
    }
}

/// Whether the pair solves `problem` for one segment.
pub fn feasible_for<T: Scalar, S: Shape<T>>(problem: Problem, a: &S, b: &S, s: &Segment<T>, tol: T) -> bool {
    match problem {
        Problem::Cover => a.covers_rest(b, s, tol),
        Problem::Hit => a.hits(s, tol) || b.hits(s, tol),
        Problem::RestrictedCover => a.covers(s, tol) || b.covers(s, tol),
    }
}

/// Indices of the segments the pair fails, in one pass over `src`.
pub fn violations<T: Scalar, S: Shape<T>, Src: SegmentSource<T> + ?Sized>(
    src: &mut Src,
    problem: Problem,
    a: &S,
    b: &S,
    tol: T,
) -> Result<Vec<usize>> {
    let mut bad = Vec::new();
    scan(src, |i, s| {
        if !feasible_for(problem, a, b, &s, tol) {
            bad.push(i);
        }
    })?;
    Ok(bad)
}
