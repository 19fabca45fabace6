use crate::geom::{Point, Polyline, Rect, Square};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Problem {
    /// The union of the squares covers every segment.
    Cover,
    /// Every segment meets at least one square.
    Hit,
    /// Every segment lies inside a single square.
    RestrictedCover,
}

impl Problem {
    pub fn as_str(self) -> &'static str {
        match self {
            Problem::Cover => "cover",
            Problem::Hit => "hit",
            Problem::RestrictedCover => "cover-restricted",
        }
    }
}

/// Two congruent axis-parallel squares of side `sigma`, in input coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct SquarePairSolution<T> {
    pub problem: Problem,
    pub sigma: T,
    pub s1: Square<T>,
    pub s2: Square<T>,
    /// 1: squares anchored at the bottom-left and top-right frame corners;
    /// 2: top-left and bottom-right. Frame corners refer to the normalized
    /// (possibly transposed) frame.
    pub config: u8,
    pub n: usize,
    /// Bounding box of all endpoints.
    pub bounds: Rect<T>,
    /// Construction lines of the winning configuration, for drawing.
    pub guides: Vec<Polyline<T>>,
}

impl<T: Scalar> SquarePairSolution<T> {
    pub fn squares(&self) -> [Square<T>; 2] {
        [self.s1, self.s2]
    }
}

/// Which placement rule produced an event point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EventRule {
    /// Segment entirely above the reference line: the top endpoint decides.
    Above,
    /// Segment entirely below the reference line: the right endpoint decides.
    Below,
    /// Crossing segment decided by a horizontal through an endpoint.
    CrossingHorizontal,
    /// Crossing segment decided by a vertical through an endpoint.
    CrossingVertical,
    /// Crossing segment decided at the crossing point itself.
    CrossingPoint,
}

/// Position along a reference line at which a growing square starts (and
/// keeps) satisfying one segment.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EventPoint<T> {
    /// Designated corner of the square.
    pub location: Point<T>,
    pub sigma: T,
    pub rule: EventRule,
}

/// Running greedy assignment: a segment goes to the first square when its
/// first-square size is not larger than its second-square size.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GreedyPair<T> {
    pub sigma1: T,
    pub sigma2: T,
}

impl<T: Scalar> GreedyPair<T> {
    pub fn new(base1: T, base2: T) -> Self {
        Self { sigma1: base1, sigma2: base2 }
    }

    #[inline]
    pub fn push(&mut self, s1: T, s2: T) {
        if s1 <= s2 {
            self.sigma1 = self.sigma1.max(s1);
        } else {
            self.sigma2 = self.sigma2.max(s2);
        }
    }

    pub fn value(&self) -> T {
        self.sigma1.max(self.sigma2)
    }
}
