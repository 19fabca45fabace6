//! Restricted covering: every segment must lie inside one of the two squares.
//! Squares grow from opposite frame corners along unit-slope lines and a
//! greedy pass assigns each segment to the square that needs to grow less.

use crate::error::Result;
use crate::frame::{build_cover_frame, scan, CoverFrame, SegmentSource};
use crate::geom::{AxisMap, Point, Polyline, Segment, Square};
use crate::scalar::Scalar;
use crate::solution::{EventPoint, EventRule, GreedyPair, Problem, SquarePairSolution};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LineSide {
    /// Through the bottom-left anchor; squares keep that corner.
    D1,
    /// Through the top-right anchor; squares keep that corner.
    D2,
}

/// Unit-slope line through a frame corner. The square designated by a point
/// `t` of the line has `t` as one corner and the support point as the
/// opposite one.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RestrictedReferenceLine<T> {
    pub support: Point<T>,
    pub side: LineSide,
}

impl<T: Scalar> RestrictedReferenceLine<T> {
    pub fn new(support: Point<T>, side: LineSide) -> Self {
        Self { support, side }
    }

    pub fn point_at(&self, sigma: T) -> Point<T> {
        let d = Point::new(sigma, sigma);
        match self.side {
            LineSide::D1 => self.support + d,
            LineSide::D2 => self.support - d,
        }
    }

    pub fn size_at(&self, t: Point<T>) -> T {
        match self.side {
            LineSide::D1 => t.x - self.support.x,
            LineSide::D2 => self.support.x - t.x,
        }
    }

    pub fn square(&self, sigma: T) -> Square<T> {
        match self.side {
            LineSide::D1 => Square::new(self.support, sigma),
            LineSide::D2 => Square::from_top_right(self.support, sigma),
        }
    }
}

/// Smallest square anchored at the line's support point containing `seg`.
pub fn rcover_event_point<T: Scalar>(seg: &Segment<T>, line: &RestrictedReferenceLine<T>) -> EventPoint<T> {
    // Work with the anchor at the origin and the square growing up-right; the
    // D2 line is the point reflection of D1.
    let m = match line.side {
        LineSide::D1 => AxisMap::translation(-line.support),
        LineSide::D2 => AxisMap::point_reflection(Point::new(T::zero(), T::zero()))
            .compose(&AxisMap::translation(-line.support)),
    };
    let s = m.apply_segment(seg);
    let side = |p: Point<T>| p.y - p.x;
    let (sa, sb) = (side(s.a), side(s.b));
    let (top, right) = (s.tp().y, s.rp().x);
    let (sigma, rule) = if sa >= T::zero() && sb >= T::zero() && !(sa == T::zero() && sb == T::zero()) {
        (top, EventRule::Above)
    } else if sa <= T::zero() && sb <= T::zero() {
        (right, EventRule::Below)
    } else if top >= right {
        (top, EventRule::CrossingHorizontal)
    } else {
        (right, EventRule::CrossingVertical)
    };
    EventPoint { location: line.point_at(sigma), sigma, rule }
}

fn config_map<T: Scalar>(frame: &CoverFrame<T>, config: u8) -> AxisMap<T> {
    let to = frame.to_frame();
    if config == 1 {
        to
    } else {
        AxisMap::reflect_y(frame.rect.center().y).compose(&to)
    }
}

pub fn solve_rcover<T: Scalar, S: SegmentSource<T> + ?Sized>(src: &mut S, _tol: T) -> Result<SquarePairSolution<T>> {
    let frame = build_cover_frame(src)?;
    let d1 = RestrictedReferenceLine::new(frame.h(), LineSide::D1);
    let d2 = RestrictedReferenceLine::new(frame.f(), LineSide::D2);
    let maps = [config_map(&frame, 1), config_map(&frame, 2)];
    let mut greedy = [GreedyPair::new(T::zero(), T::zero()); 2];
    scan(src, |_, s| {
        for (g, m) in greedy.iter_mut().zip(&maps) {
            let s = m.apply_segment(&s);
            g.push(rcover_event_point(&s, &d1).sigma, rcover_event_point(&s, &d2).sigma);
        }
    })?;
    let config = if greedy[0].value() <= greedy[1].value() { 1 } else { 2 };
    let sigma = greedy[config as usize - 1].value();
    let back = maps[config as usize - 1].inverse();
    let reach = frame.l().max(frame.w());
    let guides = vec![
        Polyline::new(vec![back.apply(d1.support), back.apply(d1.point_at(reach))]),
        Polyline::new(vec![back.apply(d2.support), back.apply(d2.point_at(reach))]),
    ];
    Ok(SquarePairSolution {
        problem: Problem::RestrictedCover,
        sigma,
        s1: back.apply_square(&d1.square(sigma)),
        s2: back.apply_square(&d2.square(sigma)),
        config,
        n: frame.n,
        bounds: frame.bounds,
        guides,
    })
}
