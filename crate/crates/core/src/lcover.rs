//! Two-pass covering solver. Pass one builds the bounding frame; pass two
//! evaluates both anchor configurations at once against the L-infinity
//! bisectors of opposite frame corners.

use crate::error::Result;
use crate::frame::{build_cover_frame, scan, CoverFrame, SegmentSource};
use crate::geom::{linf_dist, segment_polyline_intersections, Point, Polyline, Segment, Square};
use crate::scalar::Scalar;
use crate::solution::{Problem, SquarePairSolution};

/// L-infinity bisector of two opposite frame corners, clipped to the frame.
#[derive(Clone, Debug, PartialEq)]
pub struct PartitionPolyline<T> {
    pub vertices: Polyline<T>,
    pub near_anchor: Point<T>,
    pub far_anchor: Point<T>,
}

fn dedup<T: Scalar>(pts: &[Point<T>]) -> Vec<Point<T>> {
    let mut out: Vec<Point<T>> = Vec::with_capacity(pts.len());
    for &p in pts {
        if out.last() != Some(&p) {
            out.push(p);
        }
    }
    if out.len() == 1 {
        out.push(out[0]);
    }
    out
}

/// The bisector between `h` and `f` and the one between `e` and `g`.
/// The frame must be normalized (`L >= W`).
pub fn build_partition_polylines<T: Scalar>(frame: &CoverFrame<T>) -> (PartitionPolyline<T>, PartitionPolyline<T>) {
    let (l, w) = (frame.l(), frame.w());
    let h = frame.h();
    let at = |x: T, y: T| Point::new(h.x + x, h.y + y);
    let half = l * T::lit(0.5);
    let (v1, v2) = if w > half {
        let z1 = at(half, half);
        let z2 = at(half, w - half);
        (
            dedup(&[at(l - w, w), z1, z2, at(w, T::zero())]),
            dedup(&[at(w, w), z1, z2, at(l - w, T::zero())]),
        )
    } else {
        let v = dedup(&[at(half, T::zero()), at(half, w)]);
        (v.clone(), v)
    };
    (
        PartitionPolyline { vertices: Polyline::new(v1), near_anchor: frame.h(), far_anchor: frame.f() },
        PartitionPolyline { vertices: Polyline::new(v2), near_anchor: frame.e(), far_anchor: frame.g() },
    )
}

/// Smallest side that lets squares anchored at `near` and `far` jointly cover
/// `seg`, given that `lambda` separates the two nearest-anchor regions.
pub fn config_delta<T: Scalar>(seg: &Segment<T>, lambda: &PartitionPolyline<T>, tol: T) -> T {
    let (near, far) = (lambda.near_anchor, lambda.far_anchor);
    let dn = |p: Point<T>| linf_dist(p, near);
    let df = |p: Point<T>| linf_dist(p, far);
    let cuts = segment_polyline_intersections(seg, &lambda.vertices, tol);

    // Walk a -> cuts -> b; cut points are equidistant and take the smaller
    // distance, every other piece endpoint takes the distance to the anchor
    // of the region its piece lies in.
    let mut delta = T::zero();
    let mut prev = seg.a;
    let mut prev_on = false;
    let mut i = 0;
    loop {
        let (next, next_on) = match cuts.get(i) {
            Some(&c) => (c, true),
            None => (seg.b, false),
        };
        let mid = (prev + next) * T::lit(0.5);
        let near_side = dn(mid) <= df(mid);
        let side = |p: Point<T>, on: bool| {
            if on {
                dn(p).min(df(p))
            } else if near_side {
                dn(p)
            } else {
                df(p)
            }
        };
        delta = delta.max(side(prev, prev_on)).max(side(next, next_on));
        if i >= cuts.len() {
            break;
        }
        prev = next;
        prev_on = true;
        i += 1;
    }
    delta
}

fn config_squares<T: Scalar>(frame: &CoverFrame<T>, config: u8, sigma: T) -> (Square<T>, Square<T>) {
    let back = frame.to_frame().inverse();
    let (s1, s2) = if config == 1 {
        let f = frame.f();
        (Square::new(frame.h(), sigma), Square::new(Point::new(f.x - sigma, f.y - sigma), sigma))
    } else {
        let (e, g) = (frame.e(), frame.g());
        (Square::new(Point::new(e.x, e.y - sigma), sigma), Square::new(Point::new(g.x - sigma, g.y), sigma))
    };
    (back.apply_square(&s1), back.apply_square(&s2))
}

/// Minimum common side of two axis-parallel squares whose union covers every
/// segment. Reads the source exactly twice.
pub fn solve_cover<T: Scalar, S: SegmentSource<T> + ?Sized>(src: &mut S, tol: T) -> Result<SquarePairSolution<T>> {
    let frame = build_cover_frame(src)?;
    let (lam1, lam2) = build_partition_polylines(&frame);
    let to_frame = frame.to_frame();
    let (mut sigma1, mut sigma2) = (T::zero(), T::zero());
    scan(src, |_, s| {
        let s = to_frame.apply_segment(&s);
        sigma1 = sigma1.max(config_delta(&s, &lam1, tol));
        sigma2 = sigma2.max(config_delta(&s, &lam2, tol));
    })?;
    let (config, sigma, lam) = if sigma1 <= sigma2 { (1, sigma1, lam1) } else { (2, sigma2, lam2) };
    let (s1, s2) = config_squares(&frame, config, sigma);
    let back = to_frame.inverse();
    Ok(SquarePairSolution {
        problem: Problem::Cover,
        sigma,
        s1,
        s2,
        config,
        n: frame.n,
        bounds: frame.bounds,
        guides: vec![lam.vertices.map(|p| back.apply(p))],
    })
}
