//! Hitting solver. Each square grows along a reference polyline: for every
//! side length the designated corner is the up-right-most corner among all
//! squares of that side that hit both anchor segments of the square. Every
//! segment gets an event size per polyline and a greedy pass splits the
//! segments between the two squares.
//!
//! Polylines are built in a canonical frame where the anchors play the roles
//! of the left and bottom extremes and the square grows up and to the right.
//! The second polyline and the second configuration are reflections of the
//! first.

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::frame::{build_hit_frame, scan, HitFrame, SegmentSource};
use crate::geom::{
    clip_params, linf_point_segment, linf_segment_segment, segment_polyline_intersections, segment_segment_intersections, AxisMap, HalfPlane,
    Point, Polyline, Segment, Square,
};
use crate::scalar::Scalar;
use crate::solution::{EventPoint, EventRule, GreedyPair, Problem, SquarePairSolution};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Grows from the bottom-left corner, anchored on the left and bottom extremes.
    D1,
    /// Grows from the top-right corner, anchored on the right and top extremes.
    D2,
}

/// Orientation class of the two anchor segments, seen from the growth corner.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Case {
    /// Both anchors have non-positive slope.
    I,
    /// Left anchor non-positive, bottom anchor positive.
    II,
    /// Left anchor positive, bottom anchor non-positive. Built as the
    /// diagonal mirror of `II`.
    III,
    /// Both positive; supporting lines meet right of the left frame side or
    /// are parallel.
    IvA,
    /// Both positive; supporting lines meet left of the left frame side.
    IvB,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CaseTag {
    pub case: Case,
    /// The left anchor's end is closer to the corner than the bottom one's:
    /// `y(a) - y(h) < x(d) - x(h)`.
    pub left_closer: bool,
}

/// One linear stretch of the square family: for `sigma` in
/// `[sigma0, sigma1]` the corner is `corner0 + (sigma - sigma0) * rate`.
#[derive(Clone, Copy, Debug, PartialEq)]
struct Piece<T> {
    sigma0: T,
    sigma1: T,
    corner0: Point<T>,
    rate: Point<T>,
}

impl<T: Scalar> Piece<T> {
    fn corner(&self, sigma: T) -> Point<T> {
        self.corner0 + self.rate * (sigma - self.sigma0)
    }
}

/// Constraint `m . p <= c + k * sigma`.
#[derive(Clone, Copy, Debug)]
struct Lin<T> {
    m: Point<T>,
    c: T,
    k: T,
}

/// Half-planes describing the top-right corners of side-`sigma` squares
/// that meet `s`, i.e. `s + [0, sigma]^2`.
fn corner_region<T: Scalar>(s: &Segment<T>, out: &mut SmallVec<[Lin<T>; 12]>) {
    let (o, z) = (T::one(), T::zero());
    let mut normals: SmallVec<[Point<T>; 6]> =
        SmallVec::from_slice(&[Point::new(o, z), Point::new(-o, z), Point::new(z, o), Point::new(z, -o)]);
    let d = s.dir();
    if d.norm2() > z && d.x != z && d.y != z {
        let n = Point::new(-d.y, d.x);
        normals.push(n);
        normals.push(-n);
    }
    for m in normals {
        let c = m.dot(s.a).max(m.dot(s.b));
        let k = m.x.max(z) + m.y.max(z);
        out.push(Lin { m, c, k });
    }
}

/// Lexicographically best corner of the feasible region as a function of
/// `sigma`: maximize `x + y`, then `secondary . p`. Returns pieces covering
/// `[start, inf)`.
fn corner_walk<T: Scalar>(lins: &[Lin<T>], start: T, secondary: Point<T>, eps: T) -> Vec<Piece<T>> {
    let primary = Point::new(T::one(), T::one());
    let tiny = T::lit(1e-12);
    // Candidate bases that are dual feasible for the lexicographic objective;
    // each one is primal feasible on an interval of sigma.
    let mut bases: Vec<(T, T, Point<T>, Point<T>)> = Vec::new();
    for j in 0..lins.len() {
        for l in j + 1..lins.len() {
            let (mj, ml) = (lins[j].m, lins[l].m);
            let det = mj.cross(ml);
            if det.abs() <= tiny * mj.norm2().sqrt() * ml.norm2().sqrt() {
                continue;
            }
            // Multipliers: obj = lj * mj + ll * ml.
            let mult = |o: Point<T>| (o.cross(ml) / det, mj.cross(o) / det);
            let (pj, pl) = mult(primary);
            let (sj, sl) = mult(secondary);
            let ok = |p: T, s: T| p > tiny || (p >= -tiny && s >= -tiny);
            if !(ok(pj, sj) && ok(pl, sl)) {
                continue;
            }
            let solve = |a: T, b: T| Point::new((a * ml.y - b * mj.y) / det, (mj.x * b - ml.x * a) / det);
            let p0 = solve(lins[j].c, lins[l].c);
            // Rates are small rationals; drop the rounding so a corner that
            // should slide along an edge does not drift off it.
            let p1 = solve(lins[j].k, lins[l].k);
            let p1 = Point::new(snap_rate(p1.x), snap_rate(p1.y));
            let (mut lo, mut hi) = (start, T::infinity());
            for (i, li) in lins.iter().enumerate() {
                if i == j || i == l {
                    continue;
                }
                let a = li.m.dot(p1) - li.k;
                let r = li.c - li.m.dot(p0) + eps * li.m.norm2().sqrt();
                if a.abs() <= tiny {
                    if r < T::zero() {
                        lo = T::infinity();
                        break;
                    }
                } else if a > T::zero() {
                    hi = hi.min(r / a);
                } else {
                    lo = lo.max(r / a);
                }
            }
            if lo <= hi {
                bases.push((lo, hi, p0, p1));
            }
        }
    }
    let mut pieces: Vec<Piece<T>> = Vec::new();
    let mut sigma = start;
    while let Some(&(_, hi, p0, p1)) = bases
        .iter()
        .filter(|b| b.0 <= sigma + eps && b.1 > sigma + eps)
        .max_by(|x, y| x.1.partial_cmp(&y.1).unwrap_or(std::cmp::Ordering::Equal))
    {
        pieces.push(Piece { sigma0: sigma, sigma1: hi, corner0: p0 + p1 * sigma, rate: p1 });
        if hi == T::infinity() {
            return pieces;
        }
        sigma = hi;
    }
    // Rounding left a gap; continue with the basis that starts soonest.
    if let Some(&(lo, _, _, _)) = bases
        .iter()
        .filter(|b| b.1 == T::infinity())
        .min_by(|x, y| x.0.partial_cmp(&y.0).unwrap_or(std::cmp::Ordering::Equal))
    {
        if lo > sigma + eps {
            let rest = corner_walk(lins, lo, secondary, eps);
            if let (Some(last), Some(first)) = (pieces.last_mut(), rest.first()) {
                last.sigma1 = first.sigma0;
            }
            pieces.extend(rest);
        }
    }
    pieces
}

fn snap_rate<T: Scalar>(v: T) -> T {
    let r = v.round();
    if (v - r).abs() <= T::lit(1e-12).max(T::epsilon() * T::lit(64.0)) {
        r
    } else {
        v
    }
}

/// Average of two piecewise-linear families over the union of their breakpoints.
fn average<T: Scalar>(f: &[Piece<T>], g: &[Piece<T>]) -> Vec<Piece<T>> {
    let mut cuts: Vec<T> = f.iter().chain(g).map(|p| p.sigma0).collect();
    cuts.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
    cuts.dedup();
    let find = |fam: &[Piece<T>], s: T| {
        *fam.iter().rev().find(|p| p.sigma0 <= s).unwrap_or(&fam[0])
    };
    let half = T::lit(0.5);
    let mut out: Vec<Piece<T>> = Vec::with_capacity(cuts.len());
    for (i, &s) in cuts.iter().enumerate() {
        let (pf, pg) = (find(f, s), find(g, s));
        let next = cuts.get(i + 1).copied().unwrap_or(T::infinity());
        out.push(Piece {
            sigma0: s,
            sigma1: next,
            corner0: (pf.corner(s) + pg.corner(s)) * half,
            rate: (pf.rate + pg.rate) * half,
        });
    }
    out
}

/// Merges consecutive pieces with the same rate.
fn simplify<T: Scalar>(pieces: Vec<Piece<T>>, eps: T) -> Vec<Piece<T>> {
    let mut out: Vec<Piece<T>> = Vec::with_capacity(pieces.len());
    for p in pieces {
        if let Some(last) = out.last_mut() {
            let same = (last.rate.x - p.rate.x).abs() <= T::lit(1e-9) && (last.rate.y - p.rate.y).abs() <= T::lit(1e-9);
            let joined = (last.corner(p.sigma0).x - p.corner0.x).abs() <= eps
                && (last.corner(p.sigma0).y - p.corner0.y).abs() <= eps;
            if same && joined {
                last.sigma1 = p.sigma1;
                continue;
            }
            if p.sigma1 - p.sigma0 <= eps && p.sigma1 != T::infinity() {
                continue;
            }
            last.sigma1 = p.sigma0;
        }
        out.push(p);
    }
    out
}

/// Sizes `sigma` in `[lo, hi]` for which the square with top-right corner
/// `corner(sigma) = c0 + (sigma - s0) * rate` and side `sigma`, inflated by
/// `tol`, meets `seg`. Exact Fourier-Motzkin elimination of the segment
/// parameter.
fn piece_hit_interval<T: Scalar>(piece: &Piece<T>, seg: &Segment<T>, tol: T) -> Option<(T, T)> {
    let base = piece.corner0 - piece.rate * piece.sigma0;
    let r = piece.rate;
    let one = T::one();
    // Square bounds as affine functions of sigma: value = v0 + v1 * sigma.
    let (l0, l1) = (base.x - tol, r.x - one);
    let (r0, r1) = (base.x + tol, r.x);
    let (b0, b1) = (base.y - tol, r.y - one);
    let (t0, t1) = (base.y + tol, r.y);
    let (a, d) = (seg.a, seg.dir());
    // alpha * u <= beta + gamma * sigma
    let cons = [
        (-d.x, a.x - l0, -l1),
        (d.x, r0 - a.x, r1),
        (-d.y, a.y - b0, -b1),
        (d.y, t0 - a.y, t1),
        (-one, T::zero(), T::zero()),
        (one, one, T::zero()),
    ];
    let (mut lo, mut hi) = (piece.sigma0, piece.sigma1);
    let mut bound = |coef: T, rhs: T, scale: T| -> bool {
        // coef * sigma >= rhs
        if coef.abs() <= T::epsilon() * T::lit(64.0) * scale {
            rhs <= T::epsilon() * T::lit(64.0) * scale
        } else if coef > T::zero() {
            lo = lo.max(rhs / coef);
            true
        } else {
            hi = hi.min(rhs / coef);
            true
        }
    };
    for &(al, be, ga) in &cons {
        if al == T::zero() && !bound(ga, -be, be.abs() + ga.abs() + one) {
            return None;
        }
    }
    for &(ai, bi, gi) in cons.iter().filter(|c| c.0 < T::zero()) {
        for &(aj, bj, gj) in cons.iter().filter(|c| c.0 > T::zero()) {
            let coef = gi * aj - gj * ai;
            let rhs = bj * ai - bi * aj;
            let scale = (gi * aj).abs() + (gj * ai).abs() + (bj * ai).abs() + (bi * aj).abs() + one;
            if !bound(coef, rhs, scale) {
                return None;
            }
        }
    }
    (lo <= hi).then_some((lo, hi))
}

/// Region below-left of the starting corner `p`: the downward vertical and
/// leftward horizontal half-lines from `p` (canonical orientation).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HalfLinePair<T> {
    pub corner: Point<T>,
}

impl<T: Scalar> HalfLinePair<T> {
    /// Whether `seg` meets either half-line or lies entirely below-left of both.
    pub fn meets(&self, seg: &Segment<T>, tol: T) -> bool {
        let p = self.corner;
        if seg.a.le(p, tol) && seg.b.le(p, tol) {
            return true;
        }
        let far = T::lit(1e3) * (T::one() + p.x.abs() + p.y.abs() + seg.a.x.abs() + seg.a.y.abs() + seg.b.x.abs() + seg.b.y.abs());
        let lv = Segment::new(Point::new(p.x, p.y - far), p);
        let lh = Segment::new(Point::new(p.x - far, p.y), p);
        !segment_segment_intersections(seg, &lv, tol).is_empty() || !segment_segment_intersections(seg, &lh, tol).is_empty()
    }
}

/// The path of the designated corner of one square as its side grows.
#[derive(Clone, Debug, PartialEq)]
pub struct ReferencePolyline<T> {
    /// Corner positions at the breakpoints, in frame coordinates.
    pub vertices: Polyline<T>,
    /// Square side at each vertex.
    pub sizes: Vec<T>,
    pub side: Side,
    pub case: CaseTag,
    /// Frame coordinates to canonical coordinates.
    canon: AxisMap<T>,
    /// Anchor segments in canonical coordinates (left role, bottom role).
    anchors: (Segment<T>, Segment<T>),
    pieces: Vec<Piece<T>>,
    tol: T,
}

fn classify<T: Scalar>(la: &Segment<T>, ld: &Segment<T>, h: Point<T>) -> CaseTag {
    let descending = |s: &Segment<T>| s.lp().y >= s.rp().y;
    let (a, d) = (la.rp(), ld.tp());
    let left_closer = a.y - h.y < d.x - h.x;
    let case = match (descending(la), descending(ld)) {
        (true, true) => Case::I,
        (true, false) => Case::II,
        (false, true) => Case::III,
        (false, false) => {
            let (u, v) = (la.dir(), ld.dir());
            let den = u.cross(v);
            if den == T::zero() {
                Case::IvA
            } else {
                let t = (ld.a - la.a).cross(v) / den;
                if la.at(t).x > h.x {
                    Case::IvA
                } else {
                    Case::IvB
                }
            }
        }
    };
    CaseTag { case, left_closer }
}

impl<T: Scalar> ReferencePolyline<T> {
    /// Builds the polyline for one side of `frame` (frame coordinates).
    pub fn build(frame: &HitFrame<T>, side: Side, tol: T) -> Self {
        let (flip, la, ld) = match side {
            Side::D1 => (AxisMap::identity(), frame.la, frame.ld),
            Side::D2 => {
                let c = Point::new((frame.a.x + frame.c.x) * T::lit(0.5), (frame.b.y + frame.d.y) * T::lit(0.5));
                let m = AxisMap::point_reflection(c);
                (m, m.apply_segment(&frame.lc), m.apply_segment(&frame.lb))
            }
        };
        // After the flip the growth corner is at h in both cases.
        let h = frame.h();
        let case = classify(&la, &ld, h);
        let (canon, la, ld) = if case.case == Case::III {
            let m = AxisMap::diagonal_reflection(h);
            (m.compose(&flip), m.apply_segment(&ld), m.apply_segment(&la))
        } else {
            (flip, la, ld)
        };
        let reach = frame.l().max(frame.w());
        Self::from_anchors(canon, la, ld, h, reach, side, case, tol)
    }

    #[allow(clippy::too_many_arguments)]
    fn from_anchors(
        canon: AxisMap<T>,
        la: Segment<T>,
        ld: Segment<T>,
        h: Point<T>,
        reach: T,
        side: Side,
        case: CaseTag,
        tol: T,
    ) -> Self {
        let scale = [la.a, la.b, ld.a, ld.b]
            .iter()
            .fold(T::one(), |m, p| m.max(p.x.abs()).max(p.y.abs()));
        let eps = tol.max(T::epsilon() * T::lit(64.0) * scale);
        let mut lins = SmallVec::new();
        corner_region(&la, &mut lins);
        corner_region(&ld, &mut lins);
        let start = linf_segment_segment(&la, &ld, tol);
        let fx = corner_walk(&lins, start, Point::new(T::one(), T::zero()), eps);
        let fy = corner_walk(&lins, start, Point::new(T::zero(), T::one()), eps);
        let pieces = simplify(average(&fx, &fy), eps);

        // Vertices: every breakpoint, then the tail up to x = x(h) + reach.
        let mut pts: Vec<Point<T>> = pieces.iter().map(|p| p.corner0).collect();
        let mut sizes: Vec<T> = pieces.iter().map(|p| p.sigma0).collect();
        let tail = *pieces.last().expect("family is never empty");
        let target = h.x + reach;
        let end = if tail.rate.x > T::zero() && tail.corner0.x < target {
            tail.sigma0 + (target - tail.corner0.x) / tail.rate.x
        } else {
            tail.sigma0 + reach.max(T::one())
        };
        if pts.len() == 1 || end > tail.sigma0 {
            pts.push(tail.corner(end));
            sizes.push(end);
        }
        let back = canon.inverse();
        Self {
            vertices: Polyline::new(pts.iter().map(|&p| back.apply(p)).collect()),
            sizes,
            side,
            case,
            canon,
            anchors: (la, ld),
            pieces,
            tol,
        }
    }

    /// Side of the smallest square hitting both anchors.
    pub fn base_sigma(&self) -> T {
        self.pieces[0].sigma0
    }

    /// Designated corner for side `sigma >= base_sigma()`, frame coordinates.
    pub fn point_at(&self, sigma: T) -> Point<T> {
        self.canon.inverse().apply(self.canonical_corner(sigma))
    }

    fn canonical_corner(&self, sigma: T) -> Point<T> {
        let p = self.pieces.iter().rev().find(|p| p.sigma0 <= sigma).unwrap_or(&self.pieces[0]);
        p.corner(sigma)
    }

    /// The family's square of side `sigma`, frame coordinates.
    pub fn square_at(&self, sigma: T) -> Square<T> {
        let sq = Square::from_top_right(self.canonical_corner(sigma), sigma);
        self.canon.inverse().apply_square(&sq)
    }

    /// Half-lines from the starting corner, in canonical coordinates.
    pub fn half_lines(&self) -> HalfLinePair<T> {
        HalfLinePair { corner: self.pieces[0].corner0 }
    }

    /// Side of the smallest square with designated corner `t` (frame
    /// coordinates) that hits both anchors. `t` must lie on the polyline.
    pub fn size_at(&self, t: Point<T>) -> Result<T> {
        let scale = T::one().max(t.x.abs()).max(t.y.abs());
        if self.vertices.distance_to(t) > self.tol.max(T::lit(1e-9)) * scale * T::lit(10.0) {
            return Err(Error::OffPolyline { x: t.x.as_f64(), y: t.y.as_f64() });
        }
        Ok(corner_size(self.canon.apply(t), &self.anchors.0, &self.anchors.1, self.tol))
    }

    /// Smallest side from which every larger square of the family hits
    /// `seg` (frame coordinates); infinite if there is none.
    pub fn event_sigma(&self, seg: &Segment<T>) -> T {
        let s = self.canon.apply_segment(seg);
        let eps = self.tol.max(T::lit(1e-12));
        let mut start = T::infinity();
        let slack = eps * T::one().max(s.a.x.abs()).max(s.a.y.abs()).max(s.b.x.abs()).max(s.b.y.abs());
        for (i, piece) in self.pieces.iter().enumerate().rev() {
            // Contact along the square's boundary is decided with slack; the
            // exact interval, when it exists, gives the sharper start.
            let Some((lo, hi)) = piece_hit_interval(piece, &s, slack) else { break };
            let lo = piece_hit_interval(piece, &s, T::zero()).map_or(lo, |(l, _)| l);
            if i + 1 == self.pieces.len() {
                if hi < T::infinity() {
                    return T::infinity();
                }
            } else if hi < piece.sigma1 - eps {
                break;
            }
            start = lo;
            if lo > piece.sigma0 + eps {
                break;
            }
        }
        start.max(self.base_sigma())
    }
}

/// Side of the smallest square with top-right corner `t` hitting both
/// segments (infinite if a segment has no point below-left of `t`).
pub fn corner_size<T: Scalar>(t: Point<T>, la: &Segment<T>, ld: &Segment<T>, tol: T) -> T {
    let quadrant = [HalfPlane::new(Point::new(T::one(), T::zero()), t.x), HalfPlane::new(Point::new(T::zero(), T::one()), t.y)];
    let dist = |s: &Segment<T>| match clip_params(s, &quadrant, tol) {
        Some((u0, u1)) => linf_point_segment(t, &Segment::new(s.at(u0), s.at(u1))),
        None => T::infinity(),
    };
    dist(la).max(dist(ld))
}

pub fn build_reference_polyline<T: Scalar>(frame: &HitFrame<T>, side: Side, tol: T) -> ReferencePolyline<T> {
    ReferencePolyline::build(frame, side, tol)
}

/// Event of `seg` on `rp`, or `None` when every square of the family hits it.
pub fn hit_event_point<T: Scalar>(seg: &Segment<T>, rp: &ReferencePolyline<T>) -> Option<EventPoint<T>> {
    let sigma = rp.event_sigma(seg);
    if sigma <= rp.base_sigma() + rp.tol {
        return None;
    }
    let location = rp.point_at(sigma);
    let tol = rp.tol.max(T::lit(1e-9));
    let rule = if sigma == T::infinity() {
        EventRule::CrossingPoint
    } else if !segment_polyline_intersections(seg, &rp.vertices, tol).is_empty() {
        let on_edge = |a: T, b: T| (a - b).abs() <= tol * (T::one() + a.abs());
        if on_edge(seg.a.x, location.x) || on_edge(seg.b.x, location.x) {
            EventRule::CrossingVertical
        } else if on_edge(seg.a.y, location.y) || on_edge(seg.b.y, location.y) {
            EventRule::CrossingHorizontal
        } else {
            EventRule::CrossingPoint
        }
    } else {
        let s = rp.canon.apply_segment(seg);
        let c = rp.canonical_corner(sigma);
        if s.a.y - s.a.x > c.y - c.x {
            EventRule::Above
        } else {
            EventRule::Below
        }
    };
    Some(EventPoint { location, sigma, rule })
}

/// Both reference polylines of one configuration, plus the map from frame
/// coordinates into that configuration.
#[derive(Clone, Debug)]
pub struct HitConfiguration<T> {
    pub map: AxisMap<T>,
    pub d1: ReferencePolyline<T>,
    pub d2: ReferencePolyline<T>,
}

impl<T: Scalar> HitConfiguration<T> {
    pub fn new(frame: &HitFrame<T>, config: u8, tol: T) -> Self {
        let (map, f) = if config == 1 {
            (AxisMap::identity(), *frame)
        } else {
            (frame.vertical_mirror(), frame.reflect_vertical())
        };
        Self { map, d1: ReferencePolyline::build(&f, Side::D1, tol), d2: ReferencePolyline::build(&f, Side::D2, tol) }
    }

    /// Event sizes of a frame-coordinate segment on both polylines.
    pub fn events(&self, seg: &Segment<T>) -> (T, T) {
        let s = self.map.apply_segment(seg);
        (self.d1.event_sigma(&s), self.d2.event_sigma(&s))
    }

    /// Both squares at side `sigma`, frame coordinates.
    pub fn squares(&self, sigma: T) -> (Square<T>, Square<T>) {
        let back = self.map.inverse();
        (back.apply_square(&self.d1.square_at(sigma)), back.apply_square(&self.d2.square_at(sigma)))
    }
}

/// Minimum common side found by the two-configuration greedy for squares
/// hitting every segment. Reads the source exactly twice.
pub fn solve_hit<T: Scalar, S: SegmentSource<T> + ?Sized>(src: &mut S, tol: T) -> Result<SquarePairSolution<T>> {
    let frame = build_hit_frame(src)?;
    let to = frame.to_frame();
    let configs = [HitConfiguration::new(&frame, 1, tol), HitConfiguration::new(&frame, 2, tol)];
    let mut greedy = [
        GreedyPair::new(configs[0].d1.base_sigma(), configs[0].d2.base_sigma()),
        GreedyPair::new(configs[1].d1.base_sigma(), configs[1].d2.base_sigma()),
    ];
    scan(src, |_, s| {
        let s = to.apply_segment(&s);
        for (g, c) in greedy.iter_mut().zip(&configs) {
            let (s1, s2) = c.events(&s);
            g.push(s1, s2);
        }
    })?;
    let config = if greedy[0].value() <= greedy[1].value() { 1 } else { 2 };
    let chosen = &configs[config as usize - 1];
    let sigma = greedy[config as usize - 1].value();
    let back = to.inverse();
    let (s1, s2, guides) = if sigma.is_finite() {
        let (s1, s2) = chosen.squares(sigma);
        let inv = chosen.map.inverse();
        let guides = [&chosen.d1, &chosen.d2]
            .iter()
            .map(|d| d.vertices.map(|p| back.apply(inv.apply(p))))
            .collect();
        (back.apply_square(&s1), back.apply_square(&s2), guides)
    } else {
        // No configuration keeps every segment: fall back to one square over
        // the bounding box, which hits everything.
        let b = frame.bounds;
        let sq = Square::new(b.min, b.width().max(b.height()));
        (sq, sq, Vec::new())
    };
    let sigma = if sigma.is_finite() { sigma } else { s1.side };
    Ok(SquarePairSolution { problem: Problem::Hit, sigma, s1, s2, config, n: frame.n, bounds: frame.bounds, guides })
}
