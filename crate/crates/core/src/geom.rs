//! Planar primitives: points, segments, squares, polylines, disks and the
//! predicates the solvers and oracles share. All sets are closed.

use std::ops::{Add, Mul, Neg, Sub};

use smallvec::SmallVec;

use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Point<T> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> Point<T> {
    #[inline]
    pub fn new(x: T, y: T) -> Self {
        Self { x, y }
    }

    #[inline]
    pub fn dot(self, o: Self) -> T {
        self.x * o.x + self.y * o.y
    }

    #[inline]
    pub fn cross(self, o: Self) -> T {
        self.x * o.y - self.y * o.x
    }

    #[inline]
    pub fn norm2(self) -> T {
        self.dot(self)
    }

    #[inline]
    pub fn swapped(self) -> Self {
        Self::new(self.y, self.x)
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Componentwise `self <= o` with slack `tol`.
    #[inline]
    pub fn le(self, o: Self, tol: T) -> bool {
        self.x <= o.x + tol && self.y <= o.y + tol
    }

    pub fn cast<U: Scalar>(self) -> Point<U> {
        Point::new(U::lit(self.x.as_f64()), U::lit(self.y.as_f64()))
    }
}

impl<T: Scalar> Add for Point<T> {
    type Output = Self;
    #[inline]
    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y)
    }
}

impl<T: Scalar> Sub for Point<T> {
    type Output = Self;
    #[inline]
    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y)
    }
}

impl<T: Scalar> Mul<T> for Point<T> {
    type Output = Self;
    #[inline]
    fn mul(self, k: T) -> Self {
        Self::new(self.x * k, self.y * k)
    }
}

impl<T: Scalar> Neg for Point<T> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y)
    }
}

#[inline]
pub fn linf_dist<T: Scalar>(p: Point<T>, q: Point<T>) -> T {
    (p.x - q.x).abs().max((p.y - q.y).abs())
}

/// A closed line segment. Zero length is allowed.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Segment<T> {
    pub a: Point<T>,
    pub b: Point<T>,
}

impl<T: Scalar> Segment<T> {
    #[inline]
    pub fn new(a: Point<T>, b: Point<T>) -> Self {
        Self { a, b }
    }

    pub fn from_coords(x1: T, y1: T, x2: T, y2: T) -> Self {
        Self::new(Point::new(x1, y1), Point::new(x2, y2))
    }

    #[inline]
    pub fn dir(&self) -> Point<T> {
        self.b - self.a
    }

    #[inline]
    pub fn at(&self, u: T) -> Point<T> {
        self.a + self.dir() * u
    }

    pub fn midpoint(&self) -> Point<T> {
        self.at(T::lit(0.5))
    }

    pub fn is_degenerate(&self) -> bool {
        self.a == self.b
    }

    pub fn is_finite(&self) -> bool {
        self.a.is_finite() && self.b.is_finite()
    }

    pub fn map(&self, f: impl Fn(Point<T>) -> Point<T>) -> Self {
        Self::new(f(self.a), f(self.b))
    }

    // Endpoint accessors. Ties on the primary coordinate make vertical
    // segments behave like negative-slope ones: LP is the upper endpoint,
    // RP the lower; for horizontal segments TP is the left endpoint, BP the
    // right one.

    /// Leftmost endpoint.
    pub fn lp(&self) -> Point<T> {
        let (a, b) = (self.a, self.b);
        if a.x < b.x || (a.x == b.x && a.y >= b.y) {
            a
        } else {
            b
        }
    }

    /// Rightmost endpoint.
    pub fn rp(&self) -> Point<T> {
        let (a, b) = (self.a, self.b);
        if a.x > b.x || (a.x == b.x && a.y <= b.y) {
            a
        } else {
            b
        }
    }

    /// Topmost endpoint.
    pub fn tp(&self) -> Point<T> {
        let (a, b) = (self.a, self.b);
        if a.y > b.y || (a.y == b.y && a.x <= b.x) {
            a
        } else {
            b
        }
    }

    /// Bottommost endpoint.
    pub fn bp(&self) -> Point<T> {
        let (a, b) = (self.a, self.b);
        if a.y < b.y || (a.y == b.y && a.x >= b.x) {
            a
        } else {
            b
        }
    }

    pub fn min_x(&self) -> T {
        self.a.x.min(self.b.x)
    }
    pub fn max_x(&self) -> T {
        self.a.x.max(self.b.x)
    }
    pub fn min_y(&self) -> T {
        self.a.y.min(self.b.y)
    }
    pub fn max_y(&self) -> T {
        self.a.y.max(self.b.y)
    }
}

/// Axis-parallel square `[min.x, min.x + side] x [min.y, min.y + side]`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Square<T> {
    pub min: Point<T>,
    pub side: T,
}

impl<T: Scalar> Square<T> {
    pub fn new(min: Point<T>, side: T) -> Self {
        Self { min, side }
    }

    pub fn from_top_right(t: Point<T>, side: T) -> Self {
        Self::new(Point::new(t.x - side, t.y - side), side)
    }

    pub fn max(&self) -> Point<T> {
        Point::new(self.min.x + self.side, self.min.y + self.side)
    }

    pub fn center(&self) -> Point<T> {
        let h = self.side * T::lit(0.5);
        Point::new(self.min.x + h, self.min.y + h)
    }

    pub fn contains(&self, p: Point<T>, tol: T) -> bool {
        let m = self.max();
        p.x >= self.min.x - tol && p.x <= m.x + tol && p.y >= self.min.y - tol && p.y <= m.y + tol
    }

    /// The four boundary constraints, each inflated by `tol`.
    pub fn halfplanes(&self, tol: T) -> [HalfPlane<T>; 4] {
        let m = self.max();
        let (o, z) = (T::one(), T::zero());
        [
            HalfPlane::new(Point::new(o, z), m.x + tol),
            HalfPlane::new(Point::new(-o, z), -(self.min.x - tol)),
            HalfPlane::new(Point::new(z, o), m.y + tol),
            HalfPlane::new(Point::new(z, -o), -(self.min.y - tol)),
        ]
    }
}

/// Axis-parallel rectangle with `min <= max` componentwise.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Rect<T> {
    pub min: Point<T>,
    pub max: Point<T>,
}

impl<T: Scalar> Rect<T> {
    pub fn new(min: Point<T>, max: Point<T>) -> Self {
        Self { min, max }
    }

    /// Rectangle spanned by two arbitrary corners.
    pub fn spanning(p: Point<T>, q: Point<T>) -> Self {
        Self::new(Point::new(p.x.min(q.x), p.y.min(q.y)), Point::new(p.x.max(q.x), p.y.max(q.y)))
    }

    pub fn width(&self) -> T {
        self.max.x - self.min.x
    }

    pub fn height(&self) -> T {
        self.max.y - self.min.y
    }

    pub fn center(&self) -> Point<T> {
        (self.min + self.max) * T::lit(0.5)
    }

    pub fn contains(&self, p: Point<T>, tol: T) -> bool {
        p.x >= self.min.x - tol
            && p.x <= self.max.x + tol
            && p.y >= self.min.y - tol
            && p.y <= self.max.y + tol
    }

    pub fn include(&mut self, p: Point<T>) {
        self.min.x = self.min.x.min(p.x);
        self.min.y = self.min.y.min(p.y);
        self.max.x = self.max.x.max(p.x);
        self.max.y = self.max.y.max(p.y);
    }

    pub fn empty() -> Self {
        let inf = T::infinity();
        Self::new(Point::new(inf, inf), Point::new(-inf, -inf))
    }

    pub fn is_empty(&self) -> bool {
        self.min.x > self.max.x || self.min.y > self.max.y
    }
}

/// Polygonal chain. The solvers only build x-monotone ones.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Polyline<T> {
    pub vertices: Vec<Point<T>>,
}

impl<T: Scalar> Polyline<T> {
    pub fn new(vertices: Vec<Point<T>>) -> Self {
        Self { vertices }
    }

    pub fn pieces(&self) -> impl Iterator<Item = Segment<T>> + '_ {
        self.vertices.windows(2).map(|w| Segment::new(w[0], w[1]))
    }

    /// Monotone in x, in either direction.
    pub fn is_x_monotone(&self, tol: T) -> bool {
        let w = &self.vertices;
        w.windows(2).all(|w| w[1].x >= w[0].x - tol) || w.windows(2).all(|w| w[1].x <= w[0].x + tol)
    }

    pub fn first(&self) -> Point<T> {
        self.vertices[0]
    }

    pub fn last(&self) -> Point<T> {
        *self.vertices.last().expect("polyline has vertices")
    }

    /// Euclidean distance from `p` to the chain.
    pub fn distance_to(&self, p: Point<T>) -> T {
        if self.vertices.len() == 1 {
            return (p - self.vertices[0]).norm2().sqrt();
        }
        self.pieces()
            .map(|s| point_segment_dist(p, &s))
            .fold(T::infinity(), T::min)
    }

    pub fn map(&self, f: impl Fn(Point<T>) -> Point<T>) -> Self {
        Self::new(self.vertices.iter().map(|&v| f(v)).collect())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Disk<T> {
    pub center: Point<T>,
    pub radius: T,
}

impl<T: Scalar> Disk<T> {
    pub fn new(center: Point<T>, radius: T) -> Self {
        Self { center, radius }
    }

    pub fn contains(&self, p: Point<T>, tol: T) -> bool {
        let r = self.radius + tol;
        (p - self.center).norm2() <= r * r
    }
}

/// `{p : normal . p <= offset}`
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HalfPlane<T> {
    pub normal: Point<T>,
    pub offset: T,
}

impl<T: Scalar> HalfPlane<T> {
    pub fn new(normal: Point<T>, offset: T) -> Self {
        Self { normal, offset }
    }

    pub fn contains(&self, p: Point<T>, tol: T) -> bool {
        self.normal.dot(p) <= self.offset + tol * self.normal.norm2().sqrt()
    }
}

// ---------------------------------------------------------------------------
// Distances

/// Euclidean distance from a point to a segment.
pub fn point_segment_dist<T: Scalar>(p: Point<T>, s: &Segment<T>) -> T {
    let d = s.dir();
    let dd = d.norm2();
    let u = if dd > T::zero() {
        ((p - s.a).dot(d) / dd).max(T::zero()).min(T::one())
    } else {
        T::zero()
    };
    (p - s.at(u)).norm2().sqrt()
}

/// L-infinity distance from a point to a segment.
pub fn linf_point_segment<T: Scalar>(p: Point<T>, s: &Segment<T>) -> T {
    // max(|ax + bx u|, |ay + by u|) is convex and piecewise linear in u; its
    // minimum over [0, 1] sits at an endpoint or a kink.
    let (ax, ay) = (s.a.x - p.x, s.a.y - p.y);
    let d = s.dir();
    let f = |u: T| (ax + d.x * u).abs().max((ay + d.y * u).abs());
    let mut best = f(T::zero()).min(f(T::one()));
    let mut try_root = |num: T, den: T| {
        if den != T::zero() {
            let u = num / den;
            if u > T::zero() && u < T::one() {
                best = best.min(f(u));
            }
        }
    };
    try_root(-ax, d.x);
    try_root(-ay, d.y);
    try_root(ay - ax, d.x - d.y);
    try_root(-(ax + ay), d.x + d.y);
    best
}

/// L-infinity distance between two segments.
pub fn linf_segment_segment<T: Scalar>(s: &Segment<T>, t: &Segment<T>, tol: T) -> T {
    if !segment_segment_intersections(s, t, tol).is_empty() {
        return T::zero();
    }
    linf_point_segment(s.a, t)
        .min(linf_point_segment(s.b, t))
        .min(linf_point_segment(t.a, s))
        .min(linf_point_segment(t.b, s))
}

// ---------------------------------------------------------------------------
// Intersections

pub type Hits<T> = SmallVec<[Point<T>; 6]>;

fn push_hit<T: Scalar>(out: &mut SmallVec<[(T, Point<T>); 6]>, u: T, p: Point<T>) {
    out.push((u, p));
}

fn seg_seg_params<T: Scalar>(s: &Segment<T>, t: &Segment<T>, tol: T, out: &mut SmallVec<[(T, Point<T>); 6]>) {
    let r = s.dir();
    let w = t.dir();
    let rr = r.norm2();
    let ww = w.norm2();
    if rr == T::zero() {
        if point_segment_dist(s.a, t) <= tol {
            push_hit(out, T::zero(), s.a);
        }
        return;
    }
    if ww == T::zero() {
        if point_segment_dist(t.a, s) <= tol {
            let u = ((t.a - s.a).dot(r) / rr).max(T::zero()).min(T::one());
            push_hit(out, u, t.a);
        }
        return;
    }
    let rl = rr.sqrt();
    let wl = ww.sqrt();
    let qp = t.a - s.a;
    let denom = r.cross(w);
    let eps = T::epsilon() * T::lit(64.0);
    if denom.abs() <= eps * rl * wl {
        // Parallel: only collinear overlaps count.
        if (qp.cross(r)).abs() / rl > tol {
            return;
        }
        let t0 = qp.dot(r) / rr;
        let t1 = (t.b - s.a).dot(r) / rr;
        let lo = t0.min(t1).max(T::zero());
        let hi = t0.max(t1).min(T::one());
        if lo <= hi + tol / rl {
            let hi = hi.max(lo);
            push_hit(out, lo, s.at(lo));
            push_hit(out, hi, s.at(hi));
        }
        return;
    }
    let us = qp.cross(w) / denom;
    let ut = qp.cross(r) / denom;
    let (ts, tt) = (tol / rl, tol / wl);
    if us >= -ts && us <= T::one() + ts && ut >= -tt && ut <= T::one() + tt {
        let us = us.max(T::zero()).min(T::one());
        push_hit(out, us, s.at(us));
    }
}

fn finish_hits<T: Scalar>(mut raw: SmallVec<[(T, Point<T>); 6]>, tol: T) -> Hits<T> {
    raw.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap_or(std::cmp::Ordering::Equal));
    let mut out: Hits<T> = SmallVec::new();
    for (_, p) in raw {
        if out.last().is_none_or(|&q| linf_dist(p, q) > tol) {
            out.push(p);
        }
    }
    out
}

/// Intersection points of two segments ordered along `s`; a collinear
/// overlap contributes its two ends.
pub fn segment_segment_intersections<T: Scalar>(s: &Segment<T>, t: &Segment<T>, tol: T) -> Hits<T> {
    let mut raw = SmallVec::new();
    seg_seg_params(s, t, tol, &mut raw);
    finish_hits(raw, tol)
}

/// Intersection points of `s` with every piece of `pl`, ordered along `s`
/// and deduplicated within `tol`. Collinear overlaps contribute their ends.
pub fn segment_polyline_intersections<T: Scalar>(s: &Segment<T>, pl: &Polyline<T>, tol: T) -> Hits<T> {
    let mut raw = SmallVec::new();
    if pl.vertices.len() == 1 {
        let v = pl.vertices[0];
        seg_seg_params(s, &Segment::new(v, v), tol, &mut raw);
    }
    for piece in pl.pieces() {
        seg_seg_params(s, &piece, tol, &mut raw);
    }
    finish_hits(raw, tol)
}

// ---------------------------------------------------------------------------
// Clipping

/// Parameter interval `[u0, u1]` of `s` inside all half-planes, each
/// inflated by `tol`.
pub fn clip_params<T: Scalar>(s: &Segment<T>, hps: &[HalfPlane<T>], tol: T) -> Option<(T, T)> {
    let d = s.dir();
    let (mut lo, mut hi) = (T::zero(), T::one());
    for hp in hps {
        let alpha = hp.normal.dot(d);
        let beta = hp.offset + tol * hp.normal.norm2().sqrt() - hp.normal.dot(s.a);
        if alpha == T::zero() {
            if beta < T::zero() {
                return None;
            }
        } else if alpha > T::zero() {
            hi = hi.min(beta / alpha);
        } else {
            lo = lo.max(beta / alpha);
        }
        if lo > hi {
            return None;
        }
    }
    Some((lo, hi))
}

pub fn clip_segment_to_halfplane<T: Scalar>(s: &Segment<T>, hp: &HalfPlane<T>) -> Option<Segment<T>> {
    clip_segment_to_convex_region(s, std::slice::from_ref(hp))
}

pub fn clip_segment_to_convex_region<T: Scalar>(s: &Segment<T>, hps: &[HalfPlane<T>]) -> Option<Segment<T>> {
    clip_params(s, hps, T::zero()).map(|(u0, u1)| Segment::new(s.at(u0), s.at(u1)))
}

pub fn square_hits_segment<T: Scalar>(sq: &Square<T>, s: &Segment<T>, tol: T) -> bool {
    clip_params(s, &sq.halfplanes(tol), T::zero()).is_some()
}

pub fn square_covers_segment<T: Scalar>(sq: &Square<T>, s: &Segment<T>, tol: T) -> bool {
    sq.contains(s.a, tol) && sq.contains(s.b, tol)
}

/// Closure of `s` minus the square: zero, one or two pieces.
pub fn segment_minus_square<T: Scalar>(s: &Segment<T>, sq: &Square<T>, tol: T) -> SmallVec<[Segment<T>; 2]> {
    let mut out = SmallVec::new();
    match clip_params(s, &sq.halfplanes(tol), T::zero()) {
        None => out.push(*s),
        Some((u0, u1)) => {
            if u0 > T::zero() {
                out.push(Segment::new(s.a, s.at(u0)));
            }
            if u1 < T::one() {
                out.push(Segment::new(s.at(u1), s.b));
            }
        }
    }
    out
}

/// Parameter interval of `s` inside the disk inflated by `tol`.
fn disk_params<T: Scalar>(s: &Segment<T>, disk: &Disk<T>, tol: T) -> Option<(T, T)> {
    let d = s.dir();
    let f = s.a - disk.center;
    let r = disk.radius + tol;
    let a = d.norm2();
    let b = T::lit(2.0) * f.dot(d);
    let c = f.norm2() - r * r;
    if a == T::zero() {
        return if c <= T::zero() { Some((T::zero(), T::one())) } else { None };
    }
    let disc = b * b - T::lit(4.0) * a * c;
    if disc < T::zero() {
        return None;
    }
    let sq = disc.sqrt();
    let two_a = T::lit(2.0) * a;
    let lo = ((-b - sq) / two_a).max(T::zero());
    let hi = ((-b + sq) / two_a).min(T::one());
    if lo > hi {
        None
    } else {
        Some((lo, hi))
    }
}

pub fn disk_hits_segment<T: Scalar>(disk: &Disk<T>, s: &Segment<T>, tol: T) -> bool {
    point_segment_dist(disk.center, s) <= disk.radius + tol
}

pub fn disk_covers_segment<T: Scalar>(disk: &Disk<T>, s: &Segment<T>, tol: T) -> bool {
    disk.contains(s.a, tol) && disk.contains(s.b, tol)
}

pub fn segment_minus_disk<T: Scalar>(s: &Segment<T>, disk: &Disk<T>, tol: T) -> SmallVec<[Segment<T>; 2]> {
    let mut out = SmallVec::new();
    match disk_params(s, disk, tol) {
        None => out.push(*s),
        Some((u0, u1)) => {
            if u0 > T::zero() {
                out.push(Segment::new(s.a, s.at(u0)));
            }
            if u1 < T::one() {
                out.push(Segment::new(s.at(u1), s.b));
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Axis-aligned isometries

/// `p -> (sx, sy) * swap?(p) + (tx, ty)` with `sx, sy` in `{-1, 1}`.
/// Covers translations, transposition and axis reflections.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AxisMap<T> {
    pub swap: bool,
    pub sx: T,
    pub sy: T,
    pub tx: T,
    pub ty: T,
}

impl<T: Scalar> AxisMap<T> {
    pub fn identity() -> Self {
        Self { swap: false, sx: T::one(), sy: T::one(), tx: T::zero(), ty: T::zero() }
    }

    pub fn translation(t: Point<T>) -> Self {
        Self { tx: t.x, ty: t.y, ..Self::identity() }
    }

    pub fn transpose() -> Self {
        Self { swap: true, ..Self::identity() }
    }

    /// Reflection in the horizontal line `y = y0`.
    pub fn reflect_y(y0: T) -> Self {
        Self { sy: -T::one(), ty: y0 + y0, ..Self::identity() }
    }

    /// Point reflection through `c`.
    pub fn point_reflection(c: Point<T>) -> Self {
        Self { swap: false, sx: -T::one(), sy: -T::one(), tx: c.x + c.x, ty: c.y + c.y }
    }

    /// Reflection in the slope-one line through `c`.
    pub fn diagonal_reflection(c: Point<T>) -> Self {
        Self { swap: true, sx: T::one(), sy: T::one(), tx: c.x - c.y, ty: c.y - c.x }
    }

    #[inline]
    pub fn apply(&self, p: Point<T>) -> Point<T> {
        let (x, y) = if self.swap { (p.y, p.x) } else { (p.x, p.y) };
        Point::new(self.sx * x + self.tx, self.sy * y + self.ty)
    }

    #[inline]
    pub fn apply_segment(&self, s: &Segment<T>) -> Segment<T> {
        Segment::new(self.apply(s.a), self.apply(s.b))
    }

    pub fn apply_square(&self, sq: &Square<T>) -> Square<T> {
        let p = self.apply(sq.min);
        let q = self.apply(sq.max());
        Square::new(Point::new(p.x.min(q.x), p.y.min(q.y)), sq.side)
    }

    pub fn apply_rect(&self, r: &Rect<T>) -> Rect<T> {
        Rect::spanning(self.apply(r.min), self.apply(r.max))
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &Self) -> Self {
        let (osx, osy) = if self.swap { (other.sy, other.sx) } else { (other.sx, other.sy) };
        let t2 = self.apply(Point::new(other.tx, other.ty));
        Self { swap: self.swap != other.swap, sx: self.sx * osx, sy: self.sy * osy, tx: t2.x, ty: t2.y }
    }

    pub fn inverse(&self) -> Self {
        let (sx, sy) = if self.swap { (self.sy, self.sx) } else { (self.sx, self.sy) };
        let lin = Self { swap: self.swap, sx, sy, tx: T::zero(), ty: T::zero() };
        let t = lin.apply(Point::new(self.tx, self.ty));
        Self { tx: -t.x, ty: -t.y, ..lin }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point<f64> {
        Point::new(x, y)
    }
    fn seg(x1: f64, y1: f64, x2: f64, y2: f64) -> Segment<f64> {
        Segment::from_coords(x1, y1, x2, y2)
    }

    #[test]
    fn linf_examples() {
        assert_eq!(linf_dist(p(0.0, 0.0), p(4.0, 4.0)), 4.0);
        assert_eq!(linf_dist(p(2.0, 8.0), p(10.0, 3.0)), 8.0);
    }

    #[test]
    fn endpoint_accessors_and_ties() {
        let s = seg(3.0, 1.0, 1.0, 5.0);
        assert_eq!(s.lp(), p(1.0, 5.0));
        assert_eq!(s.rp(), p(3.0, 1.0));
        assert_eq!(s.tp(), p(1.0, 5.0));
        assert_eq!(s.bp(), p(3.0, 1.0));
        let v = seg(2.0, 0.0, 2.0, 4.0);
        assert_eq!(v.lp(), p(2.0, 4.0));
        assert_eq!(v.rp(), p(2.0, 0.0));
        let h = seg(5.0, 1.0, 0.0, 1.0);
        assert_eq!(h.tp(), p(0.0, 1.0));
        assert_eq!(h.bp(), p(5.0, 1.0));
    }

    #[test]
    fn polyline_intersections() {
        let pl = Polyline::new(vec![p(5.0, 0.0), p(5.0, 4.0)]);
        let hits = segment_polyline_intersections(&seg(0.0, 2.0, 10.0, 2.0), &pl, 1e-9);
        assert_eq!(hits.as_slice(), &[p(5.0, 2.0)]);

        // Collinear with the first piece over (4,6)-(5,5), then touching the
        // vertical piece at (5,5).
        let lam = Polyline::new(vec![p(2.0, 8.0), p(5.0, 5.0), p(5.0, 3.0), p(8.0, 0.0)]);
        let hits = segment_polyline_intersections(&seg(4.0, 6.0, 6.0, 4.0), &lam, 1e-9);
        assert_eq!(hits.as_slice(), &[p(4.0, 6.0), p(5.0, 5.0)]);

        let none = segment_polyline_intersections(&seg(0.0, 9.0, 1.0, 9.5), &lam, 1e-9);
        assert!(none.is_empty());
    }

    #[test]
    fn square_predicates() {
        let sq3 = Square::new(p(0.0, 0.0), 3.0);
        assert!(square_hits_segment(&sq3, &seg(3.0, 2.0, 7.0, 2.0), 1e-9));
        assert!(square_hits_segment(&Square::new(p(0.0, 0.0), 4.0), &seg(-2.0, 5.0, 5.0, -2.0), 1e-9));
        assert!(!square_hits_segment(&sq3, &seg(4.0, 0.0, 4.0, 9.0), 1e-9));
        assert!(square_covers_segment(&Square::new(p(6.0, 0.0), 4.0), &seg(6.0, 0.0, 10.0, 4.0), 1e-9));
        assert!(!square_covers_segment(&sq3, &seg(0.0, 0.0, 4.0, 0.0), 1e-9));
    }

    #[test]
    fn halfplane_clip() {
        let hp = HalfPlane::new(p(1.0, 0.0), 5.0);
        let c = clip_segment_to_halfplane(&seg(0.0, 0.0, 10.0, 4.0), &hp).unwrap();
        assert_eq!(c, seg(0.0, 0.0, 5.0, 2.0));
        assert!(clip_segment_to_halfplane(&seg(6.0, 0.0, 7.0, 0.0), &hp).is_none());
    }

    #[test]
    fn minus_square_pieces() {
        let sq = Square::new(p(2.0, -1.0), 2.0);
        let parts = segment_minus_square(&seg(0.0, 0.0, 10.0, 0.0), &sq, 0.0);
        assert_eq!(parts.as_slice(), &[seg(0.0, 0.0, 2.0, 0.0), seg(4.0, 0.0, 10.0, 0.0)]);
    }

    #[test]
    fn linf_segment_distances() {
        assert_eq!(linf_point_segment(p(0.0, 0.0), &seg(2.0, -5.0, 2.0, 5.0)), 2.0);
        // Closest L-inf point on a slope -1 line x + y = 4 from the origin is (2,2).
        assert!((linf_point_segment(p(0.0, 0.0), &seg(0.0, 4.0, 4.0, 0.0)) - 2.0).abs() < 1e-12);
        assert_eq!(linf_segment_segment(&seg(0.0, 6.0, -3.0, 6.0), &seg(4.0, 0.0, 9.0, 0.0), 1e-9), 6.0);
        assert_eq!(linf_segment_segment(&seg(0.0, 0.0, 2.0, 2.0), &seg(0.0, 2.0, 2.0, 0.0), 1e-9), 0.0);
    }

    #[test]
    fn axis_map_algebra() {
        let maps = [
            AxisMap::transpose(),
            AxisMap::reflect_y(3.0),
            AxisMap::point_reflection(p(1.0, 2.0)),
            AxisMap::diagonal_reflection(p(-2.0, 5.0)),
            AxisMap::translation(p(7.0, -1.0)),
        ];
        let q = p(0.25, -4.5);
        for m in &maps {
            assert_eq!(m.inverse().apply(m.apply(q)), q);
            for n in &maps {
                let c = m.compose(n);
                assert_eq!(c.apply(q), m.apply(n.apply(q)));
            }
        }
        let d = AxisMap::diagonal_reflection(p(1.0, 1.0));
        assert_eq!(d.apply(p(1.0, 1.0)), p(1.0, 1.0));
        assert_eq!(d.apply(p(3.0, 1.0)), p(1.0, 3.0));
    }
}
