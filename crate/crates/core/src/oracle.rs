//! Slow reference solvers for small inputs. They share no code with the
//! streaming solvers beyond the primitives in `geom`.

use crate::error::{Error, Result};
use crate::geom::{segment_minus_square, square_covers_segment, HalfPlane, Point, Rect, Segment, Square};
use crate::scalar::Scalar;

/// Largest input accepted by the partition oracles.
pub const PARTITION_LIMIT: usize = 12;
/// Largest input accepted by the two-disk oracle.
pub const DISK_LIMIT: usize = 8;

const ITERATIONS: usize = 200;

/// Convex polygon, counterclockwise, no repeated vertices.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvexRegion<T> {
    pub vertices: Vec<Point<T>>,
}

impl<T: Scalar> ConvexRegion<T> {
    /// Convex hull of `pts` (monotone chain; collinear points dropped).
    pub fn hull(pts: &[Point<T>]) -> Self {
        let mut p = pts.to_vec();
        p.sort_by(|a, b| (a.x, a.y).partial_cmp(&(b.x, b.y)).unwrap_or(std::cmp::Ordering::Equal));
        p.dedup();
        if p.len() < 3 {
            return Self { vertices: p };
        }
        let turn = |o: Point<T>, a: Point<T>, b: Point<T>| (a - o).cross(b - o);
        let mut h: Vec<Point<T>> = Vec::with_capacity(2 * p.len());
        for pass in 0..2 {
            let start = h.len();
            let it: Box<dyn Iterator<Item = &Point<T>>> =
                if pass == 0 { Box::new(p.iter()) } else { Box::new(p.iter().rev()) };
            for &q in it {
                while h.len() >= start + 2 && turn(h[h.len() - 2], h[h.len() - 1], q) <= T::zero() {
                    h.pop();
                }
                h.push(q);
            }
            h.pop();
        }
        Self { vertices: h }
    }

    /// Bottom-left corners of side-`sigma` squares that meet `s`: the segment
    /// dilated by `[-sigma, 0]^2`.
    pub fn placement(s: &Segment<T>, sigma: T) -> Self {
        let mut pts = Vec::with_capacity(8);
        for e in [s.a, s.b] {
            for (dx, dy) in [(T::zero(), T::zero()), (sigma, T::zero()), (T::zero(), sigma), (sigma, sigma)] {
                pts.push(Point::new(e.x - dx, e.y - dy));
            }
        }
        Self::hull(&pts)
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_convex(&self) -> bool {
        let n = self.vertices.len();
        n < 3
            || (0..n).all(|i| {
                let (a, b, c) = (self.vertices[i], self.vertices[(i + 1) % n], self.vertices[(i + 2) % n]);
                (b - a).cross(c - b) > T::zero()
            })
    }

    /// Edge half-planes with unit normals. Needs at least three vertices.
    pub fn halfplanes(&self) -> Vec<HalfPlane<T>> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                let (p, q) = (self.vertices[i], self.vertices[(i + 1) % n]);
                let d = q - p;
                let len = d.norm2().sqrt();
                let normal = Point::new(d.y / len, -d.x / len);
                HalfPlane::new(normal, normal.dot(p))
            })
            .collect()
    }

    /// Sutherland-Hodgman against one half-plane, keeping points within `slack`.
    pub fn clip(&self, hp: &HalfPlane<T>, slack: T) -> Self {
        let n = self.vertices.len();
        let mut out = Vec::with_capacity(n + 1);
        for i in 0..n {
            let (p, q) = (self.vertices[i], self.vertices[(i + 1) % n]);
            let (dp, dq) = (hp.normal.dot(p) - hp.offset - slack, hp.normal.dot(q) - hp.offset - slack);
            if dp <= T::zero() {
                out.push(p);
            }
            if (dp < T::zero() && dq > T::zero()) || (dp > T::zero() && dq < T::zero()) {
                out.push(p + (q - p) * (dp / (dp - dq)));
            }
        }
        Self { vertices: out }
    }

    pub fn intersect(&self, other: &Self, slack: T) -> Self {
        let mut r = self.clone();
        for hp in other.halfplanes() {
            if r.is_empty() {
                break;
            }
            r = r.clip(&hp, slack);
        }
        r
    }
}

fn bounds<T: Scalar>(segs: &[Segment<T>]) -> Rect<T> {
    let mut r = Rect::empty();
    for s in segs {
        r.include(s.a);
        r.include(s.b);
    }
    r
}

/// Smallest feasible value in `[0, hi]` of a monotone predicate.
fn bisect<T: Scalar>(hi: T, stop: T, feasible: impl Fn(T) -> bool) -> T {
    if feasible(T::zero()) {
        return T::zero();
    }
    let (mut lo, mut hi) = (T::zero(), hi);
    for _ in 0..ITERATIONS {
        if hi - lo <= stop {
            break;
        }
        let mid = (lo + hi) * T::lit(0.5);
        if feasible(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

fn scale<T: Scalar>(r: &Rect<T>) -> T {
    r.width().max(r.height()).max(r.min.x.abs()).max(r.min.y.abs()).max(r.max.x.abs()).max(r.max.y.abs()).max(T::one())
}

/// Whether two side-`sigma` squares anchored at opposite corners of the
/// endpoint bounding box cover every segment. `config` 1 uses the
/// bottom-left and top-right corners, 2 the top-left and bottom-right.
pub fn cover_feasible<T: Scalar>(segs: &[Segment<T>], config: u8, sigma: T, slack: T) -> bool {
    let r = bounds(segs);
    let (near, far) = if config == 1 {
        (Square::new(r.min, sigma), Square::from_top_right(r.max, sigma))
    } else {
        (
            Square::new(Point::new(r.min.x, r.max.y - sigma), sigma),
            Square::new(Point::new(r.max.x - sigma, r.min.y), sigma),
        )
    };
    segs.iter().all(|s| segment_minus_square(s, &near, slack).iter().all(|rest| square_covers_segment(&far, rest, slack)))
}

/// Two-square covering by bisection on each anchored configuration.
pub fn oracle_cover<T: Scalar>(segs: &[Segment<T>], tol: T) -> T {
    if segs.is_empty() {
        return T::zero();
    }
    let r = bounds(segs);
    let slack = T::lit(1e-12) * scale(&r);
    let diam = r.width().max(r.height());
    let stop = tol * scale(&r);
    let best = |config: u8| bisect(diam, stop, |s| cover_feasible(segs, config, s, slack));
    best(1).min(best(2))
}

/// Side of the smallest square containing every segment.
pub fn min_cover_square<T: Scalar>(segs: &[Segment<T>]) -> T {
    if segs.is_empty() {
        return T::zero();
    }
    let r = bounds(segs);
    r.width().max(r.height())
}

/// Whether one side-`sigma` square can meet every segment: the placement
/// regions of all segments share a point.
pub fn hit_feasible<T: Scalar>(segs: &[Segment<T>], sigma: T, slack: T) -> bool {
    if segs.len() <= 1 {
        return true;
    }
    if sigma <= T::zero() {
        return false;
    }
    let mut acc = ConvexRegion::placement(&segs[0], sigma);
    for s in &segs[1..] {
        acc = acc.intersect(&ConvexRegion::placement(s, sigma), slack);
        if acc.is_empty() {
            return false;
        }
    }
    true
}

/// Side of the smallest square meeting every segment.
pub fn min_hit_square<T: Scalar>(segs: &[Segment<T>], tol: T) -> T {
    if segs.len() <= 1 {
        return T::zero();
    }
    let r = bounds(segs);
    let slack = T::lit(1e-12) * scale(&r);
    bisect(r.width().max(r.height()), tol * scale(&r), |s| hit_feasible(segs, s, slack))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kernel {
    /// Each part inside one square.
    Cover,
    /// Each part met by one square.
    Hit,
}

/// Best split of the segments into two groups, each group charged by `kernel`.
pub fn oracle_partition<T: Scalar>(segs: &[Segment<T>], kernel: Kernel, tol: T) -> Result<T> {
    let n = segs.len();
    if n == 0 {
        return Err(Error::EmptyInstance);
    }
    if n > PARTITION_LIMIT {
        return Err(Error::TooLarge { n, limit: PARTITION_LIMIT });
    }
    let cost = |mask: usize| {
        let part: Vec<Segment<T>> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| segs[i]).collect();
        match kernel {
            Kernel::Cover => min_cover_square(&part),
            Kernel::Hit => min_hit_square(&part, tol),
        }
    };
    let full = (1usize << n) - 1;
    let memo: Vec<T> = (0..=full).map(cost).collect();
    // Segment 0 stays in the first group; the complement may be empty.
    let best = (0..1usize << (n - 1))
        .map(|m| {
            let a = (m << 1) | 1;
            memo[a].max(memo[full ^ a])
        })
        .fold(T::infinity(), T::min);
    Ok(best)
}

fn circle_through<T: Scalar>(a: Point<T>, b: Point<T>, c: Point<T>) -> Option<(Point<T>, T)> {
    let (ab, ac) = (b - a, c - a);
    let d = T::lit(2.0) * ab.cross(ac);
    if d == T::zero() {
        return None;
    }
    let (bb, cc) = (ab.norm2(), ac.norm2());
    let u = Point::new((ac.y * bb - ab.y * cc) / d, (ab.x * cc - ac.x * bb) / d);
    Some((a + u, u.norm2().sqrt()))
}

/// Radius of the smallest disk containing `pts`, by trying every disk fixed
/// by two or three of them.
pub fn smallest_enclosing_radius<T: Scalar>(pts: &[Point<T>]) -> T {
    if pts.len() <= 1 {
        return T::zero();
    }
    let mut s = T::one();
    for p in pts {
        s = s.max(p.x.abs()).max(p.y.abs());
    }
    let slack = T::lit(1e-9) * s;
    let fits = |c: Point<T>, r: T| pts.iter().all(|&p| (p - c).norm2().sqrt() <= r + slack);
    let mut best = T::infinity();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let c = (pts[i] + pts[j]) * T::lit(0.5);
            let r = (pts[i] - c).norm2().sqrt();
            if r < best && fits(c, r) {
                best = r;
            }
            for k in j + 1..pts.len() {
                if let Some((c, r)) = circle_through(pts[i], pts[j], pts[k]) {
                    if r < best && fits(c, r) {
                        best = r;
                    }
                }
            }
        }
    }
    best
}

/// Two congruent disks, each containing a whole group of segments; the best
/// split of the input into two groups.
pub fn oracle_two_disk_cover<T: Scalar>(segs: &[Segment<T>], _tol: T) -> Result<T> {
    let n = segs.len();
    if n == 0 {
        return Err(Error::EmptyInstance);
    }
    if n > DISK_LIMIT {
        return Err(Error::TooLarge { n, limit: DISK_LIMIT });
    }
    let radius = |mask: usize| {
        let pts: Vec<Point<T>> = (0..n).filter(|i| mask >> i & 1 == 1).flat_map(|i| [segs[i].a, segs[i].b]).collect();
        smallest_enclosing_radius(&pts)
    };
    let full = (1usize << n) - 1;
    Ok((0..1usize << (n - 1))
        .map(|m| {
            let a = (m << 1) | 1;
            radius(a).max(radius(full ^ a))
        })
        .fold(T::infinity(), T::min))
}
