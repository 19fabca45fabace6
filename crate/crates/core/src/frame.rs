//! Streaming segment sources and the single-pass frames the solvers anchor on.

use crate::error::{Error, Result};
use crate::geom::{AxisMap, Point, Rect, Segment};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SourceStats {
    pub resets: usize,
    pub items_read: usize,
}

/// A resettable forward-only stream of segments. Solvers read it a fixed
/// number of times and never buffer it.
pub trait SegmentSource<T> {
    /// Rewinds to the first segment.
    fn reset(&mut self) -> Result<()>;
    fn next_segment(&mut self) -> Result<Option<Segment<T>>>;
    fn stats(&self) -> SourceStats;
}

/// In-memory source over a borrowed slice.
#[derive(Debug)]
pub struct SliceSource<'a, T> {
    items: &'a [Segment<T>],
    pos: usize,
    stats: SourceStats,
}

impl<'a, T> SliceSource<'a, T> {
    pub fn new(items: &'a [Segment<T>]) -> Self {
        Self { items, pos: 0, stats: SourceStats::default() }
    }
}

impl<T: Copy> SegmentSource<T> for SliceSource<'_, T> {
    fn reset(&mut self) -> Result<()> {
        self.pos = 0;
        self.stats.resets += 1;
        Ok(())
    }

    fn next_segment(&mut self) -> Result<Option<Segment<T>>> {
        let s = self.items.get(self.pos).copied();
        if s.is_some() {
            self.pos += 1;
            self.stats.items_read += 1;
        }
        Ok(s)
    }

    fn stats(&self) -> SourceStats {
        self.stats
    }
}

/// Resets `src` and feeds every segment to `f`, rejecting non-finite input.
/// Returns the number of segments seen.
pub fn scan<T: Scalar, S: SegmentSource<T> + ?Sized>(
    src: &mut S,
    mut f: impl FnMut(usize, Segment<T>),
) -> Result<usize> {
    src.reset()?;
    let mut i = 0;
    while let Some(s) = src.next_segment()? {
        if !s.is_finite() {
            return Err(Error::NonFinite { index: i });
        }
        f(i, s);
        i += 1;
    }
    Ok(i)
}

/// Running argmin/argmax that keeps the first occurrence on ties.
#[derive(Clone, Copy, Debug)]
struct Extreme<V, T> {
    key: T,
    val: Option<V>,
}

impl<V: Copy, T: Scalar> Extreme<V, T> {
    fn new() -> Self {
        Self { key: T::nan(), val: None }
    }

    fn offer_min(&mut self, key: T, v: V) {
        if self.val.is_none() || key < self.key {
            self.key = key;
            self.val = Some(v);
        }
    }

    fn offer_max(&mut self, key: T, v: V) {
        if self.val.is_none() || key > self.key {
            self.key = key;
            self.val = Some(v);
        }
    }

    fn get(&self) -> V {
        self.val.expect("extreme of a non-empty stream")
    }
}

// ---------------------------------------------------------------------------
// Cover frame

/// Bounding box of all endpoints, normalized so that width >= height.
/// `a, b, c, d` are the endpoints realizing min x, max y, max x, min y.
/// Everything except `bounds` is in frame coordinates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CoverFrame<T> {
    pub rect: Rect<T>,
    pub a: Point<T>,
    pub b: Point<T>,
    pub c: Point<T>,
    pub d: Point<T>,
    pub transposed: bool,
    pub n: usize,
    /// Bounding box in input coordinates.
    pub bounds: Rect<T>,
}

impl<T: Scalar> CoverFrame<T> {
    pub fn l(&self) -> T {
        self.rect.width()
    }
    pub fn w(&self) -> T {
        self.rect.height()
    }
    /// Bottom-left corner.
    pub fn h(&self) -> Point<T> {
        self.rect.min
    }
    /// Top-left corner.
    pub fn e(&self) -> Point<T> {
        Point::new(self.rect.min.x, self.rect.max.y)
    }
    /// Top-right corner.
    pub fn f(&self) -> Point<T> {
        self.rect.max
    }
    /// Bottom-right corner.
    pub fn g(&self) -> Point<T> {
        Point::new(self.rect.max.x, self.rect.min.y)
    }

    /// Input coordinates to frame coordinates.
    pub fn to_frame(&self) -> AxisMap<T> {
        if self.transposed {
            AxisMap::transpose()
        } else {
            AxisMap::identity()
        }
    }

    /// Same frame mirrored in its horizontal midline: `e` and `h` trade places,
    /// as do `f` and `g`.
    pub fn reflect_vertical(&self) -> Self {
        let m = AxisMap::reflect_y(self.rect.center().y);
        Self {
            rect: self.rect,
            a: m.apply(self.a),
            b: m.apply(self.d),
            c: m.apply(self.c),
            d: m.apply(self.b),
            ..*self
        }
    }
}

pub fn build_cover_frame<T: Scalar, S: SegmentSource<T> + ?Sized>(src: &mut S) -> Result<CoverFrame<T>> {
    let mut a = Extreme::new();
    let mut b = Extreme::new();
    let mut c = Extreme::new();
    let mut d = Extreme::new();
    let mut bounds = Rect::empty();
    let n = scan(src, |_, s| {
        for p in [s.a, s.b] {
            a.offer_min(p.x, p);
            b.offer_max(p.y, p);
            c.offer_max(p.x, p);
            d.offer_min(p.y, p);
            bounds.include(p);
        }
    })?;
    if n == 0 {
        return Err(Error::EmptyInstance);
    }
    let transposed = bounds.height() > bounds.width();
    let frame = if transposed {
        let t = AxisMap::transpose();
        CoverFrame {
            rect: t.apply_rect(&bounds),
            a: d.get().swapped(),
            b: c.get().swapped(),
            c: b.get().swapped(),
            d: a.get().swapped(),
            transposed,
            n,
            bounds,
        }
    } else {
        CoverFrame { rect: bounds, a: a.get(), b: b.get(), c: c.get(), d: d.get(), transposed, n, bounds }
    };
    Ok(frame)
}

// ---------------------------------------------------------------------------
// Hit frame

/// The four extreme segments of a hitting instance, in frame coordinates:
/// `la` minimizes x(RP), `lb` maximizes y(BP), `lc` maximizes x(LP) and `ld`
/// minimizes y(TP), first occurrence winning ties.
///
/// The rectangle spanned by `a = RP(la)`, `b = BP(lb)`, `c = LP(lc)` and
/// `d = TP(ld)` may be inverted, i.e. `x(a) > x(c)` or `y(d) > y(b)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HitFrame<T> {
    pub la: Segment<T>,
    pub lb: Segment<T>,
    pub lc: Segment<T>,
    pub ld: Segment<T>,
    pub a: Point<T>,
    pub b: Point<T>,
    pub c: Point<T>,
    pub d: Point<T>,
    pub transposed: bool,
    pub n: usize,
    /// Bounding box of all endpoints in input coordinates.
    pub bounds: Rect<T>,
}

impl<T: Scalar> HitFrame<T> {
    pub fn from_extremes(la: Segment<T>, lb: Segment<T>, lc: Segment<T>, ld: Segment<T>) -> Self {
        Self {
            la,
            lb,
            lc,
            ld,
            a: la.rp(),
            b: lb.bp(),
            c: lc.lp(),
            d: ld.tp(),
            transposed: false,
            n: 0,
            bounds: Rect::empty(),
        }
    }

    /// Signed extents: `x(c) - x(a)` and `y(b) - y(d)`.
    pub fn signed_l(&self) -> T {
        self.c.x - self.a.x
    }
    pub fn signed_w(&self) -> T {
        self.b.y - self.d.y
    }
    pub fn l(&self) -> T {
        self.signed_l().abs()
    }
    pub fn w(&self) -> T {
        self.signed_w().abs()
    }

    /// `(x(a), y(d))`; the bottom-left corner when the frame is not inverted.
    pub fn h(&self) -> Point<T> {
        Point::new(self.a.x, self.d.y)
    }
    pub fn e(&self) -> Point<T> {
        Point::new(self.a.x, self.b.y)
    }
    pub fn f(&self) -> Point<T> {
        Point::new(self.c.x, self.b.y)
    }
    pub fn g(&self) -> Point<T> {
        Point::new(self.c.x, self.d.y)
    }

    pub fn rect(&self) -> Rect<T> {
        Rect::spanning(self.h(), self.f())
    }

    pub fn is_inverted(&self) -> bool {
        self.signed_l() < T::zero() || self.signed_w() < T::zero()
    }

    pub fn to_frame(&self) -> AxisMap<T> {
        if self.transposed {
            AxisMap::transpose()
        } else {
            AxisMap::identity()
        }
    }

    /// Mirror in the horizontal line halfway between `b` and `d`; the roles
    /// of `lb` and `ld` swap.
    pub fn reflect_vertical(&self) -> Self {
        let m = self.vertical_mirror();
        Self {
            transposed: self.transposed,
            n: self.n,
            bounds: self.bounds,
            ..Self::from_extremes(
                m.apply_segment(&self.la),
                m.apply_segment(&self.ld),
                m.apply_segment(&self.lc),
                m.apply_segment(&self.lb),
            )
        }
    }

    /// The reflection used by [`HitFrame::reflect_vertical`].
    pub fn vertical_mirror(&self) -> AxisMap<T> {
        AxisMap::reflect_y((self.b.y + self.d.y) * T::lit(0.5))
    }
}

pub fn build_hit_frame<T: Scalar, S: SegmentSource<T> + ?Sized>(src: &mut S) -> Result<HitFrame<T>> {
    let mut ea = Extreme::new();
    let mut eb = Extreme::new();
    let mut ec = Extreme::new();
    let mut ed = Extreme::new();
    let mut bounds = Rect::empty();
    let n = scan(src, |_, s| {
        ea.offer_min(s.rp().x, s);
        eb.offer_max(s.bp().y, s);
        ec.offer_max(s.lp().x, s);
        ed.offer_min(s.tp().y, s);
        bounds.include(s.a);
        bounds.include(s.b);
    })?;
    if n == 0 {
        return Err(Error::EmptyInstance);
    }
    let (la, lb, lc, ld) = (ea.get(), eb.get(), ec.get(), ed.get());
    let plain = HitFrame::from_extremes(la, lb, lc, ld);
    let mut frame = if plain.w() > plain.l() {
        // Transposition turns RP into TP, BP into LP and so on, so the roles
        // rotate: a <- d, b <- c, c <- b, d <- a.
        let t = AxisMap::transpose();
        let mut f = HitFrame::from_extremes(
            t.apply_segment(&ld),
            t.apply_segment(&lc),
            t.apply_segment(&lb),
            t.apply_segment(&la),
        );
        f.transposed = true;
        f
    } else {
        plain
    };
    frame.n = n;
    frame.bounds = bounds;
    Ok(frame)
}
