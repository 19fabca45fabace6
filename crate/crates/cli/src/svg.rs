//! Static SVG rendering of an instance and its solution.

use std::fmt::Write as _;

use segcover::{Disk, Point, Polyline, Segment, Square};
use segcover::frame::scan;
use segcover::{DiskPair, Result, SegmentSource, Solution};

const SIZE: f64 = 800.0;

struct View {
    min: Point,
    max_y: f64,
    scale: f64,
    pad: f64,
}

impl View {
    fn new(sol: &Solution, disks: Option<&DiskPair>) -> Self {
        let mut b = sol.bounds;
        for s in [sol.s1, sol.s2] {
            b.include(s.min);
            b.include(s.max());
        }
        if let Some(d) = disks {
            for c in [d.d1, d.d2] {
                b.include(Point::new(c.center.x - c.radius, c.center.y - c.radius));
                b.include(Point::new(c.center.x + c.radius, c.center.y + c.radius));
            }
        }
        let extent = b.width().max(b.height()).max(1e-9);
        let pad = 20.0;
        Self { min: b.min, max_y: b.max.y, scale: (SIZE - 2.0 * pad) / extent, pad }
    }

    /// Input coordinates to SVG coordinates (y grows downward).
    fn at(&self, p: Point) -> (f64, f64) {
        (self.pad + (p.x - self.min.x) * self.scale, self.pad + (self.max_y - p.y) * self.scale)
    }
}

fn num(v: f64) -> String {
    crate::fmt::g(v, 7)
}

fn segment(out: &mut String, v: &View, s: &Segment) {
    let (a, b) = (v.at(s.a), v.at(s.b));
    let _ = writeln!(out, r#"  <polyline points="{},{} {},{}" stroke="black" stroke-width="1.5" fill="none"/>"#, num(a.0), num(a.1), num(b.0), num(b.1));
}

fn square(out: &mut String, v: &View, s: &Square, color: &str) {
    if s.side <= 0.0 {
        let c = v.at(s.min);
        let _ = writeln!(out, r#"  <circle cx="{}" cy="{}" r="4" fill="{color}"/>"#, num(c.0), num(c.1));
        return;
    }
    let top_left = v.at(Point::new(s.min.x, s.min.y + s.side));
    let w = s.side * v.scale;
    let _ = writeln!(
        out,
        r#"  <rect x="{}" y="{}" width="{}" height="{}" stroke="{color}" stroke-width="2" fill="none"/>"#,
        num(top_left.0),
        num(top_left.1),
        num(w),
        num(w)
    );
}

fn disk(out: &mut String, v: &View, d: &Disk, color: &str) {
    let c = v.at(d.center);
    let _ = writeln!(
        out,
        r#"  <circle cx="{}" cy="{}" r="{}" stroke="{color}" stroke-width="1.5" fill="none"/>"#,
        num(c.0),
        num(c.1),
        num(d.radius * v.scale)
    );
}

fn guide(out: &mut String, v: &View, p: &Polyline) {
    let mut d = String::new();
    for (i, q) in p.vertices.iter().enumerate() {
        let (x, y) = v.at(*q);
        let _ = write!(d, "{}{},{}", if i == 0 { "M" } else { " L" }, num(x), num(y));
    }
    let _ = writeln!(out, r#"  <path d="{d}" stroke="gray" stroke-width="1" stroke-dasharray="6,4" fill="none"/>"#);
}

/// Renders `segments`, the squares, the optional disks and the solver's
/// construction lines. Output depends only on the inputs.
pub fn render(sol: &Solution, disks: Option<&DiskPair>, src: &mut dyn SegmentSource<f64>) -> Result<String> {
    let v = View::new(sol, disks);
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(out, r#"  <rect width="100%" height="100%" fill="white"/>"#);
    for g in &sol.guides {
        guide(&mut out, &v, g);
    }
    scan(src, |_, s| segment(&mut out, &v, &s))?;
    square(&mut out, &v, &sol.s1, "#1f77b4");
    square(&mut out, &v, &sol.s2, "#d62728");
    if let Some(d) = disks {
        disk(&mut out, &v, &d.d1, "#1f77b4");
        disk(&mut out, &v, &d.d2, "#d62728");
    }
    let _ = writeln!(out, "</svg>");
    Ok(out)
}
