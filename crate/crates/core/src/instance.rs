//! Plain-text instances: one segment `x1 y1 x2 y2` per line, `#` comments.

use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::frame::{SegmentSource, SourceStats};
use crate::geom::Segment;
use crate::scalar::Scalar;

/// Parses one instance line. `None` for blank and comment lines.
pub fn parse_line<T: Scalar>(line: &str, lineno: usize) -> Result<Option<Segment<T>>> {
    let t = line.trim();
    if t.is_empty() || t.starts_with('#') {
        return Ok(None);
    }
    let mut v = [T::zero(); 4];
    let mut fields = t.split_whitespace();
    for (i, slot) in v.iter_mut().enumerate() {
        let f = fields.next().ok_or_else(|| Error::Parse { line: lineno, message: format!("expected 4 numbers, found {i}") })?;
        let x: f64 = f.parse().map_err(|_| Error::Parse { line: lineno, message: format!("not a number: {f:?}") })?;
        if !x.is_finite() {
            return Err(Error::Parse { line: lineno, message: format!("not finite: {f:?}") });
        }
        *slot = T::lit(x);
    }
    if let Some(extra) = fields.next() {
        return Err(Error::Parse { line: lineno, message: format!("unexpected field {extra:?}") });
    }
    Ok(Some(Segment::from_coords(v[0], v[1], v[2], v[3])))
}

/// File-backed source. Every reset reopens the file, so memory use does not
/// grow with the instance.
#[derive(Debug)]
pub struct InstanceReader {
    path: PathBuf,
    reader: Option<BufReader<File>>,
    line: usize,
    buf: String,
    stats: SourceStats,
}

impl InstanceReader {
    /// Opens `path` and checks that it holds at least one segment. Malformed
    /// lines before the first segment are reported here.
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut probe = Self { path, reader: None, line: 0, buf: String::new(), stats: SourceStats::default() };
        probe.rewind()?;
        if SegmentSource::<f64>::next_segment(&mut probe)?.is_none() {
            return Err(Error::EmptyInstance);
        }
        probe.reader = None;
        probe.stats = SourceStats::default();
        Ok(probe)
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    fn rewind(&mut self) -> Result<()> {
        self.reader = Some(BufReader::new(File::open(&self.path)?));
        self.line = 0;
        Ok(())
    }
}

impl<T: Scalar> SegmentSource<T> for InstanceReader {
    fn reset(&mut self) -> Result<()> {
        self.rewind()?;
        self.stats.resets += 1;
        Ok(())
    }

    fn next_segment(&mut self) -> Result<Option<Segment<T>>> {
        let Some(r) = self.reader.as_mut() else {
            return Ok(None);
        };
        loop {
            self.buf.clear();
            if r.read_line(&mut self.buf)? == 0 {
                return Ok(None);
            }
            self.line += 1;
            if let Some(s) = parse_line(&self.buf, self.line)? {
                self.stats.items_read += 1;
                return Ok(Some(s));
            }
        }
    }

    fn stats(&self) -> SourceStats {
        self.stats
    }
}

/// Parses a whole instance held in memory.
pub fn parse_str<T: Scalar>(text: &str) -> Result<Vec<Segment<T>>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if let Some(s) = parse_line(line, i + 1)? {
            out.push(s);
        }
    }
    if out.is_empty() {
        return Err(Error::EmptyInstance);
    }
    Ok(out)
}

pub fn write_instance<T: Scalar>(w: &mut impl Write, segs: &[Segment<T>]) -> std::io::Result<()> {
    for s in segs {
        writeln!(w, "{} {} {} {}", s.a.x, s.a.y, s.b.x, s.b.y)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses() {
        let s: Vec<Segment<f64>> = parse_str("0 0 4 4\n6 0 10 4").unwrap();
        assert_eq!(s.len(), 2);
        assert!(matches!(parse_str::<f64>("# comment"), Err(Error::EmptyInstance)));
        assert!(matches!(parse_str::<f64>("0 0 x 4"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_str::<f64>("\n# c\n1 2 3"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_str::<f64>("1 2 3 inf"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn reader_reopens_on_reset() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("i.txt");
        std::fs::write(&p, "# two\n0 0 4 4\n\n6 0 10 4\n").unwrap();
        let mut r = InstanceReader::open(&p).unwrap();
        for _ in 0..2 {
            SegmentSource::<f64>::reset(&mut r).unwrap();
            let mut n = 0;
            while SegmentSource::<f64>::next_segment(&mut r).unwrap().is_some() {
                n += 1;
            }
            assert_eq!(n, 2);
        }
        assert_eq!(SegmentSource::<f64>::stats(&r), SourceStats { resets: 2, items_read: 4 });
        std::fs::write(&p, "# nothing\n").unwrap();
        assert!(matches!(InstanceReader::open(&p), Err(Error::EmptyInstance)));
    }
}
