//! Instance files: one `x y` pair per line, `#` starts a comment line.

use std::fmt::Write;
use twoline::Point;

#[derive(Debug, Clone, PartialEq)]
pub enum ParseError {
    /// 1-based line number and what went wrong there.
    Line(usize, String),
    Empty,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParseError::Line(n, msg) => write!(f, "line {n}: {msg}"),
            ParseError::Empty => write!(f, "the instance has no points"),
        }
    }
}

pub fn parse(text: &str) -> Result<Vec<Point>, ParseError> {
    let mut pts = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(ParseError::Line(k + 1, format!("expected two numbers, found {}", fields.len())));
        }
        let num = |s: &str| -> Result<f64, ParseError> {
            let v: f64 = s.parse().map_err(|_| ParseError::Line(k + 1, format!("not a number: {s:?}")))?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(ParseError::Line(k + 1, format!("not finite: {s}")))
            }
        };
        pts.push(Point::new(num(fields[0])?, num(fields[1])?));
    }
    if pts.is_empty() {
        return Err(ParseError::Empty);
    }
    Ok(pts)
}

/// Shortest round-trip formatting, so `parse(&emit(p, h)) == p`.
pub fn emit(pts: &[Point], header: &str) -> String {
    let mut out = String::with_capacity(pts.len() * 24 + header.len() + 4);
    for line in header.lines() {
        let _ = writeln!(out, "# {line}");
    }
    for p in pts {
        let _ = writeln!(out, "{} {}", p.x, p.y);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn round_trip_is_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut pts: Vec<Point> =
            (0..500).map(|_| Point::new(rng.gen_range(-1e6..1e6), rng.gen::<f64>() * 1e-7)).collect();
        pts.push(Point::new(-0.0, f64::MIN_POSITIVE));
        pts.push(Point::new(f64::MAX, -f64::MAX));
        let back = parse(&emit(&pts, "seed 1\nuniform")).unwrap();
        assert_eq!(back.len(), pts.len());
        for (a, b) in back.iter().zip(&pts) {
            assert_eq!(a.x.to_bits(), b.x.to_bits());
            assert_eq!(a.y.to_bits(), b.y.to_bits());
        }
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let pts = parse("# header\n\n 1 2 \n#3 4\n5e-1\t-7\n").unwrap();
        assert_eq!(pts, vec![Point::new(1.0, 2.0), Point::new(0.5, -7.0)]);
    }

    #[test]
    fn errors_name_the_line() {
        assert_eq!(parse("1 2\n3\n"), Err(ParseError::Line(2, "expected two numbers, found 1".into())));
        assert!(matches!(parse("1 x"), Err(ParseError::Line(1, _))));
        assert!(matches!(parse("1 inf"), Err(ParseError::Line(1, _))));
        assert_eq!(parse("# only a comment\n"), Err(ParseError::Empty));
        assert_eq!(parse(""), Err(ParseError::Empty));
    }
}
