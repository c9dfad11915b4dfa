//! SVG 1.1 picture of an instance and its slabs.

use std::fmt::Write;
use twoline::geom::project;
use twoline::{Point, Slab};

const SIZE: f64 = 800.0;
const COLORS: [&str; 2] = ["#1f77b4", "#d62728"];

/// Keeps the part of `poly` where `keep(p) >= 0`, for `keep` affine.
fn clip(poly: &[Point], keep: impl Fn(Point) -> f64) -> Vec<Point> {
    let mut out = Vec::with_capacity(poly.len() + 2);
    for (k, &a) in poly.iter().enumerate() {
        let b = poly[(k + 1) % poly.len()];
        let (fa, fb) = (keep(a), keep(b));
        if fa >= 0.0 {
            out.push(a);
        }
        if (fa >= 0.0) != (fb >= 0.0) {
            out.push(a + (b - a) * (fa / (fa - fb)));
        }
    }
    out
}

/// The slab cut to the box `[x0, x1] × [y0, y1]`.
fn slab_polygon(s: &Slab, x0: f64, x1: f64, y0: f64, y1: f64) -> Vec<Point> {
    let rect = [Point::new(x0, y0), Point::new(x1, y0), Point::new(x1, y1), Point::new(x0, y1)];
    let theta = s.orientation;
    let lower = clip(&rect, |p| project(p, theta) - s.lo);
    clip(&lower, |p| s.hi - project(p, theta))
}

pub fn svg(pts: &[Point], slabs: &[Slab]) -> String {
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for p in pts {
        x0 = x0.min(p.x);
        x1 = x1.max(p.x);
        y0 = y0.min(p.y);
        y1 = y1.max(p.y);
    }
    let side = (x1 - x0).max(y1 - y0).max(1e-12);
    let margin = 0.05 * side;
    let (x0, x1, y0, y1) = (x0 - margin, x0 + side + margin, y0 - margin, y0 + side + margin);
    let scale = SIZE / (x1 - x0);
    let to_svg = |p: Point| ((p.x - x0) * scale, (y1 - p.y) * scale);

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(out, r#"  <rect width="100%" height="100%" fill="white"/>"#);
    for (k, s) in slabs.iter().enumerate() {
        let color = COLORS[k % COLORS.len()];
        let poly = slab_polygon(s, x0, x1, y0, y1);
        if poly.len() >= 3 {
            let coords: Vec<String> = poly
                .iter()
                .map(|&p| {
                    let (x, y) = to_svg(p);
                    format!("{x:.3},{y:.3}")
                })
                .collect();
            let _ = writeln!(
                out,
                r#"  <polygon points="{}" fill="{color}" fill-opacity="0.25" stroke="none"/>"#,
                coords.join(" ")
            );
        }
        // Boundary lines, also visible for zero-width slabs.
        for off in [s.lo, s.hi] {
            let line = slab_polygon(&Slab::line(s.orientation, off), x0, x1, y0, y1);
            if let (Some(&a), Some(&b)) =
                (line.first(), line.iter().max_by(|a, b| a.dist(line[0]).total_cmp(&b.dist(line[0]))))
            {
                let ((ax, ay), (bx, by)) = (to_svg(a), to_svg(b));
                let _ = writeln!(
                    out,
                    r#"  <line x1="{ax:.3}" y1="{ay:.3}" x2="{bx:.3}" y2="{by:.3}" stroke="{color}" stroke-width="1"/>"#
                );
            }
        }
    }
    let r = (SIZE / 250.0).max(1.0);
    for &p in pts {
        let (x, y) = to_svg(p);
        let _ = writeln!(out, r#"  <circle cx="{x:.3}" cy="{y:.3}" r="{r}" fill="black"/>"#);
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use twoline::Orientation;

    #[test]
    fn horizontal_slab_is_a_band() {
        let s = Slab::new(Orientation::HORIZONTAL, 1.0, 2.0);
        let poly = slab_polygon(&s, 0.0, 4.0, 0.0, 4.0);
        assert_eq!(poly.len(), 4);
        for p in &poly {
            assert!((1.0..=2.0).contains(&p.y) && (0.0..=4.0).contains(&p.x));
        }
    }

    #[test]
    fn slab_outside_the_box_vanishes() {
        let s = Slab::new(Orientation::new(0.5), 100.0, 101.0);
        assert!(slab_polygon(&s, 0.0, 1.0, 0.0, 1.0).is_empty());
    }
}
