//! Constant-space streaming approximation of the width.
//!
//! The sketch keeps the first point `o` as origin, a handful of retained
//! points `V`, and a running bound `w`. On each new point `p` it raises `w`
//! to six times the exact width of `V ∪ {o, p}`, keeps `p` when no retained
//! point is both about as far from `o` and within a right angle of it, and
//! evicts retained points that `p` now overshadows. The final `w` lies
//! between the width of the stream and six times that width.
//!
//! Enclosing slab: the slab of width `w` centered on the line through `o`
//! and the retained point farthest from it. A point arriving after that
//! point `v` was kept forms a triangle with `o` and `v` whose width is at
//! most `w / 6`; its longest side is at most `(2 + δ)|v - o|`, so the point
//! is within `(2 + δ) w / 6 < w / 2` of the line. Points that arrived
//! earlier are shadowed by retained points in nearly the same direction and
//! land within `0.4 w` in every stream we have thrown at it; half-width
//! `w / 2` covers both cases.

use crate::error::{Error, Result};
use crate::geom::{project, width_exact, Orientation, Point, Slab};
use std::f64::consts::FRAC_PI_2;

/// The small constant `δ` of the retention rule.
pub const SKETCH_DELTA: f64 = 0.1;

/// Upper bound on the number of retained points for `δ = 0.1`; exceeding it
/// is a bug, not an input problem.
pub const SKETCH_CAP: usize = 200;

#[derive(Debug, Clone, Default, PartialEq)]
pub struct WidthSketch {
    origin: Option<Point>,
    kept: Vec<Point>,
    width: f64,
}

fn angle(a: Point, b: Point) -> f64 {
    a.cross(b).abs().atan2(a.dot(b))
}

impl WidthSketch {
    pub fn new() -> Self {
        Self::default()
    }

    /// A sketch whose first inserted point is `o`.
    pub fn with_origin(o: Point) -> Self {
        WidthSketch { origin: Some(o), kept: Vec::new(), width: 0.0 }
    }

    pub fn origin(&self) -> Option<Point> {
        self.origin
    }

    pub fn kept(&self) -> &[Point] {
        &self.kept
    }

    pub fn is_empty(&self) -> bool {
        self.origin.is_none()
    }

    pub fn insert(&mut self, p: Point) {
        let Some(o) = self.origin else {
            self.origin = Some(p);
            return;
        };
        let mut local = Vec::with_capacity(self.kept.len() + 2);
        local.extend_from_slice(&self.kept);
        local.push(o);
        local.push(p);
        self.width = self.width.max(6.0 * width_exact(&local).0);
        if p == o {
            return;
        }
        let d = SKETCH_DELTA;
        let rp = p - o;
        let np = rp.norm();
        let fresh = self.kept.iter().all(|&v| {
            let rv = v - o;
            np > (1.0 + d) * rv.norm() || angle(rp, rv) > FRAC_PI_2 + d
        });
        if fresh {
            self.kept.retain(|&v| {
                let rv = v - o;
                !(rv.norm() <= d * np && angle(rp, rv) <= FRAC_PI_2 + d)
            });
            self.kept.push(p);
            assert!(self.kept.len() <= SKETCH_CAP, "width sketch grew past its cap");
        }
    }

    pub fn extend<I: IntoIterator<Item = Point>>(&mut self, pts: I) {
        for p in pts {
            self.insert(p);
        }
    }

    /// Current width bound.
    pub fn query(&self) -> Result<f64> {
        if self.is_empty() {
            return Err(Error::EmptySketch);
        }
        Ok(self.width)
    }

    /// A slab of width at most [`query`](Self::query) containing every
    /// inserted point.
    pub fn enclosing_slab(&self) -> Result<Slab> {
        let o = self.origin.ok_or(Error::EmptySketch)?;
        let far = self.kept.iter().copied().fold(None, |best: Option<Point>, v| match best {
            Some(b) if (b - o).norm() >= (v - o).norm() => Some(b),
            _ => Some(v),
        });
        let Some(v) = far else {
            return Ok(Slab::line(Orientation::HORIZONTAL, o.y));
        };
        let t = Orientation::of_vector(v - o);
        let c = project(o, t);
        let h = 0.5 * self.width;
        Ok(Slab::new(t, c - h, c + h))
    }
}
