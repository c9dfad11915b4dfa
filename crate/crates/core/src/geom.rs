//! Points, orientations, slabs and the exact primitives every solver shares:
//! directional widths, convex hulls, rotating calipers, constrained widths,
//! dominance between vertically separated sets, and a 2-approximate diameter.

use crate::chain::{self, Chain, Hull};
use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::collections::HashSet;
use std::f64::consts::PI;
use std::ops::{Add, Mul, Neg, Sub};

/// Relative comparison tolerance; multiplied by the bounding-box diagonal.
pub const TOL_REL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    #[inline]
    pub fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }

    #[inline]
    pub fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn dist(self, o: Point) -> f64 {
        (self - o).norm()
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, s: f64) -> Point {
        Point::new(self.x * s, self.y * s)
    }
}

/// Counterclockwise angle of a line from the x-axis, kept in `[0, π)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Orientation(f64);

impl Orientation {
    pub fn new(theta: f64) -> Self {
        let t = theta.rem_euclid(PI);
        if t >= PI || t == 0.0 || !t.is_finite() {
            Orientation(0.0)
        } else {
            Orientation(t)
        }
    }

    pub const HORIZONTAL: Orientation = Orientation(0.0);

    /// Orientation of the line spanned by `d`.
    pub fn of_vector(d: Point) -> Self {
        Orientation::new(d.y.atan2(d.x))
    }

    pub fn radians(self) -> f64 {
        self.0
    }

    /// Unit normal `(-sin θ, cos θ)`.
    pub fn normal(self) -> Point {
        let (s, c) = self.0.sin_cos();
        Point::new(-s, c)
    }

    /// Unit direction `(cos θ, sin θ)`.
    pub fn direction(self) -> Point {
        let (s, c) = self.0.sin_cos();
        Point::new(c, s)
    }
}

/// Signed offset of `p` along the normal of `theta`.
#[inline]
pub fn project(p: Point, theta: Orientation) -> f64 {
    let (s, c) = theta.0.sin_cos();
    project_sc(p, s, c)
}

#[inline]
pub(crate) fn project_sc(p: Point, s: f64, c: f64) -> f64 {
    -p.x * s + p.y * c
}

/// Coordinates of `p` in the frame where `theta` is horizontal. The new `y`
/// is exactly `project(p, theta)`.
#[inline]
pub(crate) fn to_frame(p: Point, s: f64, c: f64) -> Point {
    Point::new(p.x * c + p.y * s, project_sc(p, s, c))
}

/// The closed region between two parallel lines: all points whose offset
/// along the normal of `orientation` lies in `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Slab {
    pub orientation: Orientation,
    pub lo: f64,
    pub hi: f64,
}

impl Slab {
    pub fn new(orientation: Orientation, lo: f64, hi: f64) -> Self {
        debug_assert!(lo <= hi, "slab offsets out of order: {lo} > {hi}");
        Slab { orientation, lo, hi }
    }

    /// Zero-width slab: the line at `offset`.
    pub fn line(orientation: Orientation, offset: f64) -> Self {
        Slab::new(orientation, offset, offset)
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn center(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn contains(&self, p: Point, tol: f64) -> bool {
        let v = project(p, self.orientation);
        v >= self.lo - tol && v <= self.hi + tol
    }

    /// Grows the slab symmetrically to `width` (no-op if already wider).
    pub fn padded_to(&self, width: f64) -> Slab {
        let extra = width - self.width();
        if extra <= 0.0 {
            return *self;
        }
        Slab::new(self.orientation, self.lo - 0.5 * extra, self.hi + 0.5 * extra)
    }
}

/// Two slabs meant to cover a point set together.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlabPair {
    pub first: Slab,
    pub second: Slab,
}

impl SlabPair {
    pub fn new(first: Slab, second: Slab) -> Self {
        SlabPair { first, second }
    }

    pub fn max_width(&self) -> f64 {
        self.first.width().max(self.second.width())
    }

    /// Index of the first point outside both slabs.
    pub fn first_uncovered(&self, pts: &[Point], tol: f64) -> Option<usize> {
        pts.iter().position(|&p| !self.first.contains(p, tol) && !self.second.contains(p, tol))
    }

    pub fn covers(&self, pts: &[Point], tol: f64) -> bool {
        self.first_uncovered(pts, tol).is_none()
    }

    /// Pads the narrower slab so both have the larger width.
    pub fn equalized(&self) -> SlabPair {
        let w = self.max_width();
        SlabPair::new(self.first.padded_to(w), self.second.padded_to(w))
    }

    pub fn slabs(&self) -> [Slab; 2] {
        [self.first, self.second]
    }
}

/// A validated, deduplicated point set.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    /// Rejects non-finite coordinates and drops exact duplicates, keeping the
    /// first occurrence of each point.
    pub fn new(points: Vec<Point>) -> Result<Self> {
        if let Some(i) = points.iter().position(|p| !p.is_finite()) {
            return Err(Error::NonFinite(i));
        }
        Ok(PointSet { points: dedup(points) })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn into_points(self) -> Vec<Point> {
        self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn tolerance(&self) -> f64 {
        tolerance(&self.points)
    }
}

impl std::ops::Deref for PointSet {
    type Target = [Point];
    fn deref(&self) -> &[Point] {
        &self.points
    }
}

/// Removes exact duplicates in linear expected time, preserving order.
pub fn dedup(points: Vec<Point>) -> Vec<Point> {
    let key = |p: &Point| {
        // -0.0 and 0.0 are the same point.
        let fix = |v: f64| if v == 0.0 { 0u64 } else { v.to_bits() };
        (fix(p.x), fix(p.y))
    };
    let mut seen = HashSet::with_capacity(points.len());
    let mut out = Vec::with_capacity(points.len());
    for p in points {
        if seen.insert(key(&p)) {
            out.push(p);
        }
    }
    out
}

/// Length of the bounding-box diagonal.
pub fn bbox_diagonal(pts: &[Point]) -> f64 {
    let Some(first) = pts.first() else { return 0.0 };
    let (mut x0, mut x1, mut y0, mut y1) = (first.x, first.x, first.y, first.y);
    for p in pts {
        x0 = x0.min(p.x);
        x1 = x1.max(p.x);
        y0 = y0.min(p.y);
        y1 = y1.max(p.y);
    }
    (x1 - x0).hypot(y1 - y0)
}

/// The global comparison tolerance `τ` of an instance.
pub fn tolerance(pts: &[Point]) -> f64 {
    TOL_REL * bbox_diagonal(pts)
}

/// Descending `(y, x)` comparison: the sheared "higher first" order. Zeros
/// of either sign compare equal (adding `0.0` maps `-0.0` to `0.0`).
#[inline]
pub fn cmp_desc(a: &Point, b: &Point) -> Ordering {
    (b.y + 0.0).total_cmp(&(a.y + 0.0)).then((b.x + 0.0).total_cmp(&(a.x + 0.0)))
}

/// Minimal slab of orientation `θ` enclosing a set, with the indices of one
/// point on each bounding line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extent {
    pub width: f64,
    pub slab: Slab,
    /// `(index on lo line, index on hi line)`; smallest index on ties.
    pub antipodal: (usize, usize),
}

pub fn width_at_orientation(pts: &[Point], theta: Orientation) -> Result<Extent> {
    if pts.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let (s, c) = theta.0.sin_cos();
    let v0 = project_sc(pts[0], s, c);
    let (mut lo, mut hi, mut ilo, mut ihi) = (v0, v0, 0, 0);
    for (i, &p) in pts.iter().enumerate().skip(1) {
        let v = project_sc(p, s, c);
        if v < lo {
            lo = v;
            ilo = i;
        }
        if v > hi {
            hi = v;
            ihi = i;
        }
    }
    Ok(Extent { width: hi - lo, slab: Slab::new(theta, lo, hi), antipodal: (ilo, ihi) })
}

/// Convex hull vertex indices, counterclockwise from the lexicographically
/// smallest point, collinear points excluded.
pub fn convex_hull(pts: &[Point]) -> Vec<usize> {
    let n = pts.len();
    if n == 0 {
        return Vec::new();
    }
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| pts[a].x.total_cmp(&pts[b].x).then(pts[a].y.total_cmp(&pts[b].y)));
    idx.dedup_by(|a, b| pts[*a] == pts[*b]);
    if idx.len() <= 2 {
        return idx;
    }
    let turn = |h: &[usize], p: usize| {
        let a = pts[h[h.len() - 2]];
        let b = pts[h[h.len() - 1]];
        (b - a).cross(pts[p] - b)
    };
    let mut hull: Vec<usize> = Vec::with_capacity(idx.len() + 1);
    for &i in &idx {
        while hull.len() >= 2 && turn(&hull, i) <= 0.0 {
            hull.pop();
        }
        hull.push(i);
    }
    let lower = hull.len() + 1;
    for &i in idx.iter().rev().skip(1) {
        while hull.len() >= lower && turn(&hull, i) <= 0.0 {
            hull.pop();
        }
        hull.push(i);
    }
    hull.pop();
    hull
}

/// Width of a point set by rotating calipers over its hull, with the
/// orientation of the hull edge attaining it.
pub fn width_exact(pts: &[Point]) -> (f64, Orientation) {
    let hull = convex_hull(pts);
    let h = hull.len();
    if h <= 1 {
        return (0.0, Orientation::HORIZONTAL);
    }
    if h == 2 {
        return (0.0, Orientation::of_vector(pts[hull[1]] - pts[hull[0]]));
    }
    let v = |k: usize| pts[hull[k % h]];
    let span = bbox_diagonal(pts);
    let mut best = (f64::INFINITY, Orientation::HORIZONTAL);
    let mut j = 1usize;
    for i in 0..h {
        let (a, b) = (v(i), v(i + 1));
        let e = b - a;
        // Near-ties advance too: heights along a run of almost collinear
        // vertices, or at both ends of a very short edge, carry rounding
        // noise that can dip below the previous value.
        let slack = 1e-12 * e.norm() * span;
        j = j.max(i + 1);
        while j + 1 < i + h && e.cross(v(j + 1) - a) >= e.cross(v(j) - a) - slack {
            j += 1;
        }
        let d = e.cross(v(j) - a) / e.norm();
        if d < best.0 {
            best = (d, Orientation::of_vector(e));
        }
    }
    best
}

/// Orientations of the hull edges together with the calipers width at each.
fn edge_widths(pts: &[Point]) -> Vec<(f64, f64)> {
    let hull = convex_hull(pts);
    let h = hull.len();
    if h <= 2 {
        return Vec::new();
    }
    let v = |k: usize| pts[hull[k % h]];
    let span = bbox_diagonal(pts);
    let mut out = Vec::with_capacity(h);
    let mut j = 1usize;
    for i in 0..h {
        let (a, b) = (v(i), v(i + 1));
        let e = b - a;
        // Near-ties advance too: heights along a run of almost collinear
        // vertices, or at both ends of a very short edge, carry rounding
        // noise that can dip below the previous value.
        let slack = 1e-12 * e.norm() * span;
        j = j.max(i + 1);
        while j + 1 < i + h && e.cross(v(j + 1) - a) >= e.cross(v(j) - a) - slack {
            j += 1;
        }
        out.push((Orientation::of_vector(e).radians(), e.cross(v(j) - a) / e.norm()));
    }
    out
}

/// Smallest width over the orientation interval from `lo` to `hi`. When
/// `lo > hi` the interval wraps through the horizontal and is split there.
pub fn constrained_width(pts: &[Point], lo: Orientation, hi: Orientation) -> Result<(f64, Orientation)> {
    if pts.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let edges = edge_widths(pts);
    let eval = |a: f64, b: f64| -> Result<(f64, Orientation)> {
        let mut best = (f64::INFINITY, Orientation::HORIZONTAL);
        for t in [a, b] {
            let w = width_at_orientation(pts, Orientation::new(t))?.width;
            if w < best.0 {
                best = (w, Orientation::new(t));
            }
        }
        for &(t, w) in &edges {
            if t > a && t < b && w < best.0 {
                best = (w, Orientation::new(t));
            }
        }
        Ok(best)
    };
    if lo.0 <= hi.0 {
        eval(lo.0, hi.0)
    } else {
        let x = eval(lo.0, PI)?;
        let y = eval(0.0, hi.0)?;
        Ok(if y.0 < x.0 { y } else { x })
    }
}

/// Orientations `(θ1, θ2)` of the right and left outer common tangents of
/// `upper` over `lower`. Both sets must be nonempty and `upper` entirely
/// above `lower` in the sheared order.
pub(crate) fn tangent_orientations(upper: &[Point], lower: &[Point]) -> (f64, f64) {
    let mut ou: Vec<usize> = (0..upper.len()).collect();
    ou.sort_by(|&a, &b| cmp_desc(&upper[a], &upper[b]));
    let mut ol: Vec<usize> = (0..lower.len()).collect();
    ol.sort_by(|&a, &b| cmp_desc(&lower[a], &lower[b]));
    let (ul, ur) = chain::build_chains(upper, &ou);
    let (ll, lr) = chain::build_chains(lower, &ol);
    let hu = Hull { left: Chain::new(upper, &ul, false), right: Chain::new(upper, &ur, false) };
    let hl = Hull { left: Chain::new(lower, &ll, false), right: Chain::new(lower, &lr, false) };
    let (t1, t2, _) = chain::outer_tangents(&hu, &hl);
    (t1, t2)
}

/// Whether `p` dominates `q`: over the orientation range spanned by the two
/// outer common tangents, the constrained minimal slab of `q` lies inside
/// that of `p`. The sets must be separable by a horizontal line; the upper
/// one dominates exactly when its right tangent orientation does not exceed
/// its left one.
pub fn dominates(p: &[Point], q: &[Point]) -> Result<bool> {
    if p.is_empty() || q.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let lowest = |s: &[Point]| *s.iter().max_by(|a, b| cmp_desc(a, b)).unwrap();
    let highest = |s: &[Point]| *s.iter().min_by(|a, b| cmp_desc(a, b)).unwrap();
    if chain::above(lowest(p), highest(q)) {
        let (t1, t2) = tangent_orientations(p, q);
        Ok(t1 <= t2)
    } else if chain::above(lowest(q), highest(p)) {
        let (t1, t2) = tangent_orientations(q, p);
        Ok(t1 > t2)
    } else {
        Err(Error::HullsIntersect)
    }
}

/// A pair at distance at least half the diameter: the first point and the
/// point farthest from it (smallest index on ties).
pub fn diameter_2approx(pts: &[Point]) -> Result<(usize, usize)> {
    if pts.len() < 2 {
        return Err(Error::TooFewPoints { need: 2, got: pts.len() });
    }
    let p = pts[0];
    let mut best = (0.0, 0usize);
    for (i, &r) in pts.iter().enumerate().skip(1) {
        let d = (r - p).dot(r - p);
        if d > best.0 {
            best = (d, i);
        }
    }
    if best.0 == 0.0 {
        return Err(Error::IdenticalPoints);
    }
    Ok((0, best.1))
}

/// Two slabs of orientation `θ` covering `pts` with the smallest possible
/// larger width: the enclosing slab split at its center line, each half
/// shrunk until it touches a point.
pub fn min_parallel_pair_at_orientation(pts: &[Point], theta: Orientation) -> Result<SlabPair> {
    if pts.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let (s, c) = theta.0.sin_cos();
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for &p in pts {
        let v = project_sc(p, s, c);
        lo = lo.min(v);
        hi = hi.max(v);
    }
    let mid = 0.5 * (lo + hi);
    let (mut below, mut above) = (lo, hi);
    for &p in pts {
        let v = project_sc(p, s, c);
        if v <= mid && v > below {
            below = v;
        }
        if v >= mid && v < above {
            above = v;
        }
    }
    Ok(SlabPair::new(Slab::new(theta, lo, below), Slab::new(theta, above, hi)))
}
