//! Two slabs with prescribed orientations `θ1` and `θ2`.
//!
//! Call the slab of the orientation under consideration the grid slab and
//! the other one the free slab. Some optimal pair has a point from the
//! extreme points of the input (top and bottom for one orientation, the two
//! extremes for the other) in each slab, which gives a handful of anchor
//! pairs and, by a greedy split, a 2-approximation `w̃`. Around the grid
//! anchor, horizontal lines spaced `εw̃/4` apart contain the grid slab of a
//! `(1 + ε)`-approximate pair between two of them. With per-line extremes of
//! the points above and below, each candidate is checked in constant time,
//! and the cheapest feasible one is found by walking the staircase of the
//! sorted feasibility matrix.

use crate::degenerate::zero_width_solution;
use crate::error::{Error, Result};
use crate::geom::{project, tolerance, Orientation, Point, Slab, SlabPair};
use crate::solution::{Mode, Problem, Solution};

/// Indices of the four extreme points: highest and lowest along the normal
/// of `theta1`, then highest and lowest along the normal of `theta2`. Ties
/// go to the point further along each orientation's direction, so distinct
/// corners of a parallelogram stay distinct.
fn extremes(pts: &[Point], theta1: Orientation, theta2: Orientation) -> [usize; 4] {
    let pick = |theta: Orientation, sign: f64| {
        let key = |p: Point| (sign * project(p, theta), sign * p.dot(theta.direction()));
        (0..pts.len())
            .max_by(|&a, &b| {
                let (ka, kb) = (key(pts[a]), key(pts[b]));
                ka.0.total_cmp(&kb.0).then(ka.1.total_cmp(&kb.1)).then(b.cmp(&a))
            })
            .expect("nonempty")
    };
    [pick(theta1, 1.0), pick(theta1, -1.0), pick(theta2, 1.0), pick(theta2, -1.0)]
}

/// All ordered pairs of distinct points among the extremes. In some optimal
/// pair the first point lies in the `theta1` slab and the second in the
/// `theta2` slab.
pub fn extreme_pair_candidates(pts: &[Point], theta1: Orientation, theta2: Orientation) -> Result<Vec<(usize, usize)>> {
    if pts.len() < 2 {
        return Err(Error::TooFewPoints { need: 2, got: pts.len() });
    }
    let mut ext: Vec<usize> = Vec::with_capacity(4);
    for k in extremes(pts, theta1, theta2) {
        if !ext.iter().any(|&e| pts[e] == pts[k]) {
            ext.push(k);
        }
    }
    let mut out = Vec::with_capacity(12);
    for &a in &ext {
        for &b in &ext {
            if a != b {
                out.push((a, b));
            }
        }
    }
    Ok(out)
}

fn check_orientations(theta1: Orientation, theta2: Orientation) -> Result<Problem> {
    if theta1 == theta2 {
        return Err(Error::UseParallelSolver);
    }
    Ok(Problem::TwoFixed { theta1, theta2 })
}

/// Smallest slab of orientation `theta` around `values` (offsets along its
/// normal), or the line through `fallback` when there are none.
fn slab_around(values: impl Iterator<Item = f64>, theta: Orientation, fallback: f64) -> Slab {
    let (lo, hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
    if lo > hi {
        Slab::line(theta, fallback)
    } else {
        Slab::new(theta, lo, hi)
    }
}

/// The greedy split for one anchor pair: a point joins the `theta1` slab
/// when it is strictly closer to the `theta1` line through `pts[a]` than to
/// the `theta2` line through `pts[b]`.
fn greedy_pair(pts: &[Point], theta1: Orientation, theta2: Orientation, a: usize, b: usize) -> SlabPair {
    let h: Vec<f64> = pts.iter().map(|&p| project(p, theta1)).collect();
    let g: Vec<f64> = pts.iter().map(|&p| project(p, theta2)).collect();
    let first = (0..pts.len()).filter(|&k| (h[k] - h[a]).abs() < (g[k] - g[b]).abs());
    let second = (0..pts.len()).filter(|&k| (h[k] - h[a]).abs() >= (g[k] - g[b]).abs());
    SlabPair::new(slab_around(first.map(|k| h[k]), theta1, h[a]), slab_around(second.map(|k| g[k]), theta2, g[b]))
}

/// A pair within twice the optimum, in linear time.
pub fn two_approx(pts: &[Point], theta1: Orientation, theta2: Orientation) -> Result<Solution> {
    let problem = check_orientations(theta1, theta2)?;
    if pts.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    if let Some(s) = zero_width_solution(pts, problem) {
        return Ok(s);
    }
    let pair = extreme_pair_candidates(pts, theta1, theta2)?
        .into_iter()
        .map(|(a, b)| greedy_pair(pts, theta1, theta2, a, b))
        .min_by(|x, y| x.max_width().total_cmp(&y.max_width()))
        .expect("at least two distinct extremes");
    Ok(Solution::new(pair, pair.max_width(), problem, Mode::Constant { factor: 2.0 }))
}

/// Offsets along the grid orientation's normal (`height`) and along the
/// free orientation's normal (`cross`) of a point set.
#[derive(Debug, Clone)]
struct Coords {
    height: Vec<f64>,
    cross: Vec<f64>,
}

/// Range of cross offsets, `(min, max)`; `None` for no points.
type Range = Option<(f64, f64)>;

fn join(a: Range, b: Range) -> Range {
    match (a, b) {
        (Some(x), Some(y)) => Some((x.0.min(y.0), x.1.max(y.1))),
        (x, None) => x,
        (None, y) => y,
    }
}

/// Equally spaced lines across the grid anchor, with the cross-offset range
/// of the points strictly above and strictly below each line.
#[derive(Debug, Clone)]
pub struct GridLines {
    /// Heights of the lines, increasing.
    pub offsets: Vec<f64>,
    pub spacing: f64,
    above: Vec<Range>,
    below: Vec<Range>,
}

impl GridLines {
    /// `2⌈4/ε⌉ + 1` lines at `base + (εw̃/4)·(i - ⌈4/ε⌉)`.
    pub fn new(height: &[f64], cross: &[f64], base: f64, wtilde: f64, eps: f64) -> Result<Self> {
        if !(wtilde > 0.0) || !(eps > 0.0) || !wtilde.is_finite() || !eps.is_finite() {
            return Err(Error::InvalidParameter(format!("need w̃ > 0 and ε > 0; got {wtilde}, {eps}")));
        }
        let half = (4.0 / eps).ceil() as usize;
        let t = 2 * half + 1;
        let spacing = eps * wtilde / 4.0;
        let offsets: Vec<f64> = (0..t).map(|i| base + spacing * (i as f64 - half as f64)).collect();
        // A point sits strictly above the first `over` lines and strictly
        // below the lines from `under` on.
        let mut above_bucket: Vec<Range> = vec![None; t + 1];
        let mut below_bucket: Vec<Range> = vec![None; t + 1];
        for (&h, &c) in height.iter().zip(cross) {
            let guess = ((h - base) / spacing).floor() + half as f64 + 1.0;
            let mut over = guess.clamp(0.0, t as f64) as usize;
            while over > 0 && !(offsets[over - 1] < h) {
                over -= 1;
            }
            while over < t && offsets[over] < h {
                over += 1;
            }
            let mut under = over;
            while under < t && offsets[under] <= h {
                under += 1;
            }
            above_bucket[over] = join(above_bucket[over], Some((c, c)));
            below_bucket[under] = join(below_bucket[under], Some((c, c)));
        }
        let mut above = vec![None; t];
        let mut acc = above_bucket[t];
        for i in (0..t).rev() {
            above[i] = acc;
            acc = join(acc, above_bucket[i]);
        }
        let mut below = vec![None; t];
        let mut acc = None;
        for i in 0..t {
            acc = join(acc, below_bucket[i]);
            below[i] = acc;
        }
        Ok(GridLines { offsets, spacing, above, below })
    }

    pub fn len(&self) -> usize {
        self.offsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.offsets.is_empty()
    }

    /// Cross-offset range of the points strictly outside the slab between
    /// lines `i <= j`: those above line `j` and those below line `i`.
    pub fn residual(&self, i: usize, j: usize) -> Option<(f64, f64)> {
        join(self.above[j], self.below[i])
    }

    pub fn residual_width(&self, i: usize, j: usize) -> f64 {
        self.residual(i, j).map_or(0.0, |(lo, hi)| hi - lo)
    }

    /// The feasibility matrix: the gap between lines `i` and `j` when
    /// `i <= j` and the residual fits in a slab that wide, else `None`.
    /// Rows are non-decreasing and columns non-increasing.
    pub fn entry(&self, i: usize, j: usize) -> Option<f64> {
        if i > j {
            return None;
        }
        let gap = self.offsets[j] - self.offsets[i];
        (gap >= self.residual_width(i, j)).then_some(gap)
    }

    /// Position of the smallest entry. The first feasible column of each
    /// row never moves left as the row index grows, so one walk along that
    /// staircase visits every row's best entry.
    pub fn smallest_entry(&self) -> Option<(usize, usize)> {
        let t = self.len();
        let mut best: Option<(f64, usize, usize)> = None;
        let mut j = 0;
        for i in 0..t {
            j = j.max(i);
            while j < t && self.entry(i, j).is_none() {
                j += 1;
            }
            if j == t {
                break;
            }
            let gap = self.offsets[j] - self.offsets[i];
            if best.map_or(true, |b| gap < b.0) {
                best = Some((gap, i, j));
            }
        }
        best.map(|b| (b.1, b.2))
    }
}

/// One run with the grid on `grid` (slab orientation of the grid slab) and
/// the free slab at `free`, anchored at `pts[a]`. Returns `(grid slab, free
/// slab)` tightened to the points they cover.
fn grid_run(
    c: &Coords,
    grid: Orientation,
    free: Orientation,
    a: usize,
    wtilde: f64,
    eps: f64,
) -> Result<Option<(Slab, Slab)>> {
    let lines = GridLines::new(&c.height, &c.cross, c.height[a], wtilde, eps)?;
    let Some((i, j)) = lines.smallest_entry() else {
        return Ok(None);
    };
    let (lo, hi) = (lines.offsets[i], lines.offsets[j]);
    let inside = (0..c.height.len()).filter(|&k| c.height[k] >= lo && c.height[k] <= hi);
    let grid_slab = slab_around(inside.map(|k| c.height[k]), grid, lo);
    let free_slab = match lines.residual(i, j) {
        Some((l, h)) => Slab::new(free, l, h),
        None => Slab::line(free, c.cross[a]),
    };
    Ok(Some((grid_slab, free_slab)))
}

/// A `(1 + ε)`-approximate pair in `O(n + 1/ε)` time per anchor pair.
pub fn approx(pts: &[Point], theta1: Orientation, theta2: Orientation, eps: f64) -> Result<Solution> {
    let problem = check_orientations(theta1, theta2)?;
    if !(eps > 0.0) || !eps.is_finite() {
        return Err(Error::InvalidParameter(format!("epsilon must be positive, got {eps}")));
    }
    if pts.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    if let Some(s) = zero_width_solution(pts, problem) {
        return Ok(s);
    }
    let seed = two_approx(pts, theta1, theta2)?;
    let wtilde = seed.width;
    if !(wtilde > 0.0) {
        // Zero within rounding but missed by the tolerance check.
        return Ok(seed);
    }
    let h: Vec<f64> = pts.iter().map(|&p| project(p, theta1)).collect();
    let g: Vec<f64> = pts.iter().map(|&p| project(p, theta2)).collect();
    // The grid on the first orientation, then on the second.
    let frames = [Coords { height: h.clone(), cross: g.clone() }, Coords { height: g, cross: h }];
    // The grid runs contain a (1 + ε)-approximate pair, so the minimum over
    // them and the seed carries that guarantee.
    let mut best = Solution::new(seed.pair, seed.width, problem, Mode::Approx { epsilon: eps });
    for (a, b) in extreme_pair_candidates(pts, theta1, theta2)? {
        for (role, c) in frames.iter().enumerate() {
            let (grid, free, anchor) = if role == 0 { (theta1, theta2, a) } else { (theta2, theta1, b) };
            let Some((gs, fs)) = grid_run(c, grid, free, anchor, wtilde, eps)? else {
                continue;
            };
            let pair = if role == 0 { SlabPair::new(gs, fs) } else { SlabPair::new(fs, gs) };
            let w = pair.max_width();
            if w < best.width {
                best = Solution::new(pair, w, problem, Mode::Approx { epsilon: eps });
            }
        }
    }
    debug_assert!(best.covers(pts, tolerance(pts)));
    Ok(best)
}
