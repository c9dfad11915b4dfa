//! Two slabs, the first with a prescribed orientation.
//!
//! [`decide`] answers "do two slabs of width `ω` suffice?" with one sweep in
//! each direction. [`exact`] searches the sorted matrix of vertical gaps with
//! the decision procedure to bracket the optimum between two consecutive
//! candidate widths, then runs one tracking sweep inside the bracket, where
//! the sweep's combinatorics no longer change.

mod sweep;
pub mod window;

pub use sweep::SweepStats;
pub use window::{WindowEvent, WindowHull, WindowStats};

use crate::coreset::reduce_solve_expand;
use crate::degenerate::{zero_width_pair, zero_width_solution};
use crate::error::{Error, Result};
use crate::geom::{project, width_at_orientation, width_exact, Orientation, Point, Slab, SlabPair};
use crate::solution::{Mode, Problem, Solution};
use sweep::{sweep, sweep_observed, Frame, Goal, Hit};

/// An instance prepared for repeated decisions: both sweep frames are sorted
/// once.
#[derive(Debug, Clone)]
pub struct OneFixed<'a> {
    pts: &'a [Point],
    theta: Orientation,
    frames: [Frame; 2],
}

/// Counters from one exact solve.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ExactStats {
    pub decisions: usize,
    pub search_rounds: usize,
}

impl<'a> OneFixed<'a> {
    pub fn new(pts: &'a [Point], theta: Orientation) -> Result<Self> {
        if pts.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        Ok(OneFixed { pts, theta, frames: Frame::pair(pts, theta) })
    }

    fn problem(&self) -> Problem {
        Problem::OneFixed { theta: self.theta }
    }

    /// The first sweep state, over both directions, whose residual fits in
    /// width `omega`.
    fn find(&self, omega: f64) -> Option<(usize, Hit)> {
        (0..2).find_map(|d| sweep(&self.frames[d], omega, Goal::Decide).0.map(|h| (d, h)))
    }

    /// Whether two slabs of width `omega` (the first of the fixed
    /// orientation) cover the instance, without building a witness.
    pub fn feasible(&self, omega: f64) -> Result<bool> {
        if omega < 0.0 || omega.is_nan() {
            return Err(Error::NegativeWidth(omega));
        }
        if omega == 0.0 {
            return Ok(zero_width_pair(self.pts, self.problem()).is_some());
        }
        Ok(self.find(omega).is_some())
    }

    /// Whether a slab of width `slab` at the fixed orientation and a free
    /// slab of width `rest` cover the instance. Both widths must be positive.
    pub fn fits(&self, slab: f64, rest: f64) -> Result<bool> {
        for w in [slab, rest] {
            if !(w > 0.0) {
                return Err(Error::NegativeWidth(w));
            }
        }
        Ok((0..2).any(|d| sweep_observed(&self.frames[d], slab, rest, Goal::Decide, |_| {}).0.is_some()))
    }

    /// A covering pair of width at most `omega`, or `None` if none exists.
    pub fn decide(&self, omega: f64) -> Result<Option<SlabPair>> {
        if omega < 0.0 || omega.is_nan() {
            return Err(Error::NegativeWidth(omega));
        }
        if omega == 0.0 {
            return Ok(zero_width_pair(self.pts, self.problem()));
        }
        Ok(self.find(omega).map(|(d, h)| self.realize(d, &h).0))
    }

    /// Sweep counters for both directions of a decision at `omega`.
    pub fn sweep_stats(&self, omega: f64) -> [SweepStats; 2] {
        [0, 1].map(|d| sweep(&self.frames[d], omega, Goal::Track).1)
    }

    /// The slab pair described by a sweep state, measured on the caller's
    /// points, with its max width.
    fn realize(&self, d: usize, h: &Hit) -> (SlabPair, f64) {
        let f = &self.frames[d];
        let middle: Vec<Point> = f.members(h.i..h.j).iter().map(|&k| self.pts[k]).collect();
        let rest: Vec<Point> = f.members(0..h.i).iter().chain(f.members(h.j..f.len())).map(|&k| self.pts[k]).collect();
        let first = match width_at_orientation(&middle, self.theta) {
            Ok(e) => e.slab,
            Err(_) => Slab::line(self.theta, project(self.pts[0], self.theta)),
        };
        // The residual's width is reported as `width_exact` computes it, so
        // it agrees bit for bit with a direct call on the same set.
        let (second, rest_width) = if rest.is_empty() {
            (Slab::line(self.theta, project(self.pts[0], self.theta)), 0.0)
        } else {
            let (w, phi) = width_exact(&rest);
            (width_at_orientation(&rest, phi).expect("nonempty").slab, w)
        };
        let w = first.width().max(rest_width);
        (SlabPair::new(first, second).equalized(), w)
    }

    pub fn exact(&self) -> Result<Solution> {
        self.exact_with_stats().map(|r| r.0)
    }

    pub fn exact_with_stats(&self) -> Result<(Solution, ExactStats)> {
        let mut stats = ExactStats::default();
        if let Some(s) = zero_width_solution(self.pts, self.problem()) {
            return Ok((s, stats));
        }
        let f = &self.frames[0];
        let y: Vec<f64> = f.pts.iter().map(|p| p.y).collect();
        let n = y.len();
        let (lo, hi) = gap_search(
            &y,
            |w| {
                stats.decisions += 1;
                self.find(w).is_some()
            },
            &mut stats.search_rounds,
        );

        let mut candidates: Vec<(usize, Hit)> = Vec::with_capacity(3);
        let at_hi = self.find(hi).unwrap_or_else(|| {
            // The full-height slab always fits; only reachable if rounding
            // rejects it, in which case the trivial state stands in.
            (0, Hit { i: 1, j: n, theta: 0.0, value: 0.0 })
        });
        stats.decisions += 1;
        candidates.push(at_hi);
        let mid = 0.5 * (lo + hi);
        for d in 0..2 {
            if let (Some(h), _) = sweep(&self.frames[d], mid, Goal::Track) {
                candidates.push((d, h));
            }
        }
        let (pair, width) = candidates
            .iter()
            .map(|(d, h)| self.realize(*d, h))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .expect("at least one candidate");
        Ok((Solution::new(pair, width, self.problem(), Mode::Exact), stats))
    }
}

/// Brackets the optimum between the largest infeasible and the smallest
/// feasible entry of the matrix `y[i] - y[j]`, `i < j`, whose rows and
/// columns are sorted. Each round tests the weighted median of the row
/// medians of the still-undecided entries, which settles at least a quarter
/// of them.
fn gap_search(y: &[f64], mut feasible: impl FnMut(f64) -> bool, rounds: &mut usize) -> (f64, f64) {
    let n = y.len();
    let mut lo = 0.0;
    let mut hi = y[0] - y[n - 1];
    // Row i's undecided columns are a..b, entries strictly inside (lo, hi).
    let first_above = |i: usize, a: usize, b: usize, v: f64| a + y[a..b].partition_point(|&yj| y[i] - yj <= v);
    let first_at_least = |i: usize, a: usize, b: usize, v: f64| a + y[a..b].partition_point(|&yj| y[i] - yj < v);
    let mut rows: Vec<(usize, usize, usize)> = (0..n.saturating_sub(1))
        .map(|i| {
            let a = first_above(i, i + 1, n, lo);
            let b = first_at_least(i, a, n, hi);
            (i, a, b)
        })
        .filter(|&(_, a, b)| a < b)
        .collect();
    let mut meds: Vec<(f64, usize)> = Vec::with_capacity(rows.len());
    while !rows.is_empty() {
        *rounds += 1;
        meds.clear();
        meds.extend(rows.iter().map(|&(i, a, b)| (y[i] - y[a + (b - a) / 2], b - a)));
        meds.sort_by(|p, q| p.0.total_cmp(&q.0));
        let total: usize = meds.iter().map(|m| m.1).sum();
        let mut acc = 0;
        let mut pivot = meds[0].0;
        for &(v, w) in &meds {
            acc += w;
            if 2 * acc >= total {
                pivot = v;
                break;
            }
        }
        if feasible(pivot) {
            hi = pivot;
            for r in rows.iter_mut() {
                r.2 = first_at_least(r.0, r.1, r.2, hi);
            }
        } else {
            lo = pivot;
            for r in rows.iter_mut() {
                r.1 = first_above(r.0, r.1, r.2, lo);
            }
        }
        rows.retain(|&(_, a, b)| a < b);
    }
    (lo, hi)
}

/// Answers whether two slabs of width `omega`, the first of orientation
/// `theta`, cover `pts`; on success returns such a pair.
pub fn decide(pts: &[Point], theta: Orientation, omega: f64) -> Result<Option<SlabPair>> {
    OneFixed::new(pts, theta)?.decide(omega)
}

/// Optimal pair with the first slab of orientation `theta`.
pub fn exact(pts: &[Point], theta: Orientation) -> Result<Solution> {
    OneFixed::new(pts, theta)?.exact()
}

/// A `(1 + ε)`-approximate pair, solved exactly on a small certificate.
pub fn approx(pts: &[Point], theta: Orientation, epsilon: f64) -> Result<Solution> {
    if pts.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let problem = Problem::OneFixed { theta };
    if let Some(s) = zero_width_solution(pts, problem) {
        return Ok(s);
    }
    reduce_solve_expand(pts, epsilon, |q| exact(q, theta))
}
