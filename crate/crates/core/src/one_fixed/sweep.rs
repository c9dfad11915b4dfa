//! The sweep behind the decision procedure.
//!
//! In a frame where the fixed orientation is horizontal, the fixed slab of
//! width `ω` slides downward. At every moment the points split into those
//! above it (`A`), those inside, and those below it (`B`). Only the maximal
//! positions matter, and they change one point at a time: either the top
//! point of `B` enters the slab or the bottom point of the slab leaves it into
//! `A`. Both hulls are kept incrementally, `A` by insertions at the bottom
//! and `B` by deletions at the top.
//!
//! When `A` dominates `B`, the residual `A ∪ B` fits in a slab of width
//! `ω` iff `A` does over the orientation range between the two outer
//! tangents. When it does not, a mirrored sweep finds the configuration
//! with the roles of the two sets swapped.

use super::window::{WindowHull, WindowStats};
use crate::chain::outer_tangents;
use crate::geom::{cmp_desc, to_frame, Orientation, Point};
use std::f64::consts::PI;

/// Points of an instance in a working frame, sorted top to bottom. Distinct
/// caller points can land on the same frame point after rotation; the frame
/// keeps one copy and remembers all of them.
#[derive(Debug, Clone)]
pub(crate) struct Frame {
    pub pts: Vec<Point>,
    /// Caller indices in frame order, grouped by frame point.
    pub orig: Vec<usize>,
    /// Frame point `k` stands for `orig[start[k]..start[k + 1]]`.
    pub start: Vec<usize>,
}

impl Frame {
    /// The downward frame and its mirror (coordinates negated, so the sweep
    /// runs upward in caller terms).
    pub fn pair(pts: &[Point], theta: Orientation) -> [Frame; 2] {
        let (s, c) = theta.radians().sin_cos();
        let rotated: Vec<Point> = pts.iter().map(|&p| to_frame(p, s, c)).collect();
        let mut order: Vec<usize> = (0..pts.len()).collect();
        order.sort_by(|&a, &b| cmp_desc(&rotated[a], &rotated[b]));
        let down = Frame::grouped(order.iter().map(|&i| (i, rotated[i])));
        let up = Frame::grouped(order.iter().rev().map(|&i| (i, -rotated[i])));
        [down, up]
    }

    fn grouped(sorted: impl Iterator<Item = (usize, Point)>) -> Frame {
        let mut f = Frame { pts: Vec::new(), orig: Vec::new(), start: Vec::new() };
        for (i, p) in sorted {
            if f.pts.last() != Some(&p) {
                f.pts.push(p);
                f.start.push(f.orig.len());
            }
            f.orig.push(i);
        }
        f.start.push(f.orig.len());
        f
    }

    /// Caller indices of frame points `range`.
    pub fn members(&self, range: std::ops::Range<usize>) -> &[usize] {
        &self.orig[self.start[range.start]..self.start[range.end]]
    }

    pub fn len(&self) -> usize {
        self.pts.len()
    }
}

/// A sweep state: the fixed slab holds frame positions `i..j`, `A` is `..i`
/// and `B` is `j..`. `value` bounds the residual width from above and
/// `theta` (frame orientation) attains it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Hit {
    pub i: usize,
    pub j: usize,
    pub theta: f64,
    pub value: f64,
}

/// What a dominance test saw at one state, for instrumentation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct StateView {
    pub i: usize,
    pub j: usize,
    pub t1: f64,
    pub t2: f64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SweepStats {
    pub states: usize,
    pub upper: WindowStats,
    pub lower: WindowStats,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Goal {
    /// Stop at the first state whose residual fits in `ω`.
    Decide,
    /// Visit every state and keep the smallest residual bound.
    Track,
}

/// Tangent orientations closer than this count as equal.
const ANGLE_SLACK: f64 = 1e-12;

pub(crate) fn sweep(f: &Frame, omega: f64, goal: Goal) -> (Option<Hit>, SweepStats) {
    sweep_observed(f, omega, omega, goal, |_| {})
}

/// The sweep with the fixed slab `slab` wide and the residual allowed
/// `omega`.
pub(crate) fn sweep_observed(
    f: &Frame,
    slab: f64,
    omega: f64,
    goal: Goal,
    mut observe: impl FnMut(StateView),
) -> (Option<Hit>, SweepStats) {
    let y = |k: usize| f.pts[k].y;
    let n = f.len();
    let mut stats = SweepStats::default();
    if n == 0 {
        return (None, stats);
    }
    let mut j = (1..n).find(|&k| y(0) - y(k) > slab).unwrap_or(n);
    let mut upper = WindowHull::new();
    let mut lower = WindowHull::from_sorted(&f.pts[j..]);
    upper.insert_below(f.pts[0]).expect("sorted input");
    let mut i = 1usize;
    let mut best: Option<Hit> = None;
    // Orientation range already tested for the current run of dominating
    // states; `A` only grows within a run, so a range that failed stays failed.
    let mut tested: Option<(f64, f64)> = None;

    loop {
        stats.states += 1;
        let ha = upper.hull().expect("upper hull lives in one part");
        let hit = if j == n {
            let (w, t) = ha.min_width_in(0.0, PI);
            Some(Hit { i, j, theta: t, value: w })
        } else {
            let hb = lower.hull().expect("lower hull lives in one part");
            let (t1, t2, _) = outer_tangents(&ha, &hb);
            observe(StateView { i, j, t1, t2 });
            if t1 <= t2 + ANGLE_SLACK {
                // Coinciding tangents can come out a rounding error apart.
                let t2 = t2.max(t1);
                let (w, t) = match tested {
                    Some((c1, c2)) if t1 <= c1 && c2 <= t2 => {
                        let a = ha.min_width_in(t1, c1);
                        let b = ha.min_width_in(c2, t2);
                        if b.0 < a.0 {
                            b
                        } else {
                            a
                        }
                    }
                    _ => ha.min_width_in(t1, t2),
                };
                tested = Some((t1, t2));
                Some(Hit { i, j, theta: t, value: w })
            } else {
                tested = None;
                None
            }
        };
        if let Some(h) = hit {
            match goal {
                Goal::Decide if h.value <= omega => {
                    best = Some(h);
                    break;
                }
                Goal::Track if best.map_or(true, |b| h.value < b.value) => best = Some(h),
                _ => {}
            }
        }
        if j == n {
            break;
        }
        if y(i) - y(j) <= slab {
            lower.delete_top().expect("lower window nonempty");
            j += 1;
        } else {
            upper.insert_below(f.pts[i]).expect("sorted input");
            i += 1;
            // `A` only grows, so once it is wider than `ω` no later state
            // fits. Checked at doubling sizes to keep the cost linear.
            if goal == Goal::Decide && i.is_power_of_two() && i >= 4 {
                let ha = upper.hull().expect("upper hull lives in one part");
                if ha.min_width_in(0.0, PI).0 > omega {
                    break;
                }
            }
        }
    }
    stats.upper = upper.stats();
    stats.lower = lower.stats();
    (best, stats)
}
