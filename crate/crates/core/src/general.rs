//! The unrestricted problem, `(1 + ε)`-approximately.
//!
//! If `p` and `q` lie in the same optimal slab and far apart relative to the
//! optimal width, that slab's orientation is within a small angle of the
//! line `pq`. Sampling orientations in that cone finely enough and solving
//! the one-fixed problem exactly for each sample finds a near-optimal pair.
//! The anchor candidates supply the `(p, q)`; the whole search runs on an
//! ε-certificate.
//!
//! The user's `ε` is split three ways: the certificate and the orientation
//! grid each get `ε/3`, and the rest pays for stopping the grid search
//! early (see [`search_slack`]).

use crate::anchor::{anchor_candidates, ten_approx};
use crate::coreset::reduce_solve_expand;
use crate::degenerate::zero_width_solution;
use crate::error::{Error, Result};
use crate::geom::{bbox_diagonal, Orientation, Point};
use crate::one_fixed::OneFixed;
use crate::solution::{Mode, Problem, Solution};
use std::f64::consts::PI;

/// How much of `ε` each stage gets.
pub const EPS_FOLD: f64 = 3.0;

/// The approximation factor of the seed width fed to the orientation grid.
pub const SEED_FACTOR: f64 = 10.0;

/// Grid step as a fraction of the cone half-angle.
pub fn grid_step(c: f64, eps: f64) -> f64 {
    (2.0f64 / 3.0).min(3f64.sqrt() * eps / (8.0 * c)).min(eps / (8.0 * PI * c))
}

/// Orientations `γ_i = φ + (i - ⌈1/δ⌉)·δ·θ` for `i = 0..=2⌈1/δ⌉`, where `φ`
/// is the orientation of `pq` and `sin θ = min(1, w̃/|pq|)`.
pub fn candidate_orientations(p: Point, q: Point, wtilde: f64, c: f64, eps: f64) -> Result<Vec<Orientation>> {
    if p == q {
        return Err(Error::IdenticalPoints);
    }
    if !(wtilde > 0.0) || !(c >= 1.0) || !(eps > 0.0) {
        return Err(Error::InvalidParameter(format!("need w̃ > 0, c >= 1, ε > 0; got {wtilde}, {c}, {eps}")));
    }
    let d = p.dist(q);
    let half = (wtilde / d).min(1.0).asin();
    let delta = grid_step(c, eps);
    let m = (1.0 / delta).ceil() as i64;
    let base = Orientation::of_vector(q - p).radians();
    Ok((0..=2 * m).map(|i| Orientation::new(base + (i - m) as f64 * delta * half)).collect())
}

/// Relative slack `η` the grid search may leave on the table, chosen so
/// that `(1 + e)²/(1 - η) <= 1 + 3e`: the certificate and the grid each
/// cost a factor `1 + e` and the whole budget is `ε = 3e`. Zero for `e >= 1`.
pub fn search_slack(e: f64) -> f64 {
    (0.5 * (e - e * e) / (1.0 + 3.0 * e)).max(0.0)
}

/// Best one-fixed pair over the candidate orientations of every anchor
/// candidate of `pts`, up to a factor `1/(1 - η)`, `η` = [`search_slack`].
///
/// Rather than solving every orientation exactly, the search keeps a target
/// width and asks only whether an orientation beats it. An orientation that
/// does becomes the incumbent and the target drops by factors `1 - η` until
/// it no longer fits there; one exact solve at the last incumbent ends the
/// search. Every orientation ever rejected has an optimum above the final
/// target, which is within `1 - η` of the incumbent's.
///
/// Rejections are batched. Any pair with fixed orientation `γ'` also fits
/// at `γ` once its fixed slab grows by `D·|γ - γ'|`, `D` the diameter of the
/// input, while the free slab stays as it is. So if nothing fits at `γ` with
/// the fixed slab widened by `D·k·step` and the free slab at the target, the
/// next `k` samples on either side are ruled out too. `k` doubles while such
/// tests keep failing.
fn grid_search(pts: &[Point], eps: f64) -> Result<Solution> {
    let seed = ten_approx(pts)?;
    let wtilde = seed.width;
    let diam = bbox_diagonal(pts);
    let eta = search_slack(eps);
    let floor = 1e-12 * diam;
    let mut best = Solution::new(seed.pair, seed.width, Problem::General, Mode::Constant { factor: SEED_FACTOR });
    let mut target = best.width * (1.0 - 1e-12);
    let mut incumbent: Option<Orientation> = None;
    for (a, b) in anchor_candidates(pts)?.distinct(pts) {
        let gammas = candidate_orientations(pts[a], pts[b], wtilde, SEED_FACTOR, eps)?;
        let step = grid_spacing(pts[a], pts[b], wtilde, SEED_FACTOR, eps);
        let mut k = 0;
        let mut reach = 1usize;
        while k < gammas.len() {
            let inst = OneFixed::new(pts, gammas[k])?;
            if reach > 1 && !inst.fits(target + diam * step * reach as f64, target)? {
                k += reach + 1;
                reach *= 2;
                continue;
            }
            if reach > 1 {
                reach = 1;
                continue;
            }
            if !inst.feasible(target)? {
                reach = 2;
            } else if eta > 0.0 {
                incumbent = Some(gammas[k]);
                while target > floor && inst.feasible(target * (1.0 - eta))? {
                    target *= 1.0 - eta;
                }
                target *= 1.0 - eta;
            } else {
                let sol = inst.exact()?;
                if sol.width < best.width {
                    best = Solution::new(sol.pair, sol.width, Problem::General, Mode::Exact);
                    target = sol.width * (1.0 - 1e-12);
                }
            }
            k += 1;
        }
    }
    if let Some(gamma) = incumbent {
        let sol = OneFixed::new(pts, gamma)?.exact()?;
        if sol.width < best.width {
            best = Solution::new(sol.pair, sol.width, Problem::General, Mode::Exact);
        }
    }
    Ok(best)
}

/// Angle between consecutive samples of [`candidate_orientations`].
fn grid_spacing(p: Point, q: Point, wtilde: f64, c: f64, eps: f64) -> f64 {
    grid_step(c, eps) * (wtilde / p.dist(q)).min(1.0).asin()
}

pub fn solve(pts: &[Point], eps: f64) -> Result<Solution> {
    if !(eps > 0.0) || eps.is_infinite() {
        return Err(Error::InvalidParameter(format!("epsilon must be positive, got {eps}")));
    }
    if pts.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    if let Some(s) = zero_width_solution(pts, Problem::General) {
        return Ok(s);
    }
    let e = eps / EPS_FOLD;
    let mut sol = reduce_solve_expand(pts, e, |q| grid_search(q, e))?;
    sol.mode = Mode::Approx { epsilon: eps };
    Ok(sol)
}
