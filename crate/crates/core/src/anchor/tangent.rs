//! Inner common tangents of two separable point sets.
//!
//! Work in a frame where the first point of `P` is the origin and the first
//! point of `Q` sits at `(1, 0)`. A separating line `x = a·y + b` has all of
//! `P` on its left and all of `Q` on its right; these conditions are linear
//! in `(a, b)`, and the two inner tangents are the separating lines of
//! largest and smallest `a`. Each is one small linear program, solved with
//! Seidel's randomized incremental algorithm in expected linear time.
//!
//! When the feasible region is unbounded in `a` (all separating lines
//! include near-horizontal ones, as for collinear clusters), or with the
//! `hull-tangents` feature, the tangents come from the convex hulls instead.

use crate::error::{Error, Result};
use crate::geom::{convex_hull, Point};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Tangent points of the two inner common tangents, as indices into `P`
/// and `Q`: the first tangent touches `P[p1]` and `Q[q1]`, the second
/// `P[p2]` and `Q[q2]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InnerTangents {
    pub p1: usize,
    pub p2: usize,
    pub q1: usize,
    pub q2: usize,
}

/// Bound on the slope parameter; hitting it means the region is unbounded.
const SLOPE_BOX: f64 = 1e6;
const OFFSET_BOX: f64 = 1e8;

/// `alpha·a + beta·b <= gamma` with `beta = ±1`.
#[derive(Debug, Clone, Copy)]
struct Half {
    alpha: f64,
    beta: f64,
    gamma: f64,
}

/// Maximizes `a`, then `b`, subject to `cons` and the box. `None` when
/// infeasible.
fn seidel_max_a(cons: &[Half], order: &[usize]) -> Option<(f64, f64)> {
    let (mut a, mut b) = (SLOPE_BOX, OFFSET_BOX);
    for (k, &ci) in order.iter().enumerate() {
        let c = cons[ci];
        if c.alpha * a + c.beta * b <= c.gamma {
            continue;
        }
        // On the boundary line, b = b0 - s·a.
        let b0 = c.gamma / c.beta;
        let s = c.alpha / c.beta;
        let (mut lo, mut hi) = (-SLOPE_BOX, SLOPE_BOX);
        let mut clip = |coef: f64, rhs: f64| -> bool {
            if coef > 0.0 {
                hi = hi.min(rhs / coef);
            } else if coef < 0.0 {
                lo = lo.max(rhs / coef);
            } else if rhs < -1e-12 {
                return false;
            }
            true
        };
        // |b| <= OFFSET_BOX.
        if !clip(-s, OFFSET_BOX - b0) || !clip(s, OFFSET_BOX + b0) {
            return None;
        }
        for &cj in &order[..k] {
            let d = cons[cj];
            if !clip(d.alpha - d.beta * s, d.gamma - d.beta * b0) {
                return None;
            }
        }
        if lo > hi + 1e-12 {
            return None;
        }
        a = hi.max(lo);
        b = b0 - s * a;
    }
    Some((a, b))
}

pub fn inner_tangent_extremes(p: &[Point], q: &[Point]) -> Result<InnerTangents> {
    if p.is_empty() || q.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    if cfg!(feature = "hull-tangents") {
        return by_hulls(p, q);
    }
    by_programs(p, q).map_or_else(|| by_hulls(p, q), Ok)
}

fn by_programs(p: &[Point], q: &[Point]) -> Option<InnerTangents> {
    let o = p[0];
    let axis = q[0] - o;
    let d2 = axis.dot(axis);
    if d2 == 0.0 {
        return None;
    }
    let frame = |r: Point| {
        let v = r - o;
        Point::new(axis.dot(v) / d2, axis.cross(v) / d2)
    };
    let fp: Vec<Point> = p.iter().map(|&r| frame(r)).collect();
    let fq: Vec<Point> = q.iter().map(|&r| frame(r)).collect();
    // P: x - a·y - b <= 0.  Q: x - a·y - b >= 0.
    let mut cons: Vec<Half> = Vec::with_capacity(p.len() + q.len());
    cons.extend(fp.iter().map(|r| Half { alpha: -r.y, beta: -1.0, gamma: -r.x }));
    cons.extend(fq.iter().map(|r| Half { alpha: r.y, beta: 1.0, gamma: r.x }));
    let mut order: Vec<usize> = (0..cons.len()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ cons.len() as u64);
    order.shuffle(&mut rng);

    let (a1, b1) = seidel_max_a(&cons, &order)?;
    let flipped: Vec<Half> = cons.iter().map(|c| Half { alpha: -c.alpha, ..*c }).collect();
    let (na2, b2) = seidel_max_a(&flipped, &order)?;
    let a2 = -na2;
    let cap = SLOPE_BOX * (1.0 - 1e-9);
    if a1.abs() >= cap || a2.abs() >= cap {
        return None;
    }
    let touch = |pts: &[Point], a: f64, b: f64, sign: f64| -> usize {
        let mut best = (f64::INFINITY, 0usize);
        for (i, r) in pts.iter().enumerate() {
            let res = sign * (a * r.y + b - r.x);
            if res < best.0 {
                best = (res, i);
            }
        }
        best.1
    };
    Some(InnerTangents {
        p1: touch(&fp, a1, b1, 1.0),
        q1: touch(&fq, a1, b1, -1.0),
        p2: touch(&fp, a2, b2, 1.0),
        q2: touch(&fq, a2, b2, -1.0),
    })
}

/// Every line through a hull vertex of each set, classified by the side `P`
/// falls on; among separating lines of each kind the closest vertex pair
/// wins.
fn by_hulls(p: &[Point], q: &[Point]) -> Result<InnerTangents> {
    let hp = convex_hull(p);
    let hq = convex_hull(q);
    let scale =
        hp.iter().map(|&i| p[i]).chain(hq.iter().map(|&j| q[j])).fold(0.0f64, |m, r| m.max(r.x.abs()).max(r.y.abs()));
    let mut left: Option<(f64, usize, usize)> = None;
    let mut right: Option<(f64, usize, usize)> = None;
    for &i in &hp {
        for &j in &hq {
            let d = q[j] - p[i];
            let len = d.norm();
            if len == 0.0 {
                return Err(Error::HullsIntersect);
            }
            let eps = 1e-12 * len * scale.max(1.0);
            let side = |r: Point| d.cross(r - p[i]);
            let p_left = hp.iter().all(|&k| side(p[k]) >= -eps);
            let p_right = hp.iter().all(|&k| side(p[k]) <= eps);
            let q_left = hq.iter().all(|&k| side(q[k]) >= -eps);
            let q_right = hq.iter().all(|&k| side(q[k]) <= eps);
            let better = |cur: &Option<(f64, usize, usize)>| cur.map_or(true, |c| (len, i, j) < c);
            if p_left && q_right && better(&left) {
                left = Some((len, i, j));
            }
            if p_right && q_left && better(&right) {
                right = Some((len, i, j));
            }
        }
    }
    match (left, right) {
        (Some((_, p1, q1)), Some((_, p2, q2))) => Ok(InnerTangents { p1, p2, q1, q2 }),
        _ => Err(Error::HullsIntersect),
    }
}
