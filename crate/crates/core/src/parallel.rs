//! Two parallel slabs.
//!
//! For interior-disjoint parallel slabs, let `W` be the largest and `g` the
//! smallest distance between a boundary of one and a boundary of the other;
//! `g/W` is the gap ratio. Optimal pairs with a small gap ratio are found by
//! trying a fan of orientations around a far pair of points, each solved in
//! linear time. Pairs with a large gap ratio come from an exact search over
//! the separable splits of a certificate. [`solve`] runs both on one
//! certificate and keeps the better pair.
//!
//! The exact large-gap search is a rotational sweep. Between two consecutive
//! orientations at which some pair of points has equal offsets, the sorted
//! order of the offsets is fixed, every split is a prefix of it, and the two
//! widths, the gap and the span are each a single sinusoid in the angle.
//! Within such an interval the widths are concave, so the best feasible
//! angle is an endpoint, a root of the gap-ratio constraint, or a crossing of
//! the two widths.

use crate::coreset::{certificate_2d, certificate_from_seed, expand_pair};
use crate::degenerate::{zero_width_pair, zero_width_solution};
use crate::error::{Error, Result};
use crate::geom::{
    diameter_2approx, min_parallel_pair_at_orientation, project, project_sc, width_exact, Orientation, Point, Slab,
    SlabPair,
};
use crate::solution::{Mode, Problem, Solution};
use std::f64::consts::PI;

/// The gap ratio separating the two cases.
pub const GAP_RHO: f64 = 0.5;

/// How much of `ε` each stage gets, as for the general solver.
pub const EPS_FOLD: f64 = 3.0;

/// `2 + 2ρ/(1 - ρ)`: how far the small-gap seed width can exceed the
/// optimum.
pub fn seed_factor(rho: f64) -> f64 {
    2.0 + 2.0 * rho / (1.0 - rho)
}

/// Boundary distances of a parallel pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GapMetrics {
    /// Largest boundary-to-boundary distance.
    pub span: f64,
    /// Smallest boundary-to-boundary distance; negative when the slabs
    /// overlap.
    pub gap: f64,
    /// `gap / span`, defined for interior-disjoint slabs with `span > 0`.
    pub ratio: Option<f64>,
}

impl GapMetrics {
    pub fn disjoint(&self) -> bool {
        self.gap >= 0.0
    }
}

pub fn gap_metrics(pair: &SlabPair) -> Result<GapMetrics> {
    if pair.first.orientation != pair.second.orientation {
        return Err(Error::NotParallel);
    }
    let (a, b) = if pair.first.lo <= pair.second.lo { (pair.first, pair.second) } else { (pair.second, pair.first) };
    let span = a.hi.max(b.hi) - a.lo;
    let gap = b.lo - a.hi;
    let ratio = (gap >= 0.0 && span > 0.0).then(|| gap / span);
    Ok(GapMetrics { span, gap, ratio })
}

fn check_eps(eps: f64) -> Result<()> {
    if !(eps > 0.0) || !eps.is_finite() {
        return Err(Error::InvalidParameter(format!("epsilon must be positive, got {eps}")));
    }
    Ok(())
}

fn check_rho(rho: f64) -> Result<()> {
    if !(0.5..1.0).contains(&rho) {
        return Err(Error::InvalidParameter(format!("gap ratio must lie in [1/2, 1), got {rho}")));
    }
    Ok(())
}

/// Half the width of the input: at least the optimum, and at most
/// [`seed_factor`] times it when some optimal pair has gap ratio at most
/// [`GAP_RHO`].
pub fn small_gap_seed(pts: &[Point]) -> f64 {
    0.5 * width_exact(pts).0
}

/// Orientations `φ + (i - ⌈1/δ⌉)·δ·θ`, `i = 0..=2⌈1/δ⌉`, with `φ` the
/// orientation of `pq`, `sin θ = min(1, c·w̃/|pq|)` and
/// `δ = min(2/3, √3ε/(4c²), ε/(4πc²))` for `c` = [`seed_factor`].
pub fn small_gap_orientations(p: Point, q: Point, wtilde: f64, eps: f64) -> Result<Vec<Orientation>> {
    check_eps(eps)?;
    if p == q {
        return Err(Error::IdenticalPoints);
    }
    if !(wtilde >= 0.0) {
        return Err(Error::NegativeWidth(wtilde));
    }
    let c = seed_factor(GAP_RHO);
    let delta = (2.0f64 / 3.0).min(3f64.sqrt() * eps / (4.0 * c * c)).min(eps / (4.0 * PI * c * c));
    let half = (c * wtilde / p.dist(q)).min(1.0).asin();
    let m = (1.0 / delta).ceil() as i64;
    let base = Orientation::of_vector(q - p).radians();
    Ok((0..=2 * m).map(|i| Orientation::new(base + (i - m) as f64 * delta * half)).collect())
}

/// Best pair over [`small_gap_orientations`] of a far pair of `pts`.
/// Within `1 + ε` of the optimum when some optimal pair has gap ratio at
/// most [`GAP_RHO`].
pub fn small_gap_solve(pts: &[Point], eps: f64) -> Result<Solution> {
    check_eps(eps)?;
    if pts.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    if let Some(s) = zero_width_solution(pts, Problem::Parallel) {
        return Ok(s);
    }
    let (a, b) = diameter_2approx(pts)?;
    let wtilde = small_gap_seed(pts);
    let limit = 2.0 * GAP_RHO / (1.0 - GAP_RHO);
    let mut best: Option<SlabPair> = None;
    for gamma in small_gap_orientations(pts[a], pts[b], wtilde, eps)? {
        let pair = min_parallel_pair_at_orientation(pts, gamma)?;
        let m = gap_metrics(&pair)?;
        if let Some(r) = m.ratio {
            debug_assert!(r > GAP_RHO || m.gap <= limit * pair.max_width() * (1.0 + 1e-9));
        }
        if best.map_or(true, |b| pair.max_width() < b.max_width()) {
            best = Some(pair);
        }
    }
    let pair = best.expect("at least one orientation");
    Ok(Solution::new(pair, pair.max_width(), Problem::Parallel, Mode::Approx { epsilon: eps }))
}

/// Event angles closer than this are treated as one event.
const SAME_EVENT: f64 = 1e-12;

/// `A·sin t + B·cos t`, the offset difference of two points along the
/// normal of angle `t`.
#[derive(Debug, Clone, Copy)]
struct Wave {
    a: f64,
    b: f64,
}

impl Wave {
    /// Offset of `p` minus offset of `q`.
    fn between(p: Point, q: Point) -> Wave {
        let d = p - q;
        Wave { a: -d.x, b: d.y }
    }

    fn at(self, t: f64) -> f64 {
        let (s, c) = t.sin_cos();
        self.a * s + self.b * c
    }

    fn minus(self, o: Wave, k: f64) -> Wave {
        Wave { a: self.a - k * o.a, b: self.b - k * o.b }
    }

    /// Roots inside `[lo, hi]`.
    fn roots_in(self, lo: f64, hi: f64, out: &mut Vec<f64>) {
        if self.a == 0.0 && self.b == 0.0 {
            return;
        }
        let r = (-self.b).atan2(self.a);
        let mut t = r + ((lo - r) / PI).ceil() * PI;
        while t <= hi {
            out.push(t);
            t += PI;
        }
    }
}

/// Exact best pair among those whose slabs each hold a point, are
/// interior-disjoint and have gap ratio at least `rho`. `None` when there is
/// no such pair, or, given `below`, none narrower than `below`.
pub fn large_gap_pair(pts: &[Point], rho: f64, below: Option<f64>) -> Result<Option<SlabPair>> {
    check_rho(rho)?;
    let n = pts.len();
    let mut events: Vec<(f64, u32, u32)> = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            if pts[i] != pts[j] {
                let a = Orientation::of_vector(pts[j] - pts[i]).radians();
                events.push((if a > PI - SAME_EVENT { a - PI } else { a }, i as u32, j as u32));
            }
        }
    }
    if events.is_empty() {
        return Ok(None);
    }
    events.sort_by(|a, b| a.0.total_cmp(&b.0));
    // Start of each run of angles within `SAME_EVENT` of its first; the
    // angles of parallel pairs can differ in the last bits.
    let mut starts: Vec<usize> = vec![0];
    for e in 1..events.len() {
        if events[e].0 - events[starts[starts.len() - 1]].0 > SAME_EVENT {
            starts.push(e);
        }
    }
    let groups = starts.len();
    starts.push(events.len());
    let angle = |g: usize| if g < groups { events[starts[g]].0 } else { events[0].0 + PI };

    let sort_at = |order: &mut [usize], t: f64| {
        let (s, c) = t.sin_cos();
        order.sort_by(|&x, &y| project_sc(pts[x], s, c).total_cmp(&project_sc(pts[y], s, c)));
    };
    let mut order: Vec<usize> = (0..n).collect();
    sort_at(&mut order, 0.5 * (angle(0) + angle(1)));
    let mut pos = vec![0usize; n];
    for (k, &o) in order.iter().enumerate() {
        pos[o] = k;
    }
    let mut search = Search { pts, rho, bound: below.unwrap_or(f64::INFINITY), best: None, cand: Vec::new() };
    for g in 0..groups {
        let (lo, hi) = (angle(g), angle(g + 1));
        if g > 0 {
            // Points swapping at `lo` occupy a contiguous block of the order
            // on either side of it; reorder the block for the new interval.
            let (mut a, mut b) = (n, 0);
            for &(_, i, j) in &events[starts[g]..starts[g + 1]] {
                for v in [i, j] {
                    a = a.min(pos[v as usize]);
                    b = b.max(pos[v as usize]);
                }
            }
            sort_at(&mut order[a..=b], 0.5 * (lo + hi));
            for k in a..=b {
                pos[order[k]] = k;
            }
        }
        if hi > lo {
            search.interval(&order, lo, hi);
        }
    }
    let Some((_, t, mid, k)) = search.best else {
        return Ok(None);
    };
    sort_at(&mut order, mid);
    let theta = Orientation::new(t);
    let slab = |ids: &[usize]| {
        let (lo, hi) = ids
            .iter()
            .map(|&i| project(pts[i], theta))
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
        Slab::new(theta, lo, hi)
    };
    Ok(Some(SlabPair::new(slab(&order[..k]), slab(&order[k..]))))
}

struct Search<'a> {
    pts: &'a [Point],
    rho: f64,
    /// Only pairs narrower than this are of interest.
    bound: f64,
    /// (width, angle, interval midpoint, split)
    best: Option<(f64, f64, f64, usize)>,
    cand: Vec<f64>,
}

impl Search<'_> {
    /// All splits of `order` over the angles `[lo, hi]`, in which `order`
    /// is sorted by offset.
    fn interval(&mut self, order: &[usize], lo: f64, hi: f64) {
        let pts = self.pts;
        let n = order.len();
        let (first, last) = (pts[order[0]], pts[order[n - 1]]);
        let span = Wave::between(last, first);
        // Each width is concave on the interval, so it can drop below the
        // bound only if it does so at an end. The lower width grows with
        // the split and the upper one shrinks, so the splits worth trying
        // form a range.
        let (mut kmin, mut kmax) = (n, 0);
        for t in [lo, hi] {
            let (s, c) = t.sin_cos();
            let off = |k: usize| project_sc(pts[order[k]], s, c);
            let (bottom, top) = (off(0), off(n - 1));
            // Splits k in 1..n with lower width off(k-1) - bottom < bound.
            kmax = kmax.max(
                (1..n).len().min(order[..n - 1].partition_point(|&o| project_sc(pts[o], s, c) - bottom < self.bound)),
            );
            // Splits with upper width top - off(k) < bound.
            kmin = kmin.min(1 + order[1..].partition_point(|&o| top - project_sc(pts[o], s, c) >= self.bound));
        }
        for k in kmin.max(1)..=kmax.min(n - 1) {
            let (below, above) = (pts[order[k - 1]], pts[order[k]]);
            let w1 = Wave::between(below, first);
            let w2 = Wave::between(last, above);
            let slack = Wave::between(above, below).minus(span, self.rho);
            self.cand.clear();
            self.cand.extend([lo, hi]);
            slack.roots_in(lo, hi, &mut self.cand);
            w1.minus(w2, 1.0).roots_in(lo, hi, &mut self.cand);
            for &t in &self.cand {
                if slack.at(t) < -1e-12 * span.at(t).abs() {
                    continue;
                }
                let w = w1.at(t).max(w2.at(t));
                if w < self.bound {
                    self.bound = w;
                    self.best = Some((w, t, 0.5 * (lo + hi), k));
                }
            }
        }
    }
}

/// The certificate points of `pts`. Inputs covered by two lines (but not
/// by two parallel ones) are certified on those lines.
fn certify(pts: &[Point], eps: f64) -> Result<Vec<Point>> {
    let cert = match zero_width_pair(pts, Problem::General) {
        Some(lines) if pts.len() as f64 > 1.0 / (eps * eps) => certificate_from_seed(pts, &lines, eps),
        _ => certificate_2d(pts, eps)?,
    };
    Ok(cert.points(pts))
}

/// Runs [`large_gap_pair`] on an `ε`-certificate and expands the result.
/// `None` means no pair with gap ratio at least `rho` exists on the
/// certificate, so the large-gap case does not apply.
pub fn large_gap_solve(pts: &[Point], eps: f64, rho: f64) -> Result<Option<Solution>> {
    check_eps(eps)?;
    check_rho(rho)?;
    if pts.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    if let Some(s) = zero_width_solution(pts, Problem::Parallel) {
        return Ok(Some(s));
    }
    let q = certify(pts, eps)?;
    Ok(large_gap_pair(&q, rho, None)?.map(|pair| {
        let (pair, width) = expand_pair(&pair, pair.max_width(), eps);
        Solution::new(pair, width, Problem::Parallel, Mode::Approx { epsilon: eps })
    }))
}

/// Both cases on one `ε/3`-certificate; the narrower pair is expanded.
pub fn solve(pts: &[Point], eps: f64) -> Result<Solution> {
    check_eps(eps)?;
    if pts.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    if let Some(s) = zero_width_solution(pts, Problem::Parallel) {
        return Ok(s);
    }
    let e = eps / EPS_FOLD;
    let q = certify(pts, e)?;
    let mut best = small_gap_solve(&q, e)?.pair;
    if let Some(pair) = large_gap_pair(&q, GAP_RHO, Some(best.max_width()))? {
        best = pair;
    }
    let (pair, width) = expand_pair(&best, best.max_width(), e);
    Ok(Solution::new(pair, width, Problem::Parallel, Mode::Approx { epsilon: eps }))
}

#[cfg(test)]
mod tests;
