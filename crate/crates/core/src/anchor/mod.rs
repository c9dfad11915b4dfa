//! Anchor pairs and the linear-time 10-approximation.
//!
//! An anchor pair of a covering slab pair is two points inside one of the
//! slabs, at distance at least a quarter of the diameter of the points only
//! that slab covers. [`anchor_candidates`] lists at most 11 pairs such that
//! one of them is an anchor pair of an optimal solution.
//!
//! Given a candidate pair `(p, q)`, let `σ(r)` be the slab centered on the
//! line `pq` reaching out to point `r`. Ordering the points by distance to
//! that line, the width of `σ(r)` grows and the width of the rest shrinks;
//! [`ten_approx`] binary searches for the crossing, estimating the width of
//! the rest with the streaming sketch so that each step costs time linear in
//! the current search range.

mod select;
mod tangent;

pub use tangent::{inner_tangent_extremes, InnerTangents};

use crate::degenerate::zero_width_pair;
use crate::error::{Error, Result};
use crate::geom::{diameter_2approx, project, tolerance, width_at_orientation, Orientation, Point, Slab, SlabPair};
use crate::solution::Problem;
use crate::stream::WidthSketch;
use select::select;
use std::cmp::Ordering;

/// Candidate anchor pairs, as index pairs into the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnchorCandidates {
    pub pairs: Vec<(usize, usize)>,
}

impl AnchorCandidates {
    pub fn points(&self, pts: &[Point]) -> Vec<(Point, Point)> {
        self.pairs.iter().map(|&(a, b)| (pts[a], pts[b])).collect()
    }

    /// Pairs of distinct points, each unordered pair once, in list order.
    pub fn distinct(&self, pts: &[Point]) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::with_capacity(self.pairs.len());
        for &(a, b) in &self.pairs {
            if pts[a] == pts[b] {
                continue;
            }
            let same = |&(c, d): &(usize, usize)| {
                (pts[c] == pts[a] && pts[d] == pts[b]) || (pts[c] == pts[b] && pts[d] == pts[a])
            };
            if !out.iter().any(same) {
                out.push((a, b));
            }
        }
        out
    }
}

/// The candidate list: the far-point case gives three pairs, the two-disk
/// case eleven (possibly with repeats).
pub fn anchor_candidates(pts: &[Point]) -> Result<AnchorCandidates> {
    let (p, q) = diameter_2approx(pts)?;
    let radius = 0.5 * pts[p].dist(pts[q]);
    let tau = tolerance(pts);
    let inside = |r: Point, c: Point| r.dist(c) < radius - tau;
    if let Some(r) = (0..pts.len()).find(|&r| !inside(pts[r], pts[p]) && !inside(pts[r], pts[q])) {
        return Ok(AnchorCandidates { pairs: vec![(p, q), (p, r), (q, r)] });
    }
    let near_p: Vec<usize> = (0..pts.len()).filter(|&r| inside(pts[r], pts[p])).collect();
    let near_q: Vec<usize> = (0..pts.len()).filter(|&r| !inside(pts[r], pts[p])).collect();
    let sub = |ids: &[usize]| ids.iter().map(|&i| pts[i]).collect::<Vec<Point>>();
    let (sp, sq) = (sub(&near_p), sub(&near_q));
    let t = inner_tangent_extremes(&sp, &sq)?;
    let far_pair = |ids: &[usize], s: &[Point]| match diameter_2approx(s) {
        Ok((a, b)) => (ids[a], ids[b]),
        Err(_) => (ids[0], ids[0]),
    };
    let (p3, p4) = far_pair(&near_p, &sp);
    let (q3, q4) = far_pair(&near_q, &sq);
    let (p1, p2) = (near_p[t.p1], near_p[t.p2]);
    let (q1, q2) = (near_q[t.q1], near_q[t.q2]);
    Ok(AnchorCandidates {
        pairs: vec![(p, q), (p3, p4), (q3, q4), (p, q1), (p, q2), (p, q3), (p, q4), (q, p1), (q, p2), (q, p3), (q, p4)],
    })
}

/// An equal-width covering pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ApproxPair {
    pub pair: SlabPair,
    pub width: f64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TenApproxOptions {
    /// Recompute `f` and `g` at both ends of the search range every
    /// iteration and count violations of `f(s) < g(s)`, `f(e) >= g(e)`.
    pub check_invariants: bool,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TenApproxReport {
    pub pairs_tried: usize,
    pub invariant_violations: usize,
    /// Largest number of point visits spent on one candidate pair.
    pub max_work: usize,
}

pub fn ten_approx(pts: &[Point]) -> Result<ApproxPair> {
    ten_approx_with(pts, TenApproxOptions::default()).map(|r| r.0)
}

pub fn ten_approx_with(pts: &[Point], opts: TenApproxOptions) -> Result<(ApproxPair, TenApproxReport)> {
    if pts.len() < 2 {
        return Err(Error::TooFewPoints { need: 2, got: pts.len() });
    }
    if zero_width_pair(pts, Problem::General).is_some() {
        return Err(Error::Degenerate);
    }
    let cand = anchor_candidates(pts)?;
    let mut report = TenApproxReport::default();
    let mut best: Option<ApproxPair> = None;
    for (p, q) in cand.distinct(pts) {
        report.pairs_tried += 1;
        let r = along_pair(pts, p, q, opts, &mut report);
        if best.map_or(true, |b| r.width < b.width) {
            best = Some(r);
        }
    }
    let best = best.ok_or(Error::Degenerate)?;
    if best.width == 0.0 {
        return Err(Error::Degenerate);
    }
    Ok((best, report))
}

/// The binary search along one candidate pair.
fn along_pair(pts: &[Point], p: usize, q: usize, opts: TenApproxOptions, report: &mut TenApproxReport) -> ApproxPair {
    let n = pts.len();
    let theta = Orientation::of_vector(pts[q] - pts[p]);
    let center = project(pts[p], theta);
    let dist: Vec<f64> = pts.iter().map(|&r| (project(r, theta) - center).abs()).collect();
    // Total order on points: distance to the line, then index.
    let cmp = |a: &usize, b: &usize| dist[*a].total_cmp(&dist[*b]).then(a.cmp(b));
    let farthest = (0..n).max_by(cmp).expect("nonempty");
    let f = |r: usize| 2.0 * dist[r];
    // Sketch of the points outside σ(e), always seeded with the farthest.
    let mut sketch = WidthSketch::with_origin(pts[farthest]);
    let with_above = |base: &WidthSketch, range: &[usize], r: usize| {
        let mut s = base.clone();
        for &k in range {
            if k != farthest && cmp(&k, &r) == Ordering::Greater {
                s.insert(pts[k]);
            }
        }
        s
    };
    // Search range, kept in input order.
    let mut range: Vec<usize> = (0..n).collect();
    let mut scratch: Vec<usize> = Vec::with_capacity(n);
    let mut work = 0usize;
    // `g` depends on insertion order, so the invariant is checked against
    // the values the search saw when each end was set, not recomputed ones.
    let mut ends = opts.check_invariants.then(|| {
        let s = *range.iter().min_by(|a, b| cmp(a, b)).unwrap();
        ((s, with_above(&sketch, &range, s).query().unwrap()), (farthest, sketch.query().unwrap()))
    });
    while range.len() > 3 {
        work += range.len();
        if let Some(((s, gs), (e, ge))) = ends {
            if !(f(s) < gs) || !(f(e) >= ge) {
                report.invariant_violations += 1;
            }
        }
        scratch.clear();
        scratch.extend_from_slice(&range);
        let m = select(&mut scratch, (range.len() - 1) / 2, &cmp);
        let g_sketch = with_above(&sketch, &range, m);
        let g = g_sketch.query().expect("seeded sketch");
        if f(m) >= g {
            sketch = g_sketch;
            range.retain(|k| cmp(k, &m) != Ordering::Greater);
            if let Some((_, end)) = ends.as_mut() {
                *end = (m, g);
            }
        } else {
            range.retain(|k| cmp(k, &m) != Ordering::Less);
            if let Some((start, _)) = ends.as_mut() {
                *start = (m, g);
            }
        }
    }
    work += n;
    report.max_work = report.max_work.max(work);

    let (r, g_sketch) = range
        .iter()
        .map(|&r| {
            let s = with_above(&sketch, &range, r);
            (r, s)
        })
        .min_by(|a, b| {
            let va = f(a.0).max(a.1.query().unwrap());
            let vb = f(b.0).max(b.1.query().unwrap());
            va.total_cmp(&vb).then(cmp(&a.0, &b.0))
        })
        .expect("nonempty range");

    let first = Slab::new(theta, center - dist[r], center + dist[r]);
    let outside: Vec<Point> = (0..n).filter(|k| cmp(k, &r) == Ordering::Greater).map(|k| pts[k]).collect();
    let second = match width_at_orientation(&outside, g_sketch.enclosing_slab().expect("seeded").orientation) {
        Ok(e) => e.slab,
        Err(_) => Slab::line(theta, center),
    };
    let width = first.width().max(second.width());
    ApproxPair { pair: SlabPair::new(first, second).equalized(), width }
}

#[cfg(test)]
mod tests;
