//! ε-expansions and ε-certificates.
//!
//! A subset `Q` of `S` is an ε-certificate when every pair of equal-width
//! slabs covering `Q` covers all of `S` once both slabs are widened by a
//! factor `1 + ε` about their center lines. Solving exactly on `Q` and
//! expanding therefore gives a `(1 + ε)`-approximation on `S`.
//!
//! The 2D construction starts from a constant-factor pair of width `w̃`,
//! fills each of its slabs with parallel lines `δ·w̃` apart (`δ = ε/256`),
//! snaps every point to its nearest line, and keeps a 1D certificate of
//! each line's points. Both line families have `⌊256/ε⌋ + 1` lines and each
//! 1D certificate (taken at `ε/4`) has at most `2⌈16/ε⌉` points, which gives
//! `|Q| <= 16384/ε² + 1088/ε + 4 <= CERTIFICATE_CONSTANT/ε²` for `ε <= 1`.

use crate::anchor::ten_approx;
use crate::degenerate::zero_width_pair;
use crate::error::{Error, Result};
use crate::geom::{project, Orientation, Point, Slab, SlabPair};
use crate::solution::{Mode, Problem, Solution};

/// Line spacing as a fraction of `ε·w̃`.
pub const SPACING_FACTOR: f64 = 1.0 / 256.0;

/// `C` in the size bound `|Q| <= C/ε²`.
pub const CERTIFICATE_CONSTANT: f64 = 17476.0;

/// Widens `[a, b]` by `ε(b - a)/2` on each side.
pub fn expand_interval(a: f64, b: f64, eps: f64) -> Result<(f64, f64)> {
    if a > b {
        return Err(Error::InvalidInterval(a, b));
    }
    check_eps(eps, true)?;
    let h = 0.5 * eps * (b - a);
    Ok((a - h, b + h))
}

/// Same center line, width times `1 + ε`.
pub fn expand_slab(s: Slab, eps: f64) -> Slab {
    let h = 0.5 * eps * s.width();
    Slab::new(s.orientation, s.lo - h, s.hi + h)
}

fn check_eps(eps: f64, zero_ok: bool) -> Result<()> {
    if eps.is_nan() || eps < 0.0 || (eps == 0.0 && !zero_ok) || eps.is_infinite() {
        return Err(Error::InvalidParameter(format!("epsilon must be positive, got {eps}")));
    }
    Ok(())
}

/// Indices of a 1D ε-certificate of `values`: the extremes of each of
/// `⌈4/ε⌉` equal cells, or everything when there are at most `1/ε` values.
pub fn certificate_1d(values: &[f64], eps: f64) -> Vec<usize> {
    let m = values.len();
    if m == 0 {
        return Vec::new();
    }
    if (m as f64) <= 1.0 / eps {
        return (0..m).collect();
    }
    let (mut lo, mut hi) = (values[0], values[0]);
    for &v in values {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    let cells = (4.0 / eps).ceil() as usize;
    let span = hi - lo;
    // Per cell: (min value, index), (max value, index).
    let mut ext: Vec<Option<((f64, usize), (f64, usize))>> = vec![None; cells];
    for (i, &v) in values.iter().enumerate() {
        let c = if span > 0.0 { (((v - lo) / span) * cells as f64).floor() as usize } else { 0 };
        let c = c.min(cells - 1);
        ext[c] = Some(match ext[c] {
            None => ((v, i), (v, i)),
            Some((a, b)) => (if v < a.0 { (v, i) } else { a }, if v > b.0 { (v, i) } else { b }),
        });
    }
    let mut out: Vec<usize> = ext.into_iter().flatten().flat_map(|(a, b)| [a.1, b.1]).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// One family of equally spaced parallel lines: offsets
/// `base + k·spacing` for `k < count`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineFamily {
    pub orientation: Orientation,
    pub base: f64,
    pub spacing: f64,
    pub count: usize,
}

impl LineFamily {
    /// Nearest line to offset `v`, ties to the lower line.
    pub fn snap(&self, v: f64) -> usize {
        let k = ((v - self.base) / self.spacing + 0.5).floor();
        if k.is_nan() || k < 0.0 {
            0
        } else {
            (k as usize).min(self.count - 1)
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    /// Sorted indices into the input.
    pub indices: Vec<usize>,
    pub epsilon: f64,
    /// Width of the constant-factor pair the lines were built from; zero
    /// when the input was small enough to be kept whole.
    pub seed_width: f64,
    pub lines: Vec<LineFamily>,
}

impl Certificate {
    pub fn points(&self, pts: &[Point]) -> Vec<Point> {
        self.indices.iter().map(|&i| pts[i]).collect()
    }

    pub fn size_bound(eps: f64) -> f64 {
        CERTIFICATE_CONSTANT / (eps * eps)
    }
}

pub fn certificate_2d(pts: &[Point], eps: f64) -> Result<Certificate> {
    check_eps(eps, false)?;
    if pts.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let n = pts.len();
    if (n as f64) <= 1.0 / (eps * eps) {
        return Ok(Certificate { indices: (0..n).collect(), epsilon: eps, seed_width: 0.0, lines: Vec::new() });
    }
    if zero_width_pair(pts, Problem::General).is_some() {
        return Err(Error::Degenerate);
    }
    let seed = ten_approx(pts)?;
    Ok(certificate_from_seed(pts, &seed.pair, eps))
}

/// The certificate built on the lines of a given covering pair. A pair of
/// zero width (each slab a line) gets one line per family.
pub fn certificate_from_seed(pts: &[Point], seed: &SlabPair, eps: f64) -> Certificate {
    let e = eps.min(1.0);
    let w = seed.max_width();
    let spacing = SPACING_FACTOR * e * w;
    let count = if w > 0.0 { (1.0 / (SPACING_FACTOR * e)).floor() as usize + 1 } else { 1 };
    let families: Vec<LineFamily> =
        seed.slabs().iter().map(|s| LineFamily { orientation: s.orientation, base: s.lo, spacing, count }).collect();
    // Along-line coordinate and input index per (family, line).
    let mut buckets: Vec<Vec<(f64, usize)>> = vec![Vec::new(); 2 * count];
    for (i, &p) in pts.iter().enumerate() {
        let offs = [project(p, families[0].orientation), project(p, families[1].orientation)];
        let miss = |f: usize| {
            let s = &families[f];
            let top = s.base + (count - 1) as f64 * spacing;
            (s.base - offs[f]).max(offs[f] - top).max(0.0)
        };
        let f = if miss(0) <= miss(1) { 0 } else { 1 };
        let k = families[f].snap(offs[f]);
        let along = p.dot(families[f].orientation.direction());
        buckets[f * count + k].push((along, i));
    }
    let mut indices = Vec::new();
    for b in &buckets {
        let vals: Vec<f64> = b.iter().map(|e| e.0).collect();
        indices.extend(certificate_1d(&vals, 0.25 * e).into_iter().map(|j| b[j].1));
    }
    indices.sort_unstable();
    indices.dedup();
    debug_assert!(indices.len() as f64 <= Certificate::size_bound(e));
    Certificate { indices, epsilon: eps, seed_width: w, lines: families }
}

/// Runs `solver` on a certificate of `pts`, equalizes the two widths and
/// expands both slabs by `1 + ε`.
pub fn reduce_solve_expand(
    pts: &[Point],
    eps: f64,
    solver: impl FnOnce(&[Point]) -> Result<Solution>,
) -> Result<Solution> {
    let cert = certificate_2d(pts, eps)?;
    let q = cert.points(pts);
    let sol = solver(&q)?;
    let (pair, width) = expand_pair(&sol.pair, sol.width, eps);
    Ok(Solution::new(pair, width, sol.problem, Mode::Approx { epsilon: eps }))
}

/// Equalizes a pair whose max width is `width` and expands both slabs by
/// `1 + ε`; returns the new pair and its width.
pub fn expand_pair(pair: &SlabPair, width: f64, eps: f64) -> (SlabPair, f64) {
    let pair = pair.equalized();
    let pair = SlabPair::new(expand_slab(pair.first, eps), expand_slab(pair.second, eps));
    (pair, (1.0 + eps) * width.max(pair.first.width() / (1.0 + eps)))
}
