//! Brute-force reference solvers and instance builders.
//!
//! Everything here trades speed for obviousness. The solvers enumerate
//! every combinatorially distinct answer and evaluate it with the plain
//! width routines of [`geom`](crate::geom); none of them shares code with
//! the fast solvers beyond those primitives.

use crate::degenerate::zero_width_solution;
use crate::error::{Error, Result};
use crate::geom::{project, project_sc, width_exact, Orientation, Point, Slab, SlabPair};
use crate::solution::{Problem, Solution};
use std::f64::consts::PI;

pub const GENERAL_CAP: usize = 14;
pub const FIXED_CAP: usize = 200;
pub const PARALLEL_CAP: usize = 12;

/// Samples of the uniform orientation grid in [`oracle_parallel`].
pub const PARALLEL_GRID: usize = 20_000;

fn cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::OracleCap { n, cap });
    }
    Ok(())
}

fn parts(pts: &[Point], mask: u32) -> (Vec<Point>, Vec<Point>) {
    let mut a = Vec::new();
    let mut b = Vec::new();
    for (i, &p) in pts.iter().enumerate() {
        if mask >> i & 1 == 1 {
            a.push(p);
        } else {
            b.push(p);
        }
    }
    (a, b)
}

/// Optimal general width: the best split into two parts, each covered by
/// its own minimum-width slab.
pub fn oracle_general(pts: &[Point]) -> Result<f64> {
    if pts.len() < 2 {
        return Err(Error::TooFewPoints { need: 2, got: pts.len() });
    }
    cap(pts.len(), GENERAL_CAP)?;
    let n = pts.len();
    let mut best = f64::INFINITY;
    // The last point always goes to the second part.
    for mask in 0..(1u32 << (n - 1)) {
        let (a, b) = parts(pts, mask);
        best = best.min(width_exact(&a).0.max(width_exact(&b).0));
    }
    Ok(best)
}

/// Points sorted by offset along the normal of `theta`, with the offsets.
fn by_offset(pts: &[Point], theta: Orientation) -> Vec<(f64, Point)> {
    let mut v: Vec<(f64, Point)> = pts.iter().map(|&p| (project(p, theta), p)).collect();
    v.sort_by(|a, b| a.0.total_cmp(&b.0));
    v
}

/// Every strip of orientation `theta` bounded by two input offsets, plus no
/// strip at all, with `residual` scoring what the strip leaves out.
fn strip_search(pts: &[Point], theta: Orientation, residual: impl Fn(&[Point]) -> f64) -> f64 {
    let v = by_offset(pts, theta);
    let n = v.len();
    let mut best = residual(pts);
    for i in 0..n {
        for j in i..n {
            let rest: Vec<Point> = v[..i].iter().chain(&v[j + 1..]).map(|e| e.1).collect();
            best = best.min((v[j].0 - v[i].0).max(residual(&rest)));
        }
    }
    best
}

pub fn oracle_one_fixed(pts: &[Point], theta: Orientation) -> Result<f64> {
    if pts.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    cap(pts.len(), FIXED_CAP)?;
    Ok(strip_search(pts, theta, |r| width_exact(r).0))
}

pub fn oracle_two_fixed(pts: &[Point], theta1: Orientation, theta2: Orientation) -> Result<f64> {
    if pts.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    cap(pts.len(), FIXED_CAP)?;
    let extent = |r: &[Point]| {
        let (lo, hi) = r.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &p| {
            let v = project(p, theta2);
            (lo.min(v), hi.max(v))
        });
        if r.is_empty() {
            0.0
        } else {
            hi - lo
        }
    };
    Ok(strip_search(pts, theta1, extent))
}

/// Best parallel pair at a fixed orientation: split the sorted offsets at
/// the best place.
fn parallel_at(pts: &[Point], t: f64) -> f64 {
    let (sn, cs) = t.sin_cos();
    let mut v: Vec<f64> = pts.iter().map(|&p| project_sc(p, sn, cs)).collect();
    v.sort_by(f64::total_cmp);
    let n = v.len();
    let mut best = v[n - 1] - v[0];
    for k in 1..n {
        best = best.min((v[k - 1] - v[0]).max(v[n - 1] - v[k]));
    }
    best
}

/// Optimal width with two parallel slabs.
///
/// For a fixed split the two widths are maxima of sinusoids in the
/// orientation and concave between the orientations of point differences,
/// so the optimum sits at such an orientation or where two point-difference
/// widths are equal, an orientation of a difference of differences. All of
/// those are evaluated, and as an independent net a uniform grid with
/// golden-section refinement around its ten best samples; the grid part
/// carries the declared relative accuracy [`PARALLEL_TOLERANCE`].
pub fn oracle_parallel(pts: &[Point]) -> Result<f64> {
    oracle_parallel_pair(pts).map(|r| r.0)
}

/// [`oracle_parallel`] with the pair attaining it.
pub fn oracle_parallel_pair(pts: &[Point]) -> Result<(f64, SlabPair)> {
    if pts.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    cap(pts.len(), PARALLEL_CAP)?;
    let n = pts.len();
    let mut best = (f64::INFINITY, 0.0);
    let mut consider = |d: Point| {
        if d.x != 0.0 || d.y != 0.0 {
            let t = Orientation::of_vector(d).radians();
            let v = parallel_at(pts, t);
            if v < best.0 {
                best = (v, t);
            }
        }
    };
    for a in 0..n {
        for b in 0..n {
            let u = pts[a] - pts[b];
            consider(u);
            for c in 0..n {
                for d in 0..n {
                    consider(u - (pts[c] - pts[d]));
                }
            }
        }
    }
    let mut samples: Vec<(f64, f64)> = (0..PARALLEL_GRID)
        .map(|k| {
            let t = PI * k as f64 / PARALLEL_GRID as f64;
            (parallel_at(pts, t), t)
        })
        .collect();
    samples.sort_by(|a, b| a.0.total_cmp(&b.0));
    let step = PI / PARALLEL_GRID as f64;
    for &(v, t) in samples.iter().take(10) {
        let g = golden(|x| parallel_at(pts, x), t - step, t + step);
        for c in [(v, t), g] {
            if c.0 < best.0 {
                best = c;
            }
        }
    }
    Ok((best.0, parallel_pair_at(pts, best.1)))
}

/// The split behind [`parallel_at`] as a slab pair.
fn parallel_pair_at(pts: &[Point], t: f64) -> SlabPair {
    let theta = Orientation::new(t);
    let mut v: Vec<f64> = pts.iter().map(|&p| project(p, theta)).collect();
    v.sort_by(f64::total_cmp);
    let n = v.len();
    let mut best = (v[n - 1] - v[0], 0);
    for k in 1..n {
        let w = (v[k - 1] - v[0]).max(v[n - 1] - v[k]);
        if w < best.0 {
            best = (w, k);
        }
    }
    let k = best.1;
    if k == 0 {
        let m = 0.5 * (v[0] + v[n - 1]);
        return SlabPair::new(Slab::new(theta, v[0], m), Slab::new(theta, m, v[n - 1]));
    }
    SlabPair::new(Slab::new(theta, v[0], v[k - 1]), Slab::new(theta, v[k], v[n - 1]))
}

/// Declared relative accuracy of [`oracle_parallel`].
pub const PARALLEL_TOLERANCE: f64 = 1e-6;

fn golden(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> (f64, f64) {
    let r = 0.5 * (5f64.sqrt() - 1.0);
    let mut c = b - r * (b - a);
    let mut d = a + r * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while b - a > 1e-12 {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - r * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + r * (b - a);
            fd = f(d);
        }
    }
    if fc < fd {
        (fc, c)
    } else {
        (fd, d)
    }
}

/// Adds two far points below `pts` so that, with one horizontal slab, the
/// best pair has width exactly the width of `pts`: the horizontal slab takes
/// the two new points and the other slab must cover all of `pts`.
///
/// With `L` the larger side of the bounding box, the points sit `L` below a
/// square of side `L` centered on the box, `7L` apart and centered under it.
pub fn build_gadget(pts: &[Point]) -> Result<Vec<Point>> {
    if pts.len() < 3 {
        return Err(Error::TooFewPoints { need: 3, got: pts.len() });
    }
    if width_exact(pts).0 <= 0.0 {
        return Err(Error::Degenerate);
    }
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for p in pts {
        x0 = x0.min(p.x);
        x1 = x1.max(p.x);
        y0 = y0.min(p.y);
        y1 = y1.max(p.y);
    }
    let l = (x1 - x0).max(y1 - y0);
    let (cx, cy) = (0.5 * (x0 + x1), 0.5 * (y0 + y1));
    let y = cy - 0.5 * l - l;
    let mut out = pts.to_vec();
    out.push(Point::new(cx - 3.5 * l, y));
    out.push(Point::new(cx + 3.5 * l, y));
    Ok(out)
}

/// A zero-width solution of the given flavor, if one exists.
pub fn detect_zero_width(pts: &[Point], problem: Problem) -> Option<Solution> {
    zero_width_solution(pts, problem)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::tolerance;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn pts(v: &[(f64, f64)]) -> Vec<Point> {
        v.iter().map(|&(x, y)| Point::new(x, y)).collect()
    }

    fn square() -> Vec<Point> {
        pts(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)])
    }

    #[test]
    fn collinear_and_square_are_zero() {
        let line: Vec<Point> = (0..4).map(|i| Point::new(i as f64, 0.5 * i as f64)).collect();
        assert_eq!(oracle_general(&line).unwrap(), 0.0);
        assert_eq!(oracle_general(&square()).unwrap(), 0.0);
        assert_eq!(oracle_parallel(&square()).unwrap(), 0.0);
        let h = Orientation::HORIZONTAL;
        let v = Orientation::new(PI / 2.0);
        assert_eq!(oracle_two_fixed(&square(), h, h).unwrap(), 0.0);
        // Orthogonal slabs cannot both be degenerate on a square: one of
        // them must span a side.
        assert_eq!(oracle_two_fixed(&square(), h, v).unwrap(), 1.0);
        assert_eq!(oracle_one_fixed(&square(), h).unwrap(), 0.0);
    }

    #[test]
    fn two_strips() {
        let s = pts(&[(0.0, 0.0), (5.0, 1.0), (10.0, 0.0), (0.0, 20.0), (5.0, 21.0), (10.0, 20.0)]);
        assert_eq!(oracle_general(&s).unwrap(), 1.0);
        let clusters = pts(&[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (0.0, 3.0), (1.0, 3.0)]);
        assert_eq!(oracle_parallel(&clusters).unwrap(), 0.0);
    }

    #[test]
    fn caps() {
        let many: Vec<Point> = (0..15).map(|i| Point::new(i as f64, (i * i) as f64)).collect();
        assert_eq!(oracle_general(&many), Err(Error::OracleCap { n: 15, cap: GENERAL_CAP }));
        assert!(oracle_parallel(&many[..13]).is_err());
    }

    #[test]
    fn gadget_value() {
        let p = pts(&[(0.0, 0.0), (4.0, 0.5), (1.0, 3.0), (2.0, 1.0)]);
        let q = build_gadget(&p).unwrap();
        assert_eq!(q.len(), 6);
        assert_eq!(oracle_one_fixed(&q, Orientation::HORIZONTAL).unwrap(), width_exact(&p).0);
        assert!(build_gadget(&p[..2]).is_err());
        let scaled: Vec<Point> = p.iter().map(|&r| r * 3.0).collect();
        let qs = build_gadget(&scaled).unwrap();
        for (a, b) in q.iter().zip(&qs) {
            assert!((*a * 3.0).dist(*b) < 1e-12);
        }
        let moved: Vec<Point> = p.iter().map(|&r| r + Point::new(2.0, -1.0)).collect();
        let qm = build_gadget(&moved).unwrap();
        assert!((q[5] + Point::new(2.0, -1.0)).dist(qm[5]) < 1e-12);
    }

    #[test]
    fn restrictions_never_beat_general() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..60 {
            let n = rng.gen_range(2..=9);
            let s: Vec<Point> =
                (0..n).map(|_| Point::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0))).collect();
            let g = oracle_general(&s).unwrap();
            let t1 = Orientation::new(rng.gen_range(0.0..PI));
            let t2 = Orientation::new(rng.gen_range(0.0..PI));
            let tau = tolerance(&s);
            assert!(g <= oracle_one_fixed(&s, t1).unwrap() + tau);
            assert!(g <= oracle_two_fixed(&s, t1, t2).unwrap() + tau);
            assert!(g <= oracle_parallel(&s).unwrap() + tau);
        }
    }

    #[test]
    fn zero_width_detection_matches_oracles() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for round in 0..300 {
            let n = rng.gen_range(2..=9);
            // Integer points on few lines make zero optima common.
            let s: Vec<Point> = crate::geom::dedup(
                (0..n)
                    .map(|_| {
                        if rng.gen_bool(0.5) {
                            let k = rng.gen_range(-3..4) as f64;
                            Point::new(k, 2.0 * k + 1.0)
                        } else {
                            Point::new(
                                rng.gen_range(-3..4) as f64,
                                if rng.gen_bool(0.6) { 0.0 } else { rng.gen_range(-3..4) as f64 },
                            )
                        }
                    })
                    .collect(),
            );
            if s.len() < 2 {
                continue;
            }
            let tau = tolerance(&s);
            let h = Orientation::HORIZONTAL;
            let v = Orientation::new(PI / 2.0);
            let cases = [
                (Problem::General, oracle_general(&s).unwrap()),
                (Problem::OneFixed { theta: h }, oracle_one_fixed(&s, h).unwrap()),
                (Problem::TwoFixed { theta1: h, theta2: v }, oracle_two_fixed(&s, h, v).unwrap()),
                (Problem::Parallel, oracle_parallel(&s).unwrap()),
            ];
            for (problem, want) in cases {
                let got = detect_zero_width(&s, problem);
                assert_eq!(got.is_some(), want < tau, "round {round} {problem:?}: oracle {want}");
                if let Some(sol) = got {
                    assert!(sol.covers(&s, tau));
                }
            }
        }
    }
}
