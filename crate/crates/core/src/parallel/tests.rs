use super::*;
use crate::geom::tolerance;
use crate::oracles::{oracle_parallel, oracle_parallel_pair, PARALLEL_TOLERANCE};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

fn pts(v: &[(f64, f64)]) -> Vec<Point> {
    v.iter().map(|&(x, y)| Point::new(x, y)).collect()
}

fn rotate(s: &[Point], a: f64) -> Vec<Point> {
    let (sn, c) = a.sin_cos();
    s.iter().map(|p| Point::new(c * p.x - sn * p.y, sn * p.x + c * p.y)).collect()
}

fn dense(rng: &mut ChaCha8Rng) -> Vec<Point> {
    let n = rng.gen_range(3..=12);
    match rng.gen_range(0..3) {
        0 => (0..n).map(|_| Point::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0))).collect(),
        1 => {
            // Two parallel bands at a random orientation and separation.
            let a: f64 = rng.gen_range(0.0..PI);
            let sep = rng.gen_range(0.0..6.0);
            let (s, c) = a.sin_cos();
            (0..n)
                .map(|i| {
                    let t: f64 = rng.gen_range(-5.0..5.0);
                    let off = rng.gen_range(0.0..1.0) + if i % 2 == 0 { 0.0 } else { sep };
                    Point::new(t * c - off * s, t * s + off * c)
                })
                .collect()
        }
        _ => (0..n).map(|_| Point::new(rng.gen_range(-3..4) as f64, rng.gen_range(-3..4) as f64)).collect(),
    }
}

/// Slack allowed against the oracle: its own declared accuracy plus `τ`.
fn slack(s: &[Point], opt: f64) -> f64 {
    PARALLEL_TOLERANCE * opt + tolerance(s)
}

#[test]
fn gap_metric_examples() {
    let h = Orientation::HORIZONTAL;
    let m = gap_metrics(&SlabPair::new(Slab::new(h, 3.0, 4.0), Slab::new(h, 0.0, 1.0))).unwrap();
    assert_eq!((m.gap, m.span, m.ratio), (2.0, 4.0, Some(0.5)));
    let m = gap_metrics(&SlabPair::new(Slab::new(h, 0.0, 1.0), Slab::new(h, 1.0, 2.0))).unwrap();
    assert_eq!(m.ratio, Some(0.0));
    assert!(m.disjoint());
    let m = gap_metrics(&SlabPair::new(Slab::new(h, 0.0, 2.0), Slab::new(h, 1.0, 3.0))).unwrap();
    assert_eq!(m.ratio, None);
    assert!(!m.disjoint());
    let tilted = SlabPair::new(Slab::new(h, 0.0, 1.0), Slab::new(Orientation::new(0.1), 3.0, 4.0));
    assert_eq!(gap_metrics(&tilted), Err(Error::NotParallel));
}

#[test]
fn rho_must_be_at_least_half() {
    let s = pts(&[(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)]);
    assert!(matches!(large_gap_solve(&s, 0.1, 0.4), Err(Error::InvalidParameter(_))));
    assert!(matches!(large_gap_solve(&s, 0.1, 1.0), Err(Error::InvalidParameter(_))));
    assert!(matches!(solve(&s, 0.0), Err(Error::InvalidParameter(_))));
}

#[test]
fn thick_blob_is_split_in_half() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let s: Vec<Point> = (0..12).map(|_| Point::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
    let opt = oracle_parallel(&s).unwrap();
    let sol = small_gap_solve(&s, 0.1).unwrap();
    assert!(sol.covers(&s, tolerance(&s)));
    assert!(sol.width <= 1.1 * opt + slack(&s, opt), "{} vs {opt}", sol.width);
}

#[test]
fn small_gap_within_one_plus_eps() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut used = 0;
    while used < 500 {
        let s = dense(&mut rng);
        let (opt, pair) = oracle_parallel_pair(&s).unwrap();
        if opt == 0.0 || gap_metrics(&pair).unwrap().ratio.map_or(false, |r| r > GAP_RHO) {
            continue;
        }
        used += 1;
        let sol = small_gap_solve(&s, 0.1).unwrap();
        assert!(sol.covers(&s, tolerance(&s)));
        assert!(sol.width <= 1.1 * opt + slack(&s, opt), "{} vs {opt}: {s:?}", sol.width);
    }
}

#[test]
fn seed_width_brackets_the_optimum() {
    let c = seed_factor(GAP_RHO);
    assert_eq!(c, 4.0);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut used = 0;
    while used < 300 {
        let s = dense(&mut rng);
        let (opt, pair) = oracle_parallel_pair(&s).unwrap();
        if gap_metrics(&pair).unwrap().ratio.map_or(false, |r| r > GAP_RHO) {
            continue;
        }
        used += 1;
        let w = small_gap_seed(&s);
        let tol = slack(&s, opt);
        assert!(opt <= w + tol && w <= c * opt + tol, "{opt} {w}");
    }
}

#[test]
fn small_gap_is_rotation_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..50 {
        let s = dense(&mut rng);
        let a = rng.gen_range(0.0..PI);
        let r = rotate(&s, a);
        let w = small_gap_solve(&s, 0.1).unwrap().width;
        let wr = small_gap_solve(&r, 0.1).unwrap().width;
        assert!((w - wr).abs() <= 1e-9 * w.max(1.0) + tolerance(&s), "{w} vs {wr}");
    }
}

#[test]
fn large_gap_pair_is_the_constrained_optimum() {
    // Never below the unconstrained optimum, and equal to it whenever the
    // optimum has a clearly large gap.
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut matched = 0;
    for _ in 0..300 {
        let s = dense(&mut rng);
        let (opt, pair) = oracle_parallel_pair(&s).unwrap();
        let tol = slack(&s, opt);
        let Some(found) = large_gap_pair(&s, GAP_RHO, None).unwrap() else {
            continue;
        };
        assert!(found.covers(&s, tolerance(&s)));
        assert!(found.max_width() >= opt - tol);
        let m = gap_metrics(&found).unwrap();
        assert!(m.gap >= GAP_RHO * m.span - 1e-9 * m.span);
        if gap_metrics(&pair).unwrap().ratio.map_or(false, |r| r > GAP_RHO + 1e-3) {
            assert!(found.max_width() <= opt + tol, "{} vs {opt}", found.max_width());
            matched += 1;
        }
    }
    assert!(matched > 20, "{matched}");
}

#[test]
fn two_thin_far_clusters() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let phi: f64 = 0.9;
    let (sn, c) = phi.sin_cos();
    let s: Vec<Point> = (0..12)
        .map(|i| {
            let t: f64 = rng.gen_range(-10.0..10.0);
            let off = if i % 2 == 0 { 0.0 } else { 100.0 } + rng.gen_range(0.0..0.01);
            Point::new(t * c - off * sn, t * sn + off * c)
        })
        .collect();
    let opt = oracle_parallel(&s).unwrap();
    let sol = large_gap_solve(&s, 0.1, GAP_RHO).unwrap().expect("large gap");
    assert!(sol.covers(&s, tolerance(&s)));
    assert!(sol.width <= 1.1 * 0.01 && sol.width <= 1.1 * opt + slack(&s, opt));
    let o = sol.pair.first.orientation.radians();
    let d = (o - phi).abs().min(PI - (o - phi).abs());
    assert!(d < 1e-3, "{o}");
}

#[test]
fn grid_has_no_large_gap_pair() {
    let mut s = Vec::new();
    for i in 0..5 {
        for j in 0..5 {
            s.push(Point::new(i as f64, j as f64));
        }
    }
    assert_eq!(large_gap_solve(&s, 0.1, GAP_RHO).unwrap(), None);
}

#[test]
fn gap_exactly_at_ratio_is_feasible() {
    let s = pts(&[(0.0, 0.0), (10.0, 0.0), (5.0, 1.0), (0.0, 3.0), (10.0, 3.0), (5.0, 4.0)]);
    let sol = large_gap_solve(&s, 0.1, GAP_RHO).unwrap().expect("boundary is feasible");
    assert!(sol.covers(&s, tolerance(&s)));
    let pair = large_gap_pair(&s, GAP_RHO, None).unwrap().unwrap();
    assert!((pair.max_width() - 1.0).abs() < 1e-12);
    assert_eq!(pair.first.orientation, Orientation::HORIZONTAL);
}

#[test]
fn duplicated_point_has_zero_width() {
    let s = vec![Point::new(2.0, -1.0); 7];
    let sol = solve(&s, 0.1).unwrap();
    assert_eq!(sol.width, 0.0);
    assert_eq!(sol.mode, Mode::ZeroWidth);
}

#[test]
fn solve_within_one_plus_eps() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for round in 0..500 {
        let s = dense(&mut rng);
        let opt = oracle_parallel(&s).unwrap();
        let sol = solve(&s, 0.1).unwrap();
        assert!(sol.covers(&s, tolerance(&s)), "round {round}");
        assert!(sol.width <= 1.1 * opt + slack(&s, opt), "round {round}: {} vs {opt}", sol.width);
        assert!(sol.pair.first.orientation == sol.pair.second.orientation);
    }
}

#[test]
fn jittered_horizontal_lines() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let eta = 1e-3;
    let s: Vec<Point> = (0..12)
        .map(|i| Point::new(rng.gen_range(-10.0..10.0), if i % 2 == 0 { 0.0 } else { 7.0 } + rng.gen_range(0.0..eta)))
        .collect();
    let opt = oracle_parallel(&s).unwrap();
    let sol = solve(&s, 0.1).unwrap();
    assert!(sol.covers(&s, tolerance(&s)));
    assert!(sol.width <= 1.1 * eta);
    assert!(sol.width <= 1.1 * opt + slack(&s, opt));
}

#[test]
fn two_crossing_lines_at_scale() {
    // Covered by two lines, so the certificate comes from those lines.
    let s: Vec<Point> = (0..2000)
        .map(|i| {
            let t = i as f64 / 1000.0;
            if i % 2 == 0 {
                Point::new(t, 0.0)
            } else {
                Point::new(0.5, t)
            }
        })
        .collect();
    let sol = solve(&s, 0.3).unwrap();
    assert!(sol.covers(&s, tolerance(&s)));
    // A dense orientation scan bounds the optimum from above.
    let scan = (0..20_000)
        .map(|k| min_parallel_pair_at_orientation(&s, Orientation::new(PI * k as f64 / 20_000.0)).unwrap().max_width())
        .fold(f64::INFINITY, f64::min);
    assert!(sol.width > 0.0 && sol.width <= 1.3 * scan, "{} vs {scan}", sol.width);
}
