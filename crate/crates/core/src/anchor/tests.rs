use super::*;
use crate::geom::tolerance;
use crate::oracles::oracle_general;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn pts(v: &[(f64, f64)]) -> Vec<Point> {
    v.iter().map(|&(x, y)| Point::new(x, y)).collect()
}

#[test]
fn equilateral_gives_three_pairs() {
    let h = 10.0 * 3f64.sqrt() / 2.0;
    let s = pts(&[(0.0, 0.0), (10.0, 0.0), (5.0, h)]);
    let c = anchor_candidates(&s).unwrap();
    assert_eq!(c.pairs.len(), 3);
}

#[test]
fn two_clusters_give_eleven_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut s = vec![Point::new(0.0, 0.0)];
    for _ in 0..20 {
        s.push(Point::new(rng.gen_range(-0.5..0.5), rng.gen_range(-0.5..0.5)));
        s.push(Point::new(100.0 + rng.gen_range(-0.5..0.5), rng.gen_range(-0.5..0.5)));
    }
    let c = anchor_candidates(&s).unwrap();
    assert_eq!(c.pairs.len(), 11);
    assert!(c.distinct(&s).len() >= 7);
}

#[test]
fn two_points_contain_themselves() {
    let s = pts(&[(1.0, 1.0), (4.0, 5.0)]);
    let c = anchor_candidates(&s).unwrap();
    assert!(c.pairs.contains(&(0, 1)));
    assert_eq!(c.distinct(&s), vec![(0, 1)]);
    assert!(anchor_candidates(&s[..1]).is_err());
}

/// Whether a listed pair is an anchor pair of the covering `(a, b)` split:
/// both points on one side, at distance at least a quarter of the diameter
/// of that side.
fn has_anchor(s: &[Point], mask: u32, cand: &AnchorCandidates) -> bool {
    let side = |i: usize| mask >> i & 1;
    let diam = |bit: u32| {
        let mut d = 0.0f64;
        for i in 0..s.len() {
            for j in 0..s.len() {
                if side(i) == bit && side(j) == bit {
                    d = d.max(s[i].dist(s[j]));
                }
            }
        }
        d
    };
    cand.pairs.iter().any(|&(a, b)| side(a) == side(b) && s[a].dist(s[b]) >= 0.25 * diam(side(a)) - 1e-9)
}

#[test]
fn optimal_split_has_an_anchor() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..200 {
        let n = rng.gen_range(3..=10);
        let s: Vec<Point> = (0..n).map(|_| Point::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0))).collect();
        let cand = anchor_candidates(&s).unwrap();
        assert!(cand.pairs.len() <= 11);
        let best = oracle_general(&s).unwrap();
        // Every optimal split must be anchored.
        for mask in 0..(1u32 << (n - 1)) {
            let a: Vec<Point> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| s[i]).collect();
            let b: Vec<Point> = (0..n).filter(|i| mask >> i & 1 == 0).map(|i| s[i]).collect();
            let w = crate::geom::width_exact(&a).0.max(crate::geom::width_exact(&b).0);
            if w <= best {
                assert!(has_anchor(&s, mask, &cand), "split {mask:b} of {s:?}");
            }
        }
    }
}

#[test]
fn ten_approx_bounds() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut worst = 0.0f64;
    for _ in 0..500 {
        // Four points always fit on two lines.
        let n = rng.gen_range(5..=12);
        let s: Vec<Point> = (0..n).map(|_| Point::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0))).collect();
        let (r, rep) = ten_approx_with(&s, TenApproxOptions { check_invariants: true }).unwrap();
        let opt = oracle_general(&s).unwrap();
        let tau = tolerance(&s);
        assert!(r.pair.covers(&s, tau));
        assert!(r.width <= 10.0 * opt + tau, "{} vs {opt}", r.width);
        assert!(r.width >= opt - tau);
        assert_eq!(rep.invariant_violations, 0);
        worst = worst.max(r.width / opt);
    }
    assert!(worst <= 10.0);
}

#[test]
fn two_lines_with_perturbation() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let eta = 0.01;
    let s: Vec<Point> = (0..12)
        .map(|i| {
            let y = if i % 2 == 0 { 0.0 } else { 7.0 };
            Point::new(rng.gen_range(0.0..10.0), y + rng.gen_range(0.0..eta))
        })
        .collect();
    let opt = oracle_general(&s).unwrap();
    assert!(opt <= eta);
    let r = ten_approx(&s).unwrap();
    assert!(r.width <= 10.0 * opt + tolerance(&s));
}

#[test]
fn stretched_square_with_outlier() {
    let s = pts(&[(0.0, 0.0), (10.0, 0.0), (10.0, 1.0), (0.0, 1.0), (3.0, 0.4), (40.0, 25.0)]);
    let opt = oracle_general(&s).unwrap();
    let r = ten_approx(&s).unwrap();
    assert!(r.width <= 10.0 * opt + tolerance(&s));
}

#[test]
fn degenerate_input_errors() {
    let s = pts(&[(0.0, 0.0), (1.0, 1.0), (2.0, 2.0), (5.0, 0.0)]);
    assert_eq!(ten_approx(&s), Err(Error::Degenerate));
}

#[test]
fn work_is_linear() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in [100usize, 1000, 20_000] {
        let s: Vec<Point> = (0..n).map(|_| Point::new(rng.gen_range(-5.0..5.0), rng.gen_range(-1.0..1.0))).collect();
        let (_, rep) = ten_approx_with(&s, TenApproxOptions::default()).unwrap();
        assert!(rep.max_work <= 4 * n + 16, "n = {n}: {}", rep.max_work);
    }
}
