//! Seeded instance generators.

use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;
use twoline::oracles::build_gadget;
use twoline::Point;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// Uniform in the square [-1, 1]².
    Uniform,
    /// Two thin parallel bands, thickness 0.01, one unit apart, at a random
    /// angle.
    TwoCluster,
    /// A random set plus two far points, built so that the best pair with a
    /// horizontal first slab has the width of the random set.
    Gadget,
    /// All points on one random line.
    Collinear,
    /// The first `n` points of a square integer grid.
    Grid,
    /// Points alternating between two crossing random lines.
    Cross,
}

pub fn generate(kind: Kind, n: usize, seed: u64) -> Result<Vec<Point>, String> {
    if n == 0 {
        return Err("n must be at least 1".into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts = match kind {
        Kind::Uniform => (0..n).map(|_| Point::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect(),
        Kind::TwoCluster => {
            let (s, c) = rng.gen_range(0.0..PI).sin_cos();
            (0..n)
                .map(|i| {
                    let t: f64 = rng.gen_range(-1.0..1.0);
                    let off = if i % 2 == 0 { 0.0 } else { 1.0 } + rng.gen_range(0.0..0.01);
                    Point::new(t * c - off * s, t * s + off * c)
                })
                .collect()
        }
        Kind::Gadget => {
            if n < 5 {
                return Err("a gadget needs n >= 5".into());
            }
            let base: Vec<Point> =
                (0..n - 2).map(|_| Point::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
            build_gadget(&base).map_err(|e| e.to_string())?
        }
        Kind::Collinear => {
            let d = direction(&mut rng);
            let o = Point::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            (0..n).map(|_| o + d * rng.gen_range(-1.0..1.0)).collect()
        }
        Kind::Grid => {
            let k = (n as f64).sqrt().ceil() as usize;
            (0..n).map(|i| Point::new((i % k) as f64, (i / k) as f64)).collect()
        }
        Kind::Cross => {
            let lines = [(direction(&mut rng), Point::new(0.0, 0.0)), (direction(&mut rng), Point::new(0.3, -0.2))];
            (0..n)
                .map(|i| {
                    let (d, o) = lines[i % 2];
                    o + d * rng.gen_range(-1.0..1.0)
                })
                .collect()
        }
    };
    Ok(pts)
}

fn direction(rng: &mut ChaCha8Rng) -> Point {
    let (s, c) = rng.gen_range(0.0..PI).sin_cos();
    Point::new(c, s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use twoline::oracles::detect_zero_width;
    use twoline::Problem;

    #[test]
    fn same_seed_same_points() {
        for kind in Kind::value_variants() {
            assert_eq!(generate(*kind, 50, 9).unwrap(), generate(*kind, 50, 9).unwrap());
            assert_eq!(generate(*kind, 50, 9).unwrap().len(), 50);
        }
        assert_ne!(generate(Kind::Uniform, 5, 1).unwrap(), generate(Kind::Uniform, 5, 2).unwrap());
    }

    #[test]
    fn degenerate_kinds_have_zero_width() {
        let c = generate(Kind::Collinear, 40, 3).unwrap();
        assert!(detect_zero_width(&c, Problem::General).is_some());
        let x = generate(Kind::Cross, 40, 3).unwrap();
        assert!(detect_zero_width(&x, Problem::General).is_some());
        let u = generate(Kind::Uniform, 40, 3).unwrap();
        assert!(detect_zero_width(&u, Problem::General).is_none());
    }

    #[test]
    fn small_or_empty_requests_fail() {
        assert!(generate(Kind::Uniform, 0, 1).is_err());
        assert!(generate(Kind::Gadget, 4, 1).is_err());
    }
}
