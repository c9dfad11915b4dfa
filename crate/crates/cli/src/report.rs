//! The result document written by `solve` and read back by `check` and
//! `render`.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use twoline::{Orientation, Point, Slab, SlabPair, Solution};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SlabDoc {
    pub theta: f64,
    pub lo: f64,
    pub hi: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultDoc {
    pub variant: String,
    pub epsilon: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta1: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta2: Option<f64>,
    pub slabs: Vec<SlabDoc>,
    pub max_width: f64,
    pub mode: String,
    pub elapsed_ms: f64,
}

/// `v` rounded to 12 significant digits.
pub fn sig12(v: f64) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return v;
    }
    format!("{v:.11e}").parse().unwrap_or(v)
}

/// A slab with its angle rounded for output. Turning the normal by `d`
/// moves the offset of a point `p` by at most `|d|·|p|`, so the offsets are
/// padded by that much: whatever the solver's slab covered, the written one
/// covers too. An angle that rounds up to `π` is written as `0`, which flips
/// the normal.
fn slab_doc(s: &Slab, radius: f64) -> SlabDoc {
    let t = s.orientation.radians();
    let rounded = sig12(t);
    if rounded >= PI {
        let pad = (PI - t) * radius * (1.0 + 1e-12);
        return SlabDoc { theta: 0.0, lo: -s.hi - pad, hi: -s.lo + pad };
    }
    let pad = (rounded - t).abs() * radius * (1.0 + 1e-12);
    SlabDoc { theta: rounded, lo: s.lo - pad, hi: s.hi + pad }
}

impl ResultDoc {
    pub fn new(sol: &Solution, pts: &[Point], epsilon: Option<f64>, elapsed_ms: f64) -> Self {
        let radius = pts.iter().map(|p| p.norm()).fold(0.0, f64::max);
        let (mut theta, mut theta1, mut theta2) = (None, None, None);
        match sol.problem {
            twoline::Problem::OneFixed { theta: t } => theta = Some(sig12(t.radians())),
            twoline::Problem::TwoFixed { theta1: a, theta2: b } => {
                theta1 = Some(sig12(a.radians()));
                theta2 = Some(sig12(b.radians()));
            }
            _ => {}
        }
        ResultDoc {
            variant: sol.problem.name().to_string(),
            epsilon,
            theta,
            theta1,
            theta2,
            slabs: sol.pair.slabs().iter().map(|s| slab_doc(s, radius)).collect(),
            max_width: sol.width,
            mode: sol.mode.name().to_string(),
            elapsed_ms,
        }
    }

    /// The slabs as a pair; `None` unless there are exactly two with
    /// `lo <= hi`.
    pub fn pair(&self) -> Option<SlabPair> {
        let slabs: Vec<Slab> = self
            .slabs
            .iter()
            .filter(|s| s.lo <= s.hi)
            .map(|s| Slab::new(Orientation::new(s.theta), s.lo, s.hi))
            .collect();
        match slabs[..] {
            [a, b] if self.slabs.len() == 2 => Some(SlabPair::new(a, b)),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use twoline::{Mode, Problem};

    #[test]
    fn twelve_digits() {
        assert_eq!(sig12(1.0 / 3.0), 0.333333333333);
        assert_eq!(sig12(0.0), 0.0);
        assert_eq!(sig12(-1.234567890123456e-5), -1.23456789012e-5);
    }

    #[test]
    fn rounded_slabs_still_cover() {
        let theta = Orientation::new(0.12345678901234568);
        let pts = vec![Point::new(1e6, 3.0), Point::new(-1e6, 2.0), Point::new(5.0, 1e6)];
        let offs: Vec<f64> = pts.iter().map(|&p| twoline::geom::project(p, theta)).collect();
        let a = Slab::new(theta, offs[0].min(offs[1]), offs[0].max(offs[1]));
        let b = Slab::line(theta, offs[2]);
        let sol = Solution::new(SlabPair::new(a, b), a.width(), Problem::Parallel, Mode::Exact);
        let doc = ResultDoc::new(&sol, &pts, None, 0.0);
        let back: ResultDoc = serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
        assert_eq!(back, doc);
        assert!(back.pair().unwrap().covers(&pts, 0.0));
    }

    #[test]
    fn angle_next_to_pi_wraps_to_zero() {
        let theta = Orientation::new(PI - 1e-14);
        let pts = vec![Point::new(1e3, 3.0), Point::new(-1e3, 2.0), Point::new(0.0, -1.0)];
        let offs: Vec<f64> = pts.iter().map(|&p| twoline::geom::project(p, theta)).collect();
        let a = Slab::new(theta, offs[0].min(offs[1]), offs[0].max(offs[1]));
        let b = Slab::line(theta, offs[2]);
        let sol = Solution::new(SlabPair::new(a, b), a.width(), Problem::Parallel, Mode::Exact);
        let doc = ResultDoc::new(&sol, &pts, None, 0.0);
        assert_eq!(doc.slabs[0].theta, 0.0);
        assert!(doc.pair().unwrap().covers(&pts, 0.0));
    }
}
