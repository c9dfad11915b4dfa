use crate::geom::{Orientation, Point, SlabPair};

/// Which flavor of the two-slab covering problem is being solved.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Problem {
    General,
    /// The first slab must have orientation `theta`.
    OneFixed {
        theta: Orientation,
    },
    /// The first slab has orientation `theta1`, the second `theta2`.
    TwoFixed {
        theta1: Orientation,
        theta2: Orientation,
    },
    Parallel,
}

impl Problem {
    pub fn name(&self) -> &'static str {
        match self {
            Problem::General => "general",
            Problem::OneFixed { .. } => "one-fixed",
            Problem::TwoFixed { .. } => "two-fixed",
            Problem::Parallel => "parallel",
        }
    }
}

/// How a solution was obtained.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Mode {
    Exact,
    Approx {
        epsilon: f64,
    },
    /// Constant-factor answer (the 10- or 2-approximation).
    Constant {
        factor: f64,
    },
    /// The optimum is zero and the pair consists of two lines.
    ZeroWidth,
}

impl Mode {
    pub fn name(&self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Approx { .. } => "approx",
            Mode::Constant { .. } => "constant",
            Mode::ZeroWidth => "zero-width",
        }
    }
}

/// A slab pair returned by a solver. `width` is the reported max width; it is
/// computed from the defining point sets rather than from the padded slab
/// offsets, so it carries no rounding from the padding.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Solution {
    pub pair: SlabPair,
    pub width: f64,
    pub problem: Problem,
    pub mode: Mode,
}

impl Solution {
    pub fn new(pair: SlabPair, width: f64, problem: Problem, mode: Mode) -> Self {
        Solution { pair, width, problem, mode }
    }

    pub fn covers(&self, pts: &[Point], tol: f64) -> bool {
        self.pair.covers(pts, tol)
    }
}
