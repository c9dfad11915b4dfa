//! Linear-time tests for an optimum of width zero, one per problem flavor.
//! Each either returns two lines covering the input or proves that no such
//! pair exists: with three non-collinear points, one of the lines must pass
//! through two of them.

use crate::geom::{project, tolerance, Orientation, Point, Slab, SlabPair};
use crate::solution::{Mode, Problem, Solution};

fn line_through(a: Point, b: Point) -> Slab {
    let t = Orientation::of_vector(b - a);
    Slab::line(t, project(a, t))
}

fn line_at(p: Point, t: Orientation) -> Slab {
    Slab::line(t, project(p, t))
}

fn on(l: &Slab, p: Point, tol: f64) -> bool {
    (project(p, l.orientation) - l.lo).abs() <= tol
}

/// First point off `l`, and whether every point off `l` also lies on the
/// line of orientation `rest_dir` (or, with `None`, on one common line).
fn rest_on_one_line(pts: &[Point], l: &Slab, rest_dir: Option<Orientation>, tol: f64) -> Option<Slab> {
    let mut off = pts.iter().copied().filter(|&p| !on(l, p, tol));
    let Some(a) = off.next() else {
        return Some(*l);
    };
    let other = match rest_dir {
        Some(t) => line_at(a, t),
        None => match off.clone().find(|&b| b.dist(a) > tol) {
            Some(b) => line_through(a, b),
            None => return Some(line_at(a, l.orientation)),
        },
    };
    off.all(|p| on(&other, p, tol)).then_some(other)
}

/// Three points that are not collinear, taken as the first two and the first
/// point off their line.
fn triple(pts: &[Point], tol: f64) -> Result<(Point, Point, Point), Slab> {
    let (p, q) = (pts[0], pts[1]);
    let l = line_through(p, q);
    match pts.iter().copied().find(|&r| !on(&l, r, tol)) {
        Some(r) => Ok((p, q, r)),
        None => Err(l),
    }
}

/// Two lines covering `pts` that respect the orientation constraints of
/// `problem`, if they exist (up to the instance tolerance).
pub fn zero_width_pair(pts: &[Point], problem: Problem) -> Option<SlabPair> {
    let tol = tolerance(pts);
    let h = Orientation::HORIZONTAL;
    if pts.len() <= 1 {
        let p = pts.first().copied().unwrap_or_default();
        return Some(match problem {
            Problem::TwoFixed { theta1, theta2 } => SlabPair::new(line_at(p, theta1), line_at(p, theta2)),
            Problem::OneFixed { theta } => SlabPair::new(line_at(p, theta), line_at(p, h)),
            _ => SlabPair::new(line_at(p, h), line_at(p, h)),
        });
    }
    match problem {
        Problem::General => {
            let (p, q, r) = match triple(pts, tol) {
                Ok(t) => t,
                Err(l) => return Some(SlabPair::new(l, l)),
            };
            [(p, q), (p, r), (q, r)].into_iter().find_map(|(u, v)| {
                let l = line_through(u, v);
                rest_on_one_line(pts, &l, None, tol).map(|m| SlabPair::new(l, m))
            })
        }
        Problem::OneFixed { theta } => {
            let (p, q, r) = match triple(pts, tol) {
                Ok(t) => t,
                Err(l) => return Some(SlabPair::new(line_at(pts[0], theta), l)),
            };
            [(p, q), (p, r), (q, r)].into_iter().find_map(|(u, v)| {
                let l = line_through(u, v);
                if (project(u, theta) - project(v, theta)).abs() <= tol {
                    let l = line_at(u, theta);
                    rest_on_one_line(pts, &l, None, tol).map(|m| SlabPair::new(l, m))
                } else {
                    rest_on_one_line(pts, &l, Some(theta), tol).map(|m| SlabPair::new(m, l))
                }
            })
        }
        Problem::TwoFixed { theta1, theta2 } => {
            let p = pts[0];
            let Some(q) = pts.iter().copied().find(|&q| (project(q, theta1) - project(p, theta1)).abs() > tol) else {
                return Some(SlabPair::new(line_at(p, theta1), line_at(p, theta2)));
            };
            [p, q].into_iter().find_map(|c| {
                let l = line_at(c, theta2);
                rest_on_one_line(pts, &l, Some(theta1), tol).map(|m| {
                    // All points on `l` leaves the first line free.
                    let m = if m == l { line_at(c, theta1) } else { m };
                    SlabPair::new(m, l)
                })
            })
        }
        Problem::Parallel => {
            let (p, q, r) = match triple(pts, tol) {
                Ok(t) => t,
                Err(l) => return Some(SlabPair::new(l, l)),
            };
            [(p, q), (p, r), (q, r)].into_iter().find_map(|(u, v)| {
                let l = line_through(u, v);
                rest_on_one_line(pts, &l, Some(l.orientation), tol).map(|m| SlabPair::new(l, m))
            })
        }
    }
}

/// [`zero_width_pair`] wrapped as a solution.
pub fn zero_width_solution(pts: &[Point], problem: Problem) -> Option<Solution> {
    zero_width_pair(pts, problem).map(|pair| Solution::new(pair, 0.0, problem, Mode::ZeroWidth))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn pts(v: &[(f64, f64)]) -> Vec<Point> {
        v.iter().map(|&(x, y)| Point::new(x, y)).collect()
    }

    #[test]
    fn collinear_is_zero_for_every_flavor() {
        let s: Vec<Point> = (0..10).map(|i| Point::new(i as f64, 2.0 * i as f64 + 1.0)).collect();
        let t = Orientation::new(0.3);
        for problem in [Problem::General, Problem::OneFixed { theta: t }, Problem::Parallel] {
            let pair = zero_width_pair(&s, problem).unwrap();
            assert!(pair.covers(&s, tolerance(&s)));
        }
        // Two fixed orientations need the line to match one of them.
        let flat: Vec<Point> = (0..10).map(|i| Point::new(i as f64, 3.0)).collect();
        let two = Problem::TwoFixed { theta1: Orientation::new(0.0), theta2: Orientation::new(1.0) };
        assert!(zero_width_pair(&flat, two).unwrap().covers(&flat, 0.0));
        let steep = Problem::TwoFixed { theta1: Orientation::new(1.0), theta2: Orientation::new(0.0) };
        assert!(zero_width_pair(&flat, steep).unwrap().covers(&flat, 0.0));
    }

    #[test]
    fn crossing_lines_general() {
        let s = pts(&[(0.0, 0.0), (1.0, 1.0), (2.0, 2.0), (0.0, 2.0), (2.0, 0.0), (3.0, -1.0)]);
        let pair = zero_width_pair(&s, Problem::General).unwrap();
        assert!(pair.covers(&s, 1e-12));
        assert!(zero_width_pair(&s, Problem::Parallel).is_none());
    }

    #[test]
    fn one_fixed_needs_matching_orientation() {
        let s = pts(&[(0.0, 0.0), (1.0, 0.0), (5.0, 0.0), (0.0, 3.0), (1.0, 7.0)]);
        assert!(zero_width_pair(&s, Problem::OneFixed { theta: Orientation::new(0.0) }).is_some());
        assert!(zero_width_pair(&s, Problem::OneFixed { theta: Orientation::new(FRAC_PI_2) }).is_none());
    }

    #[test]
    fn square_corners() {
        let s = pts(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]);
        assert!(zero_width_pair(&s, Problem::General).is_some());
        assert!(zero_width_pair(&s, Problem::Parallel).is_some());
        let two = Problem::TwoFixed { theta1: Orientation::new(0.0), theta2: Orientation::new(FRAC_PI_2) };
        assert!(zero_width_pair(&s, two).is_none());
    }

    #[test]
    fn generic_points_are_not_degenerate() {
        let s = pts(&[(0.0, 0.0), (3.0, 1.0), (1.0, 4.0), (5.0, 5.0), (2.0, 7.0), (6.0, 2.5)]);
        assert!(zero_width_pair(&s, Problem::General).is_none());
    }
}
