//! Hull chains split at the top and bottom vertex, and the logarithmic
//! queries the sweep needs on them: extreme points, outer common tangents
//! between a set and a set below it, and edge-orientation ranges.
//!
//! "Top" and "bottom" follow the sheared order used everywhere in the crate:
//! points compare by `(y, x)`, so among points of equal height the one with
//! the larger `x` counts as higher.

use crate::geom::Point;
use std::f64::consts::PI;

/// Orientation in `[0, π)` of the line through a downward edge `from -> to`.
pub(crate) fn edge_orientation(from: Point, to: Point) -> f64 {
    let t = (from.y - to.y).atan2(from.x - to.x);
    if t <= 0.0 || t >= PI {
        0.0
    } else {
        t
    }
}

/// True when `a` is strictly above `b` in the sheared order.
#[inline]
pub(crate) fn above(a: Point, b: Point) -> bool {
    a.y > b.y || (a.y == b.y && a.x > b.x)
}

/// Read-only view of one chain, always indexed from the top vertex down.
#[derive(Clone, Copy)]
pub(crate) struct Chain<'a> {
    pts: &'a [Point],
    ids: &'a [usize],
    reversed: bool,
    mirrored: bool,
}

impl<'a> Chain<'a> {
    pub(crate) fn new(pts: &'a [Point], ids: &'a [usize], reversed: bool) -> Self {
        Chain { pts, ids, reversed, mirrored: false }
    }

    /// The same chain seen through the reflection `x -> -x`. A left chain
    /// becomes a right chain of the reflected set.
    pub(crate) fn mirrored(self) -> Self {
        Chain { mirrored: !self.mirrored, ..self }
    }

    #[inline]
    pub(crate) fn len(&self) -> usize {
        self.ids.len()
    }

    #[inline]
    pub(crate) fn id(&self, k: usize) -> usize {
        if self.reversed {
            self.ids[self.ids.len() - 1 - k]
        } else {
            self.ids[k]
        }
    }

    #[inline]
    pub(crate) fn at(&self, k: usize) -> Point {
        let p = self.pts[self.id(k)];
        if self.mirrored {
            Point::new(-p.x, p.y)
        } else {
            p
        }
    }

    /// Vertex maximizing `<p, u>` on this chain as `(value, id)`.
    ///
    /// Edge directions along a chain turn monotonically through at most a
    /// half-turn, so the signs of `<e_k, u>` change at most once. The maximum
    /// is an endpoint or the first vertex after which the chain descends.
    pub(crate) fn extreme(&self, u: Point) -> (f64, usize) {
        let n = self.len();
        let last = n - 1;
        let (mut lo, mut hi) = (0usize, last);
        while lo < hi {
            let mid = (lo + hi) / 2;
            if (self.at(mid + 1) - self.at(mid)).dot(u) < 0.0 {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        let mut best = (self.at(0).dot(u), self.id(0));
        for k in [lo, last] {
            let cand = (self.at(k).dot(u), self.id(k));
            if cand.0 > best.0 || (cand.0 == best.0 && cand.1 < best.1) {
                best = cand;
            }
        }
        best
    }

    /// Orientation of edge `k -> k + 1`.
    #[inline]
    pub(crate) fn edge(&self, k: usize) -> f64 {
        edge_orientation(self.at(k), self.at(k + 1))
    }
}

/// A convex polygon given as its left and right chains, both top to bottom
/// and sharing their first and last vertex.
#[derive(Clone, Copy)]
pub(crate) struct Hull<'a> {
    pub left: Chain<'a>,
    pub right: Chain<'a>,
}

impl<'a> Hull<'a> {
    pub(crate) fn extreme(&self, u: Point) -> (f64, usize) {
        let a = self.left.extreme(u);
        let b = self.right.extreme(u);
        if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) {
            b
        } else {
            a
        }
    }

    /// Width of the hull measured along the unit normal of `theta`.
    #[inline]
    pub(crate) fn width_at(&self, theta: f64) -> f64 {
        let (s, c) = theta.sin_cos();
        let u = Point::new(-s, c);
        let hi = self.extreme(u).0;
        let lo = -self.extreme(-u).0;
        hi - lo
    }

    /// Smallest width over the closed orientation range `[alpha, beta]`,
    /// `0 <= alpha <= beta <= π`, as `(width, theta)`. Between consecutive
    /// edge orientations the width is a concave function of the angle, so the
    /// endpoints and the edge orientations inside the range suffice.
    pub(crate) fn min_width_in(&self, alpha: f64, beta: f64) -> (f64, f64) {
        let mut best = (self.width_at(alpha), alpha);
        let wb = self.width_at(beta);
        if wb < best.0 {
            best = (wb, beta);
        }
        let mut consider = |theta: f64| {
            let w = self.width_at(theta);
            if w < best.0 {
                best = (w, theta);
            }
        };
        // Left chain orientations increase top to bottom, right chain ones
        // decrease.
        let left = self.left;
        let edges = left.len().saturating_sub(1);
        let start = partition(edges, |k| left.edge(k) <= alpha);
        for k in start..edges {
            let t = left.edge(k);
            if t >= beta {
                break;
            }
            consider(t);
        }
        let right = self.right;
        let edges = right.len().saturating_sub(1);
        let start = partition(edges, |k| right.edge(k) >= beta);
        for k in start..edges {
            let t = right.edge(k);
            if t <= alpha {
                break;
            }
            consider(t);
        }
        best
    }
}

/// First index in `0..n` where `pred` turns false, for a predicate that is
/// true on a prefix.
#[inline]
fn partition(n: usize, pred: impl Fn(usize) -> bool) -> usize {
    let (mut lo, mut hi) = (0usize, n);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if pred(mid) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Position on `lower` where the right tangent from `a` touches it.
#[inline]
fn tangent_from(a: Point, lower: &Chain) -> usize {
    partition(lower.len() - 1, |j| {
        let b = lower.at(j);
        (a - b).cross(lower.at(j + 1) - b) < 0.0
    })
}

/// Right outer common tangent of a hull `upper` lying above a hull `lower`,
/// given their right chains. Returns positions `(ka, kb)` on the two chains.
/// Both sets lie to the left of the line directed from `lower[kb]` to
/// `upper[ka]`.
pub(crate) fn right_bridge(upper: &Chain, lower: &Chain) -> (usize, usize) {
    let ka = partition(upper.len() - 1, |i| {
        let a = upper.at(i);
        let t = lower.at(tangent_from(a, lower));
        (a - t).cross(upper.at(i + 1) - t) < 0.0
    });
    (ka, tangent_from(upper.at(ka), lower))
}

/// Orientations `(right, left)` of the two outer common tangents between an
/// upper hull and a lower hull. The upper set dominates iff `right <= left`.
pub(crate) fn outer_tangents(upper: &Hull, lower: &Hull) -> (f64, f64, Tangents) {
    let (ra, rb) = right_bridge(&upper.right, &lower.right);
    let d = upper.right.at(ra) - lower.right.at(rb);
    let mut t1 = d.y.atan2(d.x);
    if !(0.0..PI).contains(&t1) {
        t1 = 0.0;
    }
    let ul = upper.left.mirrored();
    let ll = lower.left.mirrored();
    let (la, lb) = right_bridge(&ul, &ll);
    let d = ul.at(la) - ll.at(lb);
    let mut t = d.y.atan2(d.x);
    if t < 0.0 {
        t = 0.0;
    }
    let t2 = PI - t;
    let touch =
        Tangents { right: (upper.right.id(ra), lower.right.id(rb)), left: (upper.left.id(la), lower.left.id(lb)) };
    (t1, t2, touch)
}

/// Ids of the tangent points, `(upper, lower)` for each tangent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Tangents {
    pub right: (usize, usize),
    pub left: (usize, usize),
}

/// Static chains of a point list sorted top to bottom, as id lists.
pub(crate) fn build_chains(pts: &[Point], order: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut left: Vec<usize> = Vec::new();
    let mut right: Vec<usize> = Vec::new();
    for &id in order {
        push_below(pts, &mut left, id, true);
        push_below(pts, &mut right, id, false);
    }
    (left, right)
}

/// Appends `id` below a top-anchored chain, popping vertices that stop being
/// convex. Returns how many were popped.
pub(crate) fn push_below(pts: &[Point], chain: &mut Vec<usize>, id: usize, left: bool) -> usize {
    let p = pts[id];
    let mut popped = 0;
    while chain.len() >= 2 {
        let a = pts[chain[chain.len() - 2]];
        let b = pts[chain[chain.len() - 1]];
        let c = (b - a).cross(p - b);
        let keep = if left { c > 0.0 } else { c < 0.0 };
        if keep {
            break;
        }
        chain.pop();
        popped += 1;
    }
    chain.push(id);
    popped
}
