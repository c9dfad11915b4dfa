//! Convex hull of a sliding window of points ordered top to bottom, under
//! two updates: insert a point below all others, delete the topmost point.
//!
//! The window is kept as two parts, like a queue built from two stacks. New
//! points go into the back part, an incremental hull anchored at its top.
//! Deletions come out of the front part, a hull anchored at its bottom that
//! is built by inserting points upward while logging what each insertion
//! popped; deleting the top point replays that log backwards. When the front
//! runs dry the whole back part is rebuilt as a new front. Every point is
//! pushed and popped a constant number of times per part, so updates are
//! amortized constant time.

use crate::chain::{self, Chain, Hull};
use crate::error::{Error, Result};
use crate::geom::{convex_hull, Point};
use std::collections::VecDeque;

/// One window-sliding update.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WindowEvent {
    InsertBelow(Point),
    DeleteTop,
}

/// Work counters: chain vertices popped by insertions, and popped or
/// restored while serving deletions (including rebuilds), per chain.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct WindowStats {
    pub insert_work: [usize; 2],
    pub delete_work: [usize; 2],
}

#[derive(Debug, Clone, Default)]
pub struct WindowHull {
    pts: Vec<Point>,
    window: VecDeque<usize>,
    /// The first `front_len` ids of `window` belong to the front part.
    front_len: usize,
    /// Back part chains, top to bottom.
    back: [Vec<usize>; 2],
    /// Front part chains, bottom to top.
    front: [Vec<usize>; 2],
    /// Per front insertion: how many vertices each chain popped.
    log: Vec<[u32; 2]>,
    popped: [Vec<usize>; 2],
    stats: WindowStats,
}

const LEFT: usize = 0;
const RIGHT: usize = 1;

impl WindowHull {
    pub fn new() -> Self {
        Self::default()
    }

    /// Window over points already sorted top to bottom, ready for deletions.
    /// Ids are positions in `sorted`.
    pub fn from_sorted(sorted: &[Point]) -> Self {
        let mut h = WindowHull { pts: sorted.to_vec(), window: (0..sorted.len()).collect(), ..Self::default() };
        h.rebuild_front();
        h
    }

    pub fn len(&self) -> usize {
        self.window.len()
    }

    pub fn is_empty(&self) -> bool {
        self.window.is_empty()
    }

    pub fn stats(&self) -> WindowStats {
        self.stats
    }

    pub fn point(&self, id: usize) -> Point {
        self.pts[id]
    }

    /// Ids currently in the window, top to bottom.
    pub fn ids(&self) -> impl Iterator<Item = usize> + '_ {
        self.window.iter().copied()
    }

    pub fn apply(&mut self, ev: WindowEvent) -> Result<()> {
        match ev {
            WindowEvent::InsertBelow(p) => self.insert_below(p).map(|_| ()),
            WindowEvent::DeleteTop => self.delete_top().map(|_| ()),
        }
    }

    /// Inserts `p`, which must lie below every point in the window. Returns
    /// its id.
    pub fn insert_below(&mut self, p: Point) -> Result<usize> {
        if let Some(&last) = self.window.back() {
            if !chain::above(self.pts[last], p) {
                return Err(Error::WindowDiscipline("inserted point is not below the window"));
            }
        }
        let id = self.pts.len();
        self.pts.push(p);
        self.window.push_back(id);
        for side in [LEFT, RIGHT] {
            let n = chain::push_below(&self.pts, &mut self.back[side], id, side == LEFT);
            self.stats.insert_work[side] += n;
        }
        Ok(id)
    }

    /// Removes the topmost point and returns its id.
    pub fn delete_top(&mut self) -> Result<usize> {
        if self.window.is_empty() {
            return Err(Error::WindowDiscipline("delete from an empty window"));
        }
        if self.front_len == 0 {
            self.rebuild_front();
        }
        let counts = self.log.pop().expect("front log matches front size");
        for side in [LEFT, RIGHT] {
            self.front[side].pop();
            let keep = self.popped[side].len() - counts[side] as usize;
            let restored = self.popped[side].drain(keep..).rev();
            self.front[side].extend(restored);
            self.stats.delete_work[side] += counts[side] as usize;
        }
        self.front_len -= 1;
        Ok(self.window.pop_front().expect("window nonempty"))
    }

    fn rebuild_front(&mut self) {
        debug_assert_eq!(self.front_len, 0);
        for side in [LEFT, RIGHT] {
            self.back[side].clear();
            self.front[side].clear();
            self.popped[side].clear();
        }
        self.log.clear();
        for k in (0..self.window.len()).rev() {
            let id = self.window[k];
            let mut counts = [0u32; 2];
            for side in [LEFT, RIGHT] {
                // Bottom-to-top chains turn the other way.
                let keep_neg = side == LEFT;
                let p = self.pts[id];
                let ch = &mut self.front[side];
                while ch.len() >= 2 {
                    let a = self.pts[ch[ch.len() - 2]];
                    let b = self.pts[ch[ch.len() - 1]];
                    let c = (b - a).cross(p - b);
                    if (keep_neg && c < 0.0) || (!keep_neg && c > 0.0) {
                        break;
                    }
                    self.popped[side].push(ch.pop().unwrap());
                    counts[side] += 1;
                }
                ch.push(id);
                self.stats.delete_work[side] += counts[side] as usize;
            }
            self.log.push(counts);
        }
        self.front_len = self.window.len();
    }

    /// Chains of the hull when the window lives in a single part.
    pub(crate) fn hull(&self) -> Option<Hull<'_>> {
        if self.window.is_empty() {
            return None;
        }
        if self.front_len == self.window.len() {
            Some(Hull {
                left: Chain::new(&self.pts, &self.front[LEFT], true),
                right: Chain::new(&self.pts, &self.front[RIGHT], true),
            })
        } else if self.front_len == 0 {
            Some(Hull {
                left: Chain::new(&self.pts, &self.back[LEFT], false),
                right: Chain::new(&self.pts, &self.back[RIGHT], false),
            })
        } else {
            None
        }
    }

    /// Point of the window maximizing `<p, u>`, as `(value, id)`.
    pub fn extreme(&self, u: Point) -> Option<(f64, usize)> {
        let mut best: Option<(f64, usize)> = None;
        let parts = [
            (self.front_len > 0).then(|| Hull {
                left: Chain::new(&self.pts, &self.front[LEFT], true),
                right: Chain::new(&self.pts, &self.front[RIGHT], true),
            }),
            (self.front_len < self.window.len()).then(|| Hull {
                left: Chain::new(&self.pts, &self.back[LEFT], false),
                right: Chain::new(&self.pts, &self.back[RIGHT], false),
            }),
        ];
        for h in parts.iter().flatten() {
            let c = h.extreme(u);
            if best.map_or(true, |b| c.0 > b.0) {
                best = Some(c);
            }
        }
        best
    }

    /// Hull vertices of the whole window, counterclockwise.
    pub fn hull_points(&self) -> Vec<Point> {
        let mut cand: Vec<Point> = Vec::new();
        if self.front_len > 0 {
            cand.extend(self.front.iter().flatten().map(|&i| self.pts[i]));
        }
        if self.front_len < self.window.len() {
            cand.extend(self.back.iter().flatten().map(|&i| self.pts[i]));
        }
        let h = convex_hull(&cand);
        h.into_iter().map(|i| cand[i]).collect()
    }
}
