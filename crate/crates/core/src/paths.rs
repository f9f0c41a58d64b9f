//! Lattice paths of type D_n.
//!
//! Columns run over `0..=N` with `N = 2n - 2`; heights grow downwards, so the
//! highest path is the pointwise minimum of its family. Two shapes occur:
//!
//! - the spin family (`node = n-1`): heights `y_0..y_{n-1}` with
//!   `y_0 = n - 1 + k` and unit steps;
//! - glued families (`node <= n-2`): a left half on columns `0..=n-1` and a
//!   right half on columns `n-1..=N`. Both halves keep their own height at
//!   column `n-1` (`y` and `y'`), subject to `y >= y'`.
//!
//! A path stores its heights flat: for glued paths the left half comes
//! first, followed by `y', y_n, ..., y_N`.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    pub x: usize,
    pub y: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Polarity {
    Upper,
    Lower,
}

/// Which copy of column `n-1` a corner or move refers to. Columns left of
/// `n-1` are always `Left`, columns right of it `Right`. `Joint` names the
/// doubled point of a glued path when both copies coincide.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
    Joint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Corner {
    pub point: LatticePoint,
    pub polarity: Polarity,
    pub side: Side,
}

/// Location of a lowering or raising move: the column, which copy of it, and
/// the level `l` of `A[j,l]^-1` (one below an upper corner, one above a
/// lower corner).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Site {
    pub column: usize,
    pub side: Side,
    pub level: i64,
}

impl Site {
    pub fn new(column: usize, side: Side, level: i64) -> Self {
        Self {
            column,
            side,
            level,
        }
    }
}

/// A validated path family `P[i,k]` for `1 <= i <= n-1`, `i - k` odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Family {
    rank: usize,
    node: usize,
    shift: i64,
}

impl Family {
    pub fn new(rank: usize, node: usize, shift: i64) -> Result<Self> {
        if rank < 4 {
            return Err(Error::RankTooSmall(rank));
        }
        if node == 0 || node > rank {
            return Err(Error::NodeOutOfRange { node, rank });
        }
        if node == rank {
            return Err(Error::NoPathFamily {
                node,
                max: rank - 1,
            });
        }
        if (node as i64 - shift).rem_euclid(2) != 1 {
            return Err(Error::Parity { node, shift });
        }
        Ok(Self { rank, node, shift })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn node(&self) -> usize {
        self.node
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn is_spin(&self) -> bool {
        self.node + 1 == self.rank
    }

    /// `N = 2n - 2`, the last column.
    pub fn last_column(&self) -> usize {
        2 * self.rank - 2
    }

    /// Columns other than `0`, `n-1` and `N`.
    pub(crate) fn interior_columns(&self) -> impl Iterator<Item = usize> {
        let n = self.rank;
        let end = if self.is_spin() {
            n - 1
        } else {
            self.last_column()
        };
        (1..end).filter(move |&c| c != n - 1)
    }

    /// Number of stored heights per path.
    pub fn path_len(&self) -> usize {
        if self.is_spin() {
            self.rank
        } else {
            2 * self.rank
        }
    }

    /// `y_0`.
    pub fn start_height(&self) -> i64 {
        if self.is_spin() {
            self.rank as i64 - 1 + self.shift
        } else {
            self.node as i64 + self.shift
        }
    }

    /// `y_N` for glued families.
    pub fn end_height(&self) -> i64 {
        2 * self.rank as i64 - 2 - self.node as i64 + self.shift
    }

    /// Flat index of `(column, side)`.
    pub(crate) fn slot(&self, column: usize, side: Side) -> Option<usize> {
        let n = self.rank;
        if column > self.last_column() || (self.is_spin() && column >= n) {
            return None;
        }
        if self.is_spin() || column + 1 < n {
            return Some(column);
        }
        if column + 1 > n {
            return Some(column + 1);
        }
        match side {
            Side::Left => Some(n - 1),
            Side::Right => Some(n),
            Side::Joint => None,
        }
    }

    /// Paths in lexicographic order of their height sequences, streamed.
    pub fn iter(&self) -> PathIter {
        PathIter::new(*self)
    }

    pub fn enumerate(&self) -> Vec<Path> {
        self.iter().collect()
    }

    /// Number of paths, without materializing them.
    pub fn count(&self) -> u64 {
        let lefts = half_paths(self.start_height(), self.rank);
        if self.is_spin() {
            return lefts.len() as u64;
        }
        let rights = self.right_halves();
        lefts
            .iter()
            .map(|l| rights.partition_point(|r| r[0] <= l[self.rank - 1]) as u64)
            .sum()
    }

    /// Right halves `(y', y_n, ..., y_N)` sorted lexicographically.
    fn right_halves(&self) -> Vec<Vec<i64>> {
        let mut rights: Vec<Vec<i64>> = half_paths(self.end_height(), self.rank)
            .into_iter()
            .map(|mut h| {
                h.reverse();
                h
            })
            .collect();
        rights.sort();
        rights
    }

    pub fn contains(&self, heights: &[i64]) -> bool {
        self.validate(heights).is_ok()
    }

    fn validate(&self, heights: &[i64]) -> Result<()> {
        let bad = |why: &str| Err(Error::InvalidPath(why.to_string()));
        if heights.len() != self.path_len() {
            return bad("wrong number of heights");
        }
        let n = self.rank;
        let unit = |w: &[i64]| w.windows(2).all(|p| (p[1] - p[0]).abs() == 1);
        if heights[0] != self.start_height() {
            return bad("wrong start height");
        }
        if self.is_spin() {
            return if unit(heights) {
                Ok(())
            } else {
                bad("steps must be +-1")
            };
        }
        let (left, right) = heights.split_at(n);
        if !unit(left) || !unit(right) {
            return bad("steps must be +-1");
        }
        if right[n - 1] != self.end_height() {
            return bad("wrong end height");
        }
        if left[n - 1] < right[0] {
            return bad("gluing requires y >= y' at column n-1");
        }
        Ok(())
    }

    /// The unique path without lower corners (pointwise minimal heights).
    pub fn highest_path(&self) -> Path {
        let n = self.rank;
        let y0 = self.start_height();
        let heights = if self.is_spin() {
            (0..n).map(|x| y0 - x as i64).collect()
        } else {
            let yn = self.end_height();
            // both halves meet at the lowest height the right half can reach
            let meet = yn - (n as i64 - 1);
            let mut h: Vec<i64> = (0..n)
                .map(|x| (y0 - x as i64).max(meet - (n - 1 - x) as i64))
                .collect();
            h.extend((0..n).map(|t| meet + t as i64));
            h
        };
        Path {
            family: *self,
            heights,
        }
    }

    /// The unique path without upper corners (pointwise maximal heights).
    pub fn lowest_path(&self) -> Path {
        let n = self.rank;
        let y0 = self.start_height();
        let heights = if self.is_spin() {
            (0..n).map(|x| y0 + x as i64).collect()
        } else {
            let yn = self.end_height();
            let meet = y0 + (n as i64 - 1);
            let mut h: Vec<i64> = (0..n).map(|x| y0 + x as i64).collect();
            h.extend((0..n).map(|t| (meet + t as i64).min(yn + (n - 1 - t) as i64)));
            h
        };
        Path {
            family: *self,
            heights,
        }
    }

    /// Closure of the highest path under lowering moves, in BFS order.
    pub fn enumerate_by_moves(&self) -> Vec<Path> {
        let start = self.highest_path();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        seen.insert(start.heights.clone());
        let mut queue = VecDeque::from([start]);
        let mut out = Vec::new();
        while let Some(p) = queue.pop_front() {
            for site in p.lowering_sites() {
                let q = p.lower(site).expect("site reported as applicable");
                if seen.insert(q.heights.clone()) {
                    queue.push_back(q);
                }
            }
            out.push(p);
        }
        out
    }
}

/// All unit-step sequences of length `len` starting at `start`, in
/// lexicographic order.
fn half_paths(start: i64, len: usize) -> Vec<Vec<i64>> {
    let steps = len - 1;
    (0..1u64 << steps)
        .map(|mask| {
            let mut h = Vec::with_capacity(len);
            h.push(start);
            for b in (0..steps).rev() {
                let last = *h.last().unwrap();
                h.push(if mask >> b & 1 == 1 {
                    last + 1
                } else {
                    last - 1
                });
            }
            h
        })
        .collect()
}

pub struct PathIter {
    family: Family,
    lefts: Vec<Vec<i64>>,
    rights: Vec<Vec<i64>>,
    left: usize,
    right: usize,
}

impl PathIter {
    fn new(family: Family) -> Self {
        let lefts = half_paths(family.start_height(), family.rank);
        let rights = if family.is_spin() {
            Vec::new()
        } else {
            family.right_halves()
        };
        Self {
            family,
            lefts,
            rights,
            left: 0,
            right: 0,
        }
    }
}

impl Iterator for PathIter {
    type Item = Path;

    fn next(&mut self) -> Option<Path> {
        let n = self.family.rank;
        if self.family.is_spin() {
            let h = self.lefts.get(self.left)?.clone();
            self.left += 1;
            return Some(Path {
                family: self.family,
                heights: h,
            });
        }
        loop {
            let left = self.lefts.get(self.left)?;
            match self.rights.get(self.right) {
                Some(r) if r[0] <= left[n - 1] => {
                    let mut h = Vec::with_capacity(2 * n);
                    h.extend_from_slice(left);
                    h.extend_from_slice(r);
                    self.right += 1;
                    return Some(Path {
                        family: self.family,
                        heights: h,
                    });
                }
                _ => {
                    self.left += 1;
                    self.right = 0;
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    family: Family,
    heights: Vec<i64>,
}

impl Path {
    pub fn new(family: Family, heights: Vec<i64>) -> Result<Self> {
        family.validate(&heights)?;
        Ok(Self { family, heights })
    }

    /// Glued path from its two halves; `right` starts with `y'` at column
    /// `n-1` and ends with `y_N`.
    pub fn glued(family: Family, left: &[i64], right: &[i64]) -> Result<Self> {
        Self::new(family, [left, right].concat())
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn heights(&self) -> &[i64] {
        &self.heights
    }

    /// Heights on columns `0..=n-1` (the whole path for the spin family).
    pub fn left(&self) -> &[i64] {
        &self.heights[..self.family.rank]
    }

    /// Heights on columns `n-1..=N`; empty for the spin family.
    pub fn right(&self) -> &[i64] {
        &self.heights[self.family.rank..]
    }

    pub fn is_spin(&self) -> bool {
        self.family.is_spin()
    }

    pub fn height(&self, column: usize, side: Side) -> Option<i64> {
        self.family.slot(column, side).map(|s| self.heights[s])
    }

    /// Points in column order; the doubled column of a glued path appears
    /// twice.
    pub fn points(&self) -> Vec<LatticePoint> {
        let n = self.family.rank;
        self.heights
            .iter()
            .enumerate()
            .map(|(idx, &y)| {
                let x = if self.is_spin() || idx < n {
                    idx
                } else {
                    idx - 1
                };
                LatticePoint { x, y }
            })
            .collect()
    }

    /// Neighbour heights `(before, after)` of an interior column.
    fn interior_neighbors(&self, column: usize) -> Option<(i64, i64, i64)> {
        let n = self.family.rank;
        if column == 0 || column == n - 1 || column >= self.family.last_column() {
            return None;
        }
        let side = if column < n - 1 {
            Side::Left
        } else {
            Side::Right
        };
        let s = self.family.slot(column, side)?;
        Some((self.heights[s - 1], self.heights[s], self.heights[s + 1]))
    }

    /// `(y_{n-2}, y, y', y_n)` around the doubled column of a glued path.
    fn junction(&self) -> Option<(i64, i64, i64, i64)> {
        if self.is_spin() {
            return None;
        }
        let n = self.family.rank;
        let h = &self.heights;
        Some((h[n - 2], h[n - 1], h[n], h[n + 1]))
    }

    pub fn corners(&self) -> (Vec<Corner>, Vec<Corner>) {
        let n = self.family.rank;
        let mut upper = Vec::new();
        let mut lower = Vec::new();
        let mut push = |x: usize, y: i64, side: Side, pol: Polarity| {
            let c = Corner {
                point: LatticePoint { x, y },
                polarity: pol,
                side,
            };
            match pol {
                Polarity::Upper => upper.push(c),
                Polarity::Lower => lower.push(c),
            }
        };
        for column in self.family.interior_columns() {
            let side = if column < n - 1 {
                Side::Left
            } else {
                Side::Right
            };
            if let Some((a, y, b)) = self.interior_neighbors(column) {
                if a == b && a == y + 1 {
                    push(column, y, side, Polarity::Upper);
                } else if a == b && a == y - 1 {
                    push(column, y, side, Polarity::Lower);
                }
            }
        }
        match self.junction() {
            None => {
                let (a, y) = (self.heights[n - 2], self.heights[n - 1]);
                let pol = if a == y + 1 {
                    Polarity::Upper
                } else {
                    Polarity::Lower
                };
                push(n - 1, y, Side::Left, pol);
            }
            Some((a, y, y2, b)) if y == y2 => {
                if a == b && a == y + 1 {
                    push(n - 1, y, Side::Joint, Polarity::Upper);
                } else if a == b && a == y - 1 {
                    push(n - 1, y, Side::Joint, Polarity::Lower);
                }
            }
            Some((a, y, y2, b)) => {
                let pol = if a == y + 1 {
                    Polarity::Upper
                } else {
                    Polarity::Lower
                };
                push(n - 1, y, Side::Left, pol);
                let pol = if b == y2 + 1 {
                    Polarity::Upper
                } else {
                    Polarity::Lower
                };
                push(n - 1, y2, Side::Right, pol);
            }
        }
        upper.sort();
        lower.sort();
        (upper, lower)
    }

    pub fn can_lower(&self, site: Site) -> bool {
        self.lowered_heights(site).is_some()
    }

    pub fn can_raise(&self, site: Site) -> bool {
        self.raised_heights(site).is_some()
    }

    pub fn lower(&self, site: Site) -> Result<Path> {
        self.lowered_heights(site)
            .map(|heights| Path {
                family: self.family,
                heights,
            })
            .ok_or(Error::MoveNotApplicable {
                column: site.column,
                level: site.level,
            })
    }

    pub fn raise(&self, site: Site) -> Result<Path> {
        self.raised_heights(site)
            .map(|heights| Path {
                family: self.family,
                heights,
            })
            .ok_or(Error::MoveNotApplicable {
                column: site.column,
                level: site.level,
            })
    }

    fn lowered_heights(&self, site: Site) -> Option<Vec<i64>> {
        self.moved_heights(site, 1)
    }

    fn raised_heights(&self, site: Site) -> Option<Vec<i64>> {
        self.moved_heights(site, -1)
    }

    /// Shared logic for both move directions: `dir = 1` lowers (heights grow
    /// by 2), `dir = -1` raises. A lowering at level `l` moves a point from
    /// `l - 1` to `l + 1`; a raising moves it back.
    fn moved_heights(&self, site: Site, dir: i64) -> Option<Vec<i64>> {
        let n = self.family.rank;
        let l = site.level;
        let from = l - dir;
        let mut h = self.heights.clone();
        let column = site.column;
        if column != n - 1 {
            let expected = if column < n - 1 {
                Side::Left
            } else {
                Side::Right
            };
            if site.side != expected {
                return None;
            }
            let (a, y, b) = self.interior_neighbors(column)?;
            if y != from || a != l || b != l {
                return None;
            }
            h[self.family.slot(column, site.side)?] = l + dir;
            return Some(h);
        }
        let Some((before, y, y2, after)) = self.junction() else {
            if site.side != Side::Left || h[n - 1] != from || h[n - 2] != l {
                return None;
            }
            h[n - 1] = l + dir;
            return Some(h);
        };
        match site.side {
            Side::Left => {
                if y != from || before != l {
                    return None;
                }
                h[n - 1] = l + dir;
            }
            Side::Right => {
                if y2 != from || after != l {
                    return None;
                }
                h[n] = l + dir;
            }
            Side::Joint => {
                if y != from || y2 != from || before != l || after != l {
                    return None;
                }
                h[n - 1] = l + dir;
                h[n] = l + dir;
            }
        }
        (h[n - 1] >= h[n]).then_some(h)
    }

    fn candidate_sites(&self, dir: i64) -> Vec<Site> {
        let n = self.family.rank;
        let mut out = Vec::new();
        for column in self.family.interior_columns() {
            let side = if column < n - 1 {
                Side::Left
            } else {
                Side::Right
            };
            let y = self.height(column, side).unwrap();
            out.push(Site::new(column, side, y + dir));
        }
        match self.junction() {
            None => out.push(Site::new(n - 1, Side::Left, self.heights[n - 1] + dir)),
            Some((_, y, y2, _)) => {
                out.push(Site::new(n - 1, Side::Left, y + dir));
                out.push(Site::new(n - 1, Side::Right, y2 + dir));
                if y == y2 {
                    out.push(Site::new(n - 1, Side::Joint, y + dir));
                }
            }
        }
        out
    }

    /// All sites where a lowering move applies.
    pub fn lowering_sites(&self) -> Vec<Site> {
        self.candidate_sites(1)
            .into_iter()
            .filter(|&s| self.can_lower(s))
            .collect()
    }

    /// All sites where a raising move applies.
    pub fn raising_sites(&self) -> Vec<Site> {
        self.candidate_sites(-1)
            .into_iter()
            .filter(|&s| self.can_raise(s))
            .collect()
    }

    /// Pointwise minimum of heights.
    pub fn join(&self, other: &Path) -> Result<Path> {
        self.zip_with(other, i64::min)
    }

    /// Pointwise maximum of heights.
    pub fn meet(&self, other: &Path) -> Result<Path> {
        self.zip_with(other, i64::max)
    }

    fn zip_with(&self, other: &Path, f: fn(i64, i64) -> i64) -> Result<Path> {
        if self.family != other.family {
            return Err(Error::FamilyMismatch);
        }
        let heights = self
            .heights
            .iter()
            .zip(&other.heights)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Ok(Path {
            family: self.family,
            heights,
        })
    }

    /// Every height at least the other's: `self` lies weakly below `other`.
    pub fn is_below(&self, other: &Path) -> bool {
        self.family == other.family && self.heights.iter().zip(&other.heights).all(|(a, b)| a >= b)
    }

    /// The same path in `P[i,k+delta]`; `delta` must be even.
    pub fn translated(&self, delta: i64) -> Result<Path> {
        let f = self.family;
        let family = Family::new(f.rank, f.node, f.shift + delta)?;
        Path::new(family, self.heights.iter().map(|y| y + delta).collect())
    }
}
