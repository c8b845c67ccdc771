//! Posets embedded in the plane with covers along unit diagonals.

use std::collections::BTreeMap;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::poset::{OrderIdeal, Poset};

/// `(column, row)` in the plane.
pub type Position = (i64, i64);

/// How a boundary path must end.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathEnd {
    /// The last vertex sits at this height.
    Fixed(i64),
    /// Any height allowed by the other constraints.
    Free,
}

/// Region a boundary path lives in.
///
/// Path vertices are lattice points `(x, y)` with `x + y` odd, starting at
/// `start` and taking `length` unit steps, each `(+1, +1)` (a `1`) or
/// `(+1, -1)` (a `0`). An element at `(c, r)` lies under the path when
/// `r < y(c)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Window {
    pub start: Position,
    pub length: usize,
    pub end: PathEnd,
    pub floor: Option<i64>,
    pub ceiling: Option<i64>,
    /// Cells outside the poset that must always lie under the path.
    pub forced: Vec<Position>,
}

impl Window {
    pub fn new(start: Position, length: usize, end: PathEnd) -> Window {
        Window { start, length, end, floor: None, ceiling: None, forced: Vec::new() }
    }

    pub fn with_floor(mut self, floor: i64) -> Window {
        self.floor = Some(floor);
        self
    }

    pub fn with_forced(mut self, forced: Vec<Position>) -> Window {
        self.forced = forced;
        self
    }

    fn translated(&self, dx: i64, dy: i64) -> Window {
        Window {
            start: (self.start.0 + dx, self.start.1 + dy),
            length: self.length,
            end: match self.end {
                PathEnd::Fixed(y) => PathEnd::Fixed(y + dy),
                PathEnd::Free => PathEnd::Free,
            },
            floor: self.floor.map(|f| f + dy),
            ceiling: self.ceiling.map(|c| c + dy),
            forced: self.forced.iter().map(|&(c, r)| (c + dx, r + dy)).collect(),
        }
    }
}

/// A poset together with its planar embedding and the derived toggle groupings.
#[derive(Clone, Debug)]
pub struct RcPoset {
    poset: Poset,
    positions: Vec<Position>,
    rows: Vec<Vec<usize>>,
    columns: Vec<Vec<usize>>,
    diagonals: Vec<Vec<usize>>,
    window: Option<Window>,
    layers: Option<Vec<usize>>,
    height: usize,
}

impl RcPoset {
    /// Validates and normalizes an embedding.
    ///
    /// Positions are translated along `(1, 1)` until the lowest row is 1, then
    /// shifted horizontally by an even amount so the leftmost column is 1 or 2.
    /// The window moves with the elements.
    pub fn new(
        poset: Poset,
        positions: Vec<Position>,
        window: Option<Window>,
        layers: Option<Vec<usize>>,
    ) -> Result<RcPoset> {
        let n = poset.len();
        if positions.len() != n {
            return Err(Error::InvalidRcPoset(format!("{} positions for {n} elements", positions.len())));
        }
        if let Some(l) = &layers {
            if l.len() != n {
                return Err(Error::InvalidRcPoset("layer list length mismatch".into()));
            }
        }
        for (p, &(c, r)) in positions.iter().enumerate() {
            if (c + r).rem_euclid(2) != 0 {
                return Err(Error::InvalidRcPoset(format!("element {p} at ({c},{r}) has mixed parity")));
            }
        }
        for &(lo, hi) in poset.covers() {
            let (cl, rl) = positions[lo];
            let (ch, rh) = positions[hi];
            if rh - rl != 1 || (ch - cl).abs() != 1 {
                return Err(Error::InvalidRcPoset(format!(
                    "cover {}<{} joins ({cl},{rl}) and ({ch},{rh})",
                    poset.label(lo),
                    poset.label(hi)
                )));
            }
        }

        let (positions, window) = if n == 0 {
            (positions, window)
        } else {
            let min_row = positions.iter().map(|p| p.1).min().unwrap();
            let t = 1 - min_row;
            let min_col = positions.iter().map(|p| p.0 + t).min().unwrap();
            let d = 1 - min_col;
            let dx = t + d + d.rem_euclid(2);
            let moved = positions.iter().map(|&(c, r)| (c + dx, r + t)).collect();
            (moved, window.map(|w| w.translated(dx, t)))
        };

        let max_row = positions.iter().map(|p| p.1).max().unwrap_or(0);
        let max_col = positions.iter().map(|p| p.0).max().unwrap_or(0);
        let mut rows = vec![Vec::new(); max_row.max(0) as usize];
        let mut columns = vec![Vec::new(); max_col.max(0) as usize];
        for (p, &(c, r)) in positions.iter().enumerate() {
            rows[(r - 1) as usize].push(p);
            columns[(c - 1) as usize].push(p);
        }
        for row in &mut rows {
            row.sort_by_key(|&p| (positions[p].0, p));
        }
        for col in &mut columns {
            col.sort_by_key(|&p| (positions[p].1, p));
        }

        let diag_min = positions.iter().map(|&(c, r)| c - r).min().unwrap_or(0);
        let mut diag_map: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        for (p, &(c, r)) in positions.iter().enumerate() {
            diag_map.entry((c - r - diag_min) / 2).or_default().push(p);
        }
        let m = diag_map.keys().next_back().map_or(0, |&j| j as usize + 1);
        let mut diagonals = vec![Vec::new(); m];
        for (j, mut elems) in diag_map {
            elems.sort_by_key(|&p| (positions[p].1, p));
            diagonals[j as usize] = elems;
        }

        let mut fibers: BTreeMap<Position, usize> = BTreeMap::new();
        for &pos in &positions {
            *fibers.entry(pos).or_default() += 1;
        }
        let height = fibers.values().copied().max().unwrap_or(0);

        if let Some(w) = &window {
            if (w.start.0 + w.start.1).rem_euclid(2) != 1 {
                return Err(Error::InvalidRcPoset("window start must have odd coordinate sum".into()));
            }
            let last = w.start.0 + w.length as i64;
            if positions.iter().any(|&(c, _)| c < w.start.0 || c > last) {
                return Err(Error::InvalidRcPoset("element outside the window".into()));
            }
        }

        Ok(RcPoset { poset, positions, rows, columns, diagonals, window, layers, height })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn position(&self, p: usize) -> Position {
        self.positions[p]
    }

    pub fn positions(&self) -> &[Position] {
        &self.positions
    }

    /// Number of rows `n`; row `i` (1-based) is `rows()[i - 1]`.
    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Number of columns `k`; column `j` (1-based) is `columns()[j - 1]`.
    pub fn column_count(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    /// Number of diagonals `m`.
    pub fn diagonal_count(&self) -> usize {
        self.diagonals.len()
    }

    /// Diagonal `j` (1-based) lists the elements on one northeast line, lowest row first.
    pub fn diagonal(&self, j: usize) -> &[usize] {
        &self.diagonals[j - 1]
    }

    pub fn window(&self) -> Option<&Window> {
        self.window.as_ref()
    }

    /// Largest number of elements sharing a position.
    pub fn height(&self) -> usize {
        self.height
    }

    /// 1-based layer of each element, for layered families.
    pub fn layers(&self) -> Option<&[usize]> {
        self.layers.as_deref()
    }

    pub fn layer_count(&self) -> Option<usize> {
        self.layers.as_ref().map(|l| l.iter().copied().max().unwrap_or(0))
    }

    /// Elements sharing position `pos`, lowest in the poset first.
    pub fn fiber(&self, pos: Position) -> Vec<usize> {
        let mut f: Vec<usize> = (0..self.len()).filter(|&p| self.positions[p] == pos).collect();
        f.sort_by_key(|&p| (self.poset.down_closure(p).len(), p));
        f
    }

    pub fn enumerate_ideals(&self, cap: usize) -> Result<Vec<OrderIdeal>> {
        self.poset.enumerate_ideals(cap)
    }

    /// Elements in a set of positions, handy for tests.
    pub fn elements_at(&self, cells: &[Position]) -> ElementSet {
        (0..self.len()).filter(|&p| cells.contains(&self.positions[p])).collect()
    }
}
