//! Standard skew tableaux and promotion by adjacent swaps.

use std::fmt;

use crate::bijections::boundary::{boundary_word, word_to_ideal, BinaryWord};
use crate::error::{Error, Result};
use crate::poset::OrderIdeal;
use crate::toggles::rc::RcPoset;

/// A skew shape given row by row as `(offset, length)`; row 0 is on top.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    rows: Vec<(usize, usize)>,
}

impl SkewShape {
    /// `λ/μ` from partitions (μ padded with zeros).
    pub fn new(lambda: &[usize], mu: &[usize]) -> Result<SkewShape> {
        if lambda.windows(2).any(|w| w[0] < w[1]) || mu.windows(2).any(|w| w[0] < w[1]) || mu.len() > lambda.len() {
            return Err(Error::InvalidTableau("shape rows must be weakly decreasing".into()));
        }
        let mut rows = Vec::with_capacity(lambda.len());
        for (r, &l) in lambda.iter().enumerate() {
            let m = mu.get(r).copied().unwrap_or(0);
            if m > l {
                return Err(Error::InvalidTableau(format!("mu exceeds lambda in row {}", r + 1)));
            }
            rows.push((m, l - m));
        }
        Ok(SkewShape { rows })
    }

    pub fn straight(lambda: &[usize]) -> Result<SkewShape> {
        SkewShape::new(lambda, &[])
    }

    /// `(n+k, m)/(k)`.
    pub fn two_row(n: usize, m: usize, k: usize) -> Result<SkewShape> {
        SkewShape::new(&[n + k, m], &[k])
    }

    pub fn rows(&self) -> &[(usize, usize)] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.1).sum()
    }

    fn contains(&self, (r, c): (usize, usize)) -> bool {
        self.rows.get(r).is_some_and(|&(o, l)| c >= o && c < o + l)
    }

    /// Every standard filling, ordered by the row sequence of values `1..=N`.
    pub fn tableaux(&self) -> Vec<SkewTableau> {
        let mut out = Vec::new();
        let mut filled: Vec<usize> = vec![0; self.rows.len()];
        let mut cells = Vec::with_capacity(self.size());
        self.fill(&mut filled, &mut cells, &mut out);
        out
    }

    fn fill(&self, filled: &mut Vec<usize>, cells: &mut Vec<(usize, usize)>, out: &mut Vec<SkewTableau>) {
        if cells.len() == self.size() {
            out.push(SkewTableau { shape: self.clone(), cells: cells.clone() });
            return;
        }
        for r in 0..self.rows.len() {
            let (o, l) = self.rows[r];
            if filled[r] == l {
                continue;
            }
            let c = o + filled[r];
            let above_ok = r == 0 || !self.contains((r - 1, c)) || self.rows[r - 1].0 + filled[r - 1] > c;
            if above_ok {
                filled[r] += 1;
                cells.push((r, c));
                self.fill(filled, cells, out);
                cells.pop();
                filled[r] -= 1;
            }
        }
    }
}

/// A standard filling: `cells[v - 1]` holds value `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewTableau {
    shape: SkewShape,
    cells: Vec<(usize, usize)>,
}

impl PartialOrd for SkewShape {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SkewShape {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.rows.cmp(&other.rows)
    }
}

impl SkewTableau {
    pub fn from_cells(shape: SkewShape, cells: Vec<(usize, usize)>) -> Result<SkewTableau> {
        let t = SkewTableau { shape, cells };
        t.validate()?;
        Ok(t)
    }

    /// Builds a tableau from the value list of each row, left to right.
    pub fn from_rows(shape: SkewShape, rows: &[Vec<usize>]) -> Result<SkewTableau> {
        let n = shape.size();
        let mut cells = vec![(usize::MAX, usize::MAX); n];
        if rows.len() != shape.rows.len() {
            return Err(Error::InvalidTableau("row count mismatch".into()));
        }
        for (r, vals) in rows.iter().enumerate() {
            let (o, l) = shape.rows[r];
            if vals.len() != l {
                return Err(Error::InvalidTableau(format!("row {} has {} entries, expected {l}", r + 1, vals.len())));
            }
            for (i, &v) in vals.iter().enumerate() {
                if v == 0 || v > n || cells[v - 1].0 != usize::MAX {
                    return Err(Error::InvalidTableau(format!("value {v} repeated or out of range")));
                }
                cells[v - 1] = (r, o + i);
            }
        }
        SkewTableau::from_cells(shape, cells)
    }

    fn validate(&self) -> Result<()> {
        let n = self.shape.size();
        if self.cells.len() != n {
            return Err(Error::InvalidTableau("wrong number of values".into()));
        }
        let mut grid = std::collections::HashMap::new();
        for (v, &cell) in self.cells.iter().enumerate() {
            if !self.shape.contains(cell) || grid.insert(cell, v).is_some() {
                return Err(Error::InvalidTableau(format!("bad cell for value {}", v + 1)));
            }
        }
        for (&(r, c), &v) in &grid {
            for next in [(r, c + 1), (r + 1, c)] {
                if let Some(&w) = grid.get(&next) {
                    if w < v {
                        return Err(Error::InvalidTableau("rows and columns must increase".into()));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    /// Cell `(row, column)` holding value `v` (1-based value).
    pub fn cell_of(&self, v: usize) -> (usize, usize) {
        self.cells[v - 1]
    }

    /// Values of each row, left to right.
    pub fn row_values(&self) -> Vec<Vec<usize>> {
        let mut rows: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.shape.rows.len()];
        for (v, &(r, c)) in self.cells.iter().enumerate() {
            rows[r].push((c, v + 1));
        }
        rows.into_iter()
            .map(|mut row| {
                row.sort_unstable();
                row.into_iter().map(|(_, v)| v).collect()
            })
            .collect()
    }

    /// `ρ_{N−1} ∘ ⋯ ∘ ρ_1`, where `ρ_i` swaps `i` and `i+1` unless they are
    /// neighbours in a row or a column.
    pub fn promotion(&self) -> SkewTableau {
        let mut cells = self.cells.clone();
        for i in 0..cells.len().saturating_sub(1) {
            let (a, b) = (cells[i], cells[i + 1]);
            let touching = (a.0 == b.0 && a.1.abs_diff(b.1) == 1) || (a.1 == b.1 && a.0.abs_diff(b.0) == 1);
            if !touching {
                cells.swap(i, i + 1);
            }
        }
        SkewTableau { shape: self.shape.clone(), cells }
    }
}

impl fmt::Display for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.row_values();
        for (r, vals) in rows.iter().enumerate() {
            if r > 0 {
                write!(f, " / ")?;
            }
            let mut parts: Vec<String> = vec![".".to_string(); self.shape.rows[r].0];
            parts.extend(vals.iter().map(|v| v.to_string()));
            write!(f, "{}", parts.join(" "))?;
        }
        Ok(())
    }
}

/// Tableau of shape `(n+k, m)/(k)` for an ideal of the interior with offset
/// `k`: value `i` goes in the top row exactly when letter `i` of the boundary
/// word is `1`.
pub fn ideal_to_syt(rc: &RcPoset, k: usize, ideal: OrderIdeal) -> Result<SkewTableau> {
    let w = boundary_word(rc, ideal)?;
    let shape = SkewShape::two_row(w.ones(), w.len() - w.ones(), k)?;
    let mut rows = vec![Vec::new(), Vec::new()];
    for (i, &b) in w.bits().iter().enumerate() {
        rows[if b == 1 { 0 } else { 1 }].push(i + 1);
    }
    SkewTableau::from_rows(shape, &rows)
}

/// Inverse of [`ideal_to_syt`].
pub fn syt_to_ideal(rc: &RcPoset, t: &SkewTableau) -> Result<OrderIdeal> {
    let bits = (1..=t.shape().size()).map(|v| u8::from(t.cell_of(v).0 == 0)).collect();
    word_to_ideal(rc, &BinaryWord::new(bits)?)
}
