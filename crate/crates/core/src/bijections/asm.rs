//! Alternating sign matrices, height functions and gyration.

use std::fmt;

use crate::error::{Error, Result};
use crate::families::{asm_cell, asm_roots};
use crate::poset::OrderIdeal;
use crate::toggles::rc::RcPoset;

fn grid_to_string<T: fmt::Display>(rows: &[Vec<T>]) -> String {
    rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")).collect::<Vec<_>>().join(" / ")
}

fn parse_grid(s: &str) -> Result<Vec<Vec<i64>>> {
    s.split('/')
        .map(|r| {
            r.split_whitespace()
                .map(|x| x.parse::<i64>().map_err(|_| Error::DomainError(format!("bad entry `{x}`"))))
                .collect()
        })
        .collect()
}

/// An `n×n` matrix over `{−1, 0, 1}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AsmMatrix {
    rows: Vec<Vec<i8>>,
}

impl AsmMatrix {
    pub fn new(rows: Vec<Vec<i8>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidAsm("matrix is not square".into()));
        }
        let line_ok = |line: &mut dyn Iterator<Item = i8>| {
            let mut sum = 0i32;
            for x in line {
                if !(-1..=1).contains(&x) {
                    return false;
                }
                sum += x as i32;
                if !(0..=1).contains(&sum) {
                    return false;
                }
            }
            sum == 1
        };
        for i in 0..n {
            if !line_ok(&mut rows[i].iter().copied()) {
                return Err(Error::InvalidAsm(format!("row {}", i + 1)));
            }
            if !line_ok(&mut (0..n).map(|r| rows[r][i])) {
                return Err(Error::InvalidAsm(format!("column {}", i + 1)));
            }
        }
        Ok(AsmMatrix { rows })
    }

    pub fn identity(n: usize) -> Self {
        AsmMatrix { rows: (0..n).map(|i| (0..n).map(|j| i8::from(i == j)).collect()).collect() }
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i8>] {
        &self.rows
    }

    /// Parses rows of space-separated entries joined by `/`.
    pub fn parse(s: &str) -> Result<Self> {
        let rows = parse_grid(s)?
            .into_iter()
            .map(|r| {
                r.into_iter().map(|x| i8::try_from(x).map_err(|_| Error::InvalidAsm(format!("entry {x}")))).collect()
            })
            .collect::<Result<Vec<Vec<i8>>>>()?;
        AsmMatrix::new(rows)
    }
}

impl fmt::Display for AsmMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", grid_to_string(&self.rows))
    }
}

/// An `(n+1)×(n+1)` height function, indexed from `0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HeightFunction {
    rows: Vec<Vec<i64>>,
}

impl HeightFunction {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let size = rows.len();
        if size == 0 || rows.iter().any(|r| r.len() != size) {
            return Err(Error::InvalidHeightFunction("matrix is not square".into()));
        }
        let n = size as i64 - 1;
        for k in 0..size {
            let kk = k as i64;
            if rows[0][k] != kk || rows[k][0] != kk || rows[size - 1][k] != n - kk || rows[k][size - 1] != n - kk {
                return Err(Error::InvalidHeightFunction(format!("boundary entry at index {k}")));
            }
        }
        for i in 0..size {
            for j in 0..size {
                if (i + 1 < size && (rows[i][j] - rows[i + 1][j]).abs() != 1)
                    || (j + 1 < size && (rows[i][j] - rows[i][j + 1]).abs() != 1)
                {
                    return Err(Error::InvalidHeightFunction(format!("entries next to ({i},{j}) do not differ by 1")));
                }
            }
        }
        Ok(HeightFunction { rows })
    }

    /// `h_{i,j} = |i − j|`, the least height function.
    pub fn minimal(n: usize) -> Self {
        HeightFunction { rows: (0..=n).map(|i| (0..=n).map(|j| (i as i64 - j as i64).abs()).collect()).collect() }
    }

    pub fn order(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn parse(s: &str) -> Result<Self> {
        HeightFunction::new(parse_grid(s)?)
    }
}

impl fmt::Display for HeightFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", grid_to_string(&self.rows))
    }
}

/// `h_{i,j} = i + j − 2 Σ_{a ≤ i, b ≤ j} A_{a,b}`.
pub fn height_from_asm(a: &AsmMatrix) -> HeightFunction {
    let n = a.order();
    let mut partial = vec![vec![0i64; n + 1]; n + 1];
    for i in 1..=n {
        for j in 1..=n {
            partial[i][j] = a.rows[i - 1][j - 1] as i64 + partial[i - 1][j] + partial[i][j - 1] - partial[i - 1][j - 1];
        }
    }
    let rows = (0..=n).map(|i| (0..=n).map(|j| (i + j) as i64 - 2 * partial[i][j]).collect()).collect();
    HeightFunction { rows }
}

/// Inverse of [`height_from_asm`].
pub fn asm_from_height(h: &HeightFunction) -> Result<AsmMatrix> {
    let n = h.order();
    let s = |i: usize, j: usize| ((i + j) as i64 - h.rows[i][j]) / 2;
    let rows = (1..=n)
        .map(|i| (1..=n).map(|j| (s(i, j) - s(i - 1, j) - s(i, j - 1) + s(i - 1, j - 1)) as i8).collect())
        .collect();
    AsmMatrix::new(rows)
}

fn cell_chains(rc: &RcPoset, n: usize) -> Result<Vec<Vec<Vec<usize>>>> {
    let roots = asm_roots(n);
    if roots.len() != rc.len() {
        return Err(Error::DomainError(format!("not the ASM poset of order {n}")));
    }
    let mut cells = vec![vec![Vec::new(); n + 1]; n + 1];
    for (p, r) in roots.iter().enumerate() {
        let (i, j) = asm_cell(n, r);
        cells[i][j].push(p);
    }
    for row in &mut cells {
        for chain in row.iter_mut() {
            chain.sort_by_key(|&p| rc.position(p).1);
        }
    }
    Ok(cells)
}

/// `h_{i,j} = |i − j| + 2·|I ∩ cell(i, j)|`, reading the ASM poset of order
/// `n` cell by cell.
pub fn ideal_to_height(rc: &RcPoset, n: usize, ideal: OrderIdeal) -> Result<HeightFunction> {
    let cells = cell_chains(rc, n)?;
    let rows = (0..=n)
        .map(|i| {
            (0..=n)
                .map(|j| {
                    let inside = cells[i][j].iter().filter(|&&p| ideal.contains(p)).count();
                    (i as i64 - j as i64).abs() + 2 * inside as i64
                })
                .collect()
        })
        .collect();
    HeightFunction::new(rows)
}

/// Inverse of [`ideal_to_height`].
pub fn height_to_ideal(rc: &RcPoset, h: &HeightFunction) -> Result<OrderIdeal> {
    let n = h.order();
    let cells = cell_chains(rc, n)?;
    let mut ideal = OrderIdeal::EMPTY;
    for i in 0..=n {
        for j in 0..=n {
            let extra = h.rows[i][j] - (i as i64 - j as i64).abs();
            let chain = &cells[i][j];
            if extra < 0 || extra % 2 != 0 || (extra / 2) as usize > chain.len() {
                return Err(Error::InvalidHeightFunction(format!("entry ({i},{j}) is out of range")));
            }
            for &p in &chain[..(extra / 2) as usize] {
                ideal.insert(p);
            }
        }
    }
    if !rc.poset().is_order_ideal(ideal) || ideal_to_height(rc, n, ideal)? != *h {
        return Err(Error::InvalidHeightFunction("no ideal has this height function".into()));
    }
    Ok(ideal)
}

/// Visits interior entries with `i + j` even, then those with `i + j` odd,
/// flipping `h` to the other value when all four neighbours agree.
pub fn gyration_heights(h: &HeightFunction) -> HeightFunction {
    let n = h.order();
    let mut rows = h.rows.clone();
    for parity in [0, 1] {
        for i in 1..n {
            for j in 1..n {
                if (i + j) % 2 != parity {
                    continue;
                }
                let v = rows[i - 1][j];
                if rows[i + 1][j] == v && rows[i][j - 1] == v && rows[i][j + 1] == v {
                    rows[i][j] = 2 * v - rows[i][j];
                }
            }
        }
    }
    HeightFunction { rows }
}
