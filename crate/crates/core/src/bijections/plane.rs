//! Plane partitions in `[ℓ]×[m]×[n]`: boundary path matrices, bracket words
//! and noncrossing set partitions.

use std::fmt;
use std::str::FromStr;

use crate::bijections::boundary::{boundary_word, word_to_ideal, BinaryWord};
use crate::error::{Error, Result};
use crate::families::chain_product;
use crate::poset::OrderIdeal;

/// One boundary word per layer, shifted right by the layer index.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoundaryPathMatrix {
    rows: Vec<Vec<u8>>,
}

impl BoundaryPathMatrix {
    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn width(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// Parses rows of `0`/`1` separated by `/`.
    pub fn parse(s: &str) -> Result<Self> {
        let rows = s
            .split('/')
            .map(|r| r.trim().parse::<BinaryWord>().map(|w| w.bits().to_vec()))
            .collect::<Result<Vec<_>>>()?;
        if rows.windows(2).any(|w| w[0].len() != w[1].len()) {
            return Err(Error::InvalidMatrix("rows of unequal length".into()));
        }
        Ok(BoundaryPathMatrix { rows })
    }
}

impl fmt::Display for BoundaryPathMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "/")?;
            }
            for b in row {
                write!(f, "{b}")?;
            }
        }
        Ok(())
    }
}

/// Layer `i` of an ideal of `[ℓ]×[m]×[n]`, as an ideal of `[n]×[m]` where
/// `(k, j)` stands for `(i, j, k)`.
fn layer_ideal(m: usize, n: usize, i: usize, ideal: OrderIdeal) -> OrderIdeal {
    let base = (i - 1) * m * n;
    (1..=n)
        .flat_map(|k| (1..=m).map(move |j| (k, j)))
        .filter(|&(k, j)| ideal.contains(base + (j - 1) * n + (k - 1)))
        .map(|(k, j)| (k - 1) * m + (j - 1))
        .collect()
}

/// The `ℓ × (m+n+ℓ−1)` matrix whose row `i` is `0^{i−1} w_i 0^{ℓ−i}`, where
/// `w_i` is the boundary word of layer `i` of an ideal of `[ℓ]×[m]×[n]`.
pub fn boundary_path_matrix([l, m, n]: [usize; 3], ideal: OrderIdeal) -> Result<BoundaryPathMatrix> {
    let layer = chain_product(&[n, m])?;
    let mut rows = Vec::with_capacity(l);
    for i in 1..=l {
        let w = boundary_word(&layer, layer_ideal(m, n, i, ideal))?;
        let mut row = vec![0u8; i - 1];
        row.extend_from_slice(w.bits());
        row.extend(std::iter::repeat_n(0, l - i));
        rows.push(row);
    }
    Ok(BoundaryPathMatrix { rows })
}

/// Inverse of [`boundary_path_matrix`].
pub fn matrix_to_ideal([l, m, n]: [usize; 3], matrix: &BoundaryPathMatrix) -> Result<OrderIdeal> {
    if matrix.rows.len() != l || matrix.rows.iter().any(|r| r.len() != m + n + l - 1) {
        return Err(Error::InvalidMatrix(format!("expected {l} rows of length {}", m + n + l - 1)));
    }
    let layer = chain_product(&[n, m])?;
    let mut ideal = OrderIdeal::EMPTY;
    for (idx, row) in matrix.rows.iter().enumerate() {
        let i = idx + 1;
        if row.iter().sum::<u8>() as usize != n {
            return Err(Error::InvalidMatrix(format!("row {i} does not sum to {n}")));
        }
        if row[..i - 1].iter().chain(&row[i - 1 + m + n..]).any(|&b| b != 0) {
            return Err(Error::InvalidMatrix(format!("row {i} has a 1 in its padding")));
        }
        let w = BinaryWord::new(row[i - 1..i - 1 + m + n].to_vec())?;
        let sub = word_to_ideal(&layer, &w).map_err(|e| Error::InvalidMatrix(e.to_string()))?;
        for p in sub.iter() {
            let (k, j) = (p / m + 1, p % m + 1);
            ideal.insert((i - 1) * m * n + (j - 1) * n + (k - 1));
        }
    }
    if !chain_product(&[l, m, n])?.poset().is_order_ideal(ideal) {
        return Err(Error::InvalidMatrix("layers are not nested".into()));
    }
    Ok(ideal)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bracket {
    Open,
    Close,
    Dot,
    /// A close immediately followed by an open.
    CloseOpen,
}

impl Bracket {
    fn symbol(self) -> char {
        match self {
            Bracket::Open => '(',
            Bracket::Close => ')',
            Bracket::Dot => '.',
            Bracket::CloseOpen => 'X',
        }
    }
}

/// A word over `( ) . X`, with `X` read as `)(`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BracketWord(Vec<Bracket>);

impl BracketWord {
    pub fn new(letters: Vec<Bracket>) -> Self {
        BracketWord(letters)
    }

    pub fn letters(&self) -> &[Bracket] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Prefix depth never drops below zero and ends at zero.
    pub fn is_balanced(&self) -> bool {
        let mut depth = 0i64;
        for b in &self.0 {
            match b {
                Bracket::Open => depth += 1,
                Bracket::Close => depth -= 1,
                Bracket::CloseOpen => {
                    if depth == 0 {
                        return false;
                    }
                }
                Bracket::Dot => {}
            }
            if depth < 0 {
                return false;
            }
        }
        depth == 0
    }

    /// Number of `(` (counting those inside `X`).
    pub fn opens(&self) -> usize {
        self.0.iter().filter(|b| matches!(b, Bracket::Open | Bracket::CloseOpen)).count()
    }

    /// Every balanced word with `m` opening brackets and length `m+n+1`.
    pub fn all(m: usize, n: usize) -> Vec<BracketWord> {
        let len = m + n + 1;
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(len);
        fn go(cur: &mut Vec<Bracket>, len: usize, depth: usize, opens: usize, m: usize, out: &mut Vec<BracketWord>) {
            if cur.len() == len {
                if depth == 0 && opens == m {
                    out.push(BracketWord(cur.clone()));
                }
                return;
            }
            let left = len - cur.len();
            for b in [Bracket::Open, Bracket::Close, Bracket::Dot, Bracket::CloseOpen] {
                let (d, o) = match b {
                    Bracket::Open => (depth + 1, opens + 1),
                    Bracket::Close if depth > 0 => (depth - 1, opens),
                    Bracket::CloseOpen if depth > 0 => (depth, opens + 1),
                    Bracket::Dot => (depth, opens),
                    _ => continue,
                };
                if o > m || d > left - 1 {
                    continue;
                }
                cur.push(b);
                go(cur, len, d, o, m, out);
                cur.pop();
            }
        }
        go(&mut cur, len, 0, 0, m, &mut out);
        out
    }
}

impl fmt::Display for BracketWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{}", b.symbol())?;
        }
        Ok(())
    }
}

impl FromStr for BracketWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '(' => Ok(Bracket::Open),
                ')' => Ok(Bracket::Close),
                '.' => Ok(Bracket::Dot),
                'X' => Ok(Bracket::CloseOpen),
                _ => Err(Error::InvalidWord(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()
            .map(BracketWord)
    }
}

/// Reads the columns of a two-row matrix: `(1,0)` → `(`, `(0,1)` → `)`,
/// `(1,1)` → `X`, `(0,0)` → `.`.
pub fn bracket_word(matrix: &BoundaryPathMatrix) -> Result<BracketWord> {
    let [top, bottom] = matrix.rows.as_slice() else {
        return Err(Error::NotTwoLayers);
    };
    Ok(BracketWord(
        top.iter()
            .zip(bottom)
            .map(|(&a, &b)| match (a, b) {
                (1, 0) => Bracket::Open,
                (0, 1) => Bracket::Close,
                (1, 1) => Bracket::CloseOpen,
                _ => Bracket::Dot,
            })
            .collect(),
    ))
}

/// Inverse of [`bracket_word`].
pub fn bracket_matrix(word: &BracketWord) -> BoundaryPathMatrix {
    let (top, bottom) = word
        .0
        .iter()
        .map(|b| match b {
            Bracket::Open => (1, 0),
            Bracket::Close => (0, 1),
            Bracket::CloseOpen => (1, 1),
            Bracket::Dot => (0, 0),
        })
        .unzip();
    BoundaryPathMatrix { rows: vec![top, bottom] }
}

/// `•A ↦ A•`; `(A₁)A₂ ↦ A₁(A₂)`;
/// `(A₁ X A₂ ⋯ X A_k) A_{k+1} ↦ A₁ (A₂ X ⋯ X A_k X A_{k+1})`.
pub fn psi(word: &BracketWord) -> Result<BracketWord> {
    if !word.is_balanced() {
        return Err(Error::Unbalanced);
    }
    let w = &word.0;
    match w.first() {
        None => Ok(word.clone()),
        Some(Bracket::Dot) => {
            let mut out = w[1..].to_vec();
            out.push(Bracket::Dot);
            Ok(BracketWord(out))
        }
        Some(Bracket::Open) => {
            let mut depth = 0usize;
            let mut first_x = None;
            let mut close = None;
            for (i, b) in w.iter().enumerate() {
                match b {
                    Bracket::Open => depth += 1,
                    Bracket::Close => {
                        depth -= 1;
                        if depth == 0 {
                            close = Some(i);
                            break;
                        }
                    }
                    Bracket::CloseOpen if depth == 1 && first_x.is_none() => first_x = Some(i),
                    _ => {}
                }
            }
            let close = close.ok_or(Error::Unbalanced)?;
            let mut out = w.clone();
            match first_x {
                None => out[close] = Bracket::Open,
                Some(x) => {
                    out[x] = Bracket::Open;
                    out[close] = Bracket::CloseOpen;
                }
            }
            out.remove(0);
            out.push(Bracket::Close);
            Ok(BracketWord(out))
        }
        Some(_) => Err(Error::Unbalanced),
    }
}

/// A partition of `1..=N` into blocks; blocks are sorted and listed by their
/// least element.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetPartition {
    size: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(size: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; size + 1];
        for b in &mut blocks {
            b.sort_unstable();
            for &x in b.iter() {
                if x == 0 || x > size || seen[x] {
                    return Err(Error::DomainError(format!("{x} is out of range or repeated")));
                }
                seen[x] = true;
            }
        }
        if blocks.iter().any(Vec::is_empty) || seen[1..].iter().any(|s| !s) {
            return Err(Error::DomainError("blocks do not cover the ground set".into()));
        }
        blocks.sort_unstable();
        Ok(SetPartition { size, blocks })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn is_noncrossing(&self) -> bool {
        let block_of = {
            let mut v = vec![0; self.size + 1];
            for (bi, b) in self.blocks.iter().enumerate() {
                for &x in b {
                    v[x] = bi;
                }
            }
            v
        };
        for a in 1..=self.size {
            for b in a + 1..=self.size {
                for c in b + 1..=self.size {
                    for d in c + 1..=self.size {
                        if block_of[a] == block_of[c] && block_of[b] == block_of[d] && block_of[a] != block_of[b] {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Relabels `i` as `i + 1`, with `N` going to `1`.
    pub fn rotate(&self) -> Self {
        self.shift(1)
    }

    pub fn rotate_inverse(&self) -> Self {
        self.shift(self.size - 1)
    }

    fn shift(&self, s: usize) -> Self {
        let blocks = self.blocks.iter().map(|b| b.iter().map(|&x| (x - 1 + s) % self.size + 1).collect()).collect();
        SetPartition::new(self.size, blocks).expect("rotation keeps a partition")
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| format!("{{{}}}", b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "{}", parts.join("|"))
    }
}

/// Matches brackets by nesting: an `X` closes the open block and keeps it
/// open; a `.` is a singleton.
pub fn noncrossing_partition(word: &BracketWord) -> Result<SetPartition> {
    if !word.is_balanced() {
        return Err(Error::Unbalanced);
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut stack = Vec::new();
    for (i, b) in word.0.iter().enumerate() {
        let pos = i + 1;
        match b {
            Bracket::Dot => blocks.push(vec![pos]),
            Bracket::Open => {
                stack.push(blocks.len());
                blocks.push(vec![pos]);
            }
            Bracket::Close => {
                let top = stack.pop().ok_or(Error::Unbalanced)?;
                blocks[top].push(pos);
            }
            Bracket::CloseOpen => {
                let top = *stack.last().ok_or(Error::Unbalanced)?;
                blocks[top].push(pos);
            }
        }
    }
    SetPartition::new(word.len(), blocks)
}
