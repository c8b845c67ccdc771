//! Boundary paths of ideals in height-one rc-posets, read as binary words.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::poset::OrderIdeal;
use crate::toggles::rc::{PathEnd, RcPoset};
use crate::toggles::word::conjugator_d;

/// A word over `{0, 1}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinaryWord(Vec<u8>);

impl BinaryWord {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::InvalidWord("letters must be 0 or 1".into()));
        }
        Ok(BinaryWord(bits))
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn ones(&self) -> usize {
        self.0.iter().filter(|&&b| b == 1).count()
    }

    /// Moves the letter at position `i` to `i + 1` (cyclically): `1100 → 0110`.
    pub fn rotate(&self) -> Self {
        let mut v = self.0.clone();
        v.rotate_right(1);
        BinaryWord(v)
    }

    pub fn rotate_inverse(&self) -> Self {
        let mut v = self.0.clone();
        v.rotate_left(1);
        BinaryWord(v)
    }

    pub fn complement(&self) -> Self {
        BinaryWord(self.0.iter().map(|b| 1 - b).collect())
    }

    pub fn concat(&self, other: &BinaryWord) -> Self {
        BinaryWord(self.0.iter().chain(&other.0).copied().collect())
    }

    /// Every prefix has at least as many ones as zeros.
    pub fn is_ballot(&self) -> bool {
        let mut depth = 0i64;
        for &b in &self.0 {
            depth += if b == 1 { 1 } else { -1 };
            if depth < 0 {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::InvalidWord(s.to_string())),
            })
            .collect::<Result<Vec<u8>>>()
            .map(BinaryWord)
    }
}

struct Bounds {
    lo: Vec<i64>,
    hi: Vec<i64>,
}

fn window_bounds(rc: &RcPoset, ideal: Option<OrderIdeal>) -> Result<(Bounds, i64)> {
    if rc.height() > 1 {
        return Err(Error::NotHeightOne);
    }
    let w = rc.window().ok_or(Error::NotHeightOne)?;
    let len = w.length;
    let (x0, y0) = w.start;
    let mut lo = vec![i64::MIN / 4; len + 1];
    let mut hi = vec![i64::MAX / 4; len + 1];
    lo[0] = y0;
    hi[0] = y0;
    if let PathEnd::Fixed(y) = w.end {
        lo[len] = lo[len].max(y);
        hi[len] = hi[len].min(y);
    }
    for t in 0..=len {
        if let Some(f) = w.floor {
            lo[t] = lo[t].max(f);
        }
        if let Some(c) = w.ceiling {
            hi[t] = hi[t].min(c);
        }
    }
    for &(c, r) in &w.forced {
        let t = (c - x0) as usize;
        lo[t] = lo[t].max(r + 1);
    }
    if let Some(ideal) = ideal {
        for (p, &(c, r)) in rc.positions().iter().enumerate() {
            let t = (c - x0) as usize;
            if ideal.contains(p) {
                lo[t] = lo[t].max(r + 1);
            } else {
                hi[t] = hi[t].min(r - 1);
            }
        }
    }
    Ok((Bounds { lo, hi }, y0))
}

/// The boundary word of `ideal`: `1` for a northeast step, `0` for southeast.
pub fn boundary_word(rc: &RcPoset, ideal: OrderIdeal) -> Result<BinaryWord> {
    let (b, y0) = window_bounds(rc, Some(ideal))?;
    let len = b.lo.len() - 1;
    // ways[t][y]: number of admissible paths from vertex (t, y) to the end, capped at 2
    let mut ways: Vec<HashMap<i64, u8>> = vec![HashMap::new(); len + 1];
    let ys = |t: usize| (y0 - t as i64..=y0 + t as i64).step_by(2);
    for y in ys(len) {
        if b.lo[len] <= y && y <= b.hi[len] {
            ways[len].insert(y, 1);
        }
    }
    for t in (0..len).rev() {
        for y in ys(t) {
            if y < b.lo[t] || y > b.hi[t] {
                continue;
            }
            let n = ways[t + 1].get(&(y + 1)).copied().unwrap_or(0) + ways[t + 1].get(&(y - 1)).copied().unwrap_or(0);
            if n > 0 {
                ways[t].insert(y, n.min(2));
            }
        }
    }
    match ways[0].get(&y0).copied().unwrap_or(0) {
        0 => return Err(Error::NoValidPath),
        1 => {}
        _ => return Err(Error::InvalidRcPoset("window admits several paths for one ideal".into())),
    }
    let mut bits = Vec::with_capacity(len);
    let mut y = y0;
    for t in 0..len {
        if ways[t + 1].contains_key(&(y + 1)) {
            bits.push(1);
            y += 1;
        } else {
            bits.push(0);
            y -= 1;
        }
    }
    Ok(BinaryWord(bits))
}

/// Inverse of [`boundary_word`].
pub fn word_to_ideal(rc: &RcPoset, word: &BinaryWord) -> Result<OrderIdeal> {
    let (b, y0) = window_bounds(rc, None)?;
    let len = b.lo.len() - 1;
    if word.len() != len {
        return Err(Error::InvalidWord(format!("expected length {len}, got {}", word.len())));
    }
    let mut heights = Vec::with_capacity(len + 1);
    let mut y = y0;
    heights.push(y);
    for &bit in word.bits() {
        y += if bit == 1 { 1 } else { -1 };
        heights.push(y);
    }
    if heights.iter().enumerate().any(|(t, &y)| y < b.lo[t] || y > b.hi[t]) {
        return Err(Error::InvalidWord(format!("{word} leaves the window")));
    }
    let x0 = rc.window().map(|w| w.start.0).unwrap_or(0);
    let ideal: OrderIdeal = rc
        .positions()
        .iter()
        .enumerate()
        .filter(|(_, &(c, r))| r < heights[(c - x0) as usize])
        .map(|(p, _)| p)
        .collect();
    if !rc.poset().is_order_ideal(ideal) || boundary_word(rc, ideal)? != *word {
        return Err(Error::InvalidWord(format!("{word} is not the boundary of an order ideal")));
    }
    Ok(ideal)
}

/// Boundary word of `D(I)`; turns rowmotion into [`BinaryWord::rotate`].
pub fn row_boundary_word(rc: &RcPoset, ideal: OrderIdeal) -> Result<BinaryWord> {
    boundary_word(rc, conjugator_d(rc).apply(rc.poset(), ideal))
}

/// Inverse of [`row_boundary_word`].
pub fn row_boundary_ideal(rc: &RcPoset, word: &BinaryWord) -> Result<OrderIdeal> {
    let ideal = word_to_ideal(rc, word)?;
    Ok(conjugator_d(rc).inverse().apply(rc.poset(), ideal))
}

/// `w(I)` followed by its complement, for half-square posets.
pub fn halfsquare_word(rc: &RcPoset, ideal: OrderIdeal) -> Result<BinaryWord> {
    let w = boundary_word(rc, ideal)?;
    Ok(w.concat(&w.complement()))
}

/// Inverse of [`halfsquare_word`].
pub fn halfsquare_ideal(rc: &RcPoset, word: &BinaryWord) -> Result<OrderIdeal> {
    let half = word.len() / 2;
    if !word.len().is_multiple_of(2) {
        return Err(Error::InvalidWord(format!("{word} has odd length")));
    }
    let first = BinaryWord(word.bits()[..half].to_vec());
    if first.complement().bits() != &word.bits()[half..] {
        return Err(Error::InvalidWord(format!("{word} is not of the form w(1-w)")));
    }
    word_to_ideal(rc, &first)
}
