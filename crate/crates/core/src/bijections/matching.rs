//! Noncrossing perfect matchings of points on a circle.

use std::fmt;

use crate::bijections::boundary::BinaryWord;
use crate::error::{Error, Result};

/// A perfect matching of the points `1..=2N`; stored 0-based.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NoncrossingMatching {
    partner: Vec<usize>,
}

impl NoncrossingMatching {
    /// Validates a 0-based partner table.
    pub fn new(partner: Vec<usize>) -> Result<Self> {
        let n = partner.len();
        for (i, &j) in partner.iter().enumerate() {
            if j >= n || j == i || partner[j] != i {
                return Err(Error::PairingFailure(format!("point {} is not matched consistently", i + 1)));
            }
        }
        let m = NoncrossingMatching { partner };
        if !m.is_noncrossing() {
            return Err(Error::PairingFailure("matching has a crossing".into()));
        }
        Ok(m)
    }

    /// Pairs each `0` with the nearest unmatched `1` to its left.
    fn stack_pair(bits: &[u8]) -> Option<Vec<usize>> {
        let mut partner = vec![usize::MAX; bits.len()];
        let mut stack = Vec::new();
        for (i, &b) in bits.iter().enumerate() {
            if b == 1 {
                stack.push(i);
            } else {
                let j = stack.pop()?;
                partner[i] = j;
                partner[j] = i;
            }
        }
        stack.is_empty().then_some(partner)
    }

    pub fn points(&self) -> usize {
        self.partner.len()
    }

    /// Partner of point `i` (1-based in and out).
    pub fn partner(&self, i: usize) -> usize {
        self.partner[i - 1] + 1
    }

    /// Pairs `(a, b)` with `a < b`, 1-based, sorted.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.partner.len()).filter(|&i| i < self.partner[i]).map(|i| (i + 1, self.partner[i] + 1)).collect()
    }

    /// Word with `1` at each point that is the smaller of its pair.
    pub fn openers(&self) -> BinaryWord {
        BinaryWord::new(self.partner.iter().enumerate().map(|(i, &j)| u8::from(i < j)).collect()).unwrap()
    }

    pub fn is_noncrossing(&self) -> bool {
        let pairs = self.pairs();
        !pairs.iter().any(|&(a, c)| pairs.iter().any(|&(b, d)| a < b && b < c && c < d))
    }

    /// `partner(i + N) = partner(i) + N` on `2N` points.
    pub fn is_half_turn_symmetric(&self) -> bool {
        let n = self.partner.len();
        let h = n / 2;
        n.is_multiple_of(2) && (0..n).all(|i| self.partner[(i + h) % n] == (self.partner[i] + h) % n)
    }

    /// Relabels point `i` as `i + 1`, cyclically.
    pub fn rotate(&self) -> Self {
        self.shift(1)
    }

    pub fn rotate_inverse(&self) -> Self {
        self.shift(self.partner.len() - 1)
    }

    fn shift(&self, s: usize) -> Self {
        let n = self.partner.len();
        let mut partner = vec![0; n];
        for (i, &j) in self.partner.iter().enumerate() {
            partner[(i + s) % n] = (j + s) % n;
        }
        NoncrossingMatching { partner }
    }
}

impl fmt::Display for NoncrossingMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs().iter().map(|(a, b)| format!("{{{a},{b}}}")).collect();
        write!(f, "{}", parts.join("|"))
    }
}

/// Type A: point `i` is the smaller of its pair exactly when `w_i = 1`.
pub fn matching_from_word_a(w: &BinaryWord) -> Result<NoncrossingMatching> {
    if !w.is_ballot() || 2 * w.ones() != w.len() {
        return Err(Error::NotBallot);
    }
    let partner = NoncrossingMatching::stack_pair(w.bits()).ok_or(Error::NotBallot)?;
    Ok(NoncrossingMatching { partner })
}

/// Inverse of [`matching_from_word_a`].
pub fn word_from_matching_a(m: &NoncrossingMatching) -> BinaryWord {
    m.openers()
}

/// Type B: the word `w` of length `2n` followed by `w` with its unmatched
/// `1`s turned into `0`s, paired by nesting on `4n` points.
pub fn matching_from_word_b(w: &BinaryWord) -> Result<NoncrossingMatching> {
    if !w.is_ballot() {
        return Err(Error::PairingFailure(format!("{w} is not a ballot word")));
    }
    let bits = w.bits();
    let mut depth = Vec::new();
    let mut unmatched = vec![false; bits.len()];
    for (i, &b) in bits.iter().enumerate() {
        if b == 1 {
            depth.push(i);
        } else {
            depth.pop();
        }
    }
    for i in depth {
        unmatched[i] = true;
    }
    let second: Vec<u8> = bits.iter().zip(&unmatched).map(|(&b, &u)| if u { 0 } else { b }).collect();
    let full: Vec<u8> = bits.iter().chain(&second).copied().collect();
    let partner = NoncrossingMatching::stack_pair(&full)
        .ok_or_else(|| Error::PairingFailure(format!("{w} does not close up")))?;
    let m = NoncrossingMatching { partner };
    if !m.is_half_turn_symmetric() {
        return Err(Error::PairingFailure(format!("matching of {w} is not half-turn symmetric")));
    }
    Ok(m)
}

/// Inverse of [`matching_from_word_b`]: the first half of the opener word.
pub fn word_from_matching_b(m: &NoncrossingMatching) -> Result<BinaryWord> {
    let n = m.points();
    if !n.is_multiple_of(2) || !m.is_half_turn_symmetric() {
        return Err(Error::PairingFailure("matching is not half-turn symmetric".into()));
    }
    let w = BinaryWord::new(m.openers().bits()[..n / 2].to_vec())?;
    if matching_from_word_b(&w)? != *m {
        return Err(Error::PairingFailure(format!("matching does not come from {w}")));
    }
    Ok(w)
}
