//! Fixed-width membership sets over poset element indices.
//!
//! Every dynamical state in the crate is one of these, so the type is `Copy`
//! and all set algebra is a handful of word operations.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

const WORDS: usize = 4;

/// Largest poset this crate handles.
pub const MAX_ELEMENTS: usize = WORDS * 64;

/// A subset of `0..MAX_ELEMENTS`.
///
/// Ordering is the integer order of the membership bitstring with element 0
/// as the least significant bit.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElementSet([u64; WORDS]);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet([0; WORDS]);

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        let mut words = [0u64; WORDS];
        for (w, word) in words.iter_mut().enumerate() {
            let lo = w * 64;
            if n >= lo + 64 {
                *word = u64::MAX;
            } else if n > lo {
                *word = (1u64 << (n - lo)) - 1;
            }
        }
        ElementSet(words)
    }

    pub fn singleton(i: usize) -> Self {
        Self::EMPTY.with(i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut s = Self::EMPTY;
        for i in indices {
            s.insert(i);
        }
        s
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.0[i >> 6] >> (i & 63) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0[i >> 6] |= 1 << (i & 63);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0[i >> 6] &= !(1 << (i & 63));
    }

    #[inline]
    pub fn with(mut self, i: usize) -> Self {
        self.insert(i);
        self
    }

    #[inline]
    pub fn without(mut self, i: usize) -> Self {
        self.remove(i);
        self
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a & !b == 0)
    }

    #[inline]
    pub fn intersects(&self, other: &ElementSet) -> bool {
        self.0.iter().zip(other.0.iter()).any(|(a, b)| a & b != 0)
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> Iter {
        Iter { words: self.0, word: 0 }
    }

    /// Membership string `b_0 b_1 ... b_{n-1}` over `{0,1}`.
    pub fn to_bitstring(&self, n: usize) -> String {
        (0..n).map(|i| if self.contains(i) { '1' } else { '0' }).collect()
    }

    pub fn from_bitstring(s: &str) -> Option<Self> {
        if s.len() > MAX_ELEMENTS {
            return None;
        }
        let mut set = Self::EMPTY;
        for (i, c) in s.chars().enumerate() {
            match c {
                '1' => set.insert(i),
                '0' => {}
                _ => return None,
            }
        }
        Some(set)
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.iter().rev().cmp(other.0.iter().rev())
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl BitOr for ElementSet {
    type Output = ElementSet;
    #[inline]
    fn bitor(self, rhs: Self) -> Self {
        let mut out = self.0;
        for (o, r) in out.iter_mut().zip(rhs.0) {
            *o |= r;
        }
        ElementSet(out)
    }
}

impl BitAnd for ElementSet {
    type Output = ElementSet;
    #[inline]
    fn bitand(self, rhs: Self) -> Self {
        let mut out = self.0;
        for (o, r) in out.iter_mut().zip(rhs.0) {
            *o &= r;
        }
        ElementSet(out)
    }
}

impl Sub for ElementSet {
    type Output = ElementSet;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        let mut out = self.0;
        for (o, r) in out.iter_mut().zip(rhs.0) {
            *o &= !r;
        }
        ElementSet(out)
    }
}

impl Not for ElementSet {
    type Output = ElementSet;
    fn not(self) -> Self {
        ElementSet(self.0.map(|w| !w))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Self::from_indices(iter)
    }
}

pub struct Iter {
    words: [u64; WORDS],
    word: usize,
}

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.word < WORDS {
            let w = self.words[self.word];
            if w != 0 {
                let bit = w.trailing_zeros() as usize;
                self.words[self.word] &= w - 1;
                return Some(self.word * 64 + bit);
            }
            self.word += 1;
        }
        None
    }
}
