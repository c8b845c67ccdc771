//! Toggles, toggle words and the named words on rc-posets.
//!
//! A [`ToggleWord`] lists toggles in the order they are applied. A product
//! `g1 g2 ... gk` of group elements acts with `gk` first, so constructors
//! here reverse written products when they build a word.

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::poset::{OrderIdeal, Poset};
use crate::toggles::rc::RcPoset;

/// Adds `p` when all of its lower covers are present, removes it when none of
/// its upper covers are, and otherwise leaves the ideal alone.
#[inline]
pub fn toggle(poset: &Poset, ideal: OrderIdeal, p: usize) -> OrderIdeal {
    if ideal.contains(p) {
        if poset.upper_covers(p).intersects(&ideal) {
            ideal
        } else {
            ideal.without(p)
        }
    } else if poset.lower_covers(p).is_subset(&ideal) {
        ideal.with(p)
    } else {
        ideal
    }
}

/// A sequence of element toggles in application order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ToggleWord(Vec<usize>);

impl ToggleWord {
    pub fn new(elements: Vec<usize>) -> Self {
        ToggleWord(elements)
    }

    pub fn empty() -> Self {
        ToggleWord(Vec::new())
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The inverse group element: the same toggles in reverse order.
    pub fn inverse(&self) -> Self {
        ToggleWord(self.0.iter().rev().copied().collect())
    }

    /// `self` followed by `next`.
    pub fn then(mut self, next: &ToggleWord) -> Self {
        self.0.extend_from_slice(&next.0);
        self
    }

    /// Applies the word to an ideal of `poset`.
    pub fn apply(&self, poset: &Poset, ideal: OrderIdeal) -> OrderIdeal {
        self.0.iter().fold(ideal, |acc, &p| toggle(poset, acc, p))
    }

    pub fn validate(&self, poset: &Poset) -> Result<()> {
        match self.0.iter().find(|&&p| p >= poset.len()) {
            Some(&p) => Err(Error::IndexOutOfRange { index: p, len: poset.len() }),
            None => Ok(()),
        }
    }

    /// Precomputes cover masks so application touches no poset data.
    pub fn compile(&self, poset: &Poset) -> CompiledWord {
        CompiledWord { steps: self.0.iter().map(|&p| (p, poset.lower_covers(p), poset.upper_covers(p))).collect() }
    }
}

impl FromIterator<usize> for ToggleWord {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        ToggleWord(iter.into_iter().collect())
    }
}

/// A toggle word bound to the cover masks of one poset.
#[derive(Clone, Debug)]
pub struct CompiledWord {
    steps: Vec<(usize, ElementSet, ElementSet)>,
}

impl CompiledWord {
    #[inline]
    pub fn apply(&self, mut ideal: OrderIdeal) -> OrderIdeal {
        for (p, lower, upper) in &self.steps {
            if ideal.contains(*p) {
                if !upper.intersects(&ideal) {
                    ideal.remove(*p);
                }
            } else if lower.is_subset(&ideal) {
                ideal.insert(*p);
            }
        }
        ideal
    }
}

fn check_permutation(perm: &[usize], len: usize, what: &str) -> Result<()> {
    let mut seen = vec![false; len];
    if perm.len() != len {
        return Err(Error::DomainError(format!("{what} permutation must have {len} entries")));
    }
    for &v in perm {
        if v == 0 || v > len || seen[v - 1] {
            return Err(Error::DomainError(format!("{what} permutation is not a permutation of 1..={len}")));
        }
        seen[v - 1] = true;
    }
    Ok(())
}

/// `r_i`: toggles of row `i` (1-based). Same-row toggles commute.
pub fn row_toggle(rc: &RcPoset, i: usize) -> ToggleWord {
    ToggleWord(rc.rows()[i - 1].clone())
}

/// `c_j`: toggles of column `j` (1-based).
pub fn column_toggle(rc: &RcPoset, j: usize) -> ToggleWord {
    ToggleWord(rc.columns()[j - 1].clone())
}

/// `row_ω = r_{ω(1)} ... r_{ω(n)}`; `r_{ω(n)}` acts first.
///
/// With `None`, ω is the identity and the word is rowmotion.
pub fn rowmotion_word(rc: &RcPoset, omega: Option<&[usize]>) -> Result<ToggleWord> {
    let n = rc.row_count();
    let default: Vec<usize>;
    let omega = match omega {
        Some(o) => {
            check_permutation(o, n, "row")?;
            o
        }
        None => {
            default = (1..=n).collect();
            &default
        }
    };
    Ok(omega.iter().rev().flat_map(|&i| rc.rows()[i - 1].iter().copied()).collect())
}

/// `pro_ν = c_{ν(1)} ... c_{ν(k)}`; `c_{ν(k)}` acts first.
///
/// With `None`, ν = k, ..., 2, 1: columns are toggled left to right.
pub fn promotion_word(rc: &RcPoset, nu: Option<&[usize]>) -> Result<ToggleWord> {
    let k = rc.column_count();
    let default: Vec<usize>;
    let nu = match nu {
        Some(v) => {
            check_permutation(v, k, "column")?;
            v
        }
        None => {
            default = (1..=k).rev().collect();
            &default
        }
    };
    Ok(nu.iter().rev().flat_map(|&j| rc.columns()[j - 1].iter().copied()).collect())
}

/// `d_j`: toggles along diagonal `j`, lowest row first.
pub fn diagonal_word(rc: &RcPoset, j: usize) -> Result<ToggleWord> {
    if j == 0 || j > rc.diagonal_count() {
        return Err(Error::DomainError(format!("diagonal {j} outside 1..={}", rc.diagonal_count())));
    }
    Ok(ToggleWord(rc.diagonal(j).to_vec()))
}

/// The conjugator `D = ∏_{i=1}^{m-1} ∏_{j=i}^{1} d_j^{-1}` with
/// `Pro ∘ D = D ∘ Row^{-1}`.
pub fn conjugator_d(rc: &RcPoset) -> ToggleWord {
    let m = rc.diagonal_count();
    let mut out = Vec::new();
    // The rightmost factor acts first: i runs down from m-1, and inside a
    // factor d_1^{-1} acts first.
    for i in (1..m).rev() {
        for j in 1..=i {
            out.extend(rc.diagonal(j).iter().rev().copied());
        }
    }
    ToggleWord(out)
}

/// Odd rows, then even rows.
pub fn gyration_word(rc: &RcPoset) -> ToggleWord {
    let rows = rc.rows();
    let odd = rows.iter().step_by(2).flatten();
    let even = rows.iter().skip(1).step_by(2).flatten();
    odd.chain(even).copied().collect()
}

/// Per-layer promotion: within each layer the columns are toggled left to
/// right; the last layer is processed first.
pub fn superpromotion_word(rc: &RcPoset) -> Result<ToggleWord> {
    let layers = rc.layers().ok_or(Error::NotLayered)?;
    let count = rc.layer_count().unwrap_or(0);
    let mut out = Vec::new();
    for layer in (1..=count).rev() {
        for col in rc.columns() {
            out.extend(col.iter().copied().filter(|&p| layers[p] == layer));
        }
    }
    Ok(ToggleWord(out))
}
