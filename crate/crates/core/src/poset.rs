//! Finite posets, order ideals, linear extensions and the lattice `J(P)`.

use std::collections::HashMap;

use crate::bitset::{ElementSet, MAX_ELEMENTS};
use crate::error::{Error, Result};

/// An order ideal is a downward-closed [`ElementSet`] over a poset's indices.
pub type OrderIdeal = ElementSet;

/// Default bound on the number of states any enumeration may produce.
pub const DEFAULT_CAP: usize = 1 << 24;

/// A finite poset on the dense indices `0..len()`.
///
/// Built from a cover list; transitive closures and the irredundant cover
/// relation are computed once at construction.
#[derive(Clone, Debug)]
pub struct Poset {
    labels: Vec<String>,
    covers: Vec<(usize, usize)>,
    lower_covers: Vec<ElementSet>,
    upper_covers: Vec<ElementSet>,
    down: Vec<ElementSet>,
    up: Vec<ElementSet>,
    minimal: ElementSet,
    maximal: ElementSet,
    topo: Vec<usize>,
}

/// A linear extension, stored as the elements listed by increasing rank.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearExtension {
    sequence: Vec<usize>,
}

impl LinearExtension {
    /// Elements in rank order: `sequence()[r]` has rank `r + 1`.
    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }

    /// Rank of `p` in `1..=n`.
    pub fn rank(&self, p: usize) -> usize {
        self.sequence.iter().position(|&q| q == p).expect("element not in extension") + 1
    }

    pub fn from_sequence(poset: &Poset, sequence: Vec<usize>) -> Result<Self> {
        let n = poset.len();
        if sequence.len() != n {
            return Err(Error::DomainError(format!("extension has {} entries, poset has {n}", sequence.len())));
        }
        let mut seen = ElementSet::EMPTY;
        for &p in &sequence {
            if p >= n {
                return Err(Error::IndexOutOfRange { index: p, len: n });
            }
            if seen.contains(p) || !poset.lower_covers[p].is_subset(&seen) {
                return Err(Error::DomainError("sequence is not a linear extension".into()));
            }
            seen.insert(p);
        }
        Ok(LinearExtension { sequence })
    }
}

impl Poset {
    /// Builds a poset from labels and `(lower, upper)` cover pairs.
    ///
    /// Redundant pairs (implied by transitivity) are dropped.
    pub fn new(labels: Vec<String>, covers: &[(usize, usize)]) -> Result<Poset> {
        let n = labels.len();
        if n > MAX_ELEMENTS {
            return Err(Error::TooManyElements(n));
        }
        let mut given_lower = vec![ElementSet::EMPTY; n];
        for &(a, b) in covers {
            for idx in [a, b] {
                if idx >= n {
                    return Err(Error::IndexOutOfRange { index: idx, len: n });
                }
            }
            if a == b {
                return Err(Error::CycleDetected(a));
            }
            given_lower[b].insert(a);
        }

        // Kahn's algorithm, smallest index first.
        let mut indegree: Vec<usize> = given_lower.iter().map(|s| s.len()).collect();
        let mut given_upper = vec![ElementSet::EMPTY; n];
        for (b, lows) in given_lower.iter().enumerate() {
            for a in lows.iter() {
                given_upper[a].insert(b);
            }
        }
        let mut ready: std::collections::BTreeSet<usize> = (0..n).filter(|&p| indegree[p] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(p) = ready.pop_first() {
            topo.push(p);
            for q in given_upper[p].iter() {
                indegree[q] -= 1;
                if indegree[q] == 0 {
                    ready.insert(q);
                }
            }
        }
        if topo.len() < n {
            let stuck = (0..n).find(|&p| indegree[p] > 0).unwrap_or(0);
            return Err(Error::CycleDetected(stuck));
        }

        let mut strict_down = vec![ElementSet::EMPTY; n];
        for &p in &topo {
            let mut acc = ElementSet::EMPTY;
            for q in given_lower[p].iter() {
                acc = acc | strict_down[q].with(q);
            }
            strict_down[p] = acc;
        }

        let mut lower_covers = vec![ElementSet::EMPTY; n];
        for b in 0..n {
            for a in given_lower[b].iter() {
                let redundant = given_lower[b].iter().any(|c| c != a && strict_down[c].contains(a));
                if !redundant {
                    lower_covers[b].insert(a);
                }
            }
        }
        let mut upper_covers = vec![ElementSet::EMPTY; n];
        let mut cover_list = Vec::new();
        for b in 0..n {
            for a in lower_covers[b].iter() {
                upper_covers[a].insert(b);
                cover_list.push((a, b));
            }
        }
        cover_list.sort_unstable();

        let down: Vec<ElementSet> = (0..n).map(|p| strict_down[p].with(p)).collect();
        let mut up = vec![ElementSet::EMPTY; n];
        for (p, d) in down.iter().enumerate() {
            for q in d.iter() {
                up[q].insert(p);
            }
        }
        let minimal = (0..n).filter(|&p| lower_covers[p].is_empty()).collect();
        let maximal = (0..n).filter(|&p| upper_covers[p].is_empty()).collect();

        Ok(Poset { labels, covers: cover_list, lower_covers, upper_covers, down, up, minimal, maximal, topo })
    }

    /// A poset on `n` elements labelled by their indices.
    pub fn unlabeled(n: usize, covers: &[(usize, usize)]) -> Result<Poset> {
        Poset::new((0..n).map(|i| i.to_string()).collect(), covers)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, p: usize) -> &str {
        &self.labels[p]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Irredundant cover pairs `(lower, upper)`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    #[inline]
    pub fn lower_covers(&self, p: usize) -> ElementSet {
        self.lower_covers[p]
    }

    #[inline]
    pub fn upper_covers(&self, p: usize) -> ElementSet {
        self.upper_covers[p]
    }

    pub fn is_cover(&self, lower: usize, upper: usize) -> bool {
        self.lower_covers[upper].contains(lower)
    }

    /// `{q : q <= p}`.
    pub fn down_closure(&self, p: usize) -> ElementSet {
        self.down[p]
    }

    /// `{q : q >= p}`.
    pub fn up_closure(&self, p: usize) -> ElementSet {
        self.up[p]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.down[b].contains(a)
    }

    pub fn minimal(&self) -> ElementSet {
        self.minimal
    }

    pub fn maximal(&self) -> ElementSet {
        self.maximal
    }

    pub fn all(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    /// One fixed linear extension (smallest available index first).
    pub fn topological_order(&self) -> &[usize] {
        &self.topo
    }

    pub fn is_order_ideal(&self, set: ElementSet) -> bool {
        set.is_subset(&self.all()) && set.iter().all(|p| self.lower_covers[p].is_subset(&set))
    }

    /// Smallest ideal containing `generators`.
    pub fn ideal_generated_by(&self, generators: ElementSet) -> OrderIdeal {
        generators.iter().fold(ElementSet::EMPTY, |acc, p| acc | self.down[p])
    }

    /// All order ideals in canonical (bitstring integer) order.
    pub fn enumerate_ideals(&self, cap: usize) -> Result<Vec<OrderIdeal>> {
        let mut out = Vec::new();
        self.ideals_dfs(0, ElementSet::EMPTY, cap, &mut out)?;
        out.sort_unstable();
        Ok(out)
    }

    fn ideals_dfs(&self, depth: usize, current: ElementSet, cap: usize, out: &mut Vec<OrderIdeal>) -> Result<()> {
        if depth == self.topo.len() {
            if out.len() >= cap {
                return Err(Error::StateSpaceTooLarge { cap });
            }
            out.push(current);
            return Ok(());
        }
        let p = self.topo[depth];
        self.ideals_dfs(depth + 1, current, cap, out)?;
        if self.lower_covers[p].is_subset(&current) {
            self.ideals_dfs(depth + 1, current.with(p), cap, out)?;
        }
        Ok(())
    }

    /// All linear extensions, in lexicographic order of their element sequences.
    pub fn enumerate_linear_extensions(&self, cap: usize) -> Result<Vec<LinearExtension>> {
        let mut out = Vec::new();
        let mut seq = Vec::with_capacity(self.len());
        self.extensions_dfs(ElementSet::EMPTY, &mut seq, cap, &mut out)?;
        Ok(out)
    }

    fn extensions_dfs(
        &self,
        used: ElementSet,
        seq: &mut Vec<usize>,
        cap: usize,
        out: &mut Vec<LinearExtension>,
    ) -> Result<()> {
        if seq.len() == self.len() {
            if out.len() >= cap {
                return Err(Error::StateSpaceTooLarge { cap });
            }
            out.push(LinearExtension { sequence: seq.clone() });
            return Ok(());
        }
        for p in 0..self.len() {
            if !used.contains(p) && self.lower_covers[p].is_subset(&used) {
                seq.push(p);
                self.extensions_dfs(used.with(p), seq, cap, out)?;
                seq.pop();
            }
        }
        Ok(())
    }

    /// Number of linear extensions, by counting maximal chains of `J(P)`.
    pub fn count_linear_extensions(&self, cap: usize) -> Result<u128> {
        let ideals = self.enumerate_ideals(cap)?;
        let mut ways: HashMap<ElementSet, u128> = HashMap::with_capacity(ideals.len());
        let mut by_size = ideals;
        by_size.sort_by_key(|s| s.len());
        for ideal in by_size {
            let w = if ideal.is_empty() {
                1
            } else {
                // Removable elements are the maximal members of the ideal.
                ideal
                    .iter()
                    .filter(|&p| !self.upper_covers[p].intersects(&ideal))
                    .map(|p| ways[&ideal.without(p)])
                    .sum()
            };
            ways.insert(ideal, w);
        }
        Ok(ways[&self.all()])
    }

    /// `J(P)` as a poset: one element per ideal (canonical order), covers
    /// are single-element additions.
    pub fn distributive_lattice(&self, cap: usize) -> Result<Poset> {
        let ideals = self.enumerate_ideals(cap)?;
        if ideals.len() > MAX_ELEMENTS {
            return Err(Error::TooManyElements(ideals.len()));
        }
        let index: HashMap<ElementSet, usize> = ideals.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let mut covers = Vec::new();
        for (i, ideal) in ideals.iter().enumerate() {
            for p in (self.all() - *ideal).iter() {
                if self.lower_covers[p].is_subset(ideal) {
                    covers.push((i, index[&ideal.with(p)]));
                }
            }
        }
        let labels = ideals
            .iter()
            .map(|s| {
                let names: Vec<&str> = s.iter().map(|p| self.label(p)).collect();
                format!("{{{}}}", names.join(","))
            })
            .collect();
        Poset::new(labels, &covers)
    }

    /// Rowmotion straight from its definition: the ideal generated by the
    /// minimal elements of the complement.
    pub fn rowmotion(&self, ideal: OrderIdeal) -> OrderIdeal {
        let complement = self.all() - ideal;
        let minimal_outside: ElementSet =
            complement.iter().filter(|&p| self.lower_covers[p].is_subset(&ideal)).collect();
        self.ideal_generated_by(minimal_outside)
    }

    /// Inverse of [`Poset::rowmotion`]: complement of the filter generated by
    /// the maximal elements of the ideal.
    pub fn rowmotion_inverse(&self, ideal: OrderIdeal) -> OrderIdeal {
        let maximal_inside: ElementSet = ideal.iter().filter(|&p| !self.upper_covers[p].intersects(&ideal)).collect();
        let filter = maximal_inside.iter().fold(ElementSet::EMPTY, |acc, p| acc | self.up[p]);
        self.all() - filter
    }

    /// Rank-size profile of a graded poset (sizes of levels by longest chain
    /// from a minimal element).
    pub fn level_sizes(&self) -> Vec<usize> {
        let mut level = vec![0usize; self.len()];
        for &p in &self.topo {
            level[p] = self.lower_covers[p].iter().map(|q| level[q] + 1).max().unwrap_or(0);
        }
        let top = level.iter().copied().max().map_or(0, |m| m + 1);
        let mut sizes = vec![0; top];
        for l in level {
            sizes[l] += 1;
        }
        sizes
    }

    /// Brute-force isomorphism test (adequate for the small posets in tests).
    pub fn is_isomorphic(&self, other: &Poset) -> bool {
        if self.len() != other.len() || self.covers.len() != other.covers.len() {
            return false;
        }
        let sig =
            |p: &Poset, x: usize| (p.lower_covers[x].len(), p.upper_covers[x].len(), p.down[x].len(), p.up[x].len());
        let mut a: Vec<usize> = self.topo.clone();
        a.sort_by_key(|&x| std::cmp::Reverse(sig(self, x)));
        let mut map = vec![usize::MAX; self.len()];
        let mut used = ElementSet::EMPTY;
        type Signature = dyn Fn(&Poset, usize) -> (usize, usize, usize, usize);
        fn go(
            s: &Poset,
            o: &Poset,
            order: &[usize],
            k: usize,
            map: &mut Vec<usize>,
            used: &mut ElementSet,
            sig: &Signature,
        ) -> bool {
            if k == order.len() {
                return true;
            }
            let x = order[k];
            for y in 0..o.len() {
                if used.contains(y) || sig(s, x) != sig(o, y) {
                    continue;
                }
                let consistent = (0..k).all(|j| {
                    let xp = order[j];
                    let yp = map[xp];
                    s.leq(x, xp) == o.leq(y, yp) && s.leq(xp, x) == o.leq(yp, y)
                });
                if consistent {
                    map[x] = y;
                    used.insert(y);
                    if go(s, o, order, k + 1, map, used, sig) {
                        return true;
                    }
                    used.remove(y);
                    map[x] = usize::MAX;
                }
            }
            false
        }
        go(self, other, &a, 0, &mut map, &mut used, &sig)
    }
}
