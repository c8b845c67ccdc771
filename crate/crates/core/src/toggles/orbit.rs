//! Cycle decomposition of a bijective action on a finite state set.

use std::collections::BTreeMap;
use std::fmt::Debug;

use num_integer::Integer;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poset::{OrderIdeal, Poset};
use crate::toggles::word::{CompiledWord, ToggleWord};

/// One step of a cyclic action.
pub trait Action<S>: Sync {
    fn step(&self, state: &S) -> S;
}

impl<S, F> Action<S> for F
where
    F: Fn(&S) -> S + Sync,
{
    fn step(&self, state: &S) -> S {
        self(state)
    }
}

/// A toggle word acting on the ideals of a poset.
#[derive(Clone, Debug)]
pub struct WordAction {
    word: CompiledWord,
}

impl WordAction {
    pub fn new(poset: &Poset, word: &ToggleWord) -> Self {
        WordAction { word: word.compile(poset) }
    }
}

impl Action<OrderIdeal> for WordAction {
    #[inline]
    fn step(&self, state: &OrderIdeal) -> OrderIdeal {
        self.word.apply(*state)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit<S> {
    pub size: usize,
    /// The least state of the orbit.
    pub representative: S,
    /// The full cycle starting at the representative, when requested.
    pub cycle: Option<Vec<S>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition<S> {
    pub state_count: usize,
    /// Sorted by representative.
    pub orbits: Vec<Orbit<S>>,
    /// Least common multiple of the orbit sizes.
    pub order: u128,
}

impl<S> OrbitPartition<S> {
    /// Orbit sizes, largest first.
    pub fn sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.orbits.iter().map(|o| o.size).collect();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }

    /// Orbit size → number of orbits of that size.
    pub fn size_counts(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for o in &self.orbits {
            *m.entry(o.size).or_insert(0) += 1;
        }
        m
    }
}

#[derive(Clone, Copy, Debug)]
pub struct OrbitOptions {
    pub threads: usize,
    pub keep_cycles: bool,
}

impl Default for OrbitOptions {
    fn default() -> Self {
        OrbitOptions { threads: 1, keep_cycles: false }
    }
}

/// Least common multiple of orbit sizes, failing on overflow.
pub fn lcm_of(sizes: impl IntoIterator<Item = usize>) -> Result<u128> {
    let mut acc: u128 = 1;
    for s in sizes {
        let s = s as u128;
        acc = (acc / acc.gcd(&s)).checked_mul(s).ok_or(Error::Overflow("orbit order"))?;
    }
    Ok(acc)
}

/// Decomposes `states` into orbits of `action`.
///
/// Successors are computed in parallel when `threads > 1`; the result does not
/// depend on the thread count.
pub fn orbits<S, A>(mut states: Vec<S>, action: &A, options: OrbitOptions) -> Result<OrbitPartition<S>>
where
    S: Ord + Clone + Send + Sync + Debug,
    A: Action<S> + ?Sized,
{
    states.sort_unstable();
    states.dedup();
    let lookup =
        |s: &S| -> Result<usize> { states.binary_search(s).map_err(|_| Error::StateEscaped(format!("{s:?}"))) };
    let successor: Vec<usize> = if options.threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(options.threads)
            .build()
            .map_err(|e| Error::DomainError(e.to_string()))?;
        pool.install(|| states.par_iter().map(|s| lookup(&action.step(s))).collect::<Result<Vec<_>>>())?
    } else {
        states.iter().map(|s| lookup(&action.step(s))).collect::<Result<Vec<_>>>()?
    };

    let mut hit = vec![false; states.len()];
    for &t in &successor {
        if hit[t] {
            return Err(Error::NotBijective(format!("{:?}", states[t])));
        }
        hit[t] = true;
    }

    let mut visited = vec![false; states.len()];
    let mut out = Vec::new();
    for start in 0..states.len() {
        if visited[start] {
            continue;
        }
        let mut cycle = options.keep_cycles.then(Vec::new);
        let mut size = 0;
        let mut cur = start;
        while !visited[cur] {
            visited[cur] = true;
            if let Some(c) = cycle.as_mut() {
                c.push(states[cur].clone());
            }
            size += 1;
            cur = successor[cur];
        }
        out.push(Orbit { size, representative: states[start].clone(), cycle });
    }
    let order = lcm_of(out.iter().map(|o| o.size))?;
    Ok(OrbitPartition { state_count: states.len(), orbits: out, order })
}

/// Iterates `action` from `start` until it returns, collecting every state on the way.
pub fn trajectory<S, A>(start: &S, action: &A, limit: usize) -> Result<Vec<S>>
where
    S: PartialEq + Clone,
    A: Action<S> + ?Sized,
{
    let mut out = vec![start.clone()];
    let mut cur = action.step(start);
    while &cur != start {
        if out.len() >= limit {
            return Err(Error::StateSpaceTooLarge { cap: limit });
        }
        out.push(cur.clone());
        cur = action.step(&cur);
    }
    Ok(out)
}
