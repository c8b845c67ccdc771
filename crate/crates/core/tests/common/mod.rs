//! Oracles written from the definitions, plus exhaustive per-family checks
//! shared by the acceptance harness and the property tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use rowmotion::bijections::*;
use rowmotion::families::{FamilySpec, RootType};
use rowmotion::toggles::*;
use rowmotion::{OrderIdeal, Poset, DEFAULT_CAP};

pub type Check = Result<(), String>;

pub fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Lower and upper covers as plain lists.
pub struct Covers {
    pub down: Vec<Vec<usize>>,
    pub up: Vec<Vec<usize>>,
}

impl Covers {
    pub fn of(p: &Poset) -> Covers {
        let mut down = vec![Vec::new(); p.len()];
        let mut up = vec![Vec::new(); p.len()];
        for &(a, b) in p.covers() {
            down[b].push(a);
            up[a].push(b);
        }
        Covers { down, up }
    }

    pub fn toggle(&self, ideal: OrderIdeal, p: usize) -> OrderIdeal {
        if ideal.contains(p) {
            if self.up[p].iter().any(|&q| ideal.contains(q)) {
                ideal
            } else {
                ideal.without(p)
            }
        } else if self.down[p].iter().all(|&q| ideal.contains(q)) {
            ideal.with(p)
        } else {
            ideal
        }
    }

    /// Ideal generated by the minimal elements outside `ideal`.
    pub fn rowmotion(&self, ideal: OrderIdeal) -> OrderIdeal {
        let n = self.down.len();
        let mut stack: Vec<usize> =
            (0..n).filter(|&p| !ideal.contains(p) && self.down[p].iter().all(|&q| ideal.contains(q))).collect();
        let mut out = OrderIdeal::EMPTY;
        while let Some(p) = stack.pop() {
            if !out.contains(p) {
                out.insert(p);
                stack.extend(self.down[p].iter().copied());
            }
        }
        out
    }
}

pub fn sorted_counts(sizes: impl IntoIterator<Item = usize>) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for s in sizes {
        *m.entry(s).or_insert(0) += 1;
    }
    m
}

pub fn table(pairs: &[(usize, usize)]) -> BTreeMap<usize, usize> {
    pairs.iter().copied().collect()
}

/// Orbit sizes of a permutation given by `f` on `states`, via plain cycle walking.
pub fn cycle_sizes<S: Ord + Clone>(states: &[S], f: impl Fn(&S) -> S) -> Result<Vec<usize>, String> {
    let index: BTreeMap<S, usize> = states.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
    let mut seen = vec![false; states.len()];
    let mut out = Vec::new();
    for start in 0..states.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            len += 1;
            cur = *index.get(&f(&states[cur])).ok_or("action leaves the state set")?;
        }
        if cur != start {
            return Err("action is not a permutation".into());
        }
        out.push(len);
    }
    Ok(out)
}

pub fn lcm(sizes: &[usize]) -> u128 {
    fn gcd(a: u128, b: u128) -> u128 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    sizes.iter().fold(1u128, |acc, &s| acc / gcd(acc, s as u128) * s as u128)
}

/// Rowmotion on partitions in an `n × k` box, straight from the definition:
/// the new part `i` is one more than the largest outer corner at or below row `i`.
pub fn box_rowmotion(lambda: &[usize], k: usize) -> Vec<usize> {
    let n = lambda.len();
    let mut out = vec![0; n];
    let mut best = 0;
    for i in (0..n).rev() {
        let addable = lambda[i] < k && (i == 0 || lambda[i - 1] > lambda[i]);
        if addable {
            best = best.max(lambda[i] + 1);
        }
        out[i] = best;
    }
    out
}

pub fn box_partitions(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, n: usize, max: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 0..=max {
            prefix.push(v);
            go(prefix, n, v, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, k, &mut out);
    out
}

pub fn ideals(rc: &RcPoset) -> Vec<OrderIdeal> {
    rc.enumerate_ideals(DEFAULT_CAP).expect("catalog instances are small")
}

pub fn word_sizes(rc: &RcPoset, word: &ToggleWord, states: &[OrderIdeal]) -> Result<Vec<usize>, String> {
    let c = word.compile(rc.poset());
    cycle_sizes(states, |i| c.apply(*i))
}

pub fn toggle_involution(rc: &RcPoset, states: &[OrderIdeal]) -> Check {
    let cov = Covers::of(rc.poset());
    for &i in states {
        for p in 0..rc.len() {
            let once = toggle(rc.poset(), i, p);
            ensure(once == cov.toggle(i, p), || format!("toggle {p} disagrees with its definition"))?;
            ensure(toggle(rc.poset(), once, p) == i, || format!("toggle {p} is not an involution"))?;
        }
    }
    Ok(())
}

/// Toggles at elements not related by a cover commute. On big instances only
/// every `stride`-th ideal is used.
pub fn non_cover_commutation(rc: &RcPoset, states: &[OrderIdeal], stride: usize) -> Check {
    let poset = rc.poset();
    let n = rc.len();
    for &i in states.iter().step_by(stride.max(1)) {
        for p in 0..n {
            for q in p + 1..n {
                if poset.is_cover(p, q) || poset.is_cover(q, p) {
                    continue;
                }
                let a = toggle(poset, toggle(poset, i, p), q);
                let b = toggle(poset, toggle(poset, i, q), p);
                ensure(a == b, || format!("t{p} and t{q} do not commute"))?;
            }
        }
    }
    Ok(())
}

pub fn rowmotion_matches_definition(rc: &RcPoset, states: &[OrderIdeal]) -> Check {
    let cov = Covers::of(rc.poset());
    let row = rowmotion_word(rc, None).map_err(|e| e.to_string())?.compile(rc.poset());
    for &i in states {
        ensure(row.apply(i) == cov.rowmotion(i), || "rowmotion word differs from the definition".into())?;
    }
    Ok(())
}

fn parity_word(lines: &[Vec<usize>], parity: usize) -> ToggleWord {
    ToggleWord::new(
        lines.iter().enumerate().filter(|(k, _)| (k + 1) % 2 == parity).flat_map(|(_, l)| l.clone()).collect(),
    )
}

/// Odd rows then even rows, against odd columns then even columns.
pub fn row_pro_odd_even(rc: &RcPoset, states: &[OrderIdeal]) -> Check {
    let rows = parity_word(rc.rows(), 1).then(&parity_word(rc.rows(), 0)).compile(rc.poset());
    let cols = parity_word(rc.columns(), 1).then(&parity_word(rc.columns(), 0)).compile(rc.poset());
    let gyr = gyration_word(rc).compile(rc.poset());
    for &i in states {
        let r = rows.apply(i);
        ensure(r == cols.apply(i), || "row_{odd,even} differs from pro_{odd,even}".into())?;
        ensure(r == gyr.apply(i), || "gyration differs from row_{odd,even}".into())?;
    }
    Ok(())
}

pub fn orbit_conjugacy(rc: &RcPoset, states: &[OrderIdeal]) -> Check {
    let row = sorted_counts(word_sizes(rc, &rowmotion_word(rc, None).map_err(|e| e.to_string())?, states)?);
    let pro = sorted_counts(word_sizes(rc, &promotion_word(rc, None).map_err(|e| e.to_string())?, states)?);
    let gyr = sorted_counts(word_sizes(rc, &gyration_word(rc), states)?);
    ensure(row == pro, || format!("Row {row:?} vs Pro {pro:?}"))?;
    ensure(row == gyr, || format!("Row {row:?} vs gyration {gyr:?}"))
}

pub fn conjugator(rc: &RcPoset, states: &[OrderIdeal]) -> Check {
    let cov = Covers::of(rc.poset());
    let d = conjugator_d(rc).compile(rc.poset());
    let pro = promotion_word(rc, None).map_err(|e| e.to_string())?.compile(rc.poset());
    // Row⁻¹ by inverting the definitional map on the finite state set.
    let inverse: BTreeMap<OrderIdeal, OrderIdeal> = states.iter().map(|&i| (cov.rowmotion(i), i)).collect();
    for &i in states {
        let back = *inverse.get(&i).ok_or("rowmotion is not onto")?;
        ensure(pro.apply(d.apply(i)) == d.apply(back), || "Pro∘D differs from D∘Row⁻¹".into())?;
    }
    Ok(())
}

/// Forward map, inverse, and the image of an action, checked on every ideal.
pub type Step<'a, W> = &'a dyn Fn(&W) -> rowmotion::Result<W>;

pub fn bijection<W: PartialEq + std::fmt::Debug>(
    states: &[OrderIdeal],
    action: impl Fn(OrderIdeal) -> OrderIdeal,
    forward: impl Fn(OrderIdeal) -> rowmotion::Result<W>,
    backward: impl Fn(&W) -> rowmotion::Result<OrderIdeal>,
    step: Option<Step<'_, W>>,
    invariant: impl Fn(&W) -> bool,
) -> Check {
    for &i in states {
        let w = forward(i).map_err(|e| e.to_string())?;
        ensure(invariant(&w), || format!("witness invariant fails for {w:?}"))?;
        ensure(backward(&w).ok() == Some(i), || format!("{w:?} does not round-trip"))?;
        if let Some(step) = step {
            let moved = forward(action(i)).map_err(|e| e.to_string())?;
            ensure(step(&w).map_err(|e| e.to_string())? == moved, || format!("not equivariant at {w:?}"))?;
        }
    }
    Ok(())
}

fn err(e: rowmotion::Error) -> String {
    e.to_string()
}

/// Every bijection that applies to `spec`, with its equivariance.
pub fn bijections(spec: &FamilySpec, rc: &RcPoset, states: &[OrderIdeal]) -> Check {
    let poset = rc.poset();
    let row = rowmotion_word(rc, None).map_err(err)?.compile(poset);
    let pro = promotion_word(rc, None).map_err(err)?.compile(poset);
    let d = conjugator_d(rc);
    let (dc, dinv) = (d.compile(poset), d.inverse().compile(poset));
    match spec {
        FamilySpec::Product(dims) if dims.len() == 2 => {
            let (n, k) = (dims[0], dims[1]);
            let shape = |w: &BinaryWord| w.len() == n + k && (w.ones() == n || w.ones() == k);
            bijection(
                states,
                |i| pro.apply(i),
                |i| boundary_word(rc, i),
                |w| word_to_ideal(rc, w),
                Some(&|w: &BinaryWord| Ok(w.rotate_inverse())),
                shape,
            )?;
            bijection(
                states,
                |i| row.apply(i),
                |i| boundary_word(rc, dc.apply(i)),
                |w| word_to_ideal(rc, w).map(|i| dinv.apply(i)),
                Some(&|w: &BinaryWord| Ok(w.rotate())),
                shape,
            )
        }
        FamilySpec::Product(dims) if dims.len() == 3 => {
            let dims3 = [dims[0], dims[1], dims[2]];
            bijection(
                states,
                |i| i,
                |i| boundary_path_matrix(dims3, i),
                |b| matrix_to_ideal(dims3, b),
                None,
                |b| b.rows().len() == dims3[0],
            )?;
            if dims[0] != 2 {
                return Ok(());
            }
            let (m, n) = (dims[1], dims[2]);
            bijection(
                states,
                |i| pro.apply(i),
                |i| bracket_word(&boundary_path_matrix(dims3, i)?),
                |w| matrix_to_ideal(dims3, &bracket_matrix(w)),
                Some(&psi),
                |w| w.len() == m + n + 1 && w.is_balanced() && w.opens() == n,
            )?;
            let by_partition: BTreeMap<String, BracketWord> = BracketWord::all(n, m)
                .into_iter()
                .map(|w| Ok((noncrossing_partition(&w)?.to_string(), w)))
                .collect::<rowmotion::Result<_>>()
                .map_err(err)?;
            bijection(
                states,
                |i| pro.apply(i),
                |i| noncrossing_partition(&bracket_word(&boundary_path_matrix(dims3, i)?)?),
                |s| {
                    let w = by_partition
                        .get(&s.to_string())
                        .ok_or(rowmotion::Error::DomainError("unknown partition".into()))?;
                    matrix_to_ideal(dims3, &bracket_matrix(w))
                },
                Some(&|s: &SetPartition| Ok(s.rotate_inverse())),
                |s| s.is_noncrossing() && s.blocks().len() == m + 1 && s.size() == m + n + 1,
            )
        }
        FamilySpec::Root(RootType::A, n) => bijection(
            states,
            |i| row.apply(i),
            |i| matching_from_word_a(&boundary_word(rc, dc.apply(i))?),
            |m| word_to_ideal(rc, &word_from_matching_a(m)).map(|i| dinv.apply(i)),
            Some(&|m: &NoncrossingMatching| Ok(m.rotate())),
            |m| m.is_noncrossing() && m.points() == 2 * (n + 1),
        ),
        FamilySpec::Root(RootType::B | RootType::C, n) => bijection(
            states,
            |i| row.apply(i),
            |i| matching_from_word_b(&boundary_word(rc, dc.apply(i))?),
            |m| word_from_matching_b(m).and_then(|w| word_to_ideal(rc, &w)).map(|i| dinv.apply(i)),
            Some(&|m: &NoncrossingMatching| Ok(m.rotate())),
            |m| m.is_noncrossing() && m.is_half_turn_symmetric() && m.points() == 4 * n,
        ),
        FamilySpec::HalfSquare(n) => bijection(
            states,
            |i| row.apply(i),
            |i| halfsquare_word(rc, dc.apply(i)),
            |w| halfsquare_ideal(rc, w).map(|i| dinv.apply(i)),
            Some(&|w: &BinaryWord| Ok(w.rotate())),
            |w| w.len() == 2 * n && w.ones() == *n,
        ),
        FamilySpec::Interior { k, .. } => bijection(
            states,
            |i| pro.apply(i),
            |i| ideal_to_syt(rc, *k, i),
            |t| syt_to_ideal(rc, t),
            Some(&|t: &SkewTableau| Ok(t.promotion())),
            |t| SkewTableau::from_rows(t.shape().clone(), &t.row_values()).is_ok(),
        ),
        &FamilySpec::Asm(n) => {
            let gyr = gyration_word(rc).compile(poset);
            bijection(
                states,
                |i| gyr.apply(i),
                |i| ideal_to_height(rc, n, i),
                |h| height_to_ideal(rc, h),
                Some(&|h: &HeightFunction| Ok(gyration_heights(h))),
                |h| HeightFunction::new(h.rows().to_vec()).is_ok(),
            )?;
            bijection(
                states,
                |i| gyr.apply(i),
                |i| asm_from_height(&ideal_to_height(rc, n, i)?),
                |a| height_to_ideal(rc, &height_from_asm(a)),
                Some(&|a: &AsmMatrix| asm_from_height(&gyration_heights(&height_from_asm(a)))),
                |a| AsmMatrix::new(a.rows().to_vec()).is_ok(),
            )
        }
        _ => Ok(()),
    }
}

/// Every property, exhaustively, on one family.
pub fn all_properties(spec: &FamilySpec) -> Check {
    let rc = spec.build().map_err(err)?;
    let states = ideals(&rc);
    let stride = (states.len() / 2000).max(1);
    let tag = |e: String| format!("{spec}: {e}");
    toggle_involution(&rc, &states).map_err(tag)?;
    non_cover_commutation(&rc, &states, stride).map_err(tag)?;
    rowmotion_matches_definition(&rc, &states).map_err(tag)?;
    row_pro_odd_even(&rc, &states).map_err(tag)?;
    orbit_conjugacy(&rc, &states).map_err(tag)?;
    conjugator(&rc, &states).map_err(tag)?;
    bijections(spec, &rc, &states).map_err(tag)
}
