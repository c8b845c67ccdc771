use std::fmt::Debug;
use std::io::Write;

use serde::Serialize;

use super::{ActionName, CliError, CliResult, Format, PolyKind, RunConfig, SCHEMA};
use crate::bijections::{
    boundary_path_matrix, boundary_word, bracket_word, halfsquare_word, matching_from_word_a, matching_from_word_b,
    noncrossing_partition, psi, BinaryWord, BracketWord, NoncrossingMatching, SetPartition, SkewShape, SkewTableau,
};
use crate::csp::{
    asm_poly, cat_poly, csp_check, degrees, half_square_poly, hook_length_poly, macmahon_poly, q_binomial, CspReport,
};
use crate::error::Error;
use crate::families::{FamilySpec, RootType};
use crate::poset::OrderIdeal;
use crate::toggles::{
    gyration_word, orbits as decompose_orbits, promotion_word, rowmotion_word, superpromotion_word, trajectory as walk,
    Action, OrbitOptions, RcPoset, ToggleWord, WordAction,
};

/// Largest `n` for asm/tsscpp without `--allow-large`.
const LARGE_FROM: usize = 7;

pub(super) fn build_family(cfg: &RunConfig) -> CliResult<RcPoset> {
    if let FamilySpec::Asm(n) | FamilySpec::Tsscpp(n) = cfg.family {
        if n >= LARGE_FROM && !cfg.allow_large {
            return Err(CliError::Resource(format!("{} needs --allow-large", cfg.family)));
        }
    }
    Ok(cfg.family.build()?)
}

pub(super) fn require_action(cfg: &RunConfig) -> CliResult<ActionName> {
    cfg.action.ok_or_else(|| CliError::Usage("--action is required for this command".into()))
}

/// The toggle word of an action on ideals, or `None` for actions on other objects.
pub(super) fn ideal_word(cfg: &RunConfig, rc: &RcPoset, action: ActionName) -> CliResult<Option<ToggleWord>> {
    Ok(Some(match action {
        ActionName::Row => rowmotion_word(rc, None)?,
        ActionName::RowInverse => rowmotion_word(rc, None)?.inverse(),
        ActionName::Pro => promotion_word(rc, None)?,
        ActionName::Gyration => gyration_word(rc),
        ActionName::Spro => {
            if !matches!(cfg.family, FamilySpec::Asm(_)) {
                return Err(CliError::Usage("spro is defined for asm:n only".into()));
            }
            superpromotion_word(rc)?
        }
        ActionName::Rotate | ActionName::Psi | ActionName::SytPro => return Ok(None),
    }))
}

pub(super) fn encode_ideal(rc: &RcPoset, ideal: OrderIdeal) -> String {
    ideal.to_bitstring(rc.len())
}

/// A finite set together with the cyclic action on it.
#[allow(clippy::large_enum_variant)]
enum Space {
    Ideals(RcPoset, ToggleWord, Vec<OrderIdeal>),
    Words(Vec<BinaryWord>),
    Matchings(Vec<NoncrossingMatching>),
    Partitions(Vec<SetPartition>),
    Brackets(Vec<BracketWord>),
    Tableaux(Vec<SkewTableau>),
}

fn ideals(cfg: &RunConfig, rc: &RcPoset) -> CliResult<Vec<OrderIdeal>> {
    Ok(rc.enumerate_ideals(cfg.cap)?)
}

fn map_ideals<T>(cfg: &RunConfig, rc: &RcPoset, f: impl Fn(OrderIdeal) -> crate::Result<T>) -> CliResult<Vec<T>> {
    Ok(ideals(cfg, rc)?.into_iter().map(f).collect::<crate::Result<Vec<T>>>()?)
}

fn build_space(cfg: &RunConfig, action: ActionName) -> CliResult<Space> {
    let rc = build_family(cfg)?;
    if let Some(word) = ideal_word(cfg, &rc, action)? {
        let states = ideals(cfg, &rc)?;
        return Ok(Space::Ideals(rc, word, states));
    }
    let space = match (action, &cfg.family) {
        (ActionName::Rotate, FamilySpec::Product(d)) if d.len() == 2 => {
            Space::Words(map_ideals(cfg, &rc, |i| boundary_word(&rc, i))?)
        }
        (ActionName::Rotate, FamilySpec::HalfSquare(_)) => {
            Space::Words(map_ideals(cfg, &rc, |i| halfsquare_word(&rc, i))?)
        }
        (ActionName::Rotate, FamilySpec::Root(RootType::A, _)) => {
            Space::Matchings(map_ideals(cfg, &rc, |i| matching_from_word_a(&boundary_word(&rc, i)?))?)
        }
        (ActionName::Rotate, FamilySpec::Root(RootType::B | RootType::C, _)) => {
            Space::Matchings(map_ideals(cfg, &rc, |i| matching_from_word_b(&boundary_word(&rc, i)?))?)
        }
        (ActionName::Rotate, FamilySpec::Product(d)) if d.len() == 3 && d[0] == 2 => {
            let dims = [d[0], d[1], d[2]];
            Space::Partitions(map_ideals(cfg, &rc, |i| {
                noncrossing_partition(&bracket_word(&boundary_path_matrix(dims, i)?)?)
            })?)
        }
        (ActionName::Psi, FamilySpec::Product(d)) if d.len() == 3 && d[0] == 2 => {
            let words = BracketWord::all(d[2], d[1]);
            if words.len() > cfg.cap {
                return Err(Error::StateSpaceTooLarge { cap: cfg.cap }.into());
            }
            Space::Brackets(words)
        }
        (ActionName::SytPro, &FamilySpec::Interior { n, m, k }) => {
            let t = SkewShape::two_row(n, m, k)?.tableaux();
            if t.len() > cfg.cap {
                return Err(Error::StateSpaceTooLarge { cap: cfg.cap }.into());
            }
            Space::Tableaux(t)
        }
        _ => {
            return Err(CliError::Usage(format!("action {} does not apply to {}", action.name(), cfg.family)));
        }
    };
    Ok(space)
}

struct Table {
    state_count: usize,
    order: u128,
    orbits: Vec<(usize, String)>,
}

fn decompose<S, A>(states: Vec<S>, action: &A, threads: usize, encode: impl Fn(&S) -> String) -> CliResult<Table>
where
    S: Ord + Clone + Send + Sync + Debug,
    A: Action<S> + ?Sized,
{
    let p = decompose_orbits(states, action, OrbitOptions { threads, keep_cycles: false })?;
    Ok(Table {
        state_count: p.state_count,
        order: p.order,
        orbits: p.orbits.iter().map(|o| (o.size, encode(&o.representative))).collect(),
    })
}

fn table(space: &Space, threads: usize) -> CliResult<Table> {
    let show = |s: &dyn std::fmt::Display| s.to_string();
    match space {
        Space::Ideals(rc, word, states) => {
            decompose(states.clone(), &WordAction::new(rc.poset(), word), threads, |i| encode_ideal(rc, *i))
        }
        Space::Words(w) => decompose(w.clone(), &|x: &BinaryWord| x.rotate(), threads, |x| show(x)),
        Space::Matchings(m) => decompose(m.clone(), &|x: &NoncrossingMatching| x.rotate(), threads, |x| show(x)),
        Space::Partitions(p) => decompose(p.clone(), &|x: &SetPartition| x.rotate(), threads, |x| show(x)),
        Space::Brackets(b) => {
            decompose(b.clone(), &|x: &BracketWord| psi(x).expect("enumerated words are balanced"), threads, |x| {
                show(x)
            })
        }
        Space::Tableaux(t) => decompose(t.clone(), &|x: &SkewTableau| x.promotion(), threads, |x| show(x)),
    }
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> CliResult<()> {
    let text = serde_json::to_string(value).map_err(|e| CliError::Check(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

#[derive(Serialize)]
struct OrbitJson<'a> {
    schema: u32,
    family: String,
    action: &'a str,
    state_count: usize,
    order: u128,
    size_counts: Vec<(usize, usize)>,
    orbits: Vec<OrbitEntry<'a>>,
}

#[derive(Serialize)]
struct OrbitEntry<'a> {
    size: usize,
    representative: &'a str,
}

fn size_counts(t: &Table) -> Vec<(usize, usize)> {
    let mut m = std::collections::BTreeMap::new();
    for (s, _) in &t.orbits {
        *m.entry(*s).or_insert(0) += 1;
    }
    m.into_iter().rev().collect()
}

pub(super) fn orbits(cfg: &RunConfig, out: &mut dyn Write) -> CliResult<()> {
    let action = require_action(cfg)?;
    let t = table(&build_space(cfg, action)?, cfg.threads)?;
    match cfg.format {
        Format::Json => emit_json(
            out,
            &OrbitJson {
                schema: SCHEMA,
                family: cfg.family.to_string(),
                action: action.name(),
                state_count: t.state_count,
                order: t.order,
                size_counts: size_counts(&t),
                orbits: t.orbits.iter().map(|(s, r)| OrbitEntry { size: *s, representative: r }).collect(),
            },
        ),
        Format::Tsv => {
            writeln!(out, "size\trepresentative")?;
            for (s, r) in &t.orbits {
                writeln!(out, "{s}\t{r}")?;
            }
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct OrderJson<'a> {
    schema: u32,
    family: String,
    action: &'a str,
    state_count: usize,
    order: u128,
}

pub(super) fn order(cfg: &RunConfig, out: &mut dyn Write) -> CliResult<()> {
    let action = require_action(cfg)?;
    let t = table(&build_space(cfg, action)?, cfg.threads)?;
    match cfg.format {
        Format::Json => emit_json(
            out,
            &OrderJson {
                schema: SCHEMA,
                family: cfg.family.to_string(),
                action: action.name(),
                state_count: t.state_count,
                order: t.order,
            },
        ),
        Format::Tsv => Ok(writeln!(out, "{}", t.order)?),
    }
}

fn poly_name(p: PolyKind) -> &'static str {
    match p {
        PolyKind::Qbinomial => "qbinomial",
        PolyKind::Catalan => "catalan",
        PolyKind::Macmahon => "macmahon",
        PolyKind::Hook => "hook",
        PolyKind::Halfsquare => "halfsquare",
        PolyKind::Asm => "asm",
    }
}

#[derive(Serialize)]
struct CspJson<'a> {
    schema: u32,
    family: String,
    action: &'a str,
    poly: &'a str,
    polynomial: String,
    group_order: usize,
    holds: bool,
    /// Why the check could not run (an orbit size not dividing the group
    /// order, or a count mismatch).
    reason: Option<String>,
    report: Option<CspReport>,
}

pub(super) fn csp(cfg: &RunConfig, poly: PolyKind, out: &mut dyn Write) -> CliResult<()> {
    let action = require_action(cfg)?;
    let (n, x) = match (poly, &cfg.family) {
        (PolyKind::Qbinomial, FamilySpec::Product(d)) if d.len() == 2 => (d[0] + d[1], q_binomial(d[0] + d[1], d[1])?),
        (PolyKind::Catalan, &FamilySpec::Root(t, r)) => (2 * degrees(t, r)?.1, cat_poly(t, r)?),
        (PolyKind::Macmahon, FamilySpec::Product(d)) if d.len() == 3 => {
            (d[0] + d[1] + d[2] - 1, macmahon_poly(d[0], d[1], d[2])?)
        }
        (PolyKind::Hook, &FamilySpec::Interior { n, m, k: 0 }) => (n + m, hook_length_poly(&[n, m])?),
        (PolyKind::Halfsquare, &FamilySpec::HalfSquare(r)) => (2 * r, half_square_poly(r)),
        (PolyKind::Asm, &FamilySpec::Asm(r)) => (3 * r - 2, asm_poly(r)?),
        _ => return Err(CliError::Usage(format!("polynomial {} does not apply to {}", poly_name(poly), cfg.family))),
    };
    let t = table(&build_space(cfg, action)?, cfg.threads)?;
    let sizes: Vec<usize> = t.orbits.iter().map(|o| o.0).collect();
    let (holds, reason, report) = match csp_check(&sizes, n, &x) {
        Ok(r) => (r.holds, None, Some(r)),
        Err(e @ (Error::OrbitSizeError { .. } | Error::CountMismatch { .. })) => (false, Some(e.to_string()), None),
        Err(e) => return Err(e.into()),
    };
    let float_disagrees = report.as_ref().is_some_and(|r| r.holds && !r.float_agrees);
    match cfg.format {
        Format::Json => emit_json(
            out,
            &CspJson {
                schema: SCHEMA,
                family: cfg.family.to_string(),
                action: action.name(),
                poly: poly_name(poly),
                polynomial: x.to_string(),
                group_order: n,
                holds,
                reason,
                report,
            },
        )?,
        Format::Tsv => {
            writeln!(out, "holds\t{holds}")?;
            writeln!(out, "group_order\t{n}")?;
            writeln!(out, "polynomial\t{x}")?;
            if let Some(r) = &reason {
                writeln!(out, "reason\t{r}")?;
            }
            if let Some(r) = &report {
                writeln!(out, "residues\t{}", r.residues.join(","))?;
                writeln!(out, "expected\t{}", r.expected.join(","))?;
            }
        }
    }
    if float_disagrees {
        return Err(CliError::Check("root-of-unity evaluation disagrees with the exact congruence".into()));
    }
    Ok(())
}

#[derive(Serialize)]
struct TrajectoryJson<'a> {
    schema: u32,
    family: String,
    action: &'a str,
    period: usize,
    expected_period: Option<usize>,
    /// First step at which the full ideal appears.
    full_at: Option<usize>,
    steps: Vec<String>,
}

/// Return time of the empty ideal where it is known in closed form.
fn expected_period(family: &FamilySpec, action: ActionName) -> Option<usize> {
    match (family, action) {
        (FamilySpec::Product(d), ActionName::Pro) if d.len() == 3 => Some(d.iter().sum::<usize>() - 1),
        (FamilySpec::Product(d), ActionName::Pro | ActionName::Row | ActionName::RowInverse) if d.len() == 2 => {
            Some(d[0] + d[1])
        }
        (&FamilySpec::Asm(n), ActionName::Spro) => Some(3 * n - 2),
        (&FamilySpec::Tsscpp(n), ActionName::Row | ActionName::RowInverse) => Some(3 * n - 2),
        _ => None,
    }
}

pub(super) fn trajectory(cfg: &RunConfig, out: &mut dyn Write) -> CliResult<()> {
    let action = require_action(cfg)?;
    let rc = build_family(cfg)?;
    let word = ideal_word(cfg, &rc, action)?
        .ok_or_else(|| CliError::Usage(format!("trajectory needs an action on ideals, not {}", action.name())))?;
    let steps = walk(&OrderIdeal::EMPTY, &WordAction::new(rc.poset(), &word), cfg.cap)?;
    let full = rc.poset().all();
    let full_at = steps.iter().position(|&s| s == full);
    let expected = expected_period(&cfg.family, action);
    match cfg.format {
        Format::Json => emit_json(
            out,
            &TrajectoryJson {
                schema: SCHEMA,
                family: cfg.family.to_string(),
                action: action.name(),
                period: steps.len(),
                expected_period: expected,
                full_at,
                steps: steps.iter().map(|&s| encode_ideal(&rc, s)).collect(),
            },
        )?,
        Format::Tsv => {
            writeln!(out, "step\tideal")?;
            for (i, &s) in steps.iter().enumerate() {
                writeln!(out, "{i}\t{}", encode_ideal(&rc, s))?;
            }
        }
    }
    match expected {
        Some(e) if e != steps.len() => {
            Err(CliError::Check(format!("empty ideal returned after {} steps, expected {e}", steps.len())))
        }
        _ => Ok(()),
    }
}
