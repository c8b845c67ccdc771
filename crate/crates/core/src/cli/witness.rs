use std::fmt::Display;
use std::io::Write;

use serde::Serialize;

use super::commands::{build_family, encode_ideal, ideal_word};
use super::{ActionName, CliError, CliResult, Format, RunConfig, WitnessKind, SCHEMA};
use crate::bijections::*;
use crate::families::{FamilySpec, RootType};
use crate::poset::OrderIdeal;
use crate::toggles::{conjugator_d, RcPoset};

type Forward<'a, W> = Box<dyn Fn(OrderIdeal) -> crate::Result<W> + 'a>;
type Backward<'a, W> = Box<dyn Fn(&W) -> crate::Result<OrderIdeal> + 'a>;
type Step<'a, W> = Box<dyn Fn(&W) -> crate::Result<W> + 'a>;

/// A bijection from ideals plus the actions it carries on the witness side.
struct Parts<'a, W> {
    forward: Forward<'a, W>,
    backward: Backward<'a, W>,
    /// Image of promotion.
    pro: Option<Step<'a, W>>,
    /// Image of promotion inverse; rowmotion then acts as this step on `forward ∘ D`.
    pro_inverse: Option<Step<'a, W>>,
    gyration: Option<Step<'a, W>>,
}

impl<'a, W> Parts<'a, W> {
    fn new(forward: Forward<'a, W>, backward: Backward<'a, W>) -> Self {
        Parts { forward, backward, pro: None, pro_inverse: None, gyration: None }
    }
}

fn kind_name(k: WitnessKind) -> &'static str {
    match k {
        WitnessKind::Word => "word",
        WitnessKind::Matching => "matching",
        WitnessKind::Bmatching => "bmatching",
        WitnessKind::Bracket => "bracket",
        WitnessKind::Ncp => "ncp",
        WitnessKind::Height => "height",
        WitnessKind::Asm => "asm",
        WitnessKind::Syt => "syt",
        WitnessKind::Bpm => "bpm",
    }
}

fn default_action(k: WitnessKind) -> ActionName {
    match k {
        WitnessKind::Word | WitnessKind::Matching | WitnessKind::Bmatching => ActionName::Row,
        WitnessKind::Height | WitnessKind::Asm => ActionName::Gyration,
        WitnessKind::Bracket | WitnessKind::Ncp | WitnessKind::Syt | WitnessKind::Bpm => ActionName::Pro,
    }
}

fn unsupported(cfg: &RunConfig, kind: WitnessKind) -> CliError {
    CliError::Usage(format!("witness kind {} does not apply to {}", kind_name(kind), cfg.family))
}

fn three_dims(d: &[usize]) -> Option<[usize; 3]> {
    match *d {
        [l, m, n] => Some([l, m, n]),
        _ => None,
    }
}

pub(super) fn witness(cfg: &RunConfig, out: &mut dyn Write) -> CliResult<()> {
    let kind = cfg.kind.expect("witness is always called with a kind");
    let action = cfg.action.unwrap_or(default_action(kind));
    let rc = build_family(cfg)?;
    let rc = &rc;
    match (kind, &cfg.family) {
        (WitnessKind::Word, FamilySpec::Product(d)) if d.len() == 2 => {
            let mut p = Parts::new(Box::new(move |i| boundary_word(rc, i)), Box::new(move |w| word_to_ideal(rc, w)));
            p.pro = Some(Box::new(|w: &BinaryWord| Ok(w.rotate_inverse())));
            p.pro_inverse = Some(Box::new(|w: &BinaryWord| Ok(w.rotate())));
            emit(cfg, rc, kind, action, p, out)
        }
        (WitnessKind::Word, FamilySpec::HalfSquare(_)) => {
            let mut p =
                Parts::new(Box::new(move |i| halfsquare_word(rc, i)), Box::new(move |w| halfsquare_ideal(rc, w)));
            p.pro = Some(Box::new(|w: &BinaryWord| Ok(w.rotate_inverse())));
            p.pro_inverse = Some(Box::new(|w: &BinaryWord| Ok(w.rotate())));
            emit(cfg, rc, kind, action, p, out)
        }
        (WitnessKind::Matching, FamilySpec::Root(RootType::A, _)) => {
            let mut p = Parts::new(
                Box::new(move |i| matching_from_word_a(&boundary_word(rc, i)?)),
                Box::new(move |m| word_to_ideal(rc, &word_from_matching_a(m))),
            );
            p.pro = Some(Box::new(|m: &NoncrossingMatching| Ok(m.rotate_inverse())));
            p.pro_inverse = Some(Box::new(|m: &NoncrossingMatching| Ok(m.rotate())));
            emit(cfg, rc, kind, action, p, out)
        }
        (WitnessKind::Bmatching, FamilySpec::Root(RootType::B | RootType::C, _)) => {
            let mut p = Parts::new(
                Box::new(move |i| matching_from_word_b(&boundary_word(rc, i)?)),
                Box::new(move |m| word_to_ideal(rc, &word_from_matching_b(m)?)),
            );
            p.pro = Some(Box::new(|m: &NoncrossingMatching| Ok(m.rotate_inverse())));
            p.pro_inverse = Some(Box::new(|m: &NoncrossingMatching| Ok(m.rotate())));
            emit(cfg, rc, kind, action, p, out)
        }
        (WitnessKind::Bracket, FamilySpec::Product(d)) if d.len() == 3 && d[0] == 2 => {
            let dims = three_dims(d).unwrap();
            let mut p = Parts::new(
                Box::new(move |i| bracket_word(&boundary_path_matrix(dims, i)?)),
                Box::new(move |w| matrix_to_ideal(dims, &bracket_matrix(w))),
            );
            p.pro = Some(Box::new(psi));
            emit(cfg, rc, kind, action, p, out)
        }
        (WitnessKind::Ncp, FamilySpec::Product(d)) if d.len() == 3 && d[0] == 2 => {
            let dims = three_dims(d).unwrap();
            let (m, n) = (d[1], d[2]);
            let all = BracketWord::all(n, m);
            let by_partition: std::collections::HashMap<SetPartition, BracketWord> =
                all.iter().map(|w| Ok((noncrossing_partition(w)?, w.clone()))).collect::<crate::Result<_>>()?;
            let mut p = Parts::new(
                Box::new(move |i| noncrossing_partition(&bracket_word(&boundary_path_matrix(dims, i)?)?)),
                Box::new(move |s: &SetPartition| {
                    let w = by_partition
                        .get(s)
                        .ok_or_else(|| crate::Error::DomainError(format!("{s} has no bracket word")))?;
                    matrix_to_ideal(dims, &bracket_matrix(w))
                }),
            );
            p.pro = Some(Box::new(|s: &SetPartition| Ok(s.rotate_inverse())));
            p.pro_inverse = Some(Box::new(|s: &SetPartition| Ok(s.rotate())));
            emit(cfg, rc, kind, action, p, out)
        }
        (WitnessKind::Bpm, FamilySpec::Product(d)) if d.len() == 3 => {
            let dims = three_dims(d).unwrap();
            let p = Parts::new(
                Box::new(move |i| boundary_path_matrix(dims, i)),
                Box::new(move |b| matrix_to_ideal(dims, b)),
            );
            emit(cfg, rc, kind, action, p, out)
        }
        (WitnessKind::Height, &FamilySpec::Asm(n)) => {
            let mut p =
                Parts::new(Box::new(move |i| ideal_to_height(rc, n, i)), Box::new(move |h| height_to_ideal(rc, h)));
            p.gyration = Some(Box::new(|h: &HeightFunction| Ok(gyration_heights(h))));
            emit(cfg, rc, kind, action, p, out)
        }
        (WitnessKind::Asm, &FamilySpec::Asm(n)) => {
            let mut p = Parts::new(
                Box::new(move |i| asm_from_height(&ideal_to_height(rc, n, i)?)),
                Box::new(move |a| height_to_ideal(rc, &height_from_asm(a))),
            );
            p.gyration = Some(Box::new(|a: &AsmMatrix| asm_from_height(&gyration_heights(&height_from_asm(a)))));
            emit(cfg, rc, kind, action, p, out)
        }
        (WitnessKind::Syt, &FamilySpec::Interior { k, .. }) => {
            let mut p = Parts::new(Box::new(move |i| ideal_to_syt(rc, k, i)), Box::new(move |t| syt_to_ideal(rc, t)));
            p.pro = Some(Box::new(|t: &SkewTableau| Ok(t.promotion())));
            emit(cfg, rc, kind, action, p, out)
        }
        _ => Err(unsupported(cfg, kind)),
    }
}

#[derive(Serialize)]
struct Pair {
    ideal: String,
    witness: String,
}

#[derive(Serialize)]
struct WitnessJson<'a> {
    schema: u32,
    family: String,
    kind: &'a str,
    action: &'a str,
    count: usize,
    round_trip: bool,
    /// `None` when the kind carries no image of the action.
    equivariant: Option<bool>,
    pairs: Vec<Pair>,
}

fn emit<'a, W: Display + PartialEq + 'a>(
    cfg: &RunConfig,
    rc: &'a RcPoset,
    kind: WitnessKind,
    action: ActionName,
    parts: Parts<'a, W>,
    out: &mut dyn Write,
) -> CliResult<()> {
    let Parts { forward, backward, pro, pro_inverse, gyration } = parts;
    let (forward, backward, step): (Forward<'a, W>, Backward<'a, W>, Option<Step<'a, W>>) = match action {
        ActionName::Pro => (forward, backward, pro),
        ActionName::Gyration if gyration.is_some() => (forward, backward, gyration),
        ActionName::Row if pro_inverse.is_some() => {
            let d = conjugator_d(rc);
            let d_inv = d.inverse();
            let poset = rc.poset();
            (
                Box::new(move |i| forward(d.apply(poset, i))),
                Box::new(move |w| Ok(d_inv.apply(poset, backward(w)?))),
                pro_inverse,
            )
        }
        _ if kind == WitnessKind::Bpm => (forward, backward, None),
        _ => {
            return Err(CliError::Usage(format!(
                "witness kind {} carries no image of {}",
                kind_name(kind),
                action.name()
            )));
        }
    };
    let word = ideal_word(cfg, rc, action)?
        .ok_or_else(|| CliError::Usage(format!("{} is not an action on ideals", action.name())))?;
    let compiled = word.compile(rc.poset());
    let ideals = rc.enumerate_ideals(cfg.cap)?;
    let mut pairs = Vec::with_capacity(ideals.len());
    let mut round_trip = true;
    let mut equivariant = step.as_ref().map(|_| true);
    let mut first_failure = None;
    for &ideal in &ideals {
        let w = forward(ideal)?;
        if backward(&w).ok() != Some(ideal) {
            round_trip = false;
            first_failure.get_or_insert_with(|| format!("{w} does not map back to {}", encode_ideal(rc, ideal)));
        }
        if let Some(step) = &step {
            let moved = forward(compiled.apply(ideal))?;
            if step(&w)? != moved {
                equivariant = Some(false);
                first_failure.get_or_insert_with(|| format!("{} at {w} is not carried to {moved}", action.name()));
            }
        }
        pairs.push(Pair { ideal: encode_ideal(rc, ideal), witness: w.to_string() });
    }
    match cfg.format {
        Format::Json => {
            let body = WitnessJson {
                schema: SCHEMA,
                family: cfg.family.to_string(),
                kind: kind_name(kind),
                action: action.name(),
                count: pairs.len(),
                round_trip,
                equivariant,
                pairs,
            };
            let text = serde_json::to_string(&body).map_err(|e| CliError::Check(e.to_string()))?;
            writeln!(out, "{text}")?;
        }
        Format::Tsv => {
            writeln!(out, "ideal\twitness")?;
            for p in &pairs {
                writeln!(out, "{}\t{}", p.ideal, p.witness)?;
            }
        }
    }
    match first_failure {
        Some(f) => Err(CliError::Check(f)),
        None => Ok(()),
    }
}
