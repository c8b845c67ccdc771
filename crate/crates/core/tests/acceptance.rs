//! One PASS/FAIL line per acceptance criterion. Set `ROWMOTION_LARGE=1` to
//! include the n = 7 ASM/TSSCPP runs.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use common::*;
use num_bigint::BigInt;
use rowmotion::bijections::*;
use rowmotion::csp::*;
use rowmotion::families::*;
use rowmotion::toggles::*;
use rowmotion::OrderIdeal;

/// Largest allowed gap between a float root-of-unity evaluation and the
/// fixed-point count, relative to `max(1, Σ|coefficients|)`.
const EVAL_TOLERANCE: f64 = 1e-6;
const MAX_IDEALS: usize = 1 << 16;

fn large() -> bool {
    std::env::var("ROWMOTION_LARGE").is_ok_and(|v| v == "1")
}

fn fail<T>(msg: impl Into<String>) -> Result<T, String> {
    Err(msg.into())
}

fn threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn partition(rc: &RcPoset, word: &ToggleWord) -> Result<OrbitPartition<OrderIdeal>, String> {
    let states = rc.enumerate_ideals(rowmotion::DEFAULT_CAP).map_err(|e| e.to_string())?;
    orbits(states, &WordAction::new(rc.poset(), word), OrbitOptions { threads: threads(), keep_cycles: false })
        .map_err(|e| e.to_string())
}

fn row(rc: &RcPoset) -> ToggleWord {
    rowmotion_word(rc, None).expect("rowmotion word")
}

fn counts(p: &OrbitPartition<OrderIdeal>) -> BTreeMap<usize, usize> {
    p.size_counts().into_iter().collect()
}

/// Exact CSP via the library, then an independent check: fixed points of
/// `g^d` counted from orbit sizes against `X(ω^d)` in floating point.
fn csp(sizes: &[usize], n: usize, x: &IntPolynomial) -> Result<bool, String> {
    let report = csp_check(sizes, n, x).map_err(|e| e.to_string())?;
    let scale =
        x.coeffs().iter().map(|c| c.to_string().trim_start_matches('-').parse::<f64>().unwrap()).sum::<f64>().max(1.0);
    let mut oracle = true;
    for d in 0..n {
        let fixed: usize = sizes.iter().filter(|&&s| d % s == 0).copied().sum();
        let (re, im) = x.eval_root_of_unity(d, n);
        if ((re - fixed as f64).abs() + im.abs()) / scale > EVAL_TOLERANCE {
            oracle = false;
        }
    }
    if oracle != report.holds {
        return fail(format!("library says {} but fixed points say {oracle} (order {n})", report.holds));
    }
    Ok(report.holds)
}

fn c1() -> Result<String, String> {
    for n in 1..=6 {
        for k in 1..=6 {
            let rc = chain_product(&[n, k]).map_err(|e| e.to_string())?;
            let p = partition(&rc, &row(&rc))?;
            let parts = box_partitions(n, k);
            let oracle = cycle_sizes(&parts, |l| box_rowmotion(l, k))?;
            if p.order != (n + k) as u128 || lcm(&oracle) != p.order || counts(&p) != sorted_counts(oracle) {
                return fail(format!("[{n}]x[{k}]: order {}", p.order));
            }
        }
    }
    for (n, k) in [(4, 2), (6, 3), (4, 4)] {
        let rc = chain_product(&[n, k]).map_err(|e| e.to_string())?;
        let got: Vec<usize> = counts(&partition(&rc, &row(&rc))?).into_keys().collect();
        let g = (1..=n.min(k)).rev().find(|d| n % d == 0 && k % d == 0).unwrap();
        let want: Vec<usize> = {
            let mut v: Vec<usize> = (1..=g).filter(|d| g % d == 0).map(|d| (n + k) / d).collect();
            v.sort_unstable();
            v
        };
        if got != want {
            return fail(format!("[{n}]x[{k}]: sizes {got:?}, expected {want:?}"));
        }
    }
    Ok("orders n+k for n,k<=6; orbit sizes (n+k)/d".into())
}

fn c2() -> Result<String, String> {
    let rc = chain_product(&[2, 2]).map_err(|e| e.to_string())?;
    let want = table(&[(4, 1), (2, 1)]);
    let r = counts(&partition(&rc, &row(&rc))?);
    let p = counts(&partition(&rc, &promotion_word(&rc, None).map_err(|e| e.to_string())?)?);
    if r != want || p != want {
        return fail(format!("[2]x[2]: Row {r:?}, Pro {p:?}"));
    }
    let mut checked = 0;
    for spec in catalog() {
        let rc = spec.build().map_err(|e| e.to_string())?;
        let states = ideals(&rc);
        if states.len() > MAX_IDEALS {
            continue;
        }
        conjugator(&rc, &states).map_err(|e| format!("{spec}: {e}"))?;
        checked += 1;
    }
    Ok(format!("Row/Pro {{4,2}}; Pro∘D = D∘Row⁻¹ on {checked} families"))
}

fn c3() -> Result<String, String> {
    let mut cases = 0;
    let mut expect = |what: String, sizes: Vec<usize>, n: usize, x: IntPolynomial, holds: bool| -> Result<(), String> {
        cases += 1;
        if csp(&sizes, n, &x)? != holds {
            return fail(format!("{what}: expected holds = {holds}"));
        }
        Ok(())
    };
    for n in 1..=5 {
        for k in 1..=5 {
            let rc = chain_product(&[n, k]).map_err(|e| e.to_string())?;
            let x = q_binomial(n + k, k).map_err(|e| e.to_string())?;
            expect(format!("[{n}]x[{k}]"), partition(&rc, &row(&rc))?.sizes(), n + k, x, true)?;
        }
    }
    for n in 1..=6 {
        let rc = half_square(n).map_err(|e| e.to_string())?;
        expect(format!("halfsquare {n}"), partition(&rc, &row(&rc))?.sizes(), 2 * n, half_square_poly(n), true)?;
    }
    let roots = (1..=5).map(|n| (RootType::A, n)).chain((1..=4).map(|n| (RootType::B, n))).chain([(RootType::D, 4)]);
    for (t, n) in roots {
        let rc = root_poset(t, n).map_err(|e| e.to_string())?;
        let (_, h) = degrees(t, n).map_err(|e| e.to_string())?;
        let x = cat_poly(t, n).map_err(|e| e.to_string())?;
        expect(format!("{t:?}{n}"), partition(&rc, &row(&rc))?.sizes(), 2 * h, x, true)?;
    }
    for m in 1..=4 {
        for n in 1..=4 {
            let rc = chain_product(&[2, m, n]).map_err(|e| e.to_string())?;
            let x = macmahon_poly(2, m, n).map_err(|e| e.to_string())?;
            expect(format!("[2]x[{m}]x[{n}]"), partition(&rc, &row(&rc))?.sizes(), m + n + 1, x, true)?;
        }
    }
    for n in 1..=5 {
        let shape = SkewShape::straight(&[n, n]).map_err(|e| e.to_string())?;
        let p = orbits(shape.tableaux(), &|t: &SkewTableau| t.promotion(), OrbitOptions::default())
            .map_err(|e| e.to_string())?;
        let x = hook_length_poly(&[n, n]).map_err(|e| e.to_string())?;
        expect(format!("SYT({n},{n})"), p.sizes(), 2 * n, x, true)?;
    }
    let rc = chain_product(&[3, 3, 3]).map_err(|e| e.to_string())?;
    expect(
        "[3]^3".into(),
        partition(&rc, &row(&rc))?.sizes(),
        8,
        macmahon_poly(3, 3, 3).map_err(|e| e.to_string())?,
        false,
    )?;
    let rc = asm_poset(6).map_err(|e| e.to_string())?;
    let spro = superpromotion_word(&rc).map_err(|e| e.to_string())?;
    expect("asm:6 spro".into(), partition(&rc, &spro)?.sizes(), 16, asm_poly(6).map_err(|e| e.to_string())?, false)?;
    Ok(format!("{cases} triples, two expected failures fail"))
}

fn c4() -> Result<String, Vec<String>> {
    let mut failures = Vec::new();
    let mut cases: Vec<(RootType, usize, u128)> = Vec::new();
    cases.extend((1..=5).map(|n| (RootType::A, n, 2 * (n as u128 + 1))));
    cases.extend((1..=4).map(|n| (RootType::B, n, 2 * n as u128)));
    cases.push((RootType::D, 4, 6));
    cases.push((RootType::D, 5, 16));
    for (t, n, want) in cases {
        let rc = root_poset(t, n).map_err(|e| vec![e.to_string()])?;
        let cov = Covers::of(rc.poset());
        let sizes = cycle_sizes(&ideals(&rc), |i| cov.rowmotion(*i)).map_err(|e| vec![e])?;
        let word_order = partition(&rc, &row(&rc)).map_err(|e| vec![e])?.order;
        if lcm(&sizes) != want || word_order != want {
            failures.push(format!("{t:?}{n}: order {} / {word_order}, expected {want}", lcm(&sizes)));
        }
    }
    if failures.is_empty() {
        Ok("A_n 2(n+1), B_n 2n, D4 6, D5 16".into())
    } else {
        Err(failures)
    }
}

fn c5() -> Result<String, String> {
    for m in 1..=5 {
        for n in 1..=5 {
            let rc = chain_product(&[2, m, n]).map_err(|e| e.to_string())?;
            let order = partition(&rc, &row(&rc))?.order;
            if order != (m + n + 1) as u128 {
                return fail(format!("[2]x[{m}]x[{n}]: order {order}"));
            }
        }
    }
    for m in 1..=4 {
        for n in 1..=4 {
            let spec = FamilySpec::Product(vec![2, m, n]);
            let rc = spec.build().map_err(|e| e.to_string())?;
            bijections(&spec, &rc, &ideals(&rc)).map_err(|e| format!("{spec}: {e}"))?;
            let pro = counts(&partition(&rc, &promotion_word(&rc, None).map_err(|e| e.to_string())?)?);
            let words = BracketWord::all(n, m);
            let psi_sizes = cycle_sizes(&words, |w| psi(w).expect("balanced"))?;
            if sorted_counts(psi_sizes) != pro {
                return fail(format!("{spec}: ψ orbits differ from Pro orbits"));
            }
        }
    }
    Ok("orders m+n+1; bracket/ncp equivariant; ψ ≅ Pro".into())
}

fn c6() -> Result<String, String> {
    let rc = chain_product(&[4, 4, 4]).map_err(|e| e.to_string())?;
    let p = partition(&rc, &row(&rc))?;
    let c = counts(&p);
    if p.state_count != 232_848 || !c.contains_key(&33) {
        return fail(format!("{} ideals, sizes {c:?}", p.state_count));
    }
    Ok(format!("232848 ideals, {} orbits of size 33", c[&33]))
}

fn c7() -> Result<String, String> {
    let want = [1u128, 2, 6, 8, 20, 2520];
    for (n, &w) in (1..=6).zip(&want) {
        let rc = asm_poset(n).map_err(|e| e.to_string())?;
        let order = partition(&rc, &gyration_word(&rc))?.order;
        if order != w {
            return fail(format!("asm:{n} gyration order {order}, expected {w}"));
        }
    }
    for n in 1..=5 {
        let rc = asm_poset(n).map_err(|e| e.to_string())?;
        let gyr = gyration_word(&rc).compile(rc.poset());
        for i in ideals(&rc) {
            let h = ideal_to_height(&rc, n, i).map_err(|e| e.to_string())?;
            if gyration_heights(&h) != ideal_to_height(&rc, n, gyr.apply(i)).map_err(|e| e.to_string())? {
                return fail(format!("asm:{n}: height gyration disagrees at {h}"));
            }
        }
    }
    let mut note = "orders 1,2,6,8,20,2520; heights agree n<=5".to_string();
    if large() {
        let rc = asm_poset(7).map_err(|e| e.to_string())?;
        let p = partition(&rc, &gyration_word(&rc))?;
        if p.state_count != 218_348 || p.order != 3_686_760 {
            return fail(format!("asm:7 gyration: {} states, order {}", p.state_count, p.order));
        }
        note.push_str("; n=7 order 3686760");
    } else {
        note.push_str("; n=7 skipped");
    }
    Ok(note)
}

fn c8() -> Result<String, Vec<String>> {
    c8_tables().map_err(|e| vec![e])?;
    let mut failures = Vec::new();
    for n in 1..=6 {
        let rc = asm_poset(n).map_err(|e| vec![e.to_string()])?;
        let spro = superpromotion_word(&rc).map_err(|e| vec![e.to_string()])?;
        let order = partition(&rc, &spro).map_err(|e| vec![e])?.order;
        if order % (3 * n as u128 - 2) != 0 {
            failures.push(format!("asm:{n}: spro order {order} not divisible by {}", 3 * n - 2));
        }
        let rc = tsscpp_poset(n).map_err(|e| vec![e.to_string()])?;
        let order = partition(&rc, &row(&rc)).map_err(|e| vec![e])?.order;
        if order % (3 * n as u128 - 2) != 0 {
            failures.push(format!("tsscpp:{n}: Row order {order} not divisible by {}", 3 * n - 2));
        }
    }
    let mut note = "spro and TSSCPP tables match for n<=6; divisibility checked n<=6".to_string();
    if large() {
        c8_large().map_err(|e| vec![e])?;
        note.push_str("; n=7 spro {57^55,19^11327}, tsscpp:7 order divisible by 19");
    } else {
        note.push_str("; n=7 skipped");
    }
    if failures.is_empty() {
        Ok(note)
    } else {
        Err(failures)
    }
}

fn c8_tables() -> Result<(), String> {
    let spro_tables: [&[(usize, usize)]; 6] = [
        &[(1, 1)],
        &[(2, 1)],
        &[(7, 1)],
        &[(10, 3), (5, 2), (2, 1)],
        &[(13, 33)],
        &[(16, 456), (8, 16), (4, 2), (2, 2)],
    ];
    let tsscpp_tables: [&[(usize, usize)]; 6] = [
        &[(1, 1)],
        &[(2, 1)],
        &[(7, 1)],
        &[(10, 3), (5, 2), (2, 1)],
        &[(39, 1), (26, 1), (13, 28)],
        &[(112, 1), (96, 2), (80, 2), (64, 5), (48, 23), (32, 30), (24, 2), (16, 277), (8, 13), (2, 2)],
    ];
    for n in 1..=6 {
        let rc = asm_poset(n).map_err(|e| e.to_string())?;
        let got = counts(&partition(&rc, &superpromotion_word(&rc).map_err(|e| e.to_string())?)?);
        if got != table(spro_tables[n - 1]) {
            return fail(format!("asm:{n} spro {got:?}"));
        }
        let rc = tsscpp_poset(n).map_err(|e| e.to_string())?;
        let r = partition(&rc, &row(&rc))?;
        let p = counts(&partition(&rc, &promotion_word(&rc, None).map_err(|e| e.to_string())?)?);
        if counts(&r) != table(tsscpp_tables[n - 1]) || p != counts(&r) {
            return fail(format!("tsscpp:{n} Row {:?}, Pro {p:?}", counts(&r)));
        }
    }
    Ok(())
}

fn c8_large() -> Result<(), String> {
    {
        let rc = asm_poset(7).map_err(|e| e.to_string())?;
        let p = partition(&rc, &superpromotion_word(&rc).map_err(|e| e.to_string())?)?;
        if counts(&p) != table(&[(57, 55), (19, 11327)]) || p.order != 57 || p.state_count != 218_348 {
            return fail(format!("asm:7 spro {:?}", counts(&p)));
        }
        let rc = tsscpp_poset(7).map_err(|e| e.to_string())?;
        let order = partition(&rc, &row(&rc))?.order;
        if order % 19 != 0 {
            return fail(format!("tsscpp:7 Row order {order}"));
        }
    }
    Ok(())
}

fn c9() -> Result<String, String> {
    let shape = SkewShape::straight(&[8, 6]).map_err(|e| e.to_string())?;
    let tableaux = shape.tableaux();
    // Hook lengths of (8,6): row 1 is 9,8,7,6,5,4,2,1 and row 2 is 6,5,4,3,2,1.
    let hooks: BigInt = [9u32, 8, 7, 6, 5, 4, 2, 1, 6, 5, 4, 3, 2, 1].iter().map(|&h| BigInt::from(h)).product();
    let fact: BigInt = (1..=14u32).map(BigInt::from).product();
    let count = fact / hooks;
    let p = orbits(tableaux, &|t: &SkewTableau| t.promotion(), OrbitOptions { threads: threads(), keep_cycles: false })
        .map_err(|e| e.to_string())?;
    if BigInt::from(p.state_count) != count || p.state_count != 1001 || p.order != 7_554_844_752 {
        return fail(format!("{} tableaux, order {}", p.state_count, p.order));
    }
    Ok("1001 tableaux, order 7554844752".into())
}

fn c10() -> Result<String, String> {
    let mut checked = 0;
    for spec in catalog() {
        let rc = spec.build().map_err(|e| e.to_string())?;
        if ideals(&rc).len() > MAX_IDEALS {
            continue;
        }
        all_properties(&spec)?;
        checked += 1;
    }
    Ok(format!("all properties on {checked} families"))
}

/// Instances where the stated claim is false for the actual dynamics. Each
/// stays a FAIL line; only these exact messages are tolerated in the exit code.
/// Φ⁺(A₁) is one element, so Row swaps two ideals. At n = 2 both actions have
/// a single orbit of size 2, while 3n − 2 = 4.
const KNOWN_FALSE: &[&str] = &[
    "A1: order 2 / 2, expected 4",
    "asm:2: spro order 2 not divisible by 4",
    "tsscpp:2: Row order 2 not divisible by 4",
];

type Criterion = fn() -> Result<String, Vec<String>>;

fn one(f: fn() -> Result<String, String>) -> Result<String, Vec<String>> {
    f().map_err(|e| vec![e])
}

fn main() {
    let criteria: [(&str, Criterion, Duration); 10] = [
        ("rowmotion on [n]x[k]", || one(c1), Duration::from_secs(36)),
        ("Row/Pro on [2]x[2] and the conjugator D", || one(c2), Duration::from_secs(10)),
        ("CSP suite", || one(c3), Duration::from_secs(30)),
        ("root poset orders", c4, Duration::from_secs(5)),
        ("[2]x[m]x[n]", || one(c5), Duration::from_secs(10)),
        ("[4]x[4]x[4]", || one(c6), Duration::from_secs(60)),
        ("ASM gyration", || one(c7), Duration::from_secs(if large() { 600 } else { 60 })),
        ("superpromotion and TSSCPP tables", c8, Duration::from_secs(if large() { 600 } else { 60 })),
        ("promotion on SYT(8,6)", || one(c9), Duration::from_secs(5)),
        ("property suites", || one(c10), Duration::from_secs(60)),
    ];
    let mut unexpected = 0;
    for (k, (name, f, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(f).unwrap_or_else(|_| Err(vec!["panicked".into()]));
        let took = start.elapsed();
        let result = match result {
            Ok(note) if took > *budget => Err(vec![format!("{note}; took {took:.1?}, budget {budget:?}")]),
            other => other,
        };
        match result {
            Ok(note) => println!("criterion {:>2}: PASS  {name}: {note} ({took:.2?})", k + 1),
            Err(failures) => {
                unexpected += failures.iter().filter(|f| !KNOWN_FALSE.contains(&f.as_str())).count();
                println!("criterion {:>2}: FAIL  {name}: {} ({took:.2?})", k + 1, failures.join("; "));
            }
        }
    }
    if unexpected > 0 {
        std::process::exit(1);
    }
}
