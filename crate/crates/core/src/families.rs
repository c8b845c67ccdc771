//! Constructors for the poset families, each with its planar embedding.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::toggles::rc::{PathEnd, Position, RcPoset, Window};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootType {
    A,
    B,
    C,
    D,
}

impl RootType {
    pub fn letter(self) -> char {
        match self {
            RootType::A => 'A',
            RootType::B => 'B',
            RootType::C => 'C',
            RootType::D => 'D',
        }
    }
}

/// A family name plus its parameters.
///
/// Text syntax: `product:2,3,4`, `root:A,3`, `interior:n,m,k`,
/// `halfsquare:4`, `asm:5`, `tsscpp:5`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Product(Vec<usize>),
    Root(RootType, usize),
    Interior { n: usize, m: usize, k: usize },
    HalfSquare(usize),
    Asm(usize),
    Tsscpp(usize),
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Product(d) => {
                let parts: Vec<String> = d.iter().map(|x| x.to_string()).collect();
                write!(f, "product:{}", parts.join(","))
            }
            FamilySpec::Root(t, n) => write!(f, "root:{},{n}", t.letter()),
            FamilySpec::Interior { n, m, k } => write!(f, "interior:{n},{m},{k}"),
            FamilySpec::HalfSquare(n) => write!(f, "halfsquare:{n}"),
            FamilySpec::Asm(n) => write!(f, "asm:{n}"),
            FamilySpec::Tsscpp(n) => write!(f, "tsscpp:{n}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidFamilySpec(s.to_string());
        let (tag, args) = s.split_once(':').ok_or_else(bad)?;
        let args: Vec<&str> = args.split(',').map(str::trim).collect();
        let nums =
            |xs: &[&str]| -> Result<Vec<usize>> { xs.iter().map(|x| x.parse::<usize>().map_err(|_| bad())).collect() };
        let one = |xs: &[&str]| -> Result<usize> {
            match nums(xs)?.as_slice() {
                [n] => Ok(*n),
                _ => Err(bad()),
            }
        };
        let spec = match tag.trim() {
            "product" => FamilySpec::Product(nums(&args)?),
            "root" => {
                if args.len() != 2 {
                    return Err(bad());
                }
                let t = match args[0] {
                    "A" | "a" => RootType::A,
                    "B" | "b" => RootType::B,
                    "C" | "c" => RootType::C,
                    "D" | "d" => RootType::D,
                    _ => return Err(bad()),
                };
                FamilySpec::Root(t, one(&args[1..])?)
            }
            "interior" => match nums(&args)?.as_slice() {
                [n, m, k] => FamilySpec::Interior { n: *n, m: *m, k: *k },
                _ => return Err(bad()),
            },
            "halfsquare" => FamilySpec::HalfSquare(one(&args)?),
            "asm" => FamilySpec::Asm(one(&args)?),
            "tsscpp" => FamilySpec::Tsscpp(one(&args)?),
            _ => return Err(bad()),
        };
        spec.validate().map_err(|_| bad())?;
        Ok(spec)
    }
}

impl FamilySpec {
    fn validate(&self) -> Result<()> {
        let positive = |xs: &[usize]| xs.iter().all(|&x| x > 0);
        let ok = match self {
            FamilySpec::Product(d) => positive(d) && !d.is_empty(),
            FamilySpec::Root(_, n) => *n > 0,
            FamilySpec::Interior { n, m, .. } => *n > 0 && *m > 0,
            FamilySpec::HalfSquare(n) | FamilySpec::Asm(n) | FamilySpec::Tsscpp(n) => *n > 0,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidFamilySpec(self.to_string()))
        }
    }

    pub fn build(&self) -> Result<RcPoset> {
        self.validate()?;
        match self {
            FamilySpec::Product(d) => chain_product(d),
            FamilySpec::Root(t, n) => root_poset(*t, *n),
            FamilySpec::Interior { n, m, k } => two_row_interior(*n, *m, *k),
            FamilySpec::HalfSquare(n) => half_square(*n),
            FamilySpec::Asm(n) => asm_poset(*n),
            FamilySpec::Tsscpp(n) => tsscpp_poset(*n),
        }
    }
}

fn grid_poset(cells: &[Vec<usize>], labels: Vec<String>) -> Result<Poset> {
    // Componentwise order on integer tuples; covers are unit steps.
    let index: HashMap<&[usize], usize> = cells.iter().enumerate().map(|(i, c)| (c.as_slice(), i)).collect();
    let mut covers = Vec::new();
    for (i, c) in cells.iter().enumerate() {
        for axis in 0..c.len() {
            let mut up = c.clone();
            up[axis] += 1;
            if let Some(&j) = index.get(up.as_slice()) {
                covers.push((i, j));
            }
        }
    }
    Poset::new(labels, &covers)
}

/// `[n]×[k]` or `[ℓ]×[m]×[n]`.
///
/// Two factors sit at `(i−j, i+j)` with the first factor increasing to the
/// northeast; three factors sit at `(i−j+k, i+j+k)` with layers indexed by `i`.
pub fn chain_product(dims: &[usize]) -> Result<RcPoset> {
    if dims.contains(&0) {
        return Err(Error::DomainError("chain lengths must be positive".into()));
    }
    match *dims {
        [n, k] => {
            let cells: Vec<Vec<usize>> = (1..=n).flat_map(|i| (1..=k).map(move |j| vec![i, j])).collect();
            let labels = cells.iter().map(|c| format!("({},{})", c[0], c[1])).collect();
            let poset = grid_poset(&cells, labels)?;
            let pos = cells.iter().map(|c| (c[0] as i64 - c[1] as i64, (c[0] + c[1]) as i64)).collect();
            let (n, k) = (n as i64, k as i64);
            let window = Window::new((-k, k + 1), (n + k) as usize, PathEnd::Fixed(n + 1));
            RcPoset::new(poset, pos, Some(window), None)
        }
        [l, m, n] => {
            let cells: Vec<Vec<usize>> =
                (1..=l).flat_map(|i| (1..=m).flat_map(move |j| (1..=n).map(move |k| vec![i, j, k]))).collect();
            let labels = cells.iter().map(|c| format!("({},{},{})", c[0], c[1], c[2])).collect();
            let poset = grid_poset(&cells, labels)?;
            let pos = cells
                .iter()
                .map(|c| {
                    let (i, j, k) = (c[0] as i64, c[1] as i64, c[2] as i64);
                    (i - j + k, i + j + k)
                })
                .collect();
            let layers = cells.iter().map(|c| c[0]).collect();
            RcPoset::new(poset, pos, None, Some(layers))
        }
        _ => Err(Error::UnsupportedArity(dims.len())),
    }
}

/// A positive root as a coordinate vector.
type Root = Vec<i64>;

fn unit(n: usize, i: usize) -> Root {
    let mut v = vec![0; n];
    v[i - 1] = 1;
    v
}

fn add(a: &Root, b: &Root) -> Root {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &Root, b: &Root) -> Root {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn root_label(r: &Root) -> String {
    let mut s = String::new();
    for (i, &c) in r.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let sign = if c < 0 {
            "-"
        } else if s.is_empty() {
            ""
        } else {
            "+"
        };
        let coef = if c.abs() == 1 { String::new() } else { c.abs().to_string() };
        s.push_str(&format!("{sign}{coef}e{}", i + 1));
    }
    s
}

/// Builds the poset on `roots` where `α ⋖ β` exactly when `β − α` is simple.
fn root_order(roots: &[Root], simple: &[Root]) -> Result<Poset> {
    let index: HashMap<&Root, usize> = roots.iter().enumerate().map(|(i, r)| (r, i)).collect();
    let mut covers = Vec::new();
    for (i, r) in roots.iter().enumerate() {
        for s in simple {
            if let Some(&j) = index.get(&add(r, s)) {
                covers.push((i, j));
            }
        }
    }
    Poset::new(roots.iter().map(root_label).collect(), &covers)
}

/// `e_i − e_j` (A, coordinates in dimension `dim`).
fn diff(dim: usize, i: usize, j: usize) -> Root {
    sub(&unit(dim, i), &unit(dim, j))
}

fn type_b_position(n: usize, r: &Root) -> Position {
    let n = n as i64;
    let nz: Vec<(i64, i64)> = r.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i as i64 + 1, c)).collect();
    match nz.as_slice() {
        [(i, 1), (j, -1)] => (i + j, j - i),
        [(i, 1)] => (n + 1 + i, n + 1 - i),
        [(i, 1), (j, 1)] => (2 * n + 2 - (j - i), 2 * n + 2 - (i + j)),
        _ => unreachable!("not a type B root"),
    }
}

/// Positive roots of type A, B, C or D with the planar embedding used for
/// each type. Type C is placed through an isomorphism with type B.
pub fn root_poset(kind: RootType, n: usize) -> Result<RcPoset> {
    if n == 0 || (kind == RootType::D && n < 2) {
        return Err(Error::UnsupportedRank { kind: kind.letter(), rank: n });
    }
    let pairs = |top: usize| (1..top).flat_map(move |i| (i + 1..=top).map(move |j| (i, j)));
    match kind {
        RootType::A => {
            let dim = n + 1;
            let roots: Vec<Root> = pairs(dim).map(|(i, j)| diff(dim, i, j)).collect();
            let simple: Vec<Root> = (1..=n).map(|i| diff(dim, i, i + 1)).collect();
            let pos = pairs(dim).map(|(i, j)| ((i + j) as i64, (j - i) as i64)).collect();
            let window = Window::new((1, 0), 2 * n + 2, PathEnd::Fixed(0)).with_floor(0);
            RcPoset::new(root_order(&roots, &simple)?, pos, Some(window), None)
        }
        RootType::B | RootType::C => {
            let mut roots: Vec<Root> = pairs(n).map(|(i, j)| diff(n, i, j)).collect();
            let mut simple: Vec<Root> = (1..n).map(|i| diff(n, i, i + 1)).collect();
            if kind == RootType::B {
                roots.extend((1..=n).map(|i| unit(n, i)));
                roots.extend(pairs(n).map(|(i, j)| add(&unit(n, i), &unit(n, j))));
                simple.push(unit(n, n));
            } else {
                roots.extend((1..=n).map(|i| add(&unit(n, i), &unit(n, i))));
                roots.extend(pairs(n).map(|(i, j)| add(&unit(n, i), &unit(n, j))));
                simple.push(add(&unit(n, n), &unit(n, n)));
            }
            let pos = roots
                .iter()
                .map(|r| if kind == RootType::C { type_b_position(n, &c_to_b(n, r)) } else { type_b_position(n, r) })
                .collect();
            let window = Window::new((1, 0), 2 * n, PathEnd::Free).with_floor(0);
            RcPoset::new(root_order(&roots, &simple)?, pos, Some(window), None)
        }
        RootType::D => {
            let mut roots: Vec<Root> = pairs(n).map(|(i, j)| diff(n, i, j)).collect();
            roots.extend(pairs(n).map(|(i, j)| add(&unit(n, i), &unit(n, j))));
            let mut simple: Vec<Root> = (1..n).map(|i| diff(n, i, i + 1)).collect();
            simple.push(add(&unit(n, n - 1), &unit(n, n)));
            let nn = n as i64;
            let pos = pairs(n)
                .map(|(i, j)| ((i + j) as i64, (j - i) as i64))
                .chain(pairs(n).map(|(i, j)| {
                    let (i, j) = (i as i64, j as i64);
                    (2 * nn - (j - i), 2 * nn - (i + j))
                }))
                .collect();
            RcPoset::new(root_order(&roots, &simple)?, pos, None, None)
        }
    }
}

/// The isomorphism from type C roots onto type B roots used to place type C.
pub fn c_to_b(n: usize, r: &Root) -> Root {
    let nz: Vec<(usize, i64)> = r.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i + 1, c)).collect();
    match nz.as_slice() {
        [(i, 2)] if *i < n => add(&unit(n, *i), &unit(n, i + 1)),
        [(i, 2)] => unit(n, *i),
        [(i, 1), (j, 1)] if *j < n => add(&unit(n, *i), &unit(n, j + 1)),
        [(i, 1), (_, 1)] => unit(n, *i),
        _ => r.clone(),
    }
}

/// `Int(J(λ/μ))` for the two-row skew shape `λ/μ = (n+k, m)/(k)`.
///
/// The faces of the Hasse diagram of `J(λ/μ)` are the boxes `(x, y)` of
/// `[n]×[m]` with `x ≥ y − k + 1`; adjacent faces are covers, going up as `x`
/// grows and down as `y` grows. A maximal chain cuts out the ideal of faces
/// on its right: box `(x, y)` is in it when the `x`-th entry of the first row
/// is smaller than the `y`-th entry of the second. Boxes of the ambient
/// rectangle that are not faces are forced under every boundary path.
pub fn two_row_interior(n: usize, m: usize, k: usize) -> Result<RcPoset> {
    if n == 0 || m == 0 {
        return Err(Error::DomainError("two-row shapes need n, m >= 1".into()));
    }
    if m > n + k {
        return Err(Error::DomainError(format!("(n+k, m) = ({}, {m}) is not a partition", n + k)));
    }
    let keep = |x: usize, y: usize| x + k > y;
    let cells: Vec<Vec<usize>> =
        (1..=n).flat_map(|x| (1..=m).map(move |y| vec![x, y])).filter(|c| keep(c[0], c[1])).collect();
    if cells.is_empty() {
        return Err(Error::EmptyShape);
    }
    let labels = cells.iter().map(|c| format!("({},{})", c[0], c[1])).collect();
    let flipped: Vec<Vec<usize>> = cells.iter().map(|c| vec![c[0], m + 1 - c[1]]).collect();
    let poset = grid_poset(&flipped, labels)?;
    let at = |x: usize, y: usize| {
        let (u, v) = (x as i64, (m + 1 - y) as i64);
        (u - v, u + v)
    };
    let pos = cells.iter().map(|c| at(c[0], c[1])).collect();
    let forced = (1..=n)
        .flat_map(|x| (1..=m).map(move |y| (x, y)))
        .filter(|&(x, y)| !keep(x, y))
        .map(|(x, y)| at(x, y))
        .collect();
    let (n, m) = (n as i64, m as i64);
    let window = Window::new((-m, m + 1), (n + m) as usize, PathEnd::Fixed(n + 1)).with_forced(forced);
    RcPoset::new(poset, pos, Some(window), None)
}

/// `J([2]×[n−1])`, drawn as the left half of `[n]×[n]`.
///
/// The ideal with `a` elements in the first row of `[2]×[n−1]` and `b` in the
/// second becomes the cell `(i, j) = (b+1, a+1)`, placed at `(i−j, i+j)`.
pub fn half_square(n: usize) -> Result<RcPoset> {
    if n == 0 {
        return Err(Error::DomainError("half_square needs n >= 1".into()));
    }
    let w = n - 1;
    let base_cells: Vec<Vec<usize>> = (1..=2).flat_map(|i| (1..=w).map(move |j| vec![i, j])).collect();
    let base = grid_poset(&base_cells, base_cells.iter().map(|c| format!("({},{})", c[0], c[1])).collect())?;
    let lattice = base.distributive_lattice(crate::poset::DEFAULT_CAP)?;
    let ideals = base.enumerate_ideals(crate::poset::DEFAULT_CAP)?;
    let mut pos = Vec::with_capacity(ideals.len());
    let mut labels = Vec::with_capacity(ideals.len());
    for ideal in &ideals {
        let a = ideal.iter().filter(|&p| p < w).count() as i64;
        let b = ideal.len() as i64 - a;
        let (i, j) = (b + 1, a + 1);
        pos.push((i - j, i + j));
        labels.push(format!("({i},{j})"));
    }
    let covers = lattice.covers().to_vec();
    let poset = Poset::new(labels, &covers)?;
    let n = n as i64;
    let window = Window::new((-n, n + 1), n as usize, PathEnd::Free);
    RcPoset::new(poset, pos, Some(window), None)
}

/// A root `e_a − e_b` of the layer `Φ⁺(A_k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LayerRoot {
    pub layer: usize,
    pub a: usize,
    pub b: usize,
}

fn layered_roots(n: usize) -> Vec<LayerRoot> {
    let mut out = Vec::new();
    for layer in 1..n {
        for a in 1..=layer {
            for b in a + 1..=layer + 1 {
                out.push(LayerRoot { layer, a, b });
            }
        }
    }
    out
}

fn layered_poset(roots: &[LayerRoot], extra: impl Fn(&LayerRoot) -> Vec<(LayerRoot, bool)>) -> Result<Poset> {
    let index: HashMap<LayerRoot, usize> = roots.iter().enumerate().map(|(i, r)| (*r, i)).collect();
    let mut covers = Vec::new();
    for (i, r) in roots.iter().enumerate() {
        // inside a layer: add a simple root on either end
        if r.a > 1 {
            covers.push((i, index[&LayerRoot { a: r.a - 1, ..*r }]));
        }
        if let Some(&j) = index.get(&LayerRoot { b: r.b + 1, ..*r }) {
            covers.push((i, j));
        }
        for (other, other_is_upper) in extra(r) {
            if let Some(&j) = index.get(&other) {
                covers.push(if other_is_upper { (i, j) } else { (j, i) });
            }
        }
    }
    let labels = roots.iter().map(|r| format!("A{}:e{}-e{}", r.layer, r.a, r.b)).collect();
    Poset::new(labels, &covers)
}

/// Element list of the ASM poset, in index order.
pub fn asm_roots(n: usize) -> Vec<LayerRoot> {
    layered_roots(n)
}

/// The ASM poset: layers `Φ⁺(A_1), …, Φ⁺(A_{n−1})` where `e_a − e_b` in layer
/// `k` covers `e_a − e_b` and `e_{a+1} − e_{b+1}` in layer `k+1`.
///
/// `e_a − e_b` of layer `k` is drawn at `(a+b+n−k, b−a+n−k)`.
pub fn asm_poset(n: usize) -> Result<RcPoset> {
    if n == 0 {
        return Err(Error::DomainError("asm needs n >= 1".into()));
    }
    let roots = asm_roots(n);
    let poset = layered_poset(&roots, |r| {
        vec![
            (LayerRoot { layer: r.layer + 1, ..*r }, false),
            (LayerRoot { layer: r.layer + 1, a: r.a + 1, b: r.b + 1 }, false),
        ]
    })?;
    let n = n as i64;
    let pos = roots
        .iter()
        .map(|r| {
            let (a, b, k) = (r.a as i64, r.b as i64, r.layer as i64);
            (a + b + n - k, b - a + n - k)
        })
        .collect();
    let layers = roots.iter().map(|r| r.layer).collect();
    RcPoset::new(poset, pos, None, Some(layers))
}

/// Interior height-function cell `(i, j)` that element `e_a − e_b` of layer `k`
/// projects to in the ASM poset of order `n`.
pub fn asm_cell(n: usize, r: &LayerRoot) -> (usize, usize) {
    (r.a + n - 1 - r.layer, r.b - 1)
}

/// The TSSCPP poset: layers `Φ⁺(A_1), …, Φ⁺(A_{n−1})` where `e_a − e_b` in
/// layer `k` is covered by `e_a − e_b` in layer `k+1`.
pub fn tsscpp_poset(n: usize) -> Result<RcPoset> {
    if n == 0 {
        return Err(Error::DomainError("tsscpp needs n >= 1".into()));
    }
    let roots = layered_roots(n);
    let poset = layered_poset(&roots, |r| vec![(LayerRoot { layer: r.layer + 1, ..*r }, true)])?;
    let pos = roots
        .iter()
        .map(|r| {
            let (a, b, k) = (r.a as i64, r.b as i64, r.layer as i64);
            (a + b + k, b - a + k)
        })
        .collect();
    let layers = roots.iter().map(|r| r.layer).collect();
    RcPoset::new(poset, pos, None, Some(layers))
}

/// Family instances small enough (at most 2^16 ideals) for exhaustive property checks.
pub fn catalog() -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for n in 1..=5 {
        for k in 1..=5 {
            out.push(FamilySpec::Product(vec![n, k]));
        }
    }
    for (m, n) in [(1, 1), (2, 2), (2, 3), (3, 4), (4, 4)] {
        out.push(FamilySpec::Product(vec![2, m, n]));
    }
    out.push(FamilySpec::Product(vec![3, 3, 3]));
    for n in 1..=5 {
        out.push(FamilySpec::Root(RootType::A, n));
    }
    for n in 1..=4 {
        out.push(FamilySpec::Root(RootType::B, n));
        out.push(FamilySpec::Root(RootType::C, n));
    }
    for n in 2..=5 {
        out.push(FamilySpec::Root(RootType::D, n));
    }
    for (n, m, k) in [(3, 2, 0), (3, 3, 0), (4, 3, 1), (4, 4, 0), (5, 3, 1), (2, 4, 2)] {
        out.push(FamilySpec::Interior { n, m, k });
    }
    for n in 1..=6 {
        out.push(FamilySpec::HalfSquare(n));
    }
    for n in 1..=5 {
        out.push(FamilySpec::Asm(n));
        out.push(FamilySpec::Tsscpp(n));
    }
    out
}
