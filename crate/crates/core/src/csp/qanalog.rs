//! q-analogues of the counting formulas.

use crate::csp::poly::IntPolynomial;
use crate::error::{Error, Result};
use crate::families::RootType;

/// `[n]_q = 1 + q + ⋯ + q^{n−1}`.
pub fn q_int(n: usize) -> IntPolynomial {
    IntPolynomial::from_i64(&vec![1; n])
}

/// `[n]!_q`.
pub fn q_factorial(n: usize) -> IntPolynomial {
    (1..=n).fold(IntPolynomial::one(), |acc, i| &acc * &q_int(i))
}

/// Gaussian binomial by the q-Pascal rule `C(n,k) = C(n−1,k−1) + q^k C(n−1,k)`.
pub fn q_binomial(n: usize, k: usize) -> Result<IntPolynomial> {
    if k > n {
        return Err(Error::DomainError(format!("q_binomial({n}, {k}) needs k <= n")));
    }
    let mut row = vec![IntPolynomial::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        for j in 0..=m.min(k) {
            let left = if j > 0 { row[j - 1].clone() } else { IntPolynomial::zero() };
            let right = if j < m { &IntPolynomial::monomial(j) * &row[j] } else { IntPolynomial::zero() };
            next.push(&left + &right);
        }
        row = next;
    }
    Ok(row.swap_remove(k))
}

fn product(factors: impl IntoIterator<Item = IntPolynomial>) -> IntPolynomial {
    factors.into_iter().fold(IntPolynomial::one(), |acc, f| &acc * &f)
}

/// Degrees and Coxeter number of the Weyl group of the given type.
pub fn degrees(kind: RootType, n: usize) -> Result<(Vec<usize>, usize)> {
    match kind {
        RootType::A if n >= 1 => Ok(((2..=n + 1).collect(), n + 1)),
        RootType::B | RootType::C if n >= 1 => Ok(((1..=n).map(|i| 2 * i).collect(), 2 * n)),
        RootType::D if n >= 2 => {
            let mut d: Vec<usize> = (1..n).map(|i| 2 * i).collect();
            d.push(n);
            Ok((d, 2 * n - 2))
        }
        _ => Err(Error::UnsupportedRank { kind: kind.letter(), rank: n }),
    }
}

/// `Cat(W, q) = ∏ [h + d_i]_q / [d_i]_q`.
pub fn cat_poly(kind: RootType, n: usize) -> Result<IntPolynomial> {
    let (d, h) = degrees(kind, n)?;
    let num = product(d.iter().map(|&di| q_int(h + di)));
    let den = product(d.iter().map(|&di| q_int(di)));
    num.div_exact(&den)
}

/// `∏ [i+j+k−1]_q / [i+j+k−2]_q` over the `ℓ×m×n` box.
pub fn macmahon_poly(l: usize, m: usize, n: usize) -> Result<IntPolynomial> {
    if l == 0 || m == 0 || n == 0 {
        return Err(Error::DomainError("box dimensions must be positive".into()));
    }
    let cells = || (1..=l).flat_map(move |i| (1..=m).flat_map(move |j| (1..=n).map(move |k| i + j + k)));
    let num = product(cells().map(|s| q_int(s - 1)));
    let den = product(cells().map(|s| q_int(s - 2)));
    num.div_exact(&den)
}

/// `[N]!_q / ∏ [h(c)]_q` over the cells of a straight shape.
pub fn hook_length_poly(lambda: &[usize]) -> Result<IntPolynomial> {
    if lambda.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::DomainError("shape rows must be weakly decreasing".into()));
    }
    let size: usize = lambda.iter().sum();
    let mut hooks = Vec::with_capacity(size);
    for (r, &len) in lambda.iter().enumerate() {
        for c in 0..len {
            let below = lambda[r + 1..].iter().filter(|&&l| l > c).count();
            hooks.push(len - c + below);
        }
    }
    q_factorial(size).div_exact(&product(hooks.into_iter().map(q_int)))
}

/// `∏_{i=1}^{n} [2]_{q^i}`.
pub fn half_square_poly(n: usize) -> IntPolynomial {
    product((1..=n).map(|i| q_int(2).substitute_power(i)))
}

/// `∏_{j=0}^{n−1} [3j+1]!_q / [n+j]!_q`.
pub fn asm_poly(n: usize) -> Result<IntPolynomial> {
    let num = product((0..n).map(|j| q_factorial(3 * j + 1)));
    let den = product((0..n).map(|j| q_factorial(n + j)));
    num.div_exact(&den)
}
