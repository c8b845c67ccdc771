//! Dense integer polynomials in `q` with arbitrary-precision coefficients.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// `coeffs[e]` is the coefficient of `q^e`; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![BigInt::one()] }
    }

    /// `q^e`.
    pub fn monomial(e: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = BigInt::one();
        IntPolynomial { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, e: usize) -> BigInt {
        self.coeffs.get(e).cloned().unwrap_or_default()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// `X(1)`.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// `X(q^k)`.
    pub fn substitute_power(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (e, c) in self.coeffs.iter().enumerate() {
            coeffs[e * k] += c;
        }
        IntPolynomial::new(coeffs)
    }

    /// Exact quotient; fails unless `divisor` divides `self`.
    pub fn div_exact(&self, divisor: &IntPolynomial) -> Result<IntPolynomial> {
        let dd = divisor.degree().ok_or(Error::DivisionInexact)?;
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return if self.is_zero() { Ok(IntPolynomial::zero()) } else { Err(Error::DivisionInexact) };
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for e in (0..quot.len()).rev() {
            let top = &rem[e + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::DivisionInexact);
            }
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[e + i] -= &q * c;
            }
            quot[e] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::DivisionInexact);
        }
        Ok(IntPolynomial::new(quot))
    }

    /// Coefficients of `X(q) mod (q^n − 1)`, indexed by exponent mod `n`.
    pub fn residues(&self, n: usize) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); n];
        for (e, c) in self.coeffs.iter().enumerate() {
            out[e % n] += c;
        }
        out
    }

    /// `X(e^{2πi·k/n})` in floating point.
    pub fn eval_root_of_unity(&self, k: usize, n: usize) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (e, c) in self.coeffs.iter().enumerate() {
            let c = c.to_f64().unwrap_or(f64::INFINITY);
            let theta = std::f64::consts::TAU * ((e * k) % n) as f64 / n as f64;
            re += c * theta.cos();
            im += c * theta.sin();
        }
        (re, im)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, other: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        IntPolynomial::new((0..len).map(|e| self.coeff(e) + other.coeff(e)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::new(coeffs)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{mag}*q^{e}")?,
            }
        }
        Ok(())
    }
}
