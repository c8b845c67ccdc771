//! The congruence test `X(q) ≡ Σ_O Σ_{i<|O|} q^{i·n/|O|} (mod q^n − 1)`.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::csp::poly::IntPolynomial;
use crate::error::{Error, Result};

/// Allowed gap between `X(ω^c)` in floating point and the fixed-point count,
/// relative to `max(1, Σ|coefficients|)`.
pub const FLOAT_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CspReport {
    pub holds: bool,
    /// Order of the cyclic group.
    pub order: usize,
    /// Largest first.
    pub orbit_sizes: Vec<usize>,
    /// `X(q) mod (q^n − 1)`, by exponent.
    pub residues: Vec<String>,
    /// The same residues predicted by the orbits.
    pub expected: Vec<String>,
    pub first_mismatch: Option<usize>,
    /// Whether the root-of-unity evaluation agrees with the fixed-point counts.
    pub float_agrees: bool,
}

/// Exact CSP test for a cyclic group of order `n` whose orbits have the given sizes.
pub fn csp_check(orbit_sizes: &[usize], n: usize, x: &IntPolynomial) -> Result<CspReport> {
    if n == 0 {
        return Err(Error::DomainError("group order must be positive".into()));
    }
    if let Some(&size) = orbit_sizes.iter().find(|&&s| s == 0 || !n.is_multiple_of(s)) {
        return Err(Error::OrbitSizeError { size, order: n });
    }
    let total: usize = orbit_sizes.iter().sum();
    if x.eval_one() != BigInt::from(total) {
        return Err(Error::CountMismatch { orbits: total, poly: x.eval_one().to_string() });
    }
    let residues = x.residues(n);
    let mut expected = vec![BigInt::zero(); n];
    for &s in orbit_sizes {
        for i in 0..s {
            expected[i * (n / s)] += 1;
        }
    }
    let first_mismatch = (0..n).find(|&e| residues[e] != expected[e]);

    let scale = x.coeffs().iter().map(|c| c.abs().to_f64().unwrap_or(f64::INFINITY)).sum::<f64>().max(1.0);
    let float_agrees = (0..n).all(|c| {
        let fixed: usize = orbit_sizes.iter().filter(|&&s| c % s == 0).sum();
        let (re, im) = x.eval_root_of_unity(c, n);
        (re - fixed as f64).abs() <= FLOAT_TOLERANCE * scale && im.abs() <= FLOAT_TOLERANCE * scale
    });

    let mut sizes = orbit_sizes.to_vec();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    Ok(CspReport {
        holds: first_mismatch.is_none(),
        order: n,
        orbit_sizes: sizes,
        residues: residues.iter().map(|c| c.to_string()).collect(),
        expected: expected.iter().map(|c| c.to_string()).collect(),
        first_mismatch,
        float_agrees,
    })
}
