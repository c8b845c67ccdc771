//! Exact cyclic sieving checks.

pub mod poly;
pub mod qanalog;
pub mod sieve;

pub use poly::IntPolynomial;
pub use qanalog::{
    asm_poly, cat_poly, degrees, half_square_poly, hook_length_poly, macmahon_poly, q_binomial, q_factorial, q_int,
};
pub use sieve::{csp_check, CspReport, FLOAT_TOLERANCE};
