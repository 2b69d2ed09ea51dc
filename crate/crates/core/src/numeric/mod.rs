//! Exact arithmetic substrate: the scalar trait, rational polynomials and
//! cyclotomic field elements.

mod cyclotomic;
mod poly;
mod scalar;

pub use cyclotomic::{cyc_root, cyc_to_rat, cyclotomic_polynomial, euler_phi, Cyclotomic};
pub use poly::{poly_compare_lex, Poly};
pub use scalar::{fraction_string, parse_fraction, Scalar};
