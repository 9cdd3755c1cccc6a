//! Exact arithmetic: rationals, integer polynomials, rational functions,
//! product forms, truncated power series, integer matrices and elementary
//! number theory. No floating point is used here except in
//! [`QuadraticSurd::to_f64`].

mod matrix;
mod number_theory;
mod poly;
mod product;
mod ratfunc;
mod series;
mod surd;

pub use matrix::IntMatrix;
pub use num_rational::BigRational;
pub use number_theory::{divisors, mobius};
pub use poly::IntPolynomial;
pub use product::ProductForm;
pub use ratfunc::{ratfunc, RationalFunction};
pub use series::TruncatedSeries;
pub use surd::QuadraticSurd;

use num_bigint::BigInt;

use crate::error::Result;

pub fn mat_det(a: &IntMatrix) -> BigInt {
    a.det()
}

pub fn mat_pow(a: &IntMatrix, n: u64) -> IntMatrix {
    a.pow(n)
}

/// `det(I - A z)`.
pub fn charpoly_reversed(a: &IntMatrix) -> IntPolynomial {
    a.charpoly_reversed()
}

pub fn series_exp(s: &TruncatedSeries) -> Result<TruncatedSeries> {
    s.exp()
}

pub fn series_log(s: &TruncatedSeries) -> Result<TruncatedSeries> {
    s.log()
}

pub fn rational_to_series(f: &RationalFunction, order: usize) -> TruncatedSeries {
    f.to_series(order)
}

pub fn product_form_to_series(p: &ProductForm, order: usize) -> TruncatedSeries {
    p.to_series(order)
}
