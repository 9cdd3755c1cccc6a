//! Quotients of integer polynomials that are regular at the origin.

use std::fmt;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{IntPolynomial, TruncatedSeries};
use crate::error::{Error, Result};

/// `numerator / denominator` in canonical form:
///
/// * numerator and denominator are coprime in `Q[z]`;
/// * the gcd of all their integer coefficients taken together is 1;
/// * the denominator has a positive constant term (equal to 1 whenever
///   integrality permits, which is always the case for products of
///   `det(I - A z)` factors).
///
/// Canonical forms compare equal iff the functions are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    numerator: IntPolynomial,
    denominator: IntPolynomial,
}

impl RationalFunction {
    pub fn new(numerator: IntPolynomial, denominator: IntPolynomial) -> Result<Self> {
        if denominator.constant_term().is_zero() {
            return Err(Error::SingularAtZero);
        }
        if numerator.is_zero() {
            return Ok(Self {
                numerator,
                denominator: IntPolynomial::one(),
            });
        }
        let g = numerator.gcd(&denominator).primitive_part();
        let mut num = numerator.div_exact(&g).expect("gcd divides numerator");
        let mut den = denominator.div_exact(&g).expect("gcd divides denominator");
        let mut c = num.content().gcd(&den.content());
        if den.constant_term().is_negative() {
            c = -c;
        }
        num = num.div_scalar(&c);
        den = den.div_scalar(&c);
        Ok(Self {
            numerator: num,
            denominator: den,
        })
    }

    pub fn polynomial(p: IntPolynomial) -> Self {
        Self::new(p, IntPolynomial::one()).expect("constant denominator")
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.denominator
    }

    /// Taylor expansion at 0 by long division.
    pub fn to_series(&self, order: usize) -> TruncatedSeries {
        let d0 = BigRational::from_integer(self.denominator.constant_term());
        let den = self.denominator.coeffs();
        let mut c: Vec<BigRational> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = BigRational::from_integer(self.numerator.coeff(n));
            for k in 1..=n.min(den.len().saturating_sub(1)) {
                if den[k].is_zero() {
                    continue;
                }
                acc -= BigRational::from_integer(den[k].clone()) * &c[n - k];
            }
            c.push(acc / &d0);
        }
        TruncatedSeries::new(c)
    }

    /// Render as a quotient with `(1 - z)` and `(1 + z)` powers pulled out,
    /// e.g. `(1 - 3*z + z^2) / (1 - z)^2`.
    pub fn display_in(&self, var: &str) -> String {
        let num = render_factored(&self.numerator, var);
        if self.denominator.is_one_poly() {
            return num;
        }
        format!("{} / {}", num, render_factored(&self.denominator, var))
    }
}

impl IntPolynomial {
    fn is_one_poly(&self) -> bool {
        self.degree() == Some(0) && self.constant_term().is_one()
    }
}

fn split_power(p: &IntPolynomial, factor: &IntPolynomial) -> (IntPolynomial, u32) {
    let mut rest = p.clone();
    let mut k = 0;
    while rest.degree().unwrap_or(0) > 0 {
        match rest.div_exact(factor) {
            Some(q) => {
                rest = q;
                k += 1;
            }
            None => break,
        }
    }
    (rest, k)
}

fn render_factored(p: &IntPolynomial, var: &str) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let (rest, minus) = split_power(p, &IntPolynomial::from_i64(&[1, -1]));
    let (rest, plus) = split_power(&rest, &IntPolynomial::from_i64(&[1, 1]));
    let mut parts = Vec::new();
    let power = |base: String, k: u32| if k == 1 { base } else { format!("{base}^{k}") };
    let rest_is_const = rest.degree() == Some(0);
    if !rest_is_const {
        parts.push(format!("({})", rest.display_in(var)));
    } else if !rest.constant_term().is_one() || (minus == 0 && plus == 0) {
        parts.push(rest.constant_term().to_string());
    }
    if minus > 0 {
        parts.push(power(format!("(1 - {var})"), minus));
    }
    if plus > 0 {
        parts.push(power(format!("(1 + {var})"), plus));
    }
    // keep the non-(1 ± z) remainder last, constants first
    if !rest_is_const {
        parts.rotate_left(1);
    }
    parts.join(" * ")
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("z"))
    }
}

/// Build `n/d` from integer polynomials, for tests and examples.
pub fn ratfunc(num: &[i64], den: &[i64]) -> Result<RationalFunction> {
    RationalFunction::new(IntPolynomial::from_i64(num), IntPolynomial::from_i64(den))
}
