//! Truncated formal power series over exact rationals.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Power series `c_0 + c_1 z + ... + c_order z^order` with exact rational
/// coefficients.
///
/// Binary operations never extend precision: the result carries the smaller
/// of the two operand orders.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    /// Panics on an empty coefficient list (there is no order -1 series).
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a truncated series needs at least one coefficient"
        );
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![BigRational::zero(); order + 1])
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// `Σ_{n=1}^{order} a_n z^n / n` for `values[n-1] = a_n`: the exponent of
    /// a dynamical zeta function built from the sequence `a_n`.
    pub fn zeta_exponent(values: &[BigInt], order: usize) -> Result<Self> {
        if values.len() < order {
            return Err(Error::SequenceTooShort {
                needed: order,
                available: values.len(),
            });
        }
        let mut s = Self::zero(order);
        for n in 1..=order {
            s.coeffs[n] = BigRational::new(values[n - 1].clone(), BigInt::from(n));
        }
        Ok(s)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..=order.min(self.order())].to_vec())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Index of the first coefficient where the two series differ, compared
    /// up to the shared order.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
    }

    /// Equal up to the shared order.
    pub fn agrees_with(&self, other: &Self) -> bool {
        self.first_difference(other).is_none()
    }

    /// `exp(s)` for `s(0) = 0`, via `n f_n = Σ_{k=1}^{n} k s_k f_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ConstantTerm {
                expected: "0",
                found: self.coeffs[0].to_string(),
            });
        }
        let order = self.order();
        let mut f = Vec::with_capacity(order + 1);
        f.push(BigRational::one());
        for n in 1..=order {
            let mut acc = BigRational::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc += &self.coeffs[k] * BigRational::from_integer(k.into()) * &f[n - k];
            }
            f.push(acc / BigRational::from_integer(n.into()));
        }
        Ok(Self::new(f))
    }

    /// `log(f)` for `f(0) = 1`, via `n s_n = n f_n - Σ_{k=1}^{n-1} k s_k f_{n-k}`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTerm {
                expected: "1",
                found: self.coeffs[0].to_string(),
            });
        }
        let order = self.order();
        let mut s = vec![BigRational::zero(); order + 1];
        for n in 1..=order {
            let nn = BigRational::from_integer(n.into());
            let mut acc = &nn * &self.coeffs[n];
            for (k, sk) in s.iter().enumerate().take(n).skip(1) {
                if sk.is_zero() {
                    continue;
                }
                acc -= BigRational::from_integer(k.into()) * sk * &self.coeffs[n - k];
            }
            s[n] = acc / nn;
        }
        Ok(Self::new(s))
    }

    /// Render as `c0 + c1*z + ... + O(z^(order+1))`.
    pub fn display_in(&self, var: &str) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if k == 0 {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else if mag.is_integer() {
                out.push_str(&format!("{mag}*{mono}"));
            } else {
                out.push_str(&format!("({mag})*{mono}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out.push_str(&format!(" + O({var}^{})", self.order() + 1));
        out
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("z"))
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: Self) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries::new(
            (0..=order)
                .map(|k| &self.coeffs[k] + &rhs.coeffs[k])
                .collect(),
        )
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: Self) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries::new(
            (0..=order)
                .map(|k| &self.coeffs[k] - &rhs.coeffs[k])
                .collect(),
        )
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: Self) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut out = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        TruncatedSeries::new(out)
    }
}
