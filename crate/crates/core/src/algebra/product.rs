//! Formal products `Π_d (1 - z^d)^{e_d}` with rational exponents.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::TruncatedSeries;

/// Product of `(1 - z^d)^{e_d}` factors. Degrees are distinct and ascending;
/// zero exponents are dropped.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ProductForm {
    factors: Vec<(u64, BigRational)>,
}

impl ProductForm {
    /// Collects factors, merging repeated degrees by adding exponents.
    /// Panics on degree 0 (`1 - z^0` vanishes identically).
    pub fn new<I>(factors: I) -> Self
    where
        I: IntoIterator<Item = (u64, BigRational)>,
    {
        let mut merged: BTreeMap<u64, BigRational> = BTreeMap::new();
        for (d, e) in factors {
            assert!(d >= 1, "factor degree must be positive");
            *merged.entry(d).or_insert_with(BigRational::zero) += e;
        }
        Self {
            factors: merged.into_iter().filter(|(_, e)| !e.is_zero()).collect(),
        }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn factors(&self) -> &[(u64, BigRational)] {
        &self.factors
    }

    pub fn exponent(&self, d: u64) -> BigRational {
        self.factors
            .iter()
            .find(|(k, _)| *k == d)
            .map(|(_, e)| e.clone())
            .unwrap_or_else(BigRational::zero)
    }

    /// Formal product of two forms (exponents add).
    pub fn concat(&self, other: &Self) -> Self {
        Self::new(self.factors.iter().chain(&other.factors).cloned())
    }

    /// True when every exponent is an integer, i.e. the product is a
    /// rational function rather than a genuine radical.
    pub fn is_rational(&self) -> bool {
        self.factors.iter().all(|(_, e)| e.is_integer())
    }

    /// Expansion as `exp(Σ_d e_d log(1 - z^d))`, with
    /// `log(1 - z^d) = -Σ_{j≥1} z^{dj} / j`.
    pub fn to_series(&self, order: usize) -> TruncatedSeries {
        let mut exponent = vec![BigRational::zero(); order + 1];
        for (d, e) in &self.factors {
            let d = *d as usize;
            let mut j = 1usize;
            while d * j <= order {
                exponent[d * j] -= e / BigRational::from_integer(j.into());
                j += 1;
            }
        }
        TruncatedSeries::new(exponent)
            .exp()
            .expect("exponent series has zero constant term")
    }

    /// Render as `(1-z)^(-6) * (1-z^3)^(-2/3)`.
    pub fn display_in(&self, var: &str) -> String {
        if self.factors.is_empty() {
            return "1".to_string();
        }
        self.factors
            .iter()
            .map(|(d, e)| {
                let base = if *d == 1 {
                    format!("(1-{var})")
                } else {
                    format!("(1-{var}^{d})")
                };
                if e.is_one() {
                    base
                } else if e.is_integer() && e.is_positive() {
                    format!("{base}^{e}")
                } else {
                    format!("{base}^({e})")
                }
            })
            .collect::<Vec<_>>()
            .join(" * ")
    }
}

impl fmt::Display for ProductForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("z"))
    }
}
