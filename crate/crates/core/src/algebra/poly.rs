//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Integer polynomial, `coeffs[k]` is the coefficient of `z^k`.
///
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and every other polynomial has a nonzero leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `1 - z^d`
    pub fn one_minus_z_pow(d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[0] = BigInt::one();
        coeffs[d] -= BigInt::one();
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Non-negative gcd of all coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divide every coefficient by `c`; `c` must divide the content.
    pub fn div_scalar(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a / c).collect())
    }

    /// Content removed, leading coefficient made positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        self.div_scalar(&c)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Pseudo-remainder: `lc(divisor)^k * self = q * divisor + r` with
    /// `deg r < deg divisor`.
    fn pseudo_rem(&self, divisor: &Self) -> Self {
        let dd = divisor
            .degree()
            .expect("pseudo-division by zero polynomial");
        let lead = divisor.leading().unwrap().clone();
        let mut r = self.coeffs.clone();
        while r.len() > dd && !r.is_empty() {
            let top = r.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = r.len() - dd;
            for c in r.iter_mut() {
                *c *= &lead;
            }
            for (k, dc) in divisor.coeffs[..dd].iter().enumerate() {
                r[shift + k] -= &top * dc;
            }
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        Self::new(r)
    }

    /// Exact quotient `self / divisor` over the integers, if it exists.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let lead = divisor.leading().unwrap();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return None;
        }
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let top = &r[i + dd];
            if top.is_zero() {
                continue;
            }
            let (quot, rem) = top.div_rem(lead);
            if !rem.is_zero() {
                return None;
            }
            for (k, dc) in divisor.coeffs.iter().enumerate() {
                r[i + k] -= &quot * dc;
            }
            q[i] = quot;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(q))
    }

    /// Greatest common divisor over Z[z], primitive with positive leading
    /// coefficient (primitive pseudo-remainder sequence).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        let content = self.content().gcd(&other.content());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.scale(&content)
    }

    /// Render with the given variable name, e.g. `1 - 3*z + z^2`.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
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
            } else {
                out.push_str(&format!("{mag}*{mono}"));
            }
        }
        out
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("z"))
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: Self) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: Self) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: Self) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}
