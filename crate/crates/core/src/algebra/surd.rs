//! Real quadratic surds `(a + b√d) / c`, exact.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::IntPolynomial;

/// `(a + b·√d) / c` with `c > 0`, `d ≥ 0` square-free (after extraction of
/// square factors found by trial division up to 10^6), and
/// `gcd(a, b, c) = 1`. Rational values have `b = 0, d = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    a: BigInt,
    b: BigInt,
    d: BigInt,
    c: BigInt,
}

impl QuadraticSurd {
    /// Panics if `c = 0` or `d < 0`.
    pub fn new(a: BigInt, b: BigInt, d: BigInt, c: BigInt) -> Self {
        assert!(!c.is_zero(), "zero denominator");
        assert!(!d.is_negative(), "negative radicand");
        let (square, free) = split_square(&d);
        let mut b = b * square;
        let mut d = free;
        let mut a = a;
        if d.is_one() {
            a += &b;
            b = BigInt::zero();
        }
        if b.is_zero() || d.is_zero() {
            b = BigInt::zero();
            d = BigInt::one();
        }
        let mut g = a.gcd(&b).gcd(&c);
        if c.is_negative() {
            g = -g;
        }
        Self {
            a: a / &g,
            b: b / &g,
            d,
            c: c / &g,
        }
    }

    pub fn rational(q: &BigRational) -> Self {
        Self::new(
            q.numer().clone(),
            BigInt::zero(),
            BigInt::one(),
            q.denom().clone(),
        )
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(&BigRational::from_integer(n.into()))
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn parts(&self) -> (&BigInt, &BigInt, &BigInt, &BigInt) {
        (&self.a, &self.b, &self.d, &self.c)
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        let d = self.d.to_f64().unwrap_or(f64::NAN);
        let c = self.c.to_f64().unwrap_or(f64::NAN);
        (a + b * d.sqrt()) / c
    }

    /// Primitive integer polynomial of least degree with this root.
    pub fn defining_polynomial(&self) -> IntPolynomial {
        if self.is_rational() {
            return IntPolynomial::new(vec![-self.a.clone(), self.c.clone()]).primitive_part();
        }
        // c x = a + b√d  ⇒  c² x² - 2ac x + (a² - b² d) = 0
        IntPolynomial::new(vec![
            &self.a * &self.a - &self.b * &self.b * &self.d,
            BigInt::from(-2) * &self.a * &self.c,
            &self.c * &self.c,
        ])
        .primitive_part()
    }
}

/// `n = s² · f` with `f` square-free as far as trial division up to 10^6 goes.
fn split_square(n: &BigInt) -> (BigInt, BigInt) {
    if n.is_zero() {
        return (BigInt::zero(), BigInt::zero());
    }
    let mut square = BigInt::one();
    let mut free = BigInt::one();
    let mut rest = n.clone();
    let mut p = BigInt::from(2u32);
    let limit = BigInt::from(1_000_000u32);
    while &p * &p <= rest && p <= limit {
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        for _ in 0..e / 2 {
            square *= &p;
        }
        if e % 2 == 1 {
            free *= &p;
        }
        p += 1u32;
    }
    let r = rest.sqrt();
    if &r * &r == rest {
        square *= r;
    } else {
        free *= rest;
    }
    (square, free)
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return if self.c.is_one() {
                write!(f, "{}", self.a)
            } else {
                write!(f, "{}/{}", self.a, self.c)
            };
        }
        let root = if self.b.abs().is_one() {
            format!("sqrt({})", self.d)
        } else {
            format!("{}*sqrt({})", self.b.abs(), self.d)
        };
        let body = if self.a.is_zero() {
            if self.b.is_negative() {
                format!("-{root}")
            } else {
                root
            }
        } else {
            let op = if self.b.is_negative() { '-' } else { '+' };
            format!("{}{op}{root}", self.a)
        };
        if self.c.is_one() {
            f.write_str(&body)
        } else {
            write!(f, "({body})/{}", self.c)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(a: i64, b: i64, d: i64, c: i64) -> QuadraticSurd {
        QuadraticSurd::new(a.into(), b.into(), d.into(), c.into())
    }

    #[test]
    fn golden_square() {
        let lam = s(3, 1, 5, 2);
        assert_eq!(lam.to_string(), "(3+sqrt(5))/2");
        assert!((lam.to_f64() - 2.618_033_988_749_895).abs() < 1e-12);
        assert_eq!(
            lam.defining_polynomial(),
            IntPolynomial::from_i64(&[1, -3, 1])
        );
    }

    #[test]
    fn normalization() {
        assert_eq!(s(6, 2, 20, 4), s(3, 2, 5, 2));
        assert_eq!(s(2, 0, 7, 2), QuadraticSurd::integer(1));
        assert_eq!(s(1, 1, 9, 2), QuadraticSurd::integer(2));
        assert_eq!(s(-3, -1, 5, -2), s(3, 1, 5, 2));
        assert_eq!(QuadraticSurd::integer(1).to_string(), "1");
        assert_eq!(
            QuadraticSurd::integer(1).defining_polynomial(),
            IntPolynomial::from_i64(&[-1, 1])
        );
        assert_eq!(s(0, -2, 3, 1).to_string(), "-2*sqrt(3)");
    }
}
