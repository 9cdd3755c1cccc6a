//! Square integer matrices: determinants, powers, reversed characteristic
//! polynomials.

use std::fmt;
use std::ops::{Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntPolynomial;
use crate::error::{Error, Result};

/// Square matrix of arbitrary-precision integers, row-major, dimension ≥ 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != dim {
                return Err(Error::NotSquare {
                    rows: dim,
                    row,
                    len: r.len(),
                });
            }
            entries.extend(r);
        }
        Ok(Self { dim, entries })
    }

    pub fn from_i64<const N: usize>(rows: [[i64; N]; N]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
        .expect("array literal is square")
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = BigInt::one();
        }
        m
    }

    pub fn zero(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be at least 1");
        Self {
            dim,
            entries: vec![BigInt::zero(); dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        self.entries
            .chunks(self.dim)
            .map(<[BigInt]>::to_vec)
            .collect()
    }

    pub fn trace(&self) -> BigInt {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    /// `A^n` by repeated squaring; `A^0` is the identity.
    pub fn pow(&self, n: u64) -> Self {
        let mut result = Self::identity(self.dim);
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Exact determinant by Bareiss fraction-free elimination.
    pub fn det(&self) -> BigInt {
        let n = self.dim;
        let mut a = self.rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n.saturating_sub(1) {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    /// `det(I - A z)`, via Faddeev–LeVerrier: with `M_1 = A`,
    /// `c_k = -tr(M_k)/k`, `M_{k+1} = A (M_k + c_k I)`, the polynomial is
    /// `1 + c_1 z + ... + c_n z^n`. All divisions are exact.
    pub fn charpoly_reversed(&self) -> IntPolynomial {
        let n = self.dim;
        let mut coeffs = Vec::with_capacity(n + 1);
        coeffs.push(BigInt::one());
        let mut m = self.clone();
        for k in 1..=n {
            let c = -m.trace() / BigInt::from(k);
            if k < n {
                for i in 0..n {
                    m.entries[i * n + i] += &c;
                }
                m = self * &m;
            }
            coeffs.push(c);
        }
        IntPolynomial::new(coeffs)
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: Self) -> IntMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = IntMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.entries[i * n + j] += a * rhs.get(k, j);
                }
            }
        }
        out
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;
    fn sub(self, rhs: Self) -> IntMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        IntMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(ToString::to_string).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}
