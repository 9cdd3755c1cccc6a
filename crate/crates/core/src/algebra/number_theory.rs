//! Möbius function and divisor enumeration by trial division.
//!
//! Inputs are iterate counts and periods, so they are always small.

use crate::error::{Error, Result};

/// Möbius function μ(n).
pub fn mobius(n: u64) -> Result<i8> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut n = n;
    let mut sign = 1i8;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return Ok(0);
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    Ok(sign)
}

/// All positive divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}
