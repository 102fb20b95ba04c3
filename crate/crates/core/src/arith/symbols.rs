//! Kronecker and Jacobi symbols.

use crate::error::{Error, Result};

/// Jacobi symbol `(a/n)` for odd positive `n`.
pub(crate) fn jacobi_u128(mut a: u128, mut n: u128) -> i8 {
    debug_assert!(n & 1 == 1);
    a %= n;
    let mut t = 1i8;
    while a != 0 {
        let z = a.trailing_zeros();
        a >>= z;
        if z & 1 == 1 && matches!(n & 7, 3 | 5) {
            t = -t;
        }
        // quadratic reciprocity
        if a & 3 == 3 && n & 3 == 3 {
            t = -t;
        }
        std::mem::swap(&mut a, &mut n);
        a %= n;
    }
    if n == 1 {
        t
    } else {
        0
    }
}

/// Kronecker symbol `(a/n)`. Agrees with the Legendre symbol when `n` is an
/// odd prime and is completely multiplicative in `n`.
pub fn kronecker(a: i128, n: i128) -> Result<i8> {
    if n == 0 {
        return Err(Error::Zero);
    }
    let mut t = 1i8;
    if n < 0 && a < 0 {
        t = -t;
    }
    let mut m = n.unsigned_abs();
    let v = m.trailing_zeros();
    if v > 0 {
        if a & 1 == 0 {
            return Ok(0);
        }
        m >>= v;
        // (a/2) = +1 for a = +-1 mod 8, -1 for a = +-3 mod 8
        if v & 1 == 1 && matches!(a.rem_euclid(8), 3 | 5) {
            t = -t;
        }
    }
    if m == 1 {
        return Ok(t);
    }
    let residue = a.rem_euclid(m as i128) as u128;
    Ok(t * jacobi_u128(residue, m))
}
