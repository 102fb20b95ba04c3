//! Integer square roots, power sums and Faulhaber's formula.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `floor(sqrt(n))` for `n >= 0`.
pub fn isqrt_floor(n: i128) -> Result<u128> {
    if n < 0 {
        return Err(Error::Negative(n));
    }
    Ok((n as u128).isqrt())
}

/// `Some(t)` with `t * t == n` when `n` is a perfect square, `None` otherwise
/// (including every negative `n`).
pub fn is_perfect_square(n: i128) -> Option<u128> {
    if n < 0 {
        return None;
    }
    let t = (n as u128).isqrt();
    (t * t == n as u128).then_some(t)
}

/// `sum_{eta=1}^{n_max} eta^k`, by direct summation.
pub fn power_sum(n_max: u128, k: u32) -> BigUint {
    let mut acc = BigUint::zero();
    let mut eta = 1u128;
    while eta <= n_max {
        acc += BigUint::from(eta).pow(k);
        eta += 1;
    }
    acc
}

/// Bernoulli numbers `B_0..=B_n` with the convention `B_1 = +1/2`.
///
/// The sign of `B_1` matters: Faulhaber's formula in the form
/// `sum_{eta=1}^{n} eta^k = 1/(k+1) sum_s C(k+1, s) B_s n^(k+1-s)` only holds
/// with `B_1 = +1/2`. Computed by the Akiyama-Tanigawa transform, which
/// produces this convention directly.
pub fn bernoulli_plus(n: usize) -> Vec<BigRational> {
    let mut row: Vec<BigRational> = Vec::with_capacity(n + 1);
    let mut out = Vec::with_capacity(n + 1);
    for m in 0..=n {
        row.push(BigRational::new(BigInt::one(), BigInt::from(m + 1)));
        for j in (1..=m).rev() {
            let diff = &row[j - 1] - &row[j];
            row[j - 1] = diff * BigInt::from(j);
        }
        out.push(row[0].clone());
    }
    out
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `sum_{eta=1}^{n_max} eta^k` by Faulhaber's closed form. Agrees with
/// [`power_sum`] everywhere; cost is polynomial in `k` only.
pub fn faulhaber(n_max: u128, k: u32) -> BigUint {
    let b = bernoulli_plus(k as usize);
    let n = BigInt::from(n_max);
    let mut acc = BigRational::zero();
    for s in 0..=k {
        let term = BigRational::from_integer(binomial(k + 1, s) * n.pow(k + 1 - s)) * &b[s as usize];
        acc += term;
    }
    acc /= BigRational::from_integer(BigInt::from(k + 1));
    debug_assert!(acc.is_integer());
    acc.to_integer()
        .to_biguint()
        .expect("power sums are nonnegative")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isqrt_examples() {
        assert_eq!(isqrt_floor(0), Ok(0));
        assert_eq!(isqrt_floor(48), Ok(6));
        assert_eq!(isqrt_floor(2777), Ok(52));
        assert_eq!(isqrt_floor(-1), Err(Error::Negative(-1)));
        assert_eq!(isqrt_floor(i128::MAX), Ok(13_043_817_825_332_782_212));
    }

    #[test]
    fn perfect_square_examples() {
        assert_eq!(is_perfect_square(49), Some(7));
        assert_eq!(is_perfect_square(-4), None);
        assert_eq!(is_perfect_square(49 / 49), Some(1));
        assert_eq!(is_perfect_square(0), Some(0));
        assert_eq!(is_perfect_square(50), None);
    }

    #[test]
    fn power_sum_examples() {
        assert_eq!(power_sum(3, 1), BigUint::from(6u32));
        assert_eq!(power_sum(2, 2), BigUint::from(5u32));
        assert_eq!(power_sum(10, 2), BigUint::from(385u32));
    }

    #[test]
    fn faulhaber_examples() {
        assert_eq!(faulhaber(2, 2), BigUint::from(5u32));
        assert_eq!(faulhaber(3, 1), BigUint::from(6u32));
        assert_eq!(faulhaber(100, 2), BigUint::from(338_350u32));
    }

    #[test]
    fn bernoulli_values() {
        let b = bernoulli_plus(8);
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(b[0], r(1, 1));
        assert_eq!(b[1], r(1, 2));
        assert_eq!(b[2], r(1, 6));
        assert_eq!(b[3], r(0, 1));
        assert_eq!(b[4], r(-1, 30));
        assert_eq!(b[6], r(1, 42));
        assert_eq!(b[8], r(-1, 30));
    }

    #[test]
    fn faulhaber_matches_power_sum_grid() {
        for k in 0..=6 {
            let mut direct = BigUint::zero();
            for n in 1..=1000u128 {
                direct += BigUint::from(n).pow(k);
                assert_eq!(faulhaber(n, k), direct, "n={n} k={k}");
            }
        }
    }
}
