//! Local data of quadratic orders over `Z` and their orbital values.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{is_prime, is_squarefree, kronecker, valuation};
use crate::error::{Error, Result};

/// How a rational prime decomposes in the maximal order of a quadratic field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Splitting {
    Split,
    Inert,
    Ramified,
}

impl Splitting {
    /// `#(O_E (x) F_q)^x`.
    pub fn torus_size(self, q: u128) -> BigUint {
        let q = BigUint::from(q);
        match self {
            Splitting::Split => (&q - 1u32) * (&q - 1u32),
            Splitting::Inert => &q * &q - 1u32,
            Splitting::Ramified => &q * (&q - 1u32),
        }
    }
}

/// Prime, local Serre invariant and splitting type at one place.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadLocalData {
    pub p: u128,
    pub serre: u32,
    pub splitting: Splitting,
}

/// Serre invariant at `p` of the quadratic order of conductor `f`: the
/// valuation `ord_p(f)`.
pub fn serre_quadratic(conductor: u128, p: u128) -> Result<u32> {
    if conductor == 0 {
        return Err(Error::InvalidArgument("conductor must be positive".into()));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(valuation(conductor, p))
}

/// Whether `d` is the discriminant of a quadratic field.
pub fn is_fundamental_discriminant(d: i128) -> bool {
    if d == 0 || d == 1 {
        return false;
    }
    match d.rem_euclid(4) {
        1 => is_squarefree(d),
        0 => {
            let m = d / 4;
            matches!(m.rem_euclid(4), 2 | 3) && is_squarefree(m)
        }
        _ => false,
    }
}

/// Fundamental discriminant of `Q(sqrt d)` for squarefree `d`.
pub fn fundamental_discriminant(d: i64) -> Result<i128> {
    if d == 0 || d == 1 || !is_squarefree(d as i128) {
        return Err(Error::NotSquarefree(d));
    }
    let d = d as i128;
    Ok(if d.rem_euclid(4) == 1 { d } else { 4 * d })
}

/// Splitting of `p` in the field of fundamental discriminant `fund_disc`.
pub fn quad_splitting(fund_disc: i128, p: u128) -> Result<Splitting> {
    if !is_fundamental_discriminant(fund_disc) {
        return Err(Error::NotFundamental(fund_disc));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(match kronecker(fund_disc, p as i128)? {
        0 => Splitting::Ramified,
        1 => Splitting::Split,
        _ => Splitting::Inert,
    })
}

/// `(q^s - 1) / (q - 1) = 1 + q + ... + q^(s-1)`.
pub(crate) fn geometric(q: &BigUint, s: u32) -> BigUint {
    (0..s).fold(BigUint::zero(), |acc, _| acc * q + 1u32)
}

/// `1 + (#T / (q-1)) * (q^S - 1)/(q - 1)` with `q = p`.
pub fn orbital_quadratic(data: &QuadLocalData) -> BigUint {
    if data.serre == 0 {
        return BigUint::one();
    }
    let q = BigUint::from(data.p);
    let (t_over, rem) = data.splitting.torus_size(data.p).div_rem(&(&q - 1u32));
    debug_assert!(rem.is_zero());
    BigUint::one() + t_over * geometric(&q, data.serre)
}
