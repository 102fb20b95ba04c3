//! Local analysis of the Cappell-Shaneson orders `Z[x]/(x^3 - m x^2 + (m-1) x - 1)`.
//!
//! A prime `p` dividing the polynomial discriminant `D = m^4 - 10m^3 + 31m^2 - 30m - 23`
//! falls into one of four factorization types over `Z_p`, decided by whether
//! `p` divides `C = -2m^3 + 9m^2 - 9m - 27` (a triple root mod `p`), the
//! parity of `ord_p(D)`, and the Legendre symbol of the `p`-free part of `D`:
//!
//! | case              | condition                        | S          |
//! |-------------------|----------------------------------|------------|
//! | 1, maximal        | p \| C, ord = 2                  | 0          |
//! | 1                 | p \| C, ord = 4                  | 1          |
//! | 2                 | p \| C, ord = 3                  | 1          |
//! | 3, odd order      | p ∤ C, ord odd                   | (ord-1)/2  |
//! | 3, even, inert    | p ∤ C, ord even, (D'/p) = -1     | ord/2      |
//! | 4                 | p ∤ C, ord even, (D'/p) = +1     | ord/2      |

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use super::cubic::{Component, CubicLocalData, CubicShape};
use super::quadratic::geometric;
use crate::arith::{is_prime, kronecker, valuation};
use crate::error::{Error, Result};

/// Polynomial discriminant `D` and auxiliary constant `C = 27 phi(m/3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CsInvariants {
    pub delta_phi: i128,
    pub c_phi: i128,
}

/// Exact for every `i32` input: `|D| < 2^125`.
pub fn cs_invariants(m: i32) -> CsInvariants {
    let m = m as i128;
    let m2 = m * m;
    let m3 = m2 * m;
    let delta_phi = m2 * m2 - 10 * m3 + 31 * m2 - 30 * m - 23;
    let c_phi = -2 * m3 + 9 * m2 - 9 * m - 27;
    CsInvariants { delta_phi, c_phi }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CsCaseId {
    Case1Maximal,
    Case1,
    Case2,
    Case3OddOrd,
    Case3EvenInert,
    Case4,
}

impl CsCaseId {
    /// Short tag used in reports.
    pub fn tag(self) -> &'static str {
        match self {
            CsCaseId::Case1Maximal => "C1max",
            CsCaseId::Case1 => "C1",
            CsCaseId::Case2 => "C2",
            CsCaseId::Case3OddOrd => "C3odd",
            CsCaseId::Case3EvenInert => "C3even",
            CsCaseId::Case4 => "C4",
        }
    }
}

impl fmt::Display for CsCaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Classification of one prime dividing `D`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CsCase {
    pub case_id: CsCaseId,
    pub p: u128,
    pub ord_delta: u32,
    pub serre: u32,
}

/// Classifies `p | D(m)`. The claim that `p | C` forces `ord_p(D)` into
/// `{2, 3, 4}` is checked, not assumed.
pub fn cs_classify_prime(m: i32, p: u128) -> Result<CsCase> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let inv = cs_invariants(m);
    let abs_delta = inv.delta_phi.unsigned_abs();
    if abs_delta % p != 0 {
        return Err(Error::PrimeDoesNotDivide { m, p });
    }
    if p == 2 || p == 3 {
        return Err(Error::ExcludedPrime { m, p });
    }
    let ord = valuation(abs_delta, p);
    let (case_id, serre) = if inv.c_phi.unsigned_abs() % p == 0 {
        match ord {
            2 => (CsCaseId::Case1Maximal, 0),
            3 => (CsCaseId::Case2, 1),
            4 => (CsCaseId::Case1, 1),
            _ => return Err(Error::CaseAssertion { m, p, ord }),
        }
    } else if ord % 2 == 1 {
        (CsCaseId::Case3OddOrd, (ord - 1) / 2)
    } else {
        let unit_part = inv.delta_phi / (p as i128).pow(ord);
        match kronecker(unit_part, p as i128)? {
            -1 => (CsCaseId::Case3EvenInert, ord / 2),
            1 => (CsCaseId::Case4, ord / 2),
            _ => unreachable!("p-free part is a unit mod p"),
        }
    };
    Ok(CsCase {
        case_id,
        p,
        ord_delta: ord,
        serre,
    })
}

/// Orbital value at the place, by case.
pub fn cs_orbital(case: &CsCase) -> BigUint {
    let p = BigUint::from(case.p);
    match case.case_id {
        CsCaseId::Case1Maximal => BigUint::one(),
        CsCaseId::Case1 => p + 1u32,
        CsCaseId::Case2 => p,
        CsCaseId::Case3EvenInert => BigUint::one() + (&p + 1u32) * geometric(&p, case.ord_delta / 2),
        CsCaseId::Case3OddOrd => BigUint::one() + &p * geometric(&p, (case.ord_delta - 1) / 2),
        CsCaseId::Case4 => p.pow(case.ord_delta / 2),
    }
}

/// The local invariants of the place in the generic cubic form; feeding the
/// result to [`orbital_cubic`](super::orbital_cubic) reproduces [`cs_orbital`].
pub fn cs_local_data(case: &CsCase) -> CubicLocalData {
    let s = case.serre;
    let linear = Component::new(1, 1, 0);
    let (shape, components, delta, rho) = match case.case_id {
        CsCaseId::Case1Maximal | CsCaseId::Case1 => {
            (CubicShape::IrreducibleRamified, vec![Component::new(3, 1, s)], s, 0)
        }
        CsCaseId::Case2 => (CubicShape::TwoFactors, vec![Component::new(2, 1, 0), linear], 0, s),
        CsCaseId::Case3OddOrd => (CubicShape::TwoFactors, vec![Component::new(2, 1, s), linear], s, 0),
        CsCaseId::Case3EvenInert => (CubicShape::TwoFactors, vec![Component::new(2, 2, s), linear], s, 0),
        CsCaseId::Case4 => (CubicShape::ThreeFactors, vec![linear; 3], 0, s),
    };
    CubicLocalData::new(case.p, shape, components, delta, rho).expect("case data is consistent")
}
