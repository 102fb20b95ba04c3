//! Orbital value of a monogenic cubic order at one place, given its local
//! invariants.
//!
//! The value is `q^rho * (1 + #T / (q-1)^2 * F)` where `F` depends on
//! whether the polynomial stays irreducible (unramified or ramified) or
//! splits, through `delta = max_i S_i` and `d = floor(delta / 3)`.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::Zero;

use crate::arith::factorize;
use crate::error::{Error, Result};

/// Factorization type of the defining cubic over the local field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CubicShape {
    IrreducibleUnramified,
    IrreducibleRamified,
    TwoFactors,
    ThreeFactors,
}

/// One irreducible factor: its degree `[E_i : F]`, residue degree and the
/// Serre invariant of the corresponding component order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Component {
    pub degree: u32,
    pub residue_degree: u32,
    pub serre: u32,
}

impl Component {
    pub fn new(degree: u32, residue_degree: u32, serre: u32) -> Self {
        Component {
            degree,
            residue_degree,
            serre,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CubicLocalData {
    q: u128,
    shape: CubicShape,
    components: Vec<Component>,
    delta: u32,
    rho: u32,
}

impl CubicLocalData {
    pub fn new(
        q: u128,
        shape: CubicShape,
        components: Vec<Component>,
        delta: u32,
        rho: u32,
    ) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidLocalData(msg));
        if q < 2 || factorize(q as i128)?.factors().len() != 1 {
            return bad(format!("residue size {q} is not a prime power"));
        }
        let mut degrees: Vec<u32> = components.iter().map(|c| c.degree).collect();
        degrees.sort_unstable();
        let expected: &[u32] = match shape {
            CubicShape::IrreducibleUnramified | CubicShape::IrreducibleRamified => &[3],
            CubicShape::TwoFactors => &[1, 2],
            CubicShape::ThreeFactors => &[1, 1, 1],
        };
        if degrees != expected {
            return bad(format!("component degrees {degrees:?} do not match {shape:?}"));
        }
        for c in &components {
            if c.residue_degree == 0 || c.degree % c.residue_degree != 0 {
                return bad(format!("residue degree {} does not divide {}", c.residue_degree, c.degree));
            }
            if c.degree == 1 && c.serre != 0 {
                return bad("a linear factor always gives the maximal order".into());
            }
        }
        match shape {
            CubicShape::IrreducibleUnramified if components[0].residue_degree != 3 => {
                return bad("unramified cubic must have residue degree 3".into())
            }
            CubicShape::IrreducibleRamified if components[0].residue_degree != 1 => {
                return bad("ramified cubic must be totally ramified".into())
            }
            _ => {}
        }
        let max_serre = components.iter().map(|c| c.serre).max().unwrap_or(0);
        if delta != max_serre {
            return bad(format!("delta = {delta} but max component Serre invariant is {max_serre}"));
        }
        if matches!(shape, CubicShape::IrreducibleUnramified | CubicShape::IrreducibleRamified) && rho != 0 {
            return bad(format!("rho = {rho} for an irreducible cubic"));
        }
        Ok(CubicLocalData {
            q,
            shape,
            components,
            delta,
            rho,
        })
    }

    pub fn q(&self) -> u128 {
        self.q
    }

    pub fn shape(&self) -> CubicShape {
        self.shape
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn delta(&self) -> u32 {
        self.delta
    }

    /// `floor(delta / 3)`.
    pub fn d(&self) -> u32 {
        self.delta / 3
    }

    pub fn rho(&self) -> u32 {
        self.rho
    }

    /// `prod_i q^deg_i (1 - q^-f_i) = prod_i q^(deg_i - f_i) (q^f_i - 1)`.
    pub fn torus_size(&self) -> BigUint {
        let q = BigUint::from(self.q);
        self.components
            .iter()
            .map(|c| q.pow(c.degree - c.residue_degree) * (q.pow(c.residue_degree) - 1u32))
            .product()
    }
}

/// Orbital value of the place. Errors when the local data do not produce an
/// integer, which happens only for data that no monogenic order realizes.
pub fn orbital_cubic(data: &CubicLocalData) -> Result<BigUint> {
    let q = BigInt::from(data.q);
    let delta = data.delta;
    let d = data.d();
    let q_delta = q.pow(delta);
    let q_reduced = q.pow(delta - d);

    // F = numer / (q (q^2 - 1)); (q^delta - 1)/(q - 1) is always integral
    let geometric = (&q_delta - 1) / (&q - 1);
    let common = &q * (&q * &q - 1);
    let mut numer = &geometric * &common;
    match data.shape {
        CubicShape::IrreducibleUnramified => {
            numer -= 3 * &q * (&q_reduced - 1);
        }
        CubicShape::IrreducibleRamified => {
            numer -= 3 * &q * (&q_reduced - 1);
            let lead = BigInt::from(1 + delta - 3 * d);
            numer += (lead * &q_reduced - 1) * (&q - 1);
        }
        CubicShape::TwoFactors | CubicShape::ThreeFactors => {}
    }

    let torus = BigInt::from_biguint(Sign::Plus, data.torus_size());
    let top: BigInt = torus * &numer;
    let bottom = common * (&q - 1) * (&q - 1);
    let (quot, rem): (BigInt, BigInt) = top.div_rem(&bottom);
    if !rem.is_zero() || quot.sign() == Sign::Minus {
        return Err(Error::NonIntegral(format!(
            "{data:?}: #T * F / (q-1)^2 = {top}/{bottom}"
        )));
    }
    let inner = (quot + 1u32).to_biguint().expect("nonnegative");
    Ok(BigUint::from(data.q).pow(data.rho) * inner)
}
