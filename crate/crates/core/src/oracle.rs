//! Exact ground truth for imaginary quadratic orders.
//!
//! Class numbers come from enumerating reduced primitive positive definite
//! binary quadratic forms. Since quadratic orders are Bass, the ideal class
//! monoid of the order of conductor `f` is the disjoint union of the class
//! groups of its overorders, which are exactly the orders of conductor
//! `f' | f`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bounds::{quad_bound, quad_overorder_bound};
use crate::error::{Error, Result};
use crate::local::{fundamental_discriminant, orbital_quadratic, quad_splitting, QuadLocalData};
use crate::arith::factorize;

/// Binary quadratic form `a x^2 + b x y + c y^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl QuadForm {
    pub fn new(a: i64, b: i64, c: i64) -> Self {
        QuadForm { a, b, c }
    }

    pub fn discriminant(&self) -> i64 {
        self.b * self.b - 4 * self.a * self.c
    }

    /// `|b| <= a <= c`, with `b >= 0` when `|b| = a` or `a = c`.
    pub fn is_reduced(&self) -> bool {
        let QuadForm { a, b, c } = *self;
        a > 0 && b.abs() <= a && a <= c && ((b.abs() != a && a != c) || b >= 0)
    }

    pub fn is_primitive(&self) -> bool {
        self.a.gcd(&self.b).gcd(&self.c) == 1
    }

    /// The reduced form equivalent to a positive definite `self`.
    pub fn reduce(self) -> QuadForm {
        let QuadForm { mut a, mut b, mut c } = self;
        debug_assert!(a > 0 && self.discriminant() < 0);
        loop {
            // translate so that -a < b <= a
            let k = Integer::div_floor(&(a - b), &(2 * a));
            c += a * k * k + b * k;
            b += 2 * a * k;
            if a > c {
                std::mem::swap(&mut a, &mut c);
                b = -b;
                continue;
            }
            if a == c && b < 0 {
                b = -b;
            }
            return QuadForm { a, b, c };
        }
    }

    /// Image under `(x, y) -> (p x + q y, r x + s y)`.
    pub fn transform(&self, p: i64, q: i64, r: i64, s: i64) -> QuadForm {
        let QuadForm { a, b, c } = *self;
        QuadForm {
            a: a * p * p + b * p * r + c * r * r,
            b: 2 * a * p * q + b * (p * s + q * r) + 2 * c * r * s,
            c: a * q * q + b * q * s + c * s * s,
        }
    }
}

fn check_negative_discriminant(disc: i64) -> Result<()> {
    if disc >= 0 || !matches!(disc.rem_euclid(4), 0 | 1) {
        return Err(Error::InvalidDiscriminant(disc));
    }
    Ok(())
}

/// Every reduced form of discriminant `disc`, primitive or not, ordered by
/// `a`, then `|b|`, then positive `b` first.
pub fn all_reduced_forms(disc: i64) -> Result<Vec<QuadForm>> {
    check_negative_discriminant(disc)?;
    let n = -disc;
    let mut out = Vec::new();
    let mut a = 1i64;
    while 3 * a * a <= n {
        let mut b_abs = n & 1;
        while b_abs <= a {
            let num = b_abs * b_abs + n;
            if num % (4 * a) == 0 {
                let c = num / (4 * a);
                if c >= a {
                    out.push(QuadForm::new(a, b_abs, c));
                    if b_abs != 0 && b_abs != a && a != c {
                        out.push(QuadForm::new(a, -b_abs, c));
                    }
                }
            }
            b_abs += 2;
        }
        a += 1;
    }
    Ok(out)
}

/// One primitive reduced form per proper equivalence class of discriminant
/// `disc < 0`.
pub fn reduced_forms(disc: i64) -> Result<Vec<QuadForm>> {
    Ok(all_reduced_forms(disc)?
        .into_iter()
        .filter(QuadForm::is_primitive)
        .collect())
}

/// Class number of the imaginary quadratic order of discriminant `disc`.
pub fn form_class_number(disc: i64) -> Result<u64> {
    Ok(reduced_forms(disc)?.len() as u64)
}

/// Number of roots of unity in the order of discriminant `disc < 0`.
pub fn unit_count(disc: i64) -> u32 {
    match disc {
        -3 => 6,
        -4 => 4,
        _ => 2,
    }
}

/// Overorder of a quadratic order: conductor, discriminant, class number
/// and unit count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OverorderEntry {
    pub conductor: u64,
    pub discriminant: i64,
    pub class_number: u64,
    pub units: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverorderLattice {
    pub d: i64,
    pub f: u64,
    pub fund_disc: i64,
    /// One entry per divisor of `f`, ascending.
    pub entries: Vec<OverorderEntry>,
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n % i == 0 {
            small.push(i);
            if i * i != n {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn imaginary_fund_disc(d: i64) -> Result<i64> {
    if d >= 0 {
        return Err(Error::InvalidArgument(format!("d = {d} must be negative for the oracle")));
    }
    Ok(fundamental_discriminant(d)? as i64)
}

fn order_discriminant(fund_disc: i64, f: u64) -> Result<i64> {
    i64::try_from(f)
        .ok()
        .and_then(|f| f.checked_mul(f))
        .and_then(|f2| f2.checked_mul(fund_disc))
        .ok_or_else(|| Error::InvalidArgument(format!("conductor {f} too large")))
}

/// The overorders of `Z + f O_E` in `E = Q(sqrt d)`, `d < 0` squarefree.
pub fn overorder_lattice(d: i64, f: u64) -> Result<OverorderLattice> {
    let fund_disc = imaginary_fund_disc(d)?;
    if f == 0 {
        return Err(Error::InvalidArgument("conductor must be positive".into()));
    }
    let entries = divisors(f)
        .into_iter()
        .map(|g| {
            let disc = order_discriminant(fund_disc, g)?;
            Ok(OverorderEntry {
                conductor: g,
                discriminant: disc,
                class_number: form_class_number(disc)?,
                units: unit_count(disc),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(OverorderLattice {
        d,
        f,
        fund_disc,
        entries,
    })
}

/// Exact size of the ideal class monoid: the sum of the class numbers of all
/// overorders.
pub fn icm_exact(d: i64, f: u64) -> Result<u64> {
    Ok(overorder_lattice(d, f)?
        .entries
        .iter()
        .map(|e| e.class_number)
        .sum())
}

/// Both sides of the identity
/// `prod_p orbital(p) = (1/h(O_E)) sum_{O} h(O) [O_E^x : O^x]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YunCheck {
    pub lhs: BigUint,
    pub rhs: BigRational,
    pub holds: bool,
}

pub fn yun_check(d: i64, f: u64) -> Result<YunCheck> {
    let lattice = overorder_lattice(d, f)?;
    let mut lhs = BigUint::one();
    for &(p, e) in factorize(f as i128)?.factors() {
        let splitting = quad_splitting(lattice.fund_disc as i128, p)?;
        lhs *= orbital_quadratic(&QuadLocalData { p, serre: e, splitting });
    }
    let maximal = lattice.entries[0];
    debug_assert_eq!(maximal.conductor, 1);
    let mut sum = BigInt::zero();
    for e in &lattice.entries {
        let (index, rem) = maximal.units.div_rem(&e.units);
        if rem != 0 {
            return Err(Error::NonIntegral(format!(
                "unit index {}/{} at conductor {}",
                maximal.units, e.units, e.conductor
            )));
        }
        sum += BigInt::from(e.class_number) * index;
    }
    let rhs = BigRational::new(sum, BigInt::from(maximal.class_number));
    let holds = rhs == BigRational::from_integer(BigInt::from(lhs.clone()));
    Ok(YunCheck { lhs, rhs, holds })
}

/// The exact monoid size next to both global bounds for one order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundAudit {
    pub d: i64,
    pub f: u64,
    pub icm: u64,
    pub bound_bass: BigUint,
    pub bound_overorder: BigUint,
}

/// Checks `icm_exact <= both bounds`; a violation is returned as
/// [`Error::AuditViolation`].
pub fn bound_audit(d: i64, f: u64) -> Result<BoundAudit> {
    let icm = icm_exact(d, f)?;
    let bound_bass = quad_bound(d, f, None, None)?.bound_bass;
    let bound_overorder = quad_overorder_bound(d, f, None)?;
    for (bound, which) in [(&bound_bass, "class-number bound"), (&bound_overorder, "Cl(R) bound")] {
        if BigUint::from(icm) > *bound {
            return Err(Error::AuditViolation {
                d,
                f,
                exact: icm,
                bound: bound.to_string(),
                which,
            });
        }
    }
    Ok(BoundAudit {
        d,
        f,
        icm,
        bound_bass,
        bound_overorder,
    })
}
