//! Global upper bounds for the size of the ideal class monoid.
//!
//! Every bound has the shape `(class-number input) * prod_p (local factor)`.
//! For the Cappell-Shaneson family the local factors come from the case
//! split in [`crate::local`] and the class number of the maximal order is
//! bounded through the Minkowski bound. For quadratic orders the local
//! factors are the Bass formulas, and the class number is supplied, read
//! off the form oracle (imaginary fields), or bounded.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{factorize, is_perfect_square, pi_enclosure, sqrt_upper};
use crate::classnum::{class_number_upper_bound_with_precision, FieldShape, DEFAULT_PI_BITS};
use crate::error::{Error, Result};
use crate::local::{
    bass_local_factor, cs_classify_prime, cs_invariants, cs_orbital, fundamental_discriminant,
    quad_splitting, serre_quadratic, BassLocalData, CsCase, CsCaseId, QuadLocalData, Splitting,
};
use crate::oracle::form_class_number;

/// Threshold on the (signed) field discriminant above which the simplified
/// bound `(2/3^5) sqrt(D_phi) D_E^(3/2)` applies.
pub const SIMPLE_BOUND_THRESHOLD: i128 = 3075;

/// One prime dividing the polynomial discriminant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CsPrimeReport {
    pub case: CsCase,
    /// Orbital value of the place.
    pub orbital: BigUint,
    /// Factor contributed to the product `A`.
    pub a_factor: BigUint,
}

/// `A(D_phi, C_phi)` together with its per-prime breakdown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CsProduct {
    pub value: BigUint,
    pub primes: Vec<CsPrimeReport>,
}

fn exact_div(n: BigUint, d: BigUint) -> BigUint {
    let (q, r) = n.div_rem(&d);
    debug_assert!(r.is_zero());
    q
}

/// The factor of `A` for one case, from the product formula.
fn a_factor(case: &CsCase) -> BigUint {
    let p = BigUint::from(case.p);
    let ord = case.ord_delta;
    match case.case_id {
        CsCaseId::Case1Maximal => BigUint::one(),
        CsCaseId::Case1 => p + 1u32,
        CsCaseId::Case2 => p,
        CsCaseId::Case3OddOrd => exact_div(p.pow((ord + 1) / 2) - 1u32, &p - 1u32),
        CsCaseId::Case3EvenInert => {
            exact_div(p.pow(ord / 2 + 1) + p.pow(ord / 2) - 2u32, &p - 1u32)
        }
        CsCaseId::Case4 => p.pow(ord / 2),
    }
}

fn classify_all(m: i32) -> Result<Vec<CsCase>> {
    let inv = cs_invariants(m);
    factorize(inv.delta_phi)?
        .primes()
        .map(|p| cs_classify_prime(m, p))
        .collect()
}

/// `A(D_phi, C_phi)` for the order with trace parameter `m`.
pub fn cs_a(m: i32) -> Result<CsProduct> {
    let primes: Vec<CsPrimeReport> = classify_all(m)?
        .into_iter()
        .map(|case| CsPrimeReport {
            orbital: cs_orbital(&case),
            a_factor: a_factor(&case),
            case,
        })
        .collect();
    let value = primes.iter().map(|r| &r.a_factor).product();
    Ok(CsProduct { value, primes })
}

/// `|D_E|` from the case data, and the sign of `D_E` (that of `D_phi`).
pub fn cs_delta_e(m: i32) -> Result<(u128, i8)> {
    let sign = if cs_invariants(m).delta_phi > 0 { 1 } else { -1 };
    Ok((delta_e_from_cases(&classify_all(m)?), sign))
}

fn delta_e_from_cases(cases: &[CsCase]) -> u128 {
    cases
        .iter()
        .map(|c| match c.case_id {
            CsCaseId::Case1Maximal | CsCaseId::Case1 => c.p * c.p,
            CsCaseId::Case2 | CsCaseId::Case3OddOrd => c.p,
            CsCaseId::Case3EvenInert | CsCaseId::Case4 => 1,
        })
        .product()
}

/// Full bound report for the Cappell-Shaneson order with parameter `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CsReport {
    pub m: i32,
    pub delta_phi: i128,
    pub c_phi: i128,
    pub prime_cases: Vec<CsPrimeReport>,
    pub a: BigUint,
    pub abs_delta_e: u128,
    pub delta_e_sign: i8,
    pub r2: u32,
    pub floor_m: u128,
    pub classnum_bound: BigUint,
    /// `classnum_bound * A`.
    pub bound_main: BigUint,
    /// Rational upper value of the relaxed closed form in `|D_E|` and `pi`.
    pub bound_closed_form: BigRational,
    /// `(2/3^5) sqrt(D_phi) D_E^(3/2)`, present when `D_E > 3075`.
    pub bound_simple: Option<BigRational>,
}

impl CsReport {
    pub fn signed_delta_e(&self) -> i128 {
        self.delta_e_sign as i128 * self.abs_delta_e as i128
    }
}

pub fn cs_bound(m: i32) -> Result<CsReport> {
    cs_bound_with_precision(m, DEFAULT_PI_BITS)
}

/// [`cs_bound`] with an explicit starting precision for the pi enclosure.
pub fn cs_bound_with_precision(m: i32, pi_bits: u32) -> Result<CsReport> {
    let inv = cs_invariants(m);
    let product = cs_a(m)?;
    let cases: Vec<CsCase> = product.primes.iter().map(|r| r.case).collect();
    let abs_delta_e = delta_e_from_cases(&cases);
    let delta_e_sign: i8 = if inv.delta_phi > 0 { 1 } else { -1 };
    let r2 = u32::from(delta_e_sign < 0);

    let shape = FieldShape::new(3, r2, abs_delta_e)?;
    let cn = class_number_upper_bound_with_precision(&shape, pi_bits);
    let orbital_product: BigUint = product.primes.iter().map(|r| &r.orbital).product();
    debug_assert_eq!(orbital_product, product.value);
    let bound_main = &cn.bound * &orbital_product;

    let bound_closed_form = closed_form_upper(&product.value, abs_delta_e, r2, pi_bits.max(64));

    let bound_simple = if delta_e_sign > 0 && abs_delta_e as i128 > SIMPLE_BOUND_THRESHOLD {
        // D_phi / D_E = s^2, so sqrt(D_phi * D_E^3) = s * D_E^2
        let quotient = inv.delta_phi / abs_delta_e as i128;
        let s = is_perfect_square(quotient).expect("discriminant quotient is a square");
        let de = BigInt::from(abs_delta_e);
        Some(BigRational::new(2 * BigInt::from(s) * &de * &de, BigInt::from(243)))
    } else {
        None
    };

    Ok(CsReport {
        m,
        delta_phi: inv.delta_phi,
        c_phi: inv.c_phi,
        prime_cases: product.primes,
        a: product.value,
        abs_delta_e,
        delta_e_sign,
        r2,
        floor_m: cn.floor_m,
        classnum_bound: cn.bound,
        bound_main,
        bound_closed_form,
        bound_simple,
    })
}

/// Upper value of
/// `A (8/3^7 c^3 |D|^(3/2) + 2/3^4 c^2 |D| + 1/3^3 c |D|^(1/2))`, `c = (4/pi)^r2`,
/// with `pi` replaced by a lower endpoint and `sqrt |D|` by an upper one.
fn closed_form_upper(a: &BigUint, abs_delta_e: u128, r2: u32, bits: u32) -> BigRational {
    let rat = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    let c = if r2 == 0 {
        BigRational::one()
    } else {
        (rat(4, 1) / pi_enclosure(bits).lo).pow(r2 as i32)
    };
    let disc = BigInt::from(abs_delta_e);
    let root = sqrt_upper(&disc, bits);
    let disc = BigRational::from_integer(disc);
    let total = rat(8, 2187) * c.pow(3) * &disc * &root
        + rat(2, 81) * c.pow(2) * &disc
        + rat(1, 27) * &c * &root;
    BigRational::from_integer(BigInt::from(a.clone())) * total
}

/// Local factor of a quadratic order at one prime dividing the conductor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadLocalFactor {
    pub p: u128,
    pub serre: u32,
    pub splitting: Splitting,
}

impl QuadLocalFactor {
    pub fn factor(&self) -> BigUint {
        bass_local_factor(&BassLocalData::from_quadratic(&QuadLocalData {
            p: self.p,
            serre: self.serre,
            splitting: self.splitting,
        }))
    }
}

/// Where a class number fed into a bound came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassNumberInput {
    /// Exact value given by the caller.
    Supplied(u64),
    /// Exact value from the reduced-form oracle.
    Oracle(u64),
    /// Upper bound from the Minkowski bound.
    Bound(BigUint),
}

impl ClassNumberInput {
    pub fn value(&self) -> BigUint {
        match self {
            ClassNumberInput::Supplied(h) | ClassNumberInput::Oracle(h) => BigUint::from(*h),
            ClassNumberInput::Bound(b) => b.clone(),
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, ClassNumberInput::Bound(_))
    }
}

/// Both Bass-order bounds for `Z + f O_E`, `E = Q(sqrt d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadReport {
    pub d: i64,
    pub fund_disc: i128,
    pub conductor: u64,
    pub local_factors: Vec<QuadLocalFactor>,
    /// `#Cl(O_E)` as used in the first bound.
    pub class_number_input: ClassNumberInput,
    /// `#Cl(R)` as used in the second bound, when known.
    pub cl_r_input: Option<ClassNumberInput>,
    /// `#Cl(O_E) * prod_p (local factor)`.
    pub bound_bass: BigUint,
    /// `#Cl(R) * prod_{p | f} (S_p + 1)`.
    pub bound_overorder: Option<BigUint>,
    /// `prod_{p | f} (S_p + 1)`: the number of overorders.
    pub conductor_factor_count: BigUint,
}

fn quad_local_factors(fund_disc: i128, f: u64) -> Result<Vec<QuadLocalFactor>> {
    if f == 0 {
        return Err(Error::InvalidArgument("conductor must be positive".into()));
    }
    factorize(f as i128)?
        .primes()
        .map(|p| {
            Ok(QuadLocalFactor {
                p,
                serre: serre_quadratic(f as u128, p)?,
                splitting: quad_splitting(fund_disc, p)?,
            })
        })
        .collect()
}

fn order_disc(fund_disc: i128, f: u64) -> Result<i64> {
    let f = f as i128;
    i64::try_from(f * f * fund_disc)
        .map_err(|_| Error::InvalidArgument(format!("conductor {f} too large for the oracle")))
}

fn resolve_cl_r(d: i64, fund_disc: i128, f: u64, cl_r: Option<u64>) -> Result<Option<ClassNumberInput>> {
    Ok(match cl_r {
        Some(h) => Some(ClassNumberInput::Supplied(h)),
        None if d < 0 => Some(ClassNumberInput::Oracle(form_class_number(order_disc(fund_disc, f)?)?)),
        None => None,
    })
}

fn overorder_count(factors: &[QuadLocalFactor]) -> BigUint {
    factors.iter().map(|l| BigUint::from(l.serre + 1)).product()
}

/// Both bounds for the quadratic order of conductor `f` in `Q(sqrt d)`.
///
/// `class_number` is `#Cl(O_E)`; when absent it is read from the oracle for
/// `d < 0` and bounded through the Minkowski bound for `d > 0`. `cl_r` is
/// `#Cl(R)`; when absent it is read from the oracle for `d < 0` and the
/// second bound is omitted for `d > 0`.
pub fn quad_bound(d: i64, f: u64, class_number: Option<u64>, cl_r: Option<u64>) -> Result<QuadReport> {
    let fund_disc = fundamental_discriminant(d)?;
    let local_factors = quad_local_factors(fund_disc, f)?;
    let class_number_input = match class_number {
        Some(h) => ClassNumberInput::Supplied(h),
        None if d < 0 => ClassNumberInput::Oracle(form_class_number(fund_disc as i64)?),
        None => {
            let shape = FieldShape::new(2, 0, fund_disc.unsigned_abs())?;
            ClassNumberInput::Bound(class_number_upper_bound_with_precision(&shape, DEFAULT_PI_BITS).bound)
        }
    };
    let bound_bass = class_number_input.value()
        * local_factors.iter().map(QuadLocalFactor::factor).product::<BigUint>();
    let conductor_factor_count = overorder_count(&local_factors);
    let cl_r_input = resolve_cl_r(d, fund_disc, f, cl_r)?;
    let bound_overorder = cl_r_input.as_ref().map(|h| h.value() * &conductor_factor_count);
    Ok(QuadReport {
        d,
        fund_disc,
        conductor: f,
        local_factors,
        class_number_input,
        cl_r_input,
        bound_bass,
        bound_overorder,
        conductor_factor_count,
    })
}

/// `#Cl(R) * prod_{p | f} (ord_p(f) + 1)`. `cl_r` is required for `d > 0`.
pub fn quad_overorder_bound(d: i64, f: u64, cl_r: Option<u64>) -> Result<BigUint> {
    let fund_disc = fundamental_discriminant(d)?;
    let local_factors = quad_local_factors(fund_disc, f)?;
    let h = resolve_cl_r(d, fund_disc, f, cl_r)?.ok_or(Error::MissingClassNumber(d))?;
    Ok(h.value() * overorder_count(&local_factors))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn a_examples() {
        assert_eq!(cs_a(6).unwrap().value, big(1));
        assert_eq!(cs_a(0).unwrap().value, big(1));
        assert_eq!(cs_a(1).unwrap().value, big(1));
        let p = cs_a(6).unwrap();
        assert_eq!(p.primes.len(), 1);
        assert_eq!(p.primes[0].case.case_id, CsCaseId::Case1Maximal);
    }

    #[test]
    fn delta_e_examples() {
        assert_eq!(cs_delta_e(6), Ok((49, 1)));
        assert_eq!(cs_delta_e(0), Ok((23, -1)));
        assert_eq!(cs_delta_e(11), Ok((4729, 1)));
        assert_eq!(cs_delta_e(8), Ok((697, 1)));
    }

    #[test]
    fn cs_bound_examples() {
        let r = cs_bound(6).unwrap();
        assert_eq!((r.a.clone(), r.abs_delta_e, r.r2, r.floor_m), (big(1), 49, 0, 1));
        assert_eq!((r.classnum_bound.clone(), r.bound_main.clone()), (big(1), big(1)));
        assert_eq!(r.bound_simple, None);

        let r = cs_bound(0).unwrap();
        assert_eq!((r.a.clone(), r.abs_delta_e, r.r2, r.floor_m), (big(1), 23, 1, 1));
        assert_eq!(r.bound_main, big(1));
        assert_eq!(r.signed_delta_e(), -23);

        let r = cs_bound(11).unwrap();
        assert_eq!(
            r.bound_simple,
            Some(BigRational::new(44_726_882.into(), 243.into()))
        );
        // floor((2/9) sqrt(4729)) = 15, sum of squares to 15 = 1240
        assert_eq!((r.floor_m, r.classnum_bound.clone()), (15, big(1240)));
    }

    #[test]
    fn closed_form_dominates_main_bound() {
        for m in -60..=60 {
            let r = cs_bound(m).unwrap();
            let main = BigRational::from_integer(BigInt::from(r.bound_main.clone()));
            assert!(main <= r.bound_closed_form, "m = {m}");
            if let Some(simple) = &r.bound_simple {
                assert!(main <= *simple, "m = {m}");
            }
        }
    }

    #[test]
    fn closed_form_is_tight_for_integral_minkowski_bound() {
        // r2 = 0: M^2 rational, sqrt exact for a square discriminant
        let a = big(1);
        let v = closed_form_upper(&a, 3969, 0, 64);
        // M = 14: M(M+1)(2M+1)/6 = 1015
        assert_eq!(v, BigRational::from_integer(1015.into()));
    }

    #[test]
    fn quad_examples() {
        let r = quad_bound(2, 3, Some(1), Some(1)).unwrap();
        assert_eq!((r.bound_bass.clone(), r.bound_overorder.clone()), (big(5), Some(big(2))));
        assert_eq!(r.fund_disc, 8);
        assert_eq!(r.local_factors.len(), 1);
        assert_eq!(r.local_factors[0].splitting, Splitting::Inert);

        let r = quad_bound(-1, 9, None, None).unwrap();
        assert_eq!((r.bound_bass.clone(), r.bound_overorder.clone()), (big(17), Some(big(18))));
        assert_eq!(r.cl_r_input, Some(ClassNumberInput::Oracle(6)));
        assert_eq!(r.class_number_input, ClassNumberInput::Oracle(1));

        let r = quad_bound(-1, 1, None, None).unwrap();
        assert_eq!((r.bound_bass.clone(), r.bound_overorder.clone()), (big(1), Some(big(1))));
        assert_eq!(r.conductor_factor_count, big(1));
    }

    #[test]
    fn real_quadratic_without_class_numbers() {
        let r = quad_bound(2, 3, None, None).unwrap();
        // Minkowski bound for Q(sqrt 2) is sqrt(2): one ideal class
        assert_eq!(r.class_number_input, ClassNumberInput::Bound(big(1)));
        assert_eq!(r.bound_bass, big(5));
        assert_eq!(r.bound_overorder, None);
        assert_eq!(quad_overorder_bound(2, 3, None), Err(Error::MissingClassNumber(2)));
    }

    #[test]
    fn overorder_bound_examples() {
        assert_eq!(quad_overorder_bound(2, 3, Some(1)), Ok(big(2)));
        assert_eq!(quad_overorder_bound(-1, 9, None), Ok(big(18)));
        assert_eq!(quad_overorder_bound(-1, 1, None), Ok(big(1)));
        assert_eq!(quad_overorder_bound(-1, 3, None), Ok(big(4)));
    }

    #[test]
    fn quad_rejects_bad_input() {
        assert_eq!(quad_bound(12, 3, None, None), Err(Error::NotSquarefree(12)));
        assert_eq!(quad_bound(1, 3, None, None), Err(Error::NotSquarefree(1)));
        assert_eq!(quad_bound(0, 3, None, None), Err(Error::NotSquarefree(0)));
        assert!(quad_bound(-1, 0, None, None).is_err());
    }
}
