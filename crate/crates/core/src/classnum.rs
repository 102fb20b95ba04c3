//! Minkowski bound and the resulting upper bound on the class number of a
//! maximal order: `#Cl(O_E) <= sum_{eta=1}^{floor(M)} eta^(n-1)`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::arith::{faulhaber, pi_enclosure};
use crate::error::{Error, Result};

/// Starting precision (bits) of the pi enclosure used to resolve `floor(M)`.
pub const DEFAULT_PI_BITS: u32 = 64;

/// Precision is doubled up to this many bits before falling back to the
/// larger candidate.
const MAX_PI_BITS: u32 = 1 << 14;

/// Degree, complex-place count and absolute discriminant of a number field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldShape {
    degree: u32,
    r2: u32,
    abs_disc: u128,
}

impl FieldShape {
    pub fn new(degree: u32, r2: u32, abs_disc: u128) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidArgument("field degree must be positive".into()));
        }
        if 2 * r2 > degree {
            return Err(Error::InvalidArgument(format!(
                "2 * r2 = {} exceeds the degree {degree}",
                2 * r2
            )));
        }
        if abs_disc == 0 {
            return Err(Error::InvalidArgument("discriminant must be nonzero".into()));
        }
        Ok(FieldShape { degree, r2, abs_disc })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn r2(&self) -> u32 {
        self.r2
    }

    pub fn abs_disc(&self) -> u128 {
        self.abs_disc
    }

    /// `((n!)^2 * 16^r2 * |disc|, n^(2n))`: `M^2 * pi^(2 r2)` as a fraction.
    fn squared_bound_parts(&self) -> (BigInt, BigInt) {
        let n = self.degree;
        let fact: BigInt = (1..=n).map(BigInt::from).product();
        let num = &fact * &fact * BigInt::from(16u32).pow(self.r2) * BigInt::from(self.abs_disc);
        let den = BigInt::from(n).pow(2 * n);
        (num, den)
    }
}

/// The class-number bound together with the shape and `floor(M)` it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassNumberBound {
    pub shape: FieldShape,
    pub floor_m: u128,
    pub bound: BigUint,
}

fn floor_sqrt(x: &BigRational) -> u128 {
    x.floor()
        .to_integer()
        .sqrt()
        .to_u128()
        .expect("Minkowski bound fits in u128")
}

/// An integer `t >= floor(M)`, equal to `floor(M)` whenever the pi
/// enclosure can separate `M` from the neighbouring integers.
pub fn minkowski_floor(shape: &FieldShape) -> u128 {
    minkowski_floor_with_precision(shape, DEFAULT_PI_BITS)
}

/// [`minkowski_floor`] starting from a pi enclosure of `start_bits` bits.
pub fn minkowski_floor_with_precision(shape: &FieldShape, start_bits: u32) -> u128 {
    let (num, den) = shape.squared_bound_parts();
    if shape.r2 == 0 {
        return floor_sqrt(&BigRational::new(num, den));
    }
    let mut bits = start_bits.max(16);
    loop {
        let pi = pi_enclosure(bits);
        let e = 2 * shape.r2 as i32;
        let upper = BigRational::new(num.clone(), den.clone()) / pi.lo.pow(e);
        let lower = BigRational::new(num.clone(), den.clone()) / pi.hi.pow(e);
        let (t_lo, t_hi) = (floor_sqrt(&lower), floor_sqrt(&upper));
        if t_lo == t_hi || bits >= MAX_PI_BITS {
            // unresolved: the larger candidate keeps the bound valid
            return t_hi;
        }
        bits = bits.saturating_mul(2).min(MAX_PI_BITS);
    }
}

/// `sum_{eta=1}^{max(floor(M), 1)} eta^(n-1)`. The sum is taken from 1 even
/// when `floor(M) = 0`, since a class group has at least one element.
pub fn class_number_upper_bound(shape: &FieldShape) -> ClassNumberBound {
    class_number_upper_bound_with_precision(shape, DEFAULT_PI_BITS)
}

pub fn class_number_upper_bound_with_precision(
    shape: &FieldShape,
    start_bits: u32,
) -> ClassNumberBound {
    let floor_m = minkowski_floor_with_precision(shape, start_bits);
    let bound = faulhaber(floor_m.max(1), shape.degree - 1);
    debug_assert!(bound >= BigUint::one());
    ClassNumberBound {
        shape: *shape,
        floor_m,
        bound,
    }
}
