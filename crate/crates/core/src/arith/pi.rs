//! Certified rational enclosures of pi.
//!
//! Uses Machin's formula `pi = 16 atan(1/5) - 4 atan(1/239)` in scaled
//! integer arithmetic with directed rounding. The returned enclosure is the
//! dyadic cell `[k/2^b, (k+1)/2^b]` with `k = floor(pi * 2^b)`: it depends
//! only on `b`, so enclosures at increasing precision are nested.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Closed rational interval `[lo, hi]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalEnclosure {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RationalEnclosure {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// Whether `self` lies inside `other`.
    pub fn is_within(&self, other: &RationalEnclosure) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }
}

/// Lower and upper bounds on `2^scale * atan(1/x)`.
fn atan_inv_scaled(x: u32, scale: u64) -> (BigInt, BigInt) {
    let one = BigInt::one() << scale;
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut power = x.clone(); // x^(2k+1)
    let mut lo = BigInt::zero();
    let mut hi = BigInt::zero();
    let mut k = 0u64;
    loop {
        let denom = &power * BigInt::from(2 * k + 1);
        let (q, r) = one.div_rem(&denom);
        if q.is_zero() {
            break;
        }
        let q_up = if r.is_zero() { q.clone() } else { &q + 1 };
        if k % 2 == 0 {
            lo += &q;
            hi += &q_up;
        } else {
            lo -= &q_up;
            hi -= &q;
        }
        power *= &x2;
        k += 1;
    }
    // the alternating tail is bounded by the first omitted term, which is < 1
    (lo - 1, hi + 1)
}

/// `floor(pi * 2^bits)`, resolved by raising the working precision until the
/// lower and upper scaled bounds agree.
fn pi_floor_scaled(bits: u32) -> BigInt {
    let mut guard = 32u64;
    loop {
        let scale = bits as u64 + guard;
        let (lo5, hi5) = atan_inv_scaled(5, scale);
        let (lo239, hi239) = atan_inv_scaled(239, scale);
        let lo = lo5 * 16 - hi239 * 4;
        let hi = hi5 * 16 - lo239 * 4;
        let lo_floor = lo >> guard;
        let hi_floor = hi >> guard;
        if lo_floor == hi_floor {
            return lo_floor;
        }
        guard *= 2;
    }
}

/// Enclosure of pi of width exactly `2^-bits`. Precisions below 16 bits are
/// raised to 16.
pub fn pi_enclosure(bits: u32) -> RationalEnclosure {
    let bits = bits.max(16);
    let k = pi_floor_scaled(bits);
    let denom = BigInt::one() << bits;
    RationalEnclosure {
        lo: BigRational::new(k.clone(), denom.clone()),
        hi: BigRational::new(k + 1, denom),
    }
}

/// Rational upper bound on `sqrt(n)` within `2^-bits`.
pub fn sqrt_upper(n: &BigInt, bits: u32) -> BigRational {
    debug_assert!(!n.is_negative());
    let scaled = n << (2 * bits as usize);
    let r = scaled.sqrt();
    let up = if &r * &r == scaled { r } else { r + 1 };
    BigRational::new(up, BigInt::one() << bits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn sixteen_bits_contains_pi() {
        let e = pi_enclosure(16);
        assert!(e.contains(&rat(314_159_265, 100_000_000)));
        assert!(e.width() <= BigRational::new(1.into(), BigInt::one() << 16));
    }

    #[test]
    fn thirty_two_bits_against_published_digits() {
        let e = pi_enclosure(32);
        assert!(rat(31_415_926, 10_000_000) < e.lo);
        assert!(e.hi < rat(31_415_927, 10_000_000));
        assert!(e.is_within(&pi_enclosure(16)));
    }

    #[test]
    fn high_precision_against_published_digits() {
        // 50 decimal digits of pi
        let digits: BigInt = "314159265358979323846264338327950288419716939937510"
            .parse()
            .unwrap();
        let ten50 = BigInt::from(10).pow(50);
        let lo = BigRational::new(digits.clone(), ten50.clone());
        let hi = BigRational::new(digits + 1, ten50);
        let e = pi_enclosure(200);
        // e is far narrower than 1e-50 and must overlap [lo, hi]
        assert!(e.lo < hi && lo < e.hi);
        assert!(e.lo > lo && e.hi < hi);
    }

    #[test]
    fn nested_across_precisions() {
        let mut prev = pi_enclosure(16);
        for b in (24..=256).step_by(8) {
            let next = pi_enclosure(b);
            assert!(next.is_within(&prev), "bits {b}");
            assert_eq!(next.width(), BigRational::new(1.into(), BigInt::one() << b));
            prev = next;
        }
    }

    #[test]
    fn low_precision_is_raised() {
        assert_eq!(pi_enclosure(3), pi_enclosure(16));
    }

    #[test]
    fn sqrt_upper_bounds() {
        let s = sqrt_upper(&BigInt::from(49), 20);
        assert_eq!(s, rat(7, 1));
        let s = sqrt_upper(&BigInt::from(2), 30);
        assert!(&s * &s >= rat(2, 1));
        assert!(s - rat(1, 1 << 30) < rat(1_414_213_563, 1_000_000_000));
    }
}
