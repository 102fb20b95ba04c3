//! Primality testing, integer factorization and p-adic valuations.
//!
//! Factorization runs trial division by every integer candidate below 2^16,
//! then Pollard-Brent with fixed seeds on the cofactor. Primality is decided
//! by Miller-Rabin with the first thirteen prime bases below 3.3e24 (where
//! that base set is known to be exact) and by Baillie-PSW above it.

use num_integer::Integer;

use crate::error::{Error, Result};

const TRIAL_LIMIT: u128 = 1 << 16;

/// Miller-Rabin with these bases is exact for n < 3_317_044_064_679_887_385_961_981.
const MR_BASES: [u128; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
const MR_EXACT_LIMIT: u128 = 3_317_044_064_679_887_385_961_981;

/// Signed integer as a unit sign times a product of prime powers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    sign: i8,
    factors: Vec<(u128, u32)>,
}

impl Factorization {
    /// `+1` or `-1`.
    pub fn sign(&self) -> i8 {
        self.sign
    }

    /// `(prime, exponent)` pairs with strictly increasing primes.
    pub fn factors(&self) -> &[(u128, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u128> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Exponent of `p`, zero if `p` does not occur.
    pub fn exponent_of(&self, p: u128) -> u32 {
        self.factors
            .binary_search_by_key(&p, |&(q, _)| q)
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    /// Multiplies the factorization back out. `None` on overflow.
    pub fn value(&self) -> Option<i128> {
        let mut acc: i128 = self.sign as i128;
        for &(p, e) in &self.factors {
            let p = i128::try_from(p).ok()?;
            acc = acc.checked_mul(p.checked_pow(e)?)?;
        }
        Some(acc)
    }
}

/// Factors a nonzero integer.
pub fn factorize(n: i128) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::Zero);
    }
    let sign = if n < 0 { -1 } else { 1 };
    let mut primes = Vec::new();
    factor_unsigned(n.unsigned_abs(), &mut primes);
    primes.sort_unstable();

    let mut factors: Vec<(u128, u32)> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    Ok(Factorization { sign, factors })
}

fn factor_unsigned(mut n: u128, out: &mut Vec<u128>) {
    for p in [2u128, 3] {
        while n % p == 0 {
            out.push(p);
            n /= p;
        }
    }
    let mut d = 5u128;
    while d < TRIAL_LIMIT && d * d <= n {
        for c in [d, d + 2] {
            while n % c == 0 {
                out.push(c);
                n /= c;
            }
        }
        d += 6;
    }
    if n == 1 {
        return;
    }
    // no factor below min(2^16, sqrt(n)) means n is prime
    if d * d > n {
        out.push(n);
        return;
    }
    split_large(n, out);
}

fn split_large(n: u128, out: &mut Vec<u128>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    if let Some(r) = exact_sqrt(n) {
        split_large(r, out);
        split_large(r, out);
        return;
    }
    let d = pollard_brent(n);
    split_large(d, out);
    split_large(n / d, out);
}

fn exact_sqrt(n: u128) -> Option<u128> {
    let r = n.isqrt();
    (r * r == n).then_some(r)
}

/// Returns a nontrivial divisor of the odd composite `n`.
fn pollard_brent(n: u128) -> u128 {
    const BATCH: u64 = 128;
    let mut c = 1u128;
    loop {
        let f = |x: u128| add_mod(mul_mod(x, x, n), c, n);
        let mut y = 2u128;
        let mut r = 1u64;
        let mut q = 1u128;
        let mut g = 1u128;
        let mut x = y;
        let mut ys = y;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0u64;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = q.gcd(&n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == n {
            // batch overshot: replay one step at a time
            loop {
                ys = f(ys);
                g = x.abs_diff(ys).gcd(&n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
        c += 1;
    }
}

fn add_mod(a: u128, b: u128, n: u128) -> u128 {
    let (s, overflow) = a.overflowing_add(b);
    if overflow || s >= n {
        s.wrapping_sub(n)
    } else {
        s
    }
}

fn sub_mod(a: u128, b: u128, n: u128) -> u128 {
    if a >= b {
        a - b
    } else {
        n - (b - a)
    }
}

fn mul_mod(a: u128, b: u128, n: u128) -> u128 {
    if n <= u64::MAX as u128 {
        return (a % n) * (b % n) % n;
    }
    let (mut a, mut b) = (a % n, b % n);
    if a < b {
        std::mem::swap(&mut a, &mut b);
    }
    let mut r = 0u128;
    while b > 0 {
        if b & 1 == 1 {
            r = add_mod(r, a, n);
        }
        a = add_mod(a, a, n);
        b >>= 1;
    }
    r
}

fn pow_mod(mut base: u128, mut exp: u128, n: u128) -> u128 {
    let mut acc = 1 % n;
    base %= n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    acc
}

/// Strong probable-prime test to base `a` for odd `n > 2`.
pub(crate) fn is_strong_probable_prime(n: u128, a: u128) -> bool {
    let a = a % n;
    if a == 0 {
        return true;
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    let mut x = pow_mod(a, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = mul_mod(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

fn half_mod(x: u128, n: u128) -> u128 {
    if x & 1 == 0 {
        x / 2
    } else {
        // x + n is even and below 2n
        let (s, overflow) = x.overflowing_add(n);
        if overflow {
            (s >> 1) | (1 << 127)
        } else {
            s >> 1
        }
    }
}

/// Strong Lucas probable-prime test with Selfridge's parameter choice.
/// `n` must be odd, greater than 2 and not a perfect square.
pub(crate) fn is_strong_lucas_probable_prime(n: u128) -> bool {
    // D from 5, -7, 9, -11, ... with (D/n) = -1
    let mut d_abs: u128 = 5;
    let mut negative = false;
    let d_mod = loop {
        let d_signed = if negative {
            -(d_abs as i128)
        } else {
            d_abs as i128
        };
        let j = super::symbols::jacobi_u128(d_signed.rem_euclid(n as i128) as u128, n);
        if j == -1 {
            break d_signed.rem_euclid(n as i128) as u128;
        }
        if j == 0 && d_abs % n != 0 {
            return false;
        }
        d_abs += 2;
        negative = !negative;
    };
    // P = 1, Q = (1 - D) / 4
    let d_signed: i128 = if negative {
        -(d_abs as i128)
    } else {
        d_abs as i128
    };
    let q_signed = (1 - d_signed) / 4;
    let q_mod = q_signed.rem_euclid(n as i128) as u128;

    let s = (n + 1).trailing_zeros();
    let k = (n + 1) >> s;

    let mut u = 1u128;
    let mut v = 1u128;
    let mut qk = q_mod;
    let bits = 128 - k.leading_zeros();
    for i in (0..bits - 1).rev() {
        u = mul_mod(u, v, n);
        v = sub_mod(mul_mod(v, v, n), add_mod(qk, qk, n), n);
        qk = mul_mod(qk, qk, n);
        if (k >> i) & 1 == 1 {
            let u_next = half_mod(add_mod(u, v, n), n);
            let v_next = half_mod(add_mod(mul_mod(d_mod, u, n), v, n), n);
            u = u_next;
            v = v_next;
            qk = mul_mod(qk, q_mod, n);
        }
    }
    if u == 0 || v == 0 {
        return true;
    }
    for _ in 1..s {
        v = sub_mod(mul_mod(v, v, n), add_mod(qk, qk, n), n);
        qk = mul_mod(qk, qk, n);
        if v == 0 {
            return true;
        }
    }
    false
}

/// Deterministic for every `n` below 3.3e24; Baillie-PSW above.
pub fn is_prime(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    for p in MR_BASES {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    if n < 43 * 43 {
        return true;
    }
    if n < MR_EXACT_LIMIT {
        return MR_BASES.iter().all(|&a| is_strong_probable_prime(n, a));
    }
    is_baillie_psw_probable_prime(n)
}

pub(crate) fn is_baillie_psw_probable_prime(n: u128) -> bool {
    if n < 3 || n & 1 == 0 {
        return n == 2;
    }
    if !is_strong_probable_prime(n, 2) {
        return false;
    }
    if exact_sqrt(n).is_some() {
        return false;
    }
    is_strong_lucas_probable_prime(n)
}

/// Exponent of the prime `p` in the nonzero integer `n`.
pub fn ord_p(n: i128, p: u128) -> Result<u32> {
    if n == 0 {
        return Err(Error::Zero);
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(valuation(n.unsigned_abs(), p))
}

/// Valuation without the primality check; `n` must be nonzero.
pub(crate) fn valuation(mut n: u128, p: u128) -> u32 {
    let mut k = 0;
    while n % p == 0 {
        n /= p;
        k += 1;
    }
    k
}

/// Whether no prime square divides `n`.
pub fn is_squarefree(n: i128) -> bool {
    n != 0 && {
        let f = factorize(n).expect("nonzero");
        f.factors().iter().all(|&(_, e)| e == 1)
    }
}
