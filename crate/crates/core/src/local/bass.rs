//! Local factor of a Bass order at one place.

use num_bigint::BigUint;
use num_traits::One;

use super::quadratic::{geometric, QuadLocalData, Splitting};

/// Residue size `q_R`, Serre invariant `S` relative to the maximal unramified
/// subextension, residue degree `[k_E : k_R]`, and whether the local ring is
/// a domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BassLocalData {
    pub q: u128,
    pub serre: u32,
    pub residue_degree: u32,
    pub is_domain: bool,
}

impl BassLocalData {
    /// The place of a quadratic order over `Z` described by `data`.
    pub fn from_quadratic(data: &QuadLocalData) -> Self {
        let (residue_degree, is_domain) = match data.splitting {
            Splitting::Inert => (2, true),
            Splitting::Ramified => (1, true),
            Splitting::Split => (1, false),
        };
        BassLocalData {
            q: data.p,
            serre: data.serre,
            residue_degree,
            is_domain,
        }
    }
}

/// `q^S + [k_E : k_R] (q^(S-1) + ... + 1)` at a domain place, `q^S` otherwise.
pub fn bass_local_factor(data: &BassLocalData) -> BigUint {
    if data.serre == 0 {
        return BigUint::one();
    }
    let q = BigUint::from(data.q);
    let top = q.pow(data.serre);
    if data.is_domain {
        top + geometric(&q, data.serre) * data.residue_degree
    } else {
        top
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::local::orbital_quadratic;

    #[test]
    fn examples() {
        let f = |q, serre, residue_degree, is_domain| {
            bass_local_factor(&BassLocalData {
                q,
                serre,
                residue_degree,
                is_domain,
            })
        };
        assert_eq!(f(3, 1, 2, true), BigUint::from(5u32));
        assert_eq!(f(3, 2, 2, true), BigUint::from(17u32));
        assert_eq!(f(7, 3, 1, false), BigUint::from(343u32));
        assert_eq!(f(7, 0, 2, true), BigUint::from(1u32));
    }

    #[test]
    fn agrees_with_quadratic_orbital_formula() {
        let primes = [3u128, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];
        for p in primes {
            for serre in 0..=6 {
                for splitting in [Splitting::Split, Splitting::Inert, Splitting::Ramified] {
                    let data = QuadLocalData { p, serre, splitting };
                    assert_eq!(
                        orbital_quadratic(&data),
                        bass_local_factor(&BassLocalData::from_quadratic(&data)),
                        "{data:?}"
                    );
                }
            }
        }
    }
}
