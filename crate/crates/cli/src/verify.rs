//! Verification suites. Each runs a grid of independent checks in parallel
//! and keeps the first failure in grid order.

use rayon::prelude::*;
use serde::Serialize;

use clmonoid::arith::{factorize, is_prime, is_squarefree};
use clmonoid::local::{
    bass_local_factor, cs_classify_prime, cs_invariants, cs_local_data, cs_orbital,
    fundamental_discriminant, orbital_cubic, orbital_quadratic, BassLocalData, QuadLocalData,
    Splitting,
};
use clmonoid::oracle::{bound_audit, yun_check};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub suite: &'static str,
    pub checks: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn line(&self) -> String {
        match &self.first_failure {
            None => format!("PASS {}: {} checks", self.suite, self.checks),
            Some(f) => format!(
                "FAIL {}: {} of {} checks failed; first: {}",
                self.suite, self.failures, self.checks, f
            ),
        }
    }
}

/// Each input yields a number of passed checks or a failure description.
fn run_grid<T, F>(suite: &'static str, inputs: Vec<T>, check: F) -> SuiteResult
where
    T: Send,
    F: Fn(T) -> Result<u64, String> + Sync + Send,
{
    let results: Vec<Result<u64, String>> = inputs.into_par_iter().map(check).collect();
    let mut out = SuiteResult { suite, checks: 0, failures: 0, first_failure: None };
    for r in results {
        match r {
            Ok(n) => out.checks += n,
            Err(e) => {
                out.checks += 1;
                out.failures += 1;
                out.first_failure.get_or_insert(e);
            }
        }
    }
    out
}

fn merge(suite: &'static str, parts: [SuiteResult; 2]) -> SuiteResult {
    let [a, b] = parts;
    SuiteResult {
        suite,
        checks: a.checks + b.checks,
        failures: a.failures + b.failures,
        first_failure: a.first_failure.or(b.first_failure),
    }
}

/// Closed-form cubic values against the generic formula at every prime of
/// `D_phi(m)`, and the quadratic orbital value against the Bass factor.
pub fn coherence(m_from: i32, m_to: i32, pmax: u128, smax: u32) -> SuiteResult {
    let cubic = run_grid("coherence/cubic", (m_from..=m_to).collect(), |m| {
        let inv = cs_invariants(m);
        let primes = factorize(inv.delta_phi).map_err(|e| format!("m={m}: {e}"))?;
        let mut n = 0;
        for p in primes.primes() {
            let case = cs_classify_prime(m, p).map_err(|e| format!("m={m} p={p}: {e}"))?;
            let generic = orbital_cubic(&cs_local_data(&case)).map_err(|e| format!("m={m} p={p}: {e}"))?;
            let closed = cs_orbital(&case);
            if generic != closed {
                return Err(format!(
                    "m={m} p={p} case={} ord={} S={}: generic={generic} closed={closed}",
                    case.case_id, case.ord_delta, case.serre
                ));
            }
            n += 1;
        }
        Ok(n)
    });

    let mut grid = Vec::new();
    for p in (2..=pmax).filter(|&p| is_prime(p)) {
        for serre in 0..=smax {
            for splitting in [Splitting::Split, Splitting::Inert, Splitting::Ramified] {
                grid.push(QuadLocalData { p, serre, splitting });
            }
        }
    }
    let quadratic = run_grid("coherence/quadratic", grid, |data| {
        let orbital = orbital_quadratic(&data);
        let bass = bass_local_factor(&BassLocalData::from_quadratic(&data));
        if orbital == bass {
            Ok(1)
        } else {
            Err(format!("{data:?}: orbital={orbital} bass={bass}"))
        }
    });
    merge("coherence", [cubic, quadratic])
}

/// Squarefree `d` in `[-dmax, -1]`.
pub fn imaginary_d(dmax: i64) -> Vec<i64> {
    (1..=dmax).map(|k| -k).filter(|&d| is_squarefree(d as i128)).collect()
}

/// Squarefree `d < 0` whose field discriminant has absolute value at most `discmax`.
pub fn imaginary_d_by_disc(discmax: u64) -> Vec<i64> {
    imaginary_d(discmax as i64)
        .into_iter()
        .filter(|&d| fundamental_discriminant(d).is_ok_and(|disc| disc.unsigned_abs() <= discmax as u128))
        .collect()
}

fn order_grid(ds: Vec<i64>, fmax: u64) -> Vec<(i64, u64)> {
    ds.into_iter().flat_map(|d| (1..=fmax).map(move |f| (d, f))).collect()
}

/// Both sides of the orbital/overorder identity, from the oracle alone.
pub fn yun(dmax: i64, fmax: u64) -> SuiteResult {
    run_grid("yun", order_grid(imaginary_d(dmax), fmax), |(d, f)| {
        let check = yun_check(d, f).map_err(|e| format!("d={d} f={f}: {e}"))?;
        if check.holds {
            Ok(1)
        } else {
            Err(format!("d={d} f={f}: lhs={} rhs={}", check.lhs, check.rhs))
        }
    })
}

/// Exact monoid size against both global bounds.
pub fn audit(discmax: u64, fmax: u64) -> SuiteResult {
    run_grid("audit", order_grid(imaginary_d_by_disc(discmax), fmax), |(d, f)| {
        bound_audit(d, f).map(|_| 1).map_err(|e| format!("d={d} f={f}: {e}"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids() {
        assert_eq!(imaginary_d(13), vec![-1, -2, -3, -5, -6, -7, -10, -11, -13]);
        // -1 -> -4, -2 -> -8, -3 -> -3, -5 -> -20, -6 -> -24, -7 -> -7
        assert_eq!(imaginary_d_by_disc(8), vec![-1, -2, -3, -7]);
    }

    #[test]
    fn small_suites_pass() {
        assert!(coherence(-10, 10, 11, 3).passed());
        assert!(yun(3, 6).passed());
        assert!(audit(20, 6).passed());
    }

    #[test]
    fn failure_reporting_keeps_grid_order() {
        let r = run_grid("t", (0..100).collect(), |i: i32| if i % 7 == 3 { Err(format!("i={i}")) } else { Ok(1) });
        assert_eq!(r.failures, 14);
        assert_eq!(r.first_failure.as_deref(), Some("i=3"));
        assert!(r.line().starts_with("FAIL t: 14 of 100"));
    }
}
