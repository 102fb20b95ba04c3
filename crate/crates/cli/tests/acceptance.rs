//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use clmonoid::arith::is_perfect_square;
use clmonoid::bounds::{cs_bound, cs_delta_e};
use clmonoid::local::{cs_invariants, CsCaseId};
use clmonoid::oracle::{form_class_number, overorder_lattice, yun_check};
use clmonoid_cli::verify;

type Outcome = Result<String, String>;

fn quad_json(args: &[&str]) -> Result<serde_json::Value, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_clmonoid"))
        .arg("quad")
        .args(args)
        .arg("--json")
        .env_remove("CLMONOID_PI_BITS")
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(String::from_utf8_lossy(&out.stderr).into_owned());
    }
    serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())
}

fn expect(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn c1_real_quadratic() -> Outcome {
    let v = quad_json(&["--d", "2", "--f", "3", "--h", "1", "--cl-r", "1"])?;
    expect(v["bound_bass"] == "5" && v["bound_overorder"] == "2", || format!("got {v}"))?;
    Ok("bounds 5 and 2".into())
}

fn c2_gaussian_order() -> Outcome {
    let v = quad_json(&["--d", "-1", "--f", "9"])?;
    let (b1, b2) = (&v["bound_bass"], &v["bound_overorder"]);
    expect(b1 == "17" && b2 == "18", || format!("bounds {b1}, {b2}"))?;
    expect(v["cl_R"]["value"] == "6" && v["cl_R"]["source"] == "oracle", || format!("Cl(R) {}", v["cl_R"]))?;
    expect(form_class_number(-324) == Ok(6), || "h(-324) != 6".into())?;
    expect(v["icm_exact"] == "9" && v["icm_within_bounds"] == true, || format!("icm {}", v["icm_exact"]))?;
    Ok("bounds 17 and 18, Cl(R) = 6, ICM = 9".into())
}

fn c3_yun_identity() -> Outcome {
    let check = yun_check(-1, 9).map_err(|e| e.to_string())?;
    expect(check.lhs == BigUint::from(17u32) && check.holds, || format!("{check:?}"))?;
    // (6*2 + 2*2 + 1*1) / 1 straight from the overorder lattice
    let lattice = overorder_lattice(-1, 9).map_err(|e| e.to_string())?;
    let terms: Vec<(u64, u32)> = lattice.entries.iter().rev().map(|e| (e.class_number, 4 / e.units)).collect();
    expect(terms == [(6, 2), (2, 2), (1, 1)], || format!("terms {terms:?}"))?;

    let grid = verify::yun(13, 30);
    expect(grid.passed(), || grid.line())?;
    Ok(format!("Z[9i]: 17 = 17; grid {} orders", grid.checks))
}

fn c4_prime_to_six() -> Outcome {
    let mut n = 0;
    for m in -10_000..=10_000 {
        let d = cs_invariants(m).delta_phi;
        expect(d % 2 != 0 && d % 3 != 0, || format!("m = {m}: D_phi = {d}"))?;
        n += 1;
    }
    Ok(format!("{n} values of m"))
}

fn c5_coherence() -> Outcome {
    let r = verify::coherence(-200, 200, 50, 6);
    expect(r.passed(), || r.line())?;
    Ok(format!("{} checks", r.checks))
}

fn c6_reconstruction() -> Outcome {
    for m in -500..=500 {
        let r = cs_bound(m).map_err(|e| format!("m = {m}: {e}"))?;
        let (abs_e, _) = cs_delta_e(m).map_err(|e| e.to_string())?;
        let abs_phi = r.delta_phi.unsigned_abs();
        expect(abs_e == r.abs_delta_e && abs_phi % abs_e == 0, || format!("m = {m}: {abs_e} !| {abs_phi}"))?;
        let quotient = (abs_phi / abs_e) as i128;
        expect(is_perfect_square(quotient).is_some(), || format!("m = {m}: quotient {quotient}"))?;

        let mut rebuilt = BigUint::one();
        let mut index = BigUint::one();
        for c in &r.prime_cases {
            let (p, ord) = (BigUint::from(c.case.p), c.case.ord_delta);
            let exponent = match c.case.case_id {
                CsCaseId::Case1Maximal | CsCaseId::Case1 if ord == 2 || ord == 4 => ord,
                CsCaseId::Case2 if ord == 3 => 3,
                CsCaseId::Case3OddOrd | CsCaseId::Case3EvenInert | CsCaseId::Case4 => ord,
                _ => return Err(format!("m = {m}: {:?}", c.case)),
            };
            rebuilt *= p.pow(exponent);
            index *= BigUint::from(c.case.p).pow(c.case.serre);
        }
        expect(rebuilt == BigUint::from(abs_phi), || format!("m = {m}: rebuilt {rebuilt} != {abs_phi}"))?;
        expect(&index * &index * abs_e == BigUint::from(abs_phi), || format!("m = {m}: index {index}"))?;
    }
    Ok("1001 values of m".into())
}

fn c7_simple_bound_dominance() -> Outcome {
    let mut n = 0;
    for m in -500..=500 {
        let r = cs_bound(m).map_err(|e| format!("m = {m}: {e}"))?;
        if r.signed_delta_e() <= 3075 {
            continue;
        }
        // bound_main <= (2/243) sqrt(D_phi) D_E^(3/2)  <=>  243^2 bound_main^2 <= 4 D_phi D_E^3
        let main = BigInt::from(r.bound_main.clone());
        let de = BigInt::from(r.abs_delta_e);
        let lhs = BigInt::from(243 * 243) * &main * &main;
        let rhs = 4 * BigInt::from(r.delta_phi) * &de * &de * &de;
        expect(lhs <= rhs, || format!("m = {m}: bound_main = {main}, D_E = {de}"))?;
        n += 1;
    }
    expect(n > 0, || "no m with D_E > 3075".into())?;
    Ok(format!("{n} values of m with D_E > 3075"))
}

fn c8_audit() -> Outcome {
    let r = verify::audit(200, 30);
    expect(r.passed(), || r.line())?;
    Ok(format!("{} orders", r.checks))
}

fn main() {
    let criteria: [(&str, Duration, fn() -> Outcome); 8] = [
        ("1 real quadratic bounds", Duration::from_secs(1), c1_real_quadratic),
        ("2 Z[9i] bounds and oracle", Duration::from_secs(1), c2_gaussian_order),
        ("3 orbital/overorder identity", Duration::from_secs(30), c3_yun_identity),
        ("4 gcd(D_phi, 6) = 1", Duration::from_secs(5), c4_prime_to_six),
        ("5 formula coherence", Duration::MAX, c5_coherence),
        ("6 discriminant reconstruction", Duration::MAX, c6_reconstruction),
        ("7 simple bound dominance", Duration::MAX, c7_simple_bound_dominance),
        ("8 bound audit", Duration::from_secs(60), c8_audit),
    ];
    let mut failed = 0;
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let verdict = match outcome {
            Ok(detail) if elapsed < limit => format!("PASS [{name}] {detail} ({elapsed:.2?})"),
            Ok(detail) => format!("FAIL [{name}] {detail}, but took {elapsed:.2?} (limit {limit:?})"),
            Err(e) => format!("FAIL [{name}] {e} ({elapsed:.2?})"),
        };
        if verdict.starts_with("FAIL") {
            failed += 1;
        }
        println!("{verdict}");
    }
    println!("acceptance: {} of 8 criteria passed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
