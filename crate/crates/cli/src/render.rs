//! JSON and text rendering. Integers that can exceed 2^53 are written as
//! decimal strings; rationals as `"n/d"` next to a rounded `_decimal` field.

use std::fmt::Write;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use clmonoid::bounds::{ClassNumberInput, CsReport, QuadReport};
use clmonoid::classnum::ClassNumberBound;
use clmonoid::local::Splitting;
use clmonoid::oracle::QuadForm;

pub fn rational_str(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// `r` rounded to 6 significant digits.
pub fn decimal6(r: &BigRational) -> f64 {
    let x = r.to_f64().unwrap_or(f64::NAN);
    format!("{x:.5e}").parse().unwrap_or(x)
}

pub fn splitting_name(s: Splitting) -> &'static str {
    match s {
        Splitting::Split => "split",
        Splitting::Inert => "inert",
        Splitting::Ramified => "ramified",
    }
}

#[derive(Debug, Serialize)]
pub struct CsPrimeJson {
    pub p: String,
    pub case: &'static str,
    pub ord_delta: u32,
    pub serre: u32,
    pub orbital: String,
    pub a_factor: String,
}

#[allow(non_snake_case)]
#[derive(Debug, Serialize)]
pub struct CsJson {
    pub m: i32,
    pub delta_phi: String,
    pub c_phi: String,
    pub abs_delta_E: String,
    pub delta_E_sign: i8,
    pub r2: u32,
    pub primes: Vec<CsPrimeJson>,
    pub A: String,
    pub floor_M: String,
    pub classnum_bound: String,
    pub bound_main: String,
    pub bound_closed_form: String,
    pub bound_closed_form_decimal: f64,
    pub bound_simple: Option<String>,
    pub bound_simple_decimal: Option<f64>,
}

impl From<&CsReport> for CsJson {
    fn from(r: &CsReport) -> Self {
        CsJson {
            m: r.m,
            delta_phi: r.delta_phi.to_string(),
            c_phi: r.c_phi.to_string(),
            abs_delta_E: r.abs_delta_e.to_string(),
            delta_E_sign: r.delta_e_sign,
            r2: r.r2,
            primes: r
                .prime_cases
                .iter()
                .map(|c| CsPrimeJson {
                    p: c.case.p.to_string(),
                    case: c.case.case_id.tag(),
                    ord_delta: c.case.ord_delta,
                    serre: c.case.serre,
                    orbital: c.orbital.to_string(),
                    a_factor: c.a_factor.to_string(),
                })
                .collect(),
            A: r.a.to_string(),
            floor_M: r.floor_m.to_string(),
            classnum_bound: r.classnum_bound.to_string(),
            bound_main: r.bound_main.to_string(),
            bound_closed_form: rational_str(&r.bound_closed_form),
            bound_closed_form_decimal: decimal6(&r.bound_closed_form),
            bound_simple: r.bound_simple.as_ref().map(rational_str),
            bound_simple_decimal: r.bound_simple.as_ref().map(decimal6),
        }
    }
}

pub fn cs_text(r: &CsReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "m = {}", r.m);
    let _ = writeln!(s, "delta_phi = {}", r.delta_phi);
    let _ = writeln!(s, "c_phi = {}", r.c_phi);
    let _ = writeln!(s, "delta_E = {}", r.signed_delta_e());
    let _ = writeln!(s, "r2 = {}", r.r2);
    for c in &r.prime_cases {
        let _ = writeln!(
            s,
            "  p = {}: {} ord = {} S = {} orbital = {} A-factor = {}",
            c.case.p,
            c.case.case_id.tag(),
            c.case.ord_delta,
            c.case.serre,
            c.orbital,
            c.a_factor
        );
    }
    let _ = writeln!(s, "A = {}", r.a);
    let _ = writeln!(s, "floor(M) = {}", r.floor_m);
    let _ = writeln!(s, "classnum_bound = {}", r.classnum_bound);
    let _ = writeln!(s, "bound_main = {}", r.bound_main);
    let _ = writeln!(
        s,
        "bound_closed_form = {} (~{})",
        rational_str(&r.bound_closed_form),
        decimal6(&r.bound_closed_form)
    );
    match &r.bound_simple {
        Some(b) => {
            let _ = writeln!(s, "bound_simple = {} (~{})", rational_str(b), decimal6(b));
        }
        None => {
            let _ = writeln!(s, "bound_simple = n/a (delta_E <= 3075)");
        }
    }
    s
}

#[derive(Debug, Serialize)]
pub struct ClassNumberJson {
    pub value: String,
    pub source: &'static str,
}

impl From<&ClassNumberInput> for ClassNumberJson {
    fn from(c: &ClassNumberInput) -> Self {
        let source = match c {
            ClassNumberInput::Supplied(_) => "supplied",
            ClassNumberInput::Oracle(_) => "oracle",
            ClassNumberInput::Bound(_) => "minkowski_bound",
        };
        ClassNumberJson { value: c.value().to_string(), source }
    }
}

#[derive(Debug, Serialize)]
pub struct QuadFactorJson {
    pub p: String,
    pub serre: u32,
    pub splitting: &'static str,
    pub factor: String,
}

#[allow(non_snake_case)]
#[derive(Debug, Serialize)]
pub struct QuadJson {
    pub d: i64,
    pub f: u64,
    pub fund_disc: String,
    pub local_factors: Vec<QuadFactorJson>,
    pub class_number: ClassNumberJson,
    pub cl_R: Option<ClassNumberJson>,
    pub bound_bass: String,
    pub bound_overorder: Option<String>,
    pub overorder_count: String,
    pub icm_exact: Option<String>,
    pub icm_within_bounds: Option<bool>,
}

/// A quadratic report plus the exact monoid size when the oracle applies.
#[derive(Debug, Clone)]
pub struct QuadOutput {
    pub report: QuadReport,
    pub icm_exact: Option<u64>,
}

impl QuadOutput {
    pub fn icm_within_bounds(&self) -> Option<bool> {
        let icm = BigUint::from(self.icm_exact?);
        let r = &self.report;
        Some(icm <= r.bound_bass && r.bound_overorder.as_ref().is_none_or(|b| icm <= *b))
    }
}

impl From<&QuadOutput> for QuadJson {
    fn from(o: &QuadOutput) -> Self {
        let r = &o.report;
        QuadJson {
            d: r.d,
            f: r.conductor,
            fund_disc: r.fund_disc.to_string(),
            local_factors: r
                .local_factors
                .iter()
                .map(|l| QuadFactorJson {
                    p: l.p.to_string(),
                    serre: l.serre,
                    splitting: splitting_name(l.splitting),
                    factor: l.factor().to_string(),
                })
                .collect(),
            class_number: (&r.class_number_input).into(),
            cl_R: r.cl_r_input.as_ref().map(Into::into),
            bound_bass: r.bound_bass.to_string(),
            bound_overorder: r.bound_overorder.as_ref().map(ToString::to_string),
            overorder_count: r.conductor_factor_count.to_string(),
            icm_exact: o.icm_exact.map(|n| n.to_string()),
            icm_within_bounds: o.icm_within_bounds(),
        }
    }
}

fn class_number_text(c: &ClassNumberInput) -> String {
    match c {
        ClassNumberInput::Supplied(h) => format!("{h} (supplied)"),
        ClassNumberInput::Oracle(h) => format!("{h} (form oracle)"),
        ClassNumberInput::Bound(b) => format!("<= {b} (Minkowski bound)"),
    }
}

pub fn quad_text(o: &QuadOutput) -> String {
    let r = &o.report;
    let mut s = String::new();
    let _ = writeln!(s, "order Z + {} O_E, E = Q(sqrt({})), disc(E) = {}", r.conductor, r.d, r.fund_disc);
    for l in &r.local_factors {
        let _ = writeln!(
            s,
            "  p = {}: S = {} {} local factor = {}",
            l.p,
            l.serre,
            splitting_name(l.splitting),
            l.factor()
        );
    }
    let _ = writeln!(s, "#Cl(O_E) = {}", class_number_text(&r.class_number_input));
    match &r.cl_r_input {
        Some(c) => {
            let _ = writeln!(s, "#Cl(R) = {}", class_number_text(c));
        }
        None => {
            let _ = writeln!(s, "#Cl(R) = unknown (pass --cl-r)");
        }
    }
    let _ = writeln!(s, "bound (class number x local factors) = {}", r.bound_bass);
    match &r.bound_overorder {
        Some(b) => {
            let _ = writeln!(s, "bound (Cl(R) x overorders) = {b}");
        }
        None => {
            let _ = writeln!(s, "bound (Cl(R) x overorders) = n/a");
        }
    }
    if let Some(icm) = o.icm_exact {
        let _ = writeln!(s, "exact #ICM = {icm}");
    }
    s
}

#[allow(non_snake_case)]
#[derive(Debug, Serialize)]
pub struct ClassnumJson {
    pub degree: u32,
    pub r2: u32,
    pub abs_disc: String,
    pub floor_M: String,
    pub bound: String,
}

impl From<&ClassNumberBound> for ClassnumJson {
    fn from(b: &ClassNumberBound) -> Self {
        ClassnumJson {
            degree: b.shape.degree(),
            r2: b.shape.r2(),
            abs_disc: b.shape.abs_disc().to_string(),
            floor_M: b.floor_m.to_string(),
            bound: b.bound.to_string(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct HformJson {
    pub disc: i64,
    pub class_number: u64,
    pub units: u32,
    pub forms: Vec<[i64; 3]>,
}

pub fn hform_json(disc: i64, forms: &[QuadForm], units: u32) -> HformJson {
    HformJson {
        disc,
        class_number: forms.len() as u64,
        units,
        forms: forms.iter().map(|q| [q.a, q.b, q.c]).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn decimal_rounding() {
        let r = BigRational::new(BigInt::from(44_726_882), BigInt::from(243));
        assert_eq!(decimal6(&r), 184_061.0);
        let r = BigRational::new(BigInt::from(1), BigInt::from(3));
        assert_eq!(decimal6(&r), 0.333_333);
        assert_eq!(rational_str(&BigRational::from_integer(5.into())), "5/1");
    }
}
