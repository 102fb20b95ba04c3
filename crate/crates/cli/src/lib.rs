//! Command-line front end for `clmonoid`.

pub mod args;
pub mod render;
pub mod sweep;
pub mod verify;

use std::fs::File;
use std::io::Write;

use anyhow::{Context, Result};

use clmonoid::bounds::{cs_bound_with_precision, quad_bound, quad_overorder_bound};
use clmonoid::classnum::{class_number_upper_bound_with_precision, FieldShape};
use clmonoid::oracle::{icm_exact, reduced_forms, unit_count};

use args::{Cli, Command, Suite, VerifyArgs};
use render::{CsJson, QuadJson, QuadOutput};

/// `quad_bound` plus the exact monoid size for imaginary fields. Real
/// fields need `cl_r`, since the second bound cannot be formed without it.
pub fn quad_output(d: i64, f: u64, h: Option<u64>, cl_r: Option<u64>) -> Result<QuadOutput> {
    if cl_r.is_none() {
        quad_overorder_bound(d, f, None).context("pass --cl-r")?;
    }
    let report = quad_bound(d, f, h, cl_r)?;
    let icm_exact = if d < 0 { Some(icm_exact(d, f)?) } else { None };
    Ok(QuadOutput { report, icm_exact })
}

fn print_json<T: serde::Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn with_threads<T: Send>(threads: usize, job: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build()?;
    Ok(pool.install(job))
}

fn run_verify(v: &VerifyArgs) -> Vec<verify::SuiteResult> {
    let mut results = Vec::new();
    if matches!(v.suite, Suite::Coherence | Suite::All) {
        results.push(verify::coherence(v.mrange.from, v.mrange.to, v.pmax, v.smax));
    }
    if matches!(v.suite, Suite::Yun | Suite::All) {
        results.push(verify::yun(v.dmax, v.fmax));
    }
    if matches!(v.suite, Suite::Audit | Suite::All) {
        results.push(verify::audit(v.discmax, v.fmax));
    }
    results
}

/// Runs one command. `Ok(false)` means a verification suite failed.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<bool> {
    match &cli.command {
        Command::Cs { m, json } => {
            let report = cs_bound_with_precision(*m, cli.pi_bits)?;
            if *json {
                print_json(out, &CsJson::from(&report))?;
            } else {
                write!(out, "{}", render::cs_text(&report))?;
            }
        }
        Command::Quad { d, f, h, cl_r, json } => {
            let o = quad_output(*d, *f, *h, *cl_r)?;
            if *json {
                print_json(out, &QuadJson::from(&o))?;
            } else {
                write!(out, "{}", render::quad_text(&o))?;
            }
        }
        Command::Sweep { from, to, threads, out: path, format, json } => {
            let reports = with_threads(*threads, || sweep::sweep_reports(*from, *to, cli.pi_bits))??;
            let summary = sweep::summarize(*from, *to, &reports);
            match path {
                Some(path) => {
                    let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
                    sweep::write_rows(&reports, *format, file)
                        .with_context(|| format!("writing {}", path.display()))?;
                    if *json {
                        print_json(out, &summary)?;
                    } else {
                        writeln!(
                            out,
                            "{} rows written to {}; {} with delta_E > 3075",
                            summary.rows,
                            path.display(),
                            summary.simple_bound_rows
                        )?;
                    }
                }
                None => {
                    sweep::write_rows(&reports, *format, &mut *out)?;
                    eprintln!("{} rows; {} with delta_E > 3075", summary.rows, summary.simple_bound_rows);
                }
            }
        }
        Command::Verify(v) => {
            let results = with_threads(v.threads, || run_verify(v))?;
            if v.json {
                print_json(out, &results)?;
            } else {
                for r in &results {
                    writeln!(out, "{}", r.line())?;
                }
            }
            return Ok(results.iter().all(verify::SuiteResult::passed));
        }
        Command::ClassnumBound { degree, r2, disc, json } => {
            let shape = FieldShape::new(*degree, *r2, *disc)?;
            let b = class_number_upper_bound_with_precision(&shape, cli.pi_bits);
            if *json {
                print_json(out, &render::ClassnumJson::from(&b))?;
            } else {
                writeln!(out, "floor(M) = {}", b.floor_m)?;
                writeln!(out, "class number bound = {}", b.bound)?;
            }
        }
        Command::OracleHform { disc, json } => {
            let forms = reduced_forms(*disc)?;
            let units = unit_count(*disc);
            if *json {
                print_json(out, &render::hform_json(*disc, &forms, units))?;
            } else {
                writeln!(out, "h({disc}) = {}, units = {units}", forms.len())?;
                for q in &forms {
                    writeln!(out, "  ({}, {}, {})", q.a, q.b, q.c)?;
                }
            }
        }
    }
    Ok(true)
}
