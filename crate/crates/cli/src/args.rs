use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use clmonoid::classnum::DEFAULT_PI_BITS;

#[derive(Debug, Parser)]
#[command(name = "clmonoid", version, about = "Upper bounds for ideal class monoids")]
pub struct Cli {
    /// Starting precision (bits) of the pi enclosure.
    #[arg(long, global = true, env = "CLMONOID_PI_BITS", default_value_t = DEFAULT_PI_BITS)]
    pub pi_bits: u32,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bound for the Cappell-Shaneson order of trace m.
    #[command(allow_negative_numbers = true)]
    Cs {
        #[arg(long)]
        m: i32,
        #[arg(long)]
        json: bool,
    },
    /// Both bounds for the quadratic order Z + f O_E, E = Q(sqrt d).
    #[command(allow_negative_numbers = true)]
    Quad {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        f: u64,
        /// Class number of the maximal order.
        #[arg(long)]
        h: Option<u64>,
        /// Class number of the order itself.
        #[arg(long = "cl-r")]
        cl_r: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// One row per m in [from, to], written as CSV or JSON lines.
    #[command(allow_negative_numbers = true)]
    Sweep {
        #[arg(long)]
        from: i32,
        #[arg(long)]
        to: i32,
        #[arg(long, default_value_t = 0)]
        threads: usize,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = SweepFormat::Csv)]
        format: SweepFormat,
        /// Print the summary as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite; exits nonzero on the first failure.
    Verify(VerifyArgs),
    /// Minkowski class-number bound for a field of the given shape.
    ClassnumBound {
        #[arg(long)]
        degree: u32,
        #[arg(long, default_value_t = 0)]
        r2: u32,
        /// Absolute value of the field discriminant.
        #[arg(long)]
        disc: u128,
        #[arg(long)]
        json: bool,
    },
    /// Reduced primitive forms and class number of a negative discriminant.
    #[command(allow_negative_numbers = true)]
    OracleHform {
        #[arg(long)]
        disc: i64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepFormat {
    Csv,
    Jsonl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Coherence,
    Yun,
    Audit,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    /// Range of m for the cubic coherence checks, as `a:b`.
    #[arg(long, allow_hyphen_values = true, default_value = "-200:200")]
    pub mrange: MRange,
    /// Largest prime of the quadratic coherence grid.
    #[arg(long, default_value_t = 50)]
    pub pmax: u128,
    /// Largest Serre invariant of the quadratic coherence grid.
    #[arg(long, default_value_t = 6)]
    pub smax: u32,
    /// Use every squarefree d in [-dmax, -1].
    #[arg(long, default_value_t = 13)]
    pub dmax: i64,
    #[arg(long, default_value_t = 30)]
    pub fmax: u64,
    /// Audit every imaginary quadratic field with |disc| <= discmax.
    #[arg(long, default_value_t = 200)]
    pub discmax: u64,
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
    #[arg(long)]
    pub json: bool,
}

/// Inclusive range `a:b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MRange {
    pub from: i32,
    pub to: i32,
}

impl FromStr for MRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, b) = s.split_once(':').ok_or_else(|| format!("expected a:b, got {s:?}"))?;
        let from = a.trim().parse().map_err(|e| format!("{a:?}: {e}"))?;
        let to = b.trim().parse().map_err(|e| format!("{b:?}: {e}"))?;
        if from > to {
            return Err(format!("empty range {from}:{to}"));
        }
        Ok(MRange { from, to })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_negative_arguments() {
        let cli = Cli::try_parse_from(["clmonoid", "quad", "--d", "-1", "--f", "9"]).unwrap();
        assert!(matches!(cli.command, Command::Quad { d: -1, f: 9, .. }));
        let cli = Cli::try_parse_from(["clmonoid", "verify", "coherence", "--mrange", "-200:200"]).unwrap();
        match cli.command {
            Command::Verify(v) => assert_eq!(v.mrange, MRange { from: -200, to: 200 }),
            _ => panic!(),
        }
        let cli = Cli::try_parse_from(["clmonoid", "sweep", "--from", "-20", "--to", "20"]).unwrap();
        assert!(matches!(cli.command, Command::Sweep { from: -20, to: 20, .. }));
    }

    #[test]
    fn mrange_rejects_garbage() {
        assert!("5".parse::<MRange>().is_err());
        assert!("3:1".parse::<MRange>().is_err());
        assert!("a:1".parse::<MRange>().is_err());
        assert_eq!("-3:-3".parse::<MRange>(), Ok(MRange { from: -3, to: -3 }));
    }
}
