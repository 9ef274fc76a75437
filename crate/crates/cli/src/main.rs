//! `trigsum` — verify, tabulate, and benchmark the finite trigonometric
//! identity catalog from the command line.
//!
//! Exit codes: 0 = pass, 1 = identity/residual failure, 2 = usage or
//! domain error.

mod output;
mod parse;

use clap::{Parser, Subcommand, ValueEnum};
use trigsum::bench::time_pair;
use trigsum::closed_form::{
    gauss_product_closed, gauss_product_closed_principal, DEFAULT_POLE_GUARD, DEFAULT_TOLERANCE,
};
use trigsum::exact::{alt_binom_even, alt_binom_odd, gauss_product, tan_quarter, FactorList};
use trigsum::verify::{sweep, SampleDomain, SamplePlan, SampleValue, TheoremId};

use output::{GaussProductOutput, TableOutput, TableRow};
use parse::{parse_angle, parse_factors, parse_range};

/// Float deviation allowed before `gauss-product` fails, as a fraction of
/// the product's modulus.
const GAUSS_PRODUCT_TOLERANCE: f64 = 1e-6;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    /// n, even sum, odd sum, tan(nπ/4).
    TanQuarter,
    /// n, even sum, odd sum.
    AltBinom,
}

#[derive(Parser)]
#[command(
    name = "trigsum",
    version,
    about = "Verifies finite trigonometric series identities by comparing naive summation against closed forms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep one identity over seeded samples and report residuals.
    Verify {
        /// Identity to check (t2_1_cos, t2_1_sin, t2_1_pyth, c2_1_cos,
        /// c2_1_sin, t2_2, l2_1, t2_3, t2_4, t2_5, t2_6).
        #[arg(long)]
        theorem: TheoremId,
        /// Inclusive order range, `a..b` or a single value.
        #[arg(long, value_parser = parse_range)]
        n: (u32, u32),
        /// Samples drawn per n.
        #[arg(long, default_value_t = 500)]
        samples: u32,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Relative-error bound |lhs − rhs| / max(|lhs|, |rhs|, 1).
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
        /// Skip samples closer than this (radians) to a singularity.
        #[arg(long = "pole-guard", default_value_t = DEFAULT_POLE_GUARD)]
        pole_guard: f64,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Print the exact alternating-binomial table, optionally with tan(nπ/4).
    Table {
        #[arg(long, value_enum)]
        kind: TableKind,
        /// Last row, inclusive; rows run n = 0..max-n.
        #[arg(long = "max-n")]
        max_n: u32,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Multiply Gaussian-integer factors exactly and compare the float route.
    GaussProduct {
        /// Factors as `x1,y1;x2,y2;...`.
        #[arg(long)]
        factors: String,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Time the naive summation against the closed form for one input.
    Bench {
        #[arg(long)]
        theorem: TheoremId,
        #[arg(long)]
        n: u32,
        /// Angle in radians (decimal or `pi/k` style) for the angular
        /// identities; the integer x for t2_1_*.
        #[arg(long)]
        x: Option<String>,
        /// Integer y, required by t2_1_* only.
        #[arg(long)]
        y: Option<i64>,
        #[arg(long, default_value_t = 5)]
        reps: u32,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
        #[arg(long = "pole-guard", default_value_t = DEFAULT_POLE_GUARD)]
        pole_guard: f64,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
}

fn main() {
    std::process::exit(real_main());
}

fn real_main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version print to stdout and exit 0; everything else
            // is a usage error.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            2
        }
    }
}

fn run(cli: Cli) -> Result<i32, String> {
    match cli.command {
        Command::Verify {
            theorem,
            n,
            samples,
            seed,
            tol,
            pole_guard,
            format,
        } => {
            let mut plan = SamplePlan::new(theorem, n);
            plan.samples_per_n = samples;
            plan.seed = seed;
            plan.tolerance = tol;
            plan.pole_guard = pole_guard;
            let report = sweep(&plan).map_err(|e| e.to_string())?;
            output::print_report(&report, format);
            Ok(if report.pass { 0 } else { 1 })
        }
        Command::Table {
            kind,
            max_n,
            format,
        } => {
            let mut rows = Vec::with_capacity(max_n as usize + 1);
            for n in 0..=max_n {
                let tan = match kind {
                    TableKind::TanQuarter => Some(tan_quarter(n).map_err(|e| e.to_string())?),
                    TableKind::AltBinom => None,
                };
                rows.push(TableRow {
                    n,
                    even: alt_binom_even(n),
                    odd: alt_binom_odd(n),
                    tan,
                });
            }
            output::print_table(&TableOutput { kind, max_n, rows }, format);
            Ok(0)
        }
        Command::GaussProduct { factors, format } => {
            let pairs = parse_factors(&factors)?;
            let list = FactorList::from_pairs(&pairs).map_err(|e| e.to_string())?;
            let exact = gauss_product(&list);
            let principal_argument = pairs.iter().any(|&(x, _)| x == 0);
            let float = if principal_argument {
                gauss_product_closed_principal(&list)
            } else {
                gauss_product_closed(&list)
            }
            .map_err(|e| e.to_string())?;
            let modulus = num_traits::ToPrimitive::to_f64(&exact.norm())
                .ok_or("product modulus exceeds the float range")?
                .sqrt();
            let exact_re = num_traits::ToPrimitive::to_f64(&exact.re).unwrap_or(f64::NAN);
            let exact_im = num_traits::ToPrimitive::to_f64(&exact.im).unwrap_or(f64::NAN);
            let diff = (float.cos_part - exact_re, float.sin_part - exact_im);
            let within_tolerance =
                diff.0.abs().max(diff.1.abs()) <= GAUSS_PRODUCT_TOLERANCE * modulus;
            let out = GaussProductOutput {
                factors: pairs,
                exact_re: exact.re.to_string(),
                exact_im: exact.im.to_string(),
                float_cos: float.cos_part,
                float_sin: float.sin_part,
                diff_re: diff.0,
                diff_im: diff.1,
                modulus,
                tolerance: GAUSS_PRODUCT_TOLERANCE,
                within_tolerance,
                principal_argument,
            };
            output::print_gauss_product(&out, format);
            Ok(if within_tolerance { 0 } else { 1 })
        }
        Command::Bench {
            theorem,
            n,
            x,
            y,
            reps,
            tol,
            pole_guard,
            format,
        } => {
            let input = bench_input(theorem, x.as_deref(), y)?;
            let record =
                time_pair(theorem, n, &input, reps, pole_guard).map_err(|e| e.to_string())?;
            output::print_bench(&record, format);
            Ok(if record.residual <= tol { 0 } else { 1 })
        }
    }
}

fn bench_input(
    theorem: TheoremId,
    x: Option<&str>,
    y: Option<i64>,
) -> Result<SampleValue, String> {
    match theorem.domain() {
        SampleDomain::Angular => {
            let x = x.ok_or_else(|| format!("{theorem} needs --x <angle>"))?;
            if y.is_some() {
                return Err(format!("{theorem} takes no --y"));
            }
            Ok(SampleValue::Angle { x: parse_angle(x)? })
        }
        SampleDomain::IntPair => {
            let x = x.ok_or_else(|| format!("{theorem} needs integer --x and --y"))?;
            let x: i64 = x
                .trim()
                .parse()
                .map_err(|_| format!("{theorem} needs an integer --x, got '{x}'"))?;
            let y = y.ok_or_else(|| format!("{theorem} needs integer --x and --y"))?;
            Ok(SampleValue::IntPair { x, y })
        }
        SampleDomain::NOnly => {
            if x.is_some() || y.is_some() {
                return Err(format!("{theorem} takes no input beyond --n"));
            }
            Ok(SampleValue::NOnly)
        }
        SampleDomain::Factors => Err(format!(
            "{theorem} takes a factor list and cannot be benchmarked; see gauss-product"
        )),
    }
}
