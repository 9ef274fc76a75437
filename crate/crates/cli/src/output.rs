//! Rendering of reports, tables, product comparisons, and bench records in
//! the three output formats. JSON is one document per run; CSV is one
//! header line plus one row per record. Both are schema-stable.

use crate::{OutputFormat, TableKind};
use num_bigint::BigInt;
use serde::Serialize;
use trigsum::bench::BenchRecord;
use trigsum::exact::ExtendedRational;
use trigsum::verify::IdentityReport;

pub struct TableRow {
    pub n: u32,
    pub even: BigInt,
    pub odd: BigInt,
    pub tan: Option<ExtendedRational>,
}

pub struct TableOutput {
    pub kind: TableKind,
    pub max_n: u32,
    pub rows: Vec<TableRow>,
}

#[derive(Serialize)]
pub struct GaussProductOutput {
    pub factors: Vec<(i64, i64)>,
    pub exact_re: String,
    pub exact_im: String,
    pub float_cos: f64,
    pub float_sin: f64,
    pub diff_re: f64,
    pub diff_im: f64,
    pub modulus: f64,
    pub tolerance: f64,
    pub within_tolerance: bool,
    pub principal_argument: bool,
}

/// Quote a CSV field when it needs it; quotes double inside.
fn csv_field(raw: &str) -> String {
    if raw.contains(',') || raw.contains('"') || raw.contains('\n') {
        format!("\"{}\"", raw.replace('"', "\"\""))
    } else {
        raw.to_string()
    }
}

fn csv_line(fields: &[String]) -> String {
    fields
        .iter()
        .map(|f| csv_field(f))
        .collect::<Vec<_>>()
        .join(",")
}

fn json_doc<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize")
}

pub fn print_report(report: &IdentityReport, format: OutputFormat) {
    match format {
        OutputFormat::Json => println!("{}", json_doc(report)),
        OutputFormat::Csv => {
            println!(
                "theorem,n_range,samples,seed,tolerance,pole_guard,evaluated,\
                 skipped_near_pole,max_rel_err,worst_case,failures,pass,vacuous,prng,version"
            );
            println!(
                "{}",
                csv_line(&[
                    report.theorem.clone(),
                    report.n_range.clone(),
                    report.samples.to_string(),
                    report.seed.to_string(),
                    format!("{:?}", report.tolerance),
                    format!("{:?}", report.pole_guard),
                    report.evaluated.to_string(),
                    report.skipped_near_pole.to_string(),
                    format!("{:?}", report.max_rel_err),
                    serde_json::to_string(&report.worst_case).unwrap(),
                    serde_json::to_string(&report.failures).unwrap(),
                    report.pass.to_string(),
                    report.vacuous.to_string(),
                    report.prng.clone(),
                    report.version.clone(),
                ])
            );
        }
        OutputFormat::Text => {
            println!("theorem: {}", report.theorem);
            println!("n range: {}", report.n_range);
            println!("samples per n: {}", report.samples);
            println!("seed: {} (prng {})", report.seed, report.prng);
            println!("tolerance: {:?}", report.tolerance);
            println!("pole guard: {:?} rad", report.pole_guard);
            println!("evaluated: {}", report.evaluated);
            println!("skipped near poles: {}", report.skipped_near_pole);
            println!("max relative error: {:?}", report.max_rel_err);
            match &report.worst_case {
                Some(worst) => println!(
                    "worst case: n = {}, input = {}",
                    worst.n,
                    serde_json::to_string(&worst.input).unwrap()
                ),
                None => println!("worst case: none (nothing evaluated)"),
            }
            if !report.failures.is_empty() {
                println!("failures ({}):", report.failures.len());
                for f in report.failures.iter().take(10) {
                    println!(
                        "  n = {}, input = {}, lhs = {}, rhs = {}, rel_err = {:?}",
                        f.n,
                        serde_json::to_string(&f.input).unwrap(),
                        f.lhs,
                        f.rhs,
                        f.rel_err
                    );
                }
                if report.failures.len() > 10 {
                    println!("  ... and {} more", report.failures.len() - 10);
                }
            }
            println!("pass: {}", report.pass);
            if report.vacuous {
                println!("warning: vacuous pass - every drawn sample was guard-skipped");
            }
        }
    }
}

fn kind_name(kind: TableKind) -> &'static str {
    match kind {
        TableKind::TanQuarter => "tan-quarter",
        TableKind::AltBinom => "alt-binom",
    }
}

#[derive(Serialize)]
struct RatioJson {
    infinite: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    num: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    den: Option<String>,
}

fn ratio_json(r: &ExtendedRational) -> RatioJson {
    RatioJson {
        infinite: r.is_infinite(),
        num: r.numer().map(|n| n.to_string()),
        den: r.denom().map(|d| d.to_string()),
    }
}

#[derive(Serialize)]
struct TableRowJson {
    n: u32,
    even: String,
    odd: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    tan: Option<RatioJson>,
}

#[derive(Serialize)]
struct TableJson {
    kind: &'static str,
    max_n: u32,
    rows: Vec<TableRowJson>,
}

pub fn print_table(table: &TableOutput, format: OutputFormat) {
    let with_tan = matches!(table.kind, TableKind::TanQuarter);
    match format {
        OutputFormat::Json => {
            let doc = TableJson {
                kind: kind_name(table.kind),
                max_n: table.max_n,
                rows: table
                    .rows
                    .iter()
                    .map(|r| TableRowJson {
                        n: r.n,
                        even: r.even.to_string(),
                        odd: r.odd.to_string(),
                        tan: r.tan.as_ref().map(ratio_json),
                    })
                    .collect(),
            };
            println!("{}", json_doc(&doc));
        }
        OutputFormat::Csv => {
            println!("{}", if with_tan { "n,even,odd,tan" } else { "n,even,odd" });
            for r in &table.rows {
                let mut fields = vec![r.n.to_string(), r.even.to_string(), r.odd.to_string()];
                if let Some(tan) = &r.tan {
                    fields.push(tan.to_string());
                }
                println!("{}", csv_line(&fields));
            }
        }
        OutputFormat::Text => {
            println!("{}", if with_tan { "n\teven\todd\ttan" } else { "n\teven\todd" });
            for r in &table.rows {
                match &r.tan {
                    Some(tan) => println!("{}\t{}\t{}\t{}", r.n, r.even, r.odd, tan),
                    None => println!("{}\t{}\t{}", r.n, r.even, r.odd),
                }
            }
        }
    }
}

pub fn print_gauss_product(out: &GaussProductOutput, format: OutputFormat) {
    match format {
        OutputFormat::Json => println!("{}", json_doc(out)),
        OutputFormat::Csv => {
            println!(
                "factors,exact_re,exact_im,float_cos,float_sin,diff_re,diff_im,\
                 modulus,tolerance,within_tolerance,principal_argument"
            );
            let factors = out
                .factors
                .iter()
                .map(|(x, y)| format!("{x},{y}"))
                .collect::<Vec<_>>()
                .join(";");
            println!(
                "{}",
                csv_line(&[
                    factors,
                    out.exact_re.clone(),
                    out.exact_im.clone(),
                    format!("{:?}", out.float_cos),
                    format!("{:?}", out.float_sin),
                    format!("{:?}", out.diff_re),
                    format!("{:?}", out.diff_im),
                    format!("{:?}", out.modulus),
                    format!("{:?}", out.tolerance),
                    out.within_tolerance.to_string(),
                    out.principal_argument.to_string(),
                ])
            );
        }
        OutputFormat::Text => {
            let factors = out
                .factors
                .iter()
                .map(|(x, y)| format!("({x}, {y})"))
                .collect::<Vec<_>>()
                .join(" ");
            println!("factors: {factors}");
            println!("exact:   ({}, {})", out.exact_re, out.exact_im);
            println!("float:   ({:?}, {:?})", out.float_cos, out.float_sin);
            println!("diff:    ({:?}, {:?})", out.diff_re, out.diff_im);
            println!("modulus: {:?}", out.modulus);
            println!(
                "within tolerance {:?}: {}",
                out.tolerance,
                if out.within_tolerance { "yes" } else { "no" }
            );
            if out.principal_argument {
                println!(
                    "notice: a zero real part made the float route use the principal argument"
                );
            }
        }
    }
}

pub fn print_bench(record: &BenchRecord, format: OutputFormat) {
    match format {
        OutputFormat::Json => println!("{}", json_doc(record)),
        OutputFormat::Csv => {
            println!(
                "theorem,n,input,reps,naive_time,closed_time,speedup,residual,\
                 naive_iters,closed_iters,raw_naive,raw_closed,timer_warning"
            );
            let join = |xs: &[f64]| {
                xs.iter()
                    .map(|t| format!("{t:?}"))
                    .collect::<Vec<_>>()
                    .join(";")
            };
            println!(
                "{}",
                csv_line(&[
                    record.theorem.clone(),
                    record.n.to_string(),
                    serde_json::to_string(&record.input).unwrap(),
                    record.reps.to_string(),
                    format!("{:?}", record.naive_time),
                    format!("{:?}", record.closed_time),
                    format!("{:?}", record.speedup),
                    format!("{:?}", record.residual),
                    record.naive_iters.to_string(),
                    record.closed_iters.to_string(),
                    join(&record.raw_naive),
                    join(&record.raw_closed),
                    record.timer_warning.to_string(),
                ])
            );
        }
        OutputFormat::Text => {
            println!("theorem: {}", record.theorem);
            println!("n: {}", record.n);
            println!(
                "input: {}",
                serde_json::to_string(&record.input).unwrap()
            );
            println!("reps: {}", record.reps);
            println!(
                "naive:  {:.3e} s/eval (median of {} reps, batch {})",
                record.naive_time, record.reps, record.naive_iters
            );
            println!(
                "closed: {:.3e} s/eval (median of {} reps, batch {})",
                record.closed_time, record.reps, record.closed_iters
            );
            println!("speedup: {:.3e}", record.speedup);
            println!("residual: {:?}", record.residual);
            if record.timer_warning {
                println!("warning: a median timing fell below 100 timer ticks");
            }
        }
    }
}
