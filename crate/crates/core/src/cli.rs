//! Command-line front end: sequence tables, determinant tables, path weights
//! and the verification suites.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 bad parameters.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::catalanseq::{catalan_conv, narayana_conv_series, FamilyId};
use crate::error::Error;
use crate::exactring::{Integer, Ring};
use crate::golden;
use crate::hankel::{hankel_table, HankelValue};
use crate::pathoracle::PathOracle;
use crate::report::Suite;
use crate::theoremcheck::{
    check_corollaries, check_external_closed_forms, check_lemma_random, check_lemma_structured, check_paths,
    check_series_identities, check_thm1, check_thm2, check_thm3, check_thm4, CorollaryBounds,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "catalan-hankel",
    version,
    about = "Exact Hankel determinants of Catalan and Narayana convolution powers"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print C_{k,n} or C_{k,n}(t) for n = 0..=n-max
    Seq(SeqArgs),
    /// Print D_{K,M}(N) or D_{K,M,t}(N) for N = 0..=size-max
    Hankel(HankelArgs),
    /// Run verification suites, one JSON report per line
    Verify(VerifyArgs),
    /// Weight of the non-negative up-down paths from (0,0) to (j,k)
    Paths(PathsArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyArg {
    CatalanConv,
    NarayanaConv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Plain,
    Csv,
    Json,
}

#[derive(Args, Debug)]
pub struct SeqArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub k: u32,
    #[arg(long)]
    pub n_max: usize,
    /// Evaluate polynomial values at t = this integer
    #[arg(long, allow_hyphen_values = true)]
    pub t_eval: Option<i64>,
    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,
}

#[derive(Args, Debug)]
pub struct HankelArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub k: u32,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub shift: i64,
    #[arg(long)]
    pub size_max: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub t_eval: Option<i64>,
    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteName {
    Lemma,
    Thm1,
    Thm2,
    Thm3,
    Thm4,
    Corollaries,
    Identities,
    Prop1,
    Golden,
    All,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: SuiteName,
    #[arg(long)]
    pub k_max: Option<usize>,
    #[arg(long)]
    pub m_max: Option<usize>,
    #[arg(long)]
    pub n_max: Option<usize>,
    /// Truncation order for the series identities
    #[arg(long)]
    pub order: Option<usize>,
    /// Number of random series for the lemma suite
    #[arg(long, default_value_t = 50)]
    pub random: usize,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct PathsArgs {
    #[arg(long)]
    pub j: usize,
    #[arg(long)]
    pub k: usize,
    /// List every path with its weight
    #[arg(long)]
    pub list: bool,
    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,
}

fn family(f: FamilyArg, k: u32) -> FamilyId {
    match f {
        FamilyArg::CatalanConv => FamilyId::CatalanConv(k),
        FamilyArg::NarayanaConv => FamilyId::NarayanaConv(k),
    }
}

fn is_usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::PathCapExceeded { .. }
            | Error::InvalidConvolutionIndex(_)
            | Error::NegativeSize(_)
            | Error::NegativeBinomial(_)
            | Error::InsufficientCoefficients { .. }
    )
}

fn fail(err: &mut dyn Write, e: &Error) -> i32 {
    let _ = writeln!(err, "error: {e}");
    if is_usage_error(e) {
        EXIT_USAGE
    } else {
        EXIT_CHECK_FAILED
    }
}

fn eval_value(v: HankelValue, t: Option<i64>) -> HankelValue {
    match (v, t) {
        (HankelValue::Poly(p), Some(t)) => HankelValue::Int(p.eval(&Integer::from(t))),
        (v, _) => v,
    }
}

fn csv_cell(v: &HankelValue) -> String {
    match v {
        HankelValue::Int(i) => i.to_string(),
        HankelValue::Poly(p) => format!("\"{}\"", p.to_json()),
    }
}

fn write_table(out: &mut dyn Write, rows: &[HankelValue], format: OutputFormat) -> std::io::Result<()> {
    match format {
        OutputFormat::Plain => {
            let parts: Vec<String> = rows.iter().map(HankelValue::render).collect();
            writeln!(out, "({})", parts.join(", "))
        }
        OutputFormat::Csv => {
            writeln!(out, "n,value")?;
            for (n, v) in rows.iter().enumerate() {
                writeln!(out, "{n},{}", csv_cell(v))?;
            }
            Ok(())
        }
        OutputFormat::Json => {
            for (n, v) in rows.iter().enumerate() {
                writeln!(out, "{}", json!({ "n": n, "value": v.to_json() }))?;
            }
            Ok(())
        }
    }
}

fn seq_values(args: &SeqArgs) -> crate::Result<Vec<HankelValue>> {
    let k = args.k as i64;
    match args.family {
        FamilyArg::CatalanConv => (0..=args.n_max)
            .map(|n| catalan_conv(k, n as i64).map(HankelValue::Int))
            .collect(),
        FamilyArg::NarayanaConv => {
            let s = narayana_conv_series(k, args.n_max + 1)?;
            Ok(s.coeffs().iter().cloned().map(HankelValue::Poly).collect())
        }
    }
}

pub fn cmd_seq(args: &SeqArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match seq_values(args) {
        Ok(values) => {
            let values: Vec<_> = values.into_iter().map(|v| eval_value(v, args.t_eval)).collect();
            io_status(write_table(out, &values, args.format), err)
        }
        Err(e) => fail(err, &e),
    }
}

pub fn cmd_hankel(args: &HankelArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match hankel_table(family(args.family, args.k), args.shift, args.size_max) {
        Ok(values) => {
            let values: Vec<_> = values.into_iter().map(|v| eval_value(v, args.t_eval)).collect();
            io_status(write_table(out, &values, args.format), err)
        }
        Err(e) => fail(err, &e),
    }
}

pub fn cmd_paths(args: &PathsArgs, oracle: &PathOracle, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = (|| -> crate::Result<std::io::Result<()>> {
        let weight = oracle.a_weight(args.j, args.k)?;
        let paths = if args.list {
            oracle.enumerate_paths(args.j, args.k)?
        } else {
            Vec::new()
        };
        Ok((|| -> std::io::Result<()> {
            match args.format {
                OutputFormat::Plain => {
                    for p in &paths {
                        writeln!(out, "{p}:{}", p.weight())?;
                    }
                    writeln!(out, "{weight}")
                }
                OutputFormat::Csv => {
                    if args.list {
                        writeln!(out, "path,weight")?;
                        for p in &paths {
                            writeln!(out, "\"{p}\",\"{}\"", p.weight().to_json())?;
                        }
                        Ok(())
                    } else {
                        writeln!(out, "j,k,weight")?;
                        writeln!(out, "{},{},\"{}\"", args.j, args.k, weight.to_json())
                    }
                }
                OutputFormat::Json => {
                    for p in &paths {
                        writeln!(
                            out,
                            "{}",
                            json!({ "path": p.to_string(), "weight": p.weight().to_json() })
                        )?;
                    }
                    writeln!(
                        out,
                        "{}",
                        json!({ "j": args.j, "k": args.k, "weight": weight.to_json() })
                    )
                }
            }
        })())
    })();
    match result {
        Ok(io) => io_status(io, err),
        Err(e) => fail(err, &e),
    }
}

fn io_status(r: std::io::Result<()>, err: &mut dyn Write) -> i32 {
    match r {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_CHECK_FAILED
        }
    }
}

/// Suite names in run order for `--suite all`.
const ALL_SUITES: [SuiteName; 9] = [
    SuiteName::Golden,
    SuiteName::Lemma,
    SuiteName::Thm1,
    SuiteName::Thm2,
    SuiteName::Thm3,
    SuiteName::Thm4,
    SuiteName::Corollaries,
    SuiteName::Identities,
    SuiteName::Prop1,
];

fn suite_label(s: SuiteName) -> &'static str {
    match s {
        SuiteName::Lemma => "lemma",
        SuiteName::Thm1 => "thm1",
        SuiteName::Thm2 => "thm2",
        SuiteName::Thm3 => "thm3",
        SuiteName::Thm4 => "thm4",
        SuiteName::Corollaries => "corollaries",
        SuiteName::Identities => "identities",
        SuiteName::Prop1 => "prop1",
        SuiteName::Golden => "golden",
        SuiteName::All => "all",
    }
}

fn shift_suite(
    check: fn(usize, usize, usize) -> crate::Result<Suite>,
    k_max: usize,
    m_range: std::ops::RangeInclusive<usize>,
    n_max: usize,
) -> crate::Result<Suite> {
    let mut suite = Suite::new();
    for k in 1..=k_max {
        for m in m_range.clone() {
            suite.extend(check(k, m, n_max)?);
        }
    }
    Ok(suite)
}

/// Build one named suite. Unset bounds fall back to the acceptance bounds.
pub fn run_suite(name: SuiteName, args: &VerifyArgs, oracle: &PathOracle) -> crate::Result<Suite> {
    let k = |d: usize| args.k_max.unwrap_or(d);
    let m = |d: usize| args.m_max.unwrap_or(d);
    let n = |d: usize| args.n_max.unwrap_or(d);
    match name {
        SuiteName::Golden => golden::check_all(),
        SuiteName::Lemma => {
            let mut s = check_lemma_random(args.random, args.seed, m(3), n(5));
            s.extend(check_lemma_structured(k(4), m(3), n(5))?);
            Ok(s)
        }
        SuiteName::Thm1 => shift_suite(check_thm1, k(4), 0..=m(3), n(6)),
        SuiteName::Thm2 => shift_suite(check_thm2, k(4), 0..=m(3), n(6)),
        SuiteName::Thm3 => shift_suite(check_thm3, k(3), 0..=m(2), n(4)),
        SuiteName::Thm4 => shift_suite(check_thm4, k(3), 1..=m(2), n(4)),
        SuiteName::Corollaries => {
            let d = CorollaryBounds::default();
            let b = CorollaryBounds {
                catalan_unit_size: n(d.catalan_unit_size),
                even_k_max: k(d.even_k_max),
                even_size_max: n(d.even_size_max),
                odd_k_max: k(d.odd_k_max),
                odd_size_max: n(d.odd_size_max),
                poly_k_max: k(d.poly_k_max),
                poly_n_max: n(d.poly_n_max),
                narayana_unit_size: n(d.narayana_unit_size),
            };
            let mut s = check_corollaries(&b)?;
            s.extend(check_external_closed_forms(n(8), n(6))?);
            Ok(s)
        }
        SuiteName::Identities => check_series_identities(args.order.unwrap_or(12), k(6)),
        SuiteName::Prop1 => check_paths(oracle, n(15), k(6)),
        SuiteName::All => {
            let mut s = Suite::new();
            for name in ALL_SUITES {
                s.extend(run_suite(name, args, oracle)?);
            }
            Ok(s)
        }
    }
}

pub fn cmd_verify(args: &VerifyArgs, oracle: &PathOracle, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let names: Vec<SuiteName> = match args.suite {
        SuiteName::All => ALL_SUITES.to_vec(),
        one => vec![one],
    };
    let mut total = 0;
    let mut failed = 0;
    for name in names {
        let suite = match run_suite(name, args, oracle) {
            Ok(s) => s,
            Err(e) => return fail(err, &e),
        };
        for r in &suite.reports {
            if writeln!(out, "{}", r.to_json_line()).is_err() {
                return EXIT_CHECK_FAILED;
            }
        }
        let f = suite.failures().count();
        let _ = writeln!(err, "{}: {} checks, {} failed", suite_label(name), suite.len(), f);
        total += suite.len();
        failed += f;
    }
    let _ = writeln!(err, "total: {total} checks, {failed} failed");
    if failed == 0 {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let oracle = PathOracle::from_env();
    match &cli.command {
        Command::Seq(a) => cmd_seq(a, out, err),
        Command::Hankel(a) => cmd_hankel(a, out, err),
        Command::Verify(a) => cmd_verify(a, &oracle, out, err),
        Command::Paths(a) => cmd_paths(a, &oracle, out, err),
    }
}

/// Parse `argv` and run, returning the process exit code.
pub fn run_from_args<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(argv) {
        Ok(cli) => run(&cli, out, err),
        Err(e) if e.use_stderr() => {
            let _ = write!(err, "{}", e.render());
            EXIT_USAGE
        }
        Err(e) => {
            let _ = write!(out, "{}", e.render());
            EXIT_OK
        }
    }
}

/// Report-line parser used by tests and downstream tooling.
pub fn parse_report_line(line: &str) -> Option<Value> {
    serde_json::from_str(line).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["catalan-hankel"];
        argv.extend_from_slice(args);
        let code = run_from_args(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn seq_narayana() {
        let (code, out, _) = run_args(&["seq", "--family", "narayana-conv", "--k", "3", "--n-max", "3"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "(1, 2 + t, 3 + 5*t + t^2, 4 + 14*t + 9*t^2 + t^3)");
    }

    #[test]
    fn seq_catalan_and_eval() {
        let (_, out, _) = run_args(&["seq", "--family", "catalan-conv", "--k", "1", "--n-max", "4"]);
        assert_eq!(out.trim(), "(1, 1, 2, 5, 14)");
        let (_, out, _) = run_args(&[
            "seq",
            "--family",
            "narayana-conv",
            "--k",
            "2",
            "--n-max",
            "2",
            "--t-eval",
            "1",
        ]);
        assert_eq!(out.trim(), "(1, 2, 5)");
    }

    #[test]
    fn seq_bad_k_is_usage_error() {
        let (code, _, _) = run_args(&["seq", "--family", "catalan-conv", "--k", "0", "--n-max", "4"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn hankel_tables() {
        let (_, out, _) = run_args(&[
            "hankel",
            "--family",
            "catalan-conv",
            "--k",
            "4",
            "--shift",
            "-2",
            "--size-max",
            "8",
        ]);
        assert_eq!(out.trim(), "(1, 0, 0, -1, -1, 2, 2, -3, -3)");
        let (_, out, _) = run_args(&[
            "hankel",
            "--family",
            "narayana-conv",
            "--k",
            "4",
            "--shift",
            "0",
            "--size-max",
            "3",
        ]);
        assert_eq!(out.trim(), "(1, 1, -1 - t^2, -t^2 - t^4)");
        let (_, out, _) = run_args(&[
            "hankel",
            "--family",
            "catalan-conv",
            "--k",
            "4",
            "--size-max",
            "0",
            "--format",
            "csv",
        ]);
        assert_eq!(out, "n,value\n0,1\n");
    }

    #[test]
    fn csv_and_json_polynomials() {
        let (_, out, _) = run_args(&["seq", "--family", "narayana-conv", "--n-max", "2", "--format", "csv"]);
        assert_eq!(out, "n,value\n0,\"[1]\"\n1,\"[1]\"\n2,\"[1,1]\"\n");
        let (_, out, _) = run_args(&["seq", "--family", "narayana-conv", "--n-max", "1", "--format", "json"]);
        assert_eq!(out, "{\"n\":0,\"value\":[1]}\n{\"n\":1,\"value\":[1]}\n");
    }

    #[test]
    fn paths_output() {
        let (_, out, _) = run_args(&["paths", "--j", "6", "--k", "0"]);
        assert_eq!(out.trim(), "1 + 3*t + t^2");
        let (_, out, _) = run_args(&["paths", "--j", "4", "--k", "0", "--list"]);
        assert_eq!(out, "(1,2,1,0):t\n(1,0,1,0):1\n1 + t\n");
        let (code, out, _) = run_args(&["paths", "--j", "3", "--k", "0"]);
        assert_eq!((code, out.trim()), (0, "0"));
        let (code, _, _) = run_args(&["paths", "--j", "40", "--k", "0"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn verify_usage_errors() {
        let (code, _, _) = run_args(&["verify", "--suite", "bogus"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn verify_small_thm1() {
        let (code, out, err) = run_args(&[
            "verify", "--suite", "thm1", "--k-max", "2", "--m-max", "1", "--n-max", "3",
        ]);
        assert_eq!(code, 0, "{err}");
        assert!(out.lines().all(|l| parse_report_line(l).unwrap()["status"] == "pass"));
        assert!(err.contains("thm1:"));
    }
}
