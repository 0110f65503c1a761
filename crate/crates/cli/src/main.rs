//! `hayman`: exact terms, saddle-point estimates and asymptotic comparisons
//! for sequences with EGF `exp(P(z))`.

mod output;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand};
use hayman_core::{
    a_of_r, b_of_r, closed_form_estimate, compare_rows, fit_error_order,
    hayman_coefficient_estimate, parse_poly, render_int_scientific, solve_saddle, CompareOptions,
    ComparisonRow, Error, ExpPolynomial, PrecisionContext, TermStream,
};

use output::{real, write_record, Format, RowWriter};

/// Significant digits for reals that are not scientific renderings.
const REAL_DIGITS: usize = 20;

const ROW_COLUMNS: [&str; 5] = ["n", "exact", "estimate", "ratio_minus_one", "scaled_error"];

#[derive(Debug, Parser)]
#[command(name = "hayman", version, about)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Output encoding.
    #[arg(long, value_enum, default_value = "lines", global = true)]
    format: Format,
    /// Significant digits in scientific renderings.
    #[arg(long, default_value_t = 5, global = true)]
    digits: usize,
    /// Working precision in bits.
    #[arg(long, default_value_t = PrecisionContext::DEFAULT_BITS, global = true)]
    bits: u32,
    /// Refuse any n above this cap.
    #[arg(long, default_value_t = hayman_core::compare::DEFAULT_MAX_N, global = true)]
    max_n: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact terms I_0..I_N of the sequence with EGF exp(P(z)).
    Exact {
        /// Ascending comma-separated coefficients of P, e.g. "0,2,1".
        #[arg(long)]
        poly: String,
        /// Last index N.
        #[arg(long)]
        n: u64,
        /// Print terms in scientific notation with --digits digits.
        #[arg(long)]
        scientific: bool,
    },
    /// Saddle-point estimate of I_n (plus the closed forms when P = z^2+2z).
    Estimate {
        #[arg(long, default_value = "0,2,1")]
        poly: String,
        #[arg(long)]
        n: u64,
    },
    /// Exact I_n against the corrected closed-form estimate for z^2+2z.
    Compare {
        #[arg(long, value_delimiter = ',', default_value = "100,1000,10000,100000")]
        n_list: Vec<u64>,
    },
    /// Fit ln|I*/I - 1| against ln n.
    FitError {
        #[arg(long, value_delimiter = ',', default_value = "1000,10000,100000")]
        n_list: Vec<u64>,
    },
    /// Solve a(r) = n and report r, the residual, b(r) and ln f(r).
    Saddle {
        #[arg(long, default_value = "0,2,1")]
        poly: String,
        #[arg(long)]
        n: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let out = BufWriter::new(stdout.lock());
    match run(cli, out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli, out: impl Write) -> Result<()> {
    let common = &cli.common;
    let ctx = PrecisionContext::new(common.bits)?;
    if common.digits == 0 {
        bail!("--digits must be at least 1");
    }
    match &cli.command {
        Command::Exact {
            poly,
            n,
            scientific,
        } => {
            let poly = parse_poly(poly)?;
            cap(*n, common.max_n)?;
            cmd_exact(
                &poly,
                *n,
                scientific.then_some(common.digits),
                common.format,
                out,
            )
        }
        Command::Estimate { poly, n } => {
            let poly = parse_poly(poly)?;
            cap(*n, common.max_n)?;
            cmd_estimate(&poly, *n, common, &ctx, out)
        }
        Command::Compare { n_list } => {
            let rows = compare_rows(n_list, &options(common), &ctx)?;
            let mut w = RowWriter::new(common.format, &ROW_COLUMNS, out)?;
            for row in &rows {
                w.row(&row_cells(row))?;
            }
            w.finish()?;
            Ok(())
        }
        Command::FitError { n_list } => cmd_fit_error(n_list, common, &ctx, out),
        Command::Saddle { poly, n } => {
            let poly = parse_poly(poly)?;
            cmd_saddle(&poly, *n, common.format, &ctx, out)
        }
    }
}

fn options(common: &Common) -> CompareOptions {
    CompareOptions {
        digits: common.digits,
        max_n: common.max_n,
    }
}

fn cap(n: u64, max_n: u64) -> Result<(), Error> {
    if n > max_n {
        return Err(Error::ResourceCap { n, cap: max_n });
    }
    Ok(())
}

fn row_cells(row: &ComparisonRow) -> Vec<String> {
    vec![
        row.n.to_string(),
        row.exact_str.clone(),
        row.estimate_str.clone(),
        real(&row.ratio_minus_one, REAL_DIGITS),
        real(&row.scaled_error, REAL_DIGITS),
    ]
}

fn cmd_exact(
    poly: &ExpPolynomial,
    last: u64,
    digits: Option<usize>,
    format: Format,
    out: impl Write,
) -> Result<()> {
    let mut w = RowWriter::new(format, &["n", "exact"], out)?;
    for (n, term) in TermStream::new(poly.clone())
        .enumerate()
        .take(last as usize + 1)
    {
        let value = match digits {
            // zero terms (e.g. odd n for exp(z^2)) have no scientific form
            Some(d) if term > 0 => render_int_scientific(&term, d)?,
            _ => term.to_string(),
        };
        w.row(&[n.to_string(), value])?;
    }
    w.finish()?;
    Ok(())
}

fn cmd_estimate(
    poly: &ExpPolynomial,
    n: u64,
    common: &Common,
    ctx: &PrecisionContext,
    out: impl Write,
) -> Result<()> {
    let est = hayman_coefficient_estimate(poly, n, ctx)?;
    let mut fields = vec![
        ("n", n.to_string()),
        ("r", real(&est.saddle.r, REAL_DIGITS)),
        ("ln_coefficient", real(est.ln_coefficient.ln(), REAL_DIGITS)),
        ("ln_count", real(est.ln_count.ln(), REAL_DIGITS)),
        ("count", est.ln_count.render(common.digits, ctx)?),
    ];
    if *poly == ExpPolynomial::symmetric_involutions() {
        for (key, corrected) in [("closed_form", true), ("closed_form_uncorrected", false)] {
            let cf = closed_form_estimate(n, corrected, ctx)?;
            fields.push((key, cf.value.render(common.digits, ctx)?));
        }
    }
    write_record(common.format, &fields, out)
}

fn cmd_fit_error(
    n_list: &[u64],
    common: &Common,
    ctx: &PrecisionContext,
    mut out: impl Write,
) -> Result<()> {
    let fit = fit_error_order(n_list, &options(common), ctx)?;
    let slope = format!("{}", fit.slope);
    let intercept = format!("{}", fit.intercept);
    match common.format {
        Format::Json => {
            let rows: Vec<serde_json::Value> = fit
                .rows
                .iter()
                .map(|r| {
                    ROW_COLUMNS
                        .iter()
                        .zip(row_cells(r))
                        .map(|(k, v)| (k.to_string(), serde_json::Value::String(v)))
                        .collect::<serde_json::Map<_, _>>()
                        .into()
                })
                .collect();
            let doc = serde_json::json!({ "rows": rows, "slope": slope, "intercept": intercept });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        }
        format => {
            let mut w = RowWriter::new(format, &ROW_COLUMNS, out)?;
            for row in &fit.rows {
                w.row(&row_cells(row))?;
            }
            let mut out = w.finish()?;
            if format == Format::Csv {
                writeln!(out)?;
            }
            write_record(format, &[("slope", slope), ("intercept", intercept)], out)?;
        }
    }
    Ok(())
}

fn cmd_saddle(
    poly: &ExpPolynomial,
    n: u64,
    format: Format,
    ctx: &PrecisionContext,
    out: impl Write,
) -> Result<()> {
    let s = solve_saddle(poly, n, ctx)?;
    let r = ctx.real(&s.r);
    let fields = [
        ("n", n.to_string()),
        ("r", real(&s.r, REAL_DIGITS)),
        ("a", real(&a_of_r(poly, &r), REAL_DIGITS)),
        ("residual", real(&s.residual, 6)),
        ("b", real(&b_of_r(poly, &r), REAL_DIGITS)),
        ("ln_f", real(&poly.eval(&r), REAL_DIGITS)),
    ];
    write_record(format, &fields, out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Result<String> {
        let cli = Cli::try_parse_from(std::iter::once("hayman").chain(args.iter().copied()))?;
        let mut buf = Vec::new();
        run(cli, &mut buf)?;
        Ok(String::from_utf8(buf)?)
    }

    #[test]
    fn exact_lines() {
        let out = run_args(&["exact", "--poly", "0,2,1", "--n", "9"]).unwrap();
        assert_eq!(out.lines().count(), 10);
        assert_eq!(out.lines().last(), Some("9\t168992"));
    }

    #[test]
    fn exact_scientific_keeps_zero_terms() {
        let out = run_args(&["exact", "--poly", "0,0,1", "--n", "3", "--scientific"]).unwrap();
        assert_eq!(out, "0\t1.0000e+0\n1\t0\n2\t2.0000e+0\n3\t0\n");
    }

    #[test]
    fn caps_and_bad_flags() {
        assert!(run_args(&["exact", "--poly", "0,1", "--n", "11", "--max-n", "10"]).is_err());
        assert!(run_args(&["saddle", "--poly", "0,1", "--n", "3", "--bits", "32"]).is_err());
        assert!(run_args(&["compare", "--n-list", "10", "--digits", "0"]).is_err());
        assert!(run_args(&["saddle", "--poly", "1,1", "--n", "3"]).is_err());
    }
}
