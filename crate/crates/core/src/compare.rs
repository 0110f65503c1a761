//! Exact counts against the closed-form asymptotic, and the log-log fit of
//! the relative error.

use rug::Float;

use crate::a000898::closed_form_estimate;
use crate::egf::{exact_terms_at, render_int_scientific, ExpPolynomial};
use crate::error::{Error, Result};
use crate::numerics::{LnValue, PrecisionContext};

/// Default cap on `n` for comparison runs.
pub const DEFAULT_MAX_N: u64 = 200_000;

/// Indices of the published comparison table.
pub const TABLE_N: [u64; 4] = [100, 1_000, 10_000, 100_000];

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonRow {
    pub n: u64,
    /// Exact `I_n` in scientific notation.
    pub exact_str: String,
    /// Corrected closed-form `I_n*` in scientific notation.
    pub estimate_str: String,
    pub ln_exact: Float,
    pub ln_estimate: Float,
    /// `I_n*/I_n - 1`.
    pub ratio_minus_one: Float,
    /// `(I_n*/I_n - 1) n`.
    pub scaled_error: Float,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompareOptions {
    pub digits: usize,
    pub max_n: u64,
}

impl Default for CompareOptions {
    fn default() -> Self {
        Self {
            digits: 5,
            max_n: DEFAULT_MAX_N,
        }
    }
}

/// One row per requested `n`, ascending.
///
/// All exact terms come from a single pass of the recurrence up to the
/// largest `n`.
pub fn compare_rows(
    n_list: &[u64],
    opts: &CompareOptions,
    ctx: &PrecisionContext,
) -> Result<Vec<ComparisonRow>> {
    if opts.digits == 0 {
        return Err(Error::Precondition("digits must be at least 1".into()));
    }
    if let Some(&n) = n_list.iter().find(|&&n| n == 0) {
        return Err(Error::Precondition(format!(
            "n must be at least 1 (got {n})"
        )));
    }
    if let Some(&n) = n_list.iter().find(|&&n| n > opts.max_n) {
        return Err(Error::ResourceCap { n, cap: opts.max_n });
    }
    let mut ordered = n_list.to_vec();
    ordered.sort_unstable();

    let exact = exact_terms_at(&ExpPolynomial::symmetric_involutions(), &ordered);
    ordered
        .iter()
        .map(|&n| {
            let idx = exact
                .binary_search_by_key(&n, |(k, _)| *k)
                .expect("term computed for every requested n");
            let term = &exact[idx].1;
            let ln_exact = LnValue::of_integer(term, ctx)?;
            let estimate = closed_form_estimate(n, true, ctx)?.value;
            let ratio_minus_one = estimate.ratio_minus_one(&ln_exact);
            let scaled_error = ratio_minus_one.clone() * n;
            Ok(ComparisonRow {
                n,
                exact_str: render_int_scientific(term, opts.digits)?,
                estimate_str: estimate.render(opts.digits, ctx)?,
                ln_exact: ln_exact.into_ln(),
                ln_estimate: estimate.into_ln(),
                ratio_minus_one,
                scaled_error,
            })
        })
        .collect()
}

/// Least-squares fit of `ln |I*/I - 1|` against `ln n`.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorOrderFit {
    pub rows: Vec<ComparisonRow>,
    pub slope: f64,
    pub intercept: f64,
}

/// Requires at least three values of `n` spanning at least one decade.
pub fn fit_error_order(
    n_list: &[u64],
    opts: &CompareOptions,
    ctx: &PrecisionContext,
) -> Result<ErrorOrderFit> {
    if n_list.len() < 3 {
        return Err(Error::Precondition(format!(
            "error-order fit needs at least 3 values of n (got {})",
            n_list.len()
        )));
    }
    let lo = n_list.iter().copied().min().unwrap_or(0);
    let hi = n_list.iter().copied().max().unwrap_or(0);
    if lo == 0 || hi < lo.saturating_mul(10) {
        return Err(Error::Precondition(format!(
            "error-order fit needs n spread over at least one decade (got {lo}..{hi})"
        )));
    }
    let rows = compare_rows(n_list, opts, ctx)?;
    let points: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| !r.ratio_minus_one.is_zero())
        .map(|r| {
            let err = r.ratio_minus_one.clone().abs().ln().to_f64();
            ((r.n as f64).ln(), err)
        })
        .collect();
    if points.len() < 3 {
        return Err(Error::DegenerateFit(format!(
            "only {} of {} rows have nonzero error",
            points.len(),
            rows.len()
        )));
    }
    let (slope, intercept) = least_squares(&points);
    Ok(ErrorOrderFit {
        rows,
        slope,
        intercept,
    })
}

fn least_squares(points: &[(f64, f64)]) -> (f64, f64) {
    let k = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / k;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = points.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    let slope = sxy / sxx;
    (slope, mean_y - slope * mean_x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_fit() {
        let pts = [(0.0, 1.0), (1.0, -1.0), (2.0, -3.0)];
        assert_eq!(least_squares(&pts), (-2.0, 1.0));
    }

    #[test]
    fn small_rows() {
        let ctx = PrecisionContext::default();
        let rows = compare_rows(&[1000, 1, 100], &CompareOptions::default(), &ctx).unwrap();
        let ns: Vec<u64> = rows.iter().map(|r| r.n).collect();
        assert_eq!(ns, vec![1, 100, 1000]);
        assert_eq!(rows[0].exact_str, "2.0000e+0");
        assert_eq!(rows[1].exact_str, "1.3506e+99");
        assert_eq!(rows[1].estimate_str, "1.3520e+99");
        assert_eq!(rows[2].exact_str, "2.6836e+1452");
        assert_eq!(rows[2].estimate_str, "2.6839e+1452");
    }

    #[test]
    fn n_equal_one_uses_the_formula() {
        let ctx = PrecisionContext::default();
        let rows = compare_rows(&[1], &CompareOptions::default(), &ctx).unwrap();
        // e^{sqrt 2} / sqrt(2e) * (2/e)^{1/2} * (1 + sqrt(2)/3)
        let direct = 2f64.sqrt().exp() / (2.0 * std::f64::consts::E).sqrt()
            * (2.0 / std::f64::consts::E).sqrt()
            * (1.0 + 2f64.sqrt() / 3.0);
        assert!((rows[0].ln_estimate.to_f64() - direct.ln()).abs() < 1e-14);
    }

    #[test]
    fn guards() {
        let ctx = PrecisionContext::default();
        let opts = CompareOptions {
            digits: 5,
            max_n: 500,
        };
        assert_eq!(
            compare_rows(&[100, 501], &opts, &ctx).unwrap_err(),
            Error::ResourceCap { n: 501, cap: 500 }
        );
        assert!(compare_rows(&[0], &opts, &ctx).is_err());
        let zero_digits = CompareOptions { digits: 0, ..opts };
        assert!(compare_rows(&[10], &zero_digits, &ctx).is_err());
        assert!(matches!(
            fit_error_order(&[1000, 1000, 1000], &CompareOptions::default(), &ctx),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            fit_error_order(&[10, 100], &CompareOptions::default(), &ctx),
            Err(Error::Precondition(_))
        ));
    }
}
