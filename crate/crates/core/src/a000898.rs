//! Closed-form results for symmetric involutions, `I_n` with EGF
//! `exp(z^2 + 2z)` (OEIS A000898).
//!
//! Here `a(r) = 2r^2 + 2r`, so the saddle has the exact form
//! `r_n = (sqrt(2n+1) - 1)/2`, and the count admits the explicit asymptotic
//!
//! ```text
//! I_n* = e^{sqrt(2n)} / sqrt(2e) * (2n/e)^{n/2} * (1 + sqrt(2)/(3 sqrt(n)))
//! ```
//!
//! with relative error `O(1/n)`.

use rug::{Float, Integer};

use crate::egf::{ExactSequence, ExpPolynomial};
use crate::error::{Error, Result};
use crate::numerics::{LnValue, PrecisionContext};

/// Smallest `n` accepted by [`expansion_report`].
pub const EXPANSION_MIN_N: u64 = 10;

fn require_positive(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    Ok(())
}

fn rn_closed_working(n: u64, ctx: &PrecisionContext) -> Float {
    ((ctx.real(2 * n + 1)).sqrt() - 1u32) / 2u32
}

/// `r_n = (sqrt(2n+1) - 1)/2`, the positive root of `2r^2 + 2r = n`.
pub fn rn_closed(n: u64, ctx: &PrecisionContext) -> Result<Float> {
    require_positive(n)?;
    Ok(ctx.finish(rn_closed_working(n, ctx)))
}

fn rn_expansion_working(n: u64, ctx: &PrecisionContext) -> Float {
    let half_n = ctx.real(n) / 2u32;
    let sqrt_2n = ctx.real(2 * n).sqrt();
    half_n.sqrt() - 0.5f64 + (sqrt_2n * 4u32).recip()
}

/// Three-term expansion `sqrt(n/2) - 1/2 + 1/(4 sqrt(2n))` of `r_n`;
/// differs from [`rn_closed`] by `O(n^{-3/2})`.
pub fn rn_expansion(n: u64, ctx: &PrecisionContext) -> Result<Float> {
    require_positive(n)?;
    Ok(ctx.finish(rn_expansion_working(n, ctx)))
}

/// Direct and truncated values of `ln f(r_n)`, `n ln r_n` and `sqrt(b(r_n))`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpansionReport {
    pub n: u64,
    /// `r_n^2 + 2 r_n`
    pub direct_ln_f: Float,
    /// `n/2 + sqrt(n/2) - 1/2 + ln(1 + 1/(4 sqrt(2n)))`
    pub approx_ln_f: Float,
    pub direct_n_ln_r: Float,
    /// `n ln sqrt(n/2) - sqrt(n/2) + 1/(12 sqrt(2n))`
    pub approx_n_ln_r: Float,
    /// `sqrt(4 r_n^2 + 2 r_n)`
    pub direct_sqrt_b: Float,
    /// `sqrt(2n) (1 - 1/(2 sqrt(2n)))`
    pub approx_sqrt_b: Float,
}

impl ExpansionReport {
    pub fn ln_f_remainder(&self) -> Float {
        self.direct_ln_f.clone() - &self.approx_ln_f
    }

    pub fn n_ln_r_remainder(&self) -> Float {
        self.direct_n_ln_r.clone() - &self.approx_n_ln_r
    }

    pub fn sqrt_b_remainder(&self) -> Float {
        self.direct_sqrt_b.clone() - &self.approx_sqrt_b
    }

    /// `direct_sqrt_b / approx_sqrt_b - 1`.
    pub fn sqrt_b_relative_remainder(&self) -> Float {
        self.direct_sqrt_b.clone() / &self.approx_sqrt_b - 1u32
    }
}

pub fn expansion_report(n: u64, ctx: &PrecisionContext) -> Result<ExpansionReport> {
    if n < EXPANSION_MIN_N {
        return Err(Error::Precondition(format!(
            "expansion report needs n >= {EXPANSION_MIN_N} (got {n})"
        )));
    }
    let r = rn_closed_working(n, ctx);
    let nf = ctx.real(n);
    let sqrt_half_n = (nf.clone() / 2u32).sqrt();
    let sqrt_2n = (nf.clone() * 2u32).sqrt();

    let direct_ln_f = r.clone() * &r + r.clone() * 2u32;
    let approx_ln_f =
        nf.clone() / 2u32 + &sqrt_half_n - 0.5f64 + (sqrt_2n.clone() * 4u32).recip().ln_1p();

    let direct_n_ln_r = r.clone().ln() * n;
    let approx_n_ln_r =
        sqrt_half_n.clone().ln() * n - &sqrt_half_n + (sqrt_2n.clone() * 12u32).recip();

    let direct_sqrt_b = (r.clone() * &r * 4u32 + r.clone() * 2u32).sqrt();
    let approx_sqrt_b = sqrt_2n.clone() * (1u32 - (sqrt_2n * 2u32).recip());

    Ok(ExpansionReport {
        n,
        direct_ln_f: ctx.finish(direct_ln_f),
        approx_ln_f: ctx.finish(approx_ln_f),
        direct_n_ln_r: ctx.finish(direct_n_ln_r),
        approx_n_ln_r: ctx.finish(approx_n_ln_r),
        direct_sqrt_b: ctx.finish(direct_sqrt_b),
        approx_sqrt_b: ctx.finish(approx_sqrt_b),
    })
}

/// The closed-form asymptotic `I_n*`, optionally without its
/// `1 + sqrt(2)/(3 sqrt(n))` correction factor.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedFormEstimate {
    pub n: u64,
    pub with_correction: bool,
    pub value: LnValue,
}

/// `ln I_n* = sqrt(2n) - ln(2e)/2 + (n/2)(ln(2n) - 1) [+ ln(1 + sqrt(2)/(3 sqrt(n)))]`.
pub fn closed_form_estimate(
    n: u64,
    with_correction: bool,
    ctx: &PrecisionContext,
) -> Result<ClosedFormEstimate> {
    require_positive(n)?;
    let nf = ctx.real(n);
    let two_n = nf.clone() * 2u32;
    let half_ln_2e = (ctx.ln2() + 1u32) / 2u32;
    let mut ln = two_n.clone().sqrt() - half_ln_2e + (two_n.ln() - 1u32) * nf.clone() / 2u32;
    if with_correction {
        let correction = ctx.real(2).sqrt() / (nf.sqrt() * 3u32);
        ln += correction.ln_1p();
    }
    Ok(ClosedFormEstimate {
        n,
        with_correction,
        value: LnValue::from_ln(ctx.finish(ln))?,
    })
}

/// `I_0 = 1, I_1 = 2, I_n = 2(I_{n-1} + (n-1) I_{n-2})`, written out
/// independently of the generic engine so the two can be cross-checked.
pub fn recurrence_a000898(last: usize) -> ExactSequence {
    let mut terms: Vec<Integer> = Vec::with_capacity(last + 1);
    for n in 0..=last {
        let term = match n {
            0 => Integer::from(1),
            1 => Integer::from(2),
            _ => {
                let mut t = Integer::from(&terms[n - 2] * (n as u64 - 1));
                t += &terms[n - 1];
                t * 2u32
            }
        };
        terms.push(term);
    }
    ExactSequence::from_terms(ExpPolynomial::symmetric_involutions(), terms)
}
