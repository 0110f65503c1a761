use std::cmp::Ordering;
use std::fmt;
use std::ops::{Div, Mul};

use rug::ops::Pow;
use rug::{Float, Integer};

use super::precision::PrecisionContext;
use crate::egf::format_scientific;
use crate::error::{Error, Result};

/// A positive quantity stored as its natural logarithm.
///
/// Products and powers stay in the log domain; only [`render_ln_scientific`]
/// exponentiates, and then only the fractional part of the decimal exponent.
#[derive(Debug, Clone, PartialEq)]
pub struct LnValue {
    ln: Float,
}

impl LnValue {
    pub fn from_ln(ln: Float) -> Result<Self> {
        if !ln.is_finite() {
            return Err(Error::Precondition(format!(
                "log-domain value must be finite, got {ln}"
            )));
        }
        Ok(Self { ln })
    }

    /// `ln x` for a positive integer, rounded to the context precision.
    pub fn of_integer(x: &Integer, ctx: &PrecisionContext) -> Result<Self> {
        if *x <= 0 {
            return Err(Error::Precondition(format!(
                "log-domain value needs a positive integer, got {x}"
            )));
        }
        Ok(Self {
            ln: ctx.finish(ctx.real(x).ln()),
        })
    }

    /// `ln x` for a positive real.
    pub fn of_real(x: &Float) -> Result<Self> {
        if x.is_sign_negative() || x.is_zero() || !x.is_finite() {
            return Err(Error::Precondition(format!(
                "log-domain value needs a positive finite real, got {x}"
            )));
        }
        Ok(Self { ln: x.clone().ln() })
    }

    pub fn one(ctx: &PrecisionContext) -> Self {
        Self {
            ln: Float::new(ctx.bits()),
        }
    }

    pub fn ln(&self) -> &Float {
        &self.ln
    }

    pub fn into_ln(self) -> Float {
        self.ln
    }

    /// `self^k`, i.e. the logarithm scaled by `k`.
    pub fn pow(&self, k: &Float) -> Self {
        Self {
            ln: Float::with_val(self.ln.prec().max(k.prec()), &self.ln * k),
        }
    }

    /// `self / other - 1`, evaluated as `expm1(ln self - ln other)` so small
    /// relative differences keep full precision.
    pub fn ratio_minus_one(&self, other: &LnValue) -> Float {
        let prec = self.ln.prec().max(other.ln.prec());
        Float::with_val(prec, &self.ln - &other.ln).exp_m1()
    }

    pub fn render(&self, digits: usize, ctx: &PrecisionContext) -> Result<String> {
        render_ln_scientific(self, digits, ctx)
    }
}

impl Mul for &LnValue {
    type Output = LnValue;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &LnValue) -> LnValue {
        let prec = self.ln.prec().max(rhs.ln.prec());
        LnValue {
            ln: Float::with_val(prec, &self.ln + &rhs.ln),
        }
    }
}

impl Div for &LnValue {
    type Output = LnValue;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &LnValue) -> LnValue {
        let prec = self.ln.prec().max(rhs.ln.prec());
        LnValue {
            ln: Float::with_val(prec, &self.ln - &rhs.ln),
        }
    }
}

impl PartialOrd for LnValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.ln.partial_cmp(&other.ln)
    }
}

impl fmt::Display for LnValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "exp({})", self.ln.to_string_radix(10, Some(20)))
    }
}

/// Scientific rendering of a log-domain value with `digits` significant
/// digits, rounding half to even.
///
/// With `L = ln v / ln 10`, the exponent is `floor(L)` and the significand
/// `10^(L - floor(L))`. Each attempt is repeated with 64 extra bits; the
/// string is returned once both agree, otherwise precision doubles up to
/// [`PrecisionContext::MAX_BITS`].
pub fn render_ln_scientific(
    value: &LnValue,
    digits: usize,
    ctx: &PrecisionContext,
) -> Result<String> {
    if digits == 0 {
        return Err(Error::Precondition("digits must be at least 1".into()));
    }
    let mut prec = ctx.working();
    loop {
        let first = render_at(value, digits, prec);
        let audit = render_at(value, digits, prec + 64);
        if first == audit {
            return Ok(first);
        }
        if prec >= PrecisionContext::MAX_BITS {
            return Err(Error::Precision { bits: prec });
        }
        prec = (prec * 2).min(PrecisionContext::MAX_BITS);
    }
}

fn render_at(value: &LnValue, digits: usize, prec: u32) -> String {
    let ln10 = Float::with_val(prec, 10).ln();
    let decimal_log = Float::with_val(prec, &value.ln) / &ln10;
    let floor = decimal_log.clone().floor();
    let mut exponent = floor
        .to_integer()
        .and_then(|e| e.to_i64())
        .expect("decimal exponent fits in i64");
    let frac = decimal_log - &floor;
    let scaled = frac.exp10() * Float::with_val(prec, 10).pow(digits as u32 - 1);
    let mut significand = scaled
        .round_even()
        .to_integer()
        .expect("finite significand");
    let limit = Integer::from(Integer::u_pow_u(10, digits as u32));
    if significand >= limit {
        significand /= 10;
        exponent += 1;
    }
    format_scientific(&significand.to_string(), exponent)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PrecisionContext {
        PrecisionContext::default()
    }

    #[test]
    fn exact_power_of_ten() {
        let v = LnValue::of_integer(&Integer::from(1000), &ctx()).unwrap();
        assert_eq!(render_ln_scientific(&v, 5, &ctx()).unwrap(), "1.0000e+3");
        let one = LnValue::one(&ctx());
        assert_eq!(one.render(3, &ctx()).unwrap(), "1.00e+0");
    }

    #[test]
    fn listed_term() {
        let v = LnValue::of_integer(&Integer::from(168992), &ctx()).unwrap();
        assert_eq!(v.render(5, &ctx()).unwrap(), "1.6899e+5");
        assert_eq!(v.render(4, &ctx()).unwrap(), "1.690e+5");
    }

    #[test]
    fn values_below_one() {
        let c = ctx();
        let v = LnValue::from_ln(c.finish(c.real(0.00125).ln())).unwrap();
        assert_eq!(v.render(3, &c).unwrap(), "1.25e-3");
    }

    #[test]
    fn log_arithmetic() {
        let c = ctx();
        let a = LnValue::of_integer(&Integer::from(6), &c).unwrap();
        let b = LnValue::of_integer(&Integer::from(4), &c).unwrap();
        assert_eq!((&a * &b).render(4, &c).unwrap(), "2.400e+1");
        assert_eq!((&a / &b).render(4, &c).unwrap(), "1.500e+0");
        assert_eq!(a.pow(&c.real(3)).render(4, &c).unwrap(), "2.160e+2");
        let r = a.ratio_minus_one(&b).to_f64();
        assert!((r - 0.5).abs() < 1e-15);
        assert!(a > b);
    }

    #[test]
    fn rejects_bad_inputs() {
        let c = ctx();
        assert!(LnValue::of_integer(&Integer::from(0), &c).is_err());
        assert!(LnValue::of_real(&c.real(-1)).is_err());
        assert!(LnValue::from_ln(Float::with_val(64, rug::float::Special::Infinity)).is_err());
        let v = LnValue::one(&c);
        assert!(v.render(0, &c).is_err());
    }
}
