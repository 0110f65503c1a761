//! High-precision reals, log-domain values and exact `ln(n!)`.

mod ln_value;
mod precision;

pub use ln_value::{render_ln_scientific, LnValue};
pub use precision::PrecisionContext;

use rug::{Complete, Float, Integer};

/// `ln(n!)` from the exact factorial, rounded to `ctx.bits()`.
pub fn ln_factorial(n: u64, ctx: &PrecisionContext) -> Float {
    let n = u32::try_from(n).expect("factorial argument fits in u32");
    let factorial = Integer::factorial(n).complete();
    ctx.finish(ctx.real(&factorial).ln())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_factorials() {
        let ctx = PrecisionContext::default();
        assert_eq!(ln_factorial(0, &ctx), 0);
        assert_eq!(ln_factorial(1, &ctx), 0);
        let ten = ln_factorial(10, &ctx).to_f64();
        assert!((ten - 3_628_800f64.ln()).abs() < 1e-14);
        assert_eq!(ln_factorial(10, &ctx).prec(), 256);
    }
}
