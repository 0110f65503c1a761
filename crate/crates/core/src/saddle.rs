//! Saddle-point machinery for `f = exp(P)`.
//!
//! For `f(r) = exp(P(r))` the two auxiliary functions are
//! `a(r) = r f'(r)/f(r) = sum j p_j r^j` and `b(r) = r a'(r) = sum j^2 p_j r^j`.
//! The saddle `r_n` solves `a(r_n) = n`, and the coefficient estimate is
//! `[z^n] f ~ f(r_n) / (r_n^n sqrt(2 pi b(r_n)))`, evaluated here in the log
//! domain.

use rug::Float;

use crate::egf::ExpPolynomial;
use crate::error::{Error, Result};
use crate::numerics::{ln_factorial, LnValue, PrecisionContext};

/// `a(r) = sum j p_j r^j`, at the precision of `r`.
pub fn a_of_r(poly: &ExpPolynomial, r: &Float) -> Float {
    poly.eval_weighted(r, |j| j as u64)
}

/// `b(r) = sum j^2 p_j r^j`, at the precision of `r`.
pub fn b_of_r(poly: &ExpPolynomial, r: &Float) -> Float {
    poly.eval_weighted(r, |j| (j * j) as u64)
}

/// Positive root of `a(r) = n`.
#[derive(Debug, Clone, PartialEq)]
pub struct SaddlePoint {
    pub n: u64,
    /// Root, rounded to the context precision.
    pub r: Float,
    /// `a(r) - n` for the rounded root.
    pub residual: Float,
}

/// Newton's method safeguarded by a bracket: any step that leaves the
/// bracket is replaced by bisection.
pub fn solve_saddle(poly: &ExpPolynomial, n: u64, ctx: &PrecisionContext) -> Result<SaddlePoint> {
    if n == 0 {
        return Err(Error::Precondition("saddle point needs n >= 1".into()));
    }
    let target = ctx.real(n);
    let d = poly.degree() as u32;

    // leading-term guess (n / (d p_d))^(1/d)
    let lead = ctx.real(poly.leading()) * d;
    let mut r = (target.clone() / lead).root(d);

    let mut lo = r.clone();
    let mut hi = r.clone();
    while a_of_r(poly, &hi) < target {
        hi *= 2;
    }
    while a_of_r(poly, &lo) > target {
        lo /= 2;
    }

    let converged_at = target.clone() * ctx.pow2(2 - ctx.working() as i32);
    let step_floor = ctx.pow2(-(ctx.working() as i32));
    let max_iter = 4 * ctx.working() as usize + 64;
    for _ in 0..max_iter {
        let residual = a_of_r(poly, &r) - &target;
        if residual.clone().abs() <= converged_at {
            break;
        }
        if residual.is_sign_negative() {
            lo.clone_from(&r);
        } else {
            hi.clone_from(&r);
        }
        // a'(r) = b(r) / r
        let slope = b_of_r(poly, &r) / &r;
        let newton = r.clone() - residual / slope;
        let next = if newton > lo && newton < hi {
            newton
        } else {
            (lo.clone() + &hi) / 2
        };
        let moved = (next.clone() - &r).abs();
        r = next;
        if moved <= step_floor.clone() * &r {
            break;
        }
    }

    let rounded = ctx.finish(r);
    let residual = a_of_r(poly, &ctx.real(&rounded)) - &target;
    let tolerance = target * ctx.pow2(4 - ctx.bits() as i32);
    if residual.clone().abs() > tolerance {
        return Err(Error::NoConvergence {
            n,
            lo: lo.to_string_radix(10, Some(20)),
            hi: hi.to_string_radix(10, Some(20)),
            residual: residual.to_string_radix(10, Some(6)),
        });
    }
    Ok(SaddlePoint {
        n,
        r: rounded,
        residual: ctx.finish(residual),
    })
}

/// Saddle-point estimate of the `n`-th coefficient of `exp(P)` and of the
/// count `I_n = n! a_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct HaymanEstimate {
    pub n: u64,
    pub saddle: SaddlePoint,
    /// Estimate of the ordinary coefficient `a_n`.
    pub ln_coefficient: LnValue,
    /// Estimate of `I_n`, with `n!` taken exactly.
    pub ln_count: LnValue,
    /// `ln f(r_n) = P(r_n)`.
    pub ln_f: Float,
    /// `n ln r_n`.
    pub n_ln_r: Float,
    /// `b(r_n)`.
    pub b: Float,
}

/// `ln a_n ~ P(r_n) - n ln r_n - ln(2 pi b(r_n)) / 2`.
pub fn hayman_coefficient_estimate(
    poly: &ExpPolynomial,
    n: u64,
    ctx: &PrecisionContext,
) -> Result<HaymanEstimate> {
    let saddle = solve_saddle(poly, n, ctx)?;
    let r = ctx.real(&saddle.r);
    let ln_f = poly.eval(&r);
    let n_ln_r = r.clone().ln() * n;
    let b = b_of_r(poly, &r);
    let half_ln_2pi_b = (ctx.pi() * 2u32 * &b).ln() / 2u32;

    let ln_coeff = ln_f.clone() - &n_ln_r - half_ln_2pi_b;
    let ln_count = ln_coeff.clone() + ln_factorial(n, ctx);

    Ok(HaymanEstimate {
        n,
        saddle,
        ln_coefficient: LnValue::from_ln(ctx.finish(ln_coeff))?,
        ln_count: LnValue::from_ln(ctx.finish(ln_count))?,
        ln_f: ctx.finish(ln_f),
        n_ln_r: ctx.finish(n_ln_r),
        b: ctx.finish(b),
    })
}

/// `r_n` from the closed form of a one-term exponent `p z^d`, used in tests.
#[cfg(test)]
fn monomial_root(p: u32, d: u32, n: u64, ctx: &PrecisionContext) -> Float {
    use rug::ops::Pow;
    (ctx.real(n) / (p * d)).pow(Float::with_val(ctx.working(), 1) / d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::egf::exact_terms;
    use crate::numerics::LnValue;

    fn ctx() -> PrecisionContext {
        PrecisionContext::default()
    }

    fn poly(c: &[i64]) -> ExpPolynomial {
        ExpPolynomial::from_i64s(c).unwrap()
    }

    #[test]
    fn a_and_b_values() {
        let c = ctx();
        let p = ExpPolynomial::symmetric_involutions();
        assert_eq!(a_of_r(&p, &c.real(1)), 4);
        assert_eq!(b_of_r(&p, &c.real(1)), 6);
        assert_eq!(a_of_r(&poly(&[0, 1]), &c.real(5)), 5);
        assert_eq!(b_of_r(&poly(&[0, 1]), &c.real(7)), 7);
        assert_eq!(a_of_r(&poly(&[0, 0, 1]), &c.real(3)), 18);
        assert_eq!(b_of_r(&poly(&[0, 0, 1]), &c.real(2)), 16);
        assert_eq!(a_of_r(&p, &c.real(0)), 0);
    }

    #[test]
    fn exact_roots() {
        let c = ctx();
        assert_eq!(solve_saddle(&poly(&[0, 1]), 42, &c).unwrap().r, 42);
        assert_eq!(solve_saddle(&poly(&[0, 0, 1]), 50, &c).unwrap().r, 5);
    }

    #[test]
    fn involution_root_at_100() {
        let c = ctx();
        let s = solve_saddle(&ExpPolynomial::symmetric_involutions(), 100, &c).unwrap();
        let closed = (c.real(201).sqrt() - 1u32) / 2u32;
        let rel = ((c.real(&s.r) - &closed) / &closed).abs();
        assert!(rel <= c.pow2(8 - 256), "{rel}");
        assert!((s.r.to_f64() - 6.588_723_439_378_913).abs() < 1e-12);
        assert!(s.residual.clone().abs() <= c.real(100) * c.pow2(4 - 256));
    }

    #[test]
    fn monomial_roots_high_degree() {
        let c = ctx();
        for (p, d) in [(3u32, 5u32), (1, 7), (2, 3)] {
            let mut coeffs = vec![0i64; d as usize + 1];
            coeffs[d as usize] = p as i64;
            let s = solve_saddle(&poly(&coeffs), 1000, &c).unwrap();
            let expect = monomial_root(p, d, 1000, &c);
            let rel = ((c.real(&s.r) - &expect) / &expect).abs();
            assert!(rel <= c.pow2(8 - 256), "p={p} d={d} rel={rel}");
        }
    }

    #[test]
    fn tiny_and_huge_targets() {
        let c = ctx();
        let p = poly(&[0, 1, 0, 0, 4]);
        for n in [1u64, 2, 1_000_000_000_000] {
            let s = solve_saddle(&p, n, &c).unwrap();
            assert!(s.r > 0);
            assert!(s.residual.clone().abs() <= c.real(n) * c.pow2(4 - 256));
        }
    }

    #[test]
    fn rejects_zero_target() {
        assert!(matches!(
            solve_saddle(&poly(&[0, 1]), 0, &ctx()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn stirling_defect_for_exp_z() {
        let c = ctx();
        let est = hayman_coefficient_estimate(&poly(&[0, 1]), 20, &c).unwrap();
        let ratio = est.ln_count.ln().clone().exp().to_f64();
        assert!((1.0..=1.01).contains(&ratio), "{ratio}");
        // components at r = n: P(r) = n, n ln r, b = n
        assert_eq!(est.ln_f, 20);
        assert_eq!(est.b, 20);
    }

    #[test]
    fn exp_z_squared_at_40_is_off_by_its_period() {
        // exp(z^2) has saddles at +r and -r; the one-saddle formula sees half
        // of the mass: est / I_40 = 20! e^20 / (20^20 sqrt(40 pi)) / 2
        let c = ctx();
        let p = poly(&[0, 0, 1]);
        assert_eq!(p.period(), 2);
        let est = hayman_coefficient_estimate(&p, 40, &c).unwrap();
        let exact = exact_terms(&p, 40).terms()[40].clone();
        let ratio = est
            .ln_count
            .ratio_minus_one(&LnValue::of_integer(&exact, &c).unwrap());
        let ratio = ratio.to_f64() + 1.0;
        assert!((0.495..=0.505).contains(&ratio), "{ratio}");
        assert!((ratio * 2.0 - 1.0).abs() <= 0.01);
    }

    #[test]
    fn count_is_coefficient_times_factorial() {
        let c = ctx();
        let est =
            hayman_coefficient_estimate(&ExpPolynomial::symmetric_involutions(), 77, &c).unwrap();
        let diff = Float::with_val(256, est.ln_count.ln() - est.ln_coefficient.ln())
            - ln_factorial(77, &c);
        assert!(diff.abs() < c.pow2(-230));
        assert!(est.b > 0);
    }
}
