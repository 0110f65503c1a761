//! Exact counts and saddle-point asymptotics for combinatorial sequences
//! whose exponential generating function is `exp(P(z))`.
//!
//! The crate covers four layers:
//!
//! - [`egf`]: the exponent polynomial, an exact big-integer recurrence for
//!   `I_n = n! [z^n] exp(P(z))`, and a series-exponentiation oracle.
//! - [`numerics`]: precision contexts, log-domain values and `ln(n!)`.
//! - [`saddle`]: the saddle point `a(r_n) = n` and the estimate
//!   `[z^n] f ~ f(r_n) / (r_n^n sqrt(2 pi b(r_n)))`.
//! - [`a000898`] and [`compare`]: closed forms for symmetric involutions
//!   (`P = z^2 + 2z`) and the harness that checks them against exact counts.
//!
//! ```
//! use hayman_core::{exact_terms, render_int_scientific, ExpPolynomial};
//!
//! let seq = exact_terms(&"0,2,1".parse::<ExpPolynomial>().unwrap(), 9);
//! assert_eq!(seq.terms()[9], 168_992);
//! assert_eq!(render_int_scientific(&seq.terms()[9], 4).unwrap(), "1.690e+5");
//! ```

pub mod a000898;
pub mod compare;
pub mod egf;
mod error;
pub mod numerics;
pub mod saddle;

pub use a000898::{
    closed_form_estimate, expansion_report, recurrence_a000898, rn_closed, rn_expansion,
    ClosedFormEstimate, ExpansionReport,
};
pub use compare::{compare_rows, fit_error_order, CompareOptions, ComparisonRow, ErrorOrderFit};
pub use egf::{
    exact_terms, exact_terms_at, parse_poly, render_int_scientific, series_exp_oracle,
    ExactSequence, ExpPolynomial, TermStream,
};
pub use error::{Error, Result};
pub use numerics::{ln_factorial, render_ln_scientific, LnValue, PrecisionContext};
pub use saddle::{
    a_of_r, b_of_r, hayman_coefficient_estimate, solve_saddle, HaymanEstimate, SaddlePoint,
};

/// Arbitrary-precision number types used throughout the public API.
pub use rug::{Float, Integer, Rational};
