//! Exact integer sequences whose exponential generating function is
//! `exp(P(z))` for an integer polynomial `P`.

mod oracle;
mod poly;
mod render;
mod terms;

pub use oracle::series_exp_oracle;
pub use poly::{parse_poly, ExpPolynomial};
pub(crate) use render::format_scientific;
pub use render::render_int_scientific;
pub use terms::{exact_terms, exact_terms_at, ExactSequence, TermStream};
