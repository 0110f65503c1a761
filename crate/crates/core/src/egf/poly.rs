use std::fmt;
use std::str::FromStr;

use rug::{Float, Integer};

use crate::error::{Error, Result};

/// Integer polynomial `P(z)` used as the exponent of the EGF `exp(P(z))`.
///
/// Coefficients are stored in ascending order of power. A valid polynomial
/// has zero constant term, nonnegative coefficients and a positive leading
/// coefficient of degree at least one, which keeps every term of the
/// associated counting sequence a nonnegative integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExpPolynomial {
    coeffs: Vec<Integer>,
}

impl ExpPolynomial {
    /// Builds a polynomial from ascending coefficients.
    ///
    /// Trailing zeros are trimmed before the invariants are checked, so
    /// `[0, 1, 0]` is the same polynomial as `[0, 1]`.
    pub fn new(coeffs: Vec<Integer>) -> Result<Self> {
        let mut coeffs = coeffs;
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| *c == 0) {
            coeffs.pop();
        }
        if coeffs.len() < 2 || coeffs[coeffs.len() - 1] == 0 {
            return Err(Error::Domain(
                "degree must be at least 1 with a positive leading coefficient".into(),
            ));
        }
        if coeffs[0] != 0 {
            return Err(Error::Domain(format!(
                "constant term p_0 must be 0 (got {})",
                coeffs[0]
            )));
        }
        if let Some((j, c)) = coeffs.iter().enumerate().find(|(_, c)| **c < 0) {
            return Err(Error::Domain(format!(
                "coefficient p_{j} must be nonnegative (got {c})"
            )));
        }
        Ok(Self { coeffs })
    }

    pub fn from_i64s(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Integer::from(c)).collect())
    }

    /// `z^2 + 2z`, the exponent for symmetric involutions.
    pub fn symmetric_involutions() -> Self {
        Self::from_i64s(&[0, 2, 1]).expect("valid polynomial")
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficients `p_0..=p_d`, ascending.
    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> &Integer {
        &self.coeffs[j]
    }

    pub fn leading(&self) -> &Integer {
        &self.coeffs[self.degree()]
    }

    /// Nonzero coefficients as `(power, coefficient)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Integer)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| **c != 0)
    }

    /// Gcd of the powers carrying a nonzero coefficient.
    ///
    /// When this exceeds one, `I_n` vanishes unless the period divides `n`,
    /// `exp(P)` has that many saddles on the circle `|z| = r_n`, and the
    /// single-saddle estimate undercounts the nonzero terms by this factor.
    pub fn period(&self) -> u64 {
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        self.terms().map(|(j, _)| j as u64).fold(0, gcd)
    }

    /// Evaluates `sum_j w_j p_j r^j` by Horner's rule at the precision of `r`.
    pub(crate) fn eval_weighted(&self, r: &Float, weight: impl Fn(usize) -> u64) -> Float {
        let mut acc = Float::new(r.prec());
        for j in (1..=self.degree()).rev() {
            let w = Integer::from(&self.coeffs[j] * weight(j));
            acc += &w;
            acc *= r;
        }
        acc
    }

    /// `P(r)`, which is `ln f(r)` for `f = exp(P)`.
    pub fn eval(&self, r: &Float) -> Float {
        self.eval_weighted(r, |_| 1)
    }
}

impl FromStr for ExpPolynomial {
    type Err = Error;

    /// Parses a comma-separated ascending coefficient list such as `"0,2,1"`.
    fn from_str(text: &str) -> Result<Self> {
        let coeffs = text
            .split(',')
            .enumerate()
            .map(|(index, token)| {
                let token = token.trim();
                Integer::from_str(token).map_err(|e| Error::Parse {
                    index,
                    token: token.to_string(),
                    reason: e.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(coeffs)
    }
}

/// Parses polynomial text; see [`ExpPolynomial`]'s `FromStr` impl.
pub fn parse_poly(text: &str) -> Result<ExpPolynomial> {
    text.parse()
}

impl fmt::Display for ExpPolynomial {
    /// Writes the polynomial in the same comma-separated form `parse_poly` accepts.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, c) in self.coeffs.iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_involution_exponent() {
        let p = parse_poly("0,2,1").unwrap();
        assert_eq!(p.degree(), 2);
        assert_eq!(p, ExpPolynomial::symmetric_involutions());
        assert_eq!(p.to_string(), "0,2,1");
    }

    #[test]
    fn parses_monomials() {
        let p = parse_poly("0,1").unwrap();
        assert_eq!(p.degree(), 1);
        let q = parse_poly(" 0, 0 ,1 ").unwrap();
        assert_eq!(q.degree(), 2);
        assert_eq!(q.terms().map(|(j, _)| j).collect::<Vec<_>>(), vec![2]);
        assert_eq!(q.period(), 2);
        assert_eq!(p.period(), 1);
        assert_eq!(parse_poly("0,0,0,2,0,0,1").unwrap().period(), 3);
        assert_eq!(parse_poly("0,0,2,3").unwrap().period(), 1);
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert_eq!(parse_poly("0,1,0,0").unwrap(), parse_poly("0,1").unwrap());
    }

    #[test]
    fn rejects_malformed_numbers() {
        let err = parse_poly("0,x,1").unwrap_err();
        assert!(matches!(err, Error::Parse { index: 1, .. }), "{err:?}");
        assert!(matches!(parse_poly("").unwrap_err(), Error::Parse { .. }));
        assert!(matches!(
            parse_poly("0,1.5").unwrap_err(),
            Error::Parse { .. }
        ));
    }

    #[test]
    fn rejects_invariant_violations() {
        let err = parse_poly("1,2,1").unwrap_err();
        assert!(err.to_string().contains("p_0"), "{err}");
        let err = parse_poly("0,-1,1").unwrap_err();
        assert!(err.to_string().contains("p_1"), "{err}");
        let err = parse_poly("0").unwrap_err();
        assert!(err.to_string().contains("degree"), "{err}");
        let err = parse_poly("0,0,0").unwrap_err();
        assert!(err.to_string().contains("degree"), "{err}");
    }

    #[test]
    fn horner_evaluation() {
        let p = ExpPolynomial::symmetric_involutions();
        let r = Float::with_val(64, 3);
        assert_eq!(p.eval(&r), 15);
        assert_eq!(p.eval_weighted(&r, |j| j as u64), 24);
    }
}
