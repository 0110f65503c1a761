use rug::Integer;

use crate::error::{Error, Result};

/// Formats a `digits`-digit significand and decimal exponent as `m.ddde+E`.
pub(crate) fn format_scientific(significand: &str, exponent: i64) -> String {
    let (lead, rest) = significand.split_at(1);
    let sign = if exponent < 0 { '-' } else { '+' };
    let e = exponent.unsigned_abs();
    if rest.is_empty() {
        format!("{lead}e{sign}{e}")
    } else {
        format!("{lead}.{rest}e{sign}{e}")
    }
}

/// Renders a positive integer in scientific notation with `digits`
/// significant digits, rounding half to even.
///
/// The exponent is the number of decimal digits of `x` minus one, bumped by
/// one when rounding carries into a new digit (`99995` at four digits is
/// `1.000e+5`).
pub fn render_int_scientific(x: &Integer, digits: usize) -> Result<String> {
    if *x <= 0 {
        return Err(Error::Precondition(format!(
            "scientific rendering needs a positive integer, got {x}"
        )));
    }
    if digits == 0 {
        return Err(Error::Precondition("digits must be at least 1".into()));
    }
    let decimal = x.to_string();
    let mut exponent = decimal.len() as i64 - 1;
    let bytes = decimal.as_bytes();

    let mut head: Vec<u8> = bytes.iter().take(digits).copied().collect();
    head.resize(digits, b'0');

    let round_up = match bytes.get(digits) {
        None => false,
        Some(&d) if d > b'5' => true,
        Some(&d) if d < b'5' => false,
        // exactly a five: tie unless anything nonzero follows
        Some(_) => {
            bytes[digits + 1..].iter().any(|&b| b != b'0') || (head[digits - 1] - b'0') % 2 == 1
        }
    };
    if round_up && increment(&mut head) {
        head.insert(0, b'1');
        head.truncate(digits);
        exponent += 1;
    }
    let significand = String::from_utf8(head).expect("ascii digits");
    Ok(format_scientific(&significand, exponent))
}

/// Adds one to a decimal digit string in place; returns true on overflow.
fn increment(digits: &mut [u8]) -> bool {
    for d in digits.iter_mut().rev() {
        if *d == b'9' {
            *d = b'0';
        } else {
            *d += 1;
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn render(x: u64, digits: usize) -> String {
        render_int_scientific(&Integer::from(x), digits).unwrap()
    }

    #[test]
    fn listed_term() {
        assert_eq!(render(168992, 4), "1.690e+5");
        assert_eq!(render(168992, 5), "1.6899e+5");
    }

    #[test]
    fn short_inputs_are_padded() {
        assert_eq!(render(2, 5), "2.0000e+0");
        assert_eq!(render(1000, 5), "1.0000e+3");
        assert_eq!(render(7, 1), "7e+0");
    }

    #[test]
    fn half_even_ties() {
        assert_eq!(render(125, 2), "1.2e+2");
        assert_eq!(render(135, 2), "1.4e+2");
        assert_eq!(render(1251, 2), "1.3e+3");
        assert_eq!(render(12500, 2), "1.2e+4");
    }

    #[test]
    fn carry_bumps_exponent() {
        assert_eq!(render(99995, 4), "1.000e+5");
        assert_eq!(render(96, 1), "1e+2");
        assert_eq!(render(99, 2), "9.9e+1");
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(render_int_scientific(&Integer::from(0), 3).is_err());
        assert!(render_int_scientific(&Integer::from(-5), 3).is_err());
        assert!(render_int_scientific(&Integer::from(5), 0).is_err());
    }
}
