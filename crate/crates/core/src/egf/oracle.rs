use rug::{Integer, Rational};

use super::poly::ExpPolynomial;

/// Ordinary coefficients `c_0..=c_N` of `exp(P(z))` by direct series
/// exponentiation, `sum_k P(z)^k / k!` truncated at degree `N`.
///
/// This path shares nothing with the recurrence in
/// [`exact_terms`](super::exact_terms) and serves as its oracle:
/// `n! * c_n` must equal `I_n`. Cost grows like `N^3`, so keep `N` small.
pub fn series_exp_oracle(poly: &ExpPolynomial, last: usize) -> Vec<Rational> {
    let len = last + 1;
    let p: Vec<Integer> = (0..len)
        .map(|j| poly.coeffs().get(j).cloned().unwrap_or_default())
        .collect();

    let mut out = vec![Rational::new(); len];
    // P^k truncated to degree N, exact integer coefficients
    let mut power = vec![Integer::new(); len];
    power[0] = Integer::from(1);
    let mut k_factorial = Integer::from(1);
    // P has no constant term, so P^k starts at z^k and k <= N suffices
    for k in 0..len {
        if k > 0 {
            k_factorial *= k as u64;
            let mut next = vec![Integer::new(); len];
            for (i, a) in power.iter().enumerate().filter(|(_, a)| **a != 0) {
                for (j, b) in p.iter().enumerate().take(len - i).filter(|(_, b)| **b != 0) {
                    next[i + j] += a * b;
                }
            }
            power = next;
        }
        for (c, a) in out.iter_mut().zip(&power) {
            if *a != 0 {
                *c += Rational::from((a.clone(), k_factorial.clone()));
            }
        }
    }
    out
}
