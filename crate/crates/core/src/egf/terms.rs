use std::collections::VecDeque;
use std::io::{self, Write};

use rug::Integer;

use super::poly::ExpPolynomial;

/// Streaming generator for the counts `I_n = n! [z^n] exp(P(z))`.
///
/// Differentiating `f = exp(P)` gives `f' = P' f`, and comparing
/// coefficients of `z^(n-1)` yields
///
/// ```text
/// I_n = sum_{j=1..d} j p_j (n-1)(n-2)...(n-j+1) I_{n-j}
/// ```
///
/// Only the last `d` terms are kept, so memory stays bounded by the size of
/// a handful of terms even when `n` reaches the hundreds of thousands.
#[derive(Debug, Clone)]
pub struct TermStream {
    poly: ExpPolynomial,
    /// `window[k]` holds `I_{next-1-k}`.
    window: VecDeque<Integer>,
    next: u64,
}

impl TermStream {
    pub fn new(poly: ExpPolynomial) -> Self {
        let window = VecDeque::with_capacity(poly.degree());
        Self {
            poly,
            window,
            next: 0,
        }
    }

    /// Index of the term the next call to `next()` will produce.
    pub fn position(&self) -> u64 {
        self.next
    }

    fn step(&self) -> Integer {
        let n = self.next;
        if n == 0 {
            return Integer::from(1);
        }
        let mut acc = Integer::new();
        // falling factorial (n-1)(n-2)...(n-j+1), extended one factor per j
        let mut falling = Integer::from(1);
        for j in 1..=self.poly.degree() {
            if j as u64 > n {
                break;
            }
            if j > 1 {
                falling *= n - j as u64 + 1;
            }
            let p = self.poly.coeff(j);
            if *p == 0 {
                continue;
            }
            let weight = Integer::from(&falling * p) * j as u64;
            acc += &weight * &self.window[j - 1];
        }
        acc
    }
}

impl Iterator for TermStream {
    type Item = Integer;

    fn next(&mut self) -> Option<Integer> {
        let term = self.step();
        if self.window.len() == self.poly.degree() {
            self.window.pop_back();
        }
        self.window.push_front(term.clone());
        self.next += 1;
        Some(term)
    }
}

/// Exact terms `I_0..=I_N` of the sequence with EGF `exp(P(z))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactSequence {
    poly: ExpPolynomial,
    terms: Vec<Integer>,
}

impl ExactSequence {
    /// Wraps externally computed terms; use [`ExactSequence::satisfies_recurrence`]
    /// to check them.
    pub fn from_terms(poly: ExpPolynomial, terms: Vec<Integer>) -> Self {
        Self { poly, terms }
    }

    pub fn poly(&self) -> &ExpPolynomial {
        &self.poly
    }

    pub fn terms(&self) -> &[Integer] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Integer> {
        self.terms
    }

    pub fn get(&self, n: usize) -> Option<&Integer> {
        self.terms.get(n)
    }

    /// Largest index held.
    pub fn last_index(&self) -> usize {
        self.terms.len() - 1
    }

    /// Re-checks every stored term against the falling-factorial recurrence.
    ///
    /// Returns the first index at which the check fails, if any.
    pub fn first_recurrence_violation(&self) -> Option<usize> {
        if self.terms.first().is_some_and(|t| *t != 1) {
            return Some(0);
        }
        (1..self.terms.len()).find(|&n| {
            let mut expected = Integer::new();
            let mut falling = Integer::from(1);
            for j in 1..=self.poly.degree().min(n) {
                if j > 1 {
                    falling *= (n - j + 1) as u64;
                }
                let w = Integer::from(&falling * self.poly.coeff(j)) * j as u64;
                expected += w * &self.terms[n - j];
            }
            expected != self.terms[n]
        })
    }

    pub fn satisfies_recurrence(&self) -> bool {
        self.first_recurrence_violation().is_none()
    }

    /// Writes `n<TAB>I_n` lines in ascending order.
    pub fn write_lines<W: Write>(&self, mut out: W) -> io::Result<()> {
        for (n, t) in self.terms.iter().enumerate() {
            writeln!(out, "{n}\t{t}")?;
        }
        Ok(())
    }
}

/// Computes `I_0..=I_N` for the EGF `exp(P(z))`.
pub fn exact_terms(poly: &ExpPolynomial, last: usize) -> ExactSequence {
    let terms = TermStream::new(poly.clone()).take(last + 1).collect();
    ExactSequence {
        poly: poly.clone(),
        terms,
    }
}

/// Exact terms at selected indices, computed in a single streaming pass.
///
/// The result is sorted by index and deduplicated. Intermediate terms are
/// dropped as soon as they leave the recurrence window.
pub fn exact_terms_at(poly: &ExpPolynomial, indices: &[u64]) -> Vec<(u64, Integer)> {
    let mut wanted = indices.to_vec();
    wanted.sort_unstable();
    wanted.dedup();
    let Some(&max) = wanted.last() else {
        return Vec::new();
    };
    let mut out = Vec::with_capacity(wanted.len());
    let mut want = wanted.iter().peekable();
    for (n, term) in TermStream::new(poly.clone()).enumerate() {
        let n = n as u64;
        if want.peek() == Some(&&n) {
            want.next();
            out.push((n, term));
        }
        if n == max {
            break;
        }
    }
    out
}
