//! Character polynomials in the cycle counts `Z_l`.
//!
//! Polynomials are written in the basis `∏_l C(Z_l, m_l)` indexed by exponent
//! vectors `(m_1, m_2, …)`. A monomial has weighted degree `Σ l·m_l`.

use alloc::collections::BTreeMap;
use alloc::string::String;
#[cfg(test)]
use alloc::vec;

use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::character::ClassFunction;
use crate::error::{Error, Result};
use crate::fi::FiSequence;
use crate::linalg::{solve, Solution};
use crate::partition::{binomial, CycleType};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CharPolynomial {
    /// Exponent vectors without trailing zeros, mapped to nonzero coefficients.
    terms: BTreeMap<Vec<u32>, Rational>,
}

fn trim(mut m: Vec<u32>) -> Vec<u32> {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

fn weighted_degree_of(m: &[u32]) -> u32 {
    m.iter().enumerate().map(|(i, &e)| (i as u32 + 1) * e).sum()
}

/// `∏_l C(Z_l(μ), m_l)`.
pub fn basis_value(m: &[u32], mu: &CycleType) -> Rational {
    let mut acc = num_bigint::BigInt::one();
    for (i, &e) in m.iter().enumerate() {
        if e > 0 {
            acc *= binomial(mu.multiplicity(i as u32 + 1), e);
        }
    }
    Rational::from_integer(acc)
}

/// Every exponent vector of weighted degree at most `degree_bound`, in
/// lexicographic order.
pub fn monomials(degree_bound: u32) -> Vec<Vec<u32>> {
    fn go(l: u32, budget: u32, top: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if l > top {
            out.push(trim(cur.clone()));
            return;
        }
        for e in 0..=budget / l {
            cur.push(e);
            go(l + 1, budget - e * l, top, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, degree_bound, degree_bound, &mut Vec::new(), &mut out);
    out.sort();
    out.dedup();
    out
}

impl CharPolynomial {
    pub fn from_terms(terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Self {
        let mut out = CharPolynomial::default();
        for (m, c) in terms {
            let m = trim(m);
            let entry = out.terms.entry(m.clone()).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                out.terms.remove(&m);
            }
        }
        out
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_terms([(Vec::new(), c)])
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, m: &[u32]) -> Rational {
        self.terms
            .get(&trim(m.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn evaluate(&self, mu: &CycleType) -> Rational {
        self.terms
            .iter()
            .map(|(m, c)| c * basis_value(m, mu))
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// `max Σ l·m_l` over the support (deg `Z_l` = `l`).
    pub fn weighted_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| weighted_degree_of(m))
            .max()
            .unwrap_or(0)
    }

    /// Largest `l` such that `Z_l` actually occurs.
    pub fn variable_count(&self) -> u32 {
        self.terms.keys().map(|m| m.len() as u32).max().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

fn monomial_string(m: &[u32]) -> String {
    let factors: Vec<String> = m
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                alloc::format!("Z{}", i + 1)
            } else {
                alloc::format!("C(Z{},{})", i + 1, e)
            }
        })
        .collect();
    if factors.is_empty() {
        String::from("1")
    } else {
        factors.join("*")
    }
}

impl fmt::Display for CharPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let mono = monomial_string(m);
            let mag = c.abs();
            let sep = match (i, c.is_negative()) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            f.write_str(sep)?;
            if m.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

/// The unique polynomial of weighted degree `≤ degree_bound` agreeing with every
/// character of the window on every class.
pub fn fit_char_polynomial(
    seq: &FiSequence<ClassFunction>,
    degree_bound: u32,
) -> Result<CharPolynomial> {
    let basis = monomials(degree_bound);
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (_, chi) in seq.iter() {
        for (mu, value) in chi.iter() {
            rows.push(basis.iter().map(|m| basis_value(m, mu)).collect::<Vec<_>>());
            rhs.push(value.clone());
        }
    }
    match solve(&rows, &rhs, basis.len()) {
        Solution::Unique(coeffs) => Ok(CharPolynomial::from_terms(basis.into_iter().zip(coeffs))),
        Solution::Inconsistent => Err(Error::NoPolynomial { degree_bound }),
        Solution::Underdetermined(free) => Err(Error::Underdetermined(
            free.into_iter().map(|j| basis[j].clone()).collect(),
        )),
    }
}

/// Evaluates `q` on every class of `S_n`.
pub fn to_class_function(q: &CharPolynomial, n: u32) -> ClassFunction {
    ClassFunction::from_fn(n, |mu| q.evaluate(mu))
}
