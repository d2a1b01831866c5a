//! Integer-valued polynomials in the binomial basis `C(T, j)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{solve, Solution};
use crate::Rational;

/// `Σ_j c_j C(T, j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<Rational>,
}

/// `C(t, j) = t(t-1)…(t-j+1)/j!`, valid for every integer `t`.
pub fn binomial_poly(t: i64, j: u32) -> Rational {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for k in 0..j as i64 {
        num *= BigInt::from(t - k);
        den *= BigInt::from(k + 1);
    }
    Rational::new(num, den)
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// Coefficients in the basis `C(T, 0), C(T, 1), …`.
    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> u32 {
        self.coeffs.len().saturating_sub(1) as u32
    }

    pub fn evaluate(&self, t: i64) -> Rational {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| c * binomial_poly(t, j as u32))
            .fold(Rational::zero(), |a, b| a + b)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sep = match (first, c.is_negative()) {
                (true, false) => "",
                (true, true) => "-",
                (false, false) => " + ",
                (false, true) => " - ",
            };
            f.write_str(sep)?;
            let mag = c.abs();
            match (j, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("T")?,
                (1, false) => write!(f, "{mag}*T")?,
                (_, true) => write!(f, "C(T,{j})")?,
                (_, false) => write!(f, "{mag}*C(T,{j})")?,
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Least-degree polynomial through `dims`, with at least one held-out point.
///
/// For each candidate degree `d ≤ degree_bound` the polynomial is interpolated on
/// the first `d + 1` points and must reproduce every remaining point exactly.
pub fn fit_dim_polynomial(dims: &BTreeMap<u32, u64>, degree_bound: u32) -> Result<IntPolynomial> {
    let needed = degree_bound as usize + 2;
    if dims.len() < needed {
        return Err(Error::domain(format!(
            "fitting degree <= {degree_bound} needs {needed} points, got {}",
            dims.len()
        )));
    }
    let points: Vec<(i64, Rational)> = dims
        .iter()
        .map(|(&n, &d)| (n as i64, Rational::from_integer(d.into())))
        .collect();
    for d in 0..=degree_bound {
        let (fit, held_out) = points.split_at(d as usize + 1);
        let rows: Vec<Vec<Rational>> = fit
            .iter()
            .map(|(t, _)| (0..=d).map(|j| binomial_poly(*t, j)).collect())
            .collect();
        let rhs: Vec<Rational> = fit.iter().map(|(_, v)| v.clone()).collect();
        let Solution::Unique(coeffs) = solve(&rows, &rhs, d as usize + 1) else {
            return Err(Error::Inconsistent(
                "binomial interpolation matrix on distinct nodes is singular".into(),
            ));
        };
        let poly = IntPolynomial::new(coeffs);
        if held_out.iter().all(|(t, v)| poly.evaluate(*t) == *v) {
            return Ok(poly);
        }
    }
    Err(Error::NoPolynomial { degree_bound })
}
