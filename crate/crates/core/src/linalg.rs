//! Exact linear algebra: rational solves for polynomial fitting, fraction-free
//! sparse elimination for ranks, and small dense integer matrices.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<Rational>),
    Inconsistent,
    /// Consistent, but these unknowns are free.
    Underdetermined(Vec<usize>),
}

/// Solves `A x = b` over `Q` by Gauss–Jordan elimination.
pub fn solve(rows: &[Vec<Rational>], rhs: &[Rational], unknowns: usize) -> Solution {
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..unknowns {
        let Some(pr) = (top..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(top, pr);
        let inv = m[top][col].recip();
        for x in m[top].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[top].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == top || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
        pivots.push(col);
        top += 1;
    }
    if m[top..].iter().any(|row| !row[unknowns].is_zero()) {
        return Solution::Inconsistent;
    }
    if pivots.len() < unknowns {
        let free = (0..unknowns).filter(|c| !pivots.contains(c)).collect();
        return Solution::Underdetermined(free);
    }
    let mut x = vec![Rational::zero(); unknowns];
    for (r, &col) in pivots.iter().enumerate() {
        x[col] = m[r][unknowns].clone();
    }
    Solution::Unique(x)
}

/// Sparse integer vector: strictly increasing indices, nonzero entries.
pub type SparseVec = Vec<(usize, BigInt)>;

/// Row echelon form over `Z`, built incrementally by fraction-free elimination.
/// Rows are kept primitive with a positive leading entry.
#[derive(Clone, Debug, Default)]
pub struct SparseEchelon {
    rows: BTreeMap<usize, SparseVec>,
}

fn make_primitive(v: &mut SparseVec) {
    let mut g = BigInt::zero();
    for (_, x) in v.iter() {
        g = g.gcd(x);
        if g.is_one() {
            break;
        }
    }
    let negate = v.first().is_some_and(|(_, x)| x.is_negative());
    if !g.is_zero() && !g.is_one() {
        for (_, x) in v.iter_mut() {
            *x /= &g;
        }
    }
    if negate {
        for (_, x) in v.iter_mut() {
            *x = -&*x;
        }
    }
}

/// `a·u - b·w`, merged by index.
fn combine(a: &BigInt, u: &SparseVec, b: &BigInt, w: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(u.len() + w.len());
    let (mut i, mut j) = (0, 0);
    while i < u.len() || j < w.len() {
        let take_u = j >= w.len() || (i < u.len() && u[i].0 < w[j].0);
        let take_w = i >= u.len() || (j < w.len() && w[j].0 < u[i].0);
        if take_u {
            out.push((u[i].0, a * &u[i].1));
            i += 1;
        } else if take_w {
            out.push((w[j].0, -(b * &w[j].1)));
            j += 1;
        } else {
            let x = a * &u[i].1 - b * &w[j].1;
            if !x.is_zero() {
                out.push((u[i].0, x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl SparseEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current rows; returns the (primitive) remainder.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        v.retain(|(_, x)| !x.is_zero());
        make_primitive(&mut v);
        while let Some((lead, _)) = v.first() {
            let Some(row) = self.rows.get(lead) else {
                break;
            };
            let a = row[0].1.clone();
            let b = v[0].1.clone();
            let g = a.gcd(&b);
            v = combine(&(&a / &g), &v, &(&b / &g), row);
            make_primitive(&mut v);
        }
        v
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let v = self.reduce(v);
        match v.first() {
            Some(&(lead, _)) => {
                self.rows.insert(lead, v);
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, v: SparseVec) -> bool {
        self.reduce(v).is_empty()
    }
}

/// Rank over `Q` of a family of sparse integer vectors.
pub fn rank(vectors: impl IntoIterator<Item = SparseVec>) -> usize {
    let mut e = SparseEchelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// Dense integer matrix, row major. Entries are exact; arithmetic panics on overflow.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn trace(&self) -> i64 {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    /// Column `c` as a sparse vector.
    pub fn column(&self, c: usize) -> SparseVec {
        (0..self.rows)
            .filter_map(|r| {
                let v = self.get(r, c);
                (v != 0).then(|| (r, BigInt::from(v)))
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        rank((0..self.cols).map(|c| self.column(c)))
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix shapes do not compose");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b != 0 {
                        let cur = out.get(r, c);
                        let v = a
                            .checked_mul(b)
                            .and_then(|x| x.checked_add(cur))
                            .expect("integer matrix product overflow");
                        out.set(r, c, v);
                    }
                }
            }
        }
        out
    }
}
