//! Characters of symmetric groups.
//!
//! Irreducible characters are evaluated with the Murnaghan–Nakayama rule on
//! beta-sets (abacus positions): removing a rim hook of length `r` moves one bead
//! from position `b` to the empty position `b - r`, with sign given by the parity
//! of the beads jumped over.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::partition::{factorial, partitions, CycleType, Partition};
use crate::Rational;

type Memo = BTreeMap<(Partition, Vec<u32>), i64>;

fn mn_rec(lambda: &Partition, cycles: &[u32], memo: &mut Memo) -> i64 {
    let Some((&r, rest)) = cycles.split_first() else {
        return if lambda.is_empty() { 1 } else { 0 };
    };
    let key = (lambda.clone(), cycles.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let l = lambda.len();
    let beta: Vec<u32> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (l - 1 - i) as u32)
        .collect();
    let mut total = 0i64;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r {
            continue;
        }
        let target = b - r;
        if beta.contains(&target) {
            continue;
        }
        let jumped = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts = moved
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (l - 1 - i) as u32)
            .collect();
        let smaller = Partition::from_unsorted(parts);
        let value = mn_rec(&smaller, rest, memo);
        if jumped % 2 == 0 {
            total += value;
        } else {
            total -= value;
        }
    }
    memo.insert(key, total);
    total
}

/// `χ_λ(μ)`, the value of the irreducible character `V_λ` on the class of cycle type `μ`.
pub fn mn_character(lambda: &Partition, mu: &CycleType) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::domain(format!(
            "character of a partition of {} evaluated on a class of S_{}",
            lambda.size(),
            mu.size()
        )));
    }
    Ok(mn_rec(lambda, mu.parts(), &mut Memo::new()))
}

/// Order of the centralizer of a permutation of cycle type `μ`: `∏_l l^{Z_l} Z_l!`.
pub fn centralizer_order(mu: &CycleType) -> BigInt {
    mu.cycle_counts()
        .iter()
        .enumerate()
        .filter(|(_, &z)| z > 0)
        .map(|(i, &z)| BigInt::from(i as u32 + 1).pow(z) * factorial(z))
        .product()
}

/// Number of permutations with cycle type `μ`.
pub fn class_size(mu: &CycleType) -> BigInt {
    factorial(mu.size()) / centralizer_order(mu)
}

/// The full character table of `S_n`: rows are irreducibles, columns classes,
/// both in lexicographic partition order.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    n: u32,
    labels: Vec<Partition>,
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn new(n: u32) -> Self {
        let labels = partitions(n);
        let mut memo = Memo::new();
        let values = labels
            .iter()
            .map(|lambda| {
                labels
                    .iter()
                    .map(|mu| mn_rec(lambda, mu.parts(), &mut memo))
                    .collect()
            })
            .collect();
        CharacterTable { n, labels, values }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Partitions of `n` in table order.
    pub fn labels(&self) -> &[Partition] {
        &self.labels
    }

    fn index(&self, p: &Partition) -> Option<usize> {
        self.labels.binary_search(p).ok()
    }

    pub fn value(&self, lambda: &Partition, mu: &CycleType) -> Option<i64> {
        Some(self.values[self.index(lambda)?][self.index(mu)?])
    }

    /// `χ_λ` as a class function.
    pub fn irreducible(&self, lambda: &Partition) -> Option<ClassFunction> {
        let row = &self.values[self.index(lambda)?];
        Some(ClassFunction {
            n: self.n,
            values: self
                .labels
                .iter()
                .zip(row)
                .map(|(mu, &v)| (mu.clone(), Rational::from_integer(v.into())))
                .collect(),
        })
    }
}

/// An exact rational function on the conjugacy classes of `S_n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassFunction {
    n: u32,
    values: BTreeMap<CycleType, Rational>,
}

impl ClassFunction {
    /// The keys of `values` must be exactly the partitions of `n`.
    pub fn new(n: u32, values: BTreeMap<CycleType, Rational>) -> Result<Self> {
        let expected = partitions(n);
        if values.len() != expected.len() || !expected.iter().all(|mu| values.contains_key(mu)) {
            return Err(Error::domain(format!(
                "class function domain must be exactly the partitions of {n}"
            )));
        }
        Ok(ClassFunction { n, values })
    }

    pub fn from_fn(n: u32, mut f: impl FnMut(&CycleType) -> Rational) -> Self {
        let values = partitions(n)
            .into_iter()
            .map(|mu| {
                let v = f(&mu);
                (mu, v)
            })
            .collect();
        ClassFunction { n, values }
    }

    pub fn zero(n: u32) -> Self {
        Self::from_fn(n, |_| Rational::zero())
    }

    pub fn trivial(n: u32) -> Self {
        Self::from_fn(n, |_| Rational::one())
    }

    pub fn sign(n: u32) -> Self {
        Self::from_fn(n, |mu| {
            let odd = mu.parts().iter().filter(|&&l| l % 2 == 0).count() % 2 == 1;
            Rational::from_integer(if odd { -1 } else { 1 }.into())
        })
    }

    /// Character of the regular representation: `n!` at the identity, zero elsewhere.
    pub fn regular(n: u32) -> Self {
        Self::from_fn(n, |mu| {
            if mu.parts().iter().all(|&l| l == 1) {
                Rational::from_integer(factorial(n))
            } else {
                Rational::zero()
            }
        })
    }

    pub fn irreducible(lambda: &Partition) -> Self {
        let mut memo = Memo::new();
        Self::from_fn(lambda.size(), |mu| {
            Rational::from_integer(mn_rec(lambda, mu.parts(), &mut memo).into())
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn value(&self, mu: &CycleType) -> Option<&Rational> {
        self.values.get(mu)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CycleType, &Rational)> {
        self.values.iter()
    }

    pub fn values(&self) -> &BTreeMap<CycleType, Rational> {
        &self.values
    }

    /// Value at the identity class.
    pub fn degree(&self) -> Rational {
        self.values[&Partition::column(self.n)].clone()
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::domain(
                "class functions on different symmetric groups",
            ));
        }
        let values = self
            .values
            .iter()
            .map(|(mu, v)| (mu.clone(), f(v, &other.values[mu])))
            .collect();
        Ok(ClassFunction { n: self.n, values })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    /// Pointwise product (character of the tensor product).
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a * b)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        ClassFunction {
            n: self.n,
            values: self
                .values
                .iter()
                .map(|(mu, v)| (mu.clone(), v * c))
                .collect(),
        }
    }
}

/// `(1/n!) Σ_μ |C_μ| f(μ) g(μ)`.
///
/// Characters of `S_n` are real, so no complex conjugation is needed.
pub fn inner_product(f: &ClassFunction, g: &ClassFunction) -> Result<Rational> {
    if f.n != g.n {
        return Err(Error::domain(
            "inner product of class functions on different groups",
        ));
    }
    let mut acc = Rational::zero();
    for (mu, fv) in &f.values {
        acc += Rational::from_integer(class_size(mu)) * fv * &g.values[mu];
    }
    Ok(acc / Rational::from_integer(factorial(f.n)))
}

/// A representation of `S_n` up to isomorphism: multiplicities of irreducibles.
/// Only nonzero multiplicities are stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IrrDecomposition {
    n: u32,
    multiplicities: BTreeMap<Partition, u64>,
}

impl IrrDecomposition {
    pub fn zero(n: u32) -> Self {
        IrrDecomposition {
            n,
            multiplicities: BTreeMap::new(),
        }
    }

    pub fn irreducible(lambda: &Partition) -> Self {
        let mut d = Self::zero(lambda.size());
        d.multiplicities.insert(lambda.clone(), 1);
        d
    }

    pub fn trivial(n: u32) -> Self {
        Self::irreducible(&Partition::row(n))
    }

    /// Every key must be a partition of `n`; zero multiplicities are dropped.
    pub fn from_multiplicities(
        n: u32,
        pairs: impl IntoIterator<Item = (Partition, u64)>,
    ) -> Result<Self> {
        let mut d = Self::zero(n);
        for (lambda, m) in pairs {
            if lambda.size() != n {
                return Err(Error::domain(format!(
                    "{lambda:?} is not a partition of {n}"
                )));
            }
            d.add_irreducible(&lambda, m);
        }
        Ok(d)
    }

    pub(crate) fn add_irreducible(&mut self, lambda: &Partition, m: u64) {
        debug_assert_eq!(lambda.size(), self.n);
        if m > 0 {
            *self.multiplicities.entry(lambda.clone()).or_insert(0) += m;
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn multiplicity(&self, lambda: &Partition) -> u64 {
        self.multiplicities.get(lambda).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.multiplicities.iter().map(|(p, &m)| (p, m))
    }

    pub fn is_zero(&self) -> bool {
        self.multiplicities.is_empty()
    }

    /// `Σ m_λ dim V_λ`.
    pub fn dimension(&self) -> BigInt {
        self.iter()
            .map(|(lambda, m)| lambda.dimension() * BigInt::from(m))
            .sum()
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::domain(
                "direct sum of representations of different groups",
            ));
        }
        let mut out = self.clone();
        for (lambda, m) in other.iter() {
            out.add_irreducible(lambda, m);
        }
        Ok(out)
    }

    /// The character `Σ m_λ χ_λ`.
    pub fn character(&self) -> ClassFunction {
        let table = CharacterTable::new(self.n);
        self.character_with(&table)
    }

    pub fn character_with(&self, table: &CharacterTable) -> ClassFunction {
        debug_assert_eq!(table.n(), self.n);
        let mut values = BTreeMap::new();
        for mu in table.labels() {
            let v: i64 = self
                .iter()
                .map(|(lambda, m)| m as i64 * table.value(lambda, mu).unwrap_or(0))
                .sum();
            values.insert(mu.clone(), Rational::from_integer(v.into()));
        }
        ClassFunction { n: self.n, values }
    }
}

/// Multiplicities `m_λ = ⟨f, χ_λ⟩`; fails unless all are nonnegative integers.
pub fn decompose(f: &ClassFunction) -> Result<IrrDecomposition> {
    decompose_with(&CharacterTable::new(f.n), f)
}

/// [`decompose`] against a precomputed character table of the same `S_n`.
pub fn decompose_with(table: &CharacterTable, f: &ClassFunction) -> Result<IrrDecomposition> {
    if table.n() != f.n {
        return Err(Error::domain(
            "character table and class function disagree on n",
        ));
    }
    let order = Rational::from_integer(factorial(f.n));
    let weighted: Vec<(usize, Rational)> = table
        .labels()
        .iter()
        .enumerate()
        .map(|(j, mu)| (j, Rational::from_integer(class_size(mu)) * &f.values[mu]))
        .collect();
    let mut out = IrrDecomposition::zero(f.n);
    for (i, lambda) in table.labels().iter().enumerate() {
        let mut acc = Rational::zero();
        for (j, w) in &weighted {
            let chi = table.values[i][*j];
            if chi != 0 {
                acc += w * Rational::from_integer(chi.into());
            }
        }
        let m = acc / &order;
        if !m.is_integer() || m.is_negative() {
            return Err(Error::NotACharacter(format!(
                "multiplicity of {lambda:?} would be {m}"
            )));
        }
        let m = m
            .to_integer()
            .to_u64()
            .ok_or_else(|| Error::Inconsistent(format!("multiplicity of {lambda:?} overflows")))?;
        out.add_irreducible(lambda, m);
    }
    if out.character_with(table) != *f {
        return Err(Error::Inconsistent(
            "decomposition does not reconstruct its input".into(),
        ));
    }
    Ok(out)
}
