//! Integer partitions.
//!
//! A [`Partition`] is stored with weakly decreasing, strictly positive parts.
//! The same type doubles as the cycle type of a permutation ([`CycleType`]);
//! cycle counts `Z_l` are computed on demand.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

/// Cycle type of a permutation of `[n]`, a partition of `n`.
pub type CycleType = Partition;

impl Partition {
    /// Builds a partition from parts that must already be weakly decreasing and positive.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::domain("partition parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain("partition parts must be weakly decreasing"));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`, indexing the trivial representation.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition `(1^n)`, indexing the sign representation.
    pub fn column(n: u32) -> Self {
        Partition {
            parts: vec![1; n as usize],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `|λ|`
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part (zero based), or 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Largest part `λ₁`, or 0 for the empty partition.
    pub fn first(&self) -> u32 {
        self.part(0)
    }

    pub fn conjugate(&self) -> Self {
        let parts = (1..=self.first())
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Number of parts equal to `l`; for a cycle type this is `Z_l`.
    pub fn multiplicity(&self, l: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == l).count() as u32
    }

    /// `[Z_1, Z_2, …, Z_{λ₁}]`.
    pub fn cycle_counts(&self) -> Vec<u32> {
        let mut counts = vec![0u32; self.first() as usize];
        for &p in &self.parts {
            counts[p as usize - 1] += 1;
        }
        counts
    }

    /// Young diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| self.parts[i] >= other.parts[i])
    }

    /// True when `self / inner` is a horizontal strip, i.e. the parts interlace
    /// `self₁ ≥ inner₁ ≥ self₂ ≥ inner₂ ≥ …`.
    pub fn is_horizontal_strip_over(&self, inner: &Partition) -> bool {
        if !self.contains(inner) {
            return false;
        }
        (1..self.len()).all(|i| self.parts[i] <= inner.part(i - 1))
    }

    /// Hook lengths of every box, row by row.
    pub fn hook_lengths(&self) -> Vec<u32> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size() as usize);
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                let arm = row - j as u32 - 1;
                let leg = conj.parts[j] - i as u32 - 1;
                hooks.push(arm + leg + 1);
            }
        }
        hooks
    }

    /// Dimension of the irreducible `V_λ`, by the hook length formula.
    pub fn dimension(&self) -> BigInt {
        let hooks: BigInt = self.hook_lengths().into_iter().map(BigInt::from).product();
        factorial(self.size()) / hooks
    }

    /// Multiset union of parts, e.g. the cycle type of a product of disjoint permutations.
    pub fn union(&self, other: &Partition) -> Self {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Self::from_unsorted(parts)
    }

    /// Partition obtained by deleting the first part.
    pub fn tail(&self) -> Self {
        Partition {
            parts: self.parts.iter().skip(1).copied().collect(),
        }
    }

    /// Partition with `head` prepended; callers ensure `head >= λ₁`.
    pub(crate) fn with_head(&self, head: u32) -> Self {
        let mut parts = Vec::with_capacity(self.len() + 1);
        if head > 0 {
            parts.push(head);
        }
        parts.extend_from_slice(&self.parts);
        Partition { parts }
    }
}

/// All partitions of `n`, in lexicographic order of their part sequences
/// (so `(1,1,1) < (2,1) < (3)`).
pub fn partitions(n: u32) -> Vec<Partition> {
    fn go(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in 1..=remaining.min(max) {
            prefix.push(p);
            go(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product::<BigInt>()
}

/// `C(n, k)` for `0 ≤ k`, zero when `k > n`.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

impl fmt::Display for Partition {
    /// `3+2+1`; the empty partition prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `3+2+1`. `0`, the empty string and `∅` denote the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" || s == "∅" {
            return Ok(Self::empty());
        }
        let parts = s
            .split('+')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Domain(String::from("malformed partition string")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}
