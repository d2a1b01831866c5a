//! Sequences of `S_n`-representations viewed as FI-modules: padded partitions,
//! weight and length, uniform multiplicity stabilization, quotient Betti numbers.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::character::{ClassFunction, IrrDecomposition};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// `λ[n] = (n - |λ|, λ₁, …, λ_l)`; requires `n ≥ |λ| + λ₁`.
pub fn pad(lambda: &Partition, n: u32) -> Result<Partition> {
    let need = lambda.size() + lambda.first();
    if n < need {
        return Err(Error::domain(format!(
            "cannot pad {lambda:?} to n={n}; need n >= {need}"
        )));
    }
    Ok(lambda.with_head(n - lambda.size()))
}

/// Drops the first part, so `V_μ = V(unpad(μ))_n`.
pub fn unpad(mu: &Partition) -> Partition {
    mu.tail()
}

/// Largest `|λ|` over constituents `V(λ)_n`; 0 for the zero representation.
pub fn weight_of(v: &IrrDecomposition) -> u32 {
    v.iter().map(|(mu, _)| unpad(mu).size()).max().unwrap_or(0)
}

/// Largest number of rows among constituents.
pub fn length_of(v: &IrrDecomposition) -> Result<usize> {
    v.iter()
        .map(|(mu, _)| mu.len())
        .max()
        .ok_or_else(|| Error::domain("length of the zero representation is undefined"))
}

/// Multiplicity of the trivial representation; by transfer this is the Betti
/// number of the quotient by `S_n`.
pub fn quotient_betti(v: &IrrDecomposition) -> u64 {
    v.multiplicity(&Partition::row(v.n()))
}

/// Objects attached to a particular `S_n`.
pub trait OverSymmetricGroup {
    fn group_n(&self) -> u32;
}

impl OverSymmetricGroup for IrrDecomposition {
    fn group_n(&self) -> u32 {
        self.n()
    }
}

impl OverSymmetricGroup for ClassFunction {
    fn group_n(&self) -> u32 {
        self.n()
    }
}

/// Values `V_n` for every `n` in a contiguous window `[n_min, n_max]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiSequence<T> {
    n_min: u32,
    entries: Vec<T>,
}

impl<T: OverSymmetricGroup> FiSequence<T> {
    /// `entries[j]` must live over `S_{n_min + j}`.
    pub fn new(n_min: u32, entries: Vec<T>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::domain("empty FI sequence"));
        }
        for (j, e) in entries.iter().enumerate() {
            let n = n_min + j as u32;
            if e.group_n() != n {
                return Err(Error::domain(format!(
                    "entry for n={n} lives over S_{}",
                    e.group_n()
                )));
            }
        }
        Ok(FiSequence { n_min, entries })
    }

    /// From a map keyed by `n`; keys must be contiguous.
    pub fn from_map(map: BTreeMap<u32, T>) -> Result<Self> {
        let Some(&n_min) = map.keys().next() else {
            return Err(Error::domain("empty FI sequence"));
        };
        for (j, &n) in map.keys().enumerate() {
            if n != n_min + j as u32 {
                return Err(Error::domain("FI sequence window is not contiguous"));
            }
        }
        Self::new(n_min, map.into_values().collect())
    }

    pub fn tabulate(n_min: u32, n_max: u32, f: impl FnMut(u32) -> T) -> Result<Self> {
        Self::new(n_min, (n_min..=n_max).map(f).collect())
    }
}

impl<T> FiSequence<T> {
    /// `(n_min, n_max)`.
    pub fn window(&self) -> (u32, u32) {
        (self.n_min, self.n_min + self.entries.len() as u32 - 1)
    }

    pub fn get(&self, n: u32) -> Option<&T> {
        n.checked_sub(self.n_min)
            .and_then(|j| self.entries.get(j as usize))
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &T)> {
        let n_min = self.n_min;
        self.entries
            .iter()
            .enumerate()
            .map(move |(j, e)| (n_min + j as u32, e))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Multiplicity table of a decomposition keyed by unpadded partitions.
pub fn unpadded_table(v: &IrrDecomposition) -> BTreeMap<Partition, u64> {
    v.iter().map(|(mu, m)| (unpad(mu), m)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityReport {
    pub window: (u32, u32),
    /// Smallest `N` from which every `V(λ)_n` multiplicity is constant through the
    /// end of the window; `None` when the last two entries already disagree.
    pub stable_from: Option<u32>,
    /// Multiplicities at `n_max`, keyed by unpadded partition.
    pub stable_multiplicities: BTreeMap<Partition, u64>,
    pub tables: Vec<(u32, BTreeMap<Partition, u64>)>,
}

/// Finds where the unpadded multiplicity table stops changing inside the window.
/// Nothing is claimed beyond `n_max`.
pub fn detect_stability(seq: &FiSequence<IrrDecomposition>) -> Result<StabilityReport> {
    if seq.len() < 2 {
        return Err(Error::domain(
            "stability detection needs a window of length >= 2",
        ));
    }
    let tables: Vec<(u32, BTreeMap<Partition, u64>)> =
        seq.iter().map(|(n, v)| (n, unpadded_table(v))).collect();
    let (n_max, last) = tables.last().expect("nonempty").clone();
    let mut stable_from = n_max;
    for (n, t) in tables.iter().rev().skip(1) {
        if *t != last {
            break;
        }
        stable_from = *n;
    }
    Ok(StabilityReport {
        window: seq.window(),
        stable_from: (stable_from < n_max).then_some(stable_from),
        stable_multiplicities: last,
        tables,
    })
}
