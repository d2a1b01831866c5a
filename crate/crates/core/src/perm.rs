//! Permutations of `{0, …, n-1}`.
//!
//! Points are zero based internally; the Orlik–Solomon model converts to the
//! one-based labels `1..=n` at its boundary.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::partition::{CycleType, Partition};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: u32) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// `images[i]` is the image of `i`; must be a bijection of `{0, …, n-1}`.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::domain("images do not form a bijection"));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Swap of `i` and `j` in `S_n`.
    pub fn transposition(n: u32, i: u32, j: u32) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i as usize, j as usize);
        p
    }

    /// Standard representative of a conjugacy class: cycles on consecutive points,
    /// in the order the parts appear.
    pub fn from_cycle_type(mu: &CycleType) -> Self {
        let mut images = Vec::with_capacity(mu.size() as usize);
        let mut start = 0u32;
        for &l in mu.parts() {
            for j in 0..l {
                images.push(start + (j + 1) % l);
            }
            start += l;
        }
        Permutation { images }
    }

    pub fn degree(&self) -> u32 {
        self.images.len() as u32
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, i: u32) -> u32 {
        self.images[i as usize]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = alloc::vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation { images }
    }

    /// The same permutation viewed in `S_{n+1}`, fixing the new last point.
    pub fn extend(&self) -> Permutation {
        let mut images = self.images.clone();
        images.push(self.images.len() as u32);
        Permutation { images }
    }

    pub fn cycle_type(&self) -> CycleType {
        let n = self.images.len();
        let mut seen = alloc::vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            lengths.push(len);
        }
        Partition::from_unsorted(lengths)
    }

    /// Advances to the next permutation in lexicographic order of the image
    /// sequence; returns false after the last one.
    pub fn next_lexicographic(&mut self) -> bool {
        let v = &mut self.images;
        if v.len() < 2 {
            return false;
        }
        let mut i = v.len() - 1;
        while i > 0 && v[i - 1] >= v[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = v.len() - 1;
        while v[j] <= v[i - 1] {
            j -= 1;
        }
        v.swap(i - 1, j);
        v[i..].reverse();
        true
    }

    /// Every element of `S_n`; `n!` of them, so only for small `n`.
    pub fn all(n: u32) -> Vec<Permutation> {
        let mut p = Self::identity(n);
        let mut out = alloc::vec![p.clone()];
        while p.next_lexicographic() {
            out.push(p.clone());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn representative_has_requested_cycle_type() {
        for n in 0..=7 {
            for mu in crate::partition::partitions(n) {
                assert_eq!(Permutation::from_cycle_type(&mu).cycle_type(), mu);
            }
        }
    }

    #[test]
    fn enumerates_factorial_many() {
        assert_eq!(Permutation::all(4).len(), 24);
        assert_eq!(Permutation::all(0).len(), 1);
    }

    #[test]
    fn compose_and_inverse() {
        let s = Permutation::from_images(alloc::vec![1, 2, 0, 3]).unwrap();
        let t = Permutation::transposition(4, 0, 3);
        assert_eq!(s.compose(&s.inverse()), Permutation::identity(4));
        // apply t first, then s
        assert_eq!(s.compose(&t).apply(0), s.apply(3));
        assert!(Permutation::from_images(alloc::vec![0, 0]).is_err());
    }
}
