//! Shared helpers for the integration tests. Every oracle here is written from
//! first principles and does not call into the code it checks.

#![allow(dead_code)]

use fistab_core::{Partition, Permutation, Rational};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Seed for the randomized tests; override with `FISTAB_TEST_SEED`.
pub fn seed() -> u64 {
    std::env::var("FISTAB_TEST_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0x5eed_f157)
}

pub fn rng() -> StdRng {
    StdRng::seed_from_u64(seed())
}

pub fn random_perm(rng: &mut StdRng, n: u32) -> Permutation {
    let mut images: Vec<u32> = (0..n).collect();
    for i in (1..images.len()).rev() {
        let j = rng.gen_range(0..=i);
        images.swap(i, j);
    }
    Permutation::from_images(images).unwrap()
}

pub fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

pub fn r(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

pub fn fact(n: u32) -> u128 {
    (1..=n as u128).product()
}

/// Cycle lengths of the permutation `i ↦ images[i]`, sorted decreasingly.
pub fn cycle_lengths(images: &[u32]) -> Vec<u32> {
    let mut seen = vec![false; images.len()];
    let mut out = Vec::new();
    for start in 0..images.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = images[x] as usize;
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Every permutation of `0..n` as an image vector (Heap's algorithm).
pub fn all_images(n: u32) -> Vec<Vec<u32>> {
    fn heap(k: usize, a: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, a, out);
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
    }
    let mut a: Vec<u32> = (0..n).collect();
    let mut out = Vec::new();
    heap(n as usize, &mut a, &mut out);
    out
}

/// A permutation with the given cycle lengths, built from consecutive blocks.
pub fn images_of_type(lengths: &[u32]) -> Vec<u32> {
    let mut images = Vec::new();
    let mut base = 0u32;
    for &l in lengths {
        for j in 0..l {
            images.push(base + (j + 1) % l);
        }
        base += l;
    }
    images
}

/// Partitions of `n` as plain vectors, by brute-force recursion.
pub fn partition_vecs(n: u32) -> Vec<Vec<u32>> {
    fn go(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rem.min(max)).rev() {
            cur.push(part);
            go(rem - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `z_μ = ∏_l l^{m_l} m_l!`.
pub fn z(mu: &[u32]) -> u128 {
    let mut out = 1u128;
    let max = mu.iter().copied().max().unwrap_or(0);
    for l in 1..=max {
        let m = mu.iter().filter(|&&x| x == l).count() as u32;
        out *= (l as u128).pow(m) * fact(m);
    }
    out
}
