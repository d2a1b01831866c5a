//! Induction products, the free FI-modules `M(λ)` and `M(m)`, coinvariants, and
//! Künneth powers `H^i(M^n)` with their wreath-product invariants.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::character::{class_size, decompose, CharacterTable, ClassFunction, IrrDecomposition};
use crate::error::{Error, Result};
use crate::partition::{binomial, factorial, partitions, CycleType, Partition};
use crate::Rational;

/// Calls `visit(ν, ρ, c)` for every way of splitting the cycles of `μ` into a
/// cycle type `ν` of size `a` and the complementary `ρ`; `c = ∏_l C(Z_l(μ), Z_l(ν))`
/// counts the ways.
fn for_each_split(mu: &CycleType, a: u32, mut visit: impl FnMut(&CycleType, &CycleType, BigInt)) {
    let counts = mu.cycle_counts();
    let mut take = vec![0u32; counts.len()];

    fn go(
        l: usize,
        remaining: u32,
        counts: &[u32],
        take: &mut Vec<u32>,
        visit: &mut dyn FnMut(&CycleType, &CycleType, BigInt),
    ) {
        if l == counts.len() {
            if remaining != 0 {
                return;
            }
            let mut nu = Vec::new();
            let mut rho = Vec::new();
            let mut coef = BigInt::one();
            for (idx, (&z, &j)) in counts.iter().zip(take.iter()).enumerate() {
                let len = idx as u32 + 1;
                nu.extend(core::iter::repeat_n(len, j as usize));
                rho.extend(core::iter::repeat_n(len, (z - j) as usize));
                coef *= binomial(z, j);
            }
            visit(
                &Partition::from_unsorted(nu),
                &Partition::from_unsorted(rho),
                coef,
            );
            return;
        }
        let len = l as u32 + 1;
        for j in 0..=counts[l] {
            if j * len > remaining {
                break;
            }
            take[l] = j;
            go(l + 1, remaining - j * len, counts, take, visit);
        }
        take[l] = 0;
    }

    go(0, a, &counts, &mut take, &mut visit);
}

/// Character of `Ind_{S_a × S_b}^{S_{a+b}} (f ⊠ g)`.
///
/// At a class `μ` this is `Σ_{ν ∪ ρ = μ} (z_μ / z_ν z_ρ) f(ν) g(ρ)` over the
/// splittings of the cycles of `μ`.
pub fn induced_character(f: &ClassFunction, g: &ClassFunction) -> ClassFunction {
    let a = f.n();
    ClassFunction::from_fn(a + g.n(), |mu| {
        let mut acc = Rational::zero();
        for_each_split(mu, a, |nu, rho, coef| {
            let fv = f.value(nu).expect("cycle type of size a");
            let gv = g.value(rho).expect("cycle type of size b");
            acc += Rational::from_integer(coef) * fv * gv;
        });
        acc
    })
}

/// `M(λ)_n = Ind_{S_|λ| × S_{n-|λ|}}^{S_n} V_λ ⊠ triv`, by the Pieri rule:
/// one copy of each `V_μ` with `μ / λ` a horizontal strip.
pub fn m_module(lambda: &Partition, n: u32) -> IrrDecomposition {
    let mut out = IrrDecomposition::zero(n);
    if n < lambda.size() {
        return out;
    }
    for mu in partitions(n) {
        if mu.is_horizontal_strip_over(lambda) {
            out.add_irreducible(&mu, 1);
        }
    }
    out
}

/// `M(m)_n`, induced from the regular representation of `S_m`.
pub fn m_regular(m: u32, n: u32) -> IrrDecomposition {
    let mut out = IrrDecomposition::zero(n);
    if n < m {
        return out;
    }
    for lambda in partitions(m) {
        let dim = lambda.dimension().to_u64().expect("dimension fits in u64");
        for (mu, mult) in m_module(&lambda, n).iter() {
            out.add_irreducible(mu, mult * dim);
        }
    }
    out
}

/// `(V_n)_{S_{n-a}}` as an `S_a`-representation.
///
/// The character of `V` is restricted to `S_a × S_{n-a}` and averaged over the
/// `S_{n-a}` factor, which over `Q` identifies coinvariants with invariants.
pub fn coinvariants_as_sa(v: &IrrDecomposition, a: u32) -> Result<IrrDecomposition> {
    let n = v.n();
    if a > n {
        return Err(Error::domain(format!(
            "coinvariants need a <= n, got a={a}, n={n}"
        )));
    }
    let chi = v.character();
    let rest = n - a;
    let rest_classes: Vec<(CycleType, BigInt)> = partitions(rest)
        .into_iter()
        .map(|rho| {
            let size = class_size(&rho);
            (rho, size)
        })
        .collect();
    let rest_order = Rational::from_integer(factorial(rest));
    let psi = ClassFunction::from_fn(a, |nu| {
        let mut acc = Rational::zero();
        for (rho, size) in &rest_classes {
            let value = chi.value(&nu.union(rho)).expect("class of S_n");
            acc += Rational::from_integer(size.clone()) * value;
        }
        acc / &rest_order
    });
    decompose(&psi)
}

fn check_connected(graded_dims: &[u64]) -> Result<()> {
    match graded_dims.first() {
        Some(1) => Ok(()),
        _ => Err(Error::domain(
            "graded dimensions must start with 1 (connected space)",
        )),
    }
}

/// Character of `S_n` on `H^i(M^n; Q)` given the Betti numbers `dim H^g(M)`.
///
/// An `l`-cycle of `σ` only sees tensors that repeat the same basis vector along
/// the cycle; rotating `l` copies of a degree-`g` class past each other gives the
/// Koszul sign `(-1)^{g(l-1)}`. So the character at `σ` is the coefficient of
/// `t^i` in `∏_{cycles} Σ_g (-1)^{g(l-1)} dim H^g · t^{gl}`.
pub fn kunneth_power(graded_dims: &[u64], n: u32, i: u32) -> Result<ClassFunction> {
    check_connected(graded_dims)?;
    let top = i as usize;
    Ok(ClassFunction::from_fn(n, |mu| {
        let mut poly = vec![BigInt::zero(); top + 1];
        poly[0] = BigInt::one();
        for &l in mu.parts() {
            let mut factor = vec![BigInt::zero(); top + 1];
            for (g, &d) in graded_dims.iter().enumerate() {
                let deg = g * l as usize;
                if deg > top {
                    break;
                }
                let odd = g % 2 == 1 && l % 2 == 0;
                factor[deg] += if odd {
                    -BigInt::from(d)
                } else {
                    BigInt::from(d)
                };
            }
            let mut next = vec![BigInt::zero(); top + 1];
            for (x, cx) in poly.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                for (y, cy) in factor.iter().enumerate().take(top + 1 - x) {
                    if !cy.is_zero() {
                        next[x + y] += cx * cy;
                    }
                }
            }
            poly = next;
        }
        Rational::from_integer(poly[top].clone())
    }))
}

/// `dim H^i(G ≀ S_n; Q)` for `G` with Betti numbers `graded_dims`: the multiplicity
/// of the trivial representation in `H^i(G^n; Q)`.
pub fn wreath_invariant_dim(graded_dims: &[u64], n: u32, i: u32) -> Result<u64> {
    let chi = kunneth_power(graded_dims, n, i)?;
    let m = crate::character::inner_product(&chi, &ClassFunction::trivial(n))?;
    if !m.is_integer() {
        return Err(Error::Inconsistent(format!(
            "trivial multiplicity {m} of a Künneth power is not an integer"
        )));
    }
    m.to_integer()
        .to_u64()
        .ok_or_else(|| Error::Inconsistent("negative trivial multiplicity".into()))
}

/// Convenience: `decompose(kunneth_power(..))`.
pub fn kunneth_decomposition(graded_dims: &[u64], n: u32, i: u32) -> Result<IrrDecomposition> {
    let chi = kunneth_power(graded_dims, n, i)?;
    crate::character::decompose_with(&CharacterTable::new(n), &chi)
}
