//! The Orlik–Solomon algebra of the braid arrangement, a concrete model of
//! `H^*(C_n(R^2); Q)`.
//!
//! Degree-one generators are `ω_{ab}` for `1 ≤ a < b ≤ n` (with `ω_{ba} = ω_{ab}`),
//! subject to `ω² = 0`, graded commutativity and the Arnold relation
//! `ω_{ab}ω_{bc} + ω_{bc}ω_{ca} + ω_{ca}ω_{ab} = 0`. The no-broken-circuit basis in
//! degree `k` consists of products `ω_{a₁b₁}⋯ω_{a_k b_k}` with `b₁ < ⋯ < b_k`.
//!
//! The NBC monomials form a basis over `Z`, so every matrix here has integer
//! entries.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;

use crate::character::{decompose_with, CharacterTable, ClassFunction, IrrDecomposition};
use crate::error::{Error, Result};
use crate::linalg::{IntMatrix, SparseEchelon, SparseVec};
use crate::perm::Permutation;
use crate::Rational;

/// The generator `ω_{ab}`, stored with `a < b` (labels are one based).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Edge {
    a: u32,
    b: u32,
}

impl Edge {
    /// `ω_{xy}`; the order of `x` and `y` does not matter.
    pub fn new(x: u32, y: u32) -> Result<Self> {
        if x == y || x == 0 || y == 0 {
            return Err(Error::domain(format!("invalid generator w({x},{y})")));
        }
        Ok(Edge {
            a: x.min(y),
            b: x.max(y),
        })
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    fn relabel(&self, sigma: &Permutation) -> Edge {
        let x = sigma.apply(self.a - 1) + 1;
        let y = sigma.apply(self.b - 1) + 1;
        Edge {
            a: x.min(y),
            b: x.max(y),
        }
    }
}

/// Monomials are kept sorted by second index, then first.
impl Ord for Edge {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.b, self.a).cmp(&(other.b, other.a))
    }
}

impl PartialOrd for Edge {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An NBC basis monomial: edges with strictly increasing second index.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct NbcMonomial {
    edges: Vec<Edge>,
}

impl NbcMonomial {
    pub fn new(edges: Vec<Edge>) -> Result<Self> {
        if edges.windows(2).any(|w| w[0].b >= w[1].b) {
            return Err(Error::domain(
                "NBC monomial needs strictly increasing second indices",
            ));
        }
        Ok(NbcMonomial { edges })
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn degree(&self) -> usize {
        self.edges.len()
    }
}

impl fmt::Display for NbcMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.edges.is_empty() {
            return f.write_str("1");
        }
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str("^")?;
            }
            write!(f, "w{},{}", e.a, e.b)?;
        }
        Ok(())
    }
}

/// Homogeneous element of degree `k`, as integer coordinates in the NBC basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OsElement {
    degree: usize,
    terms: BTreeMap<NbcMonomial, i64>,
}

impl OsElement {
    pub fn zero(degree: usize) -> Self {
        OsElement {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<NbcMonomial, i64> {
        &self.terms
    }

    pub fn coefficient(&self, m: &NbcMonomial) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: NbcMonomial, c: i64) {
        let entry = self.terms.entry(m.clone()).or_insert(0);
        *entry = entry
            .checked_add(c)
            .expect("Orlik-Solomon coefficient overflow");
        if *entry == 0 {
            self.terms.remove(&m);
        }
    }

    /// `self + c·other`.
    pub fn add_scaled(&mut self, other: &OsElement, c: i64) {
        for (m, &x) in &other.terms {
            self.add_term(m.clone(), x * c);
        }
    }
}

/// Sorts a product of edges by `(b, a)` and returns the sign of the reordering,
/// or `None` if some generator repeats (the product vanishes).
fn sort_with_sign(edges: &mut [Edge]) -> Option<i64> {
    let mut sign = 1i64;
    // insertion sort; each adjacent swap of degree-one classes flips the sign
    for i in 1..edges.len() {
        let mut j = i;
        while j > 0 {
            match edges[j - 1].cmp(&edges[j]) {
                Ordering::Greater => {
                    edges.swap(j - 1, j);
                    sign = -sign;
                    j -= 1;
                }
                Ordering::Equal => return None,
                Ordering::Less => break,
            }
        }
    }
    Some(sign)
}

/// Rewrites the product `ω_{e₁}ω_{e₂}⋯` (in the given order) in the NBC basis.
///
/// After sorting, the first pair with a repeated second index `c`, say
/// `ω_{ac}ω_{bc}` with `a < b`, is replaced using the Arnold relation
/// `ω_{ac}ω_{bc} = ω_{ab}ω_{bc} - ω_{ab}ω_{ac}`. Each rewrite replaces one
/// occurrence of `c` among the second indices by `b < c`, so the multiset of
/// second indices strictly decreases (compared as a decreasingly sorted list,
/// lexicographically) and the process terminates.
pub fn straighten(edges: &[Edge]) -> OsElement {
    let mut out = OsElement::zero(edges.len());
    let mut work: Vec<(Vec<Edge>, i64)> = vec![(edges.to_vec(), 1)];
    while let Some((mut mono, coef)) = work.pop() {
        let Some(sign) = sort_with_sign(&mut mono) else {
            continue;
        };
        let coef = coef * sign;
        match mono.windows(2).position(|w| w[0].b == w[1].b) {
            None => out.add_term(NbcMonomial { edges: mono }, coef),
            Some(t) => {
                let (a, b, c) = (mono[t].a, mono[t + 1].a, mono[t].b);
                let ab = Edge { a, b };
                let mut first = mono.clone();
                first[t] = ab;
                first[t + 1] = Edge { a: b, b: c };
                let mut second = mono;
                second[t] = ab;
                second[t + 1] = Edge { a, b: c };
                work.push((first, coef));
                work.push((second, -coef));
            }
        }
    }
    out
}

/// NBC monomials of degree `k` on `n` points, sorted. Empty when `k > n - 1`
/// (except the unit in degree 0).
pub fn nbc_basis(n: u32, k: usize) -> Vec<NbcMonomial> {
    fn go(next_b: u32, n: u32, left: usize, cur: &mut Vec<Edge>, out: &mut Vec<NbcMonomial>) {
        if left == 0 {
            out.push(NbcMonomial { edges: cur.clone() });
            return;
        }
        for b in next_b..=n {
            for a in 1..b {
                cur.push(Edge { a, b });
                go(b + 1, n, left - 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(2, n, k, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// A sorted NBC basis with index lookup.
#[derive(Clone, Debug)]
pub struct OsBasis {
    n: u32,
    k: usize,
    monomials: Vec<NbcMonomial>,
}

impl OsBasis {
    pub fn new(n: u32, k: usize) -> Self {
        OsBasis {
            n,
            k,
            monomials: nbc_basis(n, k),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[NbcMonomial] {
        &self.monomials
    }

    pub fn index_of(&self, m: &NbcMonomial) -> Option<usize> {
        self.monomials.binary_search(m).ok()
    }

    fn to_sparse(&self, x: &OsElement) -> SparseVec {
        let mut v: SparseVec = x
            .terms
            .iter()
            .map(|(m, &c)| {
                let idx = self.index_of(m).expect("element lives in this basis");
                (idx, BigInt::from(c))
            })
            .collect();
        v.sort_by_key(|(i, _)| *i);
        v
    }
}

/// `σ · m`: relabel every generator, then straighten.
pub fn act(sigma: &Permutation, m: &NbcMonomial) -> OsElement {
    let edges: Vec<Edge> = m.edges.iter().map(|e| e.relabel(sigma)).collect();
    straighten(&edges)
}

fn action_matrix_on(basis: &OsBasis, sigma: &Permutation) -> IntMatrix {
    let dim = basis.len();
    let mut mat = IntMatrix::zeros(dim, dim);
    for (col, m) in basis.monomials.iter().enumerate() {
        for (img, &c) in act(sigma, m).terms() {
            let row = basis.index_of(img).expect("image lies in the basis");
            mat.set(row, col, c);
        }
    }
    mat
}

/// Matrix of `σ ∈ S_n` on `H^k(C_n(R^2))` in the NBC basis; column `j` is the
/// image of the `j`-th basis monomial.
pub fn action_matrix(sigma: &Permutation, k: usize) -> IntMatrix {
    action_matrix_on(&OsBasis::new(sigma.degree(), k), sigma)
}

fn trace_on(basis: &OsBasis, sigma: &Permutation) -> i64 {
    basis
        .monomials
        .iter()
        .map(|m| act(sigma, m).coefficient(m))
        .sum()
}

/// Character of `S_n` on `H^k(C_n(R^2))`, one representative per class.
pub fn character(n: u32, k: usize) -> ClassFunction {
    let basis = OsBasis::new(n, k);
    ClassFunction::from_fn(n, |mu| {
        let sigma = Permutation::from_cycle_type(mu);
        Rational::from_integer(trace_on(&basis, &sigma).into())
    })
}

/// Irreducible decomposition of `H^k(C_n(R^2))`.
pub fn decomposition(n: u32, k: usize) -> Result<IrrDecomposition> {
    decomposition_with(&CharacterTable::new(n), k)
}

pub fn decomposition_with(table: &CharacterTable, k: usize) -> Result<IrrDecomposition> {
    let chi = character(table.n(), k);
    decompose_with(table, &chi).map_err(|e| match e {
        Error::NotACharacter(msg) => Error::Inconsistent(format!(
            "H^{k}(C_{}) trace is not a character: {msg}",
            table.n()
        )),
        other => other,
    })
}

/// Map `H^k(C_n) → H^k(C_{n+1})` induced by the inclusion `[n] ↪ [n+1]`.
pub fn fi_map(n: u32, k: usize) -> IntMatrix {
    let source = OsBasis::new(n, k);
    let target = OsBasis::new(n + 1, k);
    let mut mat = IntMatrix::zeros(target.len(), source.len());
    for (col, m) in source.monomials.iter().enumerate() {
        let row = target
            .index_of(m)
            .expect("NBC monomials persist under inclusion");
        mat.set(row, col, 1);
    }
    mat
}

/// `dim H^k(C_n(R^2)) = e_k(1, 2, …, n-1)`.
pub fn betti(n: u32, k: usize) -> u64 {
    // coefficients of ∏_{j<n} (1 + j t), truncated at t^k
    let mut poly = vec![0u64; k + 1];
    poly[0] = 1;
    for j in 1..n as u64 {
        for d in (1..=k).rev() {
            poly[d] += j * poly[d - 1];
        }
    }
    poly[k]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoinvariantReport {
    pub n: u32,
    pub a: u32,
    pub k: usize,
    pub injective: bool,
    pub surjective: bool,
    /// Dimensions of `(V_n)_{S_{n-a}}` and `(V_{n+1})_{S_{n+1-a}}`.
    pub dims: (u64, u64),
    pub image_rank: u64,
}

/// Span of `(s - 1)v` over the adjacent transpositions `s` of the points
/// `a+1, …, n` and basis vectors `v`: the kernel of the projection onto
/// `S_{n-a}`-coinvariants.
fn relation_span(basis: &OsBasis, a: u32) -> SparseEchelon {
    let n = basis.n();
    let mut span = SparseEchelon::new();
    for j in (a + 1)..n {
        // swap of one-based points j and j+1
        let s = Permutation::transposition(n, j - 1, j);
        for m in &basis.monomials {
            let mut image = act(&s, m);
            let mut unit = OsElement::zero(basis.k);
            unit.add_term(m.clone(), 1);
            image.add_scaled(&unit, -1);
            if !image.is_zero() {
                span.insert(basis.to_sparse(&image));
            }
        }
    }
    span
}

/// Decides injectivity and surjectivity of
/// `(V_n)_{S_{n-a}} → (V_{n+1})_{S_{n+1-a}}` for `V = H^k(C_•(R^2))` by exact ranks.
pub fn coinvariant_report(n: u32, a: u32, k: usize) -> Result<CoinvariantReport> {
    if a > n {
        return Err(Error::domain(format!(
            "coinvariants need a <= n, got a={a}, n={n}"
        )));
    }
    let source = OsBasis::new(n, k);
    let target = OsBasis::new(n + 1, k);
    let source_rel = relation_span(&source, a);
    let mut target_span = relation_span(&target, a);
    let target_rel_rank = target_span.rank();
    let d_n = (source.len() - source_rel.rank()) as u64;
    let d_next = (target.len() - target_rel_rank) as u64;
    for m in &source.monomials {
        let row = target
            .index_of(m)
            .expect("NBC monomials persist under inclusion");
        target_span.insert(vec![(row, BigInt::from(1))]);
    }
    let image_rank = (target_span.rank() - target_rel_rank) as u64;
    Ok(CoinvariantReport {
        n,
        a,
        k,
        injective: image_rank == d_n,
        surjective: image_rank == d_next,
        dims: (d_n, d_next),
        image_rank,
    })
}

/// Trace of `σ` on `H^k(C_n(R^2))`.
pub fn trace(sigma: &Permutation, k: usize) -> i64 {
    trace_on(&OsBasis::new(sigma.degree(), k), sigma)
}

/// Decompositions of `H^k(C_n(R^2))` for every `n` in `[n_min, n_max]`.
pub fn decompositions(n_min: u32, n_max: u32, k: usize) -> Result<Vec<IrrDecomposition>> {
    (n_min..=n_max).map(|n| decomposition(n, k)).collect()
}
