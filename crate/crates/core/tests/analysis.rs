//! Padding, stability detection and polynomial fitting.

mod common;

use std::collections::BTreeMap;

use common::*;
use fistab_core::charpoly::{fit_char_polynomial, monomials, to_class_function};
use fistab_core::dimpoly::fit_dim_polynomial;
use fistab_core::fi::{detect_stability, length_of, pad, unpad, weight_of};
use fistab_core::induction::m_module;
use fistab_core::os::{betti, character};
use fistab_core::partition::partitions;
use fistab_core::{CharPolynomial, ClassFunction, FiSequence, Partition, Rational};
use proptest::prelude::*;

proptest! {
    #[test]
    fn pad_and_unpad_are_inverse(parts in proptest::collection::vec(1u32..5, 0..4), extra in 0u32..5) {
        let lambda = Partition::from_unsorted(parts);
        let n = lambda.size() + lambda.first() + extra;
        let padded = pad(&lambda, n).unwrap();
        prop_assert_eq!(padded.size(), n);
        prop_assert_eq!(unpad(&padded), lambda.clone());
        if lambda.size() + lambda.first() > 0 {
            prop_assert!(pad(&lambda, lambda.size() + lambda.first() - 1).is_err());
        }
    }

    #[test]
    fn fitted_polynomials_reproduce_random_inputs(
        coeffs in proptest::collection::vec(-5i64..6, 7),
        start in 3u32..5,
    ) {
        // random polynomial of weighted degree ≤ 3 in the binomial basis
        let q = CharPolynomial::from_terms(monomials(3).into_iter().zip(coeffs.into_iter().map(r)));
        let seq = FiSequence::tabulate(start, start + 4, |n| to_class_function(&q, n)).unwrap();
        let fitted = fit_char_polynomial(&seq, 3).unwrap();
        prop_assert_eq!(&fitted, &q);
        prop_assert!(fitted.weighted_degree() <= 3);
    }
}

#[test]
fn every_partition_is_padded() {
    for n in 0..=8 {
        for mu in partitions(n) {
            assert_eq!(pad(&unpad(&mu), n).unwrap(), mu);
        }
    }
}

#[test]
fn free_modules_have_the_expected_weight_length_and_stable_range() {
    for size in 1..=3 {
        for lambda in partitions(size) {
            let seq = FiSequence::tabulate(size, 9, |n| m_module(&lambda, n)).unwrap();
            for (n, v) in seq.iter() {
                assert!(weight_of(v) <= size);
                if n >= size + lambda.first() {
                    assert_eq!(weight_of(v), size);
                }
                assert!(length_of(v).unwrap() <= lambda.len() + 1);
            }
            let report = detect_stability(&seq).unwrap();
            // M(λ)_n contains V(λ)_n only once n ≥ |λ| + λ₁
            assert_eq!(
                report.stable_from,
                Some(size + lambda.first()),
                "M({lambda})"
            );
            assert_eq!(report.stable_multiplicities.get(&lambda), Some(&1));
        }
    }
}

#[test]
fn degree_one_character_polynomial_counts_fixed_pairs() {
    let seq = FiSequence::tabulate(4, 8, |n| character(n, 1)).unwrap();
    let q = fit_char_polynomial(&seq, 2).unwrap();
    for n in 4..=10 {
        let oracle = ClassFunction::from_fn(n, |mu| {
            let z1 = mu.multiplicity(1) as i64;
            r(z1 * (z1 - 1) / 2 + mu.multiplicity(2) as i64)
        });
        assert_eq!(to_class_function(&q, n), oracle);
    }
    assert_eq!(q.weighted_degree(), 2);
}

#[test]
fn degree_two_character_polynomial_has_weighted_degree_four() {
    let seq = FiSequence::tabulate(8, 10, |n| character(n, 2)).unwrap();
    let q = fit_char_polynomial(&seq, 4).unwrap();
    assert_eq!(q.weighted_degree(), 4);
    assert!(fit_char_polynomial(&seq, 3).is_err());
}

#[test]
fn betti_numbers_are_polynomial() {
    let dims1: BTreeMap<u32, u64> = (2..=10).map(|n| (n, betti(n, 1))).collect();
    let p1 = fit_dim_polynomial(&dims1, 4).unwrap();
    assert_eq!(p1.degree(), 2);
    let dims2: BTreeMap<u32, u64> = (2..=10).map(|n| (n, betti(n, 2))).collect();
    let p2 = fit_dim_polynomial(&dims2, 6).unwrap();
    assert_eq!(p2.degree(), 4);
    for n in 2..=20 {
        // e₂(1, …, n-1) = ((Σj)² - Σj²) / 2
        let s1: i64 = (1..n).sum();
        let s2: i64 = (1..n).map(|j| j * j).sum();
        assert_eq!(
            p2.evaluate(n),
            Rational::from_integer(((s1 * s1 - s2) / 2).into())
        );
    }
}
