//! Exact computations with sequences of symmetric-group representations.
//!
//! The crate is `no_std` and only needs `alloc`. It covers
//!
//! * character theory of `S_n` over the rationals ([`partition`], [`perm`],
//!   [`character`]),
//! * induction products and the free FI-modules `M(λ)`, `M(m)`, Künneth powers
//!   and wreath-product invariants ([`induction`]),
//! * the FI-module analysis layer: padded partitions, weight, length,
//!   multiplicity stabilization and polynomial fitting ([`fi`], [`charpoly`],
//!   [`dimpoly`]),
//! * the spectral-sequence stability-degree arithmetic ([`bounds`]),
//! * the Orlik–Solomon model of `H^*(C_n(R^2); Q)` ([`os`]).
//!
//! All arithmetic is exact: characters are integers, class-function values are
//! [`Rational`]s backed by arbitrary-precision integers.
//!
//! ```
//! use fistab_core::character::{decompose, mn_character};
//! use fistab_core::fi::{detect_stability, FiSequence};
//! use fistab_core::{os, Partition};
//!
//! let lambda: Partition = "2+1".parse().unwrap();
//! assert_eq!(mn_character(&lambda, &"3".parse().unwrap()).unwrap(), -1);
//!
//! // H^1 of configuration spaces of the plane, n = 2..=8
//! let h1 = FiSequence::tabulate(2, 8, |n| decompose(&os::character(n, 1)).unwrap()).unwrap();
//! assert_eq!(detect_stability(&h1).unwrap().stable_from, Some(4));
//! ```
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bounds;
pub mod character;
pub mod charpoly;
pub mod dimpoly;
mod error;
pub mod fi;
pub mod induction;
pub mod linalg;
pub mod os;
pub mod partition;
pub mod perm;

pub use error::{Error, Result};

/// Exact rational number used for class-function values and fitted coefficients.
pub type Rational = num_rational::BigRational;

pub use bounds::{BoundParams, StabilityType, Table1Example, Table1Row};
pub use character::{ClassFunction, IrrDecomposition};
pub use charpoly::CharPolynomial;
pub use dimpoly::IntPolynomial;
pub use fi::{FiSequence, StabilityReport};
pub use partition::{CycleType, Partition};
pub use perm::Permutation;
