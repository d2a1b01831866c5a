use alloc::string::String;
use alloc::vec::Vec;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A class function whose irreducible multiplicities are not nonnegative integers.
    #[error("not a representation character: {0}")]
    NotACharacter(String),
    #[error("no polynomial of degree at most {degree_bound} fits the data")]
    NoPolynomial { degree_bound: u32 },
    /// The fitting window does not pin down these monomials (exponent vectors).
    #[error("underdetermined fit: monomials {0:?} are not determined by the window")]
    Underdetermined(Vec<Vec<u32>>),
    /// A computed object violated an invariant that should hold by construction.
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for failures that signal a bug upstream rather than bad input.
    pub fn is_consistency_failure(&self) -> bool {
        matches!(self, Error::NotACharacter(_) | Error::Inconsistent(_))
    }
}
