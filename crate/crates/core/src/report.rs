//! Structured results of identity checks.

use std::fmt;

use crate::exactlin::{Mismatch, Scalar, SparseLinearMap};

/// Outcome of comparing two maps entrywise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck<R> {
    pub name: String,
    pub passed: bool,
    pub mismatch: Option<Mismatch<R>>,
}

impl<R: Scalar> IdentityCheck<R> {
    pub fn compare(name: impl Into<String>, lhs: &SparseLinearMap<R>, rhs: &SparseLinearMap<R>) -> Self {
        let mismatch = lhs.first_mismatch(rhs);
        IdentityCheck { name: name.into(), passed: mismatch.is_none(), mismatch }
    }

    pub fn vanishes(name: impl Into<String>, map: &SparseLinearMap<R>) -> Self {
        let mismatch = map
            .first_nonzero()
            .map(|(row, col, v)| Mismatch { row, col, left: v, right: R::zero() });
        IdentityCheck { name: name.into(), passed: mismatch.is_none(), mismatch }
    }

    pub fn pass(name: impl Into<String>) -> Self {
        IdentityCheck { name: name.into(), passed: true, mismatch: None }
    }
}

impl<R: Scalar> fmt::Display for IdentityCheck<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.mismatch {
            None => write!(f, "{}: pass", self.name),
            Some(m) if m.row == usize::MAX => write!(f, "{}: FAIL (shape mismatch)", self.name),
            Some(m) => write!(f, "{}: FAIL at {m}", self.name),
        }
    }
}

/// Whether every check in a list passed.
pub fn all_passed<R>(checks: &[IdentityCheck<R>]) -> bool {
    checks.iter().all(|c| c.passed)
}
