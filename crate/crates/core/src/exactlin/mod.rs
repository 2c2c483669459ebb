//! Exact scalars, sparse linear maps on tensor-power index spaces, ranks and
//! Smith normal form.

pub mod elim;
pub mod scalar;
pub mod sparse;
pub mod tensor_index;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

pub use elim::{divisibility_chain, rank_mod_p};
pub use scalar::{Field, Fp, Scalar, F2, F3, F5, F7};
pub use sparse::{Mismatch, SparseLinearMap, SparseVec};
pub use tensor_index::TensorIndex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch { op: &'static str, left: (usize, usize), right: (usize, usize) },
    #[error("entry ({row}, {col}) outside a {rows}x{cols} map")]
    IndexOutOfRange { row: usize, col: usize, rows: usize, cols: usize },
    #[error("entry ({row}, {col}) given twice")]
    DuplicateEntry { row: usize, col: usize },
    #[error("entry ({row}, {col}) is an explicit zero")]
    StoredZero { row: usize, col: usize },
    #[error("entry ({row}, {col}) has a denominator divisible by {modulus}")]
    NotReducible { row: usize, col: usize, modulus: u64 },
}

/// `f ∘ g`.
pub fn compose<R: Scalar>(f: &SparseLinearMap<R>, g: &SparseLinearMap<R>) -> Result<SparseLinearMap<R>, LinAlgError> {
    f.compose(g)
}

/// Kronecker product `f ⊗ g` (leftmost factor most significant).
pub fn tensor<R: Scalar>(f: &SparseLinearMap<R>, g: &SparseLinearMap<R>) -> SparseLinearMap<R> {
    f.tensor(g)
}

/// Rank over the fraction field of the coefficient ring.
pub fn rank<R: Scalar>(f: &SparseLinearMap<R>) -> usize {
    f.rank()
}

pub fn kernel_dimension<R: Scalar>(f: &SparseLinearMap<R>) -> usize {
    f.kernel_dimension()
}

/// Nonzero invariant factors `d_1 | d_2 | … | d_r`; `r` is the rank.
pub fn smith_normal_form(f: &SparseLinearMap<BigInt>) -> Vec<BigInt> {
    elim::smith_invariant_factors(f)
}

/// Exact inverse over the coefficient ring, if one exists.
pub fn invert<R: Scalar>(f: &SparseLinearMap<R>) -> Option<SparseLinearMap<R>> {
    R::invert_map(f)
}

/// Rank of a rational map after reduction modulo a prime.
pub fn rank_over_fp(f: &SparseLinearMap<BigRational>, p: u64) -> Result<usize, LinAlgError> {
    rank_mod_p(f, p)
}
