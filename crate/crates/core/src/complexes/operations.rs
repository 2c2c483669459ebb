//! Arrow operations, concatenation homotopies and naturality of the braiding with
//! respect to a fixed vector.

use std::fmt;

use crate::braiding::{extended_braiding, PreBraidedSpace};
use crate::error::{Error, Result};
use crate::exactlin::{Scalar, SparseLinearMap, SparseVec};
use crate::report::IdentityCheck;

use super::require_character;

fn column<R: Scalar>(space: &PreBraidedSpace<R>, w: &[R]) -> Result<SparseLinearMap<R>> {
    if w.len() != space.dim() {
        return Err(Error::Shape(format!("vector of length {} on a space of dimension {}", w.len(), space.dim())));
    }
    let v: SparseVec<R> = w.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect();
    Ok(SparseLinearMap::vector(&v, w.len()))
}

/// `^επ_w = ε₁∘σ_{V^{⊗n},V}∘(Id_n⊗w)` on `V^{⊗n}`.
pub fn arrow_op<R: Scalar>(space: &PreBraidedSpace<R>, eps: &[R], w: &[R], n: usize) -> Result<SparseLinearMap<R>> {
    require_character(space, eps)?;
    let wc = column(space, w)?;
    let crossing = extended_braiding(space, n, 1)?;
    let counit = SparseLinearMap::covector(eps).placed(1, space.power_dim(n));
    Ok(SparseLinearMap::compose_all(&[&counit, &crossing, &wc.placed(space.power_dim(n), 1)])?)
}

/// `h_n(v̄) = (−1)ⁿ v̄⊗w`, a map `V^{⊗n} → V^{⊗(n+1)}`.
pub fn concat_homotopy<R: Scalar>(space: &PreBraidedSpace<R>, w: &[R], n: usize) -> Result<SparseLinearMap<R>> {
    let h = column(space, w)?.placed(space.power_dim(n), 1);
    Ok(if n % 2 == 1 { h.neg() } else { h })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Naturality {
    /// Both `σ(w⊗v) = v⊗w` and `σ(v⊗w) = w⊗v`.
    Natural,
    /// Only `σ(w⊗v) = v⊗w`.
    SemiNatural,
    /// Only `σ(v⊗w) = w⊗v`.
    DemiNatural,
    None,
}

impl fmt::Display for Naturality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Naturality::Natural => "natural",
            Naturality::SemiNatural => "semi-natural",
            Naturality::DemiNatural => "demi-natural",
            Naturality::None => "none",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaturalityReport<R> {
    /// `σ(w⊗v) = v⊗w`.
    pub passing_left: IdentityCheck<R>,
    /// `σ(v⊗w) = w⊗v`.
    pub passing_right: IdentityCheck<R>,
    pub level: Naturality,
    /// `(Id⊗ψ)σ(v⊗w) = ψ(v)w` for each named character `ψ`.
    pub right_compatible: Vec<(String, IdentityCheck<R>)>,
}

/// Naturality of `σ` with respect to `w`, and right `σ`-compatibility of `w` with each
/// character installed on the space.
pub fn check_naturality<R: Scalar>(space: &PreBraidedSpace<R>, w: &[R]) -> Result<NaturalityReport<R>> {
    let d = space.dim();
    let wc = column(space, w)?;
    let w_left = wc.tensor(&SparseLinearMap::identity(d));
    let w_right = SparseLinearMap::identity(d).tensor(&wc);
    let sigma = space.sigma();
    let passing_left = IdentityCheck::compare("σ(w⊗v) = v⊗w", &sigma.compose(&w_left)?, &w_right);
    let passing_right = IdentityCheck::compare("σ(v⊗w) = w⊗v", &sigma.compose(&w_right)?, &w_left);
    let level = match (passing_left.passed, passing_right.passed) {
        (true, true) => Naturality::Natural,
        (true, false) => Naturality::SemiNatural,
        (false, true) => Naturality::DemiNatural,
        (false, false) => Naturality::None,
    };
    let mut right_compatible = Vec::new();
    for (name, psi) in space.characters() {
        let p = SparseLinearMap::covector(psi);
        let lhs = SparseLinearMap::compose_all(&[&p.placed(d, 1), sigma, &w_right])?;
        let rhs = wc.compose(&p)?;
        right_compatible.push((name.clone(), IdentityCheck::compare(format!("(Id⊗{name})σ(v⊗w) = {name}(v)w"), &lhs, &rhs)));
    }
    Ok(NaturalityReport { passing_left, passing_right, level, right_compatible })
}
