//! Braided differentials on `T(V)`, face and degeneracy maps, hyper-boundaries,
//! arrow operations, braided modules and the classical complexes they recover.
//!
//! Every builder returns the degree-`n` component as a sparse matrix on the
//! big-endian basis of `V^{⊗n}`. Name-based builders require a verified
//! character; the `_with` variants take a covector and verify it on the spot
//! unless the space allows unverified input.

pub mod modules;
pub mod named;
pub mod operations;
pub mod simplicial;

pub use modules::{
    adjoint_module, bimodule_diff, character_module, check_bimodule, check_braided_module, coeff_diff, regular_bimodule,
    Bimodule, BraidedModule, ModuleReport,
};
pub use named::{named_complex, NamedComplex, NamedParams};
pub use operations::{arrow_op, check_naturality, concat_homotopy, Naturality, NaturalityReport};
pub use simplicial::{check_simplicial, Identity, SideReport, SimplicialLevel, SimplicialReport, SimplicialSpec};

use num_integer::binomial;

use crate::braiding::{braided_character_report, lift_action, qcoshuffle, Permutation, PreBraidedSpace, Sign};
use crate::error::{Error, Result};
use crate::exactlin::{Scalar, SparseLinearMap};

/// Which end of a tensor a face, differential or module acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// The recipe for one family of boundaries, consumed by [`crate::homology::assemble`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DifferentialSpec<R: Scalar> {
    Left { eps: String },
    Right { zeta: String },
    /// `^εd − d^ζ`.
    Combined { eps: String, zeta: String },
    /// `^{ε,(k)}d` or its right analogue, lowering degree by `k`.
    Hyper { eps: String, k: usize, side: Side },
    /// One side of the differential with coefficients in `M` (right module) and `N` (left module).
    Coefficients { right: Option<BraidedModule<R>>, left: Option<BraidedModule<R>>, side: Side },
    /// `^ρd − d^λ` on `M⊗V^{⊗n}`.
    Bimodule { module: Bimodule<R> },
    Named { name: NamedComplex, params: NamedParams<R> },
}

impl<R: Scalar> DifferentialSpec<R> {
    /// How much the boundary lowers the tensor degree.
    pub fn degree_drop(&self) -> usize {
        match self {
            DifferentialSpec::Hyper { k, .. } => *k,
            _ => 1,
        }
    }

    /// Rank of the chain group in degree `n`.
    pub fn rank(&self, space: &PreBraidedSpace<R>, n: usize) -> usize {
        match self {
            DifferentialSpec::Coefficients { right, left, .. } => {
                right.as_ref().map_or(1, |m| m.dim()) * space.power_dim(n) * left.as_ref().map_or(1, |m| m.dim())
            }
            DifferentialSpec::Bimodule { module } => module.dim() * space.power_dim(n),
            _ => space.power_dim(n),
        }
    }

    /// The boundary leaving degree `n`.
    pub fn boundary(&self, space: &PreBraidedSpace<R>, n: usize) -> Result<SparseLinearMap<R>> {
        match self {
            DifferentialSpec::Left { eps } => left_diff(space, eps, n),
            DifferentialSpec::Right { zeta } => right_diff(space, zeta, n),
            DifferentialSpec::Combined { eps, zeta } => combined_diff(space, eps, zeta, n),
            DifferentialSpec::Hyper { eps, k, side } => hyper_boundary(space, eps, *k, n, *side),
            DifferentialSpec::Coefficients { right, left, side } => coeff_diff(space, right.as_ref(), left.as_ref(), n, *side),
            DifferentialSpec::Bimodule { module } => {
                let (l, r) = bimodule_diff(space, module, n)?;
                Ok(l.sub(&r)?)
            }
            DifferentialSpec::Named { name, .. } => {
                Err(Error::InvalidInput(format!("the {name} complex is assembled as a whole, not degreewise")))
            }
        }
    }

    pub fn describe(&self) -> String {
        match self {
            DifferentialSpec::Left { eps } => format!("left differential, character {eps}"),
            DifferentialSpec::Right { zeta } => format!("right differential, character {zeta}"),
            DifferentialSpec::Combined { eps, zeta } => format!("combined differential, characters {eps} (left) and {zeta} (right)"),
            DifferentialSpec::Hyper { eps, k, side } => format!("{side} hyper-boundary of order {k}, character {eps}"),
            DifferentialSpec::Coefficients { right, left, side } => format!(
                "{side} differential with coefficients (right module dim {}, left module dim {})",
                right.as_ref().map_or(1, |m| m.dim()),
                left.as_ref().map_or(1, |m| m.dim())
            ),
            DifferentialSpec::Bimodule { module } => format!("bimodule differential, module dim {}", module.dim()),
            DifferentialSpec::Named { name, .. } => format!("{name} complex"),
        }
    }
}

/// Fails unless `eps` is a braided character of the right length (skipped when the space is unchecked).
pub(crate) fn require_character<R: Scalar>(space: &PreBraidedSpace<R>, eps: &[R]) -> Result<()> {
    if eps.len() != space.dim() {
        return Err(Error::Shape(format!("covector of length {} on a space of dimension {}", eps.len(), space.dim())));
    }
    if space.is_unchecked() || braided_character_report(space, eps).passed {
        Ok(())
    } else {
        Err(Error::CharacterNotVerified(format_covector(eps)))
    }
}

pub(crate) fn format_covector<R: Scalar>(eps: &[R]) -> String {
    let parts: Vec<String> = eps.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn require_degree(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidInput("degree 0 carries no differential".into()))
    } else {
        Ok(())
    }
}

/// `ε^{⊗k}` as a `1 × d^k` covector.
pub fn covector_power<R: Scalar>(eps: &[R], k: usize) -> SparseLinearMap<R> {
    (0..k).fold(SparseLinearMap::identity(1), |acc, _| acc.tensor(&SparseLinearMap::covector(eps)))
}

/// `^εd_n = ε₁∘cosh^{1,n−1}_{−σ}`.
pub fn left_diff<R: Scalar>(space: &PreBraidedSpace<R>, eps: &str, n: usize) -> Result<SparseLinearMap<R>> {
    let eps = space.verified_character(eps)?;
    space.require_ybe()?;
    left_diff_unchecked(space, eps, n)
}

pub fn left_diff_with<R: Scalar>(space: &PreBraidedSpace<R>, eps: &[R], n: usize) -> Result<SparseLinearMap<R>> {
    space.require_ybe()?;
    require_character(space, eps)?;
    left_diff_unchecked(space, eps, n)
}

fn left_diff_unchecked<R: Scalar>(space: &PreBraidedSpace<R>, eps: &[R], n: usize) -> Result<SparseLinearMap<R>> {
    require_degree(n)?;
    let e = SparseLinearMap::covector(eps);
    if n == 1 {
        return Ok(e);
    }
    let cosh = qcoshuffle(space, 1, n - 1, Sign::Minus)?;
    Ok(e.placed(1, space.power_dim(n - 1)).compose(&cosh)?)
}

/// `d^ζ_n = (−1)^{n−1} ζ_n∘cosh^{n−1,1}_{−σ}`.
pub fn right_diff<R: Scalar>(space: &PreBraidedSpace<R>, zeta: &str, n: usize) -> Result<SparseLinearMap<R>> {
    let zeta = space.verified_character(zeta)?;
    space.require_ybe()?;
    right_diff_unchecked(space, zeta, n)
}

pub fn right_diff_with<R: Scalar>(space: &PreBraidedSpace<R>, zeta: &[R], n: usize) -> Result<SparseLinearMap<R>> {
    space.require_ybe()?;
    require_character(space, zeta)?;
    right_diff_unchecked(space, zeta, n)
}

fn right_diff_unchecked<R: Scalar>(space: &PreBraidedSpace<R>, zeta: &[R], n: usize) -> Result<SparseLinearMap<R>> {
    require_degree(n)?;
    let z = SparseLinearMap::covector(zeta);
    if n == 1 {
        return Ok(z);
    }
    let cosh = qcoshuffle(space, n - 1, 1, Sign::Minus)?;
    let d = z.placed(space.power_dim(n - 1), 1).compose(&cosh)?;
    Ok(if n.is_multiple_of(2) { d.neg() } else { d })
}

/// `^εd − d^ζ`.
pub fn combined_diff<R: Scalar>(space: &PreBraidedSpace<R>, eps: &str, zeta: &str, n: usize) -> Result<SparseLinearMap<R>> {
    Ok(left_diff(space, eps, n)?.sub(&right_diff(space, zeta, n)?)?)
}

pub fn combined_diff_with<R: Scalar>(space: &PreBraidedSpace<R>, eps: &[R], zeta: &[R], n: usize) -> Result<SparseLinearMap<R>> {
    Ok(left_diff_with(space, eps, n)?.sub(&right_diff_with(space, zeta, n)?)?)
}

/// The face `d_{n;i} = ε₁∘T_{p_{i,n}}` (left) or `d'_{n;i} = ζ_n∘T_{p'_{i,n}}` (right), `1 ≤ i ≤ n`.
pub fn face<R: Scalar>(space: &PreBraidedSpace<R>, eps: &str, n: usize, i: usize, side: Side) -> Result<SparseLinearMap<R>> {
    let eps = space.verified_character(eps)?;
    face_unchecked(space, eps, n, i, side)
}

pub fn face_with<R: Scalar>(space: &PreBraidedSpace<R>, eps: &[R], n: usize, i: usize, side: Side) -> Result<SparseLinearMap<R>> {
    require_character(space, eps)?;
    face_unchecked(space, eps, n, i, side)
}

pub(crate) fn face_unchecked<R: Scalar>(
    space: &PreBraidedSpace<R>,
    eps: &[R],
    n: usize,
    i: usize,
    side: Side,
) -> Result<SparseLinearMap<R>> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    let e = SparseLinearMap::covector(eps);
    let rest = space.power_dim(n - 1);
    let (pull, counit) = match side {
        Side::Left => (Permutation::pull_left(n, i), e.placed(1, rest)),
        Side::Right => (Permutation::pull_right(n, i), e.placed(rest, 1)),
    };
    Ok(counit.compose(&lift_action(space, &pull, n, Sign::Plus)?)?)
}

/// `s_{n;i} = Δ_i`, doubling the `i`-th factor of `V^{⊗n}`.
pub fn degeneracy<R: Scalar>(space: &PreBraidedSpace<R>, n: usize, i: usize) -> Result<SparseLinearMap<R>> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    let delta = space.comultiplication().ok_or(Error::MissingComultiplication)?;
    Ok(delta.placed(space.power_dim(i - 1), space.power_dim(n - i)))
}

/// `^{ε,(k)}d = (ε^{⊗k}⊗Id)∘cosh^{k,n−k}_{−σ}` and its right analogue with sign `(−1)^{kn−k(k+1)/2}`.
pub fn hyper_boundary<R: Scalar>(space: &PreBraidedSpace<R>, eps: &str, k: usize, n: usize, side: Side) -> Result<SparseLinearMap<R>> {
    let eps = space.verified_character(eps)?;
    space.require_ybe()?;
    hyper_boundary_unchecked(space, eps, k, n, side)
}

pub fn hyper_boundary_with<R: Scalar>(
    space: &PreBraidedSpace<R>,
    eps: &[R],
    k: usize,
    n: usize,
    side: Side,
) -> Result<SparseLinearMap<R>> {
    space.require_ybe()?;
    require_character(space, eps)?;
    hyper_boundary_unchecked(space, eps, k, n, side)
}

fn hyper_boundary_unchecked<R: Scalar>(
    space: &PreBraidedSpace<R>,
    eps: &[R],
    k: usize,
    n: usize,
    side: Side,
) -> Result<SparseLinearMap<R>> {
    if k > n {
        return Err(Error::HyperOrder { k, n });
    }
    let ek = covector_power(eps, k);
    let rest = space.power_dim(n - k);
    match side {
        Side::Left => Ok(ek.placed(1, rest).compose(&qcoshuffle(space, k, n - k, Sign::Minus)?)?),
        Side::Right => {
            let d = ek.placed(rest, 1).compose(&qcoshuffle(space, n - k, k, Sign::Minus)?)?;
            let exponent = k * n - k * (k + 1) / 2;
            Ok(if exponent % 2 == 1 { d.neg() } else { d })
        }
    }
}

/// The `(−1)`-binomial coefficient: 0 if `mk` is odd, else `C(⌊(m+k)/2⌋, ⌊k/2⌋)`.
pub fn binomial_m1(m: usize, k: usize) -> u64 {
    if (m * k) % 2 == 1 {
        0
    } else {
        binomial(((m + k) / 2) as u64, (k / 2) as u64)
    }
}

