//! Classical complexes recovered from structural braidings: Koszul, shelf, rack,
//! quandle, twisted rack, partial derivatives, bar, group, Hochschild, Leibniz,
//! graded Leibniz, cobar and Cartier.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::braiding::{check_ybe, qshuffle, PreBraidedSpace, Sign};
use crate::error::{Error, Result};
use crate::exactlin::{Scalar, SparseLinearMap};
use crate::homology::{check_degree_cap, subquotient, ChainComplex, DEFAULT_DEGREE_CAP};
use crate::structures::{
    assoc_braiding, check_assoc, check_shelf, dirac_character, dual_algebra, koszul_braiding, twist_character, AlgebraData,
    AlgebraKind, ShelfTable, StructurePayload, AUGMENTATION, SHELF_COUNIT,
};

use super::{bimodule_diff, left_diff_with, regular_bimodule, require_character, right_diff_with};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NamedComplex {
    Koszul,
    Shelf,
    Rack,
    Quandle,
    TwistedRack,
    PartialDerivative,
    Bar,
    Group,
    Hochschild,
    Leibniz,
    GradedLeibniz,
    Cobar,
    Cartier,
}

impl NamedComplex {
    pub const ALL: [NamedComplex; 13] = [
        NamedComplex::Koszul,
        NamedComplex::Shelf,
        NamedComplex::Rack,
        NamedComplex::Quandle,
        NamedComplex::TwistedRack,
        NamedComplex::PartialDerivative,
        NamedComplex::Bar,
        NamedComplex::Group,
        NamedComplex::Hochschild,
        NamedComplex::Leibniz,
        NamedComplex::GradedLeibniz,
        NamedComplex::Cobar,
        NamedComplex::Cartier,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedComplex::Koszul => "koszul",
            NamedComplex::Shelf => "shelf",
            NamedComplex::Rack => "rack",
            NamedComplex::Quandle => "quandle",
            NamedComplex::TwistedRack => "twisted-rack",
            NamedComplex::PartialDerivative => "partial-derivative",
            NamedComplex::Bar => "bar",
            NamedComplex::Group => "group",
            NamedComplex::Hochschild => "hochschild",
            NamedComplex::Leibniz => "leibniz",
            NamedComplex::GradedLeibniz => "graded-leibniz",
            NamedComplex::Cobar => "cobar",
            NamedComplex::Cartier => "cartier",
        }
    }

    /// Cobar and Cartier complexes raise the degree.
    pub fn is_cochain(self) -> bool {
        matches!(self, NamedComplex::Cobar | NamedComplex::Cartier)
    }
}

impl fmt::Display for NamedComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedComplex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NamedComplex::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| {
            let names: Vec<&str> = NamedComplex::ALL.iter().map(|c| c.name()).collect();
            Error::InvalidInput(format!("unknown complex `{s}`; expected one of {}", names.join(", ")))
        })
    }
}

/// Optional inputs of the named complexes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedParams<R> {
    /// Left character, overriding the default of the complex.
    pub eps: Option<String>,
    /// Right character, overriding the default of the complex.
    pub zeta: Option<String>,
    /// The specialized twist parameter of the twisted rack complex.
    pub twist: Option<R>,
    /// The element `a` of the partial derivative `^{φ_a}d`.
    pub dirac: Option<usize>,
    pub degree_cap: usize,
}

impl<R> Default for NamedParams<R> {
    fn default() -> Self {
        NamedParams { eps: None, zeta: None, twist: None, dirac: None, degree_cap: DEFAULT_DEGREE_CAP }
    }
}

/// Assembles the named complex on degrees `0..=n_max`, performing the required quotient
/// or restriction, and checks `d² = 0`.
pub fn named_complex<R: Scalar>(
    space: &PreBraidedSpace<R>,
    name: NamedComplex,
    n_max: usize,
    params: &NamedParams<R>,
) -> Result<ChainComplex<R>> {
    if n_max == 0 {
        return Err(Error::InvalidInput("the maximal degree must be at least 1".into()));
    }
    space.require_ybe()?;
    let c = match name {
        NamedComplex::Koszul => koszul(space, n_max, params)?,
        NamedComplex::Shelf => {
            shelf_of(space)?;
            let eps = character(space, params.eps.as_deref(), SHELF_COUNIT)?;
            tensor_chain(space, n_max, params, |n| left_diff_with(space, &eps, n))?
        }
        NamedComplex::Rack => rack(space, n_max, params)?,
        NamedComplex::Quandle => {
            let t = shelf_of(space)?;
            if !check_shelf(t).spindle {
                return Err(Error::Structure("the quandle complex needs an idempotent operation".into()));
            }
            let full = rack(space, n_max, params)?;
            let d = space.dim();
            subquotient(&full, |n, i| is_degenerate(i, d, n))?.quotient
        }
        NamedComplex::TwistedRack => {
            shelf_of(space)?;
            let t0 = params.twist.clone().ok_or_else(|| Error::InvalidInput("the twisted rack complex needs a twist value".into()))?;
            let eps = character(space, params.eps.as_deref(), SHELF_COUNIT)?;
            let zeta = twist_character(space.dim(), t0)?;
            tensor_chain(space, n_max, params, |n| Ok(left_diff_with(space, &eps, n)?.sub(&right_diff_with(space, &zeta, n)?)?))?
        }
        NamedComplex::PartialDerivative => {
            let t = shelf_of(space)?;
            let eps = match (params.dirac, params.eps.as_deref()) {
                (Some(a), _) => dirac_character(t, a)?,
                (None, Some(name)) => space.verified_character(name)?.to_vec(),
                (None, None) => return Err(Error::InvalidInput("the partial derivative needs an element or a character".into())),
            };
            tensor_chain(space, n_max, params, |n| left_diff_with(space, &eps, n))?
        }
        NamedComplex::Bar => {
            let (alg, u) = unital(space, AlgebraKind::Associative)?;
            require_two_sided(alg)?;
            let aug = alg.unit_covector()?;
            let full = tensor_chain(space, n_max, params, |n| Ok(left_diff_with(space, &aug, n)?.sub(&right_diff_with(space, &aug, n)?)?))?;
            let d = space.dim();
            subquotient(&full, |n, i| has_digit(i, d, n, u))?.quotient
        }
        NamedComplex::Group => {
            let (alg, u) = unital(space, AlgebraKind::Associative)?;
            require_two_sided(alg)?;
            let eps = character(space, params.eps.as_deref(), AUGMENTATION)?;
            let zeta = character(space, params.zeta.as_deref(), AUGMENTATION)?;
            let full = tensor_chain(space, n_max, params, |n| Ok(left_diff_with(space, &eps, n)?.sub(&right_diff_with(space, &zeta, n)?)?))?;
            let d = space.dim();
            subquotient(&full, |n, i| has_digit(i, d, n, u))?.quotient
        }
        NamedComplex::Hochschild => hochschild(space, n_max, params)?,
        NamedComplex::Leibniz | NamedComplex::GradedLeibniz => {
            let (alg, u) = unital(space, AlgebraKind::Leibniz)?;
            let eps = match params.eps.as_deref() {
                Some(name) => space.verified_character(name)?.to_vec(),
                None => alg.unit_covector()?,
            };
            let full = tensor_chain(space, n_max, params, |n| left_diff_with(space, &eps, n))?;
            let d = space.dim();
            subquotient(&full, |n, i| !has_digit(i, d, n, u))?.sub
        }
        NamedComplex::Cobar => {
            let (alg, u) = unital(space, AlgebraKind::Coalgebra)?;
            let one = alg.unit_vector()?;
            let ranks = tensor_ranks(space, n_max);
            check_degree_cap(&ranks, params.degree_cap)?;
            let maps: BTreeMap<usize, SparseLinearMap<R>> = (0..n_max)
                .into_par_iter()
                .map(|n| {
                    let sh = qshuffle(space, 1, n, Sign::Minus)?;
                    Ok((n, sh.compose(&one.tensor(&SparseLinearMap::identity(space.power_dim(n))))?))
                })
                .collect::<Result<_>>()?;
            let full = ChainComplex::new(ranks, maps, 1, "cobar")?;
            let d = space.dim();
            subquotient(&full, |n, i| has_digit(i, d, n, u))?.quotient
        }
        NamedComplex::Cartier => {
            let (coalg, _) = unital(space, AlgebraKind::Coalgebra)?;
            let mut algebra_space = assoc_braiding(&dual_algebra(coalg)?)?;
            if !check_ybe(&mut algebra_space).passed {
                return Err(Error::Structure("the dual algebra is not associative".into()));
            }
            hochschild(&algebra_space, n_max, params)?.transpose()?
        }
    };
    Ok(c.with_provenance(format!("{name} complex")))
}

fn koszul<R: Scalar>(space: &PreBraidedSpace<R>, n_max: usize, params: &NamedParams<R>) -> Result<ChainComplex<R>> {
    let grading = space.grading().map(<[i64]>::to_vec).unwrap_or_else(|| vec![0; space.dim()]);
    if space.sigma() != koszul_braiding::<R>(&grading).sigma() {
        return Err(Error::Structure("the Koszul complex needs the (graded) flip braiding".into()));
    }
    let eps = match params.eps.as_deref() {
        Some(name) => space.verified_character(name)?.to_vec(),
        None => {
            let names = space.character_names();
            match names.as_slice() {
                [only] => space.verified_character(only)?.to_vec(),
                _ => return Err(Error::InvalidInput("name the character of the Koszul complex".into())),
            }
        }
    };
    tensor_chain(space, n_max, params, |n| left_diff_with(space, &eps, n))
}

fn rack<R: Scalar>(space: &PreBraidedSpace<R>, n_max: usize, params: &NamedParams<R>) -> Result<ChainComplex<R>> {
    shelf_of(space)?;
    let eps = character(space, params.eps.as_deref(), SHELF_COUNIT)?;
    let zeta = character(space, params.zeta.as_deref(), SHELF_COUNIT)?;
    tensor_chain(space, n_max, params, |n| Ok(left_diff_with(space, &eps, n)?.sub(&right_diff_with(space, &zeta, n)?)?))
}

/// `^ρd − d^λ` for the regular bimodule, modulo tensors with `𝟏` among the `V` factors.
fn hochschild<R: Scalar>(space: &PreBraidedSpace<R>, n_max: usize, params: &NamedParams<R>) -> Result<ChainComplex<R>> {
    let (alg, u) = unital(space, AlgebraKind::Associative)?;
    require_two_sided(alg)?;
    let b = regular_bimodule(space)?;
    let d = space.dim();
    let ranks: Vec<usize> = (0..=n_max).map(|n| d * space.power_dim(n)).collect();
    check_degree_cap(&ranks, params.degree_cap)?;
    let maps: BTreeMap<usize, SparseLinearMap<R>> = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let (l, r) = bimodule_diff(space, &b, n)?;
            Ok((n, l.sub(&r)?))
        })
        .collect::<Result<_>>()?;
    let full = ChainComplex::new(ranks, maps, -1, "hochschild")?;
    Ok(subquotient(&full, |n, i| has_digit(i % space.power_dim(n), d, n, u))?.quotient)
}

fn tensor_ranks<R: Scalar>(space: &PreBraidedSpace<R>, n_max: usize) -> Vec<usize> {
    (0..=n_max).map(|n| space.power_dim(n)).collect()
}

/// A chain complex on `T(V)` from a degreewise boundary builder.
fn tensor_chain<R: Scalar, F>(space: &PreBraidedSpace<R>, n_max: usize, params: &NamedParams<R>, build: F) -> Result<ChainComplex<R>>
where
    F: Fn(usize) -> Result<SparseLinearMap<R>> + Sync,
{
    let ranks = tensor_ranks(space, n_max);
    check_degree_cap(&ranks, params.degree_cap)?;
    let maps: BTreeMap<usize, SparseLinearMap<R>> =
        (1..=n_max).into_par_iter().map(|n| build(n).map(|m| (n, m))).collect::<Result<_>>()?;
    ChainComplex::new(ranks, maps, -1, "")
}

fn character<R: Scalar>(space: &PreBraidedSpace<R>, name: Option<&str>, default: &str) -> Result<Vec<R>> {
    let name = name.unwrap_or(default);
    let eps = space.character(name)?.to_vec();
    if !space.is_character_verified(name) {
        require_character(space, &eps)?;
    }
    Ok(eps)
}

fn shelf_of<R: Scalar>(space: &PreBraidedSpace<R>) -> Result<&ShelfTable> {
    match space.payload() {
        Some(StructurePayload::Shelf(t)) => Ok(t),
        _ => Err(Error::Structure("this complex needs a shelf".into())),
    }
}

fn unital<R: Scalar>(space: &PreBraidedSpace<R>, kind: AlgebraKind) -> Result<(&AlgebraData<R>, usize)> {
    match space.payload() {
        Some(StructurePayload::Algebra(a)) if a.kind() == kind => {
            let u = a.unit().ok_or_else(|| Error::Structure(format!("this complex needs a unital {kind} structure")))?;
            Ok((a, u))
        }
        _ => Err(Error::Structure(format!("this complex needs a {kind} structure"))),
    }
}

fn require_two_sided<R: Scalar>(alg: &AlgebraData<R>) -> Result<()> {
    let report = check_assoc(alg)?;
    let failure = report.checks().find(|c| !c.passed).map(|c| c.to_string());
    match failure {
        Some(c) => Err(Error::Structure(format!("the unit must be two-sided and the product associative ({c})"))),
        None => Ok(()),
    }
}

/// Whether some tensor factor of the basis tensor `index ∈ V^{⊗n}` is `e_u`.
pub fn has_digit(mut index: usize, d: usize, n: usize, u: usize) -> bool {
    for _ in 0..n {
        if index % d == u {
            return true;
        }
        index /= d;
    }
    false
}

/// Whether two neighbouring factors of the basis tensor coincide.
pub fn is_degenerate(mut index: usize, d: usize, n: usize) -> bool {
    let mut prev = None;
    for _ in 0..n {
        let digit = index % d;
        if prev == Some(digit) {
            return true;
        }
        prev = Some(digit);
        index /= d;
    }
    false
}
