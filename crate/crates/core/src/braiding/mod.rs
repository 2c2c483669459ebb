//! Pre-braidings, the positive braid monoid action on tensor powers, quantum
//! (co)shuffles and the quantum shuffle Hopf operations.

pub mod hopf;
pub mod permutation;
pub mod space;

use crate::error::{Error, Result};
use crate::exactlin::{Scalar, SparseLinearMap};
use crate::report::IdentityCheck;

pub use permutation::{shuffle_set, Permutation};
pub use space::PreBraidedSpace;

/// Which of `σ` and `−σ` acts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `sign^k` as a ring element.
    pub fn power<R: Scalar>(self, k: usize) -> R {
        match self {
            Sign::Minus if k % 2 == 1 => -R::one(),
            _ => R::one(),
        }
    }
}

/// Compares `σ₁σ₂σ₁` with `σ₂σ₁σ₂` and records the result on the space.
pub fn check_ybe<R: Scalar>(space: &mut PreBraidedSpace<R>) -> IdentityCheck<R> {
    let report = ybe_report(space);
    space.mark_ybe(report.passed);
    report
}

/// The Yang–Baxter comparison without touching the verification flag.
pub fn ybe_report<R: Scalar>(space: &PreBraidedSpace<R>) -> IdentityCheck<R> {
    let s1 = space.sigma_at(3, 1);
    let s2 = space.sigma_at(3, 2);
    let lhs = SparseLinearMap::compose_all(&[&s1, &s2, &s1]).expect("square maps");
    let rhs = SparseLinearMap::compose_all(&[&s2, &s1, &s2]).expect("square maps");
    IdentityCheck::compare("Yang-Baxter equation", &lhs, &rhs)
}

/// Canonical reduced word of `s`.
pub fn reduced_word(s: &Permutation) -> Vec<usize> {
    s.reduced_word()
}

/// `T_s^{±σ}` on `V^{⊗n}`; a permutation of fewer letters acts on the leftmost factors.
pub fn lift_action<R: Scalar>(space: &PreBraidedSpace<R>, s: &Permutation, n: usize, sign: Sign) -> Result<SparseLinearMap<R>> {
    space.require_ybe()?;
    if s.len() > n {
        return Err(Error::PermutationTooLong { letters: s.len(), n });
    }
    let s = s.extend(n);
    let base = space.cached_lift(&s, n);
    let c: R = sign.power(s.inversions());
    Ok(if c.is_one() { (*base).clone() } else { base.scale(&c) })
}

/// `Σ_{s ∈ Sh_{p,q}} T_s^{±σ}`, a map `V^{⊗p}⊗V^{⊗q} → V^{⊗(p+q)}`.
pub fn qshuffle<R: Scalar>(space: &PreBraidedSpace<R>, p: usize, q: usize, sign: Sign) -> Result<SparseLinearMap<R>> {
    shuffle_sum(space, p, q, sign, false)
}

/// `Σ_{s ∈ Sh_{p,q}} T_{s⁻¹}^{±σ}`, a map `V^{⊗(p+q)} → V^{⊗p}⊗V^{⊗q}`.
pub fn qcoshuffle<R: Scalar>(space: &PreBraidedSpace<R>, p: usize, q: usize, sign: Sign) -> Result<SparseLinearMap<R>> {
    shuffle_sum(space, p, q, sign, true)
}

fn shuffle_sum<R: Scalar>(space: &PreBraidedSpace<R>, p: usize, q: usize, sign: Sign, inverse: bool) -> Result<SparseLinearMap<R>> {
    space.require_ybe()?;
    let n = p + q;
    let dim = space.power_dim(n);
    let lifts: Vec<SparseLinearMap<R>> = shuffle_set(p, q)
        .iter()
        .map(|s| {
            let s = if inverse { s.inverse() } else { s.clone() };
            lift_action(space, &s, n, sign)
        })
        .collect::<Result<_>>()?;
    Ok(SparseLinearMap::sum(dim, dim, lifts.iter())?)
}

/// The block crossing `V^{⊗left} ⊗ V^{⊗right} → V^{⊗right} ⊗ V^{⊗left}`.
pub fn extended_braiding<R: Scalar>(space: &PreBraidedSpace<R>, left: usize, right: usize) -> Result<SparseLinearMap<R>> {
    lift_action(space, &Permutation::block_swap(left, right), left + right, Sign::Plus)
}

/// Antipode of the quantum shuffle algebra on `V^{⊗n}`: `(−1)ⁿ T_{Δₙ}^σ`.
pub fn antipode<R: Scalar>(space: &PreBraidedSpace<R>, n: usize) -> Result<SparseLinearMap<R>> {
    let t = lift_action(space, &Permutation::longest(n), n, Sign::Plus)?;
    Ok(if n % 2 == 1 { t.neg() } else { t })
}

/// `f ⊗ g` as a `1 × d²` covector.
pub fn covector_tensor<R: Scalar>(f: &[R], g: &[R]) -> SparseLinearMap<R> {
    SparseLinearMap::covector(f).tensor(&SparseLinearMap::covector(g))
}

/// Checks `(ε⊗ε)∘σ = ε⊗ε` and records the result on the space.
pub fn check_braided_character<R: Scalar>(space: &mut PreBraidedSpace<R>, name: &str) -> Result<IdentityCheck<R>> {
    let report = braided_character_report(space, space.character(name)?);
    space.mark_character(name, report.passed);
    Ok(report)
}

/// `(ε⊗ε)∘σ = ε⊗ε` for an arbitrary covector.
pub fn braided_character_report<R: Scalar>(space: &PreBraidedSpace<R>, eps: &[R]) -> IdentityCheck<R> {
    let ee = covector_tensor(eps, eps);
    let lhs = ee.compose(space.sigma()).expect("covector length matches");
    IdentityCheck::compare("braided character", &lhs, &ee)
}

/// Both σ-compatibility equalities `(f⊗g)∘σ = g⊗f` and `(g⊗f)∘σ = f⊗g`.
pub fn check_character_compat<R: Scalar>(space: &PreBraidedSpace<R>, f: &str, g: &str) -> Result<[IdentityCheck<R>; 2]> {
    let fv = space.character(f)?;
    let gv = space.character(g)?;
    Ok(compat_report(space, fv, gv))
}

pub fn compat_report<R: Scalar>(space: &PreBraidedSpace<R>, f: &[R], g: &[R]) -> [IdentityCheck<R>; 2] {
    let fg = covector_tensor(f, g);
    let gf = covector_tensor(g, f);
    let a = fg.compose(space.sigma()).expect("covector length matches");
    let b = gf.compose(space.sigma()).expect("covector length matches");
    [
        IdentityCheck::compare("(f⊗g)σ = g⊗f", &a, &gf),
        IdentityCheck::compare("(g⊗f)σ = f⊗g", &b, &fg),
    ]
}

/// `σ⁻¹` over the coefficient ring, if it exists.
pub fn invert_braiding<R: Scalar>(space: &PreBraidedSpace<R>) -> Option<SparseLinearMap<R>> {
    R::invert_map(space.sigma())
}

/// How much of the pre-braided coalgebra axioms a comultiplication satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoalgebraLevel {
    PreBraided,
    SemiPreBraided,
    Neither,
}

#[derive(Clone, Debug)]
pub struct CoalgebraReport<R> {
    pub coassociativity: IdentityCheck<R>,
    pub compatibility: IdentityCheck<R>,
    pub compatibility_prime: IdentityCheck<R>,
    pub cocommutativity: IdentityCheck<R>,
    pub level: CoalgebraLevel,
    pub cocommutative: bool,
}

/// Coassociativity, `Δ₂σ = σ₁σ₂Δ₁`, `Δ₁σ = σ₂σ₁Δ₂` and `σΔ = Δ`.
pub fn check_braided_coalgebra<R: Scalar>(space: &PreBraidedSpace<R>) -> Result<CoalgebraReport<R>> {
    let delta = space.comultiplication().ok_or(Error::MissingComultiplication)?;
    let d = space.dim();
    let d1 = delta.placed(1, d);
    let d2 = delta.placed(d, 1);
    let coassociativity = IdentityCheck::compare("coassociativity", &d1.compose(delta)?, &d2.compose(delta)?);
    let s1 = space.sigma_at(3, 1);
    let s2 = space.sigma_at(3, 2);
    // Δ₁ is Δ on the first factor, i.e. Δ ⊗ Id.
    let delta_first = delta.placed(1, d);
    let delta_second = delta.placed(d, 1);
    let compatibility = IdentityCheck::compare(
        "Δ₂σ = σ₁σ₂Δ₁",
        &delta_second.compose(space.sigma())?,
        &SparseLinearMap::compose_all(&[&s1, &s2, &delta_first])?,
    );
    let compatibility_prime = IdentityCheck::compare(
        "Δ₁σ = σ₂σ₁Δ₂",
        &delta_first.compose(space.sigma())?,
        &SparseLinearMap::compose_all(&[&s2, &s1, &delta_second])?,
    );
    let cocommutativity = IdentityCheck::compare("σΔ = Δ", &space.sigma().compose(delta)?, delta);
    let level = match (coassociativity.passed, compatibility.passed, compatibility_prime.passed) {
        (true, true, true) => CoalgebraLevel::PreBraided,
        (true, true, false) => CoalgebraLevel::SemiPreBraided,
        _ => CoalgebraLevel::Neither,
    };
    let cocommutative = cocommutativity.passed;
    Ok(CoalgebraReport { coassociativity, compatibility, compatibility_prime, cocommutativity, level, cocommutative })
}
