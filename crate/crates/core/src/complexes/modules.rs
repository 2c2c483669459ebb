//! Braided modules and bimodules over a pre-braided space, and the differentials
//! with coefficients they define.

use crate::braiding::{extended_braiding, qcoshuffle, PreBraidedSpace, Sign};
use crate::error::{Error, Result};
use crate::exactlin::{Scalar, SparseLinearMap};
use crate::report::IdentityCheck;
use crate::structures::{AlgebraData, AlgebraKind, StructurePayload};

use super::{require_character, Side};

/// A right module `ρ: M⊗V → M` or a left module `λ: V⊗M → M`; the action is `m × m·d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidedModule<R: Scalar> {
    dim: usize,
    action: SparseLinearMap<R>,
    side: Side,
    normalized: bool,
}

impl<R: Scalar> BraidedModule<R> {
    pub fn new(dim: usize, action: SparseLinearMap<R>, side: Side, v_dim: usize) -> Result<Self> {
        if action.shape() != (dim, dim * v_dim) {
            return Err(Error::Shape(format!(
                "a {side} action on a module of dimension {dim} over V of dimension {v_dim} must be {dim}x{}, got {}x{}",
                dim * v_dim,
                action.rows(),
                action.cols()
            )));
        }
        Ok(BraidedModule { dim, action, side, normalized: false })
    }

    /// The zero action on `M`.
    pub fn zero(dim: usize, side: Side, v_dim: usize) -> Self {
        BraidedModule { dim, action: SparseLinearMap::zero(dim, dim * v_dim), side, normalized: false }
    }

    /// Declares that the unit acts by identity; checked by [`check_braided_module`].
    pub fn normalized(mut self, yes: bool) -> Self {
        self.normalized = yes;
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &SparseLinearMap<R> {
        &self.action
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }
}

/// `M` with a right action `ρ` and a left action `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule<R: Scalar> {
    right: BraidedModule<R>,
    left: BraidedModule<R>,
}

impl<R: Scalar> Bimodule<R> {
    pub fn new(right: BraidedModule<R>, left: BraidedModule<R>) -> Result<Self> {
        if right.side != Side::Right || left.side != Side::Left {
            return Err(Error::InvalidInput("a bimodule needs a right action and a left action".into()));
        }
        if right.dim != left.dim {
            return Err(Error::Shape(format!("actions on modules of dimensions {} and {}", right.dim, left.dim)));
        }
        Ok(Bimodule { right, left })
    }

    pub fn dim(&self) -> usize {
        self.right.dim
    }

    /// `ρ: M⊗V → M`.
    pub fn rho(&self) -> &SparseLinearMap<R> {
        &self.right.action
    }

    /// `λ: V⊗M → M`.
    pub fn lambda(&self) -> &SparseLinearMap<R> {
        &self.left.action
    }

    pub fn right_module(&self) -> &BraidedModule<R> {
        &self.right
    }

    pub fn left_module(&self) -> &BraidedModule<R> {
        &self.left
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleReport<R> {
    /// The braided module axiom on `M⊗V⊗V` (or `V⊗V⊗M`).
    pub braided: IdentityCheck<R>,
    /// The unit acts by identity, for modules declared normalized over a unital structure.
    pub normalization: Option<IdentityCheck<R>>,
    /// The classical module axiom of the underlying algebra, for normalized modules.
    pub classical: Option<IdentityCheck<R>>,
}

impl<R: Scalar> ModuleReport<R> {
    pub fn passed(&self) -> bool {
        self.checks().all(|c| c.passed)
    }

    pub fn checks(&self) -> impl Iterator<Item = &IdentityCheck<R>> {
        std::iter::once(&self.braided).chain(self.normalization.iter()).chain(self.classical.iter())
    }
}

fn check_dims<R: Scalar>(space: &PreBraidedSpace<R>, m: &BraidedModule<R>) -> Result<()> {
    if m.action.cols() != m.dim * space.dim() {
        return Err(Error::Shape(format!("module action has {} columns, expected {}", m.action.cols(), m.dim * space.dim())));
    }
    Ok(())
}

/// `ρ(ρ⊗Id) = ρ(ρ⊗Id)(Id_M⊗σ)` for right modules, `λ(Id⊗λ) = λ(Id⊗λ)(σ⊗Id_N)` for left
/// ones; normalized modules over an algebra payload are also checked against the
/// classical axiom.
pub fn check_braided_module<R: Scalar>(space: &PreBraidedSpace<R>, m: &BraidedModule<R>) -> Result<ModuleReport<R>> {
    check_dims(space, m)?;
    let d = space.dim();
    let a = &m.action;
    let (twice, crossing) = match m.side {
        Side::Right => (a.compose(&a.placed(1, d))?, space.sigma().placed(m.dim, 1)),
        Side::Left => (a.compose(&a.placed(d, 1))?, space.sigma().placed(1, m.dim)),
    };
    let braided = IdentityCheck::compare(format!("braided {} module axiom", m.side), &twice, &twice.compose(&crossing)?);
    let mut normalization = None;
    let mut classical = None;
    if m.normalized {
        if let Some(StructurePayload::Algebra(alg)) = space.payload() {
            if let Some(u) = alg.unit() {
                let unit = unit_column(d, u);
                let on_unit = match m.side {
                    Side::Right => a.compose(&unit.placed(m.dim, 1))?,
                    Side::Left => a.compose(&unit.placed(1, m.dim))?,
                };
                normalization = Some(IdentityCheck::compare("unit acts by identity", &on_unit, &SparseLinearMap::identity(m.dim)));
            }
            classical = classical_axiom(alg, m, &twice)?;
        }
    }
    Ok(ModuleReport { braided, normalization, classical })
}

fn unit_column<R: Scalar>(d: usize, u: usize) -> SparseLinearMap<R> {
    SparseLinearMap::from_triplets(d, 1, [(u, 0, R::one())]).expect("unit index in range")
}

fn classical_axiom<R: Scalar>(alg: &AlgebraData<R>, m: &BraidedModule<R>, twice: &SparseLinearMap<R>) -> Result<Option<IdentityCheck<R>>> {
    let d = alg.dim();
    let a = &m.action;
    let s = alg.structure();
    Ok(match (alg.kind(), m.side) {
        (AlgebraKind::Associative, Side::Right) => {
            Some(IdentityCheck::compare("(m·a)·b = m·(ab)", twice, &a.compose(&s.placed(m.dim, 1))?))
        }
        (AlgebraKind::Associative, Side::Left) => {
            Some(IdentityCheck::compare("a·(b·m) = (ab)·m", twice, &a.compose(&s.placed(1, m.dim))?))
        }
        (AlgebraKind::Leibniz, Side::Right) => {
            let flip = SparseLinearMap::block_flip(d, d).placed(m.dim, 1);
            let rhs = twice.compose(&flip)?.add(&a.compose(&s.placed(m.dim, 1))?)?;
            Some(IdentityCheck::compare("(m·v)·w = (m·w)·v + m·[v,w]", twice, &rhs))
        }
        _ => None,
    })
}

/// `ρ∘(λ⊗Id) = λ∘(Id⊗ρ)` on `V⊗M⊗V`, together with both module reports.
pub fn check_bimodule<R: Scalar>(space: &PreBraidedSpace<R>, b: &Bimodule<R>) -> Result<(ModuleReport<R>, ModuleReport<R>, IdentityCheck<R>)> {
    let d = space.dim();
    let right = check_braided_module(space, &b.right)?;
    let left = check_braided_module(space, &b.left)?;
    let lhs = b.rho().compose(&b.lambda().placed(1, d))?;
    let rhs = b.lambda().compose(&b.rho().placed(d, 1))?;
    Ok((right, left, IdentityCheck::compare("bimodule compatibility", &lhs, &rhs)))
}

/// The ground ring with the action `ε` on the given side.
pub fn character_module<R: Scalar>(space: &PreBraidedSpace<R>, eps: &[R], side: Side) -> Result<BraidedModule<R>> {
    require_character(space, eps)?;
    BraidedModule::new(1, SparseLinearMap::covector(eps), side, space.dim())
}

/// The adjoint module `V^{⊗n}` with `ρ = ε₁∘σ_{V^{⊗n},V}`.
pub fn adjoint_module<R: Scalar>(space: &PreBraidedSpace<R>, eps: &[R], n: usize) -> Result<BraidedModule<R>> {
    require_character(space, eps)?;
    let crossing = extended_braiding(space, n, 1)?;
    let rho = SparseLinearMap::covector(eps).placed(1, space.power_dim(n)).compose(&crossing)?;
    BraidedModule::new(space.power_dim(n), rho, Side::Right, space.dim())
}

/// An associative algebra acting on itself on both sides by multiplication.
pub fn regular_bimodule<R: Scalar>(space: &PreBraidedSpace<R>) -> Result<Bimodule<R>> {
    let alg = match space.payload() {
        Some(StructurePayload::Algebra(a)) if a.kind() == AlgebraKind::Associative => a,
        _ => return Err(Error::Structure("the regular bimodule needs an associative algebra payload".into())),
    };
    let d = alg.dim();
    let mu = alg.structure().clone();
    Bimodule::new(
        BraidedModule::new(d, mu.clone(), Side::Right, d)?.normalized(true),
        BraidedModule::new(d, mu, Side::Left, d)?.normalized(true),
    )
}

fn require_side<R: Scalar>(m: &BraidedModule<R>, side: Side) -> Result<()> {
    if m.side != side {
        Err(Error::InvalidInput(format!("expected a {side} module, got a {} one", m.side)))
    } else {
        Ok(())
    }
}

/// `^ρd = (ρ⊗Id)∘(Id_M⊗cosh^{1,n−1}_{−σ}⊗Id_N)` or
/// `d^λ = (−1)^{n−1}(Id⊗λ)∘(Id_M⊗cosh^{n−1,1}_{−σ}⊗Id_N)` on `M⊗V^{⊗n}⊗N`.
/// A missing module is the ground ring with the zero action.
pub fn coeff_diff<R: Scalar>(
    space: &PreBraidedSpace<R>,
    right: Option<&BraidedModule<R>>,
    left: Option<&BraidedModule<R>>,
    n: usize,
    side: Side,
) -> Result<SparseLinearMap<R>> {
    space.require_ybe()?;
    if n == 0 {
        return Err(Error::InvalidInput("degree 0 carries no differential".into()));
    }
    let d = space.dim();
    let zero_right;
    let m = match right {
        Some(m) => {
            require_side(m, Side::Right)?;
            check_dims(space, m)?;
            m
        }
        None => {
            zero_right = BraidedModule::zero(1, Side::Right, d);
            &zero_right
        }
    };
    let zero_left;
    let nn = match left {
        Some(m) => {
            require_side(m, Side::Left)?;
            check_dims(space, m)?;
            m
        }
        None => {
            zero_left = BraidedModule::zero(1, Side::Left, d);
            &zero_left
        }
    };
    let rest = space.power_dim(n - 1);
    match side {
        Side::Left => {
            let cosh = qcoshuffle(space, 1, n - 1, Sign::Minus)?.placed(m.dim, nn.dim);
            Ok(m.action.placed(1, rest * nn.dim).compose(&cosh)?)
        }
        Side::Right => {
            let cosh = qcoshuffle(space, n - 1, 1, Sign::Minus)?.placed(m.dim, nn.dim);
            let out = nn.action.placed(m.dim * rest, 1).compose(&cosh)?;
            Ok(if n.is_multiple_of(2) { out.neg() } else { out })
        }
    }
}

/// The pair `(^ρd, d^λ)` on `M⊗V^{⊗n}`, the right map conjugated by the flip of `M` past
/// the tensor factors.
pub fn bimodule_diff<R: Scalar>(space: &PreBraidedSpace<R>, b: &Bimodule<R>, n: usize) -> Result<(SparseLinearMap<R>, SparseLinearMap<R>)> {
    space.require_ybe()?;
    if n == 0 {
        return Err(Error::InvalidInput("degree 0 carries no differential".into()));
    }
    let m = b.dim();
    let rest = space.power_dim(n - 1);
    let left = b.rho().placed(1, rest).compose(&qcoshuffle(space, 1, n - 1, Sign::Minus)?.placed(m, 1))?;
    let right = SparseLinearMap::compose_all(&[
        &SparseLinearMap::block_flip(rest, m),
        &b.lambda().placed(rest, 1),
        &qcoshuffle(space, n - 1, 1, Sign::Minus)?.placed(1, m),
        &SparseLinearMap::block_flip(m, space.power_dim(n)),
    ])?;
    Ok((left, if n.is_multiple_of(2) { right.neg() } else { right }))
}
