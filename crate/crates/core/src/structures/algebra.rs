use std::collections::BTreeMap;
use std::fmt;

use crate::braiding::PreBraidedSpace;
use crate::error::{Error, Result};
use crate::exactlin::{Scalar, SparseLinearMap};
use crate::report::IdentityCheck;

use super::basic::koszul_braiding;
use super::StructurePayload;

/// Name of the character `ε(V) ≡ 0, ε(𝟏) = 1` installed by [`adjoin_unit`].
pub const AUGMENTATION: &str = "aug";
/// Name of the counit character of a coalgebra.
pub const COUNIT: &str = "counit";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    Associative,
    Leibniz,
    Coalgebra,
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlgebraKind::Associative => "associative",
            AlgebraKind::Leibniz => "leibniz",
            AlgebraKind::Coalgebra => "coalgebra",
        })
    }
}

/// Structure constants on a basis `e_0, …, e_{d−1}`.
///
/// For products and brackets `structure` is `d × d²` (column `a·d+b` holds `e_a e_b`);
/// for coalgebras it is `Δ`, a `d² × d` map, and the distinguished index is both the
/// group-like `𝟏` and the support of the counit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraData<R: Scalar> {
    kind: AlgebraKind,
    dim: usize,
    structure: SparseLinearMap<R>,
    unit: Option<usize>,
    grading: Option<Vec<i64>>,
    characters: BTreeMap<String, Vec<R>>,
}

impl<R: Scalar> AlgebraData<R> {
    pub fn new(kind: AlgebraKind, dim: usize, structure: SparseLinearMap<R>, unit: Option<usize>) -> Result<Self> {
        let expected = match kind {
            AlgebraKind::Coalgebra => (dim * dim, dim),
            _ => (dim, dim * dim),
        };
        if structure.shape() != expected {
            return Err(Error::Shape(format!(
                "{kind} structure on dimension {dim} must be {}x{}, got {}x{}",
                expected.0,
                expected.1,
                structure.rows(),
                structure.cols()
            )));
        }
        if let Some(u) = unit {
            if u >= dim {
                return Err(Error::IndexOutOfRange { index: u, n: dim });
            }
        }
        Ok(AlgebraData { kind, dim, structure, unit, grading: None, characters: BTreeMap::new() })
    }

    /// Builds from `(a, b, c, x)` entries: `e_a e_b ∋ x·e_c`, or `Δ(e_a) ∋ x·e_b⊗e_c` for coalgebras.
    pub fn from_constants<I>(kind: AlgebraKind, dim: usize, unit: Option<usize>, constants: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, R)>,
    {
        let mut triplets = Vec::new();
        for (a, b, c, x) in constants {
            if let Some(&bad) = [a, b, c].iter().find(|&&i| i >= dim) {
                return Err(Error::IndexOutOfRange { index: bad, n: dim });
            }
            triplets.push(match kind {
                AlgebraKind::Coalgebra => (b * dim + c, a, x),
                _ => (c, a * dim + b, x),
            });
        }
        let (rows, cols) = match kind {
            AlgebraKind::Coalgebra => (dim * dim, dim),
            _ => (dim, dim * dim),
        };
        let structure = SparseLinearMap::from_triplets(rows, cols, triplets)?;
        Self::new(kind, dim, structure, unit)
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn structure(&self) -> &SparseLinearMap<R> {
        &self.structure
    }

    pub fn unit(&self) -> Option<usize> {
        self.unit
    }

    fn require_unit(&self) -> Result<usize> {
        self.unit
            .ok_or_else(|| Error::Structure(format!("the {} input has no distinguished unit", self.kind)))
    }

    pub fn grading(&self) -> Option<&[i64]> {
        self.grading.as_deref()
    }

    pub fn with_grading(mut self, grading: Vec<i64>) -> Result<Self> {
        if grading.len() != self.dim {
            return Err(Error::Shape(format!("grading has {} entries for dimension {}", grading.len(), self.dim)));
        }
        self.grading = Some(grading);
        Ok(self)
    }

    pub fn with_character(mut self, name: &str, values: Vec<R>) -> Result<Self> {
        if values.len() != self.dim {
            return Err(Error::Shape(format!("character `{name}` has {} entries for dimension {}", values.len(), self.dim)));
        }
        self.characters.insert(name.to_string(), values);
        Ok(self)
    }

    pub fn characters(&self) -> &BTreeMap<String, Vec<R>> {
        &self.characters
    }

    /// The product (or bracket) `e_a e_b` as a sparse column.
    pub fn product(&self, a: usize, b: usize) -> &[(usize, R)] {
        self.structure.column(a * self.dim + b)
    }

    /// The `d × 1` unit vector `e_𝟏`.
    pub fn unit_vector(&self) -> Result<SparseLinearMap<R>> {
        let u = self.require_unit()?;
        Ok(SparseLinearMap::from_triplets(self.dim, 1, [(u, 0, R::one())])?)
    }

    /// `δ_𝟏`, the covector dual to the distinguished basis vector.
    pub fn unit_covector(&self) -> Result<Vec<R>> {
        let u = self.require_unit()?;
        let mut v = vec![R::zero(); self.dim];
        v[u] = R::one();
        Ok(v)
    }

    /// Indices of the non-unit basis vectors.
    pub fn non_unit_indices(&self) -> Vec<usize> {
        (0..self.dim).filter(|&i| Some(i) != self.unit).collect()
    }

    fn grading_or_zero(&self) -> Vec<i64> {
        self.grading.clone().unwrap_or_else(|| vec![0; self.dim])
    }

    fn require_kind(&self, kind: AlgebraKind) -> Result<()> {
        if self.kind == kind {
            Ok(())
        } else {
            Err(Error::Structure(format!("expected {kind} input, got {}", self.kind)))
        }
    }
}

/// Result of an axiom check: the defining identity plus unit-related side conditions.
#[derive(Clone, Debug)]
pub struct AxiomReport<R: Scalar> {
    pub axiom: IdentityCheck<R>,
    pub units: Vec<IdentityCheck<R>>,
}

impl<R: Scalar> AxiomReport<R> {
    pub fn passed(&self) -> bool {
        self.axiom.passed
    }

    pub fn unit_check(&self, name: &str) -> Option<&IdentityCheck<R>> {
        self.units.iter().find(|c| c.name == name)
    }

    pub fn checks(&self) -> impl Iterator<Item = &IdentityCheck<R>> {
        std::iter::once(&self.axiom).chain(self.units.iter())
    }
}

/// Associativity on all basis triples, plus left and right unit laws when a unit is given.
pub fn check_assoc<R: Scalar>(a: &AlgebraData<R>) -> Result<AxiomReport<R>> {
    a.require_kind(AlgebraKind::Associative)?;
    let d = a.dim;
    let mu = &a.structure;
    let lhs = mu.compose(&mu.placed(1, d))?;
    let rhs = mu.compose(&mu.placed(d, 1))?;
    let axiom = IdentityCheck::compare("associativity", &lhs, &rhs);
    let mut units = Vec::new();
    if a.unit.is_some() {
        let one = a.unit_vector()?;
        let id = SparseLinearMap::identity(d);
        units.push(IdentityCheck::compare("right unit", &mu.compose(&id.tensor(&one))?, &id));
        units.push(IdentityCheck::compare("left unit", &mu.compose(&one.tensor(&id))?, &id));
    }
    Ok(AxiomReport { axiom, units })
}

/// `ε(vw) = ε(v)ε(w)` on basis pairs and, with a unit, `ε(𝟏) = 1`.
pub fn algebra_character_check<R: Scalar>(a: &AlgebraData<R>, eps: &[R]) -> Result<Vec<IdentityCheck<R>>> {
    a.require_kind(AlgebraKind::Associative)?;
    check_length(a, eps)?;
    let e = SparseLinearMap::covector(eps);
    let mut out = vec![IdentityCheck::compare("ε∘μ = ε⊗ε", &e.compose(&a.structure)?, &e.tensor(&e))];
    if let Some(u) = a.unit {
        out.push(unit_value_check(eps, u));
    }
    Ok(out)
}

fn check_length<R: Scalar>(a: &AlgebraData<R>, eps: &[R]) -> Result<()> {
    if eps.len() != a.dim {
        return Err(Error::Shape(format!("covector has {} entries for dimension {}", eps.len(), a.dim)));
    }
    Ok(())
}

fn unit_value_check<R: Scalar>(eps: &[R], u: usize) -> IdentityCheck<R> {
    let lhs = SparseLinearMap::covector(&eps[u..=u]);
    IdentityCheck::compare("ε(𝟏) = 1", &lhs, &SparseLinearMap::identity(1))
}

/// `σ_μ(v⊗w) = 𝟏⊗vw`, with `Δ_𝟏(v) = 𝟏⊗v` and the algebra's characters.
pub fn assoc_braiding<R: Scalar>(a: &AlgebraData<R>) -> Result<PreBraidedSpace<R>> {
    a.require_kind(AlgebraKind::Associative)?;
    let u = a.require_unit()?;
    let report = check_assoc(a)?;
    if let Some(c) = report.unit_check("right unit").filter(|c| !c.passed) {
        return Err(Error::Structure(format!("distinguished vector is not a right unit ({c})")));
    }
    let d = a.dim;
    let sigma = a.unit_vector()?.tensor(&SparseLinearMap::identity(d)).compose(&a.structure)?;
    let mut space = PreBraidedSpace::new(d, sigma)?;
    let delta = SparseLinearMap::from_triplets(d * d, d, (0..d).map(|v| (u * d + v, v, R::one())))?;
    space.set_comultiplication(delta)?;
    install_characters(&mut space, a)?;
    Ok(space)
}

fn install_characters<R: Scalar>(space: &mut PreBraidedSpace<R>, a: &AlgebraData<R>) -> Result<()> {
    for (name, values) in &a.characters {
        space.add_character(name, values.clone())?;
    }
    if let Some(g) = &a.grading {
        space.set_grading(g.clone())?;
    }
    space.set_payload(StructurePayload::Algebra(a.clone()));
    Ok(())
}

/// The graded Leibniz identity `[v,[w,u]] = [[v,w],u] − (−1)^{|u||w|}[[v,u],w]` on basis
/// triples, plus centrality of the unit. Without a grading all degrees are zero.
pub fn check_leibniz<R: Scalar>(a: &AlgebraData<R>) -> Result<AxiomReport<R>> {
    a.require_kind(AlgebraKind::Leibniz)?;
    let d = a.dim;
    let b = &a.structure;
    let grading = a.grading_or_zero();
    let tau = koszul_braiding::<R>(&grading);
    let lhs = b.compose(&b.placed(d, 1))?;
    let first = b.compose(&b.placed(1, d))?;
    let second = first.compose(&tau.sigma().placed(d, 1))?;
    let axiom = IdentityCheck::compare("Leibniz identity", &lhs, &first.sub(&second)?);
    let mut units = Vec::new();
    if a.unit.is_some() {
        let one = a.unit_vector()?;
        let id = SparseLinearMap::identity(d);
        units.push(IdentityCheck::vanishes("[v,𝟏] = 0", &b.compose(&id.tensor(&one))?));
        units.push(IdentityCheck::vanishes("[𝟏,v] = 0", &b.compose(&one.tensor(&id))?));
    }
    if a.grading.is_some() {
        units.push(homogeneity_check(a, &grading));
    }
    Ok(AxiomReport { axiom, units })
}

fn homogeneity_check<R: Scalar>(a: &AlgebraData<R>, grading: &[i64]) -> IdentityCheck<R> {
    let d = a.dim;
    let escaped = a.structure.entries().find(|(row, col, _)| grading[*row] != grading[col / d] + grading[col % d]);
    match escaped {
        None => IdentityCheck::pass("bracket preserves degrees"),
        Some((row, col, v)) => IdentityCheck {
            name: "bracket preserves degrees".into(),
            passed: false,
            mismatch: Some(crate::exactlin::Mismatch { row, col, left: v.clone(), right: R::zero() }),
        },
    }
}

/// `ε([v,w]) = 0` on basis pairs and, with a unit, `ε(𝟏) = 1`.
pub fn lie_character_check<R: Scalar>(a: &AlgebraData<R>, eps: &[R]) -> Result<Vec<IdentityCheck<R>>> {
    a.require_kind(AlgebraKind::Leibniz)?;
    check_length(a, eps)?;
    let e = SparseLinearMap::covector(eps);
    let mut out = vec![IdentityCheck::vanishes("ε([v,w]) = 0", &e.compose(&a.structure)?)];
    if let Some(u) = a.unit {
        out.push(unit_value_check(eps, u));
    }
    Ok(out)
}

/// `σ(v⊗w) = (−1)^{|v||w|} w⊗v + 𝟏⊗[v,w]` with its inverse, and `Δ_pr` when the
/// non-unit basis vectors span a subalgebra.
pub fn leibniz_braiding<R: Scalar>(a: &AlgebraData<R>) -> Result<PreBraidedSpace<R>> {
    a.require_kind(AlgebraKind::Leibniz)?;
    let u = a.require_unit()?;
    let report = check_leibniz(a)?;
    if let Some(c) = report.units.iter().find(|c| c.name.contains('𝟏') && !c.passed) {
        return Err(Error::Structure(format!("the unit is not central ({c})")));
    }
    let d = a.dim;
    let grading = a.grading_or_zero();
    if grading[u] != 0 {
        return Err(Error::Structure("the unit must have degree zero".into()));
    }
    let flip = koszul_braiding::<R>(&grading).sigma().clone();
    let unit_bracket = a.unit_vector()?.tensor(&SparseLinearMap::identity(d)).compose(&a.structure)?;
    let sigma = flip.add(&unit_bracket)?;
    // (−1)^{|v||w|}(w⊗v − [w,v]⊗𝟏) = τ − (([,]⊗e_𝟏)∘τ)
    let bracket_unit = a.structure.tensor(&a.unit_vector()?);
    let inverse = flip.sub(&bracket_unit.compose(&flip)?)?;
    let mut space = PreBraidedSpace::new(d, sigma)?;
    // Fails only for inhomogeneous brackets on graded input, where no closed form applies.
    let _ = space.set_sigma_inverse(inverse);
    if avoids_row(&a.structure, u) {
        let mut triplets = Vec::new();
        for v in 0..d {
            if v == u {
                triplets.push((u * d + u, u, R::one()));
            } else {
                triplets.push((u * d + v, v, R::one()));
                triplets.push((v * d + u, v, R::one()));
            }
        }
        space.set_comultiplication(SparseLinearMap::from_triplets(d * d, d, triplets)?)?;
    }
    install_characters(&mut space, a)?;
    Ok(space)
}

fn avoids_row<R: Scalar>(map: &SparseLinearMap<R>, row: usize) -> bool {
    map.entries().all(|(r, _, _)| r != row)
}

/// Adds a formal two-sided (resp. central) unit as the last basis vector and installs
/// the augmentation character.
pub fn adjoin_unit<R: Scalar>(a: &AlgebraData<R>) -> Result<AlgebraData<R>> {
    if a.kind == AlgebraKind::Coalgebra {
        return Err(Error::Structure("adjoin_unit expects an associative or Leibniz input".into()));
    }
    if a.unit.is_some() {
        return Err(Error::Structure("the input already has a unit".into()));
    }
    let d = a.dim;
    let e = d + 1;
    let u = d;
    let mut triplets: Vec<(usize, usize, R)> = a
        .structure
        .entries()
        .map(|(row, col, x)| (row, (col / d) * e + col % d, x.clone()))
        .collect();
    if a.kind == AlgebraKind::Associative {
        for v in 0..e {
            triplets.push((v, u * e + v, R::one()));
            if v != u {
                triplets.push((v, v * e + u, R::one()));
            }
        }
    }
    let structure = SparseLinearMap::from_triplets(e, e * e, triplets)?;
    let mut out = AlgebraData::new(a.kind, e, structure, Some(u))?;
    if let Some(g) = &a.grading {
        let mut g = g.clone();
        g.push(0);
        out.grading = Some(g);
    }
    for (name, values) in &a.characters {
        let mut v = values.clone();
        v.push(R::one());
        out.characters.insert(name.clone(), v);
    }
    let mut aug = vec![R::zero(); e];
    aug[u] = R::one();
    out.characters.insert(AUGMENTATION.into(), aug);
    Ok(out)
}

/// Extends a counit-free coalgebra `(V, δ)` by a group-like `𝟏`:
/// `Δ(v) = δ(v) + 𝟏⊗v + v⊗𝟏`, `Δ(𝟏) = 𝟏⊗𝟏`, `ε(V) = 0`, `ε(𝟏) = 1`.
pub fn coalgebra_extend<R: Scalar>(a: &AlgebraData<R>) -> Result<AlgebraData<R>> {
    a.require_kind(AlgebraKind::Coalgebra)?;
    if a.unit.is_some() {
        return Err(Error::Structure("the coalgebra already has a counit".into()));
    }
    let d = a.dim;
    let e = d + 1;
    let u = d;
    let mut triplets: Vec<(usize, usize, R)> = a
        .structure
        .entries()
        .map(|(row, col, x)| ((row / d) * e + row % d, col, x.clone()))
        .collect();
    for v in 0..d {
        triplets.push((u * e + v, v, R::one()));
        triplets.push((v * e + u, v, R::one()));
    }
    triplets.push((u * e + u, u, R::one()));
    let structure = SparseLinearMap::from_triplets(e * e, e, triplets)?;
    let mut out = AlgebraData::new(AlgebraKind::Coalgebra, e, structure, Some(u))?;
    let mut counit = vec![R::zero(); e];
    counit[u] = R::one();
    out.characters.insert(COUNIT.into(), counit);
    Ok(out)
}

/// Coassociativity, plus counit laws and group-likeness of `𝟏` when it is present.
pub fn check_coassoc<R: Scalar>(a: &AlgebraData<R>) -> Result<AxiomReport<R>> {
    a.require_kind(AlgebraKind::Coalgebra)?;
    let d = a.dim;
    let delta = &a.structure;
    let lhs = delta.placed(1, d).compose(delta)?;
    let rhs = delta.placed(d, 1).compose(delta)?;
    let axiom = IdentityCheck::compare("coassociativity", &lhs, &rhs);
    let mut units = Vec::new();
    if a.unit.is_some() {
        let eps = SparseLinearMap::covector(&a.unit_covector()?);
        let id = SparseLinearMap::identity(d);
        units.push(IdentityCheck::compare("(ε⊗Id)Δ = Id", &eps.tensor(&id).compose(delta)?, &id));
        units.push(IdentityCheck::compare("(Id⊗ε)Δ = Id", &id.tensor(&eps).compose(delta)?, &id));
        let one = a.unit_vector()?;
        units.push(IdentityCheck::compare("Δ(𝟏) = 𝟏⊗𝟏", &delta.compose(&one)?, &one.tensor(&one)));
    }
    Ok(AxiomReport { axiom, units })
}

/// `σ(v⊗w) = ε(v)Δ(w)` for the counit `ε = δ_𝟏`.
pub fn coassoc_braiding<R: Scalar>(a: &AlgebraData<R>) -> Result<PreBraidedSpace<R>> {
    a.require_kind(AlgebraKind::Coalgebra)?;
    a.require_unit()?;
    let eps = SparseLinearMap::covector(&a.unit_covector()?);
    let sigma = eps.tensor(&a.structure);
    let mut space = PreBraidedSpace::new(a.dim, sigma)?;
    install_characters(&mut space, a)?;
    Ok(space)
}

/// The dual algebra `V*` of a coalgebra on the dual basis, with unit the dual counit.
pub fn dual_algebra<R: Scalar>(a: &AlgebraData<R>) -> Result<AlgebraData<R>> {
    a.require_kind(AlgebraKind::Coalgebra)?;
    AlgebraData::new(AlgebraKind::Associative, a.dim, a.structure.transpose(), a.unit)
}

/// The dual coalgebra of an associative algebra on the dual basis.
pub fn dual_coalgebra<R: Scalar>(a: &AlgebraData<R>) -> Result<AlgebraData<R>> {
    a.require_kind(AlgebraKind::Associative)?;
    AlgebraData::new(AlgebraKind::Coalgebra, a.dim, a.structure.transpose(), a.unit)
}

/// The group algebra of a finite group given by its multiplication table; the identity
/// element must be index 0.
pub fn group_algebra<R: Scalar>(table: &[Vec<usize>]) -> Result<AlgebraData<R>> {
    let n = table.len();
    let constants = (0..n).flat_map(|a| (0..n).map(move |b| (a, b, table[a][b], R::one())));
    AlgebraData::from_constants(AlgebraKind::Associative, n, Some(0), constants)
}

/// The group algebra of `ℤ/n`, basis `g⁰, …, g^{n−1}`.
pub fn cyclic_group_algebra<R: Scalar>(n: usize) -> AlgebraData<R> {
    let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    group_algebra(&table).expect("valid table")
}

/// `k[x]/(x^k)`, basis `1, x, …, x^{k−1}`, unit at index 0.
pub fn truncated_polynomial<R: Scalar>(k: usize) -> AlgebraData<R> {
    let constants = (0..k).flat_map(|a| (0..k).filter(move |b| a + b < k).map(move |b| (a, b, a + b, R::one())));
    AlgebraData::from_constants(AlgebraKind::Associative, k, Some(0), constants).expect("valid constants")
}

/// `sl₂` on the basis `e, f, h` (no unit): `[e,f] = h`, `[h,e] = 2e`, `[h,f] = −2f`.
pub fn sl2<R: Scalar>() -> AlgebraData<R> {
    let (e, f, h) = (0, 1, 2);
    let two = R::from_i64(2);
    let constants = vec![
        (e, f, h, R::one()),
        (f, e, h, -R::one()),
        (h, e, e, two.clone()),
        (e, h, e, -two.clone()),
        (h, f, f, -two.clone()),
        (f, h, f, two),
    ];
    AlgebraData::from_constants(AlgebraKind::Leibniz, 3, None, constants).expect("valid constants")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braiding::{check_braided_character, check_braided_coalgebra, check_ybe, CoalgebraLevel};
    use num_bigint::BigInt;
    use num_rational::BigRational;

    type Z = BigInt;
    type Q = BigRational;

    fn z(v: i64) -> Z {
        Z::from(v)
    }

    #[test]
    fn group_algebra_braiding() {
        let a = cyclic_group_algebra::<Z>(2);
        let mut s = assoc_braiding(&a).unwrap();
        // g⊗g ↦ e⊗e
        assert_eq!(s.sigma().column(3), &[(0, z(1))]);
        // v⊗𝟏 ↦ 𝟏⊗v
        assert_eq!(s.sigma().column(2), &[(1, z(1))]);
        assert_eq!(s.sigma().compose(s.sigma()).unwrap(), *s.sigma());
        assert!(check_ybe(&mut s).passed);
    }

    #[test]
    fn dual_numbers_associative() {
        let a = truncated_polynomial::<Z>(2);
        assert!(check_assoc(&a).unwrap().passed());
        let quotient = AlgebraData::from_constants(
            AlgebraKind::Associative,
            2,
            Some(0),
            [(0, 0, 0, z(1)), (0, 1, 1, z(1)), (1, 0, 1, z(1)), (1, 1, 0, z(1)), (1, 1, 1, z(1))],
        )
        .unwrap();
        assert!(check_assoc(&quotient).unwrap().passed());
        let broken =
            AlgebraData::from_constants(AlgebraKind::Associative, 2, None, [(0, 0, 1, z(1)), (1, 0, 0, z(1))]).unwrap();
        let report = check_assoc(&broken).unwrap();
        assert!(!report.passed());
        // (e0 e0) e0 = e0 while e0 (e0 e0) = 0: column e0⊗e0⊗e0, row e0.
        let m = report.axiom.mismatch.unwrap();
        assert_eq!((m.row, m.col), (0, 0));
        let skew = AlgebraData::from_constants(AlgebraKind::Associative, 1, None, [(0, 0, 0, z(2))]).unwrap();
        assert!(check_assoc(&skew).unwrap().passed());
    }

    #[test]
    fn group_characters() {
        let a = cyclic_group_algebra::<Z>(2);
        assert!(algebra_character_check(&a, &[z(1), z(1)]).unwrap().iter().all(|c| c.passed));
        assert!(algebra_character_check(&a, &[z(1), z(-1)]).unwrap().iter().all(|c| c.passed));
        assert!(!algebra_character_check(&a, &[z(1), z(2)]).unwrap().iter().all(|c| c.passed));
    }

    #[test]
    fn missing_or_bad_unit() {
        let mut a = truncated_polynomial::<Z>(2);
        a.unit = None;
        assert!(assoc_braiding(&a).is_err());
        a.unit = Some(1);
        assert!(assoc_braiding(&a).is_err());
    }

    #[test]
    fn sl2_braiding() {
        let a = adjoin_unit(&sl2::<Q>()).unwrap();
        assert!(check_leibniz(&a).unwrap().passed());
        let mut s = leibniz_braiding(&a).unwrap();
        let d = 4;
        let (e, f, h, one) = (0, 1, 2, 3);
        let col = s.sigma().column(e * d + f).to_vec();
        let expected = vec![(f * d + e, Q::from_integer(1.into())), (one * d + h, Q::from_integer(1.into()))];
        let mut sorted = col.clone();
        sorted.sort_by_key(|x| x.0);
        assert_eq!(sorted, expected);
        let inv = s.sigma_inverse().expect("closed-form inverse installed").clone();
        assert!(s.sigma().compose(&inv).unwrap().is_identity());
        assert!(check_ybe(&mut s).passed);
        assert!(check_braided_character(&mut s, AUGMENTATION).unwrap().passed);
        assert!(s.comultiplication().is_some());
        let report = check_braided_coalgebra(&s).unwrap();
        assert!(report.cocommutative);
        assert_ne!(report.level, CoalgebraLevel::Neither);
    }

    #[test]
    fn abelian_bracket_is_flip() {
        let a = AlgebraData::<Z>::new(AlgebraKind::Leibniz, 2, SparseLinearMap::zero(2, 4), Some(1)).unwrap();
        let s = leibniz_braiding(&a).unwrap();
        assert_eq!(s.sigma(), &SparseLinearMap::block_flip(2, 2));
    }

    #[test]
    fn one_dimensional_idempotent_bracket_is_not_leibniz() {
        // [x,[x,x]] = x while [[x,x],x] − [[x,x],x] = 0.
        let a = AlgebraData::from_constants(AlgebraKind::Leibniz, 1, None, [(0, 0, 0, z(1))]).unwrap();
        assert!(!check_leibniz(&a).unwrap().passed());
        let non_lie = AlgebraData::from_constants(AlgebraKind::Leibniz, 2, None, [(1, 1, 0, z(1))]).unwrap();
        assert!(check_leibniz(&non_lie).unwrap().passed());
    }

    #[test]
    fn super_bracket() {
        let a = AlgebraData::from_constants(AlgebraKind::Leibniz, 2, None, [(0, 0, 1, z(1))])
            .unwrap()
            .with_grading(vec![1, 0])
            .unwrap();
        assert!(check_leibniz(&a).unwrap().passed());
        let u = adjoin_unit(&a).unwrap();
        let mut s = leibniz_braiding(&u).unwrap();
        assert!(check_ybe(&mut s).passed);
    }

    #[test]
    fn lie_characters() {
        let a = adjoin_unit(&sl2::<Z>()).unwrap();
        let aug = a.characters()[AUGMENTATION].clone();
        assert!(lie_character_check(&a, &aug).unwrap().iter().all(|c| c.passed));
        assert!(!lie_character_check(&a, &[z(0), z(0), z(1), z(1)]).unwrap()[0].passed);
    }

    #[test]
    fn adjoin_unit_properties() {
        let zero = AlgebraData::<Z>::new(AlgebraKind::Associative, 1, SparseLinearMap::zero(1, 1), None).unwrap();
        let u = adjoin_unit(&zero).unwrap();
        // Dual numbers with the unit last.
        let expected = AlgebraData::from_constants(
            AlgebraKind::Associative,
            2,
            Some(1),
            [(1, 1, 1, z(1)), (1, 0, 0, z(1)), (0, 1, 0, z(1))],
        )
        .unwrap();
        assert_eq!(u.structure(), expected.structure());
        assert!(check_assoc(&u).unwrap().checks().all(|c| c.passed));
        assert!(adjoin_unit(&u).is_err());
        let sl = adjoin_unit(&sl2::<Z>()).unwrap();
        assert_eq!(sl.dim(), 4);
        assert_eq!(sl.product(0, 1), &[(2, z(1))]);
    }

    #[test]
    fn coalgebra_extension() {
        let zero = AlgebraData::<Z>::new(AlgebraKind::Coalgebra, 1, SparseLinearMap::zero(1, 1), None).unwrap();
        let c = coalgebra_extend(&zero).unwrap();
        assert!(check_coassoc(&c).unwrap().checks().all(|x| x.passed));
        let one = c.unit().unwrap();
        assert_eq!(c.structure().column(one), &[(one * 2 + one, z(1))]);
        assert!(coalgebra_extend(&c).is_err());
    }

    #[test]
    fn coassoc_braiding_is_transpose_of_dual() {
        let alg = cyclic_group_algebra::<Z>(2);
        let coalg = dual_coalgebra(&alg).unwrap();
        let report = check_coassoc(&coalg).unwrap();
        assert!(report.passed());
        assert!(report.unit_check("(ε⊗Id)Δ = Id").unwrap().passed);
        assert!(!report.unit_check("Δ(𝟏) = 𝟏⊗𝟏").unwrap().passed);
        let mut s = coassoc_braiding(&coalg).unwrap();
        assert!(check_ybe(&mut s).passed);
        let mu = assoc_braiding(&alg).unwrap();
        assert_eq!(s.sigma(), &mu.sigma().transpose());
        let point = AlgebraData::from_constants(AlgebraKind::Coalgebra, 1, Some(0), [(0, 0, 0, z(1))]).unwrap();
        assert!(coassoc_braiding(&point).unwrap().sigma().is_identity());
    }
}
