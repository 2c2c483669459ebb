//! Entrywise verification of the (bi)simplicial identities for braided faces and the
//! degeneracies coming from a comultiplication.

use std::collections::HashMap;
use std::fmt;

use crate::braiding::PreBraidedSpace;
use crate::error::Result;
use crate::exactlin::{Scalar, SparseLinearMap};
use crate::report::IdentityCheck;

use super::{degeneracy, face_unchecked, require_character, Side};

/// The identities checked, on a source `V^{⊗n}`:
///
/// 1. `d_i d_j = d_{j−1} d_i` for `i < j ≤ n`;
/// 2. `s_i s_j = s_{j+1} s_i` for `i ≤ j ≤ n` (reported once, on [`SimplicialReport::degeneracies`]);
/// 3. `d_i s_j = s_{j−1} d_i` for `i < j ≤ n`;
/// 4. `d_i s_j = s_j d_{i−1}` for `j+1 < i ≤ n`;
/// 5. `d_i s_i = d_{i+1} s_i` for `i ≤ n`;
/// 6. `d_i s_i = Id` for `i ≤ n`;
///
/// and, for two families of faces, the mixed relations `d_i d'_j = d'_{j−1} d_i`,
/// `d'_i d_j = d_{j−1} d'_i` for `i < j ≤ n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    Faces,
    FaceBeforeDegeneracy,
    FaceAfterDegeneracy,
    Weak,
    Unit,
}

impl Identity {
    pub fn number(self) -> u8 {
        match self {
            Identity::Faces => 1,
            Identity::FaceBeforeDegeneracy => 3,
            Identity::FaceAfterDegeneracy => 4,
            Identity::Weak => 5,
            Identity::Unit => 6,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SimplicialLevel {
    None,
    Presimplicial,
    VeryWeaklySimplicial,
    WeaklySimplicial,
    Simplicial,
}

impl SimplicialLevel {
    /// Name of the level, with the `bi` prefix for two-sided structures.
    pub fn name(self, bi: bool) -> String {
        let base = match self {
            SimplicialLevel::None => return "none".into(),
            SimplicialLevel::Presimplicial => "presimplicial",
            SimplicialLevel::VeryWeaklySimplicial => "very weakly simplicial",
            SimplicialLevel::WeaklySimplicial => "weakly simplicial",
            SimplicialLevel::Simplicial => "simplicial",
        };
        if bi {
            base.replacen("simplicial", "bisimplicial", 1).replacen("presimplicial", "pre-bisimplicial", 1)
        } else {
            base.to_string()
        }
    }
}

impl fmt::Display for SimplicialLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name(false))
    }
}

/// Characters for the left faces `d_{n;i}` and right faces `d'_{n;i}`, and whether to
/// include the degeneracies `s_{n;i} = Δ_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialSpec<R> {
    pub left: Option<Vec<R>>,
    pub right: Option<Vec<R>>,
    pub degeneracies: bool,
}

impl<R: Scalar> SimplicialSpec<R> {
    /// Resolves verified characters by name.
    pub fn from_names(space: &PreBraidedSpace<R>, left: Option<&str>, right: Option<&str>, degeneracies: bool) -> Result<Self> {
        Ok(SimplicialSpec {
            left: left.map(|n| space.verified_character(n).map(<[R]>::to_vec)).transpose()?,
            right: right.map(|n| space.verified_character(n).map(<[R]>::to_vec)).transpose()?,
            degeneracies,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SideReport<R> {
    pub side: Side,
    pub checks: Vec<(Identity, IdentityCheck<R>)>,
    pub level: SimplicialLevel,
}

impl<R: Scalar> SideReport<R> {
    pub fn holds(&self, id: Identity) -> bool {
        self.checks.iter().filter(|(i, _)| *i == id).all(|(_, c)| c.passed)
    }

    pub fn first_failure(&self, id: Identity) -> Option<&IdentityCheck<R>> {
        self.checks.iter().find(|(i, c)| *i == id && !c.passed).map(|(_, c)| c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialReport<R> {
    /// `s_i s_j = s_{j+1} s_i`, shared by both sides.
    pub degeneracies: Vec<IdentityCheck<R>>,
    pub left: Option<SideReport<R>>,
    pub right: Option<SideReport<R>>,
    /// Mixed face relations, present when both sides are given.
    pub mixed: Vec<IdentityCheck<R>>,
    /// Level of the two-sided structure, present when both sides are given.
    pub bi_level: Option<SimplicialLevel>,
}

impl<R: Scalar> SimplicialReport<R> {
    pub fn checks(&self) -> impl Iterator<Item = &IdentityCheck<R>> {
        let l = self.left.iter().flat_map(|s| s.checks.iter().map(|(_, c)| c));
        let r = self.right.iter().flat_map(|s| s.checks.iter().map(|(_, c)| c));
        self.degeneracies.iter().chain(l).chain(r).chain(self.mixed.iter())
    }
}

struct Maps<'a, R: Scalar> {
    space: &'a PreBraidedSpace<R>,
    faces: HashMap<(Side, usize, usize), SparseLinearMap<R>>,
    degens: HashMap<(usize, usize), SparseLinearMap<R>>,
    left: Option<&'a [R]>,
    right: Option<&'a [R]>,
}

impl<R: Scalar> Maps<'_, R> {
    fn face(&mut self, side: Side, n: usize, i: usize) -> Result<&SparseLinearMap<R>> {
        if !self.faces.contains_key(&(side, n, i)) {
            let eps = match side {
                Side::Left => self.left,
                Side::Right => self.right,
            }
            .expect("face side requested only when its character is given");
            let f = face_unchecked(self.space, eps, n, i, side)?;
            self.faces.insert((side, n, i), f);
        }
        Ok(&self.faces[&(side, n, i)])
    }

    fn degen(&mut self, n: usize, i: usize) -> Result<&SparseLinearMap<R>> {
        if !self.degens.contains_key(&(n, i)) {
            let s = degeneracy(self.space, n, i)?;
            self.degens.insert((n, i), s);
        }
        Ok(&self.degens[&(n, i)])
    }

    /// `a ∘ b`, both factors taken from the cache.
    fn product(&mut self, a: Op, b: Op) -> Result<SparseLinearMap<R>> {
        let bm = self.get(b)?.clone();
        Ok(self.get(a)?.compose(&bm)?)
    }

    fn get(&mut self, op: Op) -> Result<&SparseLinearMap<R>> {
        match op {
            Op::Face(side, n, i) => self.face(side, n, i),
            Op::Degen(n, i) => self.degen(n, i),
        }
    }
}

#[derive(Clone, Copy)]
enum Op {
    Face(Side, usize, usize),
    Degen(usize, usize),
}

fn side_name(side: Side) -> &'static str {
    match side {
        Side::Left => "d",
        Side::Right => "d'",
    }
}

fn side_checks<R: Scalar>(maps: &mut Maps<'_, R>, side: Side, n_max: usize, degeneracies: bool) -> Result<SideReport<R>> {
    use Op::{Degen as S, Face as D};
    let f = side_name(side);
    let mut checks = Vec::new();
    for n in 2..=n_max {
        for j in 2..=n {
            for i in 1..j {
                let lhs = maps.product(D(side, n - 1, i), D(side, n, j))?;
                let rhs = maps.product(D(side, n - 1, j - 1), D(side, n, i))?;
                checks.push((Identity::Faces, IdentityCheck::compare(format!("{f}_{i}{f}_{j} = {f}_{}{f}_{i} on degree {n}", j - 1), &lhs, &rhs)));
            }
        }
    }
    if degeneracies {
        for n in 1..=n_max {
            for j in 2..=n {
                for i in 1..j {
                    let lhs = maps.product(D(side, n + 1, i), S(n, j))?;
                    let rhs = maps.product(S(n - 1, j - 1), D(side, n, i))?;
                    checks.push((
                        Identity::FaceBeforeDegeneracy,
                        IdentityCheck::compare(format!("{f}_{i}s_{j} = s_{}{f}_{i} on degree {n}", j - 1), &lhs, &rhs),
                    ));
                }
            }
            for i in 3..=n {
                for j in 1..i - 1 {
                    let lhs = maps.product(D(side, n + 1, i), S(n, j))?;
                    let rhs = maps.product(S(n - 1, j), D(side, n, i - 1))?;
                    checks.push((
                        Identity::FaceAfterDegeneracy,
                        IdentityCheck::compare(format!("{f}_{i}s_{j} = s_{j}{f}_{} on degree {n}", i - 1), &lhs, &rhs),
                    ));
                }
            }
            for i in 1..=n {
                let a = maps.product(D(side, n + 1, i), S(n, i))?;
                let b = maps.product(D(side, n + 1, i + 1), S(n, i))?;
                checks.push((Identity::Weak, IdentityCheck::compare(format!("{f}_{i}s_{i} = {f}_{}s_{i} on degree {n}", i + 1), &a, &b)));
                let id = SparseLinearMap::identity(a.cols());
                checks.push((Identity::Unit, IdentityCheck::compare(format!("{f}_{i}s_{i} = Id on degree {n}"), &a, &id)));
            }
        }
    }
    Ok(SideReport { side, checks, level: SimplicialLevel::None })
}

fn degeneracy_checks<R: Scalar>(maps: &mut Maps<'_, R>, n_max: usize) -> Result<Vec<IdentityCheck<R>>> {
    let mut checks = Vec::new();
    for n in 1..=n_max {
        for j in 1..=n {
            for i in 1..=j {
                let lhs = maps.product(Op::Degen(n + 1, i), Op::Degen(n, j))?;
                let rhs = maps.product(Op::Degen(n + 1, j + 1), Op::Degen(n, i))?;
                checks.push(IdentityCheck::compare(format!("s_{i}s_{j} = s_{}s_{i} on degree {n}", j + 1), &lhs, &rhs));
            }
        }
    }
    Ok(checks)
}

fn level_of<R: Scalar>(r: &SideReport<R>, degeneracies: bool, degens_ok: bool) -> SimplicialLevel {
    if !r.holds(Identity::Faces) {
        SimplicialLevel::None
    } else if !degeneracies
        || !degens_ok
        || !r.holds(Identity::FaceBeforeDegeneracy)
        || !r.holds(Identity::FaceAfterDegeneracy)
    {
        SimplicialLevel::Presimplicial
    } else if !r.holds(Identity::Weak) {
        SimplicialLevel::VeryWeaklySimplicial
    } else if !r.holds(Identity::Unit) {
        SimplicialLevel::WeaklySimplicial
    } else {
        SimplicialLevel::Simplicial
    }
}

/// Checks every applicable identity on sources of degree `≤ n_max` and reports the
/// level reached by each side and by the pair.
pub fn check_simplicial<R: Scalar>(space: &PreBraidedSpace<R>, spec: &SimplicialSpec<R>, n_max: usize) -> Result<SimplicialReport<R>> {
    space.require_ybe()?;
    for c in spec.left.iter().chain(spec.right.iter()) {
        require_character(space, c)?;
    }
    let mut maps = Maps {
        space,
        faces: HashMap::new(),
        degens: HashMap::new(),
        left: spec.left.as_deref(),
        right: spec.right.as_deref(),
    };
    let degeneracies = if spec.degeneracies { degeneracy_checks(&mut maps, n_max)? } else { Vec::new() };
    let degens_ok = degeneracies.iter().all(|c| c.passed);
    let side = |maps: &mut Maps<'_, R>, present: bool, side: Side| -> Result<Option<SideReport<R>>> {
        if !present {
            return Ok(None);
        }
        let mut r = side_checks(maps, side, n_max, spec.degeneracies)?;
        r.level = level_of(&r, spec.degeneracies, degens_ok);
        Ok(Some(r))
    };
    let left = side(&mut maps, spec.left.is_some(), Side::Left)?;
    let right = side(&mut maps, spec.right.is_some(), Side::Right)?;
    let mut mixed = Vec::new();
    let mut bi_level = None;
    if let (Some(l), Some(r)) = (&left, &right) {
        for n in 2..=n_max {
            for j in 2..=n {
                for i in 1..j {
                    let lhs = maps.product(Op::Face(Side::Left, n - 1, i), Op::Face(Side::Right, n, j))?;
                    let rhs = maps.product(Op::Face(Side::Right, n - 1, j - 1), Op::Face(Side::Left, n, i))?;
                    mixed.push(IdentityCheck::compare(format!("d_{i}d'_{j} = d'_{}d_{i} on degree {n}", j - 1), &lhs, &rhs));
                    let lhs = maps.product(Op::Face(Side::Right, n - 1, i), Op::Face(Side::Left, n, j))?;
                    let rhs = maps.product(Op::Face(Side::Left, n - 1, j - 1), Op::Face(Side::Right, n, i))?;
                    mixed.push(IdentityCheck::compare(format!("d'_{i}d_{j} = d_{}d'_{i} on degree {n}", j - 1), &lhs, &rhs));
                }
            }
        }
        bi_level = Some(if mixed.iter().all(|c| c.passed) { l.level.min(r.level) } else { SimplicialLevel::None });
    }
    Ok(SimplicialReport { degeneracies, left, right, mixed, bi_level })
}
