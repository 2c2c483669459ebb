//! Turning a validated scenario into library objects over a chosen scalar ring.

use std::collections::BTreeMap;

use braidhom::braiding::{check_braided_character, check_ybe};
use braidhom::complexes::{Bimodule, BraidedModule, Side};
use braidhom::structures::{
    adjoin_unit, assoc_braiding, coalgebra_extend, coassoc_braiding, flip_braiding, koszul_braiding, leibniz_braiding,
    q_flip_diagonal, shelf_braiding, AlgebraData, AlgebraKind, ShelfTable, AUGMENTATION, COUNIT, SHELF_COUNIT,
};
use braidhom::{PreBraidedSpace, Scalar, SparseLinearMap};

use crate::error::CliError;
use crate::scenario::{AlgebraBlock, Constant, Entry, Rat, ScenarioFile, SideSpec, Structure};

pub struct Model<R: Scalar> {
    pub space: PreBraidedSpace<R>,
    pub shelf: Option<ShelfTable>,
    pub algebra: Option<AlgebraData<R>>,
    pub modules: BTreeMap<String, BraidedModule<R>>,
    pub bimodules: BTreeMap<String, Bimodule<R>>,
}

impl<R: Scalar> Model<R> {
    /// The character used when none is named: the counit of a shelf, the augmentation or
    /// counit of a (co)algebra, otherwise the first installed one.
    pub fn default_character(&self) -> Option<String> {
        let names = self.space.character_names();
        [SHELF_COUNIT, AUGMENTATION, COUNIT]
            .iter()
            .find(|n| names.iter().any(|m| m == *n))
            .map(|n| n.to_string())
            .or_else(|| names.first().cloned())
    }

    pub fn character_or_default(&self, name: &Option<String>) -> Result<String, CliError> {
        name.clone()
            .or_else(|| self.default_character())
            .ok_or_else(|| CliError::Input("the scenario declares no characters; add one or name it explicitly".into()))
    }

    pub fn module(&self, name: &str, side: Side) -> Result<&BraidedModule<R>, CliError> {
        let m = self.modules.get(name).ok_or_else(|| CliError::Input(format!("unknown module `{name}`")))?;
        if m.side() != side {
            return Err(CliError::Input(format!("module `{name}` is not a {side} module")));
        }
        Ok(m)
    }
}

fn scalar<R: Scalar>(x: &Rat, path: &str) -> Result<R, CliError> {
    R::from_rational(&x.0).ok_or_else(|| CliError::Input(format!("{path}: {} is not in {}", x.0, R::ring_name())))
}

fn scalars<R: Scalar>(xs: &[Rat], path: &str) -> Result<Vec<R>, CliError> {
    xs.iter().enumerate().map(|(i, x)| scalar(x, &format!("{path}[{i}]"))).collect()
}

fn matrix<R: Scalar>(entries: &[Entry], rows: usize, cols: usize, path: &str) -> Result<SparseLinearMap<R>, CliError> {
    let mut triplets = Vec::new();
    for (i, (r, c, x)) in entries.iter().enumerate() {
        let v: R = scalar(x, &format!("{path}[{i}]"))?;
        if !v.is_zero() {
            triplets.push((*r, *c, v));
        }
    }
    SparseLinearMap::from_triplets(rows, cols, triplets).map_err(|e| CliError::Input(format!("{path}: {e}")))
}

fn constants<R: Scalar>(cs: &[Constant], path: &str) -> Result<Vec<(usize, usize, usize, R)>, CliError> {
    let mut out = Vec::new();
    for (i, (a, b, c, x)) in cs.iter().enumerate() {
        let v: R = scalar(x, &format!("{path}[{i}]"))?;
        if !v.is_zero() {
            out.push((*a, *b, *c, v));
        }
    }
    Ok(out)
}

fn algebra<R: Scalar>(kind: AlgebraKind, block: &AlgebraBlock, s: &ScenarioFile) -> Result<AlgebraData<R>, CliError> {
    let ctx = |what: &str| CliError::core(format!("structure: {what}"));
    let mut a = AlgebraData::from_constants(kind, block.dim, block.unit, constants(&block.constants, "structure.constants")?)
        .map_err(ctx("structure constants"))?;
    if let Some(g) = &block.grading {
        a = a.with_grading(g.clone()).map_err(ctx("grading"))?;
    }
    if block.adjoin_unit {
        a = match kind {
            AlgebraKind::Coalgebra => coalgebra_extend(&a),
            _ => adjoin_unit(&a),
        }
        .map_err(ctx("adjoining a unit"))?;
    }
    for (name, values) in &s.characters {
        a = a.with_character(name, scalars(values, &format!("characters.{name}"))?).map_err(ctx("characters"))?;
    }
    if kind == AlgebraKind::Coalgebra && !a.characters().contains_key(COUNIT) {
        if let Ok(counit) = a.unit_covector() {
            a = a.with_character(COUNIT, counit).map_err(ctx(COUNIT))?;
        }
    }
    Ok(a)
}

/// Builds the space, characters, comultiplication and modules. Unless `allow_unverified`
/// is set, the Yang–Baxter equation and every character are checked and recorded.
pub fn build<R: Scalar>(s: &ScenarioFile, allow_unverified: bool) -> Result<Model<R>, CliError> {
    let mut shelf = None;
    let mut algebra_data = None;
    let mut space = match &s.structure {
        Structure::Shelf { table } => {
            let t = ShelfTable::new(table.clone()).map_err(CliError::core("structure.table"))?;
            let space = shelf_braiding::<R>(&t);
            shelf = Some(t);
            space
        }
        Structure::Associative(block) | Structure::Leibniz(block) | Structure::Coalgebra(block) => {
            let kind = match &s.structure {
                Structure::Associative(_) => AlgebraKind::Associative,
                Structure::Leibniz(_) => AlgebraKind::Leibniz,
                _ => AlgebraKind::Coalgebra,
            };
            let a = algebra::<R>(kind, block, s)?;
            let space = match kind {
                AlgebraKind::Associative => assoc_braiding(&a),
                AlgebraKind::Leibniz => leibniz_braiding(&a),
                AlgebraKind::Coalgebra => coassoc_braiding(&a),
            }
            .map_err(CliError::core("structural braiding"))?;
            algebra_data = Some(a);
            space
        }
        Structure::Braiding { dim, grading } => {
            let d = *dim;
            let sigma = matrix(s.braiding.as_deref().unwrap_or_default(), d * d, d * d, "braiding")?;
            let mut space = PreBraidedSpace::new(d, sigma).map_err(CliError::core("braiding"))?;
            if let Some(g) = grading {
                space.set_grading(g.clone()).map_err(CliError::core("structure.grading"))?;
            }
            space
        }
        Structure::Flip { dim } => flip_braiding(*dim),
        Structure::Koszul { grading } => koszul_braiding(grading),
        Structure::QFlip { dim, q } => q_flip_diagonal(*dim, &scalars(q, "structure.q")?).map_err(CliError::core("structure.q"))?,
    };
    if algebra_data.is_none() {
        for (name, values) in &s.characters {
            space.add_character(name, scalars(values, &format!("characters.{name}"))?).map_err(CliError::core("characters"))?;
        }
    }
    let d = space.dim();
    if let Some(delta) = &s.comultiplication {
        let triplets = constants::<R>(delta, "comultiplication")?.into_iter().map(|(a, b, c, x)| (b * d + c, a, x));
        let map = SparseLinearMap::from_triplets(d * d, d, triplets).map_err(|e| CliError::Input(format!("comultiplication: {e}")))?;
        space.set_comultiplication(map).map_err(CliError::core("comultiplication"))?;
    }
    if allow_unverified {
        space.allow_unverified(true);
    } else if check_ybe(&mut space).passed {
        for name in space.character_names() {
            check_braided_character(&mut space, &name).map_err(CliError::core("characters"))?;
        }
    }
    let mut modules = BTreeMap::new();
    for (i, m) in s.modules.iter().enumerate() {
        let path = format!("modules[{i}].action");
        let (side, rows, cols) = match m.side {
            SideSpec::Right => (Side::Right, m.dim, m.dim * d),
            SideSpec::Left => (Side::Left, m.dim, d * m.dim),
        };
        let module = BraidedModule::new(m.dim, matrix(&m.action, rows, cols, &path)?, side, d)
            .map_err(CliError::core(path))?
            .normalized(m.normalized);
        modules.insert(m.name.clone(), module);
    }
    let mut bimodules = BTreeMap::new();
    for (i, b) in s.bimodules.iter().enumerate() {
        let pair = Bimodule::new(modules[&b.right].clone(), modules[&b.left].clone()).map_err(CliError::core(format!("bimodules[{i}]")))?;
        bimodules.insert(b.name.clone(), pair);
    }
    Ok(Model { space, shelf, algebra: algebra_data, modules, bimodules })
}
