//! The `check`, `complex`, `homology` and `verify` commands.

use std::fs;
use std::path::Path;

use braidhom::braiding::hopf::{
    antipode_axiom, bialgebra_compatibility, coshuffle_coassociativity, shuffle_associativity, shuffle_commutativity,
};
use braidhom::braiding::{braided_character_report, check_braided_coalgebra, ybe_report, Sign};
use braidhom::complexes::named::is_degenerate;
use braidhom::complexes::{
    arrow_op, binomial_m1, check_bimodule, check_braided_module, check_naturality, check_simplicial, concat_homotopy,
    hyper_boundary_with, named_complex, DifferentialSpec, Identity, NamedComplex, NamedParams, Side, SimplicialSpec,
};
use braidhom::exactlin::invert;
use braidhom::homology::{assemble_with_cap, certify_acyclic, subquotient, DEFAULT_DEGREE_CAP};
use braidhom::report::IdentityCheck;
use braidhom::structures::{
    assoc_braiding, check_assoc, check_coassoc, check_leibniz, check_shelf, coassoc_braiding, dual_algebra, dual_coalgebra,
    AlgebraKind, AUGMENTATION, COUNIT,
};
use braidhom::{ChainComplex, HomologyReport, Scalar, SparseLinearMap};

use crate::error::CliError;
use crate::model::Model;
use crate::options::{DiffChoice, Options};
use crate::report::{CheckLine, ComplexOut, HomologyOut, Report};
use crate::scenario::{Command, ScenarioFile};

/// The ring-specific homology computation.
pub type HomologyFn<'a, R> = &'a dyn Fn(&ChainComplex<R>) -> Result<HomologyReport, CliError>;

pub fn execute<R: Scalar>(
    command: Command,
    scenario: &ScenarioFile,
    model: &Model<R>,
    opts: &Options,
    ring: String,
    homology: HomologyFn<'_, R>,
) -> Result<Report, CliError> {
    let mut report = Report::new(command.name(), ring, scenario.structure.kind(), model.space.dim());
    if command != Command::Check {
        model.space.require_ybe().map_err(CliError::core("the braiding fails the Yang-Baxter equation (see `check`)"))?;
    }
    match command {
        Command::Check => check(model, &mut report)?,
        Command::Complex => {
            let c = complex(model, opts)?;
            let mut out = ComplexOut::of(&c);
            if let Some(dir) = &opts.dump_matrices {
                out.dumped = dump_matrices(&c, dir)?;
            }
            report.complex = Some(out);
        }
        Command::Homology => {
            let c = complex(model, opts)?;
            let h = homology(&c)?;
            report.complex = Some(ComplexOut::of(&c));
            report.homology = Some(HomologyOut::from(&h));
        }
        Command::Verify => verify(model, opts, &mut report, homology)?,
    }
    Ok(report)
}

fn check<R: Scalar>(model: &Model<R>, report: &mut Report) -> Result<(), CliError> {
    let space = &model.space;
    report.check(CheckLine::from_identity("braiding", &ybe_report(space)));
    if let Some(t) = &model.shelf {
        let s = check_shelf(t);
        let mut sd = CheckLine::new("shelf", "self-distributivity", s.self_distributive);
        if let Some((a, b, c)) = s.sd_violation {
            sd.witness = vec![a, b, c];
            sd.detail = Some("(a⊲b)⊲c ≠ (a⊲c)⊲(b⊲c) at (a, b, c)".into());
        }
        report.check(sd);
        let mut rack = CheckLine::new("shelf", "rack (invertible right translations)", s.rack).informational();
        rack.witness = s.rack_violation.into_iter().collect();
        report.check(rack);
        let mut idem = CheckLine::new("shelf", "idempotent", s.idempotent).informational();
        idem.witness = s.idempotence_violation.into_iter().collect();
        report.check(idem);
        report.check(CheckLine::new("shelf", "quandle", s.quandle).informational());
        report.check(CheckLine::new("shelf", "spindle", s.spindle).informational());
    }
    if let Some(a) = &model.algebra {
        let axioms = match a.kind() {
            AlgebraKind::Associative => check_assoc(a),
            AlgebraKind::Leibniz => check_leibniz(a),
            AlgebraKind::Coalgebra => check_coassoc(a),
        }
        .map_err(CliError::core("structure axioms"))?;
        for c in axioms.checks() {
            report.check(CheckLine::from_identity(&a.kind().to_string(), c));
        }
    }
    for (name, values) in space.characters() {
        let mut line = CheckLine::from_identity("characters", &braided_character_report(space, values));
        line.name = format!("{name}: (ε⊗ε)σ = ε⊗ε");
        report.check(line);
    }
    if space.comultiplication().is_some() {
        let c = check_braided_coalgebra(space).map_err(CliError::core("coalgebra"))?;
        for check in [&c.coassociativity, &c.compatibility, &c.compatibility_prime, &c.cocommutativity] {
            report.check(CheckLine::from_identity("comultiplication", check).informational());
        }
        report.property("coalgebra level", format!("{:?}", c.level));
    }
    if let Some(u) = model.algebra.as_ref().and_then(|a| a.unit()) {
        let mut w = vec![R::zero(); space.dim()];
        w[u] = R::one();
        let n = check_naturality(space, &w).map_err(CliError::core("naturality"))?;
        report.property(format!("naturality of the unit e_{u}"), n.level);
        for (name, c) in &n.right_compatible {
            let mut line = CheckLine::from_identity("naturality", c).informational();
            line.name = format!("right compatibility of e_{u} with {name}");
            report.check(line);
        }
    }
    for (name, m) in &model.modules {
        let r = check_braided_module(space, m).map_err(CliError::core(format!("module {name}")))?;
        for c in r.checks() {
            let mut line = CheckLine::from_identity("modules", c);
            line.name = format!("{name}: {}", c.name);
            report.check(line);
        }
    }
    for (name, b) in &model.bimodules {
        let (right, left, compat) = check_bimodule(space, b).map_err(CliError::core(format!("bimodule {name}")))?;
        for c in right.checks().chain(left.checks()).chain(std::iter::once(&compat)) {
            let mut line = CheckLine::from_identity("bimodules", c);
            line.name = format!("{name}: {}", c.name);
            report.check(line);
        }
    }
    Ok(())
}

fn spec<R: Scalar>(model: &Model<R>, opts: &Options) -> Result<DifferentialSpec<R>, CliError> {
    let diff = opts.diff_choice().map_err(CliError::Input)?;
    if let Some(name) = opts.named_complex().map_err(CliError::Input)? {
        let twist = opts
            .twist_value()
            .map_err(CliError::Input)?
            .map(|t| R::from_rational(&t).ok_or_else(|| CliError::Input(format!("twist {t} is not in {}", R::ring_name()))))
            .transpose()?;
        let params = NamedParams {
            eps: opts.left_char.clone(),
            zeta: opts.right_char.clone(),
            twist,
            dirac: opts.dirac,
            degree_cap: opts.degree_cap.unwrap_or(DEFAULT_DEGREE_CAP),
        };
        return Ok(DifferentialSpec::Named { name, params });
    }
    if let Some(name) = &opts.bimodule {
        let module = model.bimodules.get(name).ok_or_else(|| CliError::Input(format!("unknown bimodule `{name}`")))?;
        return Ok(DifferentialSpec::Bimodule { module: module.clone() });
    }
    if opts.right_module.is_some() || opts.left_module.is_some() {
        let side = match diff {
            DiffChoice::Left => Side::Left,
            DiffChoice::Right => Side::Right,
            _ => return Err(CliError::Input("module coefficients take --diff left or --diff right".into())),
        };
        let right = opts.right_module.as_deref().map(|n| model.module(n, Side::Right).cloned()).transpose()?;
        let left = opts.left_module.as_deref().map(|n| model.module(n, Side::Left).cloned()).transpose()?;
        return Ok(DifferentialSpec::Coefficients { right, left, side });
    }
    let eps = || model.character_or_default(&opts.left_char);
    let zeta = || model.character_or_default(&opts.right_char);
    Ok(match diff {
        DiffChoice::Left => DifferentialSpec::Left { eps: eps()? },
        DiffChoice::Right => DifferentialSpec::Right { zeta: zeta()? },
        DiffChoice::Combined => DifferentialSpec::Combined { eps: eps()?, zeta: zeta()? },
        DiffChoice::Hyper(k) => DifferentialSpec::Hyper { eps: eps()?, k, side: Side::Left },
    })
}

fn complex<R: Scalar>(model: &Model<R>, opts: &Options) -> Result<ChainComplex<R>, CliError> {
    let spec = spec(model, opts)?;
    let n_max = opts.max_degree();
    let cap = opts.degree_cap.unwrap_or(DEFAULT_DEGREE_CAP);
    let c = assemble_with_cap(&model.space, &spec, n_max, cap).map_err(CliError::core(spec.describe()))?;
    if !opts.normalized {
        return Ok(c);
    }
    if !matches!(spec, DifferentialSpec::Left { .. } | DifferentialSpec::Right { .. } | DifferentialSpec::Combined { .. }) {
        return Err(CliError::Input("--normalized applies to the left, right and combined differentials".into()));
    }
    let d = model.space.dim();
    let split = subquotient(&c, |n, i| is_degenerate(i, d, n)).map_err(CliError::core("quotient by degenerate words"))?;
    Ok(split.quotient.with_provenance(format!("{} modulo degenerate words", c.provenance())))
}

/// One file per stored map, named by its source degree: a `rows cols nnz` header, then
/// `row col value` lines in row-major order.
pub fn dump_matrices<R: Scalar>(c: &ChainComplex<R>, dir: &Path) -> Result<Vec<String>, CliError> {
    fs::create_dir_all(dir).map_err(|e| CliError::Input(format!("cannot create {}: {e}", dir.display())))?;
    let mut written = Vec::new();
    for (n, m) in c.maps() {
        let mut text = format!("{} {} {}\n", m.rows(), m.cols(), m.nnz());
        for (r, col, v) in m.entries_row_major() {
            text.push_str(&format!("{r} {col} {}\n", braidhom::exactlin::scalar::format_rational(&v.to_rational())));
        }
        let name = format!("degree_{n}.txt");
        fs::write(dir.join(&name), text).map_err(|e| CliError::Input(format!("cannot write {name}: {e}")))?;
        written.push(name);
    }
    Ok(written)
}

fn verify<R: Scalar>(model: &Model<R>, opts: &Options, report: &mut Report, homology: HomologyFn<'_, R>) -> Result<(), CliError> {
    let suites: Vec<&str> = if opts.suite.is_empty() { vec!["simplicial", "hyper", "hopf"] } else { opts.suite.iter().map(String::as_str).collect() };
    for suite in suites {
        match suite {
            "simplicial" => verify_simplicial(model, opts, report)?,
            "hyper" => verify_hyper(model, opts, report)?,
            "hopf" => verify_hopf(model, opts, report)?,
            "homotopy" => verify_homotopy(model, opts, report, homology)?,
            "duality" => verify_duality(model, opts, report)?,
            other => return Err(CliError::Input(format!("unknown suite `{other}`"))),
        }
    }
    Ok(())
}

fn verified<'a, R: Scalar>(model: &'a Model<R>, name: &str) -> Result<&'a [R], CliError> {
    model.space.verified_character(name).map_err(CliError::core(format!("character {name}")))
}

fn verify_simplicial<R: Scalar>(model: &Model<R>, opts: &Options, report: &mut Report) -> Result<(), CliError> {
    let left = verified(model, &model.character_or_default(&opts.left_char)?)?.to_vec();
    let right = verified(model, &model.character_or_default(&opts.right_char)?)?.to_vec();
    let degeneracies = model.space.comultiplication().is_some();
    let spec = SimplicialSpec { left: Some(left), right: Some(right), degeneracies };
    let r = check_simplicial(&model.space, &spec, opts.max_degree()).map_err(CliError::core("simplicial identities"))?;
    if !r.degeneracies.is_empty() {
        report.check(CheckLine::summarize("simplicial", "s_i s_j = s_{j+1} s_i", &r.degeneracies).informational());
    }
    for side in [r.left.as_ref(), r.right.as_ref()].into_iter().flatten() {
        for id in [Identity::Faces, Identity::FaceBeforeDegeneracy, Identity::FaceAfterDegeneracy, Identity::Weak, Identity::Unit] {
            let checks: Vec<IdentityCheck<R>> = side.checks.iter().filter(|(i, _)| *i == id).map(|(_, c)| c.clone()).collect();
            if checks.is_empty() {
                continue;
            }
            let line = CheckLine::summarize("simplicial", format!("{}: {}", side.side, identity_label(id)), &checks);
            report.check(if id == Identity::Faces { line } else { line.informational() });
        }
        report.property(format!("{} level", side.side), side.level);
    }
    if !r.mixed.is_empty() {
        report.check(CheckLine::summarize("simplicial", "mixed face relations", &r.mixed).informational());
    }
    if let Some(level) = r.bi_level {
        report.property("two-sided level", level.name(true));
    }
    Ok(())
}

fn identity_label(id: Identity) -> &'static str {
    match id {
        Identity::Faces => "d_i d_j = d_{j-1} d_i for i < j",
        Identity::FaceBeforeDegeneracy => "d_i s_j = s_{j-1} d_i for i < j",
        Identity::FaceAfterDegeneracy => "d_i s_j = s_j d_{i-1} for i > j+1",
        Identity::Weak => "d_j s_j = d_{j+1} s_j",
        Identity::Unit => "d_j s_j = Id",
    }
}

fn verify_hyper<R: Scalar>(model: &Model<R>, opts: &Options, report: &mut Report) -> Result<(), CliError> {
    let name = model.character_or_default(&opts.left_char)?;
    let eps = verified(model, &name)?.to_vec();
    let n_max = opts.max_degree();
    let space = &model.space;
    for side in [Side::Left, Side::Right] {
        for total in 0..=n_max.min(4) {
            for k in 0..=total {
                let m = total - k;
                let mut checks = Vec::new();
                for n in total..=n_max {
                    let h = |j, deg| hyper_boundary_with(space, &eps, j, deg, side).map_err(CliError::core("hyper-boundary"));
                    let lhs = h(m, n - k)?.compose(&h(k, n)?).map_err(|e| CliError::Input(e.to_string()))?;
                    let rhs = h(total, n)?.scale(&R::from_i64(binomial_m1(m, k) as i64));
                    checks.push(IdentityCheck::compare(format!("n = {n}"), &lhs, &rhs));
                }
                let label = format!("{side}: d^({m}) d^({k}) = {} d^({total})", binomial_m1(m, k));
                report.check(CheckLine::summarize("hyper-boundaries", label, &checks));
            }
        }
    }
    report.property("hyper-boundary character", name);
    Ok(())
}

fn verify_hopf<R: Scalar>(model: &Model<R>, opts: &Options, report: &mut Report) -> Result<(), CliError> {
    let space = &model.space;
    let max = opts.max_degree();
    let sigma = space.sigma();
    let symmetric = sigma.compose(sigma).map(|s| s.is_identity()).unwrap_or(false);
    for sign in [Sign::Plus, Sign::Minus] {
        let label = if sign == Sign::Plus { "σ" } else { "−σ" };
        let ctx = || CliError::core("quantum shuffle identities");
        let mut families = vec![
            ("shuffle associativity", shuffle_associativity(space, max, sign).map_err(ctx())?),
            ("coshuffle coassociativity", coshuffle_coassociativity(space, max, sign).map_err(ctx())?),
            ("bialgebra compatibility", bialgebra_compatibility(space, max, sign).map_err(ctx())?),
            ("antipode", antipode_axiom(space, max, sign).map_err(ctx())?),
        ];
        if symmetric {
            families.push(("shuffle commutativity", shuffle_commutativity(space, max, sign).map_err(ctx())?));
        }
        for (name, checks) in families {
            report.check(CheckLine::summarize("hopf", format!("{name} ({label})"), &checks));
        }
    }
    report.property("symmetric braiding", if symmetric { "yes" } else { "no" });
    Ok(())
}

fn basis_vector<R: Scalar>(i: usize, d: usize, scale: R) -> Vec<R> {
    let mut v = vec![R::zero(); d];
    v[i] = scale;
    v
}

/// `e_i / χ(e_i)` for the first basis vector on which `χ` is invertible.
fn normalized_vector<R: Scalar>(chi: &[R]) -> Option<Vec<R>> {
    chi.iter().position(|x| x.is_unit()).map(|i| basis_vector(i, chi.len(), chi[i].inverse().unwrap()))
}

fn verify_homotopy<R: Scalar>(model: &Model<R>, opts: &Options, report: &mut Report, homology: HomologyFn<'_, R>) -> Result<(), CliError> {
    let space = &model.space;
    let n_max = opts.max_degree();
    let spec = spec(model, opts)?;
    let c = assemble_with_cap(space, &spec, n_max, opts.degree_cap.unwrap_or(DEFAULT_DEGREE_CAP))
        .map_err(CliError::core(spec.describe()))?;
    let concat = |w: &[R]| -> Result<Vec<SparseLinearMap<R>>, CliError> {
        (0..n_max).map(|n| concat_homotopy(space, w, n).map_err(CliError::core("homotopy"))).collect()
    };
    let no_candidate = || CliError::Input(format!("no contracting homotopy is known for the {}", spec.describe()));
    let (description, h) = match &spec {
        DifferentialSpec::Right { zeta } => {
            let w = normalized_vector(verified(model, zeta)?).ok_or_else(no_candidate)?;
            ("(−1)ⁿ·⊗w with ζ(w) = 1".to_string(), concat(&w)?)
        }
        DifferentialSpec::Left { eps } => {
            let eps = verified(model, eps)?;
            if let Some(u) = model.algebra.as_ref().and_then(|a| a.unit()) {
                ("(−1)ⁿ·⊗𝟏".to_string(), concat(&basis_vector(u, space.dim(), R::one()))?)
            } else if model.shelf.as_ref().is_some_and(|t| braidhom::structures::check_shelf(t).rack) {
                let b = basis_vector(0, space.dim(), R::one());
                let h = (0..n_max)
                    .map(|n| {
                        let pi = arrow_op(space, eps, &b, n + 1).map_err(CliError::core("arrow operation"))?;
                        let inv = invert(&pi).ok_or_else(|| CliError::Input("the arrow operation is not invertible".into()))?;
                        let step = concat_homotopy(space, &b, n).map_err(CliError::core("homotopy"))?;
                        inv.compose(&step).map_err(|e| CliError::Input(e.to_string()))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                ("π_b⁻¹ ∘ (−1)ⁿ·⊗b".to_string(), h)
            } else {
                let w = normalized_vector(eps).ok_or_else(no_candidate)?;
                ("(−1)ⁿ·⊗w with ε(w) = 1".to_string(), concat(&w)?)
            }
        }
        _ => return Err(no_candidate()),
    };
    let cert = certify_acyclic(&c, &h).map_err(CliError::core("certificate"))?;
    for (_, check) in &cert.checks {
        report.check(CheckLine::from_identity("homotopy", check));
    }
    report.property("homotopy", description);
    report.property("degree 0 covered", if cert.degree_zero().is_some() { "yes" } else { "no" });
    let betti = homology(&c)?;
    let zero = betti.exact_degrees().all(|d| d.betti == 0);
    let mut line = CheckLine::new("homotopy", "homology vanishes on the exact range", zero).informational();
    line.detail = Some(format!("Betti numbers {:?}", betti.exact_degrees().map(|d| d.betti).collect::<Vec<_>>()));
    report.check(line);
    Ok(())
}

fn verify_duality<R: Scalar>(model: &Model<R>, opts: &Options, report: &mut Report) -> Result<(), CliError> {
    let a = model.algebra.as_ref().ok_or_else(|| CliError::Input("duality needs an associative algebra or a coalgebra".into()))?;
    let ctx = || CliError::core("duality");
    let n_max = opts.max_degree();
    let params = NamedParams::default();
    let (coalgebra_space, algebra_space) = match a.kind() {
        AlgebraKind::Coalgebra => {
            let counit = a.unit_covector().map_err(ctx())?;
            let dual = dual_algebra(a).map_err(ctx())?.with_character(AUGMENTATION, counit).map_err(ctx())?;
            (model.space.clone(), assoc_braiding(&dual).map_err(ctx())?)
        }
        AlgebraKind::Associative => {
            let unit = a.unit_covector().map_err(ctx())?;
            if a.characters().get(AUGMENTATION) != Some(&unit) {
                return Err(CliError::Input(format!(
                    "duality compares bar and cobar in the given basis, so `{AUGMENTATION}` must be the covector dual to the unit"
                )));
            }
            let dual = dual_coalgebra(a).map_err(ctx())?.with_character(COUNIT, unit).map_err(ctx())?;
            (coassoc_braiding(&dual).map_err(ctx())?, model.space.clone())
        }
        AlgebraKind::Leibniz => return Err(CliError::Input("duality needs an associative algebra or a coalgebra".into())),
    };
    let ready = |mut s: braidhom::PreBraidedSpace<R>| {
        braidhom::braiding::check_ybe(&mut s);
        for name in s.character_names() {
            let _ = braidhom::braiding::check_braided_character(&mut s, &name);
        }
        s
    };
    let (co, al) = (ready(coalgebra_space), ready(algebra_space));
    let cobar = named_complex(&co, NamedComplex::Cobar, n_max, &params).map_err(CliError::core("cobar complex"))?;
    let bar = named_complex(&al, NamedComplex::Bar, n_max, &params).map_err(CliError::core("bar complex"))?;
    for n in 1..=n_max {
        if let (Some(delta), Some(d)) = (cobar.map_from(n - 1), bar.map_from(n)) {
            report.check(CheckLine::from_identity("duality", &IdentityCheck::compare(format!("δ^{} = (∂_{n})ᵀ", n - 1), delta, &d.transpose())));
        }
    }
    Ok(())
}
