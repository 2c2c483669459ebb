//! Scenario files: the JSON description of a structure, its characters, modules and the
//! computations to run on it.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use braidhom::exactlin::scalar::{format_rational, is_prime, parse_rational};
use braidhom::Rational;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::CliError;
use crate::options::Options;

/// A rational number written as `"p/q"` (or `"p"`), always in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rat(pub Rational);

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Text(String),
            Int(i64),
        }
        match Raw::deserialize(d)? {
            Raw::Int(v) => Ok(Rat(Rational::from_integer(v.into()))),
            Raw::Text(t) => parse_reduced(&t).map(Rat).map_err(de::Error::custom),
        }
    }
}

fn parse_reduced(text: &str) -> Result<Rational, String> {
    let value = parse_rational(text).ok_or_else(|| format!("`{text}` is not a rational number of the form p/q"))?;
    if let Some((p, q)) = text.trim().split_once('/') {
        let (p, q): (num_bigint::BigInt, num_bigint::BigInt) = (p.trim().parse().unwrap(), q.trim().parse().unwrap());
        if !p.gcd(&q).is_one() || q.is_negative() {
            return Err(format!("`{text}` is not in lowest terms (write {})", format_rational(&value)));
        }
    }
    Ok(value)
}

/// Coefficient ring of a run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    Z,
    Q,
    /// Computed over ℚ, with ranks taken modulo `p`.
    Fp(u64),
}

impl FromStr for Ring {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim().to_ascii_lowercase().as_str() {
            "z" => Ok(Ring::Z),
            "q" => Ok(Ring::Q),
            other => {
                let p = other
                    .strip_prefix("fp:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| format!("unknown ring `{s}` (expected z, q or fp:<p>)"))?;
                if is_prime(p) {
                    Ok(Ring::Fp(p))
                } else {
                    Err(format!("{p} is not prime"))
                }
            }
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Z => f.write_str("z"),
            Ring::Q => f.write_str("q"),
            Ring::Fp(p) => write!(f, "fp:{p}"),
        }
    }
}

impl Serialize for Ring {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Ring {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(de::Error::custom)
    }
}

/// `[a, b, c, "x"]`: `e_a e_b ∋ x·e_c`, or `Δ(e_a) ∋ x·e_b⊗e_c`.
pub type Constant = (usize, usize, usize, Rat);

/// `[row, col, "x"]`.
pub type Entry = (usize, usize, Rat);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraBlock {
    pub dim: usize,
    #[serde(default)]
    pub constants: Vec<Constant>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<usize>,
    /// Adjoin a formal unit (or, for coalgebras, a group-like counit) as the last basis vector.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub adjoin_unit: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Structure {
    Shelf {
        table: Vec<Vec<usize>>,
    },
    Associative(AlgebraBlock),
    Leibniz(AlgebraBlock),
    Coalgebra(AlgebraBlock),
    /// Explicit braiding matrix, given in the top-level `braiding` field.
    Braiding {
        dim: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        grading: Option<Vec<i64>>,
    },
    Flip {
        dim: usize,
    },
    Koszul {
        grading: Vec<i64>,
    },
    /// `e_i⊗e_j ↦ q_{ij} e_j⊗e_i`, parameters row-major.
    QFlip {
        dim: usize,
        q: Vec<Rat>,
    },
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Shelf { .. } => "shelf",
            Structure::Associative(_) => "associative",
            Structure::Leibniz(_) => "leibniz",
            Structure::Coalgebra(_) => "coalgebra",
            Structure::Braiding { .. } => "braiding",
            Structure::Flip { .. } => "flip",
            Structure::Koszul { .. } => "koszul",
            Structure::QFlip { .. } => "q_flip",
        }
    }

    /// Dimension of the space the braiding acts on, after any adjoined unit.
    pub fn dim(&self) -> usize {
        match self {
            Structure::Shelf { table } => table.len(),
            Structure::Associative(a) | Structure::Leibniz(a) | Structure::Coalgebra(a) => a.dim + a.adjoin_unit as usize,
            Structure::Braiding { dim, .. } | Structure::Flip { dim } | Structure::QFlip { dim, .. } => *dim,
            Structure::Koszul { grading } => grading.len(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SideSpec {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    pub name: String,
    pub side: SideSpec,
    pub dim: usize,
    /// The action `M⊗V → M` (right) or `V⊗N → N` (left) as sparse entries.
    pub action: Vec<Entry>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub normalized: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimoduleSpec {
    pub name: String,
    pub right: String,
    pub left: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Command {
    Check,
    Complex,
    Homology,
    Verify,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Check => "check",
            Command::Complex => "complex",
            Command::Homology => "homology",
            Command::Verify => "verify",
        }
    }
}

/// A computation requested by the scenario, with the same options as the command line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Computation {
    pub command: Command,
    #[serde(flatten)]
    pub options: Options,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ring: Option<Ring>,
    pub structure: Structure,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub braiding: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub characters: BTreeMap<String, Vec<Rat>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comultiplication: Option<Vec<Constant>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub modules: Vec<ModuleSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub bimodules: Vec<BimoduleSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub computations: Vec<Computation>,
}

/// One semantic problem, located by its JSON path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Located {
    pub path: String,
    pub message: String,
}

impl fmt::Display for Located {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.path, self.message)
    }
}

pub fn parse(path: &Path) -> Result<ScenarioFile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    parse_str(&text)
}

pub fn parse_str(text: &str) -> Result<ScenarioFile, CliError> {
    let mut de = serde_json::Deserializer::from_str(text);
    let scenario: ScenarioFile = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let inner = e.inner();
        let path = e.path().to_string();
        match inner.classify() {
            serde_json::error::Category::Data if path != "." => {
                let located = if path == "structure" { locate_in_structure(text) } else { None };
                CliError::Invalid(vec![located.unwrap_or(Located { path, message: strip_position(&inner.to_string()) })])
            }
            _ => CliError::Syntax { line: inner.line(), column: inner.column(), message: strip_position(&inner.to_string()) },
        }
    })?;
    de.end().map_err(|e| CliError::Syntax { line: e.line(), column: e.column(), message: strip_position(&e.to_string()) })?;
    let problems = validate(&scenario);
    if problems.is_empty() {
        Ok(scenario)
    } else {
        Err(CliError::Invalid(problems))
    }
}

/// Externally tagged copy of [`Structure`]. Internally tagged enums are buffered before
/// deserialization, which hides the path of an error inside the block.
#[derive(Deserialize)]
#[serde(rename_all = "snake_case")]
#[allow(dead_code)]
enum StructureBody {
    Shelf { table: Vec<Vec<usize>> },
    Associative(AlgebraBlock),
    Leibniz(AlgebraBlock),
    Coalgebra(AlgebraBlock),
    Braiding { dim: usize, #[serde(default)] grading: Option<Vec<i64>> },
    Flip { dim: usize },
    Koszul { grading: Vec<i64> },
    QFlip { dim: usize, q: Vec<Rat> },
}

fn locate_in_structure(text: &str) -> Option<Located> {
    let mut value: serde_json::Value = serde_json::from_str(text).ok()?;
    let block = value.get_mut("structure")?.as_object_mut()?;
    let kind = block.remove("kind")?;
    let tagged = serde_json::json!({ kind.as_str()?: block });
    let e = serde_path_to_error::deserialize::<_, StructureBody>(tagged).err()?;
    let path = e.path().to_string();
    let rest = path.split_once('.').map(|(_, r)| format!("structure.{r}")).unwrap_or_else(|| "structure".into());
    Some(Located { path: rest, message: strip_position(&e.inner().to_string()) })
}

fn strip_position(message: &str) -> String {
    match message.rfind(" at line ") {
        Some(i) => message[..i].to_string(),
        None => message.to_string(),
    }
}

pub fn to_json(scenario: &ScenarioFile) -> String {
    serde_json::to_string_pretty(scenario).expect("scenarios serialize") + "\n"
}

/// Index, shape and consistency checks that the JSON schema cannot express.
pub fn validate(s: &ScenarioFile) -> Vec<Located> {
    let mut out = Vec::new();
    let mut err = |path: String, message: String| out.push(Located { path, message });
    let d = s.structure.dim();
    if d == 0 {
        err("structure".into(), "the space must have positive dimension".into());
    }
    match &s.structure {
        Structure::Shelf { table } => {
            let m = table.len();
            for (a, row) in table.iter().enumerate() {
                if row.len() != m {
                    err(format!("structure.table[{a}]"), format!("row has {} entries, expected {m}", row.len()));
                }
                for (b, &v) in row.iter().enumerate() {
                    if v >= m {
                        err(format!("structure.table[{a}][{b}]"), format!("entry {v} outside 0..{m}"));
                    }
                }
            }
        }
        Structure::Associative(a) | Structure::Leibniz(a) | Structure::Coalgebra(a) => {
            for (i, (x, y, z, _)) in a.constants.iter().enumerate() {
                for (slot, v) in [x, y, z].into_iter().enumerate() {
                    if *v >= a.dim {
                        err(format!("structure.constants[{i}][{slot}]"), format!("index {v} outside 0..{}", a.dim));
                    }
                }
            }
            if let Some(u) = a.unit {
                if u >= a.dim {
                    err("structure.unit".into(), format!("index {u} outside 0..{}", a.dim));
                }
                if a.adjoin_unit {
                    err("structure.adjoin_unit".into(), "a unit is already given".into());
                }
            }
            if let Some(g) = &a.grading {
                if g.len() != a.dim {
                    err("structure.grading".into(), format!("{} degrees for dimension {}", g.len(), a.dim));
                }
            }
        }
        Structure::Braiding { grading, .. } => {
            if s.braiding.is_none() {
                err("braiding".into(), "kind `braiding` needs explicit braiding entries".into());
            }
            if let Some(g) = grading {
                if g.len() != d {
                    err("structure.grading".into(), format!("{} degrees for dimension {d}", g.len()));
                }
            }
        }
        Structure::QFlip { q, .. } => {
            if q.len() != d * d {
                err("structure.q".into(), format!("{} parameters, expected {}", q.len(), d * d));
            }
            for (i, x) in q.iter().enumerate() {
                if x.0 == Rational::from_integer(0.into()) {
                    err(format!("structure.q[{i}]"), "parameters must be nonzero".into());
                }
            }
        }
        Structure::Flip { .. } | Structure::Koszul { .. } => {}
    }
    if let Some(entries) = &s.braiding {
        if !matches!(s.structure, Structure::Braiding { .. }) {
            err("braiding".into(), format!("explicit entries are only read for kind `braiding`, not `{}`", s.structure.kind()));
        }
        check_entries(&mut err, "braiding", entries, d * d, d * d);
    }
    for (name, values) in &s.characters {
        if values.len() != d {
            err(format!("characters.{name}"), format!("{} values for dimension {d}", values.len()));
        }
    }
    if let Some(delta) = &s.comultiplication {
        for (i, (x, y, z, _)) in delta.iter().enumerate() {
            for (slot, v) in [x, y, z].into_iter().enumerate() {
                if *v >= d {
                    err(format!("comultiplication[{i}][{slot}]"), format!("index {v} outside 0..{d}"));
                }
            }
        }
    }
    let mut names = BTreeMap::new();
    for (i, m) in s.modules.iter().enumerate() {
        if names.insert(m.name.clone(), m.side).is_some() {
            err(format!("modules[{i}].name"), format!("duplicate module `{}`", m.name));
        }
        check_entries(&mut err, &format!("modules[{i}].action"), &m.action, m.dim, m.dim * d);
    }
    for (i, b) in s.bimodules.iter().enumerate() {
        for (field, name, side) in [("right", &b.right, SideSpec::Right), ("left", &b.left, SideSpec::Left)] {
            match names.get(name) {
                None => err(format!("bimodules[{i}].{field}"), format!("unknown module `{name}`")),
                Some(s) if *s != side => err(format!("bimodules[{i}].{field}"), format!("module `{name}` is not a {field} module")),
                _ => {}
            }
        }
    }
    for (i, c) in s.computations.iter().enumerate() {
        for problem in c.options.validate() {
            err(format!("computations[{i}].{}", problem.path), problem.message);
        }
    }
    out
}

fn check_entries(err: &mut impl FnMut(String, String), path: &str, entries: &[Entry], rows: usize, cols: usize) {
    for (i, (r, c, _)) in entries.iter().enumerate() {
        if *r >= rows {
            err(format!("{path}[{i}][0]"), format!("row {r} outside 0..{rows}"));
        }
        if *c >= cols {
            err(format!("{path}[{i}][1]"), format!("column {c} outside 0..{cols}"));
        }
    }
}
