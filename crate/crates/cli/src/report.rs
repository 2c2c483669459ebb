//! Reports shared by the human and JSON renderers. Every number printed for humans is a
//! field of the serialized report, and nothing time-dependent is recorded.

use std::fmt::{self, Write as _};

use braidhom::report::IdentityCheck;
use braidhom::{ChainComplex, HomologyReport, Scalar};
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct MismatchOut {
    pub row: usize,
    pub col: usize,
    pub left: String,
    pub right: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckLine {
    pub group: String,
    pub name: String,
    pub passed: bool,
    /// Informational checks do not affect the exit status.
    pub required: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<MismatchOut>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witness: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckLine {
    pub fn new(group: &str, name: impl Into<String>, passed: bool) -> Self {
        CheckLine { group: group.into(), name: name.into(), passed, required: true, mismatch: None, witness: Vec::new(), detail: None }
    }

    pub fn from_identity<R: Scalar>(group: &str, check: &IdentityCheck<R>) -> Self {
        let mut line = CheckLine::new(group, check.name.clone(), check.passed);
        line.mismatch = check.mismatch.as_ref().filter(|m| m.row != usize::MAX).map(|m| MismatchOut {
            row: m.row,
            col: m.col,
            left: m.left.to_string(),
            right: m.right.to_string(),
        });
        if check.mismatch.as_ref().is_some_and(|m| m.row == usize::MAX) {
            line.detail = Some("shape mismatch".into());
        }
        line
    }

    /// One line for a family of checks: passes iff all do, reporting the first failure.
    pub fn summarize<R: Scalar>(group: &str, name: impl Into<String>, checks: &[IdentityCheck<R>]) -> Self {
        let name = name.into();
        match checks.iter().find(|c| !c.passed) {
            None => {
                let mut line = CheckLine::new(group, name, true);
                line.detail = Some(format!("{} identities", checks.len()));
                line
            }
            Some(bad) => {
                let mut line = CheckLine::from_identity(group, bad);
                line.detail = Some(format!("first failure: {}", bad.name));
                line.name = name;
                line
            }
        }
    }

    pub fn informational(mut self) -> Self {
        self.required = false;
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Property {
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct MapOut {
    pub from: usize,
    pub to: usize,
    pub rows: usize,
    pub cols: usize,
    pub nnz: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComplexOut {
    pub description: String,
    pub cochain: bool,
    pub step: isize,
    pub ranks: Vec<usize>,
    pub maps: Vec<MapOut>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub dumped: Vec<String>,
}

impl ComplexOut {
    pub fn of<R: Scalar>(c: &ChainComplex<R>) -> Self {
        let maps = c
            .maps()
            .map(|(n, m)| MapOut { from: n, to: (n as isize + c.step()) as usize, rows: m.rows(), cols: m.cols(), nnz: m.nnz() })
            .collect();
        ComplexOut {
            description: c.provenance().to_string(),
            cochain: c.is_cochain(),
            step: c.step(),
            ranks: c.ranks().to_vec(),
            maps,
            dumped: Vec::new(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeOut {
    pub degree: usize,
    pub chain_rank: usize,
    pub betti: usize,
    pub torsion: Vec<String>,
    pub rank_in: usize,
    pub rank_out: usize,
    pub truncated: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct HomologyOut {
    pub ring: String,
    pub provenance: String,
    pub cochain: bool,
    pub degrees: Vec<DegreeOut>,
}

impl From<&HomologyReport> for HomologyOut {
    fn from(h: &HomologyReport) -> Self {
        HomologyOut {
            ring: h.ring.clone(),
            provenance: h.provenance.clone(),
            cochain: h.cochain,
            degrees: h
                .degrees
                .iter()
                .map(|d| DegreeOut {
                    degree: d.degree,
                    chain_rank: d.chain_rank,
                    betti: d.betti,
                    torsion: d.torsion.iter().map(|t| t.to_string()).collect(),
                    rank_in: d.rank_in,
                    rank_out: d.rank_out,
                    truncated: d.truncated,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub ring: String,
    pub structure: String,
    pub dim: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<CheckLine>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub properties: Vec<Property>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complex: Option<ComplexOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub homology: Option<HomologyOut>,
}

impl Report {
    pub fn new(command: &str, ring: String, structure: &str, dim: usize) -> Self {
        Report {
            command: command.into(),
            ring,
            structure: structure.into(),
            dim,
            passed: true,
            checks: Vec::new(),
            properties: Vec::new(),
            complex: None,
            homology: None,
        }
    }

    pub fn check(&mut self, line: CheckLine) {
        if line.required && !line.passed {
            self.passed = false;
        }
        self.checks.push(line);
    }

    pub fn property(&mut self, name: impl Into<String>, value: impl fmt::Display) {
        self.properties.push(Property { name: name.into(), value: value.to_string() });
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {} structure of dimension {} over {}", self.command, self.structure, self.dim, self.ring)?;
        let mut group = "";
        for c in &self.checks {
            if c.group != group {
                group = &c.group;
                writeln!(f, "{group}:")?;
            }
            let status = match (c.passed, c.required) {
                (true, _) => "pass",
                (false, true) => "FAIL",
                (false, false) => "no",
            };
            let mut line = format!("  [{status}] {}", c.name);
            if let Some(m) = &c.mismatch {
                let _ = write!(line, " at ({}, {}): {} vs {}", m.row, m.col, m.left, m.right);
            }
            if !c.witness.is_empty() {
                let w: Vec<String> = c.witness.iter().map(|x| x.to_string()).collect();
                let _ = write!(line, " witness ({})", w.join(", "));
            }
            if let Some(d) = &c.detail {
                let _ = write!(line, " [{d}]");
            }
            writeln!(f, "{line}")?;
        }
        for p in &self.properties {
            writeln!(f, "{}: {}", p.name, p.value)?;
        }
        if let Some(c) = &self.complex {
            writeln!(f, "complex: {}", c.description)?;
            let ranks: Vec<String> = c.ranks.iter().map(|r| r.to_string()).collect();
            writeln!(f, "  ranks {} (step {}{})", ranks.join(" "), c.step, if c.cochain { ", cochain" } else { "" })?;
            for m in &c.maps {
                writeln!(f, "  degree {} -> {}: {}x{}, {} nonzero", m.from, m.to, m.rows, m.cols, m.nnz)?;
            }
            for file in &c.dumped {
                writeln!(f, "  wrote {file}")?;
            }
        }
        if let Some(h) = &self.homology {
            writeln!(f, "homology of {} over {}", h.provenance, h.ring)?;
            let letter = if h.cochain { "H^" } else { "H_" };
            for d in &h.degrees {
                let mut parts = Vec::new();
                match d.betti {
                    0 => {}
                    1 => parts.push(h.ring.clone()),
                    b => parts.push(format!("{}^{b}", h.ring)),
                }
                parts.extend(d.torsion.iter().map(|t| format!("Z/{t}")));
                if parts.is_empty() {
                    parts.push("0".into());
                }
                let note = if d.truncated { "  (cycles only)" } else { "" };
                writeln!(f, "  {letter}{} = {}{note}", d.degree, parts.join(" + "))?;
            }
        }
        writeln!(f, "result: {}", if self.passed { "pass" } else { "FAIL" })
    }
}
