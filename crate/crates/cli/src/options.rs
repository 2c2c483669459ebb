//! Options shared by the command line and the `computations` list of a scenario.

use std::path::PathBuf;
use std::str::FromStr;

use braidhom::complexes::NamedComplex;
use braidhom::Rational;
use clap::Args;
use serde::{Deserialize, Serialize};

use crate::scenario::{Located, Rat, Ring};

pub const DEFAULT_MAX_DEGREE: usize = 4;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize, Args)]
#[serde(default, rename_all = "kebab-case")]
pub struct Options {
    /// Coefficient ring: z, q or fp:<p>.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ring: Option<Ring>,

    /// Highest tensor degree to assemble.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<usize>,

    /// left, right, combined or hyper:<k>.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diff: Option<String>,

    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub left_char: Option<String>,

    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub right_char: Option<String>,

    /// A named classical complex (rack, quandle, bar, hochschild, ...).
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub named: Option<String>,

    /// Quotient by the span of degenerate words.
    #[arg(long)]
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub normalized: bool,

    /// Parameter of the twisted rack complex, as p/q.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub twist: Option<String>,

    /// Element a of the partial-derivative complex.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dirac: Option<usize>,

    /// Right module coefficients, by scenario name.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub right_module: Option<String>,

    /// Left module coefficients, by scenario name.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub left_module: Option<String>,

    /// Bimodule coefficients, by scenario name.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bimodule: Option<String>,

    /// Property suites for `verify`: simplicial, hyper, hopf, homotopy, duality.
    #[arg(long, value_delimiter = ',')]
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub suite: Vec<String>,

    /// Largest chain group to build.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree_cap: Option<usize>,

    /// Write one matrix file per degree into this directory.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dump_matrices: Option<PathBuf>,

    /// Skip the Yang-Baxter and character checks.
    #[arg(long)]
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub allow_unverified: bool,

    /// Machine-readable output.
    #[arg(long)]
    #[serde(skip)]
    pub json: bool,
}

/// The `--diff` choices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiffChoice {
    Left,
    Right,
    Combined,
    Hyper(usize),
}

impl FromStr for DiffChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "left" => Ok(DiffChoice::Left),
            "right" => Ok(DiffChoice::Right),
            "combined" => Ok(DiffChoice::Combined),
            other => other
                .strip_prefix("hyper:")
                .and_then(|k| k.parse().ok())
                .filter(|k| *k >= 1)
                .map(DiffChoice::Hyper)
                .ok_or_else(|| format!("unknown differential `{s}` (expected left, right, combined or hyper:<k> with k ≥ 1)")),
        }
    }
}

pub const SUITES: [&str; 5] = ["simplicial", "hyper", "hopf", "homotopy", "duality"];

impl Options {
    pub fn max_degree(&self) -> usize {
        self.max_degree.unwrap_or(DEFAULT_MAX_DEGREE)
    }

    pub fn diff_choice(&self) -> Result<DiffChoice, String> {
        self.diff.as_deref().unwrap_or("left").parse()
    }

    pub fn named_complex(&self) -> Result<Option<NamedComplex>, String> {
        self.named.as_deref().map(|n| n.parse::<NamedComplex>().map_err(|e| e.to_string())).transpose()
    }

    pub fn twist_value(&self) -> Result<Option<Rational>, String> {
        self.twist
            .as_deref()
            .map(|t| serde_json::from_value::<Rat>(serde_json::Value::String(t.into())).map(|r| r.0).map_err(|e| e.to_string()))
            .transpose()
    }

    /// Scenario options with command-line values taking precedence.
    pub fn overridden_by(&self, cli: &Options) -> Options {
        Options {
            ring: cli.ring.or(self.ring),
            max_degree: cli.max_degree.or(self.max_degree),
            diff: cli.diff.clone().or_else(|| self.diff.clone()),
            left_char: cli.left_char.clone().or_else(|| self.left_char.clone()),
            right_char: cli.right_char.clone().or_else(|| self.right_char.clone()),
            named: cli.named.clone().or_else(|| self.named.clone()),
            normalized: cli.normalized || self.normalized,
            twist: cli.twist.clone().or_else(|| self.twist.clone()),
            dirac: cli.dirac.or(self.dirac),
            right_module: cli.right_module.clone().or_else(|| self.right_module.clone()),
            left_module: cli.left_module.clone().or_else(|| self.left_module.clone()),
            bimodule: cli.bimodule.clone().or_else(|| self.bimodule.clone()),
            suite: if cli.suite.is_empty() { self.suite.clone() } else { cli.suite.clone() },
            degree_cap: cli.degree_cap.or(self.degree_cap),
            dump_matrices: cli.dump_matrices.clone().or_else(|| self.dump_matrices.clone()),
            allow_unverified: cli.allow_unverified || self.allow_unverified,
            json: cli.json,
        }
    }

    pub fn validate(&self) -> Vec<Located> {
        let mut out = Vec::new();
        let mut err = |path: &str, message: String| out.push(Located { path: path.into(), message });
        if let Err(e) = self.diff_choice() {
            err("diff", e);
        }
        if let Err(e) = self.named_complex() {
            err("named", e);
        }
        if let Err(e) = self.twist_value() {
            err("twist", e);
        }
        if self.max_degree == Some(0) {
            err("max-degree", "the maximal degree must be at least 1".into());
        }
        for s in &self.suite {
            if !SUITES.contains(&s.as_str()) {
                err("suite", format!("unknown suite `{s}` (expected one of {})", SUITES.join(", ")));
            }
        }
        let coefficient_kinds = [self.bimodule.is_some(), self.right_module.is_some() || self.left_module.is_some(), self.named.is_some()];
        if coefficient_kinds.iter().filter(|x| **x).count() > 1 {
            err("named", "choose one of a named complex, module coefficients and a bimodule".into());
        }
        out
    }
}
