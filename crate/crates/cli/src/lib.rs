//! Scenario-driven front end: parse a JSON scenario, build the structure over the chosen
//! ring and run checks, complex assembly, homology and property suites.

pub mod commands;
pub mod error;
pub mod model;
pub mod options;
pub mod report;
pub mod scenario;

use std::path::Path;

use braidhom::homology::betti_mod_p;
use braidhom::{betti, integral_homology, Integer, Rational};

use crate::error::CliError;
use crate::options::Options;
use crate::report::Report;
use crate::scenario::{Command, Ring, ScenarioFile};

/// Runs one command; the ring comes from the options, then the scenario, then defaults to ℤ.
pub fn run(command: Command, scenario: &ScenarioFile, opts: &Options) -> Result<Report, CliError> {
    let problems = opts.validate();
    if !problems.is_empty() {
        return Err(CliError::Invalid(problems));
    }
    let ring = opts.ring.or(scenario.ring).unwrap_or(Ring::Z);
    match ring {
        Ring::Z => {
            let model = model::build::<Integer>(scenario, opts.allow_unverified)?;
            commands::execute(command, scenario, &model, opts, ring.to_string(), &|c| Ok(integral_homology(c)))
        }
        Ring::Q => {
            let model = model::build::<Rational>(scenario, opts.allow_unverified)?;
            commands::execute(command, scenario, &model, opts, ring.to_string(), &|c| Ok(betti(c)))
        }
        Ring::Fp(p) => {
            let model = model::build::<Rational>(scenario, opts.allow_unverified)?;
            commands::execute(command, scenario, &model, opts, ring.to_string(), &|c| {
                betti_mod_p(c, p).map_err(CliError::core(format!("ranks modulo {p}")))
            })
        }
    }
}

/// Runs every computation listed in the scenario, command-line options taking precedence.
pub fn run_all(scenario: &ScenarioFile, cli: &Options) -> Result<Vec<Report>, CliError> {
    if scenario.computations.is_empty() {
        return Err(CliError::Input("the scenario lists no computations".into()));
    }
    scenario.computations.iter().map(|c| run(c.command, scenario, &c.options.overridden_by(cli))).collect()
}

pub fn load(path: &Path) -> Result<ScenarioFile, CliError> {
    scenario::parse(path)
}
