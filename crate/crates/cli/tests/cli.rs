use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::{Command, Output};

use braidhom_cli::error::CliError;
use braidhom_cli::options::Options;
use braidhom_cli::scenario::{self, Command as Cmd, Structure};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn braidhom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidhom")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn path(name: &str) -> String {
    fixture(name).to_string_lossy().into_owned()
}

fn digit_runs(s: &str) -> BTreeSet<String> {
    s.split(|c: char| !c.is_ascii_digit()).filter(|t| !t.is_empty()).map(str::to_string).collect()
}

#[test]
fn r3_fixture_parses() {
    let s = scenario::parse(&fixture("r3.json")).unwrap();
    assert_eq!(s.structure.dim(), 3);
    assert_eq!(s.computations.len(), 3);
}

#[test]
fn out_of_range_cell_is_located() {
    match scenario::parse(&fixture("bad_cell.json")) {
        Err(CliError::Invalid(problems)) => {
            assert_eq!(problems.len(), 1);
            assert_eq!(problems[0].path, "structure.table[1][2]");
        }
        other => panic!("expected a located error, got {other:?}"),
    }
    let o = braidhom(&["check", &path("bad_cell.json")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("structure.table[1][2]"));
}

#[test]
fn sl2_fixture_is_a_three_dimensional_leibniz_algebra() {
    let s = scenario::parse(&fixture("sl2.json")).unwrap();
    match &s.structure {
        Structure::Leibniz(block) => {
            assert_eq!(block.dim, 3);
            assert!(block.adjoin_unit);
        }
        other => panic!("parsed as {}", other.kind()),
    }
    let o = braidhom(&["run", &path("sl2.json")]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("[pass] Leibniz identity"));
}

#[test]
fn scenarios_round_trip() {
    for name in ["r3.json", "sl2.json", "kz2.json", "truncated3.json", "non_sd.json", "r3_modules.json"] {
        let s = scenario::parse(&fixture(name)).unwrap();
        let text = scenario::to_json(&s);
        assert_eq!(scenario::parse_str(&text).unwrap(), s, "{name}");
        assert_eq!(scenario::to_json(&scenario::parse_str(&text).unwrap()), text);
    }
}

#[test]
fn rationals_must_be_reduced() {
    let text = r#"{ "structure": { "kind": "q_flip", "dim": 1, "q": ["2/4"] } }"#;
    match scenario::parse_str(text) {
        Err(CliError::Invalid(p)) => {
            assert_eq!(p[0].path, "structure.q[0]");
            assert!(p[0].message.contains("1/2"));
        }
        other => panic!("{other:?}"),
    }
    assert!(scenario::parse_str(r#"{ "structure": { "kind": "q_flip", "dim": 1, "q": ["-3/2"] } }"#).is_ok());
}

#[test]
fn syntax_errors_carry_line_and_column() {
    match scenario::parse(&fixture("syntax.json")) {
        Err(CliError::Syntax { line, column, .. }) => assert_eq!((line, column), (3, 22)),
        other => panic!("{other:?}"),
    }
    let o = braidhom(&["check", &path("syntax.json")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3, column 22"));
}

#[test]
fn non_self_distributive_table_names_the_triple() {
    let s = scenario::parse(&fixture("non_sd.json")).unwrap();
    let Structure::Shelf { table } = &s.structure else { panic!() };
    let op = |a: usize, b: usize| table[a][b];
    assert_ne!(op(op(0, 0), 1), op(op(0, 1), op(0, 1)));

    let o = braidhom(&["check", &path("non_sd.json")]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("[FAIL] self-distributivity witness (0, 0, 1)"), "{out}");
    assert!(out.ends_with("result: FAIL\n"));
}

#[test]
fn integral_rack_homology_of_r3() {
    let o = braidhom(&["homology", &path("r3.json"), "--named", "rack", "--max-degree", "4", "--ring", "z", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let degrees = v["homology"]["degrees"].as_array().unwrap();
    assert_eq!(degrees.len(), 5);
    for d in &degrees[..4] {
        assert_eq!(d["betti"], 1);
        assert_eq!(d["truncated"], false);
    }
    assert_eq!(degrees[3]["torsion"], serde_json::json!(["3"]));
    assert_eq!(degrees[4]["truncated"], true);
}

#[test]
fn quandle_homology_regression_through_run() {
    let o = braidhom(&["run", &path("r3.json")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("homology of quandle complex over Z"));
    assert!(out.contains("  H_2 = 0\n  H_3 = Z/3\n"), "{out}");
}

#[test]
fn hyper_suite_passes_on_the_group_algebra_of_z2() {
    let o = braidhom(&["verify", &path("kz2.json"), "--suite", "hyper", "--max-degree", "6"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("[pass] left: d^(2) d^(2) = 2 d^(4)"));
    assert!(!out.contains("FAIL"));
}

#[test]
fn remaining_suites_on_truncated_polynomials() {
    let o = braidhom(&["verify", &path("truncated3.json"), "--suite", "simplicial,hopf,homotopy,duality", "--max-degree", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("left level: simplicial"));
    assert!(out.contains("[pass] δ^2 = (∂_3)ᵀ"));
    assert!(out.contains("[pass] homology vanishes on the exact range"));
}

#[test]
fn duality_needs_the_unit_dual_augmentation() {
    let o = braidhom(&["verify", &path("kz2.json"), "--suite", "duality"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn json_carries_every_number_of_the_human_report() {
    let cases: [&[&str]; 4] = [
        &["check", "r3_modules.json"],
        &["homology", "r3.json", "--named", "quandle", "--max-degree", "4"],
        &["homology", "r3.json", "--named", "rack", "--ring", "fp:3", "--max-degree", "3"],
        &["verify", "truncated3.json", "--max-degree", "3", "--suite", "simplicial,hyper,homotopy"],
    ];
    for case in cases {
        let mut args: Vec<String> = case.iter().map(|s| s.to_string()).collect();
        args[1] = path(case[1]);
        let argv: Vec<&str> = args.iter().map(String::as_str).collect();
        let human = stdout(&braidhom(&argv));
        let mut with_json = argv.clone();
        with_json.push("--json");
        let json = stdout(&braidhom(&with_json));
        let known = digit_runs(&json);
        for n in digit_runs(&human) {
            assert!(known.contains(&n), "{case:?}: {n} is printed but not serialized");
        }
    }
}

#[test]
fn machine_output_is_deterministic() {
    let args = ["verify", &path("r3.json"), "--suite", "simplicial,hopf,homotopy", "--max-degree", "3", "--json"];
    let first = braidhom(&args);
    let second = braidhom(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn matrix_dump_matches_the_assembled_complex() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("maps");
    let o = braidhom(&["complex", &path("r3.json"), "--named", "quandle", "--max-degree", "3", "--dump-matrices", target.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));

    let s = scenario::parse(&fixture("r3.json")).unwrap();
    let opts = Options { named: Some("quandle".into()), max_degree: Some(3), ..Options::default() };
    let report = braidhom_cli::run(Cmd::Complex, &s, &opts).unwrap();
    let maps = report.complex.unwrap().maps;
    for m in &maps {
        let text = std::fs::read_to_string(target.join(format!("degree_{}.txt", m.from))).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), format!("{} {} {}", m.rows, m.cols, m.nnz));
        let body: Vec<(usize, usize, String)> = lines
            .map(|l| {
                let f: Vec<&str> = l.split(' ').collect();
                assert_eq!(f.len(), 3, "{l}");
                (f[0].parse().unwrap(), f[1].parse().unwrap(), f[2].to_string())
            })
            .collect();
        assert_eq!(body.len(), m.nnz);
        assert!(body.windows(2).all(|w| (w[0].0, w[0].1) < (w[1].0, w[1].1)));
        assert!(body.iter().all(|(r, c, v)| *r < m.rows && *c < m.cols && v != "0"));
    }
    assert_eq!(maps.len(), 3);
}

#[test]
fn degree_cap_exits_with_the_resource_code() {
    let o = braidhom(&["homology", &path("r3.json"), "--named", "rack", "--max-degree", "6", "--degree-cap", "100"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("243"));
}

#[test]
fn composite_characteristic_is_rejected() {
    let o = braidhom(&["homology", &path("r3.json"), "--named", "rack", "--ring", "fp:4"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn module_failures_are_reported() {
    let o = braidhom(&["check", &path("r3_modules.json")]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("[FAIL] broken_right"));
    assert!(out.contains("[pass] trivial: bimodule compatibility"));
}

#[test]
fn trivial_bimodule_coefficients_reproduce_rack_homology() {
    let s = scenario::parse(&fixture("r3_modules.json")).unwrap();
    let with = Options { bimodule: Some("trivial".into()), max_degree: Some(3), ..Options::default() };
    let rack = Options { named: Some("rack".into()), max_degree: Some(3), ..Options::default() };
    let a = braidhom_cli::run(Cmd::Homology, &s, &with).unwrap().homology.unwrap();
    let b = braidhom_cli::run(Cmd::Homology, &s, &rack).unwrap().homology.unwrap();
    let summary = |h: &braidhom_cli::report::HomologyOut| h.degrees.iter().map(|d| (d.betti, d.torsion.clone())).collect::<Vec<_>>();
    assert_eq!(summary(&a), summary(&b));
}

#[test]
fn unverified_braidings_need_the_override() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.json");
    std::fs::write(
        &file,
        r#"{
  "structure": { "kind": "braiding", "dim": 2 },
  "braiding": [[0, 0, "1"], [0, 1, "1"], [1, 2, "1"], [2, 1, "1"], [3, 3, "1"]],
  "characters": { "e": ["1", "0"] }
}"#,
    )
    .unwrap();
    let f = file.to_str().unwrap();
    let o = braidhom(&["check", f]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("[FAIL] Yang-Baxter equation"));
    let o = braidhom(&["complex", f, "--max-degree", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("Yang-Baxter"), "{}", stderr(&o));
    let o = braidhom(&["complex", f, "--max-degree", "1", "--allow-unverified"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = braidhom(&["complex", f, "--max-degree", "2", "--allow-unverified"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("square to zero"), "{}", stderr(&o));
}

#[test]
fn scenario_options_yield_to_the_command_line() {
    let s = scenario::parse(&fixture("r3.json")).unwrap();
    let cli = Options { max_degree: Some(2), ..Options::default() };
    let reports = braidhom_cli::run_all(&s, &cli).unwrap();
    assert_eq!(reports.len(), 3);
    assert_eq!(reports[1].homology.as_ref().unwrap().degrees.len(), 3);
}

#[test]
fn schema_lists_the_accepted_names() {
    let text = std::fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../docs/scenario-schema.json")).unwrap();
    let schema: serde_json::Value = serde_json::from_str(&text).unwrap();
    let props = &schema["$defs"]["computation"]["properties"];
    let named: Vec<&str> = props["named"]["enum"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
    let known: Vec<&str> = braidhom::complexes::NamedComplex::ALL.iter().map(|c| c.name()).collect();
    assert_eq!(named, known);
    let suites: Vec<&str> = props["suite"]["items"]["enum"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
    assert_eq!(suites, braidhom_cli::options::SUITES);
    for key in props.as_object().unwrap().keys().filter(|k| *k != "command") {
        let mut opts = serde_json::Map::new();
        opts.insert("command".into(), "check".into());
        let prop = &props[key.as_str()];
        let sample = match (prop["type"].as_str(), prop["$ref"].as_str()) {
            (Some("boolean"), _) => serde_json::json!(true),
            (Some("integer"), _) | (_, Some("#/$defs/index")) => serde_json::json!(1),
            (Some("array"), _) => serde_json::json!(["hyper"]),
            (_, Some("#/$defs/ring")) => serde_json::json!("q"),
            _ => serde_json::json!("x"),
        };
        opts.insert(key.clone(), sample);
        let c: Result<scenario::Computation, _> = serde_json::from_value(serde_json::Value::Object(opts));
        let options = c.unwrap_or_else(|e| panic!("{key}: {e}")).options;
        assert_ne!(options, Options::default(), "{key} is not an option");
    }
}
