use std::fs;
use std::process::Command;

use galcar_cli::{run, Outcome, EXIT_FAILURE, EXIT_OK, EXIT_OPTION, EXIT_PARSE};

fn galcar(args: &[&str]) -> Outcome {
    run(std::iter::once("galcar").chain(args.iter().copied()))
}

fn stdout_of(args: &[&str]) -> String {
    let out = galcar(args);
    assert_eq!(out.code, EXIT_OK, "{args:?}: {}", out.stderr);
    out.stdout
}

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    fs::read_to_string(path).unwrap()
}

#[test]
fn tables_match_golden_files() {
    assert_eq!(stdout_of(&["table", "minkowski"]), golden("table_minkowski.txt"));
    assert_eq!(stdout_of(&["table", "galilei"]), golden("table_galilei.txt"));
    assert_eq!(stdout_of(&["table", "carroll"]), golden("table_carroll.txt"));
}

#[test]
fn table_rows_and_json() {
    let gal = stdout_of(&["table", "galilei"]);
    assert!(gal.contains("*(dt^(a·dr) + b·dS) = dt^(b·dr)\n"));
    let car = stdout_of(&["table", "carroll"]);
    assert!(car.contains("*(dt^(a·dS) + f dV) = a·dr\n"));
    let json: serde_json::Value =
        serde_json::from_str(&stdout_of(&["table", "minkowski", "--json"])).unwrap();
    assert_eq!(json["lines"][0]["output"], "f dt^dV");
    assert_eq!(galcar(&["table", "euclid"]).code, EXIT_OPTION);
}

#[test]
fn star_examples() {
    assert_eq!(stdout_of(&["star", "dt^dx", "--kind", "galilei", "--n", "3"]), "0\n");
    assert_eq!(stdout_of(&["star", "dy^dz", "--kind", "galilei"]), "dt^dx\n");
    assert_eq!(stdout_of(&["star", "1", "--kind", "carroll"]), "dt^dx^dy^dz\n");
    assert_eq!(stdout_of(&["star", "dt^dx^dy^dz", "--kind", "galilei"]), "-1\n");
    assert_eq!(
        stdout_of(&["star", "dt^dx^dy^dz", "--kind", "galilei", "--variant", "k"]),
        "1\n"
    );
    assert_eq!(
        stdout_of(&["star", "2 dt + dx", "--kind", "minkowski"]),
        "dt^dy^dz + 2 dx^dy^dz\n"
    );
}

#[test]
fn star_in_other_dimensions() {
    // n = 2: Carroll degree 0 defaults to the k̃-based star
    assert_eq!(stdout_of(&["star", "1", "--kind", "carroll", "--n", "2"]), "dt^dx1^dx2\n");
    assert_eq!(
        stdout_of(&["star", "1", "--kind", "carroll", "--n", "2", "--variant", "h"]),
        "0\n"
    );
    assert_eq!(stdout_of(&["star", "dx1", "--kind", "galilei", "--n", "2"]), "dt^dx2\n");
}

#[test]
fn star_json_output() {
    let out = stdout_of(&["star", "dy^dz", "--kind", "galilei", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["degree"], 2);
    assert_eq!(v["literal"], "dt^dx");
    assert_eq!(v["terms"][0]["coeff"], "1");
    assert_eq!(v["variant"], "TableGalilei4D");
}

#[test]
fn star_errors_have_exit_codes() {
    assert_eq!(galcar(&["star", "dt^", "--kind", "galilei"]).code, EXIT_PARSE);
    assert_eq!(galcar(&["star", "dx7", "--kind", "galilei"]).code, EXIT_PARSE);
    assert_eq!(galcar(&["star", "1", "--kind", "minkowski", "--variant", "k"]).code, EXIT_OPTION);
    assert_eq!(galcar(&["star", "1", "--kind", "newton"]).code, EXIT_OPTION);
    assert_eq!(
        galcar(&["star", "1", "--kind", "galilei", "--variant", "CarrollianH"]).code,
        EXIT_OPTION
    );
    assert_eq!(galcar(&["star", "1", "--kind", "galilei", "--n", "0"]).code, EXIT_OPTION);
    assert_eq!(galcar(&["star"]).code, EXIT_PARSE);
}

#[test]
fn star_with_structure_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.json");
    fs::write(
        &path,
        r#"{"kind":"galilei","n":1,"lambda_h":"-1/2","lambda_k":1,"mu":1,
           "h":[[0,0],[0,"-1/2"]],"xi":[1,0]}"#,
    )
    .unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(stdout_of(&["star", "dx1", "--structure", p]), "1/2 dt\n");
    assert_eq!(
        galcar(&["star", "dx1", "--structure", p, "--kind", "carroll"]).code,
        EXIT_OPTION
    );
    fs::write(&path, "{not json").unwrap();
    assert_eq!(galcar(&["star", "dx1", "--structure", p]).code, EXIT_PARSE);
}

#[test]
fn verify_suites() {
    for suite in ["nilpotency", "oracle", "kernels"] {
        let out = galcar(&["verify", suite, "--max-dim", "4"]);
        assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    }
    let out = galcar(&["verify", "naturality", "--seed", "7", "--samples", "10", "--max-dim", "4"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    assert_eq!(galcar(&["verify", "bogus"]).code, EXIT_OPTION);
    assert_eq!(galcar(&["verify", "oracle", "--max-dim", "1"]).code, EXIT_OPTION);
}

#[test]
fn verify_is_deterministic_and_json() {
    let args = ["verify", "naturality", "--seed", "3", "--samples", "4", "--max-dim", "3", "--json"];
    let a = stdout_of(&args);
    assert_eq!(a, stdout_of(&args));
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["reports"][0]["suite"], "naturality");
}

fn maxwell(fields: &str, kind: &str) -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fields.json");
    fs::write(&path, fields).unwrap();
    galcar(&["maxwell", path.to_str().unwrap(), "--kind", kind])
}

#[test]
fn maxwell_examples() {
    let out = maxwell(r#"{"E": ["0", "0", "0"], "B": ["1", "0", "0"]}"#, "galilei");
    assert_eq!(out.code, EXIT_OK);
    let coulomb = r#"{"E": ["x", "y", "z"], "B": ["0", "0", "0"]}"#;
    let out = maxwell(coulomb, "minkowski");
    assert_eq!(out.code, EXIT_FAILURE);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["residuals"][0]["tag"], "Gauss");
    assert_eq!(v["residuals"][0]["components"][0], "3");
    assert_eq!(v["satisfied"], false);
    let out = maxwell(coulomb, "galilei");
    assert_eq!(out.code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert!(v["residuals"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["tag"] != "Gauss"));
}

#[test]
fn maxwell_input_errors() {
    assert_eq!(maxwell("{", "galilei").code, EXIT_PARSE);
    assert_eq!(maxwell(r#"{"E": ["x^"], "B": []}"#, "galilei").code, EXIT_PARSE);
    assert_eq!(
        maxwell(r#"{"E": ["w", "0", "0"], "B": ["0", "0", "0"]}"#, "galilei").code,
        EXIT_PARSE
    );
    assert_eq!(
        maxwell(r#"{"E": ["0", "0", "0"], "B": ["0", "0", "0"]}"#, "newton").code,
        EXIT_OPTION
    );
    let missing = galcar(&["maxwell", "/nonexistent/fields.json", "--kind", "galilei"]);
    assert_eq!(missing.code, EXIT_PARSE);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_galcar");
    let ok = Command::new(bin).args(["table", "carroll"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8(ok.stdout).unwrap(), golden("table_carroll.txt"));
    let parse = Command::new(bin).args(["star", "dq"]).output().unwrap();
    assert_eq!(parse.status.code(), Some(2));
    let option = Command::new(bin).args(["table", "euclid"]).output().unwrap();
    assert_eq!(option.status.code(), Some(3));
}
