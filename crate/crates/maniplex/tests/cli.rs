//! End-to-end checks of the command-line binary: exit codes, output shapes,
//! and agreement with the library on every printed verdict.

use std::path::PathBuf;
use std::process::{Command, Output};

use maniplex::catalog::{polygon, torus_44};
use maniplex::document::{parse, read_file, serialize, Document};
use maniplex::mixing::smallest_regular_cover;
use maniplex::polytopality::pip_check;
use maniplex::symmetry::rooted_isomorphic;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_maniplex"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("maniplex-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn mix_of_polygon_documents_is_the_lcm_polygon() {
    let a = scratch("digon.json");
    let b = scratch("triangle.json");
    let out = scratch("mixed.json");
    std::fs::write(&a, serialize(&Document::from_rooted(&polygon(2).unwrap()))).unwrap();
    std::fs::write(&b, serialize(&Document::from_rooted(&polygon(3).unwrap()))).unwrap();
    let result = run(&["mix", a.to_str().unwrap(), b.to_str().unwrap(), "-o", out.to_str().unwrap()]);
    assert!(result.status.success(), "{result:?}");
    let mixed = read_file(&out).unwrap();
    assert!(rooted_isomorphic(&mixed, &polygon(6).unwrap()));
}

#[test]
fn pip_exit_codes_follow_the_library_verdict() {
    for (spec, expected) in [("cube(3)", true), ("torus(1,1)", false), ("torus(2,0)", true)] {
        let result = run(&["pip", "--catalog", spec]);
        let library = pip_check(&crate_build(spec)).unwrap();
        assert_eq!(library, expected);
        assert_eq!(result.status.code(), Some(if library { 0 } else { 1 }), "{spec}: {result:?}");
        assert!(stdout(&result).contains(&format!("polytopal: {library}")), "{spec}");
    }
}

fn crate_build(spec: &str) -> maniplex::Rooted {
    match spec {
        "cube(3)" => maniplex::catalog::cube(3).unwrap(),
        "torus(1,1)" => torus_44(1, 1).unwrap(),
        "torus(2,0)" => torus_44(2, 0).unwrap(),
        _ => unreachable!(),
    }
}

#[test]
fn info_reports_symmetry_of_the_chiral_torus_map() {
    let result = run(&["info", "--catalog", "torus(1,2)"]);
    assert!(result.status.success());
    assert!(stdout(&result).starts_with("40 flags, 2 orbits, class 2_{}"), "{}", stdout(&result));
}

#[test]
fn src_writes_the_regular_cover_and_reports_polytopality() {
    let out = scratch("cover.json");
    let result = run(&["src", "--catalog", "torus(1,2)", "-o", out.to_str().unwrap()]);
    assert!(result.status.success(), "{result:?}");
    let written = read_file(&out).unwrap();
    let library = smallest_regular_cover(&torus_44(1, 2).unwrap()).unwrap();
    assert!(rooted_isomorphic(&written, &library));
    let text = stdout(&result);
    let verdict = pip_check(&library).unwrap();
    assert!(text.contains(&format!("polytopal: {verdict}")), "{text}");
}

#[test]
fn validate_reports_schema_errors_with_field_paths() {
    let bad = scratch("bad.json");
    std::fs::write(&bad, r#"{"rank": 1, "flag_count": 3, "connections": [[1, 2, 0]]}"#).unwrap();
    let result = run(&["validate", bad.to_str().unwrap()]);
    assert_eq!(result.status.code(), Some(2));
    let err = String::from_utf8_lossy(&result.stderr).into_owned();
    assert!(err.contains("connections[0]"), "{err}");
}

#[test]
fn dual_round_trips_through_documents() {
    let out = scratch("dualized.json");
    let result = run(&["dual", "--catalog", "torus(2,1)", "-o", out.to_str().unwrap()]);
    assert!(result.status.success());
    let written = read_file(&out).unwrap();
    assert_eq!(written.graph().connections(), torus_44(2, 1).unwrap().dual().graph().connections());
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(serialize(&parse(&text).unwrap()), text);
}

#[test]
fn admissible_exit_code_distinguishes_verdicts() {
    let yes = run(&["admissible", "--catalog", "torus(1,2)", "--catalog", "two_orbit(3)"]);
    assert_eq!(yes.status.code(), Some(0), "{yes:?}");
    assert!(stdout(&yes).contains("admissible: true"));
    let no = run(&["admissible", "--catalog", "simplex(3)", "--catalog", "two_orbit(3,0)"]);
    assert_eq!(no.status.code(), Some(1), "{no:?}");
    assert!(stdout(&no).contains("admissible: false"));
}

#[test]
fn export_dot_draws_one_edge_per_color_pair() {
    let result = run(&["export-dot", "--catalog", "polygon(2)"]);
    assert!(result.status.success());
    let text = stdout(&result);
    assert_eq!(text.lines().filter(|l| l.contains("--")).count(), 4);
    assert_eq!(text.lines().filter(|l| l.ends_with(';') && !l.contains("--")).count(), 4);
}

#[test]
fn variance_prints_order_and_well_definedness() {
    let result = run(&["variance", "--catalog", "polygon(6)", "--catalog", "polygon(4)"]);
    assert!(result.status.success());
    let text = stdout(&result);
    assert!(text.contains("order: 3"), "{text}");
    assert!(text.contains("well-defined: true"), "{text}");
}

#[test]
fn usage_errors_exit_nonzero() {
    let result = run(&["pip"]);
    assert_eq!(result.status.code(), Some(2));
    let unknown = run(&["frobnicate"]);
    assert_ne!(unknown.status.code(), Some(0));
}
