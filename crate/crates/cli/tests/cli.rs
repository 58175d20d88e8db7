use std::path::PathBuf;
use std::process::{Command, Output};

use moore_cli::format::{parse_machine_file, serialize_cell};
use moore_core::fixtures;
use moore_core::prelude::Machine;
use proptest::prelude::*;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(format!("{name}.machine"))
}

fn moore(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_moore"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn path(name: &str) -> String {
    fixture(name).display().to_string()
}

#[test]
fn fixtures_match_the_corpus() {
    for (name, cell) in fixtures::corpus() {
        let text = std::fs::read_to_string(fixture(name)).unwrap();
        assert_eq!(text, serialize_cell(&cell), "{name}");
        assert_eq!(parse_machine_file(&text).unwrap().validate().unwrap(), cell, "{name}");
    }
}

#[test]
fn run_prints_final_output_and_trace() {
    let o = moore(&["run", &path("par"), "--start", "q0", "--word", "101"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "final: 0\ntrace: 1 1 0\n");
}

#[test]
fn run_moore_trace_starts_with_the_initial_output() {
    let o = moore(&["run", &path("mod3"), "--start", "q0", "--word", "1 1 1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    // counting ones mod 3, output 1 exactly at residue 0
    assert_eq!(stdout(&o), "final: 1\ntrace: 1 0 0 1\n");
}

#[test]
fn soft_check_exit_codes() {
    let o = moore(&["check", "soft", &path("p2")]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "soft: true\n"));
    let o = moore(&["check", "soft", &path("u2")]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(1), "soft: false\n"));
}

#[test]
fn wrong_kind_is_a_usage_error() {
    let o = moore(&["check", "soft", &path("par")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("expected a Moore machine"));
}

#[test]
fn truncated_file_reports_a_syntax_error() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(fixture("par")).unwrap();
    let file = dir.path().join("cut.machine");
    std::fs::write(&file, &text[..text.len() / 2]).unwrap();
    let o = moore(&["validate", file.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line"), "{}", stderr(&o));
}

#[test]
fn kind_and_table_shape_must_agree() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(fixture("par"))
        .unwrap()
        .replace("\"mealy\"", "\"moore\"");
    let file = dir.path().join("bad.machine");
    std::fs::write(&file, text).unwrap();
    let o = moore(&["validate", file.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error:"));
}

#[test]
fn compose_writes_a_valid_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("c.machine");
    let o = moore(&["compose", &path("u2"), &path("par"), "-o", file.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = moore(&["validate", file.to_str().unwrap()]);
    assert_eq!(stdout(&o), "valid: moore machine, 4 states, input {0,1}, output {0,1}\n");
}

#[test]
fn transforms_round_trip_through_validate() {
    let dir = tempfile::tempdir().unwrap();
    for (args, kind) in [
        (vec!["embed-j", "mod3"], "mealy"),
        (vec!["d1", "mod3"], "mealy"),
        (vec!["moorify", "par"], "moore"),
        (vec!["decapitate", "par"], "moore"),
    ] {
        let file = dir.path().join(format!("{}.machine", args[0]));
        let o = moore(&["transform", args[0], &path(args[1]), "-o", file.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        let o = moore(&["validate", file.to_str().unwrap()]);
        assert!(stdout(&o).starts_with(&format!("valid: {kind}")), "{}", stdout(&o));
    }
    let o = moore(&["transform", "p", "--alphabet", "x,y,z"]);
    let cell = parse_machine_file(&stdout(&o)).unwrap().validate().unwrap();
    assert_eq!(cell.state_count(), 3);
}

#[test]
fn decapitated_machines_are_soft() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("d.machine");
    moore(&["transform", "decapitate", &path("edge"), "-o", file.to_str().unwrap()]);
    let o = moore(&["check", "soft", file.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn adjunction_and_correspondence_report_success() {
    for cmd in ["adjunction", "correspondence"] {
        let o = moore(&[cmd, &path("p2"), &path("par")]);
        assert_eq!(o.status.code(), Some(0), "{cmd}");
        assert!(stdout(&o).contains("SUCCESS: bijection"), "{}", stdout(&o));
    }
}

#[test]
fn law_checks_hold_on_fixtures() {
    for args in [
        vec!["check", "counit", "par"],
        vec!["check", "extension-square", "4", "mod3"],
        vec!["check", "n-soft", "1", "p2"],
        vec!["check", "j-compat", "u2", "par"],
        vec!["check", "pentagon", "u2", "p2", "cpar", "mod3"],
    ] {
        let args: Vec<String> = args
            .iter()
            .map(|a| if fixture(a).exists() { path(a) } else { a.to_string() })
            .collect();
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let o = moore(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
        assert!(stdout(&o).contains("true"));
    }
}

#[test]
fn random_pentagons_are_seeded() {
    let a = moore(&["check", "--seed", "9", "pentagon", "--random", "20"]);
    let b = moore(&["check", "pentagon", "--random", "20", "--seed", "9"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(stdout(&a), "pentagon: true (20 random quadruples, seed 9)\n");
    let o = moore(&["check", "pentagon", &path("u2")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn identity_search_finds_nothing() {
    let o = moore(&[
        "search-identity",
        "--alphabet",
        "0,1",
        "--max-states",
        "2",
        "--probe",
        &path("par"),
        "--probe",
        &path("edge"),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "candidates: 66\npassing: 0\n");
}

#[test]
fn unitize_demo_holds() {
    let o = moore(&["unitize-demo"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("triangles: 36 of 36 hold"));
}

#[test]
fn usage_errors_exit_two_and_help_exits_zero() {
    assert_eq!(moore(&["frob"]).status.code(), Some(2));
    assert_eq!(moore(&["run", &path("par")]).status.code(), Some(2));
    assert_eq!(
        moore(&["run", &path("par"), "--start", "q9"]).status.code(),
        Some(2)
    );
    assert_eq!(moore(&["--help"]).status.code(), Some(0));
    assert_eq!(moore(&["--version"]).status.code(), Some(0));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn serialization_round_trips(
        states in 1usize..4,
        seed in any::<u64>(),
        mealy in any::<bool>(),
    ) {
        use moore_core::lab::sweep::{random_mealy, random_moore};
        use moore_core::prelude::*;
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let bin = Alphabet::binary();
        let cell: Cell = if mealy {
            random_mealy(&mut rng, &bin, &bin, states).into()
        } else {
            random_moore(&mut rng, &bin, &bin, states).into()
        };
        let text = serialize_cell(&cell);
        prop_assert_eq!(parse_machine_file(&text).unwrap().validate().unwrap(), cell);
    }
}
