//! End-to-end checks of the command-line surface: exit codes, report
//! shape, and byte-level determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

use bchroma::report::Report;

fn bchroma(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bchroma"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("bchroma-cli-{}-{name}", std::process::id()));
    p
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap_or(-1)
}

fn stdout_report(out: &Output) -> Report {
    let text = String::from_utf8_lossy(&out.stdout);
    Report::from_json(&text).expect("stdout is a report")
}

#[test]
fn gen_info_and_b_on_petersen() {
    let path = tmp("petersen.col");
    let path_s = path.to_str().unwrap();
    let out = bchroma(&["gen", "petersen", "-o", path_s]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));

    let out = bchroma(&["info", path_s]);
    assert_eq!(code(&out), 0);
    let report = stdout_report(&out);
    assert_eq!(report.graph_signature.n, 10);
    assert_eq!(report.graph_signature.regular_degree, Some(3));
    assert_eq!(report.graph_signature.girth, Some(5));

    let out = bchroma(&["b", path_s]);
    assert_eq!(code(&out), 0);
    let report = stdout_report(&out);
    let json = report.to_json();
    assert!(json.contains("\"value\": 3"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn construct_output_passes_verify() {
    let graph_path = tmp("plane3.col");
    let graph_s = graph_path.to_str().unwrap();
    let out = bchroma(&["gen", "projective", "--q", "3", "-o", graph_s]);
    assert_eq!(code(&out), 0);

    let out = bchroma(&["construct", graph_s, "--procedure", "thm23"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let report = stdout_report(&out);
    let bchroma::report::ReportResult::Procedure(proc_report) = &report.result else {
        panic!("expected a procedure payload");
    };
    let col = proc_report
        .final_coloring
        .as_ref()
        .expect("success coloring");

    // Write the coloring out and feed it back through verify.
    let col_path = tmp("plane3-coloring.txt");
    std::fs::write(&col_path, bchroma::io::write_coloring(col)).unwrap();
    let out = bchroma(&["verify", graph_s, col_path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);

    std::fs::remove_file(&graph_path).ok();
    std::fs::remove_file(&col_path).ok();
}

#[test]
fn thm23_on_the_order_7_plane_reaches_six_dominant_colors() {
    let graph_path = tmp("plane7.col");
    let graph_s = graph_path.to_str().unwrap();
    assert_eq!(
        code(&bchroma(&["gen", "projective", "--q", "7", "-o", graph_s])),
        0
    );
    let out = bchroma(&["construct", graph_s, "--procedure", "thm23"]);
    assert_eq!(code(&out), 0);
    let report = stdout_report(&out);
    let bchroma::report::ReportResult::Procedure(proc_report) = &report.result else {
        panic!("expected a procedure payload");
    };
    assert!(proc_report.dominant_colors_achieved >= 6);
    std::fs::remove_file(&graph_path).ok();
}

#[test]
fn thm21_on_heawood_builds_a_4_b_coloring() {
    let graph_path = tmp("heawood.col");
    let graph_s = graph_path.to_str().unwrap();
    assert_eq!(code(&bchroma(&["gen", "heawood", "-o", graph_s])), 0);

    let out = bchroma(&["construct", graph_s, "--procedure", "thm21"]);
    assert_eq!(code(&out), 0);
    let report = stdout_report(&out);
    let bchroma::report::ReportResult::Procedure(proc_report) = &report.result else {
        panic!("expected a procedure payload");
    };
    let col = proc_report.final_coloring.as_ref().unwrap();
    let col_path = tmp("heawood-coloring.txt");
    std::fs::write(&col_path, bchroma::io::write_coloring(col)).unwrap();
    let out = bchroma(&["verify", graph_s, col_path.to_str().unwrap(), "--b", "4"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));

    // A deliberately broken coloring is rejected with exit 2.
    std::fs::write(&col_path, "0 1\n1 1\n").unwrap();
    let out = bchroma(&["verify", graph_s, col_path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);

    std::fs::remove_file(&graph_path).ok();
    std::fs::remove_file(&col_path).ok();
}

#[test]
fn exit_codes_for_failures() {
    // Usage error: unknown subcommand.
    let out = bchroma(&["frobnicate"]);
    assert_eq!(code(&out), 1);

    // Parse error names the offending line.
    let bad = tmp("bad.col");
    std::fs::write(&bad, "p edge 2 1\ne 1 1\n").unwrap();
    let out = bchroma(&["info", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains(":2:"));
    std::fs::remove_file(&bad).ok();

    // Oracle size guard on an 11-vertex graph.
    let big = tmp("k11.col");
    let big_s = big.to_str().unwrap();
    assert_eq!(
        code(&bchroma(&["gen", "complete", "--n", "11", "-o", big_s])),
        0
    );
    let out = bchroma(&["oracle-b", big_s]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("brute force"));

    // Hypothesis failure exits 2.
    let hs = tmp("hs.col");
    let hs_s = hs.to_str().unwrap();
    assert_eq!(code(&bchroma(&["gen", "hoffman_singleton", "-o", hs_s])), 0);
    let out = bchroma(&["construct", hs_s, "--procedure", "thm31"]);
    assert_eq!(code(&out), 2);

    std::fs::remove_file(&big).ok();
    std::fs::remove_file(&hs).ok();
}

#[test]
fn oracle_commands_agree_with_solvers() {
    let path = tmp("c5.col");
    let path_s = path.to_str().unwrap();
    assert_eq!(
        code(&bchroma(&["gen", "cycle", "--n", "5", "-o", path_s])),
        0
    );
    let oracle = stdout_report(&bchroma(&["oracle-b", path_s]));
    let solver = stdout_report(&bchroma(&["b", path_s]));
    let oracle_json = oracle.to_json();
    let solver_json = solver.to_json();
    assert!(oracle_json.contains("\"value\": 3"));
    assert!(solver_json.contains("\"value\": 3"));

    let oracle_f = stdout_report(&bchroma(&["oracle-f", path_s]));
    assert!(oracle_f.to_json().contains("\"value\": 3"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn seeded_runs_are_byte_identical() {
    let path = tmp("rr.col");
    let path_s = path.to_str().unwrap();
    let gen_args = [
        "gen",
        "random-regular",
        "--n",
        "10",
        "--d",
        "3",
        "--seed",
        "7",
        "-o",
        path_s,
        "--no-timing",
    ];
    let first_gen = bchroma(&gen_args);
    let graph_bytes_1 = std::fs::read(&path).unwrap();
    let second_gen = bchroma(&gen_args);
    let graph_bytes_2 = std::fs::read(&path).unwrap();
    assert_eq!(code(&first_gen), 0);
    assert_eq!(first_gen.stdout, second_gen.stdout);
    assert_eq!(graph_bytes_1, graph_bytes_2);

    for args in [
        vec!["b", path_s, "--no-timing"],
        vec!["f", path_s, "--no-timing"],
        vec!["construct", path_s, "--procedure", "thm23", "--no-timing"],
        vec!["info", path_s, "--no-timing"],
    ] {
        let a = bchroma(&args);
        let b = bchroma(&args);
        assert_eq!(a.stdout, b.stdout, "non-deterministic output for {args:?}");
        assert!(!a.stdout.is_empty());
    }
    std::fs::remove_file(&path).ok();
}

#[test]
fn edgelist_format_is_supported() {
    let path = tmp("path.edges");
    std::fs::write(&path, "0 1\n1 2\n2 3\n").unwrap();
    let out = bchroma(&["info", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let report = stdout_report(&out);
    assert_eq!(report.graph_signature.n, 4);
    assert_eq!(report.graph_signature.m, 3);
    std::fs::remove_file(&path).ok();
}
