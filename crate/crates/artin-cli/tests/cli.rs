//! End-to-end tests of the command-line interface, driving the compiled
//! binary on temporary files.

use std::io::Write;
use std::process::{Command, Output};

fn artin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_artin"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

fn write_temp(content: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(content.as_bytes()).unwrap();
    f
}

const A2_GRAPH: &str = "vertex x1\nvertex x2\nedge x1 x2\n";
const A3_GRAPH: &str = "vertex x1\nvertex x2\nvertex x3\nedge x1 x2\nedge x2 x3\n";
const STAR_GRAPH: &str = "vertex a\nvertex b\nvertex c\nvertex y\n\
                          edge a y\nedge b y\nedge c y\n";
const AFFINE_GRAPH: &str = "vertex a\nvertex b\nvertex c\n\
                            edge a b\nedge b c\nedge a c\n";

#[test]
fn present_genus_three() {
    let out = artin(&["present", "--g", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains('|'));
    // Artin relators of the 8-vertex graph plus R1 and R2.
    let machine = artin(&["present", "--g", "3", "--format", "machine"]);
    let mtext = stdout(&machine);
    assert!(mtext.contains("tag R1"));
    assert!(mtext.contains("tag R2"));
}

#[test]
fn present_genus_one_is_plain_braid_pair() {
    let out = artin(&["present", "--g", "1", "--format", "machine"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.matches("rel ").count(), 1);
    assert!(text.contains("gen x0"));
    assert!(text.contains("gen y1"));
}

#[test]
fn present_closed_torus_has_r9b() {
    let out = artin(&["present", "--g", "1", "--n", "2", "--closed", "--format", "machine"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("tag R9b"));
    // x0^2 = Delta(x1, v1) at n = 2.
    assert!(text.contains("rel x0^2 "));
}

#[test]
fn present_pure_closed_is_usage_error() {
    let out = artin(&["present", "--g", "2", "--n", "1", "--pure", "--closed"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn solve_empty_and_braid_words() {
    let f = write_temp(A2_GRAPH);
    let path = f.path().to_str().unwrap();
    let out = artin(&["solve", "--graph", path, "--word", ""]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "delta^0");

    let out = artin(&[
        "solve", "--graph", path, "--word", "x1 x2 x1", "--word2", "x2 x1 x2",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "equal");

    let out = artin(&["solve", "--graph", path, "--word", "x1", "--word2", "x2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "distinct");
}

#[test]
fn solve_coxeter_element_power_in_a3() {
    let f = write_temp(A3_GRAPH);
    let path = f.path().to_str().unwrap();
    let out = artin(&[
        "solve", "--graph", path, "--word",
        "x1 x2 x3 x1 x2 x3 x1 x2 x3 x1 x2 x3",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "delta^2");
}

#[test]
fn solve_infinite_type_is_exit_3() {
    let f = write_temp(AFFINE_GRAPH);
    let path = f.path().to_str().unwrap();
    let out = artin(&["solve", "--graph", path, "--word", "a b"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn delta_of_standard_types() {
    let out = artin(&["delta", "--type", "A2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "x1 x2 x1");

    let out = artin(&["delta", "--type", "B2"]);
    assert!(out.status.success());
    let word = stdout(&out).trim().to_string();
    assert_eq!(word.split_whitespace().count(), 4);

    let out = artin(&["delta", "--type", "H3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn delta_of_graph_subset() {
    let f = write_temp(A3_GRAPH);
    let path = f.path().to_str().unwrap();
    let out = artin(&["delta", "--graph", path, "--subset", "x1,x2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "x1 x2 x1");
    // Disconnected subset: precondition failure.
    let out = artin(&["delta", "--graph", path, "--subset", "x1,x3"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn classify_star_is_d4() {
    let f = write_temp(STAR_GRAPH);
    let path = f.path().to_str().unwrap();
    let out = artin(&["classify", "--graph", path]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().next().unwrap(), "D4");
    assert!(text.contains("map y x3"));
}

#[test]
fn classify_affine_is_exit_3() {
    let f = write_temp(AFFINE_GRAPH);
    let path = f.path().to_str().unwrap();
    let out = artin(&["classify", "--graph", path]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_suite_machine_lines() {
    let out = artin(&["verify", "--suite", "lemma3.8"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("claim D6:(i) verified"));
    assert!(text.contains("claim D4:(ii) verified"));
}

#[test]
fn verify_prop28_reports_corrected_exponent() {
    let out = artin(&["verify", "--suite", "prop2.8"]);
    assert!(out.status.success(), "corrected counts as pass-with-note");
    assert!(stdout(&out).contains("claim E7 corrected(9)"));
}

#[test]
fn verify_unknown_suite_is_exit_2() {
    let out = artin(&["verify", "--suite", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_external_script() {
    let pres = write_temp("gen a\ngen b\nrel a b a^-1 b^-1\ntag comm\n");
    let good = write_temp(
        "start a b\nstep rel comm at 2 inv rot 2\nstep cancel 1\nstep cancel 0\nend b a\n",
    );
    let out = artin(&[
        "verify",
        "--script",
        good.path().to_str().unwrap(),
        "--presentation",
        pres.path().to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert_eq!(stdout(&out).trim(), "claim script verified");

    let bad = write_temp("start a b\nend b a\n");
    let out = artin(&[
        "verify",
        "--script",
        bad.path().to_str().unwrap(),
        "--presentation",
        pres.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn export_round_trip() {
    let plain = write_temp("< a, b | a b a b^-1 a^-1 b^-1 >");
    let out = artin(&["export", "-i", plain.path().to_str().unwrap(), "--format", "machine"]);
    assert!(out.status.success());
    let machine_text = stdout(&out);
    assert!(machine_text.contains("gen a"));
    assert!(machine_text.contains("rel a b a b^-1 a^-1 b^-1"));

    let machine = write_temp(&machine_text);
    let out = artin(&["export", "-i", machine.path().to_str().unwrap(), "--format", "plain"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "< a, b | a b a b^-1 a^-1 b^-1 >");

    let out = artin(&["export", "-i", plain.path().to_str().unwrap(), "--format", "gap"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("FreeGroup( \"a\", \"b\" )"));
}

#[test]
fn verify_search_finds_and_prints_checkable_script() {
    let pres = write_temp("gen a\ngen b\nrel a b a^-1 b^-1\ntag comm\n");
    let path = pres.path().to_str().unwrap();
    let out = artin(&[
        "verify", "--search", "b^-1 a^-1 b a", "--presentation", path, "--depth", "4",
    ]);
    assert!(out.status.success());
    let script_text = stdout(&out);
    assert!(script_text.contains("step rel comm"));
    // The printed script is itself checkable.
    let script_file = write_temp(&script_text);
    let out = artin(&[
        "verify",
        "--script",
        script_file.path().to_str().unwrap(),
        "--presentation",
        path,
    ]);
    assert!(out.status.success());

    // A word that is not an identity comes back inconclusive.
    let out = artin(&["verify", "--search", "a", "--presentation", path, "--depth", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "inconclusive");
}
