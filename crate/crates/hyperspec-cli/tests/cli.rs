//! End-to-end runs of the installed binary: exit codes, byte-exact output,
//! and the gen-then-rho consistency contract.

use std::path::Path;
use std::process::{Command, Output};

fn hyperspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperspec"))
        .args(args)
        .env_remove("HYPERSPEC_MAX_N")
        .output()
        .expect("binary runs")
}

fn hyperspec_with_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperspec"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn write_temp(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn gen_is_byte_exact() {
    let out = hyperspec(&["gen", "P:3,2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "3 5 2\n0 1 2\n2 3 4\n");
}

#[test]
fn gen_rejects_out_of_range_params() {
    assert_eq!(code(&hyperspec(&["gen", "H4:5"])), 2);
    assert_eq!(code(&hyperspec(&["gen", "Q:1,2"])), 2);
    assert_eq!(code(&hyperspec(&["gen", "P:3"])), 2);
}

#[test]
fn rho_family_values_match_closed_forms() {
    let out = hyperspec(&["rho", "--family", "P:3,2", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("{\"rho\":1.259921"), "{text}");
    assert!(text.contains("\"k\":3,\"n\":5,\"m\":2"), "{text}");

    let out = hyperspec(&["rho", "--family", "TE:3,2"]);
    assert!(stdout(&out).contains("1.587401"), "{}", stdout(&out));
}

#[test]
fn rho_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let disconnected = write_temp(dir.path(), "disc.hg", "2 4 2\n0 1\n2 3\n");
    assert_eq!(code(&hyperspec(&["rho", &disconnected])), 4);

    let garbage = write_temp(dir.path(), "bad.hg", "not a header\n");
    assert_eq!(code(&hyperspec(&["rho", &garbage])), 2);

    assert_eq!(code(&hyperspec(&["rho", "--family", "P:0,1"])), 2);

    // Two iterations cannot close a 1e-10 gap; the bounds still print.
    let out = hyperspec(&["rho", "--family", "Dp:3,5", "--max-iter", "2"]);
    assert_eq!(code(&out), 3);
    assert!(stdout(&out).contains("lower"), "{}", stdout(&out));
}

#[test]
fn gen_then_rho_equals_rho_family() {
    let dir = tempfile::tempdir().unwrap();
    for spec in ["P:4,3", "D:3,5", "E3:1,2,2", "H4:2", "TE:5,3"] {
        let generated = hyperspec(&["gen", spec]);
        assert_eq!(code(&generated), 0, "{spec}");
        let path = write_temp(dir.path(), "g.hg", &stdout(&generated));
        let from_file = hyperspec(&["rho", &path, "--format", "json"]);
        let from_family = hyperspec(&["rho", "--family", spec, "--format", "json"]);
        assert_eq!(stdout(&from_file), stdout(&from_family), "{spec}");
    }
}

#[test]
fn reduce_writes_the_lowered_hypergraph() {
    let dir = tempfile::tempdir().unwrap();
    let p5_4 = stdout(&hyperspec(&["gen", "P:4,5"]));
    let path = write_temp(dir.path(), "p54.hg", &p5_4);
    let out = hyperspec(&["reduce", &path]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), stdout(&hyperspec(&["gen", "P:3,5"])));
    let log = String::from_utf8(out.stderr).unwrap();
    assert!(log.contains("rho(G)"), "{log}");
}

#[test]
fn reduce_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let h4 = write_temp(dir.path(), "h4.hg", &stdout(&hyperspec(&["gen", "H4:2"])));
    assert_eq!(code(&hyperspec(&["reduce", &h4])), 5);

    let p3_2 = write_temp(dir.path(), "p32.hg", &stdout(&hyperspec(&["gen", "P:2,3"])));
    assert_eq!(code(&hyperspec(&["reduce", &p3_2])), 5);
}

#[test]
fn enum_reports_min_and_second() {
    let out = hyperspec(&["enum", "--k", "3", "--m", "3"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let summary = text.lines().last().unwrap();
    assert!(summary.contains("\"min\":\"P:3,3\""), "{summary}");
    assert!(summary.contains("\"second\":\"D:3,3\""), "{summary}");
    assert!(summary.contains("\"separated\":true"), "{summary}");

    let two = hyperspec(&["enum", "--k", "3", "--m", "2"]);
    assert!(stdout(&two).contains("\"classes\":2"), "{}", stdout(&two));
}

#[test]
fn enum_cap_exit_code_and_overrides() {
    assert_eq!(code(&hyperspec(&["enum", "--k", "4", "--m", "12"])), 6);
    assert_eq!(code(&hyperspec_with_env(&["enum", "--k", "3", "--m", "3"], "HYPERSPEC_MAX_N", "5")), 6);
    assert_eq!(code(&hyperspec_with_env(&["enum", "--k", "3", "--m", "3"], "HYPERSPEC_MAX_N", "7")), 0);
    // The flag wins over the environment.
    let out = hyperspec_with_env(
        &["enum", "--k", "3", "--m", "3", "--max-n", "7"],
        "HYPERSPEC_MAX_N",
        "5",
    );
    assert_eq!(code(&out), 0);
}

#[test]
fn verify_suites_run() {
    let out = hyperspec(&["verify", "tables"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("tables: 12/12 passed"), "{text}");
    assert!(text.lines().all(|l| !l.starts_with("[FAIL]")), "{text}");

    assert_eq!(code(&hyperspec(&["verify", "nonsense"])), 2);
}

#[test]
fn out_flag_writes_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.hg");
    let out = hyperspec(&["gen", "C:3,4", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "");
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout(&hyperspec(&["gen", "C:3,4"])));
}

#[test]
fn identical_runs_are_byte_identical() {
    let a = hyperspec(&["enum", "--k", "3", "--m", "3"]);
    let b = hyperspec(&["enum", "--k", "3", "--m", "3"]);
    assert_eq!(stdout(&a), stdout(&b));
}
