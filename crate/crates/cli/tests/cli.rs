use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

const SECANT: &str = r#"{"field":{"p":32003},"lines":[
[[1,0,0,0],[0,0,1,0]],[[0,1,0,0],[0,0,0,1]],[[1,1,0,0],[0,0,1,1]],[[1,2,0,0],[0,0,1,3]],[[1,3,0,0],[0,0,1,5]]]}"#;

fn instanton(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_instanton"))
        .args(args)
        .env_remove("INSTANTON_P")
        .env_remove("INSTANTON_RATIONALS")
        .env_remove("INSTANTON_SEED")
        .env_remove("INSTANTON_CONFIG")
        .env_remove("INSTANTON_OUT")
        .env_remove("INSTANTON_SAMPLES")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn verify_all_passes_on_default_config() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let run = instanton(&["verify", "all", "--out", path_str(&out)]);
    assert_eq!(code(&run), 0, "{}", String::from_utf8_lossy(&run.stdout));
    let reports = read_json(&out);
    let names: Vec<&str> = reports.as_array().unwrap().iter().map(|r| r["check"].as_str().unwrap()).collect();
    assert_eq!(names, ["build-g", "cohomology", "resolution", "sigma-epi", "thooft", "triple-quadric", "x-divisor"]);
    for r in reports.as_array().unwrap() {
        assert_eq!(r["status"], "pass");
        assert_eq!(r["seed"], 42);
        assert_eq!(r["field"]["p"], 32003);
        assert_eq!(r["details"]["config"].as_array().unwrap().len(), 5);
    }
}

#[test]
fn gen_config_has_no_five_secant() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("c.json");
    assert_eq!(code(&instanton(&["gen-config", "--n", "5", "--seed", "7", "--out", path_str(&cfg)])), 0);
    assert_eq!(read_json(&cfg)["lines"].as_array().unwrap().len(), 5);
    let out = dir.path().join("r.json");
    let run = instanton(&["check", "five-secant", "--config", path_str(&cfg), "--out", path_str(&out)]);
    assert_eq!(code(&run), 0);
    let report = read_json(&out);
    assert_eq!(report["check"], "five-secant");
    assert_eq!(report["status"], "pass");
    assert!(report["details"].get("witness_plucker").is_none());
}

#[test]
fn gen_config_to_stdout_matches_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("c.json");
    let stdout = instanton(&["gen-config", "--seed", "11"]).stdout;
    instanton(&["gen-config", "--seed", "11", "--out", path_str(&cfg)]);
    assert_eq!(stdout, std::fs::read(&cfg).unwrap());
}

#[test]
fn five_secant_config_fails_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("c.json");
    std::fs::write(&cfg, SECANT).unwrap();
    let out = dir.path().join("r.json");
    let run = instanton(&["check", "five-secant", "--config", path_str(&cfg), "--out", path_str(&out)]);
    assert_eq!(code(&run), 1);
    let report = read_json(&out);
    assert_eq!(report["status"], "fail");
    assert_eq!(report["details"]["assertions"]["no_five_secant"], false);
    assert!(report["details"]["witness_plucker"].is_array());
}

#[test]
fn five_secant_config_is_rejected_by_sigma() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("c.json");
    std::fs::write(&cfg, SECANT).unwrap();
    let run = instanton(&["check", "sigma-epi", "--config", path_str(&cfg)]);
    assert_eq!(code(&run), 3);
}

#[test]
fn unparseable_config_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("c.json");
    std::fs::write(&cfg, "{\"field\":").unwrap();
    assert_eq!(code(&instanton(&["verify", "all", "--config", path_str(&cfg)])), 2);
    assert_eq!(code(&instanton(&["verify", "all", "--config", path_str(&dir.path().join("missing.json"))])), 2);
}

#[test]
fn malformed_and_non_skew_lines() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("c.json");
    std::fs::write(&cfg, r#"{"field":{"p":32003},"lines":[[[1,0,0,0],[2,0,0,0]]]}"#).unwrap();
    assert_eq!(code(&instanton(&["check", "x-divisor", "--config", path_str(&cfg)])), 2);
    std::fs::write(
        &cfg,
        r#"{"field":{"p":32003},"lines":[[[1,0,0,0],[0,1,0,0]],[[1,0,0,0],[0,0,1,0]],[[0,0,1,0],[0,0,0,1]],[[1,0,1,0],[0,1,0,1]],[[1,0,2,0],[0,1,0,3]]]}"#,
    )
    .unwrap();
    assert_eq!(code(&instanton(&["check", "x-divisor", "--config", path_str(&cfg)])), 3);
}

#[test]
fn conflicting_field_flag_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("c.json");
    std::fs::write(&cfg, SECANT).unwrap();
    assert_eq!(code(&instanton(&["--p", "101", "check", "five-secant", "--config", path_str(&cfg)])), 2);
    assert_eq!(code(&instanton(&["--p", "100", "verify", "all"])), 2);
}

#[test]
fn too_few_lines_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("c.json");
    assert_eq!(code(&instanton(&["gen-config", "--n", "4", "--out", path_str(&cfg)])), 0);
    assert_eq!(code(&instanton(&["check", "sigma-epi", "--config", path_str(&cfg)])), 3);
}

#[test]
fn reruns_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    let first = instanton(&["verify", "all", "--seed", "5", "--out", path_str(&a)]);
    let second = instanton(&["verify", "all", "--seed", "5", "--out", path_str(&b)]);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn env_vars_set_defaults_and_flags_override() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let run = Command::new(env!("CARGO_BIN_EXE_instanton"))
        .args(["check", "sigma-epi"])
        .env("INSTANTON_SEED", "9")
        .env("INSTANTON_P", "10007")
        .env("INSTANTON_OUT", &out)
        .output()
        .unwrap();
    assert_eq!(code(&run), 0);
    let report = read_json(&out);
    assert_eq!(report["seed"], 9);
    assert_eq!(report["field"]["p"], 10007);

    let run = Command::new(env!("CARGO_BIN_EXE_instanton"))
        .args(["check", "sigma-epi", "--seed", "3", "--out", path_str(&out)])
        .env("INSTANTON_SEED", "9")
        .output()
        .unwrap();
    assert_eq!(code(&run), 0);
    assert_eq!(read_json(&out)["seed"], 3);
}

#[test]
fn report_command_reflects_status() {
    let dir = tempfile::tempdir().unwrap();
    let (good, bad, cfg) = (dir.path().join("good.json"), dir.path().join("bad.json"), dir.path().join("c.json"));
    assert_eq!(code(&instanton(&["check", "x-divisor", "--out", path_str(&good)])), 0);
    let run = instanton(&["report", path_str(&good)]);
    assert_eq!(code(&run), 0);
    assert!(String::from_utf8_lossy(&run.stdout).contains("PASS x-divisor"));

    std::fs::write(&cfg, SECANT).unwrap();
    instanton(&["check", "five-secant", "--config", path_str(&cfg), "--out", path_str(&bad)]);
    let run = instanton(&["report", path_str(&bad)]);
    assert_eq!(code(&run), 1);
    assert!(String::from_utf8_lossy(&run.stdout).contains("no_five_secant"));

    std::fs::write(&bad, "[1, 2]").unwrap();
    assert_eq!(code(&instanton(&["report", path_str(&bad)])), 2);
}

#[test]
fn claims_and_degeneracy_pass() {
    for check in ["claims", "degeneracy"] {
        let run = instanton(&["check", check, "--samples", "10"]);
        assert_eq!(code(&run), 0, "{check}: {}", String::from_utf8_lossy(&run.stdout));
    }
}

#[test]
fn rational_config_runs_lemma_checks() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("c.json");
    std::fs::write(
        &cfg,
        r#"{"field":{"rationals":true},"lines":[[[1,0,0,0],[0,1,0,0]],[[0,0,1,0],[0,0,0,1]],[[1,0,1,0],[0,1,0,1]],[[1,0,2,0],[0,1,0,3]],[[1,1,5,7],[2,-1,3,1]]]}"#,
    )
    .unwrap();
    for check in ["x-divisor", "resolution", "triple-quadric", "five-secant"] {
        let out = dir.path().join("r.json");
        let run = instanton(&["check", check, "--config", path_str(&cfg), "--out", path_str(&out)]);
        assert_eq!(code(&run), 0, "{check}: {}", String::from_utf8_lossy(&run.stdout));
        assert_eq!(read_json(&out)["field"]["rationals"], true);
    }
    assert_eq!(code(&instanton(&["--rationals", "check", "x-divisor"])), 3);
}
