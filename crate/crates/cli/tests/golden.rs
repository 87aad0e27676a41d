//! Golden-file tests for the `mvstone` binary.
//!
//! Each `golden/NAME.spec` is run as `mvstone [ARGS] report --format=kv
//! NAME.spec` from inside `golden/`, where `ARGS` comes from an optional
//! `NAME.args`. Stdout must match `NAME.kv` byte for byte and the exit code
//! must match the reported status. Specs that are rejected before running
//! have a `NAME.stderr` instead and must exit with 2.
//!
//! Set `MVSTONE_BLESS=1` to rewrite the expected files.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn specs() -> Vec<String> {
    let mut names: Vec<String> = fs::read_dir(golden_dir())
        .unwrap()
        .filter_map(|e| {
            let p = e.unwrap().path();
            (p.extension()? == "spec").then(|| p.file_stem()?.to_str().map(String::from))?
        })
        .collect();
    names.sort();
    names
}

fn run(name: &str, extra: &[&str]) -> Output {
    let dir = golden_dir();
    let args = fs::read_to_string(dir.join(format!("{name}.args"))).unwrap_or_default();
    Command::new(env!("CARGO_BIN_EXE_mvstone"))
        .current_dir(&dir)
        .args(args.split_whitespace())
        .args(extra)
        .arg(format!("{name}.spec"))
        .output()
        .unwrap()
}

fn expected_exit(kv: &str) -> i32 {
    match kv.lines().last().unwrap_or_default() {
        "summary.status=PASS" => 0,
        "summary.status=FAIL" => 1,
        "summary.status=RESOURCE" => 3,
        other => panic!("no status line, last line is {other:?}"),
    }
}

#[test]
fn golden_kv_reports() {
    let bless = std::env::var_os("MVSTONE_BLESS").is_some();
    let dir = golden_dir();
    let names = specs();
    assert!(names.len() >= 10, "only {} golden specs", names.len());
    let mut failures = Vec::new();
    for name in &names {
        let out = run(name, &["report", "--format=kv"]);
        let stdout = String::from_utf8(out.stdout).unwrap();
        let stderr = String::from_utf8(out.stderr).unwrap();
        let code = out.status.code().unwrap();
        let stderr_path = dir.join(format!("{name}.stderr"));
        let kv_path = dir.join(format!("{name}.kv"));
        if code == 2 || stderr_path.exists() {
            if bless {
                fs::write(&stderr_path, &stderr).unwrap();
                continue;
            }
            let want = fs::read_to_string(&stderr_path).unwrap_or_default();
            if code != 2 || stderr != want || !stdout.is_empty() {
                failures.push(format!("{name}: exit {code}, stderr {stderr:?}, expected {want:?}"));
            }
            continue;
        }
        if bless {
            fs::write(&kv_path, &stdout).unwrap();
            continue;
        }
        let want = fs::read_to_string(&kv_path).unwrap_or_default();
        if stdout != want {
            failures.push(format!("{name}: kv output differs from {}", kv_path.display()));
        } else if code != expected_exit(&want) {
            failures.push(format!("{name}: exit {code} does not match the reported status"));
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn kv_output_is_stable_across_runs() {
    for name in specs() {
        let a = run(&name, &["report", "--format=kv"]);
        let b = run(&name, &["report", "--format=kv"]);
        assert_eq!(a.stdout, b.stdout, "{name}");
        assert_eq!(a.status.code(), b.status.code(), "{name}");
    }
}

#[test]
fn seed_changes_sampled_output_only_through_seed_field() {
    let a = run("11_random", &["--seed", "1", "report", "--format=kv"]);
    let b = run("11_random", &["--seed", "1", "report", "--format=kv"]);
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.contains("check.1.seed=1\n"));
    assert!(text.contains("check.1.disagreements=0\n"));
}

#[test]
fn check_prints_one_line_per_check_and_a_summary() {
    let out = run("01_chains", &["check"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 8);
    assert!(lines[..7].iter().all(|l| l.contains(" PASS ") && l.ends_with(" ms")));
    assert!(lines[7].ends_with("=> PASS"));
}

#[test]
fn text_report_includes_fields() {
    let out = run("10_supernatural", &["report", "--format=text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("result = 2^3*3^2*5"));
}

#[test]
fn missing_file_is_a_usage_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_mvstone"))
        .args(["check", "no/such/file.spec"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn goldens_cover_every_command() {
    let dir = golden_dir();
    let mut seen = std::collections::BTreeSet::new();
    for name in specs() {
        let text = fs::read_to_string(dir.join(format!("{name}.spec"))).unwrap();
        for line in text.lines() {
            let mut words = line.split_whitespace();
            if words.next() == Some("check") {
                if let Some(cmd) = words.next() {
                    seen.insert(cmd.to_string());
                }
            }
        }
    }
    let commands = [
        "check-topology", "hausdorff", "compactness", "skeleton", "clopen", "dualize-algebra",
        "dualize-space", "roundtrip-algebra", "roundtrip-space", "square", "cuts", "lcc", "factorize",
        "multiset", "boolen-convert", "boolen-roundtrip", "boolen-morphism", "stone-n-dualize",
        "stone-n-of", "maximal-ideals", "ideals", "continuity", "metric", "hyper-archimedean",
        "liminary", "sfc", "isomorphic", "hausdorff-sample", "supernatural",
    ];
    let missing: Vec<_> = commands.iter().filter(|c| !seen.contains(**c)).collect();
    assert!(missing.is_empty(), "no golden spec exercises {missing:?}");
}
