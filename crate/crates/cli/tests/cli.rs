use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn sessions() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../sessions")
}

fn session(name: &str) -> PathBuf {
    sessions().join(name)
}

fn hopfcontra(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfcontra")).args(args).env_remove("HOPFCONTRA_DIM_CAP").output().unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let p = Path::new(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

fn canonical(sub: &str, path: &Path, extra: &[&str]) -> Output {
    let mut args = vec![sub, path.to_str().unwrap(), "--format", "canonical"];
    args.extend_from_slice(extra);
    hopfcontra(&args)
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn check_on_trivial_session_passes() {
    let out = canonical("check", &session("c2_trivial.session"), &[]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let v = json(&out);
    assert_eq!(v["summary"]["pass"], true);
    assert_eq!(v["command"], "check");
}

#[test]
fn build_cyclic_reports_doubling_dims() {
    let out = canonical("build-cyclic", &session("c2_trivial.session"), &[]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let dims: Vec<u64> = v["tasks"][0]["tables"][0]["dims"].as_array().unwrap().iter().map(|p| p[1].as_u64().unwrap()).collect();
    assert_eq!(dims, [1, 2, 4, 8]);
}

#[test]
fn canonical_reports_are_byte_identical() {
    for name in ["c2_trivial.session", "c2_full.session", "sweedler_gf7.session", "trivial_ground.session"] {
        let a = canonical("report", &session(name), &[]);
        let b = canonical("report", &session(name), &[]);
        assert!(!a.stdout.is_empty());
        assert_eq!(a.stdout, b.stdout, "{name}");
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn out_flag_writes_the_same_bytes() {
    let target = Path::new(env!("CARGO_TARGET_TMPDIR")).join("c2_trivial.report.json");
    let direct = canonical("report", &session("c2_trivial.session"), &[]);
    let written = canonical("report", &session("c2_trivial.session"), &["--out", target.to_str().unwrap()]);
    assert_eq!(written.status.code(), Some(0));
    assert_eq!(std::fs::read(&target).unwrap(), direct.stdout);
}

#[test]
fn dangling_reference_is_rejected_before_running() {
    let good = std::fs::read_to_string(session("c2_trivial.session")).unwrap();
    let bad = good.replacen("\"coefficient\": \"trivial_lr\"", "\"coefficient\": \"nope\"", 1);
    assert_ne!(good, bad);
    let p = scratch("dangling.session", &bad);
    let out = hopfcontra(&["check", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
    assert!(out.stdout.is_empty());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("tasks[1].coefficient"), "{err}");
    assert!(err.contains("nope"), "{err}");
}

#[test]
fn empty_and_malformed_files_are_parse_errors() {
    for (name, body) in [("empty.session", ""), ("truncated.session", "{\"field\": \"Q\",")] {
        let p = scratch(name, body);
        let out = hopfcontra(&["check", p.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(3), "{name}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn missing_file_is_io_error() {
    let out = hopfcontra(&["check", "/nonexistent/none.session"]);
    assert_eq!(out.status.code(), Some(5));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(hopfcontra(&[]).status.code(), Some(2));
    assert_eq!(hopfcontra(&["frobnicate"]).status.code(), Some(2));
    let s = session("c2_trivial.session");
    assert_eq!(hopfcontra(&["homology", s.to_str().unwrap(), "--mode", "sideways"]).status.code(), Some(2));
}

#[test]
fn unstable_coefficient_needs_the_flag() {
    let s = session("c2_unstable.session");
    let refused = canonical("build-cyclic", &s, &[]);
    assert_eq!(refused.status.code(), Some(12));
    assert!(json(&refused)["tasks"][0]["error"]["kind"].as_str().unwrap().contains("PrerequisiteFailed"));

    let built = canonical("build-cyclic", &s, &["--allow-unstable"]);
    assert_eq!(built.status.code(), Some(1));
    let v = json(&built);
    let failed: Vec<&str> = v["tasks"][0]["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|x| x["pass"] == false)
        .map(|x| x["name"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["cyclic relations/relation (f)"]);
}

#[test]
fn connes_over_prime_field_is_unsupported() {
    let out = canonical("homology", &session("sweedler_gf7.session"), &["--mode", "connes"]);
    assert_eq!(out.status.code(), Some(11));
}

#[test]
fn hochschild_over_prime_field_runs() {
    let out = canonical("homology", &session("sweedler_gf7.session"), &["--mode", "hochschild"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn dimension_cap_from_environment() {
    let s = session("c2_trivial.session");
    let out = Command::new(env!("CARGO_BIN_EXE_hopfcontra"))
        .args(["build-cyclic", s.to_str().unwrap()])
        .env("HOPFCONTRA_DIM_CAP", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(13));
    let out = Command::new(env!("CARGO_BIN_EXE_hopfcontra"))
        .args(["check", s.to_str().unwrap()])
        .env("HOPFCONTRA_DIM_CAP", "lots")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn golden_c2_homology_tables() {
    let out = canonical("report", &session("c2_full.session"), &[]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let mut tables = vec![];
    for task in v["tasks"].as_array().unwrap() {
        if task["task"] != "homology" {
            continue;
        }
        for t in task["tables"].as_array().unwrap() {
            let label = t["label"].as_str().unwrap();
            if label.starts_with("dim") {
                continue;
            }
            let dims: Vec<u64> = t["dims"].as_array().unwrap().iter().map(|p| p[1].as_u64().unwrap()).collect();
            tables.push((label.to_string(), dims));
        }
    }
    assert_eq!(
        tables,
        [
            ("HH_n".to_string(), vec![1, 0, 0, 0]),
            ("HC_n".to_string(), vec![1, 0, 1, 0]),
            ("HC^n".to_string(), vec![1, 0, 1, 0]),
        ]
    );
}

/// Canonical `report` output for every bundled session, pinned under
/// `tests/golden`. Set `UPDATE_GOLDEN=1` to rewrite the files.
#[test]
fn golden_reports() {
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut names: Vec<String> = std::fs::read_dir(sessions())
        .unwrap()
        .filter_map(|e| e.ok()?.file_name().into_string().ok())
        .filter(|n| n.ends_with(".session"))
        .collect();
    names.sort();
    assert!(!names.is_empty());
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for name in names {
        let out = canonical("report", &session(&name), &[]);
        assert!(!out.stdout.is_empty(), "{name}");
        let path = golden.join(name.replace(".session", ".json"));
        if update {
            std::fs::write(&path, &out.stdout).unwrap();
            continue;
        }
        let expected = std::fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert!(expected == out.stdout, "{name} differs from {}", path.display());
    }
}
