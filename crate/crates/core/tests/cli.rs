//! The e8g3 binary: exit codes, fixture precedence, determinism and the
//! cache.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_e8g3"));
    c.env_remove("E8G3_FIXTURES").env_remove("E8G3_CACHE");
    c
}

fn run(args: &[&str], cwd: &Path) -> Output {
    bin().args(args).current_dir(cwd).output().expect("binary runs")
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn report_without_time(path: &Path) -> serde_json::Value {
    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    v.as_object_mut().unwrap().remove("wall_time_ms");
    v
}

#[test]
fn verify_sections_on_recorded_fixture() {
    let dir = tempfile::tempdir().unwrap();
    let fx = fixture("sections.json");
    let out = run(&["verify", "sections", "--fixture", fx.to_str().unwrap()], dir.path());
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn verify_cusp_lists_every_case() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("out.json");
    let out = run(&["verify", "cusp", "--json", json.to_str().unwrap()], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let v = report_without_time(&json);
    assert_eq!(v["suite"], "cusp");
    assert_eq!(v["pass"], true);
    let names: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    let cases: Vec<&&str> = names.iter().filter(|n| n.starts_with("cusp.case ")).collect();
    assert_eq!(cases.len(), 14);
    for label in ["1", "2.1", "2.2", "3.1", "3.2", "4.1", "4.2"] {
        assert!(names.contains(&format!("cusp.case case {label}").as_str()), "{label}");
    }
    for k in 1..=7 {
        assert!(names.contains(&format!("cusp.case prop f{k}").as_str()));
    }
    // every case records its slack as num/den
    for c in v["checks"].as_array().unwrap().iter().filter(|c| c["name"].as_str().unwrap().starts_with("cusp.case ")) {
        let s = c["slack"].as_str().unwrap();
        assert!(s.contains('/'), "{s}");
    }
    // skipped checks carry a reason
    for c in v["checks"].as_array().unwrap().iter().filter(|c| c["status"] == "skipped") {
        assert!(!c["detail"].as_str().unwrap().is_empty());
    }
}

#[test]
fn thread_count_does_not_change_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let one = dir.path().join("one.json");
    let eight = dir.path().join("eight.json");
    for (n, p) in [("1", &one), ("8", &eight)] {
        let out = run(&["verify", "gradedlie", "--threads", n, "--json", p.to_str().unwrap()], dir.path());
        assert_eq!(out.status.code(), Some(0));
    }
    assert_eq!(report_without_time(&one), report_without_time(&eight));
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [&[&str]; 6] = [
        &["verify", "everything"],
        &["verify", "heis", "--fixture", "x.json"],
        &["verify", "rootsys", "--threads", "0"],
        &["enumerate", "0"],
        &["enumerate", "ten"],
        &["cache", "flush"],
    ];
    for args in cases {
        assert_eq!(run(args, dir.path()).status.code(), Some(2), "{args:?}");
    }
    let missing = run(&["verify", "sections", "--fixture", "nope.json"], dir.path());
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn tampered_fixture_fails_with_1() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(fixture("sections.json")).unwrap();
    let bad = text.replacen("\"q\": 139", "\"q\": 137", 1);
    assert_ne!(bad, text);
    let p = dir.path().join("bad.json");
    std::fs::write(&p, bad).unwrap();
    let out = run(&["verify", "sections", "--fixture", p.to_str().unwrap()], dir.path());
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn fixture_flag_beats_environment() {
    let dir = tempfile::tempdir().unwrap();
    let env_dir = dir.path().join("env");
    std::fs::create_dir(&env_dir).unwrap();
    std::fs::write(env_dir.join("sections.json"), "{}").unwrap();
    let env_only = bin()
        .args(["verify", "sections"])
        .env("E8G3_FIXTURES", &env_dir)
        .current_dir(dir.path())
        .output()
        .unwrap();
    assert_eq!(env_only.status.code(), Some(1));
    let good = fixture("sections.json");
    let flagged = bin()
        .args(["verify", "sections", "--fixture", good.to_str().unwrap()])
        .env("E8G3_FIXTURES", &env_dir)
        .current_dir(dir.path())
        .output()
        .unwrap();
    assert_eq!(flagged.status.code(), Some(0));
}

#[test]
fn enumerate_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    let o1 = run(&["enumerate", "2", "--csv", a.to_str().unwrap()], dir.path());
    let o2 = run(&["enumerate", "2", "--csv", b.to_str().unwrap()], dir.path());
    assert_eq!(o1.status.code(), Some(0));
    assert_eq!(o1.stdout, o2.stdout);
    assert_eq!(String::from_utf8_lossy(&o1.stdout).trim(), "70");
    let ca = std::fs::read(&a).unwrap();
    assert_eq!(ca, std::fs::read(&b).unwrap());
    assert_eq!(String::from_utf8_lossy(&ca).lines().count(), 71);
    let o = run(&["enumerate", "1"], dir.path());
    assert_eq!(String::from_utf8_lossy(&o.stdout).trim(), "0");
}

#[test]
fn cache_rebuild_and_check() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let c = cache.to_str().unwrap();
    // no cache yet
    assert_eq!(run(&["cache", "check", "--dir", c], dir.path()).status.code(), Some(1));
    let r1 = run(&["cache", "rebuild", "--dir", c], dir.path());
    let r2 = run(&["cache", "rebuild", "--dir", c], dir.path());
    assert_eq!(r1.status.code(), Some(0));
    assert_eq!(r1.stdout, r2.stdout);
    assert_eq!(String::from_utf8_lossy(&r1.stdout).lines().count(), 2);
    assert_eq!(run(&["cache", "check", "--dir", c], dir.path()).status.code(), Some(0));

    let target = cache.join("structure.txt");
    let mut bytes = std::fs::read(&target).unwrap();
    bytes[0] ^= 1;
    std::fs::write(&target, bytes).unwrap();
    let bad = run(&["cache", "check", "--dir", c], dir.path());
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stdout).contains("mismatch"));

    // the environment variable names the default directory
    let env = bin().args(["cache", "rebuild"]).env("E8G3_CACHE", &cache).current_dir(dir.path()).output().unwrap();
    assert_eq!(env.status.code(), Some(0));
    assert_eq!(run(&["cache", "check", "--dir", c], dir.path()).status.code(), Some(0));
}

#[test]
fn verify_without_cache_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["verify", "rootsys"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert!(!dir.path().join(".e8g3-cache").exists());
}
