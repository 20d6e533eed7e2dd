use std::path::PathBuf;
use std::process::{Command, Output};

fn kdelta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kdelta"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn kdelta_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kdelta"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn instance(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("instances")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn report(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

fn scratch(name: &str, body: &str) -> String {
    let dir = std::env::temp_dir().join(format!("kdelta-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn run_p2() {
    let out = kdelta(&["run", &instance("p2.toric")]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["instance_id"], "p2");
    assert_eq!(r["delta"], "1");
    assert_eq!(r["verdict"], "k-semistable");
    assert_eq!(r["aut_dim"], 2);
}

#[test]
fn run_blowup() {
    let r = report(&kdelta(&["run", &instance("blowup-p2.toric")]));
    assert_eq!(r["delta"], "6/7");
    assert_eq!(r["verdict"], "k-unstable");
    assert_eq!(r["witness"], "toric divisor of ray (1,1)");
}

#[test]
fn run_icosahedral() {
    let r = report(&kdelta(&["run", &instance("icosahedral.p1")]));
    assert_eq!(r["delta"], "12");
    assert_eq!(r["alpha"], "6");
    assert_eq!(r["verdict"], "uniformly-k-stable");
    assert_eq!(r["scope"], "G-equivariant");
}

#[test]
fn inline_modes() {
    let r = report(&kdelta(&[
        "run",
        "--kind",
        "toric",
        "--rays",
        "1,0;0,1;1,1;-1,-1",
    ]));
    assert_eq!(r["delta"], "6/7");
    let r = report(&kdelta(&[
        "run",
        "--kind",
        "p1-group",
        "--family",
        "dihedral",
        "--parameter",
        "3",
    ]));
    assert_eq!(r["delta"], "2");
    let r = report(&kdelta(&[
        "run",
        "--kind",
        "p1-logpair",
        "--multiplicities",
        "3,3",
    ]));
    assert_eq!(
        (r["delta"].as_str(), r["alpha"].as_str()),
        (Some("1"), Some("1/2"))
    );
}

#[test]
fn diagnostics_go_to_stderr() {
    let out = kdelta(&["run", &instance("p2.toric")]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(
        err.contains("spherical computation agrees: delta = 1"),
        "{err}"
    );
}

#[test]
fn every_bundled_file_runs() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("instances");
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        let out = kdelta(&["run", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{}", path.display());
    }
}

#[test]
fn validation_errors_exit_2() {
    let cases = [
        (
            "float.json",
            r#"{"kind": "toric", "rank": 2, "rays": [[1, 0.5], [0, 1]]}"#,
            "rays[0][1]",
        ),
        (
            "syntax.json",
            "{\"kind\": \"toric\",\n  \"rank\" 2}",
            "line 2",
        ),
        ("unknown.json", r#"{"kind": "quintic"}"#, "unknown kind"),
        (
            "notfano.json",
            r#"{"kind": "p1-logpair", "multiplicities": [2, 2, 2, 2]}"#,
            "NotLogFano",
        ),
        (
            "unbounded.json",
            r#"{"kind": "toric", "rank": 2, "rays": [[1, 0], [0, 1]]}"#,
            "Unbounded",
        ),
    ];
    for (name, body, needle) in cases {
        let out = kdelta(&["run", &scratch(name, body)]);
        assert_eq!(out.status.code(), Some(2), "{name}");
        assert!(out.stdout.is_empty(), "{name}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert!(err.contains(needle), "{name}: {err}");
    }
    let out = kdelta(&["run", "/nonexistent/instance.toric"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn inconsistent_data_exits_3() {
    // The fan edges miss most of the valuation cone, so the edge formula and
    // the cone criterion disagree.
    let body = r#"{
      "kind": "spherical", "n_rank": 2, "t_rank": 2,
      "pi": [[1, 0], [0, 1]],
      "valuation_cone_generators": [[1, 0], [-1, 0], [0, 1], [0, -1]],
      "colored_fan_edges": [{"gen": [-1, 0], "a": 1}],
      "moment_polytope": {"vertices": [[0, 0], [1, 0], [0, 1], [1, 1]]},
      "dh": {"terms": [{"exponents": [0, 0], "coeff": 1}]},
      "V": 1
    }"#;
    let out = kdelta(&["run", &scratch("inconsistent.json", body)]);
    assert_eq!(
        out.status.code(),
        Some(3),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("InconsistentData"));
}

#[test]
fn dimension_guard_from_env() {
    let out = kdelta_env(&["run", &instance("p3.toric")], "KDELTA_MAX_DIM", "2");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("dimension"));
    let out = kdelta_env(&["run", &instance("p3.toric")], "KDELTA_MAX_DIM", "8");
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn reports_are_deterministic() {
    let first = kdelta(&["catalog"]);
    assert_eq!(first.status.code(), Some(0));
    for threads in ["1", "4"] {
        let again = kdelta_env(&["catalog"], "RAYON_NUM_THREADS", threads);
        assert_eq!(again.stdout, first.stdout);
    }
    let a = kdelta(&["run", &instance("blowup-p2.spherical")]);
    let b = kdelta(&["run", &instance("blowup-p2.spherical")]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn catalog_is_sorted_by_id() {
    let out = kdelta(&["catalog"]);
    let list: Vec<serde_json::Value> = serde_json::from_slice(&out.stdout).unwrap();
    let ids: Vec<String> = list
        .iter()
        .map(|e| e["report"]["instance_id"].as_str().unwrap().to_string())
        .collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert!(ids.iter().any(|i| i == "cyclic-3"));
}

#[test]
fn selftest_passes() {
    let out = kdelta(&["selftest"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains(", 0 failures"));
}
