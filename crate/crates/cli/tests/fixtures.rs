//! Drives the built binary over the bundled fixtures.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixtures() -> Vec<PathBuf> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let mut v: Vec<PathBuf> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    v.sort();
    v
}

fn hopfchrom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfchrom")).args(args).env_remove("HOPFCHROM_MAX_GROUND").output().unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn bundled_suite_covers_every_kind() {
    let names: Vec<String> = fixtures().iter().map(|p| p.file_stem().unwrap().to_string_lossy().into_owned()).collect();
    assert!(names.len() >= 9, "{names:?}");
    let mut kinds: Vec<String> = fixtures()
        .iter()
        .map(|p| {
            let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap();
            assert_eq!(v["schema"], "1");
            let origin = v["expected"]["origin"].as_str().unwrap();
            assert!(origin == "published" || origin == "derived");
            format!("{}/{}", v["structure"]["kind"].as_str().unwrap(), v["character"].as_str().unwrap())
        })
        .collect();
    kinds.sort();
    kinds.dedup();
    for k in [
        "poset/zeta",
        "graph/chromatic",
        "matroid/chromatic",
        "mixed_graph/strong_mixed",
        "mixed_graph/weak_mixed",
        "double_poset/inversion_free",
        "hypergraph/unique_local_max",
        "gen_permutohedron/vertex_generic",
        "simplicial_complex/dim_bound(2)",
    ] {
        assert!(kinds.iter().any(|x| x == k), "missing {k}");
    }
}

#[test]
fn every_fixture_verifies() {
    for f in fixtures() {
        let out = hopfchrom(&["verify", "--input", f.to_str().unwrap()]);
        assert!(out.status.success(), "{}: {}", f.display(), String::from_utf8_lossy(&out.stdout));
        let v = json(&out);
        assert_eq!(v["passed"], true);
        assert_eq!(v["schema"], "1");
    }
}

#[test]
fn typo_fixtures_carry_notes() {
    for name in ["matroid_u24_chromatic", "mixed_weak"] {
        let f = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{name}.json"));
        let v = json(&hopfchrom(&["verify", "-i", f.to_str().unwrap()]));
        assert!(!v["notes"].as_array().unwrap().is_empty(), "{name}");
        let expected = v["checks"].as_array().unwrap().iter().find(|c| c["check"] == "expected").unwrap();
        assert_eq!(expected["detail"]["origin"], "derived");
    }
}

#[test]
fn output_does_not_depend_on_workers() {
    for f in fixtures() {
        let f = f.to_str().unwrap();
        for cmd in ["psi", "complex", "certify", "verify"] {
            let one = hopfchrom(&[cmd, "-i", f, "--workers", "1"]);
            let four = hopfchrom(&[cmd, "-i", f, "--workers", "4"]);
            assert_eq!(one.stdout, four.stdout, "{cmd} {f}");
            assert!(!one.stdout.is_empty());
        }
    }
}

#[test]
fn bowtie_psi_matches_published_values() {
    let f = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/poset_bowtie_zeta.json");
    let v = json(&hopfchrom(&["psi", "-i", f.to_str().unwrap()]));
    let c = &v["coefficients"];
    assert_eq!(c["4"], serde_json::json!([1, 1]));
    assert_eq!(c["3,1"], serde_json::json!([2, 0]));
    assert_eq!(c["1,2,1"], serde_json::json!([4, 0]));
    assert_eq!(c.as_object().unwrap().len(), 8);
}

#[test]
fn output_file_and_exit_codes() {
    let dir = std::env::temp_dir().join(format!("hopfchrom-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let job = dir.join("job.json");
    let out = dir.join("out.json");

    std::fs::write(&job, r#"{"schema":"1","structure":{"kind":"graph","vertices":["a","b"],"edges":[["a","b"]]},"character":"chromatic"}"#).unwrap();
    let o = hopfchrom(&["poly", "-i", job.to_str().unwrap(), "-o", out.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["polynomials"][0]["monomial_basis"], serde_json::json!(["0", "-1", "1"]));

    // offending field is named
    std::fs::write(&job, r#"{"schema":"1","structure":{"kind":"graph","vertices":["a","b"]},"character":"chromatic","group":["(a q)"]}"#).unwrap();
    let o = hopfchrom(&["psi", "-i", job.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("group[0]"));

    let labels: Vec<String> = (0..10).map(|i| format!("\"v{i}\"")).collect();
    std::fs::write(&job, format!(r#"{{"schema":"1","structure":{{"kind":"graph","vertices":[{}]}},"character":"zeta"}}"#, labels.join(","))).unwrap();
    assert_eq!(hopfchrom(&["psi", "-i", job.to_str().unwrap()]).status.code(), Some(3));
    assert_eq!(hopfchrom(&["psi", "-i", job.to_str().unwrap(), "--max-ground", "10"]).status.code(), Some(2));

    // a wrong expectation is a verification failure that still reports
    let f = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/double_poset_inversion_free.json");
    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(f).unwrap()).unwrap();
    v["expected"]["psi"]["2,2"]["()"] = "2".into();
    std::fs::write(&job, v.to_string()).unwrap();
    let o = hopfchrom(&["verify", "-i", job.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["passed"], false);

    std::fs::remove_dir_all(&dir).unwrap();
}
