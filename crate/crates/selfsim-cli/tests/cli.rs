//! Command-line behavior: exit codes, pinned outputs, report determinism
//! and round-trip parsing.

use selfsim_cli::{verify_paper, RunConfig};
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_selfsim"))
}

#[test]
fn act_prints_image_and_restriction() {
    let out = bin().args(["act", "ab", "0"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("ab . 0 = 1"), "{}", text);
    assert!(text.contains("restriction a"), "{}", text);
}

#[test]
fn fullgroup_index_of_b_is_one() {
    let out = bin()
        .args(["fullgroup", "index", "--table", "alpha=- g=b beta=-"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "1");
}

#[test]
fn fullgroup_factor_examples() {
    let out = bin()
        .args(["fullgroup", "factor", "--table", "alpha=- g=a beta=-"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("alpha=1 g=e beta=0"), "{}", text);

    let out = bin()
        .args(["fullgroup", "factor", "--table", "alpha=- g=bab beta=-"])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("alpha=1 g=ba beta=0"), "{}", text);

    // index-1 input reports the obstruction without failing
    let out = bin()
        .args(["fullgroup", "factor", "--table", "alpha=- g=b beta=-"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("IndexNonzero"), "{}", text);
}

#[test]
fn fullgroup_compose_concatenates_words() {
    let out = bin()
        .args([
            "fullgroup",
            "compose",
            "--table",
            "alpha=- g=a beta=-",
            "--with",
            "alpha=- g=b beta=-",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap().trim(),
        "alpha=- g=ab beta=-"
    );
}

#[test]
fn homology_subcommand_reports_vanishing_degree_two() {
    let out = bin()
        .args(["homology", "--degree", "2", "--depth", "6"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("H_2 colimit: 0"), "{}", text);
}

#[test]
fn usage_errors_exit_two() {
    let out = bin().args(["act", "zz", "0"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin()
        .args(["--group", "no-such-group", "pseudo-free"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["homology", "--depth", "0"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn group_definition_file_round_trips() {
    let dir = std::env::temp_dir().join("selfsim-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("dihedral.group");
    std::fs::write(
        &path,
        "# definition file\nalphabet 2\ngen a : 0 -> 1 | e ; 1 -> 0 | e\ngen b : 0 -> 0 | a ; 1 -> 1 | b\nrel a a =\nrel b b =\n",
    )
    .unwrap();
    let out = bin()
        .args(["--group", path.to_str().unwrap(), "act", "ab", "0"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("ab . 0 = 1"));
}

#[test]
fn reports_are_deterministic_and_round_trip() {
    let cfg = RunConfig {
        depth_bound: 4,
        degree_bound: 4,
        ..RunConfig::default()
    };
    let r1 = verify_paper(&cfg).unwrap();
    let r2 = verify_paper(&cfg).unwrap();
    let j1 = serde_json::to_string_pretty(&r1.to_json(&cfg)).unwrap();
    let j2 = serde_json::to_string_pretty(&r2.to_json(&cfg)).unwrap();
    assert_eq!(j1, j2, "identical config must give byte-identical reports");
    // round trip through the serializer
    let parsed: serde_json::Value = serde_json::from_str(&j1).unwrap();
    assert_eq!(parsed, r1.to_json(&cfg));
    // no floating-point values anywhere
    fn no_floats(v: &serde_json::Value) -> bool {
        match v {
            serde_json::Value::Number(n) => n.is_i64() || n.is_u64(),
            serde_json::Value::Array(a) => a.iter().all(no_floats),
            serde_json::Value::Object(m) => m.values().all(no_floats),
            _ => true,
        }
    }
    assert!(no_floats(&parsed));
    // schema keys
    for key in ["meta", "homology", "stabilized", "ktheory", "hk", "fullgroup"] {
        assert!(parsed.get(key).is_some(), "missing top-level key {}", key);
    }
}
