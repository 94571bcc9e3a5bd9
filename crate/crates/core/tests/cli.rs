//! End-to-end runs of the `hopf` binary: artifacts, reports and exit codes.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn hopf(out: &Path, args: &[&str], budget_env: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hopf"));
    cmd.arg("--out").arg(out).args(args).env_remove("HOPF_BUDGET");
    if let Some(b) = budget_env {
        cmd.env("HOPF_BUDGET", b);
    }
    cmd.output().expect("the binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json(path: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(path).expect("artifact exists")).expect("valid JSON")
}

#[test]
fn catalog_verify_writes_three_algebras() {
    let dir = TempDir::new().unwrap();
    let o = hopf(dir.path(), &["catalog", "verify"], None);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    for (file, dim) in [("h4.json", 4), ("h8.json", 8), ("h8xh4.json", 32)] {
        let v = json(&dir.path().join(file));
        assert_eq!(v["schema"], "hopf-algebra/v1");
        assert_eq!(v["dim"], dim);
    }
    let report = json(&dir.path().join("catalog-report.json"));
    assert_eq!(report["schema"], "catalog-report/v1");
    assert_eq!(report["algebras"].as_array().unwrap().len(), 3);
}

#[test]
fn markdown_report_lists_z_to_the_fourth() {
    let dir = TempDir::new().unwrap();
    let o = hopf(
        dir.path(),
        &["catalog", "verify", "--algebra", "h8", "--format", "markdown"],
        None,
    );
    assert_eq!(code(&o), 0);
    let md = fs::read_to_string(dir.path().join("catalog-report.md")).unwrap();
    assert!(md.contains("- [pass] H8: z⁴ = 1"), "{md}");
    assert!(md.contains("verdict: pass"));
}

#[test]
fn mutated_algebra_fails_with_exit_one() {
    let dir = TempDir::new().unwrap();
    assert_eq!(
        code(&hopf(dir.path(), &["catalog", "verify", "--algebra", "h8"], None)),
        0
    );
    let mut v = json(&dir.path().join("h8.json"));
    // Scale the coefficient of the product z·z on 1 from 1/2 to 1.
    let mul = v["mul"].as_array_mut().unwrap();
    let entry = mul
        .iter_mut()
        .find(|e| e[0] == 4 && e[1] == 4 && e[2] == 0)
        .expect("z·z has a unit component");
    entry[3] = serde_json::json!([1, 1, 0, 1]);
    let mutated = dir.path().join("mutated.json");
    fs::write(&mutated, serde_json::to_string(&v).unwrap()).unwrap();
    let out = dir.path().join("check");
    let o = hopf(&out, &["--load", mutated.to_str().unwrap(), "catalog", "verify"], None);
    assert_eq!(code(&o), 1);
    let report = json(&out.join("catalog-report.json"));
    let failing = report["algebras"][0]["axioms"]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .count();
    assert!(failing > 0);
}

#[test]
fn unreadable_input_exits_two() {
    let dir = TempDir::new().unwrap();
    let missing = dir.path().join("missing.json");
    assert_eq!(
        code(&hopf(
            dir.path(),
            &["--load", missing.to_str().unwrap(), "catalog", "verify"],
            None
        )),
        2
    );
    let garbage = dir.path().join("garbage.json");
    fs::write(&garbage, "{ not json").unwrap();
    assert_eq!(
        code(&hopf(
            dir.path(),
            &["--load", garbage.to_str().unwrap(), "catalog", "verify"],
            None
        )),
        2
    );
    assert_eq!(code(&hopf(dir.path(), &["matched-pairs", "check"], None)), 2);
    assert_eq!(code(&hopf(dir.path(), &["--budget", "0", "theorem", "check"], None)), 2);
    assert_eq!(code(&hopf(dir.path(), &["catalog", "verify"], Some("zero"))), 2);
}

#[test]
fn left_enumeration_finds_sixteen_families_deterministically() {
    let (a, b) = (TempDir::new().unwrap(), TempDir::new().unwrap());
    for d in [&a, &b] {
        assert_eq!(
            code(&hopf(d.path(), &["actions", "enumerate", "--side", "left"], None)),
            0
        );
    }
    let bytes = |d: &TempDir| fs::read(d.path().join("solutions-left.json")).unwrap();
    assert_eq!(bytes(&a), bytes(&b));
    let v = json(&a.path().join("solutions-left.json"));
    assert_eq!(v["schema"], "solutions/v1");
    assert_eq!(v["complete"], true);
    let branches = v["branches"].as_array().unwrap();
    assert_eq!(branches.len(), 16);
    assert!(branches
        .iter()
        .all(|b| b["family"].is_string() && b["residual"].as_array().unwrap().is_empty()));
}

#[test]
fn right_enumeration_is_irreducible_but_locates_both_examples() {
    let dir = TempDir::new().unwrap();
    let o = hopf(dir.path(), &["actions", "enumerate", "--side", "right"], None);
    assert_eq!(code(&o), 3);
    let v = json(&dir.path().join("solutions-right.json"));
    assert_eq!(v["complete"], false);
    let report = json(&dir.path().join("enumeration-right.json"));
    for located in report["located"].as_array().unwrap() {
        assert!(located[1].is_u64(), "{located}");
    }
    let names: Vec<&str> = v["branches"]
        .as_array()
        .unwrap()
        .iter()
        .filter_map(|b| b["family"].as_str())
        .collect();
    assert!(names.iter().any(|n| n.contains("trivial")) && names.iter().any(|n| n.contains("anti-diagonal")));
}

#[test]
fn budget_env_overrides_the_flag() {
    let dir = TempDir::new().unwrap();
    let args = ["--budget", "1", "actions", "enumerate", "--side", "left"];
    assert_eq!(code(&hopf(dir.path(), &args, None)), 3);
    assert_eq!(code(&hopf(dir.path(), &args, Some("100000"))), 0);
    let args = ["--budget", "100000", "actions", "enumerate", "--side", "left"];
    assert_eq!(code(&hopf(dir.path(), &args, Some("1"))), 3);
}

#[test]
fn stored_pairs_and_actions_replay() {
    let dir = TempDir::new().unwrap();
    assert_eq!(code(&hopf(dir.path(), &["matched-pairs", "find"], None)), 0);
    let report = json(&dir.path().join("matched-pairs-report.json"));
    assert_eq!(report["count"], 4);
    let pair = dir.path().join("matched-pairs/3c-anti-diagonal.json");
    let v = json(&pair);
    assert_eq!(v["schema"], "matched-pair/v1");
    assert_eq!(v["right_kind"], "anti-diagonal");

    let check = dir.path().join("check");
    assert_eq!(
        code(&hopf(
            &check,
            &["--load", pair.to_str().unwrap(), "matched-pairs", "check"],
            None
        )),
        0
    );
    assert_eq!(
        code(&hopf(
            &check,
            &["--load", pair.to_str().unwrap(), "product", "build"],
            None
        )),
        0
    );
    assert_eq!(json(&check.join("products/h32-2.json"))["dim"], 32);
    assert!(check.join("invariants/h32-2.json").exists());

    // The left action alone is a module coalgebra.
    let left = dir.path().join("left.json");
    fs::write(&left, serde_json::to_string(&v["left"]).unwrap()).unwrap();
    assert_eq!(
        code(&hopf(
            &check,
            &["--load", left.to_str().unwrap(), "actions", "check"],
            None
        )),
        0
    );

    // Swapping in the trivial right action breaks the pair.
    let trivial = json(&dir.path().join("matched-pairs/1a-trivial.json"));
    let mut broken = v.clone();
    broken["right"] = trivial["right"].clone();
    let broken_path = dir.path().join("broken.json");
    fs::write(&broken_path, serde_json::to_string(&broken).unwrap()).unwrap();
    let o = hopf(
        &check,
        &["--load", broken_path.to_str().unwrap(), "matched-pairs", "check"],
        None,
    );
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stdout).contains("fails on"));
    assert_eq!(
        code(&hopf(
            &check,
            &["--load", broken_path.to_str().unwrap(), "product", "build"],
            None
        )),
        1
    );
}

#[test]
fn theorem_check_markdown_report() {
    let dir = TempDir::new().unwrap();
    let o = hopf(dir.path(), &["theorem", "check", "--format", "markdown"], None);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let md = fs::read_to_string(dir.path().join("theorem-report.md")).unwrap();
    assert!(md.contains("- [pass] H32,2: zX=iXgz"), "{md}");
    assert!(
        md.contains("| ▷1a / trivial | H8⊗H4 | H8⊗H4 | pass | 15/15 | X⊗z | yes |"),
        "{md}"
    );
    assert!(md.contains("verdict: pass"));
    for stem in ["h8xh4", "h32-1", "h32-2", "h32-3"] {
        assert!(dir.path().join(format!("products/{stem}.json")).exists());
        assert!(dir.path().join(format!("invariants/{stem}.md")).exists());
    }
}
