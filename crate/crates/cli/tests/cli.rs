use std::process::Command;

fn crown() -> Command {
    Command::new(env!("CARGO_BIN_EXE_crown"))
}

#[test]
fn verify_passes_and_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = crown()
        .args(["verify", "--n", "2", "--field", "fp:2", "--checks", "monoid,noniso", "--json"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["version"], 1);
    assert_eq!(doc["config"]["field"], "fp:2");
    let reports = doc["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 2);
    assert_eq!(reports[0]["check"], "monoid");
    assert_eq!(reports[1]["status"], "pass");
    assert_eq!(reports[1]["details"]["reconstruction"]["plus"]["minimal_points"], 10);
}

#[test]
fn level_one_skips_crown_checks() {
    let out = crown().args(["verify", "--n", "1", "--checks", "iso", "--json"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["reports"][0]["status"], "skipped");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["verify", "--n", "2", "--field", "fp:4"],
        vec!["verify", "--n", "2", "--checks", "nope"],
        vec!["verify", "--n", "0"],
        vec!["verify"],
        vec!["export", "--what", "pictures", "--n", "2", "--out", "/dev/null"],
    ] {
        let out = crown().args(&args).output().unwrap();
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn exports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    for what in ["graphs", "algebras", "matrices", "nat_trans"] {
        let a = dir.path().join(format!("{what}-a.json"));
        let b = dir.path().join(format!("{what}-b.json"));
        for p in [&a, &b] {
            let out = crown().args(["export", "--what", what, "--n", "2", "--out"]).arg(p).output().unwrap();
            assert!(out.status.success(), "{what}");
        }
        assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    }
    let text = std::fs::read_to_string(dir.path().join("algebras-a.json")).unwrap();
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["data"]["crown_plus"]["basis"].as_array().unwrap().len(), 36);
    let text = std::fs::read_to_string(dir.path().join("nat_trans-a.json")).unwrap();
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["data"]["eta_plus"]["r"], 1);
    assert_eq!(doc["data"]["eta_plus"]["components"].as_array().unwrap().len(), 1);
}

#[test]
fn info_lists_sizes() {
    let out = crown().args(["info", "--max-n", "2"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().nth(2).unwrap().split_whitespace().eq(["2", "18", "40", "36", "36"]));
}
