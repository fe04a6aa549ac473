//! End-to-end tests of the `tsg` binary: spawn the real executable and
//! check output bytes and exit codes.

use std::io::Write;
use std::process::{Command, Output};

fn tsg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tsg"))
        .args(args)
        .env_remove("TSG_NODE_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn verify_paper_full_suite_passes() {
    let out = tsg(&["verify-paper"]);
    let text = stdout_of(&out);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr_of(&out));
    assert!(text.contains(" passed, 0 failed, 0 skipped"), "{text}");
    assert!(!text.contains("Fail "), "{text}");
}

#[test]
fn verify_paper_scope_filter_emits_clean_json() {
    let out = tsg(&["verify-paper", "--scope", "p41", "--json"]);
    assert_eq!(exit_code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("valid JSON");
    assert_eq!(value["failed"], 0);
    assert_eq!(value["skipped"], 0);
    let claims = value["claims"].as_array().expect("claims array");
    assert!(!claims.is_empty());
    for claim in claims {
        assert_eq!(claim["citation"]["location"], "p41");
        assert_eq!(claim["status"], "Pass");
        assert!(claim["claim_id"].is_string());
        assert!(claim["expected"].is_string());
        assert!(claim["computed"].is_string());
    }
}

#[test]
fn verify_paper_rejects_unknown_scope() {
    let out = tsg(&["verify-paper", "--scope", "nonsense"]);
    assert_eq!(exit_code(&out), 2);
}

fn mutated_registry(mutate: impl FnOnce(&mut serde_json::Value)) -> tempfile::NamedTempFile {
    let mut doc: serde_json::Value =
        serde_json::from_str(include_str!("../../core/src/registry.json")).expect("valid JSON");
    mutate(&mut doc);
    let mut file = tempfile::NamedTempFile::new().expect("temp file");
    file.write_all(doc.to_string().as_bytes()).expect("write");
    file.flush().expect("flush");
    file
}

fn graph_entry<'a>(
    doc: &'a mut serde_json::Value,
    n: u64,
    k: u64,
) -> &'a mut serde_json::Value {
    doc["graphs"]
        .as_array_mut()
        .expect("graphs array")
        .iter_mut()
        .find(|g| g["n"] == n && g["k"] == k)
        .expect("graph present")
}

#[test]
fn mutating_a_recorded_cycle_fails_verification() {
    // valid cycle notation that is not an automorphism: the registry must
    // refuse to load, the sentinel claim must fail, dependents skip
    let file = mutated_registry(|doc| {
        let entry = graph_entry(doc, 10, 3);
        entry["automorphisms"][0]["cycles"] = serde_json::Value::String("(u1 u2)".to_string());
    });
    let out = tsg(&[
        "verify-paper",
        "--scope",
        "registry",
        "--registry-file",
        file.path().to_str().expect("utf-8 path"),
    ]);
    let text = stdout_of(&out);
    assert_eq!(exit_code(&out), 1, "{text}");
    assert!(text.contains("Fail"), "{text}");
    assert!(text.contains("registry-valid"), "{text}");
    assert!(text.contains("Skipped"), "{text}");
}

#[test]
fn shrinking_a_generating_set_fails_verification() {
    // every entry stays a genuine automorphism, but the recorded full
    // generating set no longer closes to the full group
    let file = mutated_registry(|doc| {
        let entry = graph_entry(doc, 10, 3);
        entry["full_group"] = serde_json::json!(["alpha@aut"]);
    });
    let out = tsg(&[
        "verify-paper",
        "--scope",
        "registry",
        "--registry-file",
        file.path().to_str().expect("utf-8 path"),
    ]);
    let text = stdout_of(&out);
    assert_eq!(exit_code(&out), 1, "{text}");
    assert!(text.contains("Fail"), "{text}");
    assert!(text.contains("registry-closures"), "{text}");
}

#[test]
fn aut_runs_both_routes_and_agrees() {
    let out = tsg(&["aut", "--n", "7", "--k", "2"]);
    let text = stdout_of(&out);
    assert_eq!(exit_code(&out), 0);
    assert!(text.contains("P(7,2): order 14, type D_7"), "{text}");
    assert!(text.contains("(agree)"), "{text}");
}

#[test]
fn aut_json_carries_both_route_orders() {
    let out = tsg(&["aut", "--n", "4", "--k", "1", "--json"]);
    assert_eq!(exit_code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("valid JSON");
    assert_eq!(value["n"], 4);
    assert_eq!(value["k"], 1);
    assert_eq!(value["order"], 48);
    assert_eq!(value["type"], "S_4 x Z_2");
    assert_eq!(value["search_order"], 48);
    assert_eq!(value["closure_order"], 48);
    assert_eq!(value["agree"], true);
    assert!(!value["generators"].as_array().expect("array").is_empty());
}

#[test]
fn aut_oracle_flag_skips_the_closure_route() {
    let out = tsg(&["aut", "--n", "10", "--k", "2", "--oracle", "--json"]);
    assert_eq!(exit_code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("valid JSON");
    assert_eq!(value["type"], "A_5 x Z_2");
    assert_eq!(value["search_order"], 120);
    assert_eq!(value["closure_order"], serde_json::Value::Null);
    assert_eq!(value["agree"], serde_json::Value::Null);
}

#[test]
fn aut_route_flags_conflict() {
    let out = tsg(&["aut", "--n", "7", "--k", "2", "--oracle", "--registry"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn aut_rejects_inadmissible_pairs() {
    let out = tsg(&["aut", "--n", "6", "--k", "3"]);
    assert_eq!(exit_code(&out), 1);
    assert!(stderr_of(&out).contains("not admissible"));
}

#[test]
fn classify_by_label_reports_the_obstruction() {
    let out = tsg(&["classify", "--n", "13", "--k", "5", "--group", "Z4", "--json"]);
    assert_eq!(exit_code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("valid JSON");
    let rows = value.as_array().expect("array of verdicts");
    assert_eq!(rows.len(), 1);
    let row = &rows[0];
    assert_eq!(row["n"], 13);
    assert_eq!(row["k"], 5);
    assert_eq!(row["subgroup_label"], "Z_4");
    assert_eq!(row["class_size"], 13);
    assert_eq!(row["realizable"], "yes");
    assert_eq!(row["positively_realizable"], "no");
    assert!(row["witness"]["kind"].is_string());
    assert!(row["witness"]["element"].is_string());
    assert!(!row["citations"].as_array().expect("citations").is_empty());
}

#[test]
fn classify_by_generators_identifies_the_subgroup() {
    let out = tsg(&[
        "classify",
        "--n",
        "10",
        "--k",
        "3",
        "--gens",
        "(u1 u9)(u2 u8)(u3 u7)(u4 u6)(v1 v9)(v2 v8)(v3 v7)(v4 v6)",
        "--json",
    ]);
    assert_eq!(exit_code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("valid JSON");
    let rows = value.as_array().expect("array of verdicts");
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["subgroup_label"], "Z_2");
    assert_eq!(rows[0]["realizable"], "yes");
    assert_eq!(rows[0]["positively_realizable"], "yes");
    assert_eq!(rows[0]["witness"], serde_json::Value::Null);
}

#[test]
fn classify_rejects_non_automorphism_generators() {
    let out = tsg(&["classify", "--n", "10", "--k", "3", "--gens", "(u1 u2)"]);
    assert_eq!(exit_code(&out), 1);
    assert!(!stderr_of(&out).is_empty());
}

#[test]
fn classify_requires_exactly_one_subgroup_spec() {
    let none = tsg(&["classify", "--n", "7", "--k", "2"]);
    assert_eq!(exit_code(&none), 2);
    let both = tsg(&["classify", "--n", "7", "--k", "2", "--all", "--group", "Z4"]);
    assert_eq!(exit_code(&both), 2);
}

#[test]
fn classify_reports_missing_subgroup_types() {
    let out = tsg(&["classify", "--n", "7", "--k", "2", "--group", "Z_5"]);
    assert_eq!(exit_code(&out), 1);
    assert!(stderr_of(&out).contains("no subgroup"));
}

#[test]
fn subgroups_filter_keeps_only_matching_classes() {
    let out = tsg(&["subgroups", "--n", "8", "--k", "3", "--filter", "Z_4", "--json"]);
    assert_eq!(exit_code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("valid JSON");
    assert_eq!(value["group_order"], 96);
    let classes = value["classes"].as_array().expect("classes array");
    assert_eq!(classes.len(), 2);
    for class in classes {
        assert_eq!(class["type"], "Z_4");
        assert_eq!(class["order"], 4);
        assert!(!class["generators"].as_array().expect("array").is_empty());
    }
}

#[test]
fn export_dot_is_byte_deterministic() {
    let first = tsg(&["export", "--n", "6", "--k", "2", "--format", "dot"]);
    let second = tsg(&["export", "--n", "6", "--k", "2", "--format", "dot"]);
    assert_eq!(exit_code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
    let text = stdout_of(&first);
    assert!(text.contains("graph petersen_6_2 {"), "{text}");
    assert_eq!(text.matches(" -- ").count(), 18, "P(6,2) has 18 edges");
}

#[test]
fn export_json_matches_the_graph_schema() {
    let out = tsg(&["export", "--n", "10", "--k", "3", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("valid JSON");
    assert_eq!(value["n"], 10);
    assert_eq!(value["k"], 3);
    assert_eq!(value["vertices"].as_array().expect("vertices").len(), 20);
    let edges = value["edges"].as_array().expect("edges");
    assert_eq!(edges.len(), 30);
    for edge in edges {
        let class = edge["class"].as_str().expect("class string");
        assert!(matches!(class, "outer" | "inner" | "spoke"), "{class}");
    }
}

#[test]
fn export_csv_verdicts_lists_every_class() {
    let out = tsg(&["export", "--n", "7", "--k", "2", "--format", "csv", "--verdicts"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "n,k,subgroup_label,class_size,order,realizable,positively_realizable,witness"
    );
    // D_7 has subgroup classes D_7, Z_7, Z_2, and the trivial group
    assert_eq!(lines.len(), 5, "{text}");
    assert_eq!(lines[1], "7,2,D_7,1,14,yes,yes,-");
}

#[test]
fn export_verdicts_needs_csv() {
    let out = tsg(&["export", "--n", "7", "--k", "2", "--format", "dot", "--verdicts"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn export_writes_the_output_file() {
    let dir = tempfile::tempdir().expect("temp dir");
    let path = dir.path().join("graph.dot");
    let out = tsg(&[
        "export",
        "--n",
        "6",
        "--k",
        "2",
        "--format",
        "dot",
        "--output",
        path.to_str().expect("utf-8 path"),
    ]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_of(&out).is_empty());
    let written = std::fs::read_to_string(&path).expect("file written");
    let streamed = stdout_of(&tsg(&["export", "--n", "6", "--k", "2", "--format", "dot"]));
    assert_eq!(written, streamed);
}

#[test]
fn node_budget_env_var_limits_the_search() {
    let out = Command::new(env!("CARGO_BIN_EXE_tsg"))
        .args(["aut", "--n", "10", "--k", "3", "--oracle"])
        .env("TSG_NODE_BUDGET", "1")
        .output()
        .expect("binary runs");
    assert_eq!(exit_code(&out), 1);
    assert!(stderr_of(&out).contains("budget"));
}

#[test]
fn node_budget_env_var_must_be_a_number() {
    let out = Command::new(env!("CARGO_BIN_EXE_tsg"))
        .args(["aut", "--n", "7", "--k", "2"])
        .env("TSG_NODE_BUDGET", "banana")
        .output()
        .expect("binary runs");
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_of(&out).contains("TSG_NODE_BUDGET"));
}
