//! End-to-end tests driving the compiled binary: subcommand surfaces,
//! output formats and exit codes.

use std::process::{Command, Output};

fn trapeze(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trapeze"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn classify_prints_a_table_and_exits_zero() {
    let out = trapeze(&["classify", "aaababa"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("trapezoidal  yes"));
    assert!(text.contains("sturmian     no"));
    assert!(text.contains("closedness   Open"));
}

#[test]
fn classify_json_has_stable_fields() {
    let out = trapeze(&["classify", "aabaab", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["trapezoidal"], true);
    assert_eq!(v["primitive"], false);
    assert_eq!(v["closedness"], "Closed");
    assert_eq!(v["parameters"]["H"], 4);
    assert_eq!(v["parameters"]["K"], 4);
}

#[test]
fn classify_rejects_bad_input_with_exit_2() {
    let out = trapeze(&["classify", "abc"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("alphabet"));

    let out = trapeze(&["classify", ""]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn profile_json_matches_the_documented_schema() {
    let out = trapeze(&["profile", "aaababa", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["word"], "aaababa");
    assert_eq!(v["counts"], serde_json::json!([1, 2, 3, 4, 4, 3, 2, 1, 0]));
    assert_eq!(v["H"], 3);
    assert_eq!(v["M"], 4);
    assert_eq!(v["specials"]["left"][3], serde_json::json!(["aba"]));
    assert_eq!(v["specials"]["right"][2], serde_json::json!(["aa"]));
}

#[test]
fn profile_of_unary_word_has_null_parameters() {
    let out = trapeze(&["profile", "aaaa", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v["H"].is_null());
    assert_eq!(v["counts"], serde_json::json!([1, 1, 1, 1, 1, 0]));
}

#[test]
fn profile_ascii_graph_draws_columns() {
    let out = trapeze(&["profile", "aaababa", "--ascii-graph"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("  4 |   ##"));
    assert!(text.contains("+---------"));
}

#[test]
fn factorize_reports_the_split() {
    let out = trapeze(&["factorize", "aaababa"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("p|q = aaa|baba"));
    assert!(text.contains("f = aaa, g = bab"));

    let out = trapeze(&["factorize", "aaababa", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["p"], "aaa");
    assert_eq!(v["q"], "baba");
    assert_eq!(v["z_f_rev"], "a");
    assert_eq!(v["z_g"], "ba");
    assert_eq!(v["pair"]["u"], "a");
}

#[test]
fn factorize_rejects_sturmian_words_with_exit_2() {
    let out = trapeze(&["factorize", "aabaa"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("Sturmian"));
}

#[test]
fn census_csv_is_deterministic_and_documented() {
    let a = trapeze(&["census", "--max", "8", "--csv"]);
    let b = trapeze(&["census", "--max", "8", "--csv"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    let text = stdout(&a);
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("# unary words"));
    assert_eq!(
        lines.next().unwrap(),
        "length,total_binary,trapezoidal,sturmian,trapezoidal_non_sturmian,open_trapezoidal,closed_trapezoidal,open_sturmian,rich,trapezoidal_palindromes"
    );
    assert_eq!(lines.next().unwrap(), "1,2,0,2,0,0,0,0,2,0");

    let partitioned = trapeze(&["census", "--max", "8", "--csv", "--workers", "4"]);
    assert_eq!(stdout(&a), stdout(&partitioned));
}

#[test]
fn census_json_carries_the_note() {
    let out = trapeze(&["census", "--max", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v["note"].as_str().unwrap().contains("unary"));
    assert_eq!(v["rows"][1]["trapezoidal"], 2);
}

#[test]
fn verify_passes_and_exits_zero() {
    let out = trapeze(&["verify", "--max", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("prop4_equiv"));
    assert!(text.contains("17/17 statements passed"));
}

#[test]
fn verify_only_filters_statements() {
    let out = trapeze(&[
        "verify",
        "--max",
        "7",
        "--only",
        "thm15_pal_closed,lemma11_open_primitive",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("thm15_pal_closed"));
    assert!(text.contains("lemma11_open_primitive"));
    assert!(!text.contains("prop1_shape"));
    assert!(text.contains("2/2 statements passed"));
}

#[test]
fn verify_rejects_unknown_statement_ids() {
    let out = trapeze(&["verify", "--max", "5", "--only", "thm99_nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("unknown statement id"));
}

#[test]
fn verify_rejects_budget_overrun() {
    let out = trapeze(&["verify", "--max", "21"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn explore_lists_open_sturmian_words_only() {
    let out = trapeze(&["explore-open-sturmian", "--max", "6", "--csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(
        text.lines().next().unwrap(),
        "word,H,K,L,R,pi,lrp,longest_right_special"
    );
    assert!(text.contains("\naaabaa,"));
    assert!(!text.contains("\naabaa,"), "closed word must be absent");
    assert!(
        !text.contains("\naaabab,"),
        "unbalanced word must be absent"
    );
}
