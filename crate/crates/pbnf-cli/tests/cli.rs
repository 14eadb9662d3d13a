//! End-to-end command-line behavior: output shapes, exit codes, JSON schema
//! round trips, and the golden atomic table.

use pbnf_core::gf2poly::Polynomial;
use pbnf_core::Family;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["pbnf"];
    argv.extend_from_slice(args);
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = pbnf_cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn run_ok(args: &[&str]) -> String {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "stderr: {err}");
    out
}

fn json_lines(out: &str) -> Vec<serde_json::Value> {
    out.lines()
        .map(|l| serde_json::from_str(l).expect("line-delimited JSON"))
        .collect()
}

#[test]
fn taut_prints_verdict_and_polynomial() {
    let out = run_ok(&["taut", "(p & (p -> q)) -> q"]);
    assert_eq!(out, "tautology; polynomial 1\n");
}

#[test]
fn contra_and_check_exit_codes() {
    let (code, out, _) = run(&["contra", "p & !p", "--check"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("contradiction; polynomial 0"));

    let (code, out, _) = run(&["taut", "p & !p", "--check"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("contradiction"));

    let (code, _, _) = run(&["taut", "p | !p", "--check"]);
    assert_eq!(code, 0);

    // Without --check the negative verdict still exits 0.
    let (code, _, _) = run(&["taut", "p & !p"]);
    assert_eq!(code, 0);
}

#[test]
fn equiv_reports_difference() {
    let out = run_ok(&["equiv", "(p & q) | r", "p & (q | r)"]);
    assert!(out.contains("not equivalent"));
    assert!(out.contains("difference: pr+r"));

    let (code, _, _) = run(&["equiv", "p -> q", "!p | q", "--check"]);
    assert_eq!(code, 0);
    let (code, _, _) = run(&["equiv", "p", "q", "--check"]);
    assert_eq!(code, 1);
}

#[test]
fn entails_prints_certificate_or_countermodel() {
    let out = run_ok(&["entails", "(p -> q) -> (q -> p)", "q -> p"]);
    assert!(out.contains("entails"));
    assert!(out.contains("certificate: pq+q+1"));

    let (code, out, _) = run(&["entails", "p | q", "p & q", "--check"]);
    assert_eq!(code, 1);
    assert!(out.contains("does not entail"));
    assert!(out.contains("countermodel: "));
}

#[test]
fn anf_with_family_flag() {
    assert_eq!(run_ok(&["anf", "p -> q"]), "pq+p+1\n");
    assert_eq!(run_ok(&["anf", "p -> q", "--family", "g(p',q',0)"]), "pq+q\n");
    assert_eq!(run_ok(&["anf", "cd(p,q,r)"]), "pq+qr+r\n");
}

#[test]
fn pullback_names_operators() {
    assert_eq!(run_ok(&["pullback", "p+q+1", "--letters", "p,q"]), "<->\n");
    assert_eq!(run_ok(&["pullback", "pq+1"]), "nand\n");
    let out = run_ok(&["pullback", "pq+pr+qr", "--letters", "p,q,r"]);
    assert_eq!(out, "vector 11101000; named maj\n");
}

#[test]
fn dbnf_renders_phrases() {
    assert_eq!(run_ok(&["dbnf", "p | !p"]), "p | !p\n");
    assert_eq!(run_ok(&["dbnf", "p <-> q"]), "p & q | !p & !q\n");
    let out = run_ok(&["dbnf", "p & !p"]);
    assert!(out.contains("no phrases"));
}

#[test]
fn tt_renders_header_and_rows() {
    let out = run_ok(&["tt", "p <-> q"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "p q | value");
    assert_eq!(lines[1], "1 1 | 1");
    assert_eq!(lines[2], "1 0 | 0");
    assert_eq!(lines.len(), 5);
}

#[test]
fn table_matches_golden_transcription() {
    let out = run_ok(&["table"]);
    assert_eq!(out, include_str!("golden/table.txt"));
}

#[test]
fn table_single_family_column() {
    let out = run_ok(&["table", "--family", "pullback"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 20); // header + 19 rows
    assert!(lines[0].contains("g(p',q',1)"));
    assert!(lines.iter().any(|l| l.starts_with("p nor q") && l.ends_with("pq")));
}

#[test]
fn conjugates_report() {
    let out = run_ok(&["conjugates", "p -> q"]);
    assert_eq!(out.lines().count(), 4);
    assert!(out.contains("conditional"));
    assert!(out.contains("contrapositive"));
    assert!(out.contains("g(p',q',0): pq+q"));

    let (code, _, err) = run(&["conjugates", "p & q"]);
    assert_eq!(code, 2);
    assert!(err.contains("principal operator"));
}

#[test]
fn matrix_views() {
    let out = run_ok(&["matrix", "--op", "nor"]);
    assert!(out.contains("[0 0 / 0 1]"));
    assert!(out.contains("det 0"));
    assert!(out.contains("idempotent true"));

    let out = run_ok(&["matrix", "--classify"]);
    let first = out.lines().next().unwrap();
    assert!(first.contains("nor"));
    assert!(!first.contains("nand"));

    let out = run_ok(&["matrix", "--generate"]);
    assert!(out.contains("8 matrices"));

    let (code, _, err) = run(&["matrix"]);
    assert_eq!(code, 2);
    assert!(err.contains("requires one of"));
}

#[test]
fn selector_arithmetic() {
    let out = run_ok(&["selectors"]);
    assert_eq!(out.lines().count(), 6);
    assert!(out.contains("p1 1100"));

    let out = run_ok(&["selectors", "--add", "p1", "q1"]);
    assert_eq!(out, "p1 + q1 = 0110 (p2)\n");
    let out = run_ok(&["selectors", "--add", "p1", "p3"]);
    assert!(out.contains("1111 (constant, invalid as selector)"));

    let out = run_ok(&["selectors", "--apply", "->", "p3", "q2"]);
    assert_eq!(out, "-> on (p3, q2) = 1101 (<-)\n");
}

#[test]
fn dual_operator() {
    assert_eq!(run_ok(&["dual", "--op", "&"]), "|\n");
    assert_eq!(run_ok(&["dual", "--op", "->"]), "nrimp\n");
    assert_eq!(run_ok(&["dual", "--op", "<->"]), "^\n");
}

#[test]
fn parse_errors_exit_2() {
    let (code, _, err) = run(&["taut", "p &"]);
    assert_eq!(code, 2);
    assert!(err.contains("syntax error"));

    let (code, _, err) = run(&["anf", "p", "--family", "g(p,q,2)"]);
    assert_eq!(code, 2);
    assert!(err.contains("malformed family"));

    let (code, _, err) = run(&["pullback", "p+"]);
    assert_eq!(code, 2);
    assert!(err.contains("polynomial syntax error"));

    let (code, _, _) = run(&["frobnicate", "p"]);
    assert_eq!(code, 2);
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("pbnf"));
}

#[test]
fn letter_cap_applies_to_enumeration_commands() {
    // Nine letters exceed the default cap of eight.
    let nine = "a & b & c & d & e & f & g & h & i";
    let (code, _, err) = run(&["tt", nine]);
    assert_eq!(code, 2);
    assert!(err.contains("PBNF_MAX_LETTERS"));
    let (code, _, _) = run(&["dbnf", nine]);
    assert_eq!(code, 2);

    // Eight letters are fine.
    let eight = "a & b & c & d & e & f & g & h";
    let (code, _, _) = run(&["tt", eight]);
    assert_eq!(code, 0);
}

#[test]
fn json_outputs_round_trip() {
    // Verdict schema: verdict/family/polynomial, optional witness.
    let out = run_ok(&["taut", "(p & q) | r", "--format", "json"]);
    let value = &json_lines(&out)[0];
    assert_eq!(value["verdict"], "contingent");
    let family: Family = serde_json::from_value(value["family"].clone()).unwrap();
    assert_eq!(family, Family::normal());
    let polynomial: Polynomial = serde_json::from_value(value["polynomial"].clone()).unwrap();
    assert_eq!(polynomial, Polynomial::parse("pq+pqr+r").unwrap());
    assert!(value["witness"].is_object());

    // anf carries both the list form and the canonical text.
    let out = run_ok(&["anf", "p -> q", "--format", "json"]);
    let value = &json_lines(&out)[0];
    let polynomial: Polynomial = serde_json::from_value(value["polynomial"].clone()).unwrap();
    assert_eq!(polynomial.canonical_text(), value["text"].as_str().unwrap());

    // equiv, entails.
    let out = run_ok(&["equiv", "(p & q) | r", "p & (q | r)", "--format", "json"]);
    let value = &json_lines(&out)[0];
    assert_eq!(value["equivalent"], false);
    let difference: Polynomial = serde_json::from_value(value["difference"].clone()).unwrap();
    assert_eq!(difference, Polynomial::parse("pr+r").unwrap());

    let out = run_ok(&["entails", "p", "p | q", "--format", "json"]);
    let value = &json_lines(&out)[0];
    assert_eq!(value["entails"], true);

    // Truth table: order plus one object per row.
    let out = run_ok(&["tt", "p -> q", "--format", "json"]);
    let value = &json_lines(&out)[0];
    assert_eq!(value["order"], serde_json::json!(["p", "q"]));
    assert_eq!(value["rows"].as_array().unwrap().len(), 4);
    assert_eq!(value["rows"][1]["assignment"]["q"], 0);
    assert_eq!(value["rows"][1]["value"], 0);

    // Table: one object per row with one column per family.
    let out = run_ok(&["table", "--format", "json"]);
    let rows = json_lines(&out);
    assert_eq!(rows.len(), 19);
    assert_eq!(rows[0]["op"], "p");
    assert_eq!(rows[0]["columns"].as_array().unwrap().len(), 4);

    // Pullback, selectors, matrix, dual.
    let out = run_ok(&["pullback", "p+q+1", "--format", "json"]);
    assert_eq!(json_lines(&out)[0]["operator"], "<->");

    let out = run_ok(&["selectors", "--add", "p1", "q1", "--format", "json"]);
    assert_eq!(json_lines(&out)[0]["selector"], "p2");

    let out = run_ok(&["matrix", "--op", "nor", "--format", "json"]);
    let value = &json_lines(&out)[0];
    assert_eq!(value["matrix"], serde_json::json!([0, 0, 0, 1]));
    assert_eq!(value["idempotent"], true);

    let out = run_ok(&["dual", "--op", "&", "--format", "json"]);
    assert_eq!(json_lines(&out)[0]["dual"], "|");

    let out = run_ok(&["dbnf", "p <-> q", "--format", "json"]);
    let value = &json_lines(&out)[0];
    assert_eq!(value["dbnf"], "p & q | !p & !q");
    assert_eq!(value["vector"]["bits"], "1001");

    let out = run_ok(&["conjugates", "p -> q", "--format", "json"]);
    let rows = json_lines(&out);
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[0]["name"], "conditional");
}

#[test]
fn env_var_raises_and_lowers_the_cap() {
    std::env::set_var("PBNF_MAX_LETTERS", "2");
    let (code, _, err) = run(&["tt", "cd(p,q,r)"]);
    std::env::remove_var("PBNF_MAX_LETTERS");
    assert_eq!(code, 2);
    assert!(err.contains("cap of 2"));
}
