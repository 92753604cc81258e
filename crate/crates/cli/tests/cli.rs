//! End-to-end tests of the binary: byte-exact golden outputs, exit-code
//! partitioning, and determinism across runs.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mindeg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn assert_golden(args: &[&str], expected_json: &str) {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {out:?}");
    assert_eq!(stdout(&out), format!("{expected_json}\n"), "{args:?}");
}

#[test]
fn profile_of_the_quasi_minimal_pair() {
    assert_golden(
        &["profile", "--type", "B4", "--lambda", "1,0,0,1", "--mu", "0,0,0,1"],
        r#"{"command":"profile","input":{"lambda":[1,0,0,1],"mu":[0,0,0,1],"type":"B4"},"result":{"case":"ac_4","modulus_data":[9],"nonzero_primes":[3],"nonzero_primes_upto":100}}"#,
    );
}

#[test]
fn profile_respects_the_prime_bound() {
    assert_golden(
        &["profile", "--type", "B2", "--lambda", "1,1", "--mu", "0,1", "--max-prime", "3"],
        r#"{"command":"profile","input":{"lambda":[1,1],"mu":[0,1],"type":"B2"},"result":{"case":"ac_2","modulus_data":[5],"nonzero_primes":[],"nonzero_primes_upto":3}}"#,
    );
}

#[test]
fn classify_reports_the_full_invariant_set() {
    assert_golden(
        &["classify", "--type", "B4", "--lambda", "1,0,0,1", "--mu", "0,0,0,1"],
        r#"{"command":"classify","input":{"lambda":[1,0,0,1],"mu":[0,0,0,1],"type":"B4"},"result":{"beta":[1,1,1,1],"case":"ac_4","codimension":8,"minimal":true,"singularity":"quasi-minimal ac_4","support":[0,1,2,3],"support_type":"B4"}}"#,
    );
}

#[test]
fn classify_answers_negatively_without_failing() {
    assert_golden(
        &["classify", "--type", "A1", "--lambda", "4", "--mu", "0"],
        r#"{"command":"classify","input":{"lambda":[4],"mu":[0],"type":"A1"},"result":{"minimal":false}}"#,
    );
}

#[test]
fn degenerations_below_the_g2_adjoint_weight() {
    assert_golden(
        &["degenerations", "--type", "G2", "--lambda", "0,1"],
        r#"{"command":"degenerations","input":{"lambda":[0,1],"type":"G2"},"result":[{"beta":[1,1],"case":"cg_2","codimension":4,"mu":[1,0],"singularity":"quasi-minimal cg_2","support":[0,1],"support_type":"G2"}]}"#,
    );
}

#[test]
fn stalk_polynomial_of_the_g2_quasi_minimal_pair() {
    assert_golden(
        &["ic", "--type", "G2", "--lambda", "1,1", "--mu", "2,0"],
        r#"{"command":"ic","input":{"lambda":[1,1],"mu":[2,0],"type":"G2"},"result":{"case":"ag_2","coefficients":[1,1],"rendered":"1 + q"}}"#,
    );
}

#[test]
fn nonsmoothness_witness_is_modular_for_ac4() {
    assert_golden(
        &["certify-nonsmooth", "--type", "B4", "--lambda", "1,0,0,1", "--mu", "0,0,0,1"],
        r#"{"command":"certify-nonsmooth","input":{"lambda":[1,0,0,1],"mu":[0,0,0,1],"type":"B4"},"result":{"prime":3,"witness_kind":"modular"}}"#,
    );
}

#[test]
fn distinguish_named_singularities() {
    assert_golden(
        &["distinguish", "--left", "a2", "--right", "ag2"],
        r#"{"command":"distinguish","input":{"left":"a2","right":"ag2"},"result":{"obstruction_kind":"modular","prime":3}}"#,
    );
    assert_golden(
        &["distinguish", "--left", "c2", "--right", "cg2"],
        r#"{"command":"distinguish","input":{"left":"c2","right":"cg2"},"result":{"obstruction_kind":"modular","prime":2}}"#,
    );
    assert_golden(
        &["distinguish", "--left", "an:4", "--right", "acn:4"],
        r#"{"command":"distinguish","input":{"left":"an:4","right":"acn:4"},"result":{"obstruction_kind":"modular","prime":3}}"#,
    );
    assert_golden(
        &["distinguish", "--left", "a2", "--right", "a2"],
        r#"{"command":"distinguish","input":{"left":"a2","right":"a2"},"result":{"obstruction_kind":"none"}}"#,
    );
    assert_golden(
        &["distinguish", "--left", "a2", "--right", "an:3"],
        r#"{"command":"distinguish","input":{"left":"a2","right":"an:3"},"result":{"obstruction_kind":"rational"}}"#,
    );
}

#[test]
fn torsion_audit_of_e8() {
    assert_golden(
        &["torsion-audit", "--type", "E8"],
        r#"{"command":"torsion-audit","input":{"type":"E8"},"result":{"bad":[2,3,5],"conjecture_consistent":true,"torsion":[2,3,5]}}"#,
    );
}

#[test]
fn gram_matrix_and_divisors() {
    assert_golden(
        &["gram", "--n", "2"],
        r#"{"command":"gram","input":{"n":2},"result":{"elementary_divisors":[1,5],"entries":[[2,1],[1,3]],"lambda":[1,1],"type":"B2"}}"#,
    );
}

#[test]
fn decomposition_number_queries() {
    assert_golden(
        &["decomp-ac", "--n", "3", "--ell", "7"],
        r#"{"command":"decomp-ac","input":{"ell":7,"n":3},"result":{"value":1}}"#,
    );
    assert_golden(
        &["decomp-ac", "--n", "3", "--ell", "5"],
        r#"{"command":"decomp-ac","input":{"ell":5,"n":3},"result":{"value":0}}"#,
    );
}

#[test]
fn linkage_bound_of_the_quasi_minimal_pair() {
    assert_golden(
        &["linkage", "--type", "B4", "--lambda", "1,0,0,1", "--mu", "0,0,0,1"],
        r#"{"command":"linkage","input":{"lambda":[1,0,0,1],"mu":[0,0,0,1],"type":"B4"},"result":{"bound":9}}"#,
    );
}

#[test]
fn usage_errors_exit_2_and_stay_off_stdout() {
    for args in [
        &["classify", "--type", "B4", "--lambda", "1,0,0", "--mu", "0,0,0,1"][..],
        &["decomp-ac", "--n", "3", "--ell", "4"][..],
        &["classify", "--type", "Q7", "--lambda", "1", "--mu", "0"][..],
        &["distinguish", "--left", "a2", "--right", "zz9"][..],
        &["classify", "--type", "B4", "--lambda", "x,0,0,1", "--mu", "0,0,0,1"][..],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
    let out = run(&["profile", "--type", "B4"]);
    assert_eq!(out.status.code(), Some(2), "missing required flags");
}

#[test]
fn domain_errors_exit_3_with_a_json_message() {
    for (args, fragment) in [
        (
            &["classify", "--type", "A2", "--lambda=-1,0", "--mu", "0,0"][..],
            "not dominant",
        ),
        (
            &["profile", "--type", "A2", "--lambda", "2,2", "--mu", "0,0"][..],
            "not a minimal degeneration",
        ),
        (
            &["linkage", "--type", "A2", "--lambda", "2,2", "--mu", "0,0"][..],
            "not a root",
        ),
        (&["gram", "--n", "1"][..], ""),
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(3), "{args:?}");
        let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("error document");
        let msg = doc["error"].as_str().expect("error message");
        assert!(msg.contains(fragment), "{args:?}: {msg}");
    }
}

#[test]
fn output_is_byte_stable_across_runs() {
    let args = ["profile", "--type", "B4", "--lambda", "1,0,0,1", "--mu", "0,0,0,1"];
    assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
}

#[test]
fn table_format_renders_the_same_document() {
    let out = run(&[
        "profile", "--type", "G2", "--lambda", "0,1", "--mu", "1,0", "--format", "table",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("command: profile"), "{text}");
    assert!(text.contains("  case: cg_2"), "{text}");
    assert!(text.contains("  nonzero_primes: 3"), "{text}");
}
