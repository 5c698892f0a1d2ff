use std::process::{Command, Output};

fn dialg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dialg"))
        .args(args)
        .env_remove("DIALG_PRIME")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn expand_degree_three() {
    let o = dialg(&["expand", "(ab)c"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o).trim(),
        "[a]bc + [b]ac + 2 [c]ab + 2 [c]ba + a[b]c + b[a]c + c[a]b + c[b]a + 2 ab[c] + 2 ba[c] + ca[b] + cb[a]"
    );
}

#[test]
fn expand_csv_and_json() {
    let o = dialg(&["expand", "ab", "--format", "csv"]);
    assert_eq!(stdout(&o), "coefficient,monomial\n1,[a]b\n1,[b]a\n1,a[b]\n1,b[a]\n");
    let o = dialg(&["expand", "((ab)(cd))e", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 80);
    assert_eq!(terms[0]["monomial"], "[a]bcde");
    assert_eq!(terms[0]["coefficient"], 2);
}

#[test]
fn expand_rejects_bad_input() {
    let o = dialg(&["expand", "(aa)b", "--multilinear"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("repeated"));
    let o = dialg(&["expand", "(ab"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("position"));
}

#[test]
fn rank_degree_five() {
    let o = dialg(&["rank", "--degree", "5"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("rank 105 / 105 columns, nullity 0"));
}

#[test]
fn prime_validation_and_environment() {
    let o = dialg(&["--prime", "9", "rank", "--degree", "3"]);
    assert_eq!(o.status.code(), Some(2));
    let o = dialg(&["--prime", "5", "rank", "--degree", "5"]);
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_dialg"))
        .args(["rank", "--degree", "4", "--format", "json"])
        .env("DIALG_PRIME", "101")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["prime"], 101);
    assert_eq!(v["rank"], 15);
}

#[test]
fn x6_identities() {
    let o = dialg(&["degree6", "--pattern", "x6"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("rank 3, nullity 3"));
    assert!(out.contains("((x^2x^2)x)x - 2((x^2x)x^2)x + 4((x^2x)x)x^2 - 3(x^2x^2)x^2"));
}

#[test]
fn golden_mismatch_exits_nonzero_with_a_diff() {
    // scale 4 lifts overflow modulo 101
    let o = dialg(&["--prime", "101", "degree6"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("mismatch: row 4 entries"));
    assert!(err.contains("- expected:") && err.contains("+ got:"));
    let o = dialg(&["--prime", "101", "degree6", "--no-golden"]);
    assert!(o.status.success());
}

#[test]
fn degree7_table_is_deterministic() {
    let a = dialg(&["degree7", "--format", "csv", "--workers", "2"]);
    assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stderr));
    let b = dialg(&["degree7", "--format", "csv"]);
    assert_eq!(a.stdout, b.stdout);
    let out = stdout(&a);
    assert!(out.starts_with("lambda,7,61,52,51^2,43,421,41^3,3^21,32^2,321^2,31^4,2^31,2^21^3,21^5,1^7\n"));
    assert!(out.contains("\nnew,0,7,6,4,5,5,1,3,1,1,0,0,0,0,0\n"));
}

#[test]
fn selftest_passes() {
    let o = dialg(&["selftest"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("degree7: 8/8 checks"));
}
