use std::process::{Command, Output};

use critpair::residue::parse_set_literal;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_critpair"))
        .args(args)
        .env_remove("CRITPAIR_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(stdout(o).trim()).unwrap()
}

#[test]
fn exhaustive_cauchy_davenport_holds() {
    let o = run(&["verify", "cd", "--p", "11", "--exhaustive"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["conclusion"], "holds");
    assert_eq!(v["stats"]["instances"], 2047u64 * 2047);
}

#[test]
fn extremal_instance() {
    let o = run(&["extremal", "--m", "1", "--j", "1", "--p", "53"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["A"], "p=53:{0,1,2,7}");
    assert_eq!(v["doubling"], 9);
    assert_eq!(v["verified"], true);
}

#[test]
fn kappa_of_a_sidon_triple() {
    let o = run(&["kappa", "--p", "13", "--set", "{0,1,3}", "--k", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["kappa"], 3);
    assert_eq!(v["atom_size"], 2);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["sumset", "--set", "p=9:{0,1}", "--set", "p=9:{0,1}"][..],
        &["sumset", "--p", "13", "--set", "{0,1,1}"],
        &["verify", "no-such-statement", "--p", "13"],
        &["kappa", "--p", "13", "--set", "{0,1,3}", "--k", "0"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn vacuous_single_check_exits_three() {
    let o = run(&["verify", "main", "--p", "13", "--set", "{0,1,2,3}", "--set", "{0,1,2,3,4}"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(json(&o)["vacuous"], true);
}

#[test]
fn exhausted_budget_is_inconclusive_with_cursor() {
    let o = run(&["verify", "conjecture", "--p", "13", "--m", "0", "--budget", "100"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(json(&o)["cursor"].is_object(), "{}", stdout(&o));
}

#[test]
fn csv_has_fixed_header() {
    let o = run(&["verify", "cd", "--p", "13", "--set", "{0,1}", "--set", "{0,2}", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("statement_id,p,hypothesis,conclusion,witness_r,instances"));
    assert_eq!(lines.next(), Some("cd,13,satisfied,holds,,1"));
    assert_eq!(lines.next(), None);
}

#[test]
fn output_is_independent_of_thread_count() {
    let base = ["verify", "main", "--p", "53", "--instances", "300", "--seed", "5"];
    let outputs: Vec<Vec<u8>> = ["1", "3", "1"]
        .iter()
        .map(|t| {
            let mut args = base.to_vec();
            args.extend(["--threads", t]);
            let o = run(&args);
            assert_eq!(o.status.code(), Some(0));
            o.stdout
        })
        .collect();
    assert_eq!(outputs[0], outputs[1]);
    assert_eq!(outputs[0], outputs[2]);
}

#[test]
fn report_literals_parse_back() {
    let o = run(&["verify", "main", "--p", "53", "--set", "{0,1,2,4}", "--set", "{0,1,2,3,5}"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let sets = v["witness"]["sets"].as_object().unwrap();
    assert!(!sets.is_empty());
    for lit in sets.values() {
        let lit = lit.as_str().unwrap();
        parse_set_literal(lit).unwrap_or_else(|e| panic!("{lit}: {e}"));
    }
    let o = run(&["verify", "ls", "--set", "Z:{0,3}", "--set", "Z:{0,1,3}"]);
    let v = json(&o);
    for lit in v["witness"]["sets"].as_object().unwrap().values() {
        parse_set_literal(lit.as_str().unwrap()).unwrap();
    }
}
