use std::path::PathBuf;

use deduct::cli::run;
use deduct::finfun::FinFun;
use deduct::gen::SplitEq;

fn deduct(args: &[&str]) -> (u8, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("deduct").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("deduct-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn eval_conj_json() {
    let (code, out, _) = deduct(&["eval-conj", "pr1 p1|p2", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), r#"{"src":6,"tgt":2,"table":[0,0,0,1,1,1]}"#);
}

#[test]
fn eval_disj_text() {
    let (code, out, _) = deduct(&["eval-disj", "(id 2 + fold 1)"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "4 -> 3: [0, 1, 2, 2]");
}

#[test]
fn equality_verdicts() {
    let (code, out, _) = deduct(&["eq-disj", "[in1 1 1, in2 1 1]", "id 2"]);
    assert_eq!((code, out.trim()), (0, "equal"));
    let (code, out, _) = deduct(&["eq-disj", "[in2 1 1, in1 1 1]", "id 2"]);
    assert_eq!((code, out.trim()), (0, "unequal"));
    let (code, out, _) = deduct(&["eq-conj", "<pr1 p1|p2, pr2 p1|p2>", "id p1*p2", "--format", "json"]);
    assert_eq!((code, out.trim()), (0, r#"{"equal":true}"#));
}

#[test]
fn represent_reports_a_non_function() {
    let r = r#"{"src":3,"tgt":4,"classes":[[0,3,5,6],[1],[2,4]]}"#;
    let (code, out, _) = deduct(&["represent", "3 2 2", "2 2 2 2", r]);
    assert_eq!(code, 0);
    let first = out.lines().next().unwrap();
    assert_eq!(first, "not appropriate; relation is not a function (source 8 has no image)");
    assert!(out.contains("(1,4)"));
}

#[test]
fn represent_a_function() {
    let r = r#"{"src":2,"tgt":4,"classes":[[0,2,4],[1,3,5]]}"#;
    let (code, out, _) = deduct(&["represent", "2 2", "2 2 2 2", r]);
    assert_eq!(code, 0);
    assert!(out.starts_with("appropriate; relation is a function\n"));
    assert!(out.contains("function 4 -> 16: [0, 5, 10, 15]"));
}

#[test]
fn translate_checks_itself() {
    let (code, out, _) = deduct(&["translate", "<pr2 p1|p2, pr1 p1|p2>"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 5);
    assert_eq!(out.lines().last().unwrap(), "F(image) = H(term): OK");
}

#[test]
fn synth_then_eval() {
    let (code, term, _) = deduct(&["synth", r#"{"src":3,"tgt":2,"table":[1,0,1]}"#]);
    assert_eq!(code, 0);
    let (code, out, _) = deduct(&["eval-disj", term.trim(), "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), r#"{"src":3,"tgt":2,"table":[1,0,1]}"#);
}

#[test]
fn gen_compose_takes_first_then_second() {
    let r1 = r#"{"src":2,"tgt":3,"classes":[[0,2,3],[1,4]]}"#;
    let r2 = r#"{"src":3,"tgt":2,"classes":[[0,3],[1,2,4]]}"#;
    let (code, out, _) = deduct(&["gen-compose", r1, r2, "--format", "json"]);
    assert_eq!(code, 0);
    let s: SplitEq = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(s, SplitEq::new(2, 2, vec![vec![0, 1, 2, 3]]).unwrap());
}

#[test]
fn primes_and_render() {
    let (code, out, _) = deduct(&["primes", "6"]);
    assert_eq!((code, out.trim()), (0, "2 3 5 7 11 13"));
    let (code, out, _) = deduct(&["render", "finfun", r#"{"src":2,"tgt":3,"table":[2,1]}"#]);
    assert_eq!(code, 0);
    assert_eq!(out, " source: 0 1\n  image: 2 1\n target: 0 1 2\n");
    let (code, out, _) = deduct(&["render", "spliteq", r#"{"src":1,"tgt":1,"classes":[[0,1]]}"#, "--format", "dot"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("graph spliteq {") && out.contains("s0 -- t0;"));
}

#[test]
fn inputs_may_be_files() {
    let term = scratch("term.txt", "pr1 p1|p2\n");
    let f = scratch("f.json", r#"{"src":2,"tgt":3,"table":[2,1]}"#);
    let (code, out, _) = deduct(&["eval-conj", term.to_str().unwrap()]);
    assert_eq!((code, out.trim()), (0, "6 -> 2: [0, 0, 0, 1, 1, 1]"));
    let (code, out, _) = deduct(&["synth", f.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(!out.trim().is_empty());
}

#[test]
fn exit_codes() {
    // domain failures
    assert_eq!(deduct(&["eval-disj", "(id 2 ; id 3)"]).0, 1);
    assert_eq!(deduct(&["eval-conj", "pr1 p0|p1"]).0, 1);
    assert_eq!(deduct(&["eval-disj", "(id 2"]).0, 1);
    assert_eq!(deduct(&["synth", r#"{"src":2,"tgt":1,"table":[0,3]}"#]).0, 1);
    assert_eq!(deduct(&["gen-compose", r#"{"src":1,"tgt":0,"classes":[[0]]}"#, r#"{"src":1,"tgt":0,"classes":[[0]]}"#]).0, 1);
    // usage failures
    assert_eq!(deduct(&[]).0, 2);
    assert_eq!(deduct(&["frobnicate"]).0, 2);
    assert_eq!(deduct(&["primes", "many"]).0, 2);
    assert_eq!(deduct(&["primes", "3", "--format", "dot"]).0, 2);
    let (code, _, err) = deduct(&["eval-disj", "(id 2 ; id 3)"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error: "));
}

#[test]
fn serialized_values_round_trip() {
    let f = FinFun::new(6, 2, vec![0, 0, 0, 1, 1, 1]).unwrap();
    let text = serde_json::to_string(&f).unwrap();
    assert_eq!(serde_json::from_str::<FinFun>(&text).unwrap(), f);
    let r = SplitEq::new(3, 4, vec![vec![0, 3, 5, 6], vec![1], vec![2, 4]]).unwrap();
    let text = serde_json::to_string(&r).unwrap();
    assert_eq!(serde_json::from_str::<SplitEq>(&text).unwrap(), r);
    assert!(serde_json::from_str::<SplitEq>(r#"{"src":1,"tgt":1,"classes":[[0]]}"#).is_err());
    assert!(serde_json::from_str::<FinFun>(r#"{"src":1,"tgt":1,"table":[1]}"#).is_err());
}
