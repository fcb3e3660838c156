use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

use semistar_cli::session::{FracExpr, IdealExpr, PolyList, Query, Stmt};
use semistar_cli::{execute, parse_session, succeeded, ExecConfig, Status};

fn run(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_semistar"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json_records(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

const EXAMPLE: &str = "\
ring R = QQ[x,y,z]/(x^2, x*y);
ideal I = (x, y*z);
print standardized_radical(I);
print intersect(I, (1));
";

#[test]
fn standardized_radical_json() {
    let out = run(&["--format", "json"], EXAMPLE);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let recs = json_records(&out);
    assert_eq!(recs.len(), 2);
    let r = &recs[0];
    assert_eq!(r["status"], "ok");
    assert_eq!(r["exactness"], "exact");
    assert_eq!(r["seed"], 0x5eed);
    assert_eq!(r["payload"]["generators"], serde_json::json!(["x", "y"]));
    let comps = r["payload"]["components"].as_array().unwrap();
    assert_eq!(comps[0]["classification"], "all-zero-divisors");
    assert_eq!(comps[1]["classification"], "contains-regular");
    assert_eq!(comps[1]["witness"], "z");
    assert_eq!(recs[1]["payload"]["generators"], serde_json::json!(["x", "y*z"]));
}

#[test]
fn output_is_deterministic() {
    let session = format!(
        "{EXAMPLE}ring S = QQ[x,y];\ncheck axioms(radical, samples=15);\ncheck correspondence(identity, samples=4);\n"
    );
    let a = run(&["--format", "json", "--seed", "7"], &session);
    let b = run(&["--format", "json", "--seed", "7"], &session);
    assert_eq!(a.stdout, b.stdout);
    let recs = json_records(&a);
    assert!(recs.iter().all(|r| r["seed"] == 7));
}

#[test]
fn failed_check_sets_exit_status() {
    let out = run(&["--format", "json"], "ring R = QQ[x,y];\ncheck axioms(radical, samples=10);\n");
    assert_eq!(out.status.code(), Some(1));
    let rec = &json_records(&out)[0];
    assert_eq!(rec["status"], "failed");
    let standard = rec["payload"]["verdicts"].as_array().unwrap().iter().find(|v| v["axiom"] == "standard").unwrap();
    assert_eq!(standard["verdict"], "failed");
    assert_eq!(standard["witness"]["w"], "x");
    assert_eq!(standard["witness"]["I"], serde_json::json!(["x"]));
    assert!(rec["witnesses"].is_array());
}

#[test]
fn capability_errors_are_reported_at_execution() {
    let out = run(&["--format", "json"], "ring R = QQ[x,y];\nclosure f = frobenius(e_max=3);\nprint (x);\n");
    assert_eq!(out.status.code(), Some(1));
    let recs = json_records(&out);
    assert_eq!(recs.len(), 2);
    assert_eq!(recs[0]["status"], "error");
    assert!(recs[0]["payload"]["error"].as_str().unwrap().contains("capability"));
    assert_eq!(recs[1]["status"], "ok");
}

#[test]
fn fail_fast_stops_early() {
    let session = "ring R = QQ[x,y];\nclosure f = frobenius;\nprint (x);\n";
    let out = run(&["--format", "json", "--fail-fast"], session);
    assert_eq!(json_records(&out).len(), 1);
}

#[test]
fn parse_errors_exit_with_diagnostic() {
    let out = run(&[], "ring R = QQ[x,y];\nideal I = (x, q);\n");
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2, column 15"), "{err}");
    assert!(err.contains("unknown variable 'q'"), "{err}");

    let out = run(&[], "ring R = QQ[x,y];\nprint member(radical, x, K);\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("undefined name 'K'"));
}

#[test]
fn non_monomial_without_decomposition_is_unsupported() {
    let session = "ring R = QQ[x,y];\nideal I = (x + y^2);\nprint standardized_radical(I);\n";
    let recs = execute(&parse_session(session).unwrap(), &ExecConfig::default());
    assert_eq!(recs[0].status, Status::Error);
    assert!(recs[0].payload["error"].as_str().unwrap().contains("unsupported"));
}

#[test]
fn supplied_decomposition_is_verified() {
    let good = "ring R = QQ[x,y];\nideal I = (x^2 - y^3);\n\
                print standardized_radical(I) with decomposition [((x^2 - y^3), (x^2 - y^3))];\n";
    let recs = execute(&parse_session(good).unwrap(), &ExecConfig::default());
    assert_eq!(recs[0].status, Status::Ok, "{:?}", recs[0].payload);
    assert_eq!(recs[0].exactness, "assumed primary components");

    let bad = "ring R = QQ[x,y];\nideal I = (x*y);\n\
               print standardized_radical(I) with decomposition [((x), (x))];\n";
    let recs = execute(&parse_session(bad).unwrap(), &ExecConfig::default());
    assert_eq!(recs[0].status, Status::Error);
    assert!(recs[0].payload["error"].as_str().unwrap().contains("intersect"));
}

#[test]
fn semistar_membership() {
    let session = "ring R = QQ[x,y];\nfrac A = (x^2, y^2) / y;\n\
                   print member(b, x, A);\nprint member(trivial, x, A);\n\
                   print member(sigma_f(identity), x^2/y, A);\nprint kappa(sigma_f(integral), (x^2, y^2));\n";
    let recs = execute(&parse_session(session).unwrap(), &ExecConfig::default());
    let values: Vec<&Value> = recs.iter().map(|r| &r.payload).collect();
    assert_eq!(values[0]["value"], true);
    assert_eq!(values[1]["value"], false);
    assert_eq!(values[2]["value"], true);
    assert_eq!(values[3]["generators"], serde_json::json!(["x^2", "x*y", "y^2"]));
    assert!(succeeded(&recs));
}

#[test]
fn printed_values_parse_back_to_equal_objects() {
    let session = "ring R = GF(101)[x,y,z]/(x^2, x*y);\nideal I = (x, y*z);\n\
                   print power(sum(I, (z^2)), 2);\nprint standardized_radical(I);\n\
                   frac A = (x*z, z^2) / z;\nprint A;\n";
    let recs = execute(&parse_session(session).unwrap(), &ExecConfig::default());
    let ideal_text = recs[0].lines[0].clone();
    let rad_text = recs[1].lines[0].clone();
    let frac_text = recs[2].lines[0].clone();
    let check = format!(
        "ring R = GF(101)[x,y,z]/(x^2, x*y);\nideal I = (x, y*z);\nideal P = {ideal_text};\n\
         ideal Q = {rad_text};\nfrac B = {frac_text};\n\
         print colon_ideal(P, power(sum(I, (z^2)), 2));\nprint colon_ideal(power(sum(I, (z^2)), 2), P);\n\
         print colon_ideal(Q, (x, y));\nprint colon_ideal((x, y), Q);\nprint B;\n"
    );
    let recs = execute(&parse_session(&check).unwrap(), &ExecConfig::default());
    for r in &recs[..4] {
        assert_eq!(r.lines[0], "(1)", "{}", r.command);
    }
    assert_eq!(recs[4].lines[0], frac_text);
}

#[test]
fn declarations_round_trip_through_display() {
    let s = parse_session("ring R = QQ[x,y];\nfrac A = (x^2, y^2) / y;\nideal I = intersect((x), (y));\n").unwrap();
    assert_eq!(
        s.statements[1].stmt,
        Stmt::Frac {
            name: "A".into(),
            expr: FracExpr::Literal {
                num: IdealExpr::Literal(PolyList(vec!["x^2".into(), "y^2".into()])),
                den: Some("y".into()),
            },
        }
    );
    let again = parse_session(&s.to_string()).unwrap();
    assert_eq!(s, again);
    let p = parse_session("ring R = QQ[x];\nprint standardized_radical((x));").unwrap();
    assert!(matches!(p.statements[1].stmt, Stmt::Print(Query::StandardizedRadical { .. })));
}

#[test]
fn witness_flag_extends_pool() {
    let out =
        run(&["--format", "json", "--witnesses", "x+y"], "ring R = QQ[x,y];\ncheck axioms(identity, samples=5);\n");
    let rec = &json_records(&out)[0];
    assert_eq!(rec["payload"]["witness_pool"], serde_json::json!(["x", "y", "x*y", "x + y"]));
    assert!(out.status.success());
}
