use std::path::PathBuf;
use std::process::{Command, Output};

use num_bigint::BigInt;
use qgenocchi::algebra::{Parse, QLaurent, QRatFn, Rational, Render, SLaurent};
use qgenocchi::fib::{fib_poly, q_fib_poly};
use qgenocchi::tables;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qgenocchi"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name]
        .iter()
        .collect();
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn golden_genocchi_list() {
    assert_eq!(
        stdout(&["gen", "genocchi", "--n", "8"]),
        golden("genocchi.txt")
    );
}

#[test]
fn golden_a_matrix() {
    assert_eq!(
        stdout(&["gen", "a-matrix", "--n", "5"]),
        golden("a_matrix.txt")
    );
}

#[test]
fn golden_triangle() {
    assert_eq!(
        stdout(&["gen", "triangle", "--rows", "8"]),
        golden("triangle.txt")
    );
}

#[test]
fn golden_q_triangle() {
    assert_eq!(
        stdout(&["gen", "triangle", "--rows", "5", "--q"]),
        golden("q_triangle.txt")
    );
}

#[test]
fn documented_examples() {
    assert_eq!(stdout(&["gen", "fib", "--n", "5"]), "1 + 3*s + s^2\n");
    assert_eq!(
        stdout(&["functional", "--name", "L", "--poly", "s^2"]),
        "2\n"
    );
    assert_eq!(
        stdout(&["functional", "--name", "Mq", "--poly-fib", "3"]),
        "q/(1+q)\n"
    );
    assert_eq!(
        stdout(&["functional", "--name", "V", "--poly", "x^1"]),
        "1/2\n"
    );
    let last = stdout(&["gen", "triangle", "--rows", "5", "--q", "--format", "text"]);
    assert_eq!(last.lines().last(), Some("1+q, 1+q+q^2, 1+q+q^2"));
}

#[test]
fn sequence_text_round_trips() {
    let text = stdout(&["gen", "genocchi", "--n", "20"]);
    let parsed: Vec<Rational> = text
        .split_whitespace()
        .map(|t| Rational::parse(t).unwrap())
        .collect();
    let expected: Vec<Rational> = tables::genocchi(20)
        .into_iter()
        .map(Rational::from_integer)
        .collect();
    assert_eq!(parsed, expected);

    let text = stdout(&["gen", "bernoulli", "--n", "16"]);
    let parsed: Vec<Rational> = text
        .split_whitespace()
        .map(|t| Rational::parse(t).unwrap())
        .collect();
    assert_eq!(parsed, tables::bernoulli(16));

    let text = stdout(&["gen", "genocchi", "--n", "7", "--q"]);
    let parsed: Vec<QLaurent> = text
        .split_whitespace()
        .map(|t| QLaurent::parse(t).unwrap())
        .collect();
    assert_eq!(parsed, tables::q_genocchi(7));
}

#[test]
fn triangle_text_round_trips() {
    let text = stdout(&["gen", "triangle", "--rows", "9", "--q", "--inv-q"]);
    let tri = tables::q_seidel_triangle(9).map(QLaurent::substitute_q_inverse);
    for (i, line) in text.lines().enumerate() {
        let row: Vec<QLaurent> = line
            .split(", ")
            .map(|t| QLaurent::parse(t).unwrap())
            .collect();
        assert_eq!(row.as_slice(), tri.row(i + 1));
    }
}

#[test]
fn polynomial_text_round_trips() {
    let text = stdout(&["gen", "fib", "--n", "11"]);
    let p = SLaurent::<Rational>::parse(text.trim()).unwrap();
    assert_eq!(p, fib_poly(11).unwrap());

    let text = stdout(&["gen", "fib", "--n", "9", "--q"]);
    let p = SLaurent::<QLaurent>::parse(text.trim()).unwrap();
    assert_eq!(p, q_fib_poly(9).unwrap());

    let text = stdout(&["functional", "--name", "Mq", "--poly-fib", "7"]);
    let v = QRatFn::parse(text.trim()).unwrap();
    assert_eq!(v.render_compact() + "\n", text);
}

#[test]
fn json_round_trips() {
    let text = stdout(&["gen", "median", "--n", "6", "--format", "json"]);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["kind"], "median_genocchi");
    assert_eq!(v["coefficient_ring"], "Z");
    let values: Vec<BigInt> = v["values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["value"].as_str().unwrap().parse().unwrap())
        .collect();
    assert_eq!(values, tables::median_genocchi(6));
    assert_eq!(v["values"][1]["n"], 3);

    let text = stdout(&["gen", "triangle", "--rows", "7", "--q", "--format", "json"]);
    let v: Value = serde_json::from_str(&text).unwrap();
    let tri = tables::q_seidel_triangle(7);
    for row in v["rows"].as_array().unwrap() {
        let i = row["i"].as_u64().unwrap() as usize;
        for e in row["entries"].as_array().unwrap() {
            let j = e["j"].as_u64().unwrap() as usize;
            let parsed = QLaurent::parse(e["value"].as_str().unwrap()).unwrap();
            assert_eq!(Some(&parsed), tri.entry(i, j));
        }
    }
}

#[test]
fn csv_and_latex() {
    let text = stdout(&["gen", "genocchi", "--n", "3", "--format", "csv"]);
    assert_eq!(text, "n,value\n2,1\n4,1\n6,3\n");
    let text = stdout(&["gen", "a-matrix", "--n", "2", "--format", "csv"]);
    assert!(text.starts_with("n,k,value\n1,0,1\n"));
    assert!(text.contains("2,1,2\n"));
    let text = stdout(&["gen", "triangle", "--rows", "3", "--format", "latex"]);
    assert!(text.starts_with("\\begin{tabular}"));
    assert!(text.contains("$1$ & $1$"));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(code(&["verify", "--id", "I2_4", "--max-n", "30"]), 0);
    assert_eq!(code(&["verify", "--id", "NOPE"]), 2);
    assert_eq!(code(&["verify", "--all", "--profile", "nope"]), 2);
    assert_eq!(code(&["verify"]), 2);

    let text = stdout(&["verify", "--all", "--profile", "quick", "--format", "json"]);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["suite"], "quick");
    assert_eq!(v["totals"]["fail"], 0);
    let first = &v["cases"][0];
    for key in ["id", "params", "status", "witness"] {
        assert!(first.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn verify_is_deterministic_across_modes() {
    let strip = |s: String| -> Value {
        let mut v: Value = serde_json::from_str(&s).unwrap();
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    let args = [
        "verify",
        "--all",
        "--profile",
        "quick",
        "--max-n",
        "6",
        "--format",
        "json",
    ];
    let par = strip(stdout(&args));
    let mut seq_args = args.to_vec();
    seq_args.push("--sequential");
    assert_eq!(par, strip(stdout(&seq_args)));
}

#[test]
fn gen_usage_errors() {
    assert_eq!(code(&["gen", "genocchi", "--n", "3", "--inv-q"]), 2);
    assert_eq!(code(&["gen", "bernoulli", "--n", "3", "--q"]), 2);
    assert_eq!(code(&["gen", "a-matrix", "--n", "3", "--q"]), 2);
    assert_eq!(code(&["gen", "genocchi", "--n", "201"]), 2);
    assert_eq!(code(&["gen", "genocchi", "--n", "61", "--q"]), 2);
    assert_eq!(code(&["gen", "genocchi", "--n", "200"]), 0);
    assert_eq!(code(&["gen", "unknown", "--n", "3"]), 2);
    assert_eq!(code(&["gen", "genocchi"]), 2);
}

#[test]
fn functional_usage_errors() {
    let out = run(&[
        "functional",
        "--name",
        "M",
        "--poly",
        "s^3",
        "--table-size",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--table-size 3"));
    assert_eq!(code(&["functional", "--name", "L", "--poly", "s^^2"]), 2);
    assert_eq!(code(&["functional", "--name", "V", "--poly-fib", "3"]), 2);
    assert_eq!(
        stdout(&["functional", "--name", "L", "--poly-fib", "6"]),
        "3\n"
    );
}
