use std::process::Command;

use diophant::cli::run;
use serde_json::Value;

const SAMPLES: &[&[&str]] = &[
    &["farey", "list", "5"],
    &["farey", "succ", "2/5", "5"],
    &["farey", "pred", "1/2", "7"],
    &["farey", "mediant", "1/3", "1/2"],
    &["farey", "phi", "2/5", "5"],
    &["farey", "greatest", "5", "7"],
    &["farey", "bracket", "sqrt(2)-1", "10"],
    &["approx", "dirichlet", "sqrt(2)", "5"],
    &["approx", "large", "sqrt(3)", "10"],
    &["approx", "segre", "(1+sqrt(5))/2", "2", "1"],
    &["approx", "hurwitz", "(1+sqrt(5))/2", "10"],
    &["approx", "onesided", "sqrt(2)", "5", "below"],
    &["approx", "verify", "sqrt(2)", "7/5", "dirichlet", "5"],
    &["beatty", "term", "sqrt(2)", "7"],
    &["beatty", "window", "3/2", "12"],
    &["beatty", "member", "sqrt(2)", "10"],
    &["beatty", "mu", "sqrt(2)", "100"],
    &["beatty", "partition", "(1+1*sqrt(5))/2", "(3+1*sqrt(5))/2", "500"],
    &["beatty", "apdecomp", "7", "3", "100"],
    &["beatty", "separate", "3/2", "sqrt(2)"],
    &["beatty", "dmo", "sqrt(2)", "9/10", "19/20"],
    &["beatty", "residue", "sqrt(2)", "5", "3"],
    &["beatty", "radius", "3/2", "9"],
    &["beatty", "claim51", "3/2", "sqrt(2)"],
    &["nonarch", "floor", "t^2*sqrt1p(eps)"],
    &["nonarch", "arith", "(t^2 + 1)/(t - 1)"],
    &["nonarch", "beatty", "1 + 1/t", "t", "t + 1"],
    &["nonarch", "linf", "5/4", "3/2"],
    &["oracle", "farey", "4"],
    &["oracle", "dirichlet", "sqrt(2)", "10"],
    &["oracle", "beatty", "(1+sqrt(5))/2", "12"],
];

fn invoke(args: &[&str]) -> diophant::cli::Outcome {
    run(std::iter::once("diophant").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> (i32, Value, String) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = invoke(&full);
    let v = serde_json::from_str(&out.stdout)
        .unwrap_or_else(|e| panic!("{args:?}: {e}\n{}\n{}", out.stdout, out.stderr));
    (out.code, v, out.stdout)
}

fn no_floats(v: &Value) -> bool {
    match v {
        Value::Number(_) => false,
        Value::Array(xs) => xs.iter().all(no_floats),
        Value::Object(m) => m.values().all(no_floats),
        _ => true,
    }
}

#[test]
fn argv_echo_reproduces_output() {
    for args in SAMPLES {
        let (code, v, text) = json(args);
        assert_eq!(code, 0, "{args:?}: {text}");
        let argv: Vec<String> = v["argv"]
            .as_array()
            .unwrap()
            .iter()
            .map(|s| s.as_str().unwrap().to_owned())
            .collect();
        let again = run(std::iter::once("diophant".to_owned()).chain(argv));
        assert_eq!(again.code, 0, "{args:?}");
        assert_eq!(again.stdout, text, "{args:?}");
    }
}

#[test]
fn envelope_shape_and_exact_numerics() {
    for args in SAMPLES {
        let (_, v, _) = json(args);
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(
            keys,
            ["command", "argv", "inputs", "result", "verification", "resources"]
        );
        assert_eq!(v["command"], args[..2].join(" "));
        let num_free = [&v["inputs"], &v["result"], &v["resources"]];
        assert!(num_free.iter().all(|x| no_floats(x)), "{args:?}: {v}");
        let checks = v["verification"].as_object().unwrap();
        assert!(checks.values().all(|c| c == &Value::Bool(true)), "{args:?}: {v}");
    }
}

#[test]
fn documented_examples() {
    let (_, v, _) = json(&["approx", "dirichlet", "sqrt(2)", "5"]);
    assert_eq!(v["result"]["p"], "7");
    assert_eq!(v["result"]["q"], "5");
    assert_eq!(v["result"]["bound"], "1/25");
    assert_eq!(v["result"]["verified"], true);

    let out = invoke(&["farey", "list", "5"]);
    assert_eq!(out.code, 0);
    for term in [
        "0/1", "1/5", "1/4", "1/3", "2/5", "1/2", "3/5", "2/3", "3/4", "4/5", "1/1",
    ] {
        assert!(out.stdout.contains(term), "{term} missing:\n{}", out.stdout);
    }

    let out = invoke(&[
        "beatty",
        "partition",
        "(1+1*sqrt(5))/2",
        "(3+1*sqrt(5))/2",
        "10000",
    ]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.contains("PASS"));
}

#[test]
fn exit_codes() {
    let cases: &[(&[&str], i32)] = &[
        (&["beatty", "partition", "3/2", "3", "100"], 1),
        (&["farey", "list"], 2),
        (&["farey", "frobnicate", "3"], 2),
        (&["approx", "dirichlet", "3/2", "5"], 2),
        (&["approx", "dirichlet", "sqrt(2", "5"], 2),
        (&["nonarch", "floor", "t +"], 2),
        (&["farey", "succ", "1/1", "5"], 2),
        (&["oracle", "farey", "5000"], 3),
        (&["farey", "list", "100", "--limit", "10"], 3),
        (&["farey", "--help"], 0),
    ];
    for (args, want) in cases {
        let out = invoke(args);
        assert_eq!(
            out.code, *want,
            "{args:?}\nstdout: {}\nstderr: {}",
            out.stdout, out.stderr
        );
        if *want >= 2 {
            assert!(!out.stderr.is_empty(), "{args:?}: no diagnostic");
        }
    }
}

#[test]
fn plain_format_lists_checks() {
    let out = invoke(&["farey", "succ", "2/5", "5"]);
    assert_eq!(out.code, 0);
    assert!(
        out.stdout.lines().any(|l| l == "successor: 1/2"),
        "{}",
        out.stdout
    );
    assert!(out
        .stdout
        .lines()
        .any(|l| l.starts_with("check ") && l.ends_with(": ok")));
}

#[test]
fn binary_matches_library() {
    let args = ["approx", "hurwitz", "(1+sqrt(5))/2", "10", "--format", "json"];
    let out = Command::new(env!("CARGO_BIN_EXE_diophant"))
        .args(args)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), invoke(&args).stdout);

    let bad = Command::new(env!("CARGO_BIN_EXE_diophant"))
        .args(["oracle", "farey", "5000"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(3));
}
