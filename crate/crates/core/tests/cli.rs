use std::process::{Command, Output};

fn run_args(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sepcount")).args(args).output().expect("binary runs")
}

/// Runs a whitespace-separated command line.
fn run(line: &str) -> Output {
    run_args(&line.split_whitespace().collect::<Vec<_>>())
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn count_examples() {
    for (line, want) in [
        ("count --topology circle --n 5 --k 2 --m 2 --p 1", "5\n"),
        ("count --topology line --n 6 --k 2 --m 2 --p 1", "11\n"),
        ("count --topology line --n 10 --k 0 --m 3 --p 2", "1\n"),
    ] {
        let out = run(line);
        assert_eq!((stdout(&out).as_str(), out.status.code()), (want, Some(0)), "{line}");
    }
}

#[test]
fn every_method_agrees() {
    let base = "count --topology line --n 12 --k 3 --m 2 --p 1";
    let expected = stdout(&run(base));
    for method in ["auto", "closed1", "closed2", "closed3", "composition", "series", "recurrence", "brute"] {
        let out = run(&format!("{base} --method {method}"));
        assert_eq!(out.status.code(), Some(0), "{method}");
        assert_eq!(stdout(&out), expected, "{method}");
    }
    let out = run("count --topology circle --n 12 --k 3 --m 2 --p 1 --method closed3");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run("count --topology line --n 6 --k 2 --m 0 --p 1").status.code(), Some(1));
    assert_eq!(run("count --topology torus --n 6 --k 2 --m 2 --p 1").status.code(), Some(1));
    assert_eq!(run("count --topology line --n 6 --k 2").status.code(), Some(1));
    assert_eq!(run("count --topology line --n 40 --k 2 --m 2 --p 1").status.code(), Some(0));

    let out = run("count --topology line --n 40 --k 2 --m 2 --p 1 --method brute");
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
    let out = run("--cap 40 count --topology line --n 40 --k 2 --m 2 --p 1 --method brute");
    assert_eq!(out.status.code(), Some(0));

    assert_eq!(run("audit --grid m<3").status.code(), Some(1));
    assert_eq!(run("audit --identity Eq9.9").status.code(), Some(1));
}

#[test]
fn list_examples() {
    let out = run("list --topology circle --n 5 --k 2 --m 2 --p 1");
    let mut lines: Vec<_> = stdout(&out).lines().map(String::from).collect();
    assert_eq!(lines.len(), 5);
    lines.sort();
    assert_eq!(lines, ["1,2", "1,5", "2,3", "3,4", "4,5"]);

    assert_eq!(stdout(&run("list --topology line --n 4 --k 0 --m 1 --p 1")), "\n");
    let out = run("list --topology line --n 3 --k 3 --m 1 --p 2");
    assert_eq!((stdout(&out).as_str(), out.status.code()), ("", Some(0)));
}

#[test]
fn table_examples() {
    let csv = stdout(&run("table --topology circle --m 2 --p 1 --n-max 6 --k-max 2"));
    assert!(csv.starts_with("n,k,count\n"));
    assert!(csv.lines().any(|l| l == "5,2,5"));
    for row in csv.lines().skip(1) {
        let v: Vec<i64> = row.split(',').map(|x| x.parse().unwrap()).collect();
        if v[1] == 1 {
            assert_eq!(v[2], v[0]);
        }
    }

    let out = run("table --topology line --m 2 --p 1 --n-max 6 --k-max 2 --format json");
    let rows: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let hit = rows.as_array().unwrap().iter().find(|r| r["n"] == 6 && r["k"] == 2).unwrap();
    assert_eq!(hit["count"], 11);
}

#[test]
fn audit_exit_codes() {
    assert_eq!(run("audit --identity Eq3.5 --grid m<=2,p<=2,k<=3,n<=20").status.code(), Some(0));
    assert_eq!(run("audit --identity BijectionCount --grid m<=2,p<=1,k<=2,n<=12").status.code(), Some(0));

    let out = run("audit --identity Eq4.2-printed --grid m<=2,p<=1,k<=2,n<=10 --format json");
    assert_eq!(out.status.code(), Some(2));
    let reports: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let failures = reports[0]["failures"].as_array().unwrap();
    assert!(failures.iter().any(|f| {
        let p = &f["params"];
        (p["m"] == 2 && p["p"] == 1 && p["k"] == 2 && p["n"] == 7) && f["lhs"] == "14" && f["rhs"] == "15"
    }));
}

#[test]
fn output_is_deterministic() {
    let line = "audit --identity all --grid m<=2,p<=1,k<=2,n<=8 --format json";
    assert_eq!(run(line).stdout, run(line).stdout);
}
