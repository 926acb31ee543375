use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_euclid-potential"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn gcd_command() {
    let o = run(&["gcd", "12", "8"]);
    assert_eq!(stdout(&o), "gcd=4 iterations=3\n");
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&run(&["gcd", "5", "0"])), "gcd=5 iterations=1\n");

    let o = run(&["gcd", "0", "0"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("gcd(0,0) undefined"));
    assert!(stdout(&o).is_empty());
}

#[test]
fn bad_operands_are_usage_errors() {
    for args in [
        ["gcd", "12", "x8"],
        ["gcd", "-3", "1"],
        ["verify", "1.5", "1"],
    ] {
        assert_eq!(code(&run(&args)), 2, "{args:?}");
    }
    assert_eq!(code(&run(&["fib", "--index", "-1"])), 2);
    assert_eq!(code(&run(&["fib"])), 2);
    assert_eq!(code(&run(&["scan", "--max", "0"])), 2);
}

#[test]
fn swapped_operands_note_goes_to_stderr() {
    let o = run(&["gcd", "8", "12"]);
    assert_eq!(stdout(&o), "gcd=4 iterations=3\n");
    assert!(stderr(&o).contains("swapped"));
}

#[test]
fn trace_command() {
    let out = stdout(&run(&["trace", "8", "5"]));
    let rows: Vec<&str> = out
        .lines()
        .skip(1)
        .filter(|l| !l.starts_with("gcd="))
        .collect();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[0], "1\t8\t5\t1\t3\t13\t3+5·φ (≈11.090170)");
    assert_eq!(rows[3], "4\t2\t1\t-\t-\t3\t1+1·φ (≈2.618034)");

    let out = stdout(&run(&["trace", "7", "1"]));
    assert_eq!(
        out.lines()
            .filter(|l| l.starts_with(char::is_numeric))
            .count(),
        1
    );

    let out = stdout(&run(&["trace", "12", "8"]));
    let golden: Vec<&str> = out
        .lines()
        .skip(1)
        .filter_map(|l| l.split('\t').nth(6))
        .map(|c| c.split(' ').next().unwrap())
        .collect();
    assert_eq!(golden, vec!["4+8·φ", "4+4·φ", "4+0·φ"]);
}

#[test]
fn verify_command() {
    let o = run(&["verify", "8", "5"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert_eq!(
        out.lines().next().unwrap(),
        "m=4 thm1_bound≈7.325943 thm2_bound≈6.000000 all_checks=pass"
    );
    assert!(out.contains("lemma_golden_equality_steps=[2,3,4]"));

    let out = stdout(&run(&["verify", "1", "0"]));
    assert!(out.starts_with("m=1 ") && out.lines().next().unwrap().ends_with("all_checks=pass"));
    assert!(out.contains("lame=n/a"));

    let o = run(&["verify", "1597", "987"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("m=15 "));
}

#[test]
fn verify_accepts_sixty_digit_operands() {
    // F_300 and F_299
    let x = "222232244629420445529739893461909967206666939096499764990979600";
    let y = "137347080577163115432025771710279131845700275212767467264610201";
    let o = run(&["verify", x, y]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let first = stdout(&o).lines().next().unwrap().to_string();
    assert!(
        first.starts_with("m=298 ") && first.ends_with("all_checks=pass"),
        "{first}"
    );
}

#[test]
fn scan_command() {
    let o = run(&["scan", "--max", "13"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("max_m=5 witness=(13,8) violations=0"));

    let out = stdout(&run(&["scan", "--max", "1"]));
    assert!(out.contains("pairs=1 max_m=1 witness=(1,0) violations=0"));
}

#[test]
fn scan_to_two_thousand_matches_golden_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scan.csv");
    let o = run(&[
        "scan",
        "--max",
        "2000",
        "--partitions",
        "4",
        "--csv",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("max_m=15 witness=(1597,987) violations=0"));
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(
        written,
        include_str!("../../core/tests/golden/scan_x2000.csv")
    );
}

#[test]
fn unwritable_csv_is_an_io_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("no").join("such").join("out.csv");
    let path = path.to_str().unwrap();
    let o = run(&["scan", "--max", "3", "--csv", path]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("out.csv"));
    assert_eq!(code(&run(&["tightness", "--kmax", "2", "--csv", path])), 3);
}

#[test]
fn fib_command() {
    assert_eq!(stdout(&run(&["fib", "--index", "10"])), "55\n");
    assert_eq!(stdout(&run(&["fib", "--index", "0"])), "0\n");
    assert_eq!(stdout(&run(&["fib", "--pair", "4"])), "x=8 y=5\n");
    assert_eq!(code(&run(&["fib", "--pair", "0"])), 2);
    assert_eq!(code(&run(&["fib", "--index", "3", "--pair", "3"])), 2);
}

#[test]
fn tightness_command() {
    let o = run(&["tightness", "--kmax", "1"]);
    assert_eq!(
        stdout(&o),
        "k,x,y,m,thm2_bound,gap\n1,2,1,1,3.000000,2.000000\n"
    );
    assert!(stderr(&o).contains("max_gap=2.000000"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    let o = run(&["tightness", "--kmax", "40", "--csv", path.to_str().unwrap()]);
    assert_eq!(stdout(&o), "rows=40 max_gap=2.000000\n");
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(
        written,
        include_str!("../../core/tests/golden/tightness_k40.csv")
    );
    for row in written.lines().skip(1) {
        let gap: f64 = row.rsplit(',').next().unwrap().parse().unwrap();
        assert!((1.9..=2.1).contains(&gap), "{row}");
    }

    assert_eq!(code(&run(&["tightness", "--kmax", "0"])), 2);
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        &["trace", "144", "89"][..],
        &["verify", "8", "5"],
        &["scan", "--max", "60", "--partitions", "3"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}
