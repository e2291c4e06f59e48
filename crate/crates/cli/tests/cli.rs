use std::process::{Command, Output};

fn yff(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_yff")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn solve_u_prints_decimal_and_exact_roots() {
    let o = yff(&["solve-u", "--sides", "6,9,13", "--digits", "20"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("u = 4.21625485813629075196"), "{}", stdout(&o));
    let o = yff(&["solve-u", "--sides", "10,12,15"]);
    assert!(stdout(&o).contains("u = 6 (exact)"), "{}", stdout(&o));
}

#[test]
fn center_prints_normalized_coordinates() {
    let o = yff(&["center", "--n", "2", "--sides", "3,4,5"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("normalized: (1/3, 1/3, 1/3)"), "{}", stdout(&o));
}

#[test]
fn check_exit_codes() {
    let ok = yff(&["check", "--statement", "io-perpendicular", "--samples", "3"]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));
    let bad = yff(&["check", "--family", "scalene-random", "--statement", "collinear(Y1, Y2, B)"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("does not hold"));
}

#[test]
fn verify_writes_a_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("cert.txt");
    let o = yff(&["verify", "--statement", "right-x8x20-concurrent", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.contains("statement: concurrent(A Y2, C Y1, X8 X20)"));
    assert!(text.contains("certified"));
    let refuted = yff(&["verify", "--family", "AP", "--statement", "collinear(Y1, Y2, B)"]);
    assert_eq!(refuted.status.code(), Some(1));
}

#[test]
fn discover_and_figure_write_files() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("scan.json");
    std::fs::write(&cfg, r#"{"families":[{"family":"AP"}],"centers":[1,3]}"#).unwrap();
    let report = dir.path().join("report.json");
    let o = yff(&["discover", "--config", cfg.to_str().unwrap(), "--out", report.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(std::fs::read_to_string(&report).unwrap().contains("parallel(A X1, Y1 Y2)"));
    let svg = dir.path().join("fig.svg");
    let o = yff(&[
        "figure",
        "--statement",
        "sixty-x3x8-concurrent",
        "--params",
        "5,3",
        "--out",
        svg.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(std::fs::read_to_string(&svg).unwrap().starts_with("<svg"));
}

#[test]
fn bad_input_exits_with_code_three() {
    for args in [
        vec!["solve-u", "--sides", "1,2,10"],
        vec!["center", "--n", "9999", "--sides", "3,4,5"],
        vec!["check", "--statement", "collinear(Y1, Y2)"],
        vec!["check", "--statement", "collinear(Y1, Y2, B)"],
    ] {
        let o = yff(&args);
        assert_eq!(o.status.code(), Some(3), "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    }
}
