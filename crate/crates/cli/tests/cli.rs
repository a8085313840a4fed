use std::f64::consts::PI;
use std::process::{Command, Output};

fn hacf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hacf")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// Data rows of a CSV, skipping comments and the header.
fn rows(csv: &str) -> Vec<Vec<String>> {
    csv.lines().filter(|l| !l.starts_with('#')).skip(1).map(|l| l.split(',').map(String::from).collect()).collect()
}

fn verdict(csv: &str) -> String {
    let last = csv.lines().last().unwrap();
    last.strip_prefix("# verdict=").unwrap().split(' ').next().unwrap().to_string()
}

#[test]
fn harmonic_reports_and_exit_codes() {
    let o = hacf(&["harmonic", "--expr", "x - 3*y*t - 2*x^3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "H1-harmonic: yes\n");

    let o = hacf(&["harmonic", "--expr", "x^2"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "H1-harmonic: no; residual = 2\n");

    let o = hacf(&["harmonic", "--basis", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "x\ny\n");

    let o = hacf(&["harmonic", "--euclid", "--expr", "x*y*t"]);
    assert_eq!(stdout(&o), "R3-harmonic: yes\n");
    let o = hacf(&["harmonic", "--euclid", "--basis", "2"]);
    assert_eq!(stdout(&o).lines().count(), 5);
}

#[test]
fn parse_errors_point_at_the_offending_character() {
    let o = hacf(&["harmonic", "--expr", "x + $"]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("offset 4"), "{err}");
    assert!(err.lines().any(|l| l == "      ^"), "{err}");
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["functional", "--kind", "I", "--r-min", "0.5", "--r-max", "0.1"][..],
        &["functional", "--kind", "I", "--r-count", "2"],
        &["functional", "--kind", "I", "--n-theta", "10"],
        &["functional", "--kind", "Jbeta", "--expr", "x"],
        &["functional", "--kind", "J", "--alpha", "1", "0"],
        &["functional", "--kind", "Q"],
        &["coeffs", "--k", "0"],
        &["harmonic", "--basis", "-1"],
    ] {
        let o = hacf(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn non_finite_values_exit_with_three() {
    let huge = ["10^64"; 5].join("*") + "*x";
    let o = hacf(&["functional", "--kind", "I", "--expr", &huge, "--r-count", "3"]);
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
    assert!(stderr(&o).contains("non-finite"));
}

#[test]
fn coefficient_rows() {
    let o = hacf(&["coeffs", "--expr", "counterexample", "--k", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l == "kind,k,h,value"));
    assert!(out.lines().any(|l| l == "cross,2,1,0"));
    let cross31: f64 = out.lines().find_map(|l| l.strip_prefix("cross,3,1,")).unwrap().parse().unwrap();
    assert!((cross31 + 6.0 * PI).abs() < 1e-12);

    let o = hacf(&["coeffs", "--expr", "x", "--k", "1", "--euclid"]);
    let out = stdout(&o);
    let a1: f64 = out.lines().find_map(|l| l.strip_prefix("diag,1,,")).unwrap().parse().unwrap();
    assert!((a1 - PI * PI).abs() < 1e-12);
    let e1: f64 = out.lines().find_map(|l| l.strip_prefix("euclid-diag,1,,")).unwrap().parse().unwrap();
    assert!((e1 - 2.0 * PI).abs() < 1e-12);
}

#[test]
fn functional_csv_schema_and_verdicts() {
    let o = hacf(&["functional", "--kind", "J", "--r-min", "0.02", "--r-max", "0.3", "--r-count", "16"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let csv = stdout(&o);
    assert!(csv.lines().any(|l| l == "r,value"));
    assert!(csv.lines().any(|l| l.starts_with("# hacf ")));
    assert!(csv.lines().any(|l| l == "# orders n_phi=64 n_theta=128 n_r=16 indicator_factor=4"));
    let data = rows(&csv);
    assert_eq!(data.len(), 16);
    for row in &data {
        assert_eq!(row.len(), 2);
        let mantissa = row[1].split('e').next().unwrap();
        assert_eq!(mantissa.chars().filter(char::is_ascii_digit).count(), 17, "{row:?}");
    }
    assert_eq!(data[0][0].parse::<f64>().unwrap(), 0.02);
    assert_eq!(verdict(&csv), "Decreasing");
    assert!(csv.ends_with('\n') && !csv.contains('\r'));

    let o = hacf(&["functional", "--kind", "Jbeta", "--beta", "4", "--expr", "x"]);
    let csv = stdout(&o);
    assert_eq!(rows(&csv).len(), 24);
    assert_eq!(verdict(&csv), "Constant");
    assert!(csv.contains("# beta=4"));

    let o = hacf(&["functional", "--kind", "Ieuclid", "--expr", "x + x^2 - y^2"]);
    assert_eq!(verdict(&stdout(&o)), "Increasing");

    let o =
        hacf(&["functional", "--kind", "jbeta", "--beta", "3", "--expr", "x", "--alpha", "2", "1", "--r-count", "4"]);
    let csv = stdout(&o);
    assert_eq!(verdict(&csv), "Increasing");
    assert!(csv.contains("# alpha=2,1"));
}

#[test]
fn output_is_deterministic_and_can_go_to_a_file() {
    let args = ["functional", "--kind", "I", "--expr", "x - 3*y*t - 2*x^3", "--r-count", "5"];
    let a = stdout(&hacf(&args));
    let b = stdout(&hacf(&args));
    assert_eq!(a, b);

    let path = std::env::temp_dir().join(format!("hacf-cli-test-{}.csv", std::process::id()));
    let mut with_out = args.to_vec();
    let p = path.to_str().unwrap();
    with_out.extend(["--out", p]);
    let o = hacf(&with_out);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), a);
    std::fs::remove_file(&path).unwrap();

    let table = stdout(&hacf(&["functional", "--kind", "I", "--expr", "x", "--r-count", "3", "--format", "table"]));
    assert!(table.lines().any(|l| l.trim_start().starts_with("r ") && l.trim_end().ends_with("value")));
    assert!(table.lines().last().unwrap().starts_with("verdict=Constant"));
}

#[test]
fn counterexample_reproduction() {
    let o = hacf(&["counterexample", "--alpha", "2", "1", "--euclid-baseline"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert_eq!(out.lines().last().unwrap(), "# I: Decreasing; J: Decreasing; |I+−I−| ≤ 1e−8; a1 = π² (rel err ≤ 1e−6)");
    assert!(out.lines().any(|l| l == "r,I,J"));
    assert!(out.lines().any(|l| l == "r,Ieuclid"));
    for name in ["generalized identity", "jump condition", "euclid increasing", "J decreasing"] {
        assert!(out.contains(&format!("# check {name}: pass")), "{name}");
    }
    let signed: f64 = out
        .lines()
        .find_map(|l| l.strip_prefix("# a31 signed="))
        .and_then(|l| l.split(' ').next())
        .unwrap()
        .parse()
        .unwrap();
    assert!((signed + 6.0 * PI).abs() < 1e-10);
    assert!(out.contains("# a31 positive="));
    assert!(out.contains("# fit a1="));
}

#[test]
fn failed_check_exits_with_one_and_names_it() {
    let o = hacf(&["counterexample", "--r-count", "4", "--tol", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("I decreasing"), "{}", stderr(&o));
    assert!(stdout(&o).contains("# check I decreasing: FAIL"));
}
