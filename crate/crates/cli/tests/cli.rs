use std::process::{Command, Output};

use hydromoments::record::{OutputRecord, RecordResult};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hydromoments")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn records(o: &Output) -> Vec<OutputRecord> {
    stdout(o).lines().map(|l| serde_json::from_str(l).expect("valid record")).collect()
}

#[test]
fn compute_exact_inverse_momentum() {
    let o = run(&["compute", "--space", "p", "--alpha", "-1", "--D", "3", "--n", "1", "--l", "0", "--Z", "1", "--mode", "exact", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains(r#""exact":{"coeff":"16/3","piPow":"-1"}"#), "{text}");
    let recs = records(&o);
    assert_eq!(recs.len(), 1);
    assert_eq!(recs[0].schema_version, "hydromoments/1");
    // Lossless round trip.
    assert_eq!(recs[0].to_json(), text.trim_end());
}

#[test]
fn compute_position_second_moment() {
    let o = run(&["compute", "--space", "r", "--alpha", "2", "--D", "3", "--n", "2", "--l", "1", "--Z", "1", "--mode", "exact", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let row = text.lines().nth(1).unwrap();
    let cols: Vec<&str> = row.split(',').collect();
    assert_eq!(cols.len(), 12);
    assert_eq!((cols[8], cols[9], cols[11]), ("30", "0", "ok"));
}

#[test]
fn domain_violation_exits_2_and_names_interval() {
    let o = run(&["compute", "--space", "p", "--alpha", "6", "--D", "3", "--n", "1", "--l", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("(-3, 5)"), "{}", stderr(&o));
    let o = run(&["compute", "--space", "r", "--alpha", "1", "--D", "1", "--n", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn numerical_failure_exits_3() {
    let o = run(&["compute", "--space", "p", "--alpha", "0.5", "--n", "60", "--mode", "float"]);
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
    // The default mode falls back to quadrature.
    let o = run(&["compute", "--space", "p", "--alpha", "0.5", "--n", "60"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn table_rows_and_statuses() {
    let o = run(&["table", "--space", "p", "--D-range", "3", "--n-range", "1..3", "--alpha-list", "-2,-1,0,1,2,3,6", "--mode", "exact"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "D,n,l,Z,space,alpha,mode,value_decimal,value_exact_coeff,value_exact_pipow,error_bound,status");
    assert_eq!(lines.len(), 1 + 7 * 6);
    let statuses: Vec<&str> = lines[1..].iter().map(|l| l.rsplit(',').next().unwrap()).collect();
    // α = 6 lies outside (-3, 5) for l = 0 and inside (-5, 7) for l = 1.
    assert_eq!(statuses.iter().filter(|s| **s == "out-of-domain").count(), 3);
    assert_eq!(statuses.iter().filter(|s| **s == "ok").count(), 39);
    for l in &lines[1..] {
        let c: Vec<&str> = l.split(',').collect();
        if c[11] == "out-of-domain" {
            assert!(c[7].is_empty() && c[8].is_empty() && c[10].is_empty());
        }
    }
}

#[test]
fn table_second_moments_are_kinetic_energies() {
    let o = run(&["table", "--space", "p", "--D-range", "2..5", "--n-range", "1..4", "--alpha-list", "2", "--Z", "2", "--mode", "exact", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    for rec in records(&o) {
        let s = rec.request.state.unwrap();
        let eta = s.eta().to_f64();
        let RecordResult::Moment(m) = &rec.result else { panic!("row failed") };
        let want = 4.0 / (eta * eta);
        assert!((m.decimal - want).abs() <= 1e-15 * want);
        assert_eq!(m.exact.as_ref().unwrap().pi_pow, "0");
    }
}

#[test]
fn table_reflection_columns() {
    let o = run(&["table", "--space", "p", "--D-range", "3..4", "--n-range", "1..3", "--alpha-list", "-1,0,1,2,3", "--Z", "1.5", "--mode", "exact", "--format", "json"]);
    let recs = records(&o);
    let value = |s: &hydromoments::HydrogenicState, alpha: f64| {
        recs.iter().find_map(|r| match (&r.result, r.request.state, &r.request.order) {
            (RecordResult::Moment(m), Some(rs), Some(ord)) if rs == *s && ord.alpha == alpha => Some(m.decimal),
            _ => None,
        })
    };
    let mut checked = 0;
    for r in &recs {
        let (Some(s), Some(ord)) = (r.request.state, &r.request.order) else { continue };
        let a = ord.alpha;
        if let (Some(x), Some(y)) = (value(&s, a), value(&s, 2.0 - a)) {
            let scale = s.eta().to_f64() / s.charge();
            let lhs = scale.powf(2.0 - a) * y;
            let rhs = scale.powf(a) * x;
            assert!((lhs - rhs).abs() <= 1e-14 * rhs.abs());
            checked += 1;
        }
    }
    assert!(checked > 10);
}

#[test]
fn parallel_table_is_byte_identical() {
    let args = ["table", "--space", "r", "--D-range", "2..6", "--n-range", "1..4", "--alpha-list", "-1.5,0.3,2,7.25", "--format", "json"];
    let seq = run(&args);
    let mut par_args = args.to_vec();
    par_args.push("--parallel");
    let par = Command::new(env!("CARGO_BIN_EXE_hydromoments"))
        .args(&par_args)
        .env("HYDROMOMENTS_THREADS", "4")
        .output()
        .unwrap();
    assert_eq!(seq.stdout, par.stdout);
    assert_eq!(seq.stdout, run(&args).stdout);
}

#[test]
fn verify_reflection_small_grid() {
    let o = run(&["verify", "--suite", "reflection", "--grid", "small"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS") && stdout(&o).contains("worst deviation 0.000e0"));
}

#[test]
fn verify_oracle_and_uncertainty() {
    let o = run(&["verify", "--suite", "oracle", "--grid", "small", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert!(v["worstDeviation"].as_f64().unwrap() <= 1e-10);
    let o = run(&["verify", "--suite", "uncertainty", "--grid", "small"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("findings:"));
}

#[test]
fn verify_asymptotics_reports_hard_failures() {
    // The printed nS and high-dimensional rates are not met; the suite says so.
    let o = run(&["verify", "--suite", "asymptotics"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn limits_tables() {
    let o = run(&["limits", "--regime", "rydberg", "--alpha", "1", "--family", "ns", "--n-seq", "10,20,40", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    for line in stdout(&o).lines().skip(1) {
        let c: Vec<&str> = line.split(',').collect();
        let n: f64 = c[0].parse().unwrap();
        let dev: f64 = c[4].parse().unwrap();
        assert!((dev - 1.0 / (4.0 * n * n - 1.0)).abs() < 1e-13);
    }

    let o = run(&["limits", "--regime", "rydberg", "--alpha", "1", "--family", "circular", "--n-seq", "10..320", "--format", "csv"]);
    let rows: Vec<Vec<f64>> =
        stdout(&o).lines().skip(1).map(|l| l.split(',').map(|x| x.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 6);
    for w in rows.windows(2) {
        let ratio = w[0][5] / w[1][5];
        assert!((ratio - 4.0).abs() < 0.3, "corrected deviation should fall ~1/n^2, ratio {ratio}");
    }

    let o = run(&["limits", "--regime", "highd", "--alpha", "2", "--space", "p", "--n", "2", "--l", "1", "--D-seq", "16..128"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 5);

    let o = run(&["limits", "--regime", "rydberg", "--alpha", "4", "--n-seq", "10"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn uncertainty_fermion_constant() {
    let o = run(&["uncertainty", "--bound", "fermion", "--n", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let recs = records(&o);
    let RecordResult::Inequality(rep) = &recs[0].result else { panic!() };
    assert!((rep.rhs - 1.17005).abs() < 1e-5 && rep.satisfied);
    let o = run(&["uncertainty", "--bound", "daubechies-thakkar", "--n", "2", "--l", "1"]);
    assert_eq!(o.status.code(), Some(2));
}
