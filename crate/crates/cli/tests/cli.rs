use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures").join(name)
}

fn gtopx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gtopx")).args(args).env_remove("GTOPX_THREADS").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn value(text: &str, key: &str) -> f64 {
    text.lines()
        .find_map(|l| l.strip_prefix(key).map(|v| v.trim().parse().unwrap()))
        .unwrap_or_else(|| panic!("{key} missing in\n{text}"))
}

#[test]
fn info_lists_ten_rows() {
    let o = gtopx(&["info"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 10);
    assert!(rows[0].contains("Cassini1"));
    assert!(rows[8].ends_with("na"));
}

#[test]
fn info_for_one_instance() {
    let text = stdout(&gtopx(&["info", "7"]));
    assert!(text.contains("Sagas"));
    assert!(text.contains("constraints 2"));
    assert!(text.contains("best-known  18.1877"));

    let o = gtopx(&["info", "10", "--json"]);
    let text = stdout(&o);
    assert!(text.contains("\"n_int\": 4"), "{text}");
    assert!(text.contains("\"integer_variables\": [\n    7,"), "{text}");

    let o = gtopx(&["info", "42"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown benchmark 42"));
}

#[test]
fn eval_prints_round_trip_values() {
    let rosetta = fixture("rosetta.txt");
    let o = gtopx(&["eval", "6", "--file", rosetta.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let f = value(&text, "f1 ");
    assert!((f - 1.34335206).abs() < 1e-5, "{f}");
    assert_eq!(text.matches("feasible true").count(), 3);

    // The printed digits reproduce the native value exactly.
    let x = gtopx::vectors::parse_vectors(&std::fs::read_to_string(&rosetta).unwrap()).unwrap();
    assert_eq!(f.to_bits(), gtopx::evaluate(6, &x[0]).unwrap().f[0].to_bits());
}

#[test]
fn eval_multi_objective_instance() {
    let o = gtopx(&["eval", "9", "--file", fixture("cassini1.txt").to_str().unwrap()]);
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(text.lines().filter(|l| l.starts_with("f1 ") || l.starts_with("f2 ")).count(), 2);
    assert_eq!(text.lines().filter(|l| l.starts_with('g')).count(), 5);
    assert!((value(&text, "f1 ") - 4.9307).abs() < 1e-3);
}

#[test]
fn eval_exit_codes() {
    assert_eq!(gtopx(&["eval", "1", "--x", "1,2,3"]).status.code(), Some(2));
    assert_eq!(gtopx(&["eval", "1", "--x", "1,2,x3,4,5,6"]).status.code(), Some(2));
    assert_eq!(gtopx(&["eval", "1"]).status.code(), Some(2));
    assert_eq!(gtopx(&["eval", "1", "--file", "/nonexistent/x.txt"]).status.code(), Some(2));
    let o = gtopx(&["eval", "1", "--x", "NaN 1 1 1 1 1"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning: outside bounds"));
}

#[test]
fn out_of_bounds_is_a_warning() {
    let o = gtopx(&[
        "eval",
        "1",
        "--x",
        "-1500 158.302027105278 449.385873819743 54.7489684339665 1024.36205846918 4552.30796805542",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("outside bounds: x1"));
}

#[test]
fn sample_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let center = fixture("cassini1.txt");
    let run = |name: &str, threads: &str| {
        let out = dir.path().join(name);
        let o = Command::new(env!("CARGO_BIN_EXE_gtopx"))
            .args(["sample", "1", "--center", center.to_str().unwrap(), "--count", "3000", "--seed", "11"])
            .arg("--out")
            .arg(&out)
            .env("GTOPX_THREADS", threads)
            .output()
            .unwrap();
        assert_eq!(o.status.code(), Some(0));
        (stdout(&o), std::fs::read(out).unwrap())
    };
    let (summary, a) = run("a.csv", "1");
    let (_, b) = run("b.csv", "4");
    assert_eq!(a, b);
    assert_eq!(String::from_utf8(a).unwrap().lines().count(), 3001);
    assert!(summary.contains("samples     3000"));
    assert!(summary.contains("improvements"));

    let o = gtopx(&["sample", "1", "--center", center.to_str().unwrap(), "--count", "0", "--out", "/tmp/never.csv"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn grid_arguments() {
    let base = fixture("cassini1.txt");
    let base = base.to_str().unwrap();
    assert_eq!(gtopx(&["grid", "1", "--base", base, "3", "3", "--out", "/tmp/never.csv"]).status.code(), Some(2));
    assert_eq!(gtopx(&["grid", "1", "--base", base, "0", "3", "--out", "/tmp/never.csv"]).status.code(), Some(2));
    assert_eq!(gtopx(&["grid", "1", "--base", base, "3", "7", "--out", "/tmp/never.csv"]).status.code(), Some(2));
    let minlp = fixture("cassini1_minlp.txt");
    let o = gtopx(&["grid", "8", "--base", minlp.to_str().unwrap(), "1", "7", "--out", "/tmp/never.csv"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("integer variable"));
}

#[test]
fn grid_writes_inclusive_axes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("grid.csv");
    let o = Command::new(env!("CARGO_BIN_EXE_gtopx"))
        .args(["grid", "1", "--base", fixture("cassini1.txt").to_str().unwrap(), "5", "6", "--out"])
        .arg(&out)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "x5,x6,f1,feasible");
    assert_eq!(lines.len(), 1 + 1001 * 1001);
    let spec = gtopx::info(1).unwrap();
    let first: Vec<f64> = lines[1].split(',').take(2).map(|v| v.parse().unwrap()).collect();
    let last: Vec<f64> = lines.last().unwrap().split(',').take(2).map(|v| v.parse().unwrap()).collect();
    assert_eq!(first, [spec.lb[4], spec.lb[5]]);
    assert_eq!(last, [spec.ub[4], spec.ub[5]]);
    assert!(stdout(&o).contains("min f"));
}

#[test]
fn bench_checksum_ignores_thread_count() {
    let checksum = |threads: &str| {
        let o = gtopx(&["bench", "2", "--count", "2000", "--threads", threads]);
        assert_eq!(o.status.code(), Some(0));
        stdout(&o).lines().find(|l| l.starts_with("checksum")).unwrap().to_string()
    };
    assert_eq!(checksum("1"), checksum("8"));
    assert_eq!(gtopx(&["bench", "1", "--count", "0"]).status.code(), Some(2));
    assert_eq!(gtopx(&["bench", "1", "--threads", "0"]).status.code(), Some(2));
}
