use std::path::Path;
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_susy-ces");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn rows(csv_text: &str) -> Vec<Vec<f64>> {
    let mut rdr = csv::Reader::from_reader(csv_text.as_bytes());
    rdr.records().map(|r| r.unwrap().iter().map(|v| v.parse().unwrap()).collect()).collect()
}

fn read_rows(path: &Path) -> Vec<Vec<f64>> {
    rows(&std::fs::read_to_string(path).unwrap())
}

#[test]
fn two_points_give_two_rows() {
    let o = run(&["table", "--kind", "potential", "--m", "1", "--x-min", "0.5", "--x-max", "1", "--points", "2"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    assert_eq!(text.lines().next().unwrap(), "x,V");
    assert_eq!(rows(&text).len(), 2);
}

#[test]
fn potential_zero_crossing_for_m2() {
    let o = run(&["table", "--kind", "potential", "--m", "2", "--sector", "minus", "--x-min", "0.01", "--x-max", "2", "--points", "500"]);
    assert_eq!(code(&o), 0);
    let t = rows(&String::from_utf8(o.stdout).unwrap());
    let h = t[1][0] - t[0][0];
    let nearest = t.iter().min_by(|a, b| (a[0] - 0.0625).abs().total_cmp(&(b[0] - 0.0625).abs())).unwrap();
    // |V′(1/16)| = m²/x² (m − 3/(4√x)) at x = 1/16, m = 2: 1024; times the distance bound h/2
    let bound = 1024.0 * h / 2.0 * 1.5;
    assert!(nearest[1].abs() < bound, "{:?} bound {bound}", nearest);
}

#[test]
fn superpotential_is_negative_and_increasing() {
    let o = run(&["table", "--kind", "superpotential", "--m", "1", "--x-min", "0.02", "--x-max", "5", "--points", "300", "--spacing", "log"]);
    assert_eq!(code(&o), 0);
    let t = rows(&String::from_utf8(o.stdout).unwrap());
    assert!(t.iter().all(|r| r[1] < 0.0));
    assert!(t.windows(2).all(|w| w[1][1] > w[0][1]));
}

#[test]
fn solution_table_layout_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        let o = run(&["table", "--kind", "solution", "--m", "1", "--omega", "0.5", "--branch", "II", "--sector", "minus",
                      "--x-min", "0.1", "--x-max", "30", "--points", "101", "--out", p.to_str().unwrap()]);
        assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    }
    let ta = std::fs::read(&a).unwrap();
    assert_eq!(ta, std::fs::read(&b).unwrap());
    let text = String::from_utf8(ta).unwrap();
    assert!(text.starts_with("x,Z_re,Z_im,dZ_re,dZ_im\n"));
    assert!(!text.contains('\r'));
    assert_eq!(read_rows(&a).len(), 101);
}

#[test]
fn json_output_round_trips() {
    let o = run(&["table", "--kind", "solution", "--m", "1.3", "--omega", "0.7", "--x-min", "1e-1", "--x-max", "3.5e1",
                  "--points", "17", "--spacing", "log", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let json: Vec<std::collections::BTreeMap<String, f64>> = serde_json::from_slice(&o.stdout).unwrap();
    let c = run(&["table", "--kind", "solution", "--m", "1.3", "--omega", "0.7", "--x-min", "1e-1", "--x-max", "3.5e1",
                  "--points", "17", "--spacing", "log"]);
    let t = rows(&String::from_utf8(c.stdout).unwrap());
    assert_eq!(json.len(), t.len());
    for (obj, row) in json.iter().zip(&t) {
        for (k, v) in ["x", "Z_re", "Z_im", "dZ_re", "dZ_im"].iter().zip(row) {
            assert_eq!(obj[*k].to_bits(), v.to_bits());
        }
    }
}

#[test]
fn bad_table_requests_exit_2() {
    for args in [
        vec!["table", "--kind", "potential", "--m", "1", "--x-min", "2", "--x-max", "1"],
        vec!["table", "--kind", "potential", "--m", "1", "--x-min", "0", "--x-max", "1"],
        vec!["table", "--kind", "potential", "--m", "1", "--x-min", "0.1", "--x-max", "1", "--points", "1"],
        vec!["table", "--kind", "potential", "--m", "0", "--x-min", "0.1", "--x-max", "1"],
        vec!["table", "--kind", "nonsense", "--m", "1", "--x-min", "0.1", "--x-max", "1"],
    ] {
        assert_eq!(code(&run(&args)), 2, "{args:?}");
    }
}

#[test]
fn unwritable_output_exits_1() {
    let o = run(&["table", "--kind", "potential", "--m", "1", "--x-min", "0.1", "--x-max", "1", "--out", "/nonexistent/dir/t.csv"]);
    assert_eq!(code(&o), 1);
    assert_eq!(code(&run(&["figures", "--out", "/nonexistent/dir"])), 1);
}

#[test]
fn figures() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["figures", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let wp = read_rows(&dir.path().join("fig1_w_m+1.csv"));
    let wn = read_rows(&dir.path().join("fig1_w_m-1.csv"));
    let vp = read_rows(&dir.path().join("fig2_vplus_m2.csv"));
    let vm = read_rows(&dir.path().join("fig2_vminus_m2.csv"));
    assert_eq!(wp.first().unwrap()[0], 0.02);
    assert_eq!(wp.last().unwrap()[0], 5.0);
    for (a, b) in wp.iter().zip(&wn) {
        assert_eq!(a[1], -b[1]);
    }
    assert!(vp.windows(2).all(|w| w[1][1] < w[0][1]));
    let h = vm[1][0] - vm[0][0];
    let imax = (0..vm.len()).fold(0, |b, i| if vm[i][1] > vm[b][1] { i } else { b });
    assert!((vm[imax][0] - 9.0 / 64.0).abs() <= h);
}

#[test]
fn verify_closedform_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o = run(&["verify", "--suite", "closedform", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let reports: Vec<serde_json::Value> = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert!(!reports.is_empty());
    let names: Vec<&str> = reports.iter().map(|r| r["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    for r in &reports {
        assert_eq!(r["passed"].as_bool().unwrap(), r["max_error"].as_f64().unwrap() <= r["tolerance"].as_f64().unwrap());
        assert!(r["passed"].as_bool().unwrap(), "{r}");
    }
}

#[test]
fn verify_with_unachievable_tolerance_exits_1() {
    let o = run(&["verify", "--suite", "all", "--rel-tol", "1e-30"]);
    assert_eq!(code(&o), 1);
    let reports: Vec<serde_json::Value> = serde_json::from_slice(&o.stdout).unwrap();
    assert!(reports.iter().any(|r| !r["passed"].as_bool().unwrap()));
}

#[test]
fn verify_usage_errors_exit_2() {
    assert_eq!(code(&run(&["verify", "--suite", ""])), 2);
    assert_eq!(code(&run(&["verify", "--suite", "bogus"])), 2);
    assert_eq!(code(&run(&["verify"])), 2);
    assert_eq!(code(&run(&["verify", "--suite", "specfun", "--rel-tol", "-1"])), 2);
}

#[test]
fn golden_dir_override() {
    let dir = tempfile::tempdir().unwrap();
    let src = Path::new(env!("CARGO_MANIFEST_DIR")).join("golden");
    for f in ["chf.csv", "loggamma.csv", "solutions.csv"] {
        std::fs::copy(src.join(f), dir.path().join(f)).unwrap();
    }
    let ok = Command::new(BIN).args(["verify", "--suite", "specfun"]).env("SUSY_CES_GOLDEN_DIR", dir.path()).output().unwrap();
    assert_eq!(code(&ok), 0);
    // perturb one reference value in the fourth digit
    let text = std::fs::read_to_string(dir.path().join("chf.csv")).unwrap();
    let mut lines: Vec<String> = text.lines().map(String::from).collect();
    let mut fields: Vec<String> = lines[1].split(',').map(String::from).collect();
    let v: f64 = fields[5].parse().unwrap();
    fields[5] = format!("{}", v * 1.0001);
    lines[1] = fields.join(",");
    std::fs::write(dir.path().join("chf.csv"), lines.join("\n") + "\n").unwrap();
    let bad = Command::new(BIN).args(["verify", "--suite", "specfun"]).env("SUSY_CES_GOLDEN_DIR", dir.path()).output().unwrap();
    assert_eq!(code(&bad), 1);
}

#[test]
fn phase_command() {
    let o = run(&["phase", "--m", "1", "--omega", "1"]);
    assert_eq!(code(&o), 0);
    let r: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!((r["diff_mod_pi"].as_f64().unwrap() - std::f64::consts::FRAC_PI_2).abs() < 1e-3);
    assert!(r["residual_to_half_pi"].as_f64().unwrap() < 1e-3);
    assert!(!r["table"].as_array().unwrap().is_empty());
    assert_eq!(code(&run(&["phase", "--m", "0", "--omega", "1"])), 2);
    assert_eq!(code(&run(&["phase", "--m", "1", "--omega", "1", "--x-max", "50"])), 1);
}
