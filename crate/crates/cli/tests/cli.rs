//! Command-line behaviour: exit codes, JSON shapes, example reports, and
//! the database-scan examples from the survey driver.

use std::process::Command;
use std::sync::OnceLock;

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_zetasurvey")
}

fn tmp_dir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join("zetasurvey-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

static SMALL_DB: OnceLock<std::path::PathBuf> = OnceLock::new();

fn small_db() -> &'static std::path::Path {
    SMALL_DB
        .get_or_init(|| {
            let path = tmp_dir().join("db300.csv");
            let status = Command::new(bin())
                .args(["build-db", "--min", "-300", "--max", "300", "--out"])
                .arg(&path)
                .status()
                .unwrap();
            assert!(status.success());
            path
        })
        .as_path()
}

#[test]
fn build_db_counts_match_criterion_scan() {
    let path = tmp_dir().join("db50.csv");
    let out = Command::new(bin())
        .args(["build-db", "--min", "-50", "--max", "-3", "--out"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    // direct criterion scan yields 16 fundamental discriminants here
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count() - 1, 16);

    let out = Command::new(bin())
        .args(["build-db", "--min", "2", "--max", "50", "--out"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count() - 1, 14);

    // empty range: header-only file
    let out = Command::new(bin())
        .args(["build-db", "--min", "1", "--max", "1", "--out"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.trim(), "label,degree,r1,r2,disc,h,reg,w");
}

#[test]
fn special_examples_as_json() {
    let out = Command::new(bin())
        .args(["special", "--field", "quad:5", "--n", "0"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["point"], 0);
    assert_eq!(v["order"], 1);
    assert!((v["leading"].as_f64().unwrap() + 0.240_605_912_53).abs() < 1e-9);

    let out = Command::new(bin())
        .args(["special", "--field", "Q", "--n", "-1"])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!((v["leading"].as_f64().unwrap() + 1.0 / 12.0).abs() < 1e-12);
    assert_eq!(v["method"], "functional_equation");

    let out = Command::new(bin())
        .args(["special", "--field", "quad:-4", "--n", "1"])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!((v["leading"].as_f64().unwrap() - std::f64::consts::PI / 4.0).abs() < 1e-12);
    assert_eq!(v["order"], -1);
}

#[test]
fn cross_module_coherence_zeta_zero_vs_record() {
    // |zeta*(0)| from the special-value path equals hR/w from the raw
    // record to 1e-12 for every row of the database
    let text = std::fs::read_to_string(small_db()).unwrap();
    for line in text.lines().skip(1) {
        let parts: Vec<&str> = line.split(',').collect();
        let label = parts[0];
        let h: f64 = parts[5].parse().unwrap();
        let reg: f64 = parts[6].parse().unwrap();
        let w: f64 = parts[7].parse().unwrap();
        let out = Command::new(bin())
            .args(["special", "--field", label, "--n", "0", "--db"])
            .arg(small_db())
            .output()
            .unwrap();
        assert!(out.status.success(), "{label}");
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        let leading = v["leading"].as_f64().unwrap();
        let expect = -h * reg / w;
        assert!(
            (leading - expect).abs() <= 1e-12 * expect.abs() + 1e-9 * f64::EPSILON,
            "{label}: {leading} vs {expect}"
        );
    }
}

#[test]
fn exit_codes_for_domain_and_unconverged() {
    // unsupported n: domain error, exit 2
    let out = Command::new(bin())
        .args(["survey", "--db"])
        .arg(small_db())
        .args(["--n", "2", "--grid", "1,2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    // unknown field: exit 2
    let out = Command::new(bin())
        .args(["special", "--field", "nosuch", "--n", "0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    // radius too small: exit 2
    let out = Command::new(bin())
        .args(["minima", "--basis", "1,0;0,3", "--norm", "euclidean", "--radius", "1.5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    // quadrature cap without convergence: exit 3, but the result line is
    // still printed with its unconverged marker
    let out = Command::new(bin())
        .args(["mahler", "--poly", "x1 + x2 + 1", "--tol", "1e-13"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("false"), "missing unconverged marker: {text}");
}

#[test]
fn survey_counts_are_nondecreasing_and_bounded_fields_skipped() {
    let out = Command::new(bin())
        .args(["survey", "--db"])
        .arg(small_db())
        .args(["--n", "0", "--grid", "0.3,0.5,1,5"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let counts: Vec<usize> = text
        .lines()
        .skip_while(|l| !l.starts_with("B,"))
        .skip(1)
        .take(4)
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert_eq!(counts.len(), 4);
    assert!(counts.windows(2).all(|w| w[0] <= w[1]), "{counts:?}");

    // ingested high-degree rows are skipped with a notice under n <= -1
    let mixed = tmp_dir().join("mixed.csv");
    let mut text = std::fs::read_to_string(small_db()).unwrap();
    text.push_str("cubic,3,1,1,-23,1,0.2811,2\n");
    std::fs::write(&mixed, text).unwrap();
    let out = Command::new(bin())
        .args(["survey", "--db"])
        .arg(&mixed)
        .args(["--n", "-1", "--grid", "1,10"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(
        text.lines().any(|l| l.starts_with("skipped,cubic")),
        "missing skip notice:\n{text}"
    );
}

#[test]
fn brauer_siegel_examples() {
    let out = Command::new(bin())
        .args(["brauer-siegel", "--db"])
        .arg(small_db())
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    // Q(i): log(1)/log(2) = 0
    let qi = text
        .lines()
        .find(|l| l.starts_with("quad:-4,"))
        .expect("row for disc -4");
    assert_eq!(qi.split(',').nth(2).unwrap(), "0");
    // disc -23: log 3 / log sqrt(23)
    let d23 = text
        .lines()
        .find(|l| l.starts_with("quad:-23,"))
        .expect("row for disc -23");
    let ratio: f64 = d23.split(',').nth(2).unwrap().parse().unwrap();
    let expect = 3f64.ln() / 23f64.sqrt().ln();
    assert!((ratio - expect).abs() < 1e-10);
}

#[test]
fn survey_dyadic_band_fractions_stay_within_factor_two() {
    // imaginary quadratics |disc| <= 8000: the fraction with
    // |zeta*(1)| <= 1 in dyadic bands [X, 2X], X = 500 * 2^j
    let path = tmp_dir().join("dyadic.csv");
    let status = Command::new(bin())
        .args(["build-db", "--min", "-8000", "--max", "-3", "--out"])
        .arg(&path)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(bin())
        .args(["survey", "--db"])
        .arg(&path)
        .args(["--n", "1", "--grid", "1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<(u64, f64)> = text
        .lines()
        .filter(|l| l.starts_with("quad:"))
        .map(|l| {
            let mut parts = l.split(',');
            let _label = parts.next().unwrap();
            let d: u64 = parts.next().unwrap().parse().unwrap();
            let v: f64 = parts.next().unwrap().parse().unwrap();
            (d, v)
        })
        .collect();
    let mut fractions = Vec::new();
    for j in 0..4 {
        let lo = 500u64 << j;
        let hi = lo * 2;
        let band: Vec<&(u64, f64)> =
            rows.iter().filter(|(d, _)| *d >= lo && *d < hi).collect();
        assert!(!band.is_empty());
        let hits = band.iter().filter(|(_, v)| v.abs() <= 1.0).count();
        fractions.push(hits as f64 / band.len() as f64);
    }
    let lo = fractions.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = fractions.iter().cloned().fold(0.0f64, f64::max);
    assert!(
        hi <= 2.0 * lo,
        "dyadic fractions vary by more than a factor 2: {fractions:?}"
    );
}

#[test]
fn constants_file_is_honored_and_echoed() {
    let path = tmp_dir().join("consts.txt");
    std::fs::write(&path, "c0=7.5\n").unwrap();
    let out = Command::new(bin())
        .arg("--constants")
        .arg(&path)
        .args(["bounds", "--which", "count-negative", "--args", "b=100,n=-1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("c0=7.5"), "constants not echoed: {text}");
}
