//! End-to-end tests of the command-line binary and its exit-code
//! contract: 0 success, 1 verification failure, 2 usage or I/O failure.

use std::path::PathBuf;
use std::process::Command;

fn chartab() -> Command {
    Command::new(env!("CARGO_BIN_EXE_chartab"))
}

fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

#[test]
fn classes_with_golden_comparison_succeeds() {
    let out = chartab()
        .args(["classes", "--group", "g9", "--golden"])
        .env("CHARTAB_FIXTURES", fixtures_dir())
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("6 classes"));
    assert!(text.contains("matches golden table"));
}

#[test]
fn classes_reports_sylow_probe() {
    let out = chartab()
        .args([
            "classes", "--group", "g10", "--sylow", "2", "--seed", "3",
        ])
        .env("CHARTAB_FIXTURES", fixtures_dir())
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("sylow 2: order 16"), "{text}");
}

#[test]
fn missing_fixture_exits_2() {
    let out = chartab()
        .args([
            "classes",
            "--group",
            "g9",
            "--fixture",
            "/nonexistent/g9.gens",
        ])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn non_transitive_fixture_exits_1() {
    let dir = std::env::temp_dir().join("chartab-test-fixtures");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cyclic12.gens");
    std::fs::write(&path, "degree: 12\n(1,2,3,4,5,6,7,8,9,10,11,12)\n").unwrap();
    let out = chartab()
        .args(["classes", "--group", "g12"])
        .arg("--fixture")
        .arg(&path)
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(1), "{out:?}");
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("not sharply 5-transitive"), "{err}");
}

#[test]
fn mn_subcommand_values_and_exit_codes() {
    let out = chartab()
        .args(["mn", "--lambda", "9,3", "--mu", "2,2,2,2,1,1,1,1"])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "10");

    let out = chartab()
        .args(["mn", "--lambda", "12", "--mu", "11,1"])
        .output()
        .expect("binary runs");
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "1");

    let out = chartab()
        .args(["mn", "--lambda", "2,1", "--mu", "4"])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn derive_with_golden_succeeds_and_is_byte_identical() {
    let dir = std::env::temp_dir().join("chartab-test-derive");
    std::fs::create_dir_all(&dir).unwrap();
    let out_path = dir.join("g10.json");
    let run = || {
        let out = chartab()
            .args(["derive", "--group", "g10", "--golden", "--format", "json"])
            .arg("--output")
            .arg(&out_path)
            .env("CHARTAB_FIXTURES", fixtures_dir())
            .output()
            .expect("binary runs");
        assert_eq!(out.status.code(), Some(0), "{out:?}");
        let table = std::fs::read(&out_path).unwrap();
        let log = std::fs::read(out_path.with_extension("log")).unwrap();
        let log_json = std::fs::read(out_path.with_extension("log.json")).unwrap();
        (table, log, log_json)
    };
    let first = run();
    let second = run();
    assert_eq!(first, second, "identical invocations must be byte-identical");
    let log_text = String::from_utf8_lossy(&first.1).to_string();
    assert!(log_text.contains("STEP 1:"));
    assert!(log_text.contains("DIVERGENCE [g10-chiE-eight-columns]"));
}

#[test]
fn derive_text_format_prints_table_and_log() {
    let out = chartab()
        .args(["derive", "--group", "g9", "--format", "text"])
        .env("CHARTAB_FIXTURES", fixtures_dir())
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("chi_5"));
    assert!(text.contains("DERIVATION LOG G9"));
    assert!(text.contains("structure:"));
}

#[test]
fn unknown_group_exits_2() {
    let out = chartab()
        .args(["classes", "--group", "g13"])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
}
