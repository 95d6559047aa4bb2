//! Every verb against a reviewed expected output. `HOPFLAB_BLESS=1` rewrites the files.

use std::path::PathBuf;

use hopflab_cli::{run_with_cap, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn check(name: &str, args: &[&str], code: i32) {
    check_with(name, args, code, None, |s| s)
}

fn check_with(name: &str, args: &[&str], code: i32, cap: Option<&str>, scrub: impl Fn(String) -> String) {
    let args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    let (got_code, text) = run_with_cap(&args, cap);
    let text = scrub(text);
    assert!(text.is_ascii(), "{name}: non-ASCII output");
    let path = golden_dir().join(format!("{name}.txt"));
    if std::env::var_os("HOPFLAB_BLESS").is_some() {
        std::fs::write(&path, &text).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden {}", path.display()));
    assert_eq!(text, expected, "{name}: output differs from golden");
    assert_eq!(got_code, code, "{name}: exit code\n{text}");
}

#[test]
fn normalize() {
    check("normalize", &["normalize", "--algebra", "uqsl2", "F E"], EXIT_PASS);
    check("normalize_relation", &["normalize", "E F - F E - (K - K^-1)/(q - q^-1)"], EXIT_PASS);
    check("normalize_v1", &["normalize", "(q - q^-1) E K^-1 a c - c^2"], EXIT_PASS);
    check("normalize_syntax", &["normalize", "E +* F"], EXIT_USAGE);
    check("normalize_records", &["--format", "records", "normalize", "v5"], EXIT_PASS);
}

#[test]
fn act_left() {
    check("act_left", &["act-left", "b", "E"], EXIT_PASS);
}

#[test]
fn act_right() {
    check("act_right", &["act-right", "c", "F"], EXIT_PASS);
}

#[test]
fn weight() {
    check("weight", &["weight", "v1"], EXIT_PASS);
    check("weight_mixed", &["weight", "a + b"], EXIT_FAIL);
}

#[test]
fn hw() {
    check("hw", &["hw", "v5"], EXIT_PASS);
    check("hw_not", &["hw", "a"], EXIT_FAIL);
    check("hw_degree", &["hw", "--degree", "2"], EXIT_PASS);
}

#[test]
fn closure() {
    check("closure", &["closure", "--seed", "v3", "--side", "bi"], EXIT_PASS);
    check("closure_records", &["--format", "records", "closure", "--seed", "v5"], EXIT_PASS);
    check_with("closure_cap", &["closure", "--seed", "v3"], EXIT_FAIL, Some("8"), |s| s);
    check_with("closure_bad_cap", &["closure", "--seed", "v3"], EXIT_USAGE, Some("lots"), |s| s);
}

#[test]
fn decompose() {
    check("decompose", &["decompose", "--seed", "v3"], EXIT_PASS);
}

#[test]
fn simple() {
    check("simple", &["simple", "--seed", "v3"], EXIT_PASS);
}

#[test]
fn casimir() {
    check("casimir", &["casimir", "--seed", "v6"], EXIT_PASS);
}

#[test]
fn hilbert() {
    check("hilbert", &["hilbert", "--max-degree", "4"], EXIT_PASS);
}

#[test]
fn identities() {
    check("identities", &["identities"], EXIT_PASS);
    check("identities_unknown", &["identities", "--suite", "nope"], EXIT_USAGE);
}

#[test]
fn lemmas() {
    check("lemmas", &["lemmas", "--bound", "1"], EXIT_PASS);
}

#[test]
fn peter_weyl() {
    check("peter_weyl", &["peter-weyl", "--degree", "2"], EXIT_PASS);
}

#[test]
fn pairing() {
    check("pairing", &["pairing", "a", "K"], EXIT_PASS);
}

#[test]
fn tables() {
    check("tables", &["tables"], EXIT_PASS);
    check("tables_records", &["--format", "records", "tables"], EXIT_PASS);
}

#[test]
fn characters() {
    check("characters", &["characters"], EXIT_PASS);
}

#[test]
fn save_and_load() {
    let dir = std::env::temp_dir().join(format!("hopflab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("h20.archive");
    let out_text = out.display().to_string();
    check_with("save", &["save", "--seed", "v5", "--out", &out_text], EXIT_PASS, None, |s| s.replace(&out_text, "<out>"));
    check("load", &["load", &out_text], EXIT_PASS);
    let fixture = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures/H20.archive");
    assert_eq!(std::fs::read(&out).unwrap(), std::fs::read(fixture).unwrap());
    std::fs::remove_dir_all(dir).unwrap();
    check("load_missing", &["load", "/nonexistent/x.archive"], EXIT_FAIL);
}

#[test]
fn usage_errors() {
    check("unknown_verb", &["bogus"], EXIT_USAGE);
    check("unknown_algebra", &["normalize", "--algebra", "sl3", "E"], EXIT_USAGE);
}
