use std::path::PathBuf;

use hopflab::bimodlab::{change_of_basis, closure, example_name, example_seed, ActionSide, FDBimodule, DEFAULT_CAP};
use hopflab::store::{archive_text, load_module, parse_archive, save_module, sign, StoreError};
use hopflab::vectors::Example;

const EXAMPLES: [Example; 3] = [Example::H11, Example::H20, Example::H02];

fn fixture(ex: Example) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(format!("{}.archive", example_name(ex)))
}

fn fresh(ex: Example) -> FDBimodule {
    closure(&[example_seed(ex)], ActionSide::Bi, DEFAULT_CAP).unwrap()
}

/// Set HOPFLAB_BLESS=1 to rewrite the fixtures from fresh closures.
#[test]
fn fixtures_match_fresh_closures() {
    for ex in EXAMPLES {
        let m = fresh(ex);
        if std::env::var_os("HOPFLAB_BLESS").is_some() {
            save_module(&m, fixture(ex)).unwrap();
        }
        let (stored, warnings) = load_module(fixture(ex)).unwrap();
        assert!(warnings.is_empty(), "{warnings:?}");
        assert_eq!(stored.dim(), m.dim());
        let p = change_of_basis(&m, &stored.basis).unwrap();
        assert_eq!(p.rank(), m.dim());
        for (ours, theirs) in [(&m.left, &stored.left), (&m.right, &stored.right)] {
            for (g, mat) in theirs {
                assert!(&ours[g] * &p == &p * mat, "{} {g}", example_name(ex));
            }
        }
    }
}

#[test]
fn round_trip_and_determinism() {
    let dir = std::env::temp_dir().join(format!("hopflab-store-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let m = fresh(Example::H11);
    let (a, b) = (dir.join("a"), dir.join("b"));
    save_module(&m, &a).unwrap();
    save_module(&m, &b).unwrap();
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let (back, _) = load_module(&a).unwrap();
    assert_eq!(back.dim(), 16);
    assert_eq!(back.basis, m.basis);
    assert_eq!(back.left, m.left);
    assert_eq!(back.right, m.right);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn missing_file_is_io() {
    assert!(matches!(load_module("/nonexistent/hopflab.archive"), Err(StoreError::Io(_))));
}

#[test]
fn tampering_is_detected() {
    let text = archive_text(&fresh(Example::H20));
    let body = &text[..text.rfind("checksum ").unwrap()];
    let section = body.find("[left E]\n").unwrap() + "[left E]\n".len();
    let row_end = section + body[section..].find('\n').unwrap();
    let row = &body[section..row_end];
    let edited_row = match row.split_once("; ") {
        Some((first, rest)) => format!("{}; {rest}", if first == "0" { "1" } else { "0" }),
        None => unreachable!(),
    };
    let edited = format!("{}{edited_row}{}", &body[..section], &body[row_end..]);

    let unsigned = format!("{edited}{}", &text[body.len()..]);
    assert!(matches!(parse_archive(&unsigned), Err(StoreError::CorruptArchive(_))));
    assert!(matches!(parse_archive(&sign(&edited)), Err(StoreError::Revalidation(_))));
}
