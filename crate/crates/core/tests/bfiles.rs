use std::path::PathBuf;

use threehalves::oeis::{
    lookup, parse_bfile, parse_bfile_str, registry, verify_against_bfile, verify_entries,
    BFileEntry,
};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures/bfiles")
        .join(format!("{name}.txt"))
}

#[test]
fn every_registered_sequence_matches_its_fixture() {
    for d in registry() {
        let report = verify_against_bfile(d.name, fixture(d.name)).unwrap();
        assert!(report.is_ok(), "{}: {:?}", d.name, report.mismatch);
        assert!(report.matched >= 5, "{} fixture is too short", d.name);
    }
}

#[test]
fn aliases_verify_like_names() {
    for d in registry() {
        for alias in d.aliases {
            assert_eq!(lookup(alias).unwrap().name, d.name);
            let report = verify_against_bfile(alias, fixture(d.name)).unwrap();
            assert!(report.is_ok(), "{alias}");
        }
    }
}

#[test]
fn injected_mismatch_is_located() {
    let mut entries = parse_bfile(fixture("a024629")).unwrap();
    entries[7].value += 1;
    let report = verify_entries("a024629", &entries).unwrap();
    let m = report.mismatch.expect("mismatch reported");
    assert_eq!(m.index, entries[7].index);
    assert_eq!(m.found, "211");
    assert_eq!(m.expected, "212");
    assert_eq!(report.matched, 7);
}

#[test]
fn empty_bfile_matches_nothing() {
    let entries = parse_bfile_str("# nothing here\n\n").unwrap();
    assert!(entries.is_empty());
    let report = verify_entries("a005836", &entries).unwrap();
    assert!(report.is_ok());
    assert_eq!(report.matched, 0);
}

#[test]
fn index_before_offset_is_a_mismatch() {
    let entries = [BFileEntry {
        index: 0,
        value: 1.into(),
    }];
    let m = verify_entries("a005836", &entries)
        .unwrap()
        .mismatch
        .unwrap();
    assert_eq!(m.found, "none");
}

#[test]
fn malformed_rows_are_rejected() {
    assert!(parse_bfile_str("1 2\nx 3\n").is_err());
    assert!(parse_bfile_str("1 2\n1 3\n").is_err());
    assert!(parse_bfile_str("1\n").is_err());
}

#[test]
fn verification_is_deterministic() {
    let a = verify_against_bfile("a304273", fixture("a304273")).unwrap();
    let b = verify_against_bfile("a304273", fixture("a304273")).unwrap();
    assert_eq!(a, b);
}
