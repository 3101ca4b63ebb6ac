//! Generates registered sequences and checks them against b-files.

use threehalves::oeis::{emit_sequence, parse_bfile_str, registry, verify_entries, Form};

fn main() {
    for d in registry().iter().take(6) {
        let terms = emit_sequence(d.name, 8, d.native_form).unwrap();
        println!("{} ({}): {}", d.name, d.description, terms.join(", "));
    }
    println!(
        "a304272 as values: {}",
        emit_sequence("a304272", 8, Form::Value).unwrap().join(", ")
    );

    let good = "# A024629\n0 0\n1 1\n2 2\n3 20\n4 21\n";
    let report = verify_entries("a024629", &parse_bfile_str(good).unwrap()).unwrap();
    println!(
        "{}: {} rows, ok = {}",
        report.name,
        report.matched,
        report.is_ok()
    );

    let bad = "0 0\n1 1\n2 2\n3 21\n";
    let report = verify_entries("a024629", &parse_bfile_str(bad).unwrap()).unwrap();
    if let Some(m) = report.mismatch {
        println!(
            "mismatch at {}: b-file {}, generated {}",
            m.index, m.expected, m.found
        );
    }
}
