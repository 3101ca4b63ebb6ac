//! Sorted Fibonacci words: add the last two terms in base 3/2 and sort the
//! digits ascending, dropping zeros.

use threehalves::fibs::{classify, exhaustive_classification, pinocchio, Mode};
use threehalves::Numeral;

fn main() {
    let terms: Vec<String> = pinocchio(20).iter().map(|w| w.to_string()).collect();
    println!("from 0, 1: {}", terms.join(", "));

    let n = |s: &str| s.parse::<Numeral>().unwrap();
    for (x, y) in [("0", "1"), ("2", "22"), ("1", "1"), ("122", "12")] {
        let b = classify(Mode::Sorted, &n(x), &n(y), None).unwrap();
        println!(
            "({x}, {y}): {} from index {}, {:?}",
            b.kind, b.entry_index, b.witness
        );
    }

    let summary = exhaustive_classification(Mode::Sorted, 10, None).unwrap();
    println!("{} starting pairs up to 10 digits", summary.pairs);
    print!("{}", summary.to_csv());
}
