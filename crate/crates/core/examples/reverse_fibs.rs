//! Reverse sorted Fibonacci words: digits sorted descending, zeros dropped.
//! Orbits end in a 3-cycle or in the growing tail.

use threehalves::fibs::{
    classify, exhaustive_classification, oihcconip, reverse_fib_step, Mode, ReverseWord,
};
use threehalves::Numeral;

fn main() {
    let mut terms = vec![ReverseWord::ZERO, ReverseWord::new(0, 1)];
    while terms.len() < 15 {
        let k = terms.len();
        terms.push(reverse_fib_step(&terms[k - 2], &terms[k - 1]));
    }
    let shown: Vec<String> = terms.iter().map(|t| t.to_string()).collect();
    println!("from 0, 1: {}", shown.join(", "));

    let tail: Vec<String> = oihcconip(8, 2).iter().map(|t| t.to_string()).collect();
    println!("growing tail: {}", tail.join(", "));

    let n = |s: &str| s.parse::<Numeral>().unwrap();
    for (x, y) in [("0", "1"), ("2211", "2211"), ("2221", "21")] {
        let b = classify(Mode::Reverse, &n(x), &n(y), None).unwrap();
        println!("({x}, {y}): {} from index {}", b.kind, b.entry_index);
    }

    let summary = exhaustive_classification(Mode::Reverse, 10, None).unwrap();
    print!("{}", summary.to_csv());
}
