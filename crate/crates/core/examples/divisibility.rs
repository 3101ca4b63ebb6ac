//! Divisibility by 3 and by 5 read off base 3/2 digits.

use num_bigint::BigUint;
use threehalves::divisibility::report;

fn main() {
    println!(
        "{:>6} {:>14} {:>6} {:>4} {:>6} {:>5}",
        "n", "numeral", "zeros", "v3", "altsum", "n%5"
    );
    for n in [1u32, 9, 27, 45, 54, 100, 243, 1215, 9999] {
        let r = report(&BigUint::from(n)).unwrap();
        println!(
            "{:>6} {:>14} {:>6} {:>4} {:>6} {:>5}",
            r.n,
            r.numeral,
            r.trailing_zeros,
            r.three_adic_valuation,
            r.alt_digit_sum_mod5,
            r.n_mod5
        );
        assert!(r.is_consistent());
    }
}
