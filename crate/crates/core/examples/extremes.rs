//! Smallest and largest integers with a given number of digits, and the two
//! digit streams whose prefixes are the even extremes.

use threehalves::extremes::{evenberry_digits, evenmelon_digits, extreme_tables};

fn main() {
    println!(
        "{:>3} {:>8} {:>8} {:>8} {:>8}",
        "k", "S_k", "L_k", "s_k", "l_k"
    );
    for r in extreme_tables(16) {
        println!(
            "{:>3} {:>8} {:>8} {:>8} {:>8}",
            r.k, r.smallest, r.largest, r.smallest_even, r.largest_even
        );
    }
    let r = &extreme_tables(12)[11];
    println!("smallest 12-digit: {}", r.smallest_numeral);
    println!("largest 12-digit:  {}", r.largest_numeral);

    println!("evenberry: {}...", evenberry_digits(60));
    println!("evenmelon: {}...", evenmelon_digits(60));
}
