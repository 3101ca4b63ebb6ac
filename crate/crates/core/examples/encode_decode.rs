//! Writes integers in base 3/2 and reads digit strings back as exact values.

use num_bigint::BigUint;
use threehalves::{decode_digits, encode, encode_integer, BaseSpec, Numeral};

fn main() {
    for n in [0u64, 1, 5, 11, 32, 100, 1000] {
        let numeral = encode(n);
        println!("{n:>5} = {numeral} ({} digits)", numeral.len());
    }

    // any digit string has a value, but only some are integers
    for s in ["2102", "11", "212022", "2"] {
        let n: Numeral = s.parse().expect("digits 0, 1, 2");
        println!("{s} -> {}", n.decode());
    }

    let big: BigUint = "340282366920938463463374607431768211456".parse().unwrap();
    let numeral = encode_integer(&big, BaseSpec::THREE_HALVES);
    assert_eq!(numeral.decode_integer().unwrap(), big);
    println!("2^128 has {} base 3/2 digits", numeral.len());

    // the same machinery works for other fractional bases
    let five_halves = BaseSpec::new(5, 2).unwrap();
    let n = encode_integer(&BigUint::from(100u32), five_halves);
    println!(
        "100 in base 5/2 = {n}, back to {}",
        decode_digits(five_halves, n.digits())
    );
}
