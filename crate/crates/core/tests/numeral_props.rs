use num_bigint::BigUint;
use proptest::prelude::*;

use threehalves::numeral::{
    add_digitwise, decode_digits, encode, encode_integer, normalize, BaseSpec, ExplodingMachine,
    Numeral,
};

const B: BaseSpec = BaseSpec::THREE_HALVES;
const N: u64 = 10_000;

fn text(n: u64) -> String {
    encode(n).to_string()
}

/// Fires random unstable boxes until the machine is stable.
fn fire_in_order(raw: &[u64], picks: &[usize]) -> Numeral {
    let mut m = ExplodingMachine::new(B, raw);
    let mut k = 0;
    loop {
        let open = m.unstable_boxes();
        if open.is_empty() {
            break;
        }
        let pick = picks.get(k % picks.len().max(1)).copied().unwrap_or(0);
        assert!(m.fire(open[pick % open.len()]));
        k += 1;
    }
    m.into_numeral()
}

fn fire_leftmost_first(raw: &[u64]) -> Numeral {
    let mut m = ExplodingMachine::new(B, raw);
    while let Some(&i) = m.unstable_boxes().last() {
        m.fire(i);
    }
    m.into_numeral()
}

proptest! {
    #[test]
    fn explosion_order_does_not_matter(
        raw in prop::collection::vec(0u64..=20, 0..=12),
        picks in prop::collection::vec(any::<usize>(), 1..64),
    ) {
        let swept = normalize(&raw, B);
        prop_assert_eq!(&fire_in_order(&raw, &picks), &swept);
        prop_assert_eq!(&fire_leftmost_first(&raw), &swept);
        // value is conserved by every explosion
        prop_assert_eq!(swept.decode(), decode_digits(B, &raw));
    }

    #[test]
    fn big_round_trip(n in any::<u128>()) {
        let v = BigUint::from(n);
        let numeral = encode_integer(&v, B);
        prop_assert_eq!(numeral.decode_integer().unwrap(), v.clone());
        let reparsed: Numeral = numeral.to_string().parse().unwrap();
        prop_assert_eq!(reparsed, numeral);
    }

    #[test]
    fn addition_matches_values(a in 0u64..1_000_000, b in 0u64..1_000_000) {
        let sum = &encode(a) + &encode(b);
        prop_assert_eq!(sum, encode(a + b));
    }

    #[test]
    fn other_bases_round_trip(p in 2u32..8, q in 1u32..7, n in 0u64..5000) {
        prop_assume!(q < p && num_integer::Integer::gcd(&p, &q) == 1);
        let base = BaseSpec::new(p, q).unwrap();
        let numeral = encode_integer(&BigUint::from(n), base);
        prop_assert_eq!(numeral.decode_integer().unwrap(), BigUint::from(n));
        prop_assert!(numeral.digits().iter().all(|&d| d < p));
    }
}

#[test]
fn successor_by_adding_one() {
    let one = encode(1);
    let mut cur = encode(0);
    for n in 0..N {
        assert_eq!(cur, encode(n), "n = {n}");
        cur = &cur + &one;
    }
}

#[test]
fn successor_is_a_carry_of_the_units_box() {
    for n in 0..2000u64 {
        let raw = add_digitwise(encode(n).digits(), &[1]);
        assert_eq!(normalize(&raw, B), encode(n + 1));
    }
}

#[test]
fn prefix_is_two_floor_third() {
    for n in 3..N {
        let prefix = encode(n).remove_last_digit().unwrap();
        assert_eq!(prefix, encode(2 * (n / 3)), "n = {n}");
    }
}

#[test]
fn proper_prefixes_are_even() {
    for n in 0..N {
        let digits = encode(n).digits().to_vec();
        for len in 1..digits.len() {
            let v = decode_digits(B, &digits[..len]);
            let v = v.to_biguint().expect("prefix is an integer");
            assert!(!v.bit(0), "prefix {len} of {n} is odd");
        }
    }
}

#[test]
fn leading_digit_patterns() {
    for n in 0..N {
        let s = text(n);
        if n >= 2 {
            assert!(s.starts_with('2'), "{n} = {s}");
        }
        if n >= 6 {
            assert!(s.starts_with("21"), "{n} = {s}");
        }
        if n >= 8 {
            let third = s.as_bytes()[2];
            assert!(third == b'0' || third == b'2', "{n} = {s}");
        }
        if s.len() >= 2 && s.bytes().all(|c| c == s.as_bytes()[0]) {
            assert_eq!(n, 5, "{s} is a repdigit");
        }
        if s.starts_with("211") {
            assert_eq!(n, 7);
        }
    }
}

#[test]
fn ending_period_small_k() {
    for k in 1..=4u32 {
        let period = 3u64.pow(k);
        for n in 0..period {
            assert_eq!(
                encode(n).suffix(k as usize),
                encode(n + period).suffix(k as usize)
            );
        }
        // no shorter period: 3^(k-1) already fails somewhere
        let shorter = period / 3;
        assert!((0..period)
            .any(|n| encode(n).suffix(k as usize) != encode(n + shorter).suffix(k as usize)));
    }
}
