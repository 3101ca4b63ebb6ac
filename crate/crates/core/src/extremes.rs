//! Smallest and largest integers (and even integers) with a given number of
//! base 3/2 digits, plus the evenberry and evenmelon digit streams.
//!
//! Indexing is by digit count `k >= 1`:
//!
//! | symbol | meaning                          | recurrence                         |
//! |--------|----------------------------------|------------------------------------|
//! | `S_k`  | smallest `k`-digit integer       | `S_1 = 0`, `S_2 = 3`, `S_{k+1} = 3 * ceil(S_k / 2)` |
//! | `L_k`  | largest `k`-digit integer        | `L_k = S_{k+1} - 1`                |
//! | `s_k`  | smallest even `k`-digit integer  | `s_1 = 2`, `s_{k+1} = 2 * ceil(3 s_k / 4)` |
//! | `l_k`  | largest even `k`-digit integer   | `l_1 = 2`, `l_{k+1} = 2 * floor(3 l_k / 4) + 2` |

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::numeral::{encode_integer, BaseSpec, Numeral};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtremesError {
    #[error("{numeral} is not the smallest integer of its length")]
    MalformedInput { numeral: String },
}

/// All four extremes for one digit count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremeTable {
    pub k: usize,
    pub smallest: BigUint,
    pub largest: BigUint,
    pub smallest_even: BigUint,
    pub largest_even: BigUint,
    pub smallest_numeral: Numeral,
    pub largest_numeral: Numeral,
    pub smallest_even_numeral: Numeral,
    pub largest_even_numeral: Numeral,
}

fn numeral(n: &BigUint) -> Numeral {
    encode_integer(n, BaseSpec::THREE_HALVES)
}

/// `S_1, ..., S_k`.
pub fn smallest_values(k: usize) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(k);
    let mut cur = BigUint::zero();
    for i in 0..k {
        if i == 1 {
            cur = BigUint::from(3u32);
        } else if i > 1 {
            cur = next_smallest(&cur);
        }
        out.push(cur.clone());
    }
    out
}

/// One step of `a -> 3a/2` for even `a` and `a -> 3(a+1)/2` for odd `a`.
pub fn next_smallest(a: &BigUint) -> BigUint {
    a.div_ceil(&BigUint::from(2u32)) * 3u32
}

/// `L_1, ..., L_k`.
pub fn largest_values(k: usize) -> Vec<BigUint> {
    smallest_values(k + 1)
        .into_iter()
        .skip(1)
        .map(|s| s - 1u32)
        .collect()
}

/// `s_1, ..., s_k`.
pub fn smallest_even_values(k: usize) -> Vec<BigUint> {
    std::iter::successors(Some(BigUint::from(2u32)), |s| {
        Some((s * 3u32).div_ceil(&BigUint::from(4u32)) * 2u32)
    })
    .take(k)
    .collect()
}

/// `l_1, ..., l_k`.
pub fn largest_even_values(k: usize) -> Vec<BigUint> {
    std::iter::successors(Some(BigUint::from(2u32)), |l| {
        Some((l * 3u32) / 4u32 * 2u32 + 2u32)
    })
    .take(k)
    .collect()
}

fn nth(values: Vec<BigUint>) -> BigUint {
    values.into_iter().last().expect("k >= 1")
}

/// `S_k` and its numeral. `S_1` is 0.
///
/// # Panics
///
/// If `k` is zero; the same holds for the other `*_with_digits` functions.
pub fn smallest_with_digits(k: usize) -> (BigUint, Numeral) {
    assert!(k >= 1, "digit count must be at least 1");
    let v = nth(smallest_values(k));
    let n = numeral(&v);
    (v, n)
}

pub fn largest_with_digits(k: usize) -> (BigUint, Numeral) {
    assert!(k >= 1, "digit count must be at least 1");
    let v = nth(largest_values(k));
    let n = numeral(&v);
    (v, n)
}

pub fn smallest_even_with_digits(k: usize) -> (BigUint, Numeral) {
    assert!(k >= 1, "digit count must be at least 1");
    let v = nth(smallest_even_values(k));
    let n = numeral(&v);
    (v, n)
}

pub fn largest_even_with_digits(k: usize) -> (BigUint, Numeral) {
    assert!(k >= 1, "digit count must be at least 1");
    let v = nth(largest_even_values(k));
    let n = numeral(&v);
    (v, n)
}

/// Rows for `k = 1..=max_k`.
pub fn extreme_tables(max_k: usize) -> Vec<ExtremeTable> {
    let s = smallest_values(max_k);
    let l = largest_values(max_k);
    let se = smallest_even_values(max_k);
    let le = largest_even_values(max_k);
    (0..max_k)
        .map(|i| ExtremeTable {
            k: i + 1,
            smallest_numeral: numeral(&s[i]),
            largest_numeral: numeral(&l[i]),
            smallest_even_numeral: numeral(&se[i]),
            largest_even_numeral: numeral(&le[i]),
            smallest: s[i].clone(),
            largest: l[i].clone(),
            smallest_even: se[i].clone(),
            largest_even: le[i].clone(),
        })
        .collect()
}

/// Turns the numeral of `S_{n+1}` into the numeral of `L_n`: the leading
/// `21` becomes `2`, the trailing `0` becomes `2`, and every digit between
/// them goes up by one.
pub fn transform_smallest_to_largest(s: &Numeral) -> Result<Numeral, ExtremesError> {
    let malformed = || ExtremesError::MalformedInput {
        numeral: s.to_string(),
    };
    let d = s.digits();
    if !s.base().is_three_halves() {
        return Err(malformed());
    }
    if d == [2, 0] {
        return Ok("2".parse().expect("literal"));
    }
    if d.len() < 3 || d[0] != 2 || d[1] != 1 || d[d.len() - 1] != 0 {
        return Err(malformed());
    }
    let middle = &d[2..d.len() - 1];
    if middle.iter().any(|&x| x > 1) {
        return Err(malformed());
    }
    let mut out = Vec::with_capacity(d.len() - 1);
    out.push(2);
    out.extend(middle.iter().map(|&x| x + 1));
    out.push(2);
    Ok(Numeral::from_digits(BaseSpec::THREE_HALVES, out).expect("digits in range"))
}

/// Which infinite even stream to generate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvenStream {
    /// Digits of the ultimate smallest even integer.
    Evenberry,
    /// Digits of the ultimate largest even integer.
    Evenmelon,
}

/// Iterator over the digits of an infinite even stream.
///
/// Each numeral of `s_{k+1}` (resp. `l_{k+1}`) extends that of `s_k` by one
/// digit, namely `s_{k+1} - 3 s_k / 2`, so the stream is produced from the
/// value recurrence without re-encoding anything.
#[derive(Debug, Clone)]
pub struct EvenDigits {
    stream: EvenStream,
    current: Option<BigUint>,
}

impl EvenDigits {
    pub fn new(stream: EvenStream) -> Self {
        EvenDigits {
            stream,
            current: None,
        }
    }
}

impl Iterator for EvenDigits {
    type Item = u8;

    fn next(&mut self) -> Option<u8> {
        let Some(cur) = self.current.take() else {
            self.current = Some(BigUint::from(2u32));
            return Some(2);
        };
        let next = match self.stream {
            EvenStream::Evenberry => (&cur * 3u32).div_ceil(&BigUint::from(4u32)) * 2u32,
            EvenStream::Evenmelon => (&cur * 3u32) / 4u32 * 2u32 + 2u32,
        };
        let digit = &next - (cur >> 1u32) * 3u32;
        self.current = Some(next);
        Some(digit.to_u8().expect("stream digits are 0, 1 or 2"))
    }
}

fn stream_string(stream: EvenStream, n: usize) -> String {
    EvenDigits::new(stream)
        .take(n)
        .map(|d| char::from(b'0' + d))
        .collect()
}

/// The first `n` digits of the evenberry stream.
pub fn evenberry_digits(n: usize) -> String {
    stream_string(EvenStream::Evenberry, n)
}

/// The first `n` digits of the evenmelon stream.
pub fn evenmelon_digits(n: usize) -> String {
    stream_string(EvenStream::Evenmelon, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strs(k: usize, f: fn(usize) -> (BigUint, Numeral)) -> Vec<String> {
        (1..=k).map(|i| f(i).1.to_string()).collect()
    }

    fn vals(v: Vec<BigUint>) -> Vec<u64> {
        v.iter().map(|x| x.to_u64().unwrap()).collect()
    }

    #[test]
    fn smallest_k_digit() {
        assert_eq!(
            strs(9, smallest_with_digits),
            [
                "0",
                "20",
                "210",
                "2100",
                "21010",
                "210110",
                "2101100",
                "21011000",
                "210110000"
            ]
        );
        assert_eq!(
            vals(smallest_values(15))[1..],
            [3, 6, 9, 15, 24, 36, 54, 81, 123, 186, 279, 420, 630, 945]
        );
        assert_eq!(smallest_with_digits(1).0, BigUint::zero());
    }

    #[test]
    fn largest_k_digit() {
        assert_eq!(
            strs(8, largest_with_digits),
            ["2", "22", "212", "2122", "21222", "212212", "2122112", "21221112"]
        );
        assert_eq!(vals(largest_values(8)), [2, 5, 8, 14, 23, 35, 53, 80]);
    }

    #[test]
    fn even_extremes() {
        assert_eq!(
            vals(smallest_even_values(9)),
            [2, 4, 6, 10, 16, 24, 36, 54, 82]
        );
        assert_eq!(
            strs(9, smallest_even_with_digits),
            [
                "2",
                "21",
                "210",
                "2101",
                "21011",
                "210110",
                "2101100",
                "21011000",
                "210110001"
            ]
        );
        assert_eq!(vals(largest_even_values(8)), [2, 4, 8, 14, 22, 34, 52, 80]);
        assert_eq!(
            strs(9, largest_even_with_digits),
            [
                "2",
                "21",
                "212",
                "2122",
                "21221",
                "212211",
                "2122111",
                "21221112",
                "212211122"
            ]
        );
    }

    #[test]
    fn transform_examples() {
        let t = |s: &str| transform_smallest_to_largest(&s.parse().unwrap()).map(|n| n.to_string());
        assert_eq!(t("210110000").unwrap(), "21221112");
        assert_eq!(t("20").unwrap(), "2");
        assert_eq!(t("2100").unwrap(), "212");
        assert!(t("2120").is_err());
        assert!(t("2101").is_err());
        assert!(t("2").is_err());
    }

    #[test]
    fn streams() {
        assert_eq!(evenberry_digits(34), "2101100011010011010100110100101000");
        assert_eq!(evenmelon_digits(32), "21221112212112212121122121121211");
        // l_33 = 2099734 by exhaustive search; its last digit is 1
        assert_eq!(evenmelon_digits(33), "212211122121122121211221211212111");
        assert_eq!(evenberry_digits(1), "2");
        assert_eq!(evenmelon_digits(1), "2");
    }

    #[test]
    fn tables_are_consistent() {
        for row in extreme_tables(20) {
            assert_eq!(row.smallest_numeral.len(), row.k);
            assert_eq!(row.largest_numeral.len(), row.k);
            assert_eq!(row.smallest_even_numeral.len(), row.k);
            assert_eq!(row.largest_even_numeral.len(), row.k);
            assert!(row.smallest_even.is_even() && row.largest_even.is_even());
        }
    }
}
