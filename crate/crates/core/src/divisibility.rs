//! Divisibility read off base 3/2 digits.
//!
//! A numeral ends in exactly `k` zeros when `3^k` is the largest power of
//! three dividing it. Since `3/2 ≡ -1 (mod 5)`, the alternating digit sum
//! taken from the units digit leftwards is congruent to the value mod 5.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::numeral::{encode_integer, BaseSpec, Numeral, NumeralError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DivisibilityError {
    #[error("0 is divisible by every power of 3")]
    Zero,
    #[error("the digit rule for 5 needs base 3/2, got {0}")]
    UnsupportedBase(BaseSpec),
    #[error(transparent)]
    Numeral(#[from] NumeralError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisibilityReport {
    #[serde(serialize_with = "as_decimal")]
    pub n: BigUint,
    pub numeral: String,
    pub trailing_zeros: usize,
    pub three_adic_valuation: usize,
    pub alt_digit_sum_mod5: u8,
    pub n_mod5: u8,
}

fn as_decimal<S: serde::Serializer>(n: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_string())
}

impl DivisibilityReport {
    /// Both digit rules agree with direct arithmetic.
    pub fn is_consistent(&self) -> bool {
        self.trailing_zeros == self.three_adic_valuation && self.alt_digit_sum_mod5 == self.n_mod5
    }
}

/// Largest `k` with `3^k` dividing `n`.
pub fn three_adic_valuation(n: &BigUint) -> Result<usize, DivisibilityError> {
    if n.is_zero() {
        return Err(DivisibilityError::Zero);
    }
    let three = BigUint::from(3u32);
    let mut m = n.clone();
    let mut k = 0;
    loop {
        let (q, r) = m.div_rem(&three);
        if !r.is_zero() {
            return Ok(k);
        }
        m = q;
        k += 1;
    }
}

/// `(trailing zeros of the numeral, 3-adic valuation)` for `n >= 1`.
pub fn trailing_zero_test(n: &BigUint) -> Result<(usize, usize), DivisibilityError> {
    let valuation = three_adic_valuation(n)?;
    let numeral = encode_integer(n, BaseSpec::THREE_HALVES);
    Ok((numeral.trailing_zeros(), valuation))
}

/// Residue mod 5 of `d_0 - d_1 + d_2 - ...` with `d_0` the units digit.
pub fn mod5_by_digits(x: &Numeral) -> Result<u8, DivisibilityError> {
    if !x.base().is_three_halves() {
        return Err(DivisibilityError::UnsupportedBase(x.base()));
    }
    x.decode_integer()?;
    let sum: i64 = x
        .digits()
        .iter()
        .rev()
        .enumerate()
        .map(|(i, &d)| {
            if i % 2 == 0 {
                i64::from(d)
            } else {
                -i64::from(d)
            }
        })
        .sum();
    Ok(sum.rem_euclid(5) as u8)
}

pub fn report(n: &BigUint) -> Result<DivisibilityReport, DivisibilityError> {
    let (trailing_zeros, three_adic_valuation) = trailing_zero_test(n)?;
    let numeral = encode_integer(n, BaseSpec::THREE_HALVES);
    let alt_digit_sum_mod5 = mod5_by_digits(&numeral)?;
    Ok(DivisibilityReport {
        n: n.clone(),
        numeral: numeral.to_string(),
        trailing_zeros,
        three_adic_valuation,
        alt_digit_sum_mod5,
        n_mod5: (n % 5u32).to_u8().expect("residue below 5"),
    })
}
