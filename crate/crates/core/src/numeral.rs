//! Base p/q numerals built on the exploding-dots machine.
//!
//! A row of boxes holds dots. Whenever a box holds at least `p` dots, `p` of
//! them explode and `q` new dots appear in the box to its left. With `p = 3`
//! and `q = 2` the box `i` places from the right is worth `(3/2)^i`, and the
//! stable configurations are exactly the base 3/2 numerals.
//!
//! Digits are stored most-significant first, which is also the printed order.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumeralError {
    #[error("invalid base {p}/{q}: need p > q >= 1 and gcd(p, q) = 1")]
    InvalidBase { p: u32, q: u32 },
    #[error("empty digit string")]
    Empty,
    #[error("invalid character {ch:?} at position {position}")]
    InvalidCharacter { ch: char, position: usize },
    #[error("digit {digit} at position {position} is not below {p}")]
    DigitOutOfRange { digit: u32, position: usize, p: u32 },
    #[error("leading zero in a multi-digit numeral")]
    LeadingZero,
    #[error("value {value} is not an integer")]
    NotAnInteger { value: ExactValue },
    #[error("numeral {numeral} has a single digit")]
    TooShort { numeral: String },
    #[error("numerals in different bases: {left} and {right}")]
    BaseMismatch { left: BaseSpec, right: BaseSpec },
}

/// The explosion rule: `p` dots in a box become `q` dots one box to the left.
///
/// The numeral base is the fraction `p/q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BaseSpec {
    p: u32,
    q: u32,
}

impl BaseSpec {
    pub const THREE_HALVES: BaseSpec = BaseSpec { p: 3, q: 2 };

    pub fn new(p: u32, q: u32) -> Result<Self, NumeralError> {
        if q == 0 || p <= q || p.gcd(&q) != 1 {
            return Err(NumeralError::InvalidBase { p, q });
        }
        Ok(BaseSpec { p, q })
    }

    /// Dots consumed by one explosion.
    pub fn p(&self) -> u32 {
        self.p
    }

    /// Dots produced in the next box by one explosion.
    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn is_three_halves(&self) -> bool {
        *self == Self::THREE_HALVES
    }
}

impl Default for BaseSpec {
    fn default() -> Self {
        Self::THREE_HALVES
    }
}

impl fmt::Display for BaseSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

/// An exact rational value in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactValue(BigRational);

impl ExactValue {
    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The value as a nonnegative integer, if it is one.
    pub fn to_biguint(&self) -> Option<BigUint> {
        if self.is_integer() {
            self.0.numer().to_biguint()
        } else {
            None
        }
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for ExactValue {
    fn from(r: BigRational) -> Self {
        ExactValue(r)
    }
}

impl From<u64> for ExactValue {
    fn from(n: u64) -> Self {
        ExactValue(BigRational::from_integer(BigInt::from(n)))
    }
}

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// Value of a digit word, most-significant first, with unrestricted digits.
///
/// This accepts raw machine states (digits at or above `p`) as well as
/// canonical numerals.
pub fn decode_digits<D>(base: BaseSpec, digits: &[D]) -> ExactValue
where
    D: Copy + Into<u64>,
{
    // N_j = N_{j-1} * p + d_j * q^j, value = N_last / q^(len-1)
    let p = BigUint::from(base.p);
    let q = BigUint::from(base.q);
    let mut numer = BigUint::zero();
    let mut q_pow = BigUint::one();
    for (j, &d) in digits.iter().enumerate() {
        if j > 0 {
            q_pow *= &q;
        }
        numer = numer * &p + BigUint::from(d.into()) * &q_pow;
    }
    ExactValue(BigRational::new(BigInt::from(numer), BigInt::from(q_pow)))
}

/// A canonical numeral: every digit below `p`, no leading zeros except for
/// the numeral `0` itself.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Numeral {
    base: BaseSpec,
    digits: Vec<u32>,
}

impl Numeral {
    pub fn zero(base: BaseSpec) -> Self {
        Numeral {
            base,
            digits: vec![0],
        }
    }

    pub fn from_digits(base: BaseSpec, digits: Vec<u32>) -> Result<Self, NumeralError> {
        if digits.is_empty() {
            return Err(NumeralError::Empty);
        }
        if let Some((position, &digit)) = digits.iter().enumerate().find(|(_, &d)| d >= base.p) {
            return Err(NumeralError::DigitOutOfRange {
                digit,
                position,
                p: base.p,
            });
        }
        if digits.len() > 1 && digits[0] == 0 {
            return Err(NumeralError::LeadingZero);
        }
        Ok(Numeral { base, digits })
    }

    /// Parses a string of decimal digit characters in the given base.
    pub fn parse_in(base: BaseSpec, s: &str) -> Result<Self, NumeralError> {
        let digits = s
            .chars()
            .enumerate()
            .map(|(position, ch)| {
                ch.to_digit(10)
                    .ok_or(NumeralError::InvalidCharacter { ch, position })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_digits(base, digits)
    }

    pub fn base(&self) -> BaseSpec {
        self.base
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    /// Never zero: `0` is written with one digit.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_zero(&self) -> bool {
        self.digits == [0]
    }

    pub fn last_digit(&self) -> u32 {
        self.digits[self.digits.len() - 1]
    }

    pub fn decode(&self) -> ExactValue {
        decode_digits(self.base, &self.digits)
    }

    pub fn decode_integer(&self) -> Result<BigUint, NumeralError> {
        let value = self.decode();
        value
            .to_biguint()
            .ok_or(NumeralError::NotAnInteger { value })
    }

    pub fn checked_add(&self, other: &Numeral) -> Result<Numeral, NumeralError> {
        if self.base != other.base {
            return Err(NumeralError::BaseMismatch {
                left: self.base,
                right: other.base,
            });
        }
        Ok(normalize(
            &add_digitwise(&self.digits, &other.digits),
            self.base,
        ))
    }

    /// Multiplies the value by `p/q` by shifting in a zero.
    pub fn append_zero(&self) -> Numeral {
        if self.is_zero() {
            return self.clone();
        }
        let mut digits = self.digits.clone();
        digits.push(0);
        Numeral {
            base: self.base,
            digits,
        }
    }

    /// Drops the units digit. For an integer `n` in base 3/2 the result is
    /// `2 * floor(n / 3)`; in general it is `q * floor(n / p)`.
    pub fn remove_last_digit(&self) -> Result<Numeral, NumeralError> {
        if self.digits.len() < 2 {
            return Err(NumeralError::TooShort {
                numeral: self.to_string(),
            });
        }
        Ok(Numeral {
            base: self.base,
            digits: self.digits[..self.digits.len() - 1].to_vec(),
        })
    }

    /// The last `k` digits, padded on the left with zeros when the numeral
    /// is shorter.
    pub fn suffix(&self, k: usize) -> Vec<u32> {
        let len = self.digits.len();
        if k <= len {
            self.digits[len - k..].to_vec()
        } else {
            let mut out = vec![0; k - len];
            out.extend_from_slice(&self.digits);
            out
        }
    }

    pub fn trailing_zeros(&self) -> usize {
        if self.is_zero() {
            return 0;
        }
        self.digits.iter().rev().take_while(|&&d| d == 0).count()
    }

    /// Number of occurrences of each digit value, indexed by digit.
    pub fn digit_histogram(&self) -> Vec<usize> {
        let mut hist = vec![0; self.base.p as usize];
        for &d in &self.digits {
            hist[d as usize] += 1;
        }
        hist
    }
}

impl fmt::Display for Numeral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.base.p <= 10 {
            for &d in &self.digits {
                write!(f, "{d}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.digits.iter().map(u32::to_string).collect();
            write!(f, "[{}]", parts.join(","))
        }
    }
}

impl FromStr for Numeral {
    type Err = NumeralError;

    /// Parses a base 3/2 numeral.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Numeral::parse_in(BaseSpec::THREE_HALVES, s)
    }
}

impl Add for &Numeral {
    type Output = Numeral;

    /// # Panics
    ///
    /// If the operands are in different bases.
    fn add(self, rhs: &Numeral) -> Numeral {
        match self.checked_add(rhs) {
            Ok(sum) => sum,
            Err(e) => panic!("{e}"),
        }
    }
}

impl PartialOrd for Numeral {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.base != other.base {
            return None;
        }
        // Canonical numerals in one base order by length, then lexicographically.
        Some(
            self.digits
                .len()
                .cmp(&other.digits.len())
                .then_with(|| self.digits.cmp(&other.digits)),
        )
    }
}

/// Right-aligned digitwise sum of two most-significant-first words, no carries.
pub fn add_digitwise(a: &[u32], b: &[u32]) -> Vec<u64> {
    let len = a.len().max(b.len());
    let mut out = vec![0u64; len];
    for (slot, &d) in out.iter_mut().rev().zip(a.iter().rev()) {
        *slot += u64::from(d);
    }
    for (slot, &d) in out.iter_mut().rev().zip(b.iter().rev()) {
        *slot += u64::from(d);
    }
    out
}

/// A row of boxes holding dots, indexed from the units box leftwards.
///
/// Explosions may be fired in any order; the stable state does not depend on
/// it. [`ExplodingMachine::run`] uses the right-to-left sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplodingMachine {
    base: BaseSpec,
    // boxes[0] is the units box
    boxes: Vec<u128>,
}

impl ExplodingMachine {
    /// Loads a raw most-significant-first digit word into the boxes.
    pub fn new(base: BaseSpec, raw: &[u64]) -> Self {
        let mut boxes: Vec<u128> = raw.iter().rev().map(|&d| u128::from(d)).collect();
        if boxes.is_empty() {
            boxes.push(0);
        }
        ExplodingMachine { base, boxes }
    }

    pub fn boxes_lsb_first(&self) -> &[u128] {
        &self.boxes
    }

    /// Indices (from the units box) of boxes that can still explode.
    pub fn unstable_boxes(&self) -> Vec<usize> {
        let p = u128::from(self.base.p);
        self.boxes
            .iter()
            .enumerate()
            .filter(|(_, &d)| d >= p)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_stable(&self) -> bool {
        let p = u128::from(self.base.p);
        self.boxes.iter().all(|&d| d < p)
    }

    /// Explodes one group of `p` dots in box `index`. Returns false when the
    /// box holds fewer than `p` dots.
    pub fn fire(&mut self, index: usize) -> bool {
        let p = u128::from(self.base.p);
        if index >= self.boxes.len() || self.boxes[index] < p {
            return false;
        }
        self.boxes[index] -= p;
        if index + 1 == self.boxes.len() {
            self.boxes.push(0);
        }
        self.boxes[index + 1] += u128::from(self.base.q);
        true
    }

    /// Sweeps from the units box leftwards, exploding every full group.
    pub fn run(&mut self) {
        let p = u128::from(self.base.p);
        let q = u128::from(self.base.q);
        let mut i = 0;
        while i < self.boxes.len() {
            let groups = self.boxes[i] / p;
            if groups > 0 {
                self.boxes[i] -= groups * p;
                if i + 1 == self.boxes.len() {
                    self.boxes.push(0);
                }
                self.boxes[i + 1] += groups * q;
            }
            i += 1;
        }
    }

    /// The stable configuration as a canonical numeral.
    ///
    /// # Panics
    ///
    /// If some box can still explode.
    pub fn into_numeral(self) -> Numeral {
        assert!(self.is_stable(), "machine still has explosions pending");
        let mut digits: Vec<u32> = self
            .boxes
            .iter()
            .rev()
            .skip_while(|&&d| d == 0)
            .map(|&d| d as u32)
            .collect();
        if digits.is_empty() {
            digits.push(0);
        }
        Numeral {
            base: self.base,
            digits,
        }
    }
}

/// Runs the machine on a raw word until it is stable.
pub fn normalize(raw: &[u64], base: BaseSpec) -> Numeral {
    let mut machine = ExplodingMachine::new(base, raw);
    machine.run();
    machine.into_numeral()
}

/// The canonical numeral for `n`.
///
/// Repeatedly splits off `n mod p` as the next digit and continues with
/// `q * floor(n / p)`, which is what the units box passes to the left.
pub fn encode_integer(n: &BigUint, base: BaseSpec) -> Numeral {
    let p = BigUint::from(base.p);
    let q = BigUint::from(base.q);
    let mut rest = n.clone();
    let mut lsb_first = Vec::new();
    while !rest.is_zero() {
        let (quot, rem) = rest.div_rem(&p);
        lsb_first.push(rem.to_u32().expect("remainder below p"));
        rest = quot * &q;
    }
    if lsb_first.is_empty() {
        lsb_first.push(0);
    }
    lsb_first.reverse();
    Numeral {
        base,
        digits: lsb_first,
    }
}

/// Base 3/2 encoding of a machine integer.
pub fn encode(n: u64) -> Numeral {
    encode_integer(&BigUint::from(n), BaseSpec::THREE_HALVES)
}

/// Length of the base 3/2 numeral of `n`.
pub fn digit_count(n: &BigUint) -> usize {
    digit_count_in(n, BaseSpec::THREE_HALVES)
}

pub fn digit_count_in(n: &BigUint, base: BaseSpec) -> usize {
    let p = BigUint::from(base.p);
    let q = BigUint::from(base.q);
    let mut rest = n.clone();
    let mut count = 0;
    while !rest.is_zero() {
        rest = (rest / &p) * &q;
        count += 1;
    }
    count.max(1)
}
