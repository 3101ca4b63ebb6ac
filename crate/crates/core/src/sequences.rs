//! Powers of 2 and 3, and look-and-say, in base 3/2.

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::numeral::{encode, encode_integer, BaseSpec, Numeral};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("look-and-say needs a nonempty word")]
    EmptyWord,
    #[error("word {word} cannot be read as count/digit pairs at position {position}")]
    AmbiguousParse { word: String, position: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PowerBase {
    Two,
    Three,
}

/// Base 3/2 numeral of `2^n` or `3^n`.
pub fn power_numeral(base: PowerBase, n: u32) -> Numeral {
    let b: u32 = match base {
        PowerBase::Two => 2,
        PowerBase::Three => 3,
    };
    let value = num_traits::pow(BigUint::from(b), n as usize);
    encode_integer(&value, BaseSpec::THREE_HALVES)
}

pub fn powers(base: PowerBase, count: usize) -> Vec<Numeral> {
    let b: u32 = match base {
        PowerBase::Two => 2,
        PowerBase::Three => 3,
    };
    std::iter::successors(Some(BigUint::one()), |v| Some(v * b))
        .take(count)
        .map(|v| encode_integer(&v, BaseSpec::THREE_HALVES))
        .collect()
}

/// Maximal runs of equal digits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunLengthWord {
    runs: Vec<(usize, u32)>,
}

impl RunLengthWord {
    pub fn encode(word: &[u32]) -> Self {
        let mut runs: Vec<(usize, u32)> = Vec::new();
        for &d in word {
            match runs.last_mut() {
                Some((count, digit)) if *digit == d => *count += 1,
                _ => runs.push((1, d)),
            }
        }
        RunLengthWord { runs }
    }

    pub fn runs(&self) -> &[(usize, u32)] {
        &self.runs
    }

    /// Longest run of each digit value 0, 1, 2.
    pub fn longest_runs(&self) -> [usize; 3] {
        let mut out = [0; 3];
        for &(count, digit) in &self.runs {
            if let Some(slot) = out.get_mut(digit as usize) {
                *slot = (*slot).max(count);
            }
        }
        out
    }

    pub fn expand(&self) -> Vec<u32> {
        self.runs
            .iter()
            .flat_map(|&(count, digit)| std::iter::repeat_n(digit, count))
            .collect()
    }
}

/// Reads the word aloud: each run becomes the base 3/2 numeral of its length
/// followed by the repeated digit.
pub fn look_and_say_step(word: &[u32]) -> Result<Vec<u32>, SequenceError> {
    if word.is_empty() {
        return Err(SequenceError::EmptyWord);
    }
    let mut out = Vec::new();
    for &(count, digit) in RunLengthWord::encode(word).runs() {
        out.extend_from_slice(encode(count as u64).digits());
        out.push(digit);
    }
    Ok(out)
}

/// The first `n` terms starting from `1`.
pub fn look_and_say_sequence(n: usize) -> Vec<Numeral> {
    LookAndSay::new().take(n).collect()
}

#[derive(Debug, Clone)]
pub struct LookAndSay {
    next: Vec<u32>,
}

impl LookAndSay {
    pub fn new() -> Self {
        LookAndSay { next: vec![1] }
    }
}

impl Default for LookAndSay {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for LookAndSay {
    type Item = Numeral;

    fn next(&mut self) -> Option<Numeral> {
        let following = look_and_say_step(&self.next).expect("terms are nonempty");
        let current = std::mem::replace(&mut self.next, following);
        Some(
            Numeral::from_digits(BaseSpec::THREE_HALVES, current).expect("terms start with 1 or 2"),
        )
    }
}

/// Inverts one look-and-say step.
///
/// Run lengths in the generated terms are 1, 2 or 3, written `1`, `2` and
/// `20`. A `2` followed by `0` is read as the count `20`, since a count of 2
/// zeros would need two adjacent zeros in the previous term. Anything that
/// does not fit this grammar, or that does not re-encode to the same word, is
/// reported instead of guessed.
pub fn look_and_say_inverse(word: &[u32]) -> Result<Vec<u32>, SequenceError> {
    let fail = |position| SequenceError::AmbiguousParse {
        word: word.iter().map(u32::to_string).collect(),
        position,
    };
    if word.is_empty() {
        return Err(SequenceError::EmptyWord);
    }
    let mut out = Vec::new();
    let mut i = 0;
    while i < word.len() {
        let (count, width) = match (word[i], word.get(i + 1), word.get(i + 2)) {
            (2, Some(0), Some(_)) => (3, 2),
            (1, Some(_), _) => (1, 1),
            (2, Some(_), _) => (2, 1),
            _ => return Err(fail(i)),
        };
        let digit = word[i + width];
        out.extend(std::iter::repeat_n(digit, count));
        i += width + 1;
    }
    if look_and_say_step(&out)? != word {
        return Err(fail(0));
    }
    Ok(out)
}

/// Distinct run-length numerals used to build `word` from its predecessor.
pub fn counting_numbers(previous: &[u32]) -> Vec<String> {
    let mut seen: Vec<String> = RunLengthWord::encode(previous)
        .runs()
        .iter()
        .map(|&(count, _)| encode(count as u64).to_string())
        .collect();
    seen.sort();
    seen.dedup();
    seen
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> Vec<u32> {
        s.chars().map(|c| c.to_digit(10).unwrap()).collect()
    }

    fn text(w: &[u32]) -> String {
        w.iter().map(u32::to_string).collect()
    }

    #[test]
    fn power_prefixes() {
        let threes: Vec<String> = powers(PowerBase::Three, 7)
            .iter()
            .map(|n| n.to_string())
            .collect();
        assert_eq!(
            threes,
            [
                "1",
                "20",
                "2100",
                "212000",
                "210110000",
                "21202200000",
                "21200101000000"
            ]
        );
        let twos: Vec<String> = powers(PowerBase::Two, 9)
            .iter()
            .map(|n| n.to_string())
            .collect();
        assert_eq!(
            twos,
            [
                "1",
                "2",
                "21",
                "212",
                "21011",
                "212022",
                "21200101",
                "2101100202",
                "21202202121"
            ]
        );
        assert_eq!(power_numeral(PowerBase::Three, 0).to_string(), "1");
    }

    #[test]
    fn look_and_say_steps() {
        assert_eq!(
            text(&look_and_say_step(&word("111221")).unwrap()),
            "2012211"
        );
        assert_eq!(text(&look_and_say_step(&word("1")).unwrap()), "11");
        assert_eq!(
            text(&look_and_say_step(&word("2012211")).unwrap()),
            "1210112221"
        );
        assert_eq!(look_and_say_step(&[]), Err(SequenceError::EmptyWord));
    }

    #[test]
    fn look_and_say_prefix() {
        let terms: Vec<String> = look_and_say_sequence(7)
            .iter()
            .map(|n| n.to_string())
            .collect();
        assert_eq!(
            terms,
            ["1", "11", "21", "1211", "111221", "2012211", "1210112221"]
        );
    }

    #[test]
    fn shares_five_terms_with_decimal_look_and_say() {
        let decimal = ["1", "11", "21", "1211", "111221", "312211"];
        let ours = look_and_say_sequence(6);
        for i in 0..5 {
            assert_eq!(ours[i].to_string(), decimal[i]);
        }
        assert_ne!(ours[5].to_string(), decimal[5]);
    }

    #[test]
    fn inverse_recovers_predecessor() {
        assert_eq!(
            text(&look_and_say_inverse(&word("2012211")).unwrap()),
            "111221"
        );
        assert!(look_and_say_inverse(&word("2")).is_err());
        assert!(look_and_say_inverse(&word("0")).is_err());
    }

    #[test]
    fn run_length_round_trip() {
        let w = word("2201112");
        let rle = RunLengthWord::encode(&w);
        assert_eq!(rle.runs(), &[(2, 2), (1, 0), (3, 1), (1, 2)]);
        assert_eq!(rle.expand(), w);
        assert_eq!(rle.longest_runs(), [1, 3, 2]);
    }
}
