use std::fmt;

use serde::Serialize;

use super::{
    add_and_count, classify_orbit, matches_rotation, Behavior, BehaviorKind, FibWord, FibsError,
    Mode, PreCarryProfile, Verdict,
};
use crate::numeral::{add_digitwise, Numeral};

/// `1_ones 2_twos`; both counts zero is the number 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SortedWord {
    pub ones: u64,
    pub twos: u64,
}

impl SortedWord {
    pub const ZERO: SortedWord = SortedWord { ones: 0, twos: 0 };

    pub fn new(ones: u64, twos: u64) -> Self {
        SortedWord { ones, twos }
    }

    /// Accepts `0` or a numeral of the form `1...12...2`.
    pub fn from_numeral(n: &Numeral) -> Result<Self, FibsError> {
        if n.is_zero() {
            return Ok(Self::ZERO);
        }
        let d = n.digits();
        let ones = d.iter().take_while(|&&x| x == 1).count();
        if d[ones..].iter().any(|&x| x != 2) {
            return Err(FibsError::NotCanonical {
                word: n.to_string(),
                mode: Mode::Sorted,
            });
        }
        Ok(SortedWord::new(ones as u64, (d.len() - ones) as u64))
    }

    pub fn is_zero(&self) -> bool {
        self.ones == 0 && self.twos == 0
    }
}

impl FibWord for SortedWord {
    fn to_digits(&self) -> Vec<u32> {
        if self.is_zero() {
            return vec![0];
        }
        let mut out = vec![1; self.ones as usize];
        out.resize((self.ones + self.twos) as usize, 2);
        out
    }

    fn from_counts(ones: u64, twos: u64) -> Self {
        SortedWord { ones, twos }
    }
}

impl fmt::Display for SortedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in self.to_digits() {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Adds in base 3/2 and sorts the digits ascending, dropping leading zeros.
pub fn sorted_fib_step(x: &SortedWord, y: &SortedWord) -> SortedWord {
    add_and_count(x, y)
}

/// Result of carrying and sorting `1_a 2_b 3_c 4_d`, by case analysis on the
/// profile alone.
pub fn sorted_carry_table(p: &PreCarryProfile) -> SortedWord {
    let PreCarryProfile { a, b, c, d } = *p;
    match () {
        _ if a > 0 && d > 1 => SortedWord::new(c + 1, d),
        _ if a == 0 && d > 1 => SortedWord::new(c + 2, d - 1),
        _ if d == 1 => SortedWord::new(b + 1, c + 1),
        _ if c > 0 => SortedWord::new(b, c),
        _ => SortedWord::new(a, b),
    }
}

/// Profile of the digitwise sum of two sorted words. Always exists, since
/// the sum of two nondecreasing digit rows is nondecreasing.
pub fn sorted_profile(x: &SortedWord, y: &SortedWord) -> PreCarryProfile {
    let sum = add_digitwise(&x.to_digits(), &y.to_digits());
    let mut p = PreCarryProfile::default();
    for d in sum {
        match d {
            0 => {}
            1 => p.a += 1,
            2 => p.b += 1,
            3 => p.c += 1,
            4 => p.d += 1,
            _ => unreachable!("digit sums of two sorted words stay below 5"),
        }
    }
    p
}

impl PreCarryProfile {
    /// A pair of sorted words whose digitwise sum is `1_a 2_b 3_c 4_d`:
    /// `1_{a+b} 2_{c+d}` and `1_{b+c} 2_d`.
    pub fn realize_sorted(&self) -> (SortedWord, SortedWord) {
        (
            SortedWord::new(self.a + self.b, self.c + self.d),
            SortedWord::new(self.b + self.c, self.d),
        )
    }
}

/// The first `n` terms of the sorted orbit of `(0, 1)`.
pub fn pinocchio(n: usize) -> Vec<SortedWord> {
    let mut terms = vec![SortedWord::ZERO, SortedWord::new(1, 0)];
    while terms.len() < n {
        let len = terms.len();
        terms.push(sorted_fib_step(&terms[len - 2], &terms[len - 1]));
    }
    terms.truncate(n);
    terms
}

/// Finds where the sorted orbit of `(x0, y0)` settles.
///
/// A state `(1_m 2, 1_m 2)` starts a Pinocchio tail; a repeated state closes
/// a cycle, which must be the `112, 1122, 1122` cycle.
pub fn classify_sorted(x0: SortedWord, y0: SortedWord, cap: usize) -> Result<Behavior, FibsError> {
    let cycle = [
        SortedWord::new(2, 1),
        SortedWord::new(2, 2),
        SortedWord::new(2, 2),
    ];
    classify_orbit(
        x0,
        y0,
        cap,
        sorted_fib_step,
        |x, y| {
            if x == y && x.twos == 1 {
                Verdict::Tail(BehaviorKind::PinocchioTail)
            } else {
                Verdict::Continue
            }
        },
        |period| {
            matches_rotation(period, &cycle).then(|| {
                (
                    BehaviorKind::SortedCycle,
                    cycle.iter().map(SortedWord::to_string).collect(),
                )
            })
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> SortedWord {
        SortedWord::from_numeral(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn steps() {
        assert_eq!(sorted_fib_step(&w("2"), &w("12")).to_string(), "12");
        assert_eq!(sorted_fib_step(&w("12"), &w("12")).to_string(), "112");
        assert_eq!(sorted_fib_step(&w("0"), &w("1")).to_string(), "1");
        assert_eq!(sorted_fib_step(&w("2"), &w("22")).to_string(), "112");
    }

    #[test]
    fn carry_table_rows() {
        assert_eq!(
            sorted_carry_table(&PreCarryProfile::new(0, 0, 0, 2)).to_string(),
            "112"
        );
        assert_eq!(
            sorted_carry_table(&PreCarryProfile::new(1, 0, 0, 0)).to_string(),
            "1"
        );
    }

    #[test]
    fn pinocchio_prefix() {
        let got: Vec<String> = pinocchio(12).iter().map(|t| t.to_string()).collect();
        assert_eq!(
            got,
            ["0", "1", "1", "2", "2", "12", "12", "112", "112", "1112", "1112", "11112"]
        );
    }

    #[test]
    fn pinocchio_pairs() {
        // with f_0 = 0 the repeated pairs sit at odd/even index pairs
        let terms = pinocchio(15);
        assert_eq!(terms[3], terms[4]);
        assert_eq!(terms[13].to_string(), "111112");
        assert_eq!(terms[14].to_string(), "111112");
    }

    #[test]
    fn classification_examples() {
        let b = classify_sorted(w("1"), w("1"), 100).unwrap();
        assert_eq!(b.kind, BehaviorKind::PinocchioTail);
        let b = classify_sorted(w("1"), w("12"), 100).unwrap();
        assert_eq!(b.kind, BehaviorKind::PinocchioTail);
        let b = classify_sorted(w("2"), w("112"), 100).unwrap();
        assert_eq!(b.kind, BehaviorKind::PinocchioTail);
        let b = classify_sorted(w("2"), w("22"), 100).unwrap();
        assert_eq!(b.kind, BehaviorKind::SortedCycle);
        assert_eq!(b.witness, ["112", "1122", "1122"]);
    }

    #[test]
    fn cycle_listing_from_two_and_twenty_two() {
        let mut terms = vec![w("2"), w("22")];
        for _ in 0..10 {
            let n = terms.len();
            terms.push(sorted_fib_step(&terms[n - 2], &terms[n - 1]));
        }
        let got: Vec<String> = terms.iter().map(|t| t.to_string()).collect();
        assert_eq!(
            got,
            ["2", "22", "112", "122", "1122", "122", "122", "112", "1122", "1122", "112", "1122"]
        );
    }

    #[test]
    fn cap_exceeded() {
        assert!(matches!(
            classify_sorted(w("2"), w("22"), 2),
            Err(FibsError::CapExceeded { .. })
        ));
    }

    #[test]
    fn rejects_unsorted_words() {
        assert!(SortedWord::from_numeral(&"21".parse().unwrap()).is_err());
        assert_eq!(w("0"), SortedWord::ZERO);
    }
}
