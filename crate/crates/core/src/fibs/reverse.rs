use std::fmt;

use serde::Serialize;

use super::{
    add_and_count, classify_orbit, matches_rotation, Behavior, BehaviorKind, FibWord, FibsError,
    Mode, PreCarryProfile, Verdict,
};
use crate::numeral::{add_digitwise, Numeral};

/// `2_twos 1_ones`; both counts zero is the number 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ReverseWord {
    pub twos: u64,
    pub ones: u64,
}

impl ReverseWord {
    pub const ZERO: ReverseWord = ReverseWord { twos: 0, ones: 0 };

    pub fn new(twos: u64, ones: u64) -> Self {
        ReverseWord { twos, ones }
    }

    /// Accepts `0` or a numeral of the form `2...21...1`.
    pub fn from_numeral(n: &Numeral) -> Result<Self, FibsError> {
        if n.is_zero() {
            return Ok(Self::ZERO);
        }
        let d = n.digits();
        let twos = d.iter().take_while(|&&x| x == 2).count();
        if d[twos..].iter().any(|&x| x != 1) {
            return Err(FibsError::NotCanonical {
                word: n.to_string(),
                mode: Mode::Reverse,
            });
        }
        Ok(ReverseWord::new(twos as u64, (d.len() - twos) as u64))
    }

    pub fn is_zero(&self) -> bool {
        self.ones == 0 && self.twos == 0
    }
}

impl FibWord for ReverseWord {
    fn to_digits(&self) -> Vec<u32> {
        if self.is_zero() {
            return vec![0];
        }
        let mut out = vec![2; self.twos as usize];
        out.resize((self.ones + self.twos) as usize, 1);
        out
    }

    fn from_counts(ones: u64, twos: u64) -> Self {
        ReverseWord { twos, ones }
    }
}

impl fmt::Display for ReverseWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in self.to_digits() {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Adds in base 3/2, sorts the digits descending and deletes the zeros.
pub fn reverse_fib_step(x: &ReverseWord, y: &ReverseWord) -> ReverseWord {
    add_and_count(x, y)
}

/// Whether the twos of the two summands overlap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Overlap {
    /// Sum reads `2_a 1_b 3_c 2_d`.
    Disjoint,
    /// Sum reads `2_a 4_b 3_c 2_d` with `b >= 1`.
    Overlapping,
}

/// Result of carrying, sorting and dropping zeros, by case analysis on the
/// profile alone.
pub fn reverse_carry_table(
    p: &PreCarryProfile,
    overlap: Overlap,
) -> Result<ReverseWord, FibsError> {
    let PreCarryProfile { a, b, c, d } = *p;
    Ok(match overlap {
        Overlap::Disjoint if c > 0 => ReverseWord::new(c + d, a),
        Overlap::Disjoint => ReverseWord::new(a + d, b),
        Overlap::Overlapping if b == 0 => {
            return Err(FibsError::InvalidProfile(
                "overlapping sums need at least one 4 (b >= 1)".into(),
            ))
        }
        Overlap::Overlapping if b > 1 && c > 0 => ReverseWord::new(b + c + d - 1, 1),
        Overlap::Overlapping if b > 1 => ReverseWord::new(b + d - 1, 2),
        Overlap::Overlapping if c > 0 => ReverseWord::new(c + d, 1),
        Overlap::Overlapping => ReverseWord::new(d + 1, a + 1),
    })
}

/// Profile and overlap case of the digitwise sum of two reverse words.
pub fn reverse_profile(x: &ReverseWord, y: &ReverseWord) -> Option<(PreCarryProfile, Overlap)> {
    let sum = add_digitwise(&x.to_digits(), &y.to_digits());
    let digits: Vec<u64> = sum.into_iter().skip_while(|&d| d == 0).collect();
    let mut i = 0;
    let mut run = |target: u64| {
        let start = i;
        while i < digits.len() && digits[i] == target {
            i += 1;
        }
        (i - start) as u64
    };
    let a = run(2);
    let fours = run(4);
    let (b, overlap) = if fours > 0 {
        (fours, Overlap::Overlapping)
    } else {
        (run(1), Overlap::Disjoint)
    };
    let c = run(3);
    let d = run(2);
    (i == digits.len()).then_some((PreCarryProfile::new(a, b, c, d), overlap))
}

impl PreCarryProfile {
    /// A pair of reverse words whose digitwise sum has this profile.
    ///
    /// Disjoint: `2_a 1_{b+c+d}` and `2_c 1_d`. Overlapping:
    /// `2_{a+b} 1_{c+d}` and `2_{b+c} 1_d`.
    pub fn realize_reverse(&self, overlap: Overlap) -> (ReverseWord, ReverseWord) {
        let PreCarryProfile { a, b, c, d } = *self;
        match overlap {
            Overlap::Disjoint => (ReverseWord::new(a, b + c + d), ReverseWord::new(c, d)),
            Overlap::Overlapping => (ReverseWord::new(a + b, c + d), ReverseWord::new(b + c, d)),
        }
    }
}

/// The growing orbit `2_k 1_2, 2_k 1_2, 2_{k+1} 1_2, 2_{k+1} 1_2, ...`.
///
/// # Panics
///
/// If `k0 < 2`.
pub fn oihcconip(n: usize, k0: u64) -> Vec<ReverseWord> {
    assert!(k0 >= 2, "the growing orbit starts from at least two twos");
    (0..n)
        .map(|i| ReverseWord::new(k0 + (i / 2) as u64, 2))
        .collect()
}

/// Finds where the reverse orbit of `(x0, y0)` settles.
///
/// A state `(2_k 1_2, 2_k 1_2)` with `k >= 2` starts an Oihcconip tail; a
/// repeated state closes a cycle, which must be `2_k 1, 2_k 1, 2_k 1_2` for
/// some `k >= 2`.
pub fn classify_reverse(
    x0: ReverseWord,
    y0: ReverseWord,
    cap: usize,
) -> Result<Behavior, FibsError> {
    classify_orbit(
        x0,
        y0,
        cap,
        reverse_fib_step,
        |x, y| {
            if x == y && x.ones == 2 && x.twos >= 2 {
                Verdict::Tail(BehaviorKind::OihcconipTail { k: x.twos })
            } else {
                Verdict::Continue
            }
        },
        |period| {
            let k = period.iter().map(|w| w.twos).max()?;
            let pattern = [
                ReverseWord::new(k, 1),
                ReverseWord::new(k, 1),
                ReverseWord::new(k, 2),
            ];
            (k >= 2 && matches_rotation(period, &pattern)).then(|| {
                (
                    BehaviorKind::ReverseCycle { k },
                    pattern.iter().map(ReverseWord::to_string).collect(),
                )
            })
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> ReverseWord {
        ReverseWord::from_numeral(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn steps() {
        assert_eq!(reverse_fib_step(&w("2"), &w("2")).to_string(), "21");
        assert_eq!(reverse_fib_step(&w("0"), &w("1")).to_string(), "1");
        assert_eq!(reverse_fib_step(&w("221"), &w("2211")).to_string(), "221");
    }

    #[test]
    fn table_rows() {
        let p = PreCarryProfile::new(0, 2, 0, 0);
        assert_eq!(
            reverse_carry_table(&p, Overlap::Overlapping)
                .unwrap()
                .to_string(),
            "211"
        );
        let (x, y) = p.realize_reverse(Overlap::Overlapping);
        assert_eq!(reverse_fib_step(&x, &y).to_string(), "211");

        let p = PreCarryProfile::new(1, 0, 0, 1);
        assert_eq!(
            reverse_carry_table(&p, Overlap::Disjoint)
                .unwrap()
                .to_string(),
            "22"
        );
        assert_eq!(reverse_fib_step(&w("21"), &w("1")).to_string(), "22");

        assert!(matches!(
            reverse_carry_table(&PreCarryProfile::new(1, 0, 1, 1), Overlap::Overlapping),
            Err(FibsError::InvalidProfile(_))
        ));
    }

    #[test]
    fn profiles_parse_back() {
        let x = ReverseWord::new(3, 2);
        let y = ReverseWord::new(1, 1);
        // 22211 + 21 = 2 2 2 3 2
        assert_eq!(
            reverse_profile(&x, &y),
            Some((PreCarryProfile::new(3, 0, 1, 1), Overlap::Disjoint))
        );
    }

    #[test]
    fn oihcconip_terms() {
        let got: Vec<String> = oihcconip(4, 2).iter().map(|t| t.to_string()).collect();
        assert_eq!(got, ["2211", "2211", "22211", "22211"]);
        assert_eq!(oihcconip(1, 3)[0].to_string(), "22211");
        let terms = oihcconip(12, 2);
        for i in 0..10 {
            assert_eq!(reverse_fib_step(&terms[i], &terms[i + 1]), terms[i + 2]);
        }
    }

    #[test]
    fn proper_listing() {
        let mut terms = vec![ReverseWord::ZERO, w("1")];
        while terms.len() < 15 {
            let n = terms.len();
            terms.push(reverse_fib_step(&terms[n - 2], &terms[n - 1]));
        }
        let got: Vec<String> = terms.iter().map(|t| t.to_string()).collect();
        assert_eq!(
            got,
            [
                "0", "1", "1", "2", "2", "21", "21", "221", "2211", "221", "221", "2211", "221",
                "221", "2211"
            ]
        );
    }

    #[test]
    fn classification_examples() {
        let b = classify_reverse(ReverseWord::ZERO, w("1"), 100).unwrap();
        assert_eq!(b.kind, BehaviorKind::ReverseCycle { k: 2 });
        assert_eq!(b.entry_index, 7);
        let b = classify_reverse(w("2211"), w("2211"), 100).unwrap();
        assert_eq!(b.kind, BehaviorKind::OihcconipTail { k: 2 });
        assert_eq!(b.entry_index, 0);
        assert_eq!(b.witness, ["2211", "2211", "22211", "22211"]);
    }
}
