//! Sorted and reverse-sorted Fibonacci-like dynamics in base 3/2.
//!
//! Both maps add the two previous terms in base 3/2 and then sort the digits
//! of the sum: ascending for sorted fibs (leading zeros vanish), descending
//! with zeros discarded for reverse fibs. After the first step every term is
//! `1_a 2_b` or `2_a 1_b` respectively, so words are stored as two counts.
//!
//! Eventual behavior is classified by iterating state pairs with a visited
//! map; growing orbits are recognised structurally, since they never repeat.

mod reverse;
mod sorted;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::Hash;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::numeral::{add_digitwise, normalize, BaseSpec, Numeral};

pub use reverse::{
    classify_reverse, oihcconip, reverse_carry_table, reverse_fib_step, reverse_profile, Overlap,
    ReverseWord,
};
pub use sorted::{
    classify_sorted, pinocchio, sorted_carry_table, sorted_fib_step, sorted_profile, SortedWord,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FibsError {
    #[error("no eventual regime detected within {cap} steps from ({}, {})", .start.0, .start.1)]
    CapExceeded { start: (String, String), cap: usize },
    #[error("orbit from ({}, {}) entered an unlisted cycle {cycle:?}", .start.0, .start.1)]
    UnexpectedCycle {
        start: (String, String),
        cycle: Vec<String>,
    },
    #[error("invalid pre-carry profile: {0}")]
    InvalidProfile(String),
    #[error("{word} is not a canonical {mode} word")]
    NotCanonical { word: String, mode: Mode },
    #[error("claimed behavior from ({}, {}) does not hold: {reason}", .start.0, .start.1)]
    ClaimRejected {
        start: (String, String),
        reason: String,
    },
}

/// Which of the two dynamics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Sorted,
    Reverse,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Sorted => "sorted",
            Mode::Reverse => "reverse",
        })
    }
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sorted" => Ok(Mode::Sorted),
            "reverse" => Ok(Mode::Reverse),
            other => Err(format!(
                "unknown mode {other:?} (expected sorted or reverse)"
            )),
        }
    }
}

/// Digit counts `a, b, c, d` of a sum before carrying.
///
/// For sorted fibs the sum reads `1_a 2_b 3_c 4_d`. For reverse fibs it reads
/// `2_a 1_b 3_c 2_d` when the twos of the summands do not overlap, and
/// `2_a 4_b 3_c 2_d` when they do.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub struct PreCarryProfile {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
}

impl PreCarryProfile {
    pub fn new(a: u64, b: u64, c: u64, d: u64) -> Self {
        PreCarryProfile { a, b, c, d }
    }

    pub fn total(&self) -> u64 {
        self.a + self.b + self.c + self.d
    }
}

/// A word whose shape the dynamics preserve.
pub(crate) trait FibWord: Copy + Eq + Hash + fmt::Display + Send + Sync {
    /// Most-significant-first digits; the empty word renders as `[0]`.
    fn to_digits(&self) -> Vec<u32>;
    fn from_counts(ones: u64, twos: u64) -> Self;
}

fn digits_string(digits: &[u32]) -> String {
    digits.iter().map(u32::to_string).collect()
}

/// Adds two words and tallies the ones and twos of the canonical sum.
pub(crate) fn add_and_count<W: FibWord>(x: &W, y: &W) -> W {
    let sum = normalize(
        &add_digitwise(&x.to_digits(), &y.to_digits()),
        BaseSpec::THREE_HALVES,
    );
    let hist = sum.digit_histogram();
    W::from_counts(hist[1] as u64, hist[2] as u64)
}

/// The eventual regime of an orbit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "kind")]
pub enum BehaviorKind {
    /// Pairs `1_m 2, 1_m 2` with `m` growing by one each pair.
    PinocchioTail,
    /// The 3-cycle `112, 1122, 1122`.
    SortedCycle,
    /// The 3-cycle `2_k 1, 2_k 1, 2_k 1_2`.
    ReverseCycle { k: u64 },
    /// Pairs `2_k 1_2, 2_k 1_2` with `k` growing by one each pair.
    OihcconipTail { k: u64 },
}

impl BehaviorKind {
    pub fn label(&self) -> &'static str {
        match self {
            BehaviorKind::PinocchioTail => "PinocchioTail",
            BehaviorKind::SortedCycle => "SortedCycle",
            BehaviorKind::ReverseCycle { .. } => "ReverseCycle",
            BehaviorKind::OihcconipTail { .. } => "OihcconipTail",
        }
    }

    pub fn k(&self) -> Option<u64> {
        match self {
            BehaviorKind::ReverseCycle { k } | BehaviorKind::OihcconipTail { k } => Some(*k),
            _ => None,
        }
    }

    pub fn is_cycle(&self) -> bool {
        matches!(
            self,
            BehaviorKind::SortedCycle | BehaviorKind::ReverseCycle { .. }
        )
    }
}

impl fmt::Display for BehaviorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k() {
            Some(k) => write!(f, "{}({k})", self.label()),
            None => f.write_str(self.label()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Behavior {
    #[serde(flatten)]
    pub kind: BehaviorKind,
    /// Index of the first term of the eventual regime (the starting terms are
    /// indices 0 and 1).
    pub entry_index: usize,
    /// One period of a cycle, or the first four terms of a growing tail.
    pub witness: Vec<String>,
}

/// Step budget used when the caller gives none.
pub fn default_cap(total_start_digits: usize) -> usize {
    10 * total_start_digits + 100
}

pub(crate) enum Verdict {
    Tail(BehaviorKind),
    Continue,
}

/// Shared orbit walk. `tail` inspects the state `(x_n, x_{n+1})`; `cycle`
/// names a detected period or rejects it.
pub(crate) fn classify_orbit<W, T, C>(
    x0: W,
    y0: W,
    cap: usize,
    step: fn(&W, &W) -> W,
    tail: T,
    cycle: C,
) -> Result<Behavior, FibsError>
where
    W: FibWord,
    T: Fn(&W, &W) -> Verdict,
    C: Fn(&[W]) -> Option<(BehaviorKind, Vec<String>)>,
{
    let start = || (x0.to_string(), y0.to_string());
    let mut terms = vec![x0, y0];
    let mut seen: HashMap<(W, W), usize> = HashMap::new();
    for n in 0..=cap {
        let (x, y) = (terms[n], terms[n + 1]);
        if let Verdict::Tail(kind) = tail(&x, &y) {
            while terms.len() < n + 4 {
                let len = terms.len();
                terms.push(step(&terms[len - 2], &terms[len - 1]));
            }
            return Ok(Behavior {
                kind,
                entry_index: n,
                witness: terms[n..n + 4].iter().map(W::to_string).collect(),
            });
        }
        if let Some(&first) = seen.get(&(x, y)) {
            let period = &terms[first..n];
            return match cycle(period) {
                Some((kind, witness)) => Ok(Behavior {
                    kind,
                    entry_index: first,
                    witness,
                }),
                None => Err(FibsError::UnexpectedCycle {
                    start: start(),
                    cycle: period.iter().map(W::to_string).collect(),
                }),
            };
        }
        seen.insert((x, y), n);
        terms.push(step(&x, &y));
    }
    Err(FibsError::CapExceeded {
        start: start(),
        cap,
    })
}

/// Rotates `period` so that it equals `pattern`, if possible.
pub(crate) fn matches_rotation<W: PartialEq>(period: &[W], pattern: &[W]) -> bool {
    period.len() == pattern.len()
        && (0..period.len()).any(|r| {
            period
                .iter()
                .cycle()
                .skip(r)
                .take(period.len())
                .eq(pattern.iter())
        })
}

/// One step of either map on plain digit vectors: add, carry, sort, drop
/// zeros. This is the reference simulator used to re-check classifier claims.
pub fn raw_step(mode: Mode, x: &[u32], y: &[u32]) -> Vec<u32> {
    let sum = normalize(&add_digitwise(x, y), BaseSpec::THREE_HALVES);
    let mut digits: Vec<u32> = sum.digits().iter().copied().filter(|&d| d != 0).collect();
    match mode {
        Mode::Sorted => digits.sort_unstable(),
        Mode::Reverse => digits.sort_unstable_by(|a, b| b.cmp(a)),
    }
    if digits.is_empty() {
        digits.push(0);
    }
    digits
}

/// Raw orbit of `len` terms from two digit words.
pub fn raw_orbit(mode: Mode, x0: &[u32], y0: &[u32], len: usize) -> Vec<Vec<u32>> {
    let mut terms = vec![x0.to_vec(), y0.to_vec()];
    while terms.len() < len {
        let n = terms.len();
        let next = raw_step(mode, &terms[n - 2], &terms[n - 1]);
        terms.push(next);
    }
    terms.truncate(len);
    terms
}

fn repeat_digit(d: u32, n: u64) -> String {
    std::iter::repeat_n(char::from_digit(d, 10).expect("digit"), n as usize).collect()
}

/// Re-runs the raw step map from `(x0, y0)` and checks that `behavior`
/// holds: three full periods past the entry for cycles, six further steps
/// for growing tails.
pub fn revalidate(
    mode: Mode,
    x0: &Numeral,
    y0: &Numeral,
    behavior: &Behavior,
) -> Result<(), FibsError> {
    let reject = |reason: String| FibsError::ClaimRejected {
        start: (x0.to_string(), y0.to_string()),
        reason,
    };
    let e = behavior.entry_index;
    let render =
        |terms: &[Vec<u32>]| -> Vec<String> { terms.iter().map(|t| digits_string(t)).collect() };
    match behavior.kind {
        BehaviorKind::SortedCycle | BehaviorKind::ReverseCycle { .. } => {
            let period = behavior.witness.len();
            let expected: Vec<String> = match behavior.kind {
                BehaviorKind::SortedCycle => vec!["112".into(), "1122".into(), "1122".into()],
                BehaviorKind::ReverseCycle { k } => {
                    if k < 2 {
                        return Err(reject(format!("cycle parameter {k} is below 2")));
                    }
                    let a = format!("{}1", repeat_digit(2, k));
                    vec![a.clone(), a.clone(), format!("{a}1")]
                }
                _ => unreachable!(),
            };
            if behavior.witness != expected {
                return Err(reject(format!(
                    "witness {:?} is not {:?}",
                    behavior.witness, expected
                )));
            }
            let terms = render(&raw_orbit(mode, x0.digits(), y0.digits(), e + 4 * period));
            for i in e..e + 3 * period {
                if terms[i] != terms[i + period] {
                    return Err(reject(format!(
                        "term {i} does not repeat with period {period}"
                    )));
                }
            }
            let found = &terms[e..e + period];
            if !matches_rotation(found, &expected) {
                return Err(reject(format!(
                    "period {found:?} is not a rotation of the witness"
                )));
            }
            if e > 0 && terms[e - 1] == terms[e - 1 + period] {
                return Err(reject(format!(
                    "orbit is already periodic before index {e}"
                )));
            }
        }
        BehaviorKind::PinocchioTail | BehaviorKind::OihcconipTail { .. } => {
            let terms = render(&raw_orbit(mode, x0.digits(), y0.digits(), e + 8));
            for j in 0..4u64 {
                let i = e + 2 * j as usize;
                let want = match behavior.kind {
                    BehaviorKind::PinocchioTail => {
                        let m = terms[e].len() as u64 - 1;
                        format!("{}2", repeat_digit(1, m + j))
                    }
                    BehaviorKind::OihcconipTail { k } => format!("{}11", repeat_digit(2, k + j)),
                    _ => unreachable!(),
                };
                if terms[i] != want || terms[i + 1] != want {
                    return Err(reject(format!(
                        "terms {i} and {} are {} and {}, expected {want}",
                        i + 1,
                        terms[i],
                        terms[i + 1]
                    )));
                }
            }
            if terms[e..e + 4] != behavior.witness[..] {
                return Err(reject("witness does not match the orbit".into()));
            }
        }
    }
    Ok(())
}

/// Behavior counts from an exhaustive sweep over starting pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub mode: Mode,
    pub max_total_digits: usize,
    pub pairs: usize,
    pub counts: BTreeMap<BehaviorKind, usize>,
}

impl SweepSummary {
    /// `kind,k,count` rows with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("kind,k,count\n");
        for (kind, count) in &self.counts {
            let k = kind.k().map(|k| k.to_string()).unwrap_or_default();
            out.push_str(&format!("{},{},{}\n", kind.label(), k, count));
        }
        out
    }

    pub fn count_of(&self, label: &str) -> usize {
        self.counts
            .iter()
            .filter(|(k, _)| k.label() == label)
            .map(|(_, c)| c)
            .sum()
    }
}

/// All canonical words of the mode with `len` digits. Length 1 includes `0`.
pub fn canonical_words(mode: Mode, len: usize) -> Vec<Numeral> {
    let mut out = Vec::new();
    if len == 0 {
        return out;
    }
    if len == 1 {
        out.push(Numeral::zero(BaseSpec::THREE_HALVES));
    }
    for lead in 0..=len {
        let rest = len - lead;
        let digits: Vec<u32> = match mode {
            Mode::Sorted => std::iter::repeat_n(1, lead)
                .chain(std::iter::repeat_n(2, rest))
                .collect(),
            Mode::Reverse => std::iter::repeat_n(2, lead)
                .chain(std::iter::repeat_n(1, rest))
                .collect(),
        };
        out.push(Numeral::from_digits(BaseSpec::THREE_HALVES, digits).expect("nonzero lead digit"));
    }
    out
}

/// Ordered pairs of canonical words with combined length at most `bound`,
/// excluding the all-zero start.
pub fn starting_pairs(mode: Mode, bound: usize) -> Vec<(Numeral, Numeral)> {
    let mut out = Vec::new();
    for lx in 1..bound {
        for ly in 1..=bound - lx {
            for x in canonical_words(mode, lx) {
                for y in canonical_words(mode, ly) {
                    if !(x.is_zero() && y.is_zero()) {
                        out.push((x.clone(), y));
                    }
                }
            }
        }
    }
    out
}

/// Classifies a pair of canonical words in the given mode with the default
/// or explicit cap.
pub fn classify(
    mode: Mode,
    x0: &Numeral,
    y0: &Numeral,
    cap: Option<usize>,
) -> Result<Behavior, FibsError> {
    let cap = cap.unwrap_or_else(|| default_cap(x0.len() + y0.len()));
    match mode {
        Mode::Sorted => classify_sorted(
            SortedWord::from_numeral(x0)?,
            SortedWord::from_numeral(y0)?,
            cap,
        ),
        Mode::Reverse => classify_reverse(
            ReverseWord::from_numeral(x0)?,
            ReverseWord::from_numeral(y0)?,
            cap,
        ),
    }
}

/// Classifies an orbit from arbitrary integer numerals. Starts that are not
/// canonical words are first carried through two raw steps; the reported
/// entry index counts from the original start.
pub fn classify_any(
    mode: Mode,
    x0: &Numeral,
    y0: &Numeral,
    cap: Option<usize>,
) -> Result<Behavior, FibsError> {
    let canonical = |n: &Numeral| match mode {
        Mode::Sorted => SortedWord::from_numeral(n).is_ok(),
        Mode::Reverse => ReverseWord::from_numeral(n).is_ok(),
    };
    if canonical(x0) && canonical(y0) {
        return classify(mode, x0, y0, cap);
    }
    let f2 = raw_step(mode, x0.digits(), y0.digits());
    let f3 = raw_step(mode, y0.digits(), &f2);
    let to_numeral =
        |d: Vec<u32>| Numeral::from_digits(BaseSpec::THREE_HALVES, d).expect("sorted digits");
    let mut behavior = classify(mode, &to_numeral(f2), &to_numeral(f3), cap)?;
    behavior.entry_index += 2;
    Ok(behavior)
}

/// Classifies every starting pair with combined length at most
/// `max_total_digits`, re-checks each claim with the raw simulator, and
/// tallies the regimes. Work items are independent and run in parallel.
pub fn exhaustive_classification(
    mode: Mode,
    max_total_digits: usize,
    cap: Option<usize>,
) -> Result<SweepSummary, FibsError> {
    let pairs = starting_pairs(mode, max_total_digits);
    let results: Vec<Result<BehaviorKind, FibsError>> = pairs
        .par_iter()
        .map(|(x, y)| {
            let behavior = classify(mode, x, y, cap)?;
            revalidate(mode, x, y, &behavior)?;
            Ok(behavior.kind)
        })
        .collect();
    let mut counts = BTreeMap::new();
    for r in results {
        *counts.entry(r?).or_insert(0) += 1;
    }
    Ok(SweepSummary {
        mode,
        max_total_digits,
        pairs: pairs.len(),
        counts,
    })
}
