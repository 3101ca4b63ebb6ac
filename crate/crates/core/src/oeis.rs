//! Named integer sequences and b-file checking.
//!
//! Each registered sequence has a native form. Numeral sequences are stored
//! by the OEIS as their digit strings read in decimal, so verification
//! compares those strings; value sequences compare integers.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use serde::Serialize;
use thiserror::Error;

use crate::ap3;
use crate::even_tree;
use crate::extremes::{self, EvenDigits, EvenStream};
use crate::fibs;
use crate::numeral::{digit_count, encode, encode_integer, BaseSpec, Numeral};
use crate::sequences::{self, LookAndSay, PowerBase};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OeisError {
    #[error("unknown sequence {0:?}")]
    UnknownSequence(String),
    #[error("{name} has no {form} form")]
    FormUnavailable { name: String, form: Form },
    #[error("line {line}: {message}")]
    ParseError { line: usize, message: String },
    #[error("line {line}: index {index} does not increase")]
    NonMonotonicIndex { line: usize, index: i64 },
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

/// One `index value` row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFileEntry {
    pub index: i64,
    pub value: BigInt,
}

pub fn parse_bfile_str(text: &str) -> Result<Vec<BFileEntry>, OeisError> {
    let mut out: Vec<BFileEntry> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let bad = |message: &str| OeisError::ParseError {
            line,
            message: message.to_string(),
        };
        let mut fields = trimmed.split_whitespace();
        let (Some(idx), Some(val), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(bad("expected two fields"));
        };
        let index: i64 = idx.parse().map_err(|_| bad("index is not an integer"))?;
        let value: BigInt = val.parse().map_err(|_| bad("value is not an integer"))?;
        if let Some(prev) = out.last() {
            if index <= prev.index {
                return Err(OeisError::NonMonotonicIndex { line, index });
            }
        }
        out.push(BFileEntry { index, value });
    }
    Ok(out)
}

pub fn parse_bfile(path: impl AsRef<Path>) -> Result<Vec<BFileEntry>, OeisError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| OeisError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_bfile_str(&text)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Form {
    Numeral,
    Value,
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Form::Numeral => "numeral",
            Form::Value => "value",
        })
    }
}

impl FromStr for Form {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "numeral" => Ok(Form::Numeral),
            "value" => Ok(Form::Value),
            other => Err(format!(
                "unknown form {other:?} (expected numeral or value)"
            )),
        }
    }
}

/// A term in the sequence's native form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    Word(Numeral),
    Int(BigUint),
}

impl Term {
    /// Text of the term in `form`, or `None` when a word has no integer value.
    pub fn render(&self, form: Form) -> Option<String> {
        match (self, form) {
            (Term::Word(w), Form::Numeral) => Some(w.to_string()),
            (Term::Word(w), Form::Value) => w.decode_integer().ok().map(|v| v.to_string()),
            (Term::Int(v), Form::Numeral) => {
                Some(encode_integer(v, BaseSpec::THREE_HALVES).to_string())
            }
            (Term::Int(v), Form::Value) => Some(v.to_string()),
        }
    }

    /// The integer a b-file stores for this term.
    pub fn bfile_value(&self) -> BigInt {
        match self {
            Term::Word(w) => w
                .to_string()
                .parse()
                .expect("digit strings are decimal integers"),
            Term::Int(v) => BigInt::from(v.clone()),
        }
    }
}

pub struct SequenceDescriptor {
    pub name: &'static str,
    pub aliases: &'static [&'static str],
    pub native_form: Form,
    /// b-file index of the first generated term.
    pub offset: i64,
    pub description: &'static str,
    producer: fn(usize) -> Vec<Term>,
}

impl SequenceDescriptor {
    pub fn terms(&self, count: usize) -> Vec<Term> {
        let mut t = (self.producer)(count);
        t.truncate(count);
        t
    }

    /// Whether every term has a rendering in `form`, judged on a short prefix.
    pub fn supports(&self, form: Form) -> bool {
        form == self.native_form || self.terms(8).iter().all(|t| t.render(form).is_some())
    }
}

impl fmt::Debug for SequenceDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SequenceDescriptor")
            .field("name", &self.name)
            .field("native_form", &self.native_form)
            .field("offset", &self.offset)
            .finish()
    }
}

fn words(v: Vec<Numeral>) -> Vec<Term> {
    v.into_iter().map(Term::Word).collect()
}

fn ints(v: Vec<BigUint>) -> Vec<Term> {
    v.into_iter().map(Term::Int).collect()
}

fn half(v: Vec<BigUint>) -> Vec<Term> {
    ints(v.into_iter().map(|x| x / 2u32).collect())
}

fn stream(kind: EvenStream, n: usize) -> Vec<Term> {
    EvenDigits::new(kind)
        .take(n)
        .map(|d| Term::Int(BigUint::from(d)))
        .collect()
}

fn numerals_of(values: Vec<BigUint>) -> Vec<Term> {
    words(
        values
            .iter()
            .map(|v| encode_integer(v, BaseSpec::THREE_HALVES))
            .collect(),
    )
}

fn sorted_word(w: fibs::SortedWord) -> Numeral {
    w.to_string()
        .parse()
        .expect("sorted words are canonical digit strings")
}

static REGISTRY: &[SequenceDescriptor] = &[
    SequenceDescriptor {
        name: "a024629",
        aliases: &["integers"],
        native_form: Form::Numeral,
        offset: 0,
        description: "n written in base 3/2",
        producer: |n| words((0..n as u64).map(encode).collect()),
    },
    SequenceDescriptor {
        name: "a246435",
        aliases: &["digit-count"],
        native_form: Form::Value,
        offset: 0,
        description: "number of base 3/2 digits of n",
        producer: |n| {
            (0..n as u64)
                .map(|i| Term::Int(BigUint::from(digit_count(&BigUint::from(i)))))
                .collect()
        },
    },
    SequenceDescriptor {
        name: "a005428",
        aliases: &["even-level-counts"],
        native_form: Form::Value,
        offset: 0,
        description: "even integers with k digits (tree level sizes)",
        producer: |n| ints(even_tree::level_counts(n)),
    },
    SequenceDescriptor {
        name: "a081848",
        aliases: &["level-counts"],
        native_form: Form::Value,
        offset: 1,
        description: "integers with k digits",
        producer: |n| ints(even_tree::integers_by_digit_count(n)),
    },
    SequenceDescriptor {
        name: "a304023",
        aliases: &["smallest-kdigit"],
        native_form: Form::Numeral,
        offset: 1,
        description: "smallest integer with k digits, S_1 = 0",
        producer: |n| numerals_of(extremes::smallest_values(n)),
    },
    SequenceDescriptor {
        name: "a070885",
        aliases: &[],
        native_form: Form::Value,
        offset: 1,
        description: "a(1) = 1, a(n+1) = 3a/2 or 3(a+1)/2",
        producer: |n| {
            ints(
                std::iter::successors(Some(BigUint::from(1u32)), |a| {
                    Some(extremes::next_smallest(a))
                })
                .take(n)
                .collect(),
            )
        },
    },
    SequenceDescriptor {
        name: "a304024",
        aliases: &["largest-kdigit"],
        native_form: Form::Numeral,
        offset: 1,
        description: "largest integer with k digits",
        producer: |n| numerals_of(extremes::largest_values(n)),
    },
    SequenceDescriptor {
        name: "a304025",
        aliases: &[],
        native_form: Form::Value,
        offset: 1,
        description: "largest integer with k digits, in decimal",
        producer: |n| ints(extremes::largest_values(n)),
    },
    SequenceDescriptor {
        name: "a303500",
        aliases: &["smallest-even"],
        native_form: Form::Numeral,
        offset: 1,
        description: "smallest even integer with k digits",
        producer: |n| numerals_of(extremes::smallest_even_values(n)),
    },
    SequenceDescriptor {
        name: "a305498",
        aliases: &[],
        native_form: Form::Value,
        offset: 1,
        description: "smallest even integer with k digits, in decimal",
        producer: |n| ints(extremes::smallest_even_values(n)),
    },
    SequenceDescriptor {
        name: "a061419",
        aliases: &[],
        native_form: Form::Value,
        offset: 1,
        description: "half the smallest even integer with k digits",
        producer: |n| half(extremes::smallest_even_values(n)),
    },
    SequenceDescriptor {
        name: "a304272",
        aliases: &["largest-even"],
        native_form: Form::Numeral,
        offset: 1,
        description: "largest even integer with k digits",
        producer: |n| numerals_of(extremes::largest_even_values(n)),
    },
    SequenceDescriptor {
        name: "a305497",
        aliases: &[],
        native_form: Form::Value,
        offset: 1,
        description: "largest even integer with k digits, in decimal",
        producer: |n| ints(extremes::largest_even_values(n)),
    },
    SequenceDescriptor {
        name: "a304273",
        aliases: &["evenberry"],
        native_form: Form::Value,
        offset: 1,
        description: "digits of the ultimate smallest even integer",
        producer: |n| stream(EvenStream::Evenberry, n),
    },
    SequenceDescriptor {
        name: "a304274",
        aliases: &["evenmelon"],
        native_form: Form::Value,
        offset: 1,
        description: "digits of the ultimate largest even integer",
        producer: |n| stream(EvenStream::Evenmelon, n),
    },
    SequenceDescriptor {
        name: "a005836",
        aliases: &[],
        native_form: Form::Value,
        offset: 1,
        description: "integers with no 2 in base 3",
        producer: |n| ints(ap3::a005836(n).into_iter().map(BigUint::from).collect()),
    },
    SequenceDescriptor {
        name: "a006997",
        aliases: &[],
        native_form: Form::Value,
        offset: 0,
        description: "class of n in the greedy 3-AP-free partition",
        producer: |n| {
            (0..n as u64)
                .map(|i| Term::Int(BigUint::from(ap3::characteristic(i))))
                .collect()
        },
    },
    SequenceDescriptor {
        name: "a006999",
        aliases: &[],
        native_form: Form::Value,
        offset: 0,
        description: "a(n) = floor((3a(n-1) + 2)/2), a(0) = 0",
        producer: |n| ints(ap3::a006999_terms(n)),
    },
    SequenceDescriptor {
        name: "a305658",
        aliases: &["powers3"],
        native_form: Form::Numeral,
        offset: 0,
        description: "powers of 3",
        producer: |n| words(sequences::powers(PowerBase::Three, n)),
    },
    SequenceDescriptor {
        name: "a305659",
        aliases: &["powers2"],
        native_form: Form::Numeral,
        offset: 0,
        description: "powers of 2",
        producer: |n| words(sequences::powers(PowerBase::Two, n)),
    },
    SequenceDescriptor {
        name: "a305660",
        aliases: &["look-and-say"],
        native_form: Form::Numeral,
        offset: 1,
        description: "look-and-say with base 3/2 counts",
        producer: |n| words(LookAndSay::new().take(n).collect()),
    },
    SequenceDescriptor {
        name: "a305753",
        aliases: &["pinocchio"],
        native_form: Form::Numeral,
        offset: 0,
        description: "sorted fibs from 0, 1",
        producer: |n| words(fibs::pinocchio(n).into_iter().map(sorted_word).collect()),
    },
];

pub fn registry() -> &'static [SequenceDescriptor] {
    REGISTRY
}

/// Looks up a sequence by its A-number (any case) or alias.
pub fn lookup(name: &str) -> Result<&'static SequenceDescriptor, OeisError> {
    let key = name.to_ascii_lowercase();
    REGISTRY
        .iter()
        .find(|d| d.name == key || d.aliases.contains(&key.as_str()))
        .ok_or_else(|| OeisError::UnknownSequence(name.to_string()))
}

/// The first `count` terms, one string each.
pub fn emit_sequence(name: &str, count: usize, form: Form) -> Result<Vec<String>, OeisError> {
    let d = lookup(name)?;
    d.terms(count)
        .iter()
        .map(|t| {
            t.render(form).ok_or_else(|| OeisError::FormUnavailable {
                name: d.name.to_string(),
                form,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub index: i64,
    pub expected: String,
    pub found: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub name: String,
    pub matched: usize,
    pub mismatch: Option<Mismatch>,
}

impl VerifyReport {
    pub fn is_ok(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// Compares b-file rows with generated terms, stopping at the first
/// disagreement. Rows with an index before the sequence's first index count
/// as mismatches.
pub fn verify_entries(name: &str, entries: &[BFileEntry]) -> Result<VerifyReport, OeisError> {
    let d = lookup(name)?;
    let needed = entries
        .iter()
        .map(|e| e.index - d.offset + 1)
        .max()
        .unwrap_or(0)
        .max(0) as usize;
    let terms = d.terms(needed);
    let mut matched = 0;
    for e in entries {
        let found = usize::try_from(e.index - d.offset)
            .ok()
            .and_then(|i| terms.get(i))
            .map(Term::bfile_value);
        if found.as_ref() == Some(&e.value) {
            matched += 1;
            continue;
        }
        return Ok(VerifyReport {
            name: d.name.to_string(),
            matched,
            mismatch: Some(Mismatch {
                index: e.index,
                expected: e.value.to_string(),
                found: found.map_or_else(|| "none".to_string(), |v| v.to_string()),
            }),
        });
    }
    Ok(VerifyReport {
        name: d.name.to_string(),
        matched,
        mismatch: None,
    })
}

pub fn verify_against_bfile(name: &str, path: impl AsRef<Path>) -> Result<VerifyReport, OeisError> {
    lookup(name)?;
    verify_entries(name, &parse_bfile(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rows() {
        let e = parse_bfile_str("1 2\n2 5\n3 8\n").unwrap();
        let got: Vec<(i64, i64)> = e
            .iter()
            .map(|r| (r.index, r.value.to_string().parse().unwrap()))
            .collect();
        assert_eq!(got, [(1, 2), (2, 5), (3, 8)]);
        let e = parse_bfile_str("# comment\n\n0 1\n").unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e[0].index, 0);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            parse_bfile_str("1 x"),
            Err(OeisError::ParseError {
                line: 1,
                message: "value is not an integer".into()
            })
        );
        assert!(matches!(
            parse_bfile_str("2 1\n2 1\n"),
            Err(OeisError::NonMonotonicIndex { line: 2, index: 2 })
        ));
        assert!(matches!(
            parse_bfile_str("1 2 3\n"),
            Err(OeisError::ParseError { line: 1, .. })
        ));
    }

    #[test]
    fn emit_examples() {
        assert_eq!(
            emit_sequence("a024629", 13, Form::Numeral).unwrap(),
            [
                "0", "1", "2", "20", "21", "22", "210", "211", "212", "2100", "2101", "2102",
                "2120"
            ]
        );
        assert_eq!(emit_sequence("a305658", 1, Form::Numeral).unwrap(), ["1"]);
        assert_eq!(
            emit_sequence("a305497", 8, Form::Value).unwrap(),
            ["2", "4", "8", "14", "22", "34", "52", "80"]
        );
        assert_eq!(
            emit_sequence("A999999", 1, Form::Value),
            Err(OeisError::UnknownSequence("A999999".into()))
        );
    }

    #[test]
    fn aliases_resolve() {
        assert_eq!(lookup("evenberry").unwrap().name, "a304273");
        assert_eq!(lookup("A304023").unwrap().name, "a304023");
        assert_eq!(lookup("look-and-say").unwrap().name, "a305660");
    }

    #[test]
    fn fractional_words_have_no_value_form() {
        assert!(matches!(
            emit_sequence("look-and-say", 3, Form::Value),
            Err(OeisError::FormUnavailable { .. })
        ));
        assert!(!lookup("pinocchio").unwrap().supports(Form::Value));
        assert!(lookup("a304023").unwrap().supports(Form::Value));
    }

    #[test]
    fn verify_reports_first_mismatch() {
        let entries = parse_bfile_str("1 2\n2 4\n3 8\n4 15\n5 22\n").unwrap();
        let r = verify_entries("a305497", &entries).unwrap();
        assert_eq!(r.matched, 3);
        assert_eq!(
            r.mismatch,
            Some(Mismatch {
                index: 4,
                expected: "15".into(),
                found: "14".into()
            })
        );
        let r = verify_entries("a305497", &[]).unwrap();
        assert_eq!(r.matched, 0);
        assert!(r.is_ok());
    }

    #[test]
    fn numeral_sequences_compare_digit_strings() {
        let entries = parse_bfile_str("1 0\n2 20\n3 210\n").unwrap();
        assert!(verify_entries("a304023", &entries).unwrap().is_ok());
    }

    #[test]
    fn index_before_offset_is_a_mismatch() {
        let entries = parse_bfile_str("0 0\n").unwrap();
        let r = verify_entries("a305497", &entries).unwrap();
        assert_eq!(r.mismatch.unwrap().found, "none");
    }

    #[test]
    fn deterministic() {
        for d in registry() {
            assert_eq!(d.terms(10), d.terms(10), "{}", d.name);
        }
    }
}
