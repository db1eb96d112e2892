//! Directive sequences: the integer sequences that drive both the word
//! construction and the numeration system.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An eventually periodic sequence of positive integers `a_0, a_1, ...`.
///
/// The sequence is stored as a finite head followed by an optional cycle that
/// repeats forever. Without a cycle the sequence is finite and any access past
/// the head fails with [`Error::Exhausted`]; it is never extended silently.
///
/// The text form is `head[:cycle]` with comma-separated decimal terms, so
/// `"1,3,2,2:2"` is the sequence 1, 3, 2, 2, 2, 2, ... and `":1"` is the
/// all-ones sequence of the Fibonacci word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DirectiveSequence {
    head: Vec<u64>,
    cycle: Option<Vec<u64>>,
}

impl DirectiveSequence {
    /// Builds a sequence from explicit head and cycle terms.
    ///
    /// Every term must be >= 1 and a cycle, when present, must be nonempty.
    pub fn new(head: Vec<u64>, cycle: Option<Vec<u64>>) -> Result<Self> {
        if head.contains(&0) || cycle.iter().flatten().any(|&a| a == 0) {
            return Err(Error::InvalidDirective(
                "every term must be at least 1".into(),
            ));
        }
        if let Some(c) = &cycle {
            if c.is_empty() {
                return Err(Error::InvalidDirective("cycle must be nonempty".into()));
            }
        }
        Ok(Self { head, cycle })
    }

    /// Parses the `head[:cycle]` text form. At least one term is required.
    pub fn parse(text: &str) -> Result<Self> {
        fn terms(part: &str, what: &str) -> Result<Vec<u64>> {
            if part.is_empty() {
                return Ok(Vec::new());
            }
            part.split(',')
                .map(|tok| {
                    let tok = tok.trim();
                    tok.parse::<u64>().map_err(|_| {
                        Error::InvalidDirective(format!("bad {what} term {tok:?}"))
                    })
                })
                .collect()
        }

        let text = text.trim();
        if text.is_empty() {
            return Err(Error::InvalidDirective("empty input".into()));
        }
        let (head, cycle) = match text.split_once(':') {
            Some((h, c)) => {
                let cycle = terms(c, "cycle")?;
                if cycle.is_empty() {
                    return Err(Error::InvalidDirective("cycle must be nonempty".into()));
                }
                (terms(h, "head")?, Some(cycle))
            }
            None => (terms(text, "head")?, None),
        };
        if head.is_empty() && cycle.is_none() {
            return Err(Error::InvalidDirective("no terms given".into()));
        }
        Self::new(head, cycle)
    }

    /// The term `a_i`, or [`Error::Exhausted`] past the end of a finite
    /// sequence.
    pub fn term(&self, i: usize) -> Result<u64> {
        if i < self.head.len() {
            return Ok(self.head[i]);
        }
        match &self.cycle {
            Some(c) => Ok(c[(i - self.head.len()) % c.len()]),
            None => Err(Error::Exhausted { index: i }),
        }
    }

    /// The tail sequence `a_1, a_2, ...` obtained by dropping the first term.
    pub fn tail(&self) -> Self {
        if !self.head.is_empty() {
            return Self {
                head: self.head[1..].to_vec(),
                cycle: self.cycle.clone(),
            };
        }
        match &self.cycle {
            Some(c) => {
                let mut rotated = c[1..].to_vec();
                rotated.push(c[0]);
                Self {
                    head: Vec::new(),
                    cycle: Some(rotated),
                }
            }
            // Already empty; stays empty and keeps failing loudly on access.
            None => self.clone(),
        }
    }

    /// Number of accessible terms: `None` means infinitely many.
    pub fn available_terms(&self) -> Option<usize> {
        match self.cycle {
            Some(_) => None,
            None => Some(self.head.len()),
        }
    }
}

impl FromStr for DirectiveSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for DirectiveSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |terms: &[u64]| {
            terms
                .iter()
                .map(|t| t.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{}", join(&self.head))?;
        if let Some(c) = &self.cycle {
            write!(f, ":{}", join(c))?;
        }
        Ok(())
    }
}

impl Serialize for DirectiveSequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for DirectiveSequence {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        Self::parse(&text).map_err(D::Error::custom)
    }
}
