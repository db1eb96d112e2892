//! Finite words over the alphabet {0, 1}.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A finite word over {0, 1}, indexed from 0.
///
/// Factor extraction uses the inclusive convention `w[i..=j]`, matching how
/// factors of infinite words are usually written. The display form is a plain
/// string of '0' and '1' characters.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BinaryWord(Vec<u8>);

impl BinaryWord {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    /// Builds a word from raw symbols; every symbol must be 0 or 1.
    pub fn from_symbols(symbols: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = symbols.iter().find(|&&s| s > 1) {
            return Err(Error::InvalidWord(format!("symbol {bad} is not 0 or 1")));
        }
        Ok(Self(symbols))
    }

    /// The word `0^k`.
    pub fn zeros(k: u64) -> Self {
        Self(vec![0; k as usize])
    }

    pub fn len(&self) -> u64 {
        self.0.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The letter `w[i]`, if in range.
    pub fn get(&self, i: u64) -> Option<u8> {
        self.0.get(i as usize).copied()
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    pub fn push(&mut self, symbol: u8) {
        debug_assert!(symbol <= 1);
        self.0.push(symbol);
    }

    pub fn extend_from(&mut self, other: &BinaryWord) {
        self.0.extend_from_slice(&other.0);
    }

    /// The factor `w[i..=j]` (inclusive on both ends).
    ///
    /// Panics when the range is out of bounds or reversed; callers index
    /// within words they have already materialized.
    pub fn factor(&self, i: u64, j: u64) -> BinaryWord {
        let (i, j) = (i as usize, j as usize);
        assert!(i <= j && j < self.0.len(), "factor [{i}..={j}] out of range");
        Self(self.0[i..=j].to_vec())
    }

    /// The prefix of length `n` (at most the whole word).
    pub fn prefix(&self, n: u64) -> BinaryWord {
        let n = (n as usize).min(self.0.len());
        Self(self.0[..n].to_vec())
    }

    pub fn concat(&self, other: &BinaryWord) -> BinaryWord {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        out.extend_from_slice(&self.0);
        out.extend_from_slice(&other.0);
        Self(out)
    }

    /// The k-fold repetition `w^k`; `w^0` is the empty word.
    pub fn repeat(&self, k: u64) -> BinaryWord {
        Self(self.0.repeat(k as usize))
    }

    pub fn is_prefix_of(&self, other: &BinaryWord) -> bool {
        other.0.starts_with(&self.0)
    }

    pub fn is_suffix_of(&self, other: &BinaryWord) -> bool {
        other.0.ends_with(&self.0)
    }

    /// True when `factor` occurs in `self` at any position.
    pub fn contains_factor(&self, factor: &BinaryWord) -> bool {
        if factor.is_empty() {
            return true;
        }
        self.0
            .windows(factor.0.len())
            .any(|window| window == factor.as_slice())
    }

    pub fn iter(&self) -> impl Iterator<Item = u8> + '_ {
        self.0.iter().copied()
    }

    pub fn count_zeros(&self) -> u64 {
        self.0.iter().filter(|&&s| s == 0).count() as u64
    }

    pub fn count_ones(&self) -> u64 {
        self.0.iter().filter(|&&s| s == 1).count() as u64
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::InvalidWord(format!("unexpected character {other:?}"))),
            })
            .collect::<Result<Vec<u8>>>()
            .map(Self)
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.0 {
            write!(f, "{}", s)?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl Serialize for BinaryWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BinaryWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(w("0101").to_string(), "0101");
        assert_eq!(w("").to_string(), "");
        assert!("012".parse::<BinaryWord>().is_err());
        assert!(BinaryWord::from_symbols(vec![0, 2]).is_err());
    }

    #[test]
    fn factor_is_inclusive() {
        let word = w("010011");
        assert_eq!(word.factor(1, 3), w("100"));
        assert_eq!(word.factor(0, 5), word);
        assert_eq!(word.factor(2, 2), w("0"));
    }

    #[test]
    fn concat_repeat_prefix_suffix() {
        let x = w("01");
        assert_eq!(x.concat(&w("0")), w("010"));
        assert_eq!(x.repeat(3), w("010101"));
        assert_eq!(x.repeat(0), w(""));
        assert!(w("01").is_prefix_of(&w("0100")));
        assert!(!w("10").is_prefix_of(&w("0100")));
        assert!(w("00").is_suffix_of(&w("0100")));
        assert!(w("").is_suffix_of(&w("0100")));
    }

    #[test]
    fn contains_factor_scans_windows() {
        assert!(w("01001").contains_factor(&w("100")));
        assert!(!w("01001").contains_factor(&w("11")));
        assert!(w("").contains_factor(&w("")));
    }
}
