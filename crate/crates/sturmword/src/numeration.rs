//! The numeration system attached to a directive sequence.
//!
//! With `q_i = |X_i|` the block lengths, every `n >= 0` has a unique digit
//! expansion `n = sum d_i q_i` subject to `d_i <= a_i` and
//! `d_i = a_i  =>  d_{i-1} = 0`. For the all-ones sequence this is exactly
//! Zeckendorf representation. The digit vector of `n` describes the length-`n`
//! prefix of the characteristic word as a product of blocks
//! `X_k^{d_k} ... X_0^{d_0}`, which is what makes the digits useful for
//! period computations.

use std::fmt;

use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::words::{BlockTable, DirectiveSequence};

/// Checks the digit conditions `d_i <= a_i` and `d_i = a_i => d_{i-1} = 0`
/// for a digit slice given most-significant-first.
///
/// Zero digits pass without consulting the sequence (any term `a_i >= 1`
/// satisfies them), so the zero vector is valid even when no terms are
/// available; a nonzero digit at an unavailable position is an error.
pub fn is_valid(digits_msd: &[u64], alpha: &DirectiveSequence) -> Result<bool> {
    let k = digits_msd.len();
    let d = |i: usize| digits_msd[k - 1 - i];
    for i in 0..k {
        if d(i) == 0 {
            continue;
        }
        let a = alpha.term(i)?;
        if d(i) > a {
            return Ok(false);
        }
        if i >= 1 && d(i) == a && d(i - 1) != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `q_0 .. q_{count-1}` by the length recurrence, without building blocks.
fn block_lengths(alpha: &DirectiveSequence, count: usize) -> Result<Vec<u64>> {
    let mut q: Vec<u64> = Vec::with_capacity(count);
    for i in 0..count {
        let next = match i {
            0 => Some(1),
            1 => alpha.term(0)?.checked_add(1),
            _ => q[i - 1]
                .checked_mul(alpha.term(i - 1)?)
                .and_then(|p| p.checked_add(q[i - 2])),
        }
        .ok_or(Error::Overflow { index: i })?;
        q.push(next);
    }
    Ok(q)
}

/// The digit expansion of `n`, computed greedily from the most significant
/// position.
///
/// Greedy digits automatically satisfy the validity conditions; this is
/// asserted in debug builds and certified exhaustively on small ranges in
/// the test suite.
pub fn encode(n: u64, alpha: &DirectiveSequence) -> Result<OstrowskiDigits> {
    // Grow q_0, q_1, ... until q_K > n; digits then occupy positions < K.
    let mut q: Vec<u64> = vec![1];
    while *q.last().unwrap() <= n {
        let i = q.len();
        let next = match i {
            1 => alpha.term(0)?.checked_add(1),
            _ => q[i - 1]
                .checked_mul(alpha.term(i - 1)?)
                .and_then(|p| p.checked_add(q[i - 2])),
        }
        .ok_or(Error::Overflow { index: i })?;
        q.push(next);
    }

    let mut digits = Vec::with_capacity(q.len() - 1);
    let mut rem = n;
    for i in (0..q.len() - 1).rev() {
        digits.push(rem / q[i]);
        rem %= q[i];
    }
    if digits.is_empty() {
        digits.push(0);
    }
    debug_assert_eq!(rem, 0);

    let out = OstrowskiDigits {
        digits,
        alpha: alpha.clone(),
    };
    debug_assert!(matches!(is_valid(out.digits(), out.alpha()), Ok(true)));
    debug_assert!(out.digits.len() == 1 || out.digits[0] != 0);
    Ok(out)
}

/// The exponents of the block product equal to the length-`n` prefix:
/// pairs `(i, d_i)` over the nonzero digits of `n`, most significant first.
///
/// Concatenating `block(i)` repeated `d_i` times in the returned order
/// reproduces `word_prefix(n)` exactly; `n = 0` gives the empty product.
pub fn decompose_prefix(n: u64, table: &BlockTable) -> Result<Vec<(usize, u64)>> {
    let d = encode(n, table.alpha())?;
    let k = d.digits.len();
    Ok(d.digits
        .iter()
        .enumerate()
        .filter(|&(_, &digit)| digit != 0)
        .map(|(j, &digit)| (k - 1 - j, digit))
        .collect())
}

/// A canonical digit vector together with the sequence that governs it.
///
/// Digits are stored most-significant-first, matching the written form
/// (`d_k ... d_0`, least significant last). Canonical means no leading
/// zeros, except that zero itself is the single digit `0`. Construction
/// always validates the digit conditions, so a value of this type is valid
/// by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OstrowskiDigits {
    digits: Vec<u64>,
    alpha: DirectiveSequence,
}

impl OstrowskiDigits {
    /// Canonicalizes (strips leading zeros) and validates a digit vector
    /// given most-significant-first.
    pub fn new(mut digits: Vec<u64>, alpha: DirectiveSequence) -> Result<Self> {
        if digits.is_empty() {
            return Err(Error::InvalidDigits("no digits given".into()));
        }
        while digits.len() > 1 && digits[0] == 0 {
            digits.remove(0);
        }
        if !is_valid(&digits, &alpha)? {
            return Err(Error::InvalidDigits(format!(
                "digits {digits:?} are not valid for {alpha}"
            )));
        }
        Ok(Self { digits, alpha })
    }

    /// Parses the digit text format: characters `0`-`9` when no comma is
    /// present, comma-separated decimal digits otherwise. A trailing comma
    /// is permitted (and emitted by `Display` for a lone digit above 9,
    /// which would otherwise read back as several one-character digits).
    pub fn parse(text: &str, alpha: DirectiveSequence) -> Result<Self> {
        let bad = |t: &str| Error::InvalidDigits(format!("bad digit string {t:?}"));
        if text.is_empty() {
            return Err(bad(text));
        }
        let digits = if text.contains(',') {
            let body = text.strip_suffix(',').unwrap_or(text);
            body.split(',')
                .map(|tok| tok.trim().parse::<u64>().map_err(|_| bad(text)))
                .collect::<Result<Vec<_>>>()?
        } else {
            text.chars()
                .map(|c| c.to_digit(10).map(u64::from).ok_or_else(|| bad(text)))
                .collect::<Result<Vec<_>>>()?
        };
        Self::new(digits, alpha)
    }

    /// The digits, most significant first.
    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn alpha(&self) -> &DirectiveSequence {
        &self.alpha
    }

    /// `d_i`, indexed from the least significant position; zero beyond the
    /// stored digits.
    pub fn digit(&self, i: usize) -> u64 {
        if i < self.digits.len() {
            self.digits[self.digits.len() - 1 - i]
        } else {
            0
        }
    }

    pub fn is_zero(&self) -> bool {
        self.digits.iter().all(|&d| d == 0)
    }

    /// `sum d_i  q_i`.
    pub fn decode(&self) -> Result<u64> {
        let q = block_lengths(&self.alpha, self.digits.len())?;
        let mut total: u64 = 0;
        for (j, &d) in self.digits.iter().enumerate() {
            let i = self.digits.len() - 1 - j;
            total = d
                .checked_mul(q[i])
                .and_then(|v| total.checked_add(v))
                .ok_or(Error::Overflow { index: i })?;
        }
        Ok(total)
    }

    /// Zero digits at the least significant end. Undefined for zero, whose
    /// digits are all zero.
    pub fn trailing_zeros(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroRepresentation);
        }
        Ok(self
            .digits
            .iter()
            .rev()
            .take_while(|&&d| d == 0)
            .count())
    }

    /// Whether the digits match the exceptional pattern: the least
    /// significant nonzero digit is 1, a second nonzero digit exists, and
    /// the two are separated by an even number of zeros.
    pub fn meets_exception(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroRepresentation);
        }
        let mut nonzero = (0..self.digits.len()).filter(|&i| self.digit(i) != 0);
        let first = nonzero.next().expect("nonzero digit exists");
        let Some(second) = nonzero.next() else {
            return Ok(false);
        };
        Ok(self.digit(first) == 1 && (second - first - 1) % 2 == 0)
    }

    /// Drops `d_0`, re-binding the remaining digits `d_k ... d_1` to the
    /// tail sequence `a_1, a_2, ...`; returns the dropped digit alongside.
    ///
    /// If the input represents `n` with digits over `alpha`, the result
    /// represents the `m` with
    /// `W(alpha)[0..n-1] = phi_{a_0}(W(beta)[0..m-1]) 0^{d_0}`.
    pub fn shift(&self) -> Result<(OstrowskiDigits, u64)> {
        let beta = self.alpha.tail();
        let d0 = *self.digits.last().expect("digits are never empty");
        let mut rest = self.digits[..self.digits.len() - 1].to_vec();
        if rest.is_empty() {
            rest.push(0);
        }
        OstrowskiDigits::new(rest, beta).map(|d| (d, d0))
    }
}

impl fmt::Display for OstrowskiDigits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.digits.iter().all(|&d| d <= 9) {
            for d in &self.digits {
                write!(f, "{d}")?;
            }
            return Ok(());
        }
        for (j, d) in self.digits.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        if self.digits.len() == 1 {
            // Marks the string as comma-separated so it parses back as one
            // digit rather than a run of one-character digits.
            write!(f, ",")?;
        }
        Ok(())
    }
}

impl Serialize for OstrowskiDigits {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = ser.serialize_struct("OstrowskiDigits", 2)?;
        s.serialize_field("digits", &self.to_string())?;
        s.serialize_field("alpha", &self.alpha)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for OstrowskiDigits {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            digits: String,
            alpha: DirectiveSequence,
        }
        let raw = Raw::deserialize(de)?;
        OstrowskiDigits::parse(&raw.digits, raw.alpha).map_err(D::Error::custom)
    }
}
