//! Local periods: brute-force search for the shortest repetition word, and
//! the digit rule that predicts its length and conjugacy class.
//!
//! A repetition word at position `i` is a nonempty factor starting at `i`
//! that mirrors the left context `w[0..i-1]`: one of the two is a suffix of
//! the other (reading across the boundary, the word repeats). The local
//! period `p(i)` is the length of the shortest one.
//!
//! For a characteristic Sturmian word the search is unnecessary: write
//! `n + 1` in the numeration system of the directive sequence and count the
//! trailing zero digits, `t`. The shortest repetition word at `n` is a
//! conjugate of the block `X_t` — except when the least significant nonzero
//! digit is a 1 separated from the next nonzero digit by an even number of
//! zeros, in which case it is a conjugate of `X_{t+1}`. Both paths are
//! implemented here so they can be checked against each other.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeration::encode;
use crate::words::{morphism_apply, BinaryWord, BlockTable};

/// The outcome of a local-period computation at one position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodResult {
    pub position: u64,
    /// Index of the block whose conjugacy class contains the shortest
    /// repetition word.
    pub block_index: usize,
    /// The local period, equal to the length of that block.
    pub period: u64,
    /// Whether the exceptional digit pattern bumped the index by one.
    pub exception_applied: bool,
    /// The witness found by the brute-force search, when it ran.
    pub repetition_word: Option<BinaryWord>,
}

/// Whether `candidate` is a repetition word at position `i`: it must occur
/// at `i`, and either be a suffix of the left context `w[0..i-1]` or (when
/// at least as long) have the whole left context as its own suffix.
///
/// A candidate that does not occur at `i` is simply not a repetition word
/// there, so the answer is `false` rather than an error.
pub fn is_repetition_word_at(
    table: &mut BlockTable,
    i: u64,
    candidate: &BinaryWord,
) -> Result<bool> {
    if candidate.is_empty() {
        return Err(Error::EmptyCandidate);
    }
    let w = table.word_prefix(i + candidate.len())?;
    let ws = w.as_slice();
    let c = candidate.as_slice();
    let boundary = i as usize;
    if &ws[boundary..] != c {
        return Ok(false);
    }
    let left = &ws[..boundary];
    Ok(left.ends_with(c) || c.ends_with(left))
}

/// Finds the shortest repetition word at `n` by scanning candidate lengths
/// `1, 2, ..., max_len` against the materialized prefix `w[0..n+max_len-1]`.
pub fn oracle_repetition_word(
    table: &mut BlockTable,
    n: u64,
    max_len: u64,
) -> Result<BinaryWord> {
    let w = table.word_prefix(n + max_len)?;
    let ws = w.as_slice();
    let boundary = n as usize;
    let left = &ws[..boundary];
    for p in 1..=max_len as usize {
        let c = &ws[boundary..boundary + p];
        if left.ends_with(c) || c.ends_with(left) {
            return Ok(BinaryWord::from_symbols(c.to_vec()).expect("factor of a binary word"));
        }
    }
    Err(Error::NoRepetitionWord {
        position: n,
        max_len,
    })
}

/// [`oracle_repetition_word`] with an adaptive bound: starts at 64 and
/// doubles until a repetition word is found, capped at `4 * (n + 2)` (the
/// shortest repetition word has length at most `n + 1`, so the cap is never
/// the binding constraint).
pub fn shortest_repetition_word(table: &mut BlockTable, n: u64) -> Result<BinaryWord> {
    let cap = 4 * (n + 2);
    let mut bound = cap.min(64);
    loop {
        match oracle_repetition_word(table, n, bound) {
            Err(Error::NoRepetitionWord { .. }) if bound < cap => bound = cap.min(bound * 2),
            other => return other,
        }
    }
}

/// The local period at `n` from the digits of `n + 1` alone: index
/// `t` trailing zeros, bumped to `t + 1` under the exceptional pattern;
/// the period is the length of the selected block. No search is performed
/// and no witness word is produced.
pub fn local_period_fast(table: &mut BlockTable, n: u64) -> Result<PeriodResult> {
    let successor = n.checked_add(1).ok_or(Error::Overflow { index: 0 })?;
    let d = encode(successor, table.alpha())?;
    let t = d.trailing_zeros()?;
    let exception_applied = d.meets_exception()?;
    let block_index = if exception_applied { t + 1 } else { t };
    Ok(PeriodResult {
        position: n,
        block_index,
        period: table.block_length(block_index)?,
        exception_applied,
        repetition_word: None,
    })
}

/// Whether `x` and `y` are rotations of one another (`x = uv`, `y = vu`):
/// equal length and `x` occurs in `y  y`.
pub fn is_conjugate(x: &BinaryWord, y: &BinaryWord) -> bool {
    if x.len() != y.len() {
        return false;
    }
    if x.is_empty() {
        return true;
    }
    let mut doubled = y.clone();
    doubled.extend_from(y);
    doubled.contains_factor(x)
}

/// Lifts a repetition word through the substitution `0 -> 0^k 1`, `1 -> 0`.
///
/// If `u` is a repetition word at `m` in the word for `beta`, and `alpha`
/// is `beta` with `k` prepended, then positions satisfying
/// `W(alpha)[0..n] = phi_k(W(beta)[0..m])` (see [`shift_correspondence`])
/// admit the returned word as a repetition word at `n`. The construction
/// splits on the letter under `m`: for `u = 0u'` the lift is
/// `1 phi_k(u') 0^k`, and for `u` starting with 1 it is `phi_k(u)`; either
/// way the result is a conjugate of `phi_k(u)`.
pub fn lift_repetition(
    k: u64,
    beta_table: &mut BlockTable,
    m: u64,
    u: &BinaryWord,
) -> Result<BinaryWord> {
    assert!(k >= 1, "substitution index must be positive");
    if !is_repetition_word_at(beta_table, m, u)? {
        return Err(Error::NotRepetitionWord {
            word: u.to_string(),
            position: m,
        });
    }
    // u occurs at m, so u[0] is the letter W(beta)[m].
    if u.get(0) == Some(0) {
        let rest = if u.len() > 1 {
            u.factor(1, u.len() - 1)
        } else {
            BinaryWord::new()
        };
        let mut v = BinaryWord::from_symbols(vec![1]).unwrap();
        v.extend_from(&morphism_apply(k, &rest));
        v.extend_from(&BinaryWord::zeros(k));
        Ok(v)
    } else {
        Ok(morphism_apply(k, u))
    }
}

/// The position `m` with `W(alpha)[0..n] = phi_{a_0}(W(beta)[0..m])`, where
/// `beta` is the tail of `alpha` — when the digits certify one.
///
/// Writing `n + 1` in the numeration system, the correspondence exists
/// whenever the last digit is zero: dropping it gives the digits of `m + 1`
/// over `beta`. Positions whose last digit is nonzero return `None`.
pub fn shift_correspondence(table: &mut BlockTable, n: u64) -> Result<Option<u64>> {
    let successor = n.checked_add(1).ok_or(Error::Overflow { index: 0 })?;
    let d = encode(successor, table.alpha())?;
    if d.digit(0) != 0 {
        return Ok(None);
    }
    let (shifted, _) = d.shift()?;
    let m_successor = shifted.decode()?;
    if m_successor == 0 {
        return Ok(None);
    }
    Ok(Some(m_successor - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::DirectiveSequence;

    fn table(text: &str) -> BlockTable {
        BlockTable::new(DirectiveSequence::parse(text).unwrap())
    }

    fn w(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    #[test]
    fn recognizes_repetition_words() {
        let mut fib = table(":1");
        assert_eq!(is_repetition_word_at(&mut fib, 5, &w("01")), Ok(true));
        assert_eq!(is_repetition_word_at(&mut fib, 5, &w("01001")), Ok(true));
        // "0" occurs at position 5 but is not a suffix of "01001".
        assert_eq!(is_repetition_word_at(&mut fib, 5, &w("0")), Ok(false));
        // A word that does not occur at the position at all.
        assert_eq!(is_repetition_word_at(&mut fib, 5, &w("11")), Ok(false));
        assert_eq!(
            is_repetition_word_at(&mut fib, 5, &w("")),
            Err(Error::EmptyCandidate)
        );
        // At position 0 the left context is empty, so any occurring factor
        // qualifies.
        assert_eq!(is_repetition_word_at(&mut fib, 0, &w("0")), Ok(true));
    }

    #[test]
    fn oracle_finds_shortest() {
        let mut fib = table(":1");
        assert_eq!(oracle_repetition_word(&mut fib, 5, 64).unwrap(), w("01"));
        assert_eq!(oracle_repetition_word(&mut fib, 0, 4).unwrap(), w("0"));
        let mut t = table("1,3,2,2:2");
        assert_eq!(
            oracle_repetition_word(&mut t, 24, 64).unwrap(),
            w("1010100")
        );
        // p(1) = 2, so a bound of 1 is too small.
        assert_eq!(
            oracle_repetition_word(&mut fib, 1, 1),
            Err(Error::NoRepetitionWord {
                position: 1,
                max_len: 1
            })
        );
    }

    #[test]
    fn adaptive_bound_reaches_long_periods() {
        // p(986) = 987 for the all-ones sequence, past several doublings.
        let mut fib = table(":1");
        let word = shortest_repetition_word(&mut fib, 986).unwrap();
        assert_eq!(word.len(), 987);
        assert_eq!(local_period_fast(&mut fib, 986).unwrap().period, 987);
    }

    #[test]
    fn fast_path_matches_worked_examples() {
        let mut t = table("1,3,2,2:2");
        let expect = [
            // (n, period, block index, exception)
            (23, 1, 0, false),
            (24, 7, 2, true),
            (25, 2, 1, true),
            (26, 2, 1, false),
        ];
        for (n, period, idx, exc) in expect {
            let r = local_period_fast(&mut t, n).unwrap();
            assert_eq!(
                (r.period, r.block_index, r.exception_applied),
                (period, idx, exc),
                "n={n}"
            );
            assert_eq!(r.position, n);
            assert_eq!(r.repetition_word, None);
        }

        let mut fib = table(":1");
        assert_eq!(local_period_fast(&mut fib, 12).unwrap().period, 13);
        assert_eq!(local_period_fast(&mut fib, 20).unwrap().period, 21);
    }

    #[test]
    fn fibonacci_period_table() {
        let expect = [
            1, 2, 3, 1, 5, 2, 2, 8, 1, 3, 3, 1, 13, 2, 2, 5, 1, 5, 2, 2, 21,
        ];
        let mut fib = table(":1");
        for (n, &p) in expect.iter().enumerate() {
            assert_eq!(local_period_fast(&mut fib, n as u64).unwrap().period, p);
        }
    }

    #[test]
    fn oracle_words_are_conjugates_of_predicted_blocks() {
        let mut t = table("1,3,2,2:2");
        let expect = ["0", "1010100", "01", "10"];
        for (n, want) in (23..=26).zip(expect) {
            let word = shortest_repetition_word(&mut t, n).unwrap();
            assert_eq!(word, w(want), "n={n}");
            let r = local_period_fast(&mut t, n).unwrap();
            assert_eq!(word.len(), r.period);
            let block = t.block(r.block_index).unwrap().clone();
            assert!(is_conjugate(&word, &block), "n={n}");
        }
    }

    #[test]
    fn conjugacy_is_a_rotation_test() {
        assert!(is_conjugate(&w("0101010"), &w("1010100")));
        assert!(is_conjugate(&w("01"), &w("01")));
        assert!(!is_conjugate(&w("01"), &w("00")));
        assert!(!is_conjugate(&w("01"), &w("010")));
        assert!(is_conjugate(&w(""), &w("")));
    }

    #[test]
    fn lifts_repetition_words() {
        // Letter under m is 1: the lift is the plain image.
        let mut beta = table("3,2,2:2");
        let v = lift_repetition(1, &mut beta, 3, &w("1000")).unwrap();
        assert_eq!(v, w("0010101"));
        let mut alpha = table("1,3,2,2:2");
        assert_eq!(is_repetition_word_at(&mut alpha, 6, &v), Ok(true));
        // The oracle agrees exactly at the corresponding position.
        assert_eq!(shortest_repetition_word(&mut alpha, 6).unwrap(), v);

        // Letter under m is 0: rotate the image, 1 phi(u') 0^k.
        let mut fib = table(":1");
        let v = lift_repetition(2, &mut fib, 0, &w("0")).unwrap();
        assert_eq!(v, w("100"));
        let mut two = table("2:1");
        assert_eq!(is_repetition_word_at(&mut two, 2, &v), Ok(true));

        // Not a repetition word at the given position.
        let mut fib = table(":1");
        assert_eq!(
            lift_repetition(1, &mut fib, 1, &w("1")),
            Err(Error::NotRepetitionWord {
                word: "1".into(),
                position: 1
            })
        );
    }

    #[test]
    fn shift_correspondence_positions() {
        let mut t = table("1,3,2,2:2");
        // n+1 = 22 has digits 1030: last digit zero, m+1 = decode(103) = 11.
        assert_eq!(shift_correspondence(&mut t, 21), Ok(Some(11)));
        // n+1 = 21 has digits 1021: last digit nonzero.
        assert_eq!(shift_correspondence(&mut t, 20), Ok(None));

        // The certified identity holds: the image of the beta prefix is the
        // alpha prefix.
        let mut beta = table("3,2,2:2");
        let image = morphism_apply(1, &beta.word_prefix(12).unwrap());
        assert_eq!(image.len(), 22);
        assert_eq!(image, t.word_prefix(22).unwrap());
    }
}
