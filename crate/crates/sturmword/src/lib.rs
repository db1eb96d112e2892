//! Characteristic Sturmian words, Ostrowski numeration, and local periods.
//!
//! A directive sequence of positive integers `a_0, a_1, ...` (eventually
//! periodic, written `head[:cycle]` in text form) determines a characteristic
//! Sturmian word over `{0, 1}` as the limit of the blocks `X_0 = 0`,
//! `X_1 = 0^{a_0} 1`, `X_n = X_{n-1}^{a_{n-1}} X_{n-2}`. The same sequence
//! drives a mixed-radix numeration system on the block lengths `q_i`, and the
//! digits of `n + 1` in that system determine the local period of the word at
//! position `n` — the length of the shortest "repetition word" centered
//! there — without any searching.
//!
//! The crate is organized accordingly:
//!
//! - [`words`]: directive sequences, binary words, blocks, and prefixes.
//! - [`numeration`]: digit strings, validity, encode/decode, and the prefix
//!   decomposition they induce.
//! - [`localperiod`]: repetition words by brute-force search and the digit
//!   rule that predicts them.

pub mod error;
pub mod localperiod;
pub mod numeration;
pub mod words;

pub use error::{Error, Result};
pub use localperiod::{
    is_conjugate, is_repetition_word_at, lift_repetition, local_period_fast,
    oracle_repetition_word, shift_correspondence, shortest_repetition_word, PeriodResult,
};
pub use numeration::{decompose_prefix, encode, is_valid, OstrowskiDigits};
pub use words::{morphism_apply, BinaryWord, BlockTable, DirectiveSequence};
