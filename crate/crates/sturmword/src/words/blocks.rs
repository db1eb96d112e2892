//! Characteristic blocks, their lengths, and prefix generation.

use crate::error::{Error, Result};
use crate::words::{DirectiveSequence, BinaryWord};

/// Applies the substitution `0 -> 0^k 1`, `1 -> 0` to every letter of `w`.
///
/// Composing these substitutions over the terms of a directive sequence
/// generates the characteristic blocks: `X_i = (phi_{a_0} o ... o
/// phi_{a_{i-1}})(0)`.
pub fn morphism_apply(k: u64, w: &BinaryWord) -> BinaryWord {
    let out_len = (k + 1) * w.count_zeros() + w.count_ones();
    let mut out = Vec::with_capacity(out_len as usize);
    for symbol in w.iter() {
        if symbol == 0 {
            out.extend(std::iter::repeat_n(0, k as usize));
            out.push(1);
        } else {
            out.push(0);
        }
    }
    BinaryWord::from_symbols(out).expect("substitution emits only 0/1")
}

/// Memoized characteristic blocks `X_i` and their lengths `q_i` for one
/// directive sequence.
///
/// The blocks satisfy `X_0 = 0`, `X_1 = 0^{a_0} 1`, and
/// `X_n = X_{n-1}^{a_{n-1}} X_{n-2}` for `n >= 2`; the lengths follow the
/// matching integer recurrence `q_0 = 1`, `q_1 = a_0 + 1`,
/// `q_n = q_{n-1} a_{n-1} + q_{n-2}`. Lengths are computed without
/// materializing blocks, so `lengths` may run ahead of `blocks`.
///
/// A table is single-owner: methods take `&mut self` to fill the caches.
/// Cloning is cheap relative to the blocks held, so parallel sweeps should
/// clone one table per worker.
#[derive(Debug, Clone)]
pub struct BlockTable {
    alpha: DirectiveSequence,
    blocks: Vec<BinaryWord>,
    lengths: Vec<u64>,
}

impl BlockTable {
    pub fn new(alpha: DirectiveSequence) -> Self {
        Self {
            alpha,
            blocks: Vec::new(),
            lengths: Vec::new(),
        }
    }

    pub fn alpha(&self) -> &DirectiveSequence {
        &self.alpha
    }

    /// The block `X_i`, materialized and cached on demand.
    pub fn block(&mut self, i: usize) -> Result<&BinaryWord> {
        while self.blocks.len() <= i {
            let n = self.blocks.len();
            let next = match n {
                0 => "0".parse().unwrap(),
                1 => {
                    let a0 = self.alpha.term(0)?;
                    let mut x1 = BinaryWord::zeros(a0);
                    x1.push(1);
                    x1
                }
                _ => {
                    let a = self.alpha.term(n - 1)?;
                    let mut word = self.blocks[n - 1].repeat(a);
                    word.extend_from(&self.blocks[n - 2]);
                    word
                }
            };
            self.blocks.push(next);
        }
        Ok(&self.blocks[i])
    }

    /// The length `q_i = |X_i|`, by the integer recurrence alone.
    pub fn block_length(&mut self, i: usize) -> Result<u64> {
        while self.lengths.len() <= i {
            let n = self.lengths.len();
            let next = match n {
                0 => 1,
                1 => self.alpha.term(0)? + 1,
                _ => {
                    let a = self.alpha.term(n - 1)?;
                    self.lengths[n - 1]
                        .checked_mul(a)
                        .and_then(|p| p.checked_add(self.lengths[n - 2]))
                        .ok_or(Error::Overflow { index: n })?
                }
            };
            self.lengths.push(next);
        }
        Ok(self.lengths[i])
    }

    /// Smallest index `i` with `q_i >= n`.
    pub fn index_covering(&mut self, n: u64) -> Result<usize> {
        let mut i = 0;
        while self.block_length(i)? < n {
            i += 1;
        }
        Ok(i)
    }

    /// The length-`n` prefix of the characteristic Sturmian word, taken from
    /// the smallest block that covers it.
    pub fn word_prefix(&mut self, n: u64) -> Result<BinaryWord> {
        if n == 0 {
            return Ok(BinaryWord::new());
        }
        let i = self.index_covering(n)?;
        Ok(self.block(i)?.prefix(n))
    }

    /// The letter `W(alpha)[n]`, computed by descending the block recurrence
    /// instead of materializing a prefix.
    pub fn letter_at(&mut self, n: u64) -> Result<u8> {
        let mut i = self.index_covering(n + 1)?;
        let mut pos = n;
        while i >= 2 {
            // X_i = X_{i-1}^{a_{i-1}} X_{i-2}
            let a = self.alpha.term(i - 1)?;
            let q_prev = self.block_length(i - 1)?;
            if pos < a * q_prev {
                pos %= q_prev;
                i -= 1;
            } else {
                pos -= a * q_prev;
                i -= 2;
            }
        }
        if i == 0 {
            return Ok(0);
        }
        // X_1 = 0^{a_0} 1
        Ok(if pos < self.alpha.term(0)? { 0 } else { 1 })
    }
}
