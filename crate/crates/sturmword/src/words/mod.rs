//! Directive sequences, binary words, and the characteristic blocks they
//! generate.

mod blocks;
mod directive;
mod word;

pub use blocks::{morphism_apply, BlockTable};
pub use directive::DirectiveSequence;
pub use word::BinaryWord;
