//! Error type shared by every module of the crate.

use crate::list::Item;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("item {0} not found in list")]
    ItemNotFound(Item),

    /// Positions are 1-based; 0 or anything past the end of the list is
    /// rejected, as is a forward-move target behind the source position.
    #[error("invalid list position {0}")]
    InvalidPosition(usize),

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("the {0} permutation is excluded for T3 sequences")]
    ExcludedPermutation(&'static str),

    #[error("duplicate item {0}")]
    DuplicateItems(Item),

    #[error("subsequence of size {q} must be shorter than the list (n = {n})")]
    SizeViolation { q: usize, n: usize },

    #[error("not a subsequence of the list: {0}")]
    NotASubsequence(String),

    #[error("parse error at line {line}: {message}")]
    ParseError { line: usize, message: String },

    #[error("item id {id} out of range [1, {n}]")]
    RangeError { id: u32, n: usize },

    #[error("block length {block_length} does not divide sequence length {sequence_length}")]
    BlockMismatch {
        block_length: usize,
        sequence_length: usize,
    },
}
