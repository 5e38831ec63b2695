//! Error type shared by all modules of the crate.

use crate::algebra::Indec;

/// Errors produced by constructors, parsers and the chain/bijection machinery.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A rank of zero was requested; the algebra needs at least one vertex.
    #[error("rank must be at least 1")]
    ZeroRank,

    /// A module whose vertex falls outside the quiver of the given rank.
    #[error("module {module} is not valid for rank {rank}")]
    ModuleOutOfRange { module: Indec, rank: usize },

    /// A chain was requested with `t` past the end of the resolution.
    #[error("chain length t={t} out of range for {root}: {dimension} dimension is {dim}")]
    ChainOutOfRange {
        root: Indec,
        t: usize,
        /// Either `"projective"` or `"injective"`.
        dimension: &'static str,
        dim: usize,
    },

    /// A chain was rooted at a nonsimple module.
    #[error("chain root {module} is not a simple module")]
    ChainRootNotSimple { module: Indec },

    /// Malformed textual input; `token` is the offending fragment.
    #[error("cannot parse `{token}`: {reason}")]
    Parse { token: String, reason: String },

    /// A tuple entry outside `1..=n`.
    #[error("entry {value} at position {position} is outside 1..={rank}")]
    EntryOutOfRange {
        value: usize,
        position: usize,
        rank: usize,
    },

    /// A tuple that fails `A(A(i)) = A(i)`.
    #[error("function is not idempotent: A(A({position})) = {twice} but A({position}) = {once}")]
    NotIdempotent {
        position: usize,
        once: usize,
        twice: usize,
    },

    /// A candidate list of modules that is not an exceptional sequence.
    #[error("not an exceptional sequence: {reason}")]
    NotExceptional { reason: String },

    /// An operation that needs a complete sequence received a shorter one.
    #[error("sequence of length {len} is not complete for rank {rank}")]
    NotComplete { len: usize, rank: usize },

    /// A position index outside the sequence, or pointing at the wrong kind
    /// of entry.
    #[error("position {position} is invalid here: {reason}")]
    BadPosition { position: usize, reason: String },

    /// The unique-chain property failed; the input was not a complete
    /// exceptional sequence after all.
    #[error("unique-chain invariant violated at position {position}: found {hits} containing chains")]
    ChainInvariant { position: usize, hits: usize },

    /// A root/parent assignment that is not a height-at-most-one forest.
    #[error("not a valid forest: {reason}")]
    InvalidForest { reason: String },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
