//! Complete exceptional sequences of linear radical-square-zero Nakayama
//! algebras, their bijection with idempotent endofunctions and with rooted
//! labeled forests of height at most one, and the exact count
//! `sum_{j=1}^{n} C(n,j) * j^(n-j)`.
//!
//! The crate is organized along the layers of that correspondence:
//!
//! * [`algebra`] — the algebra of rank `n`, its `2n - 1` indecomposables,
//!   closed-form Hom/Ext dimensions, and an independent linear-algebra
//!   oracle for both.
//! * [`exceptional`] — exceptional pairs and sequences, projective and
//!   injective chains, the unique-chain lookup, and exhaustive enumeration
//!   of complete exceptional sequences.
//! * [`bijection`] — the position map from complete sequences to idempotent
//!   functions and its inverse reconstruction.
//! * [`forests`] — height-at-most-one rooted labeled forests, their
//!   equivalence with idempotent functions, and unlabeled shape counting.
//! * [`counting`] — exact big-integer evaluation of the counting formula.
//!
//! Everything is a pure function over immutable values; no floating point
//! arithmetic is used anywhere.

pub mod algebra;
pub mod bijection;
pub mod counting;
pub mod error;
pub mod exceptional;
pub mod forests;

pub use algebra::{Algebra, Indec, Rank};
pub use bijection::IdempotentFunction;
pub use error::{Error, Result};
pub use exceptional::ExceptionalSequence;
pub use forests::{Forest, ForestShape};
