//! Exact-arithmetic toolkit for second-order linear recurrence sequences.
//!
//! The crate computes generalized binomial coefficients of such sequences by
//! three independent routes (valid even when sequence terms vanish), builds
//! the recurrences annihilating products of solutions, proves identities
//! between sequence expressions by annihilator construction plus finite
//! exact initial-value checking, and cross-checks the associated matrix
//! constructions. Every value everywhere is an exact rational; there is no
//! floating point and no tolerance anywhere.

// error variants carry exact values for diagnostics; the size is accepted
#![allow(clippy::result_large_err)]

pub mod arith;
pub mod binom;
pub mod matrices;
pub mod prover;
pub mod recurrence;
pub mod sequences;

pub use arith::{ArithError, Poly, Scalar};
pub use sequences::{SequenceDef, SequenceError};
