//! Canonical forms for the symmetric group and its alternating subgroup.
//!
//! Every permutation of `{1..n}` factors uniquely as an ordered product of
//! bounded powers of the cycles `t_m = (m, m-1, ..., 1)`; every even
//! permutation factors uniquely over the ascending sequence
//! `t_3, u_4, v_4, t_5, u_6, v_6, ...`. This crate implements both
//! encodings, the exchange laws that reorder out-of-order products, a
//! rewriting normalizer, and a brute-force verification oracle that
//! certifies all of it by exhaustive enumeration at small degree.
//!
//! Multiplication is read left to right: `(a * b)(x) = b(a(x))`.

pub mod alt;
pub mod cli;
pub mod error;
pub mod gens;
pub mod perm;
pub mod sn;
pub mod verify;

pub use alt::{decode_alt, encode_alt, AltBlock, AltCanonicalForm};
pub use error::{Error, Result};
pub use gens::{Gen, GeneratorWord};
pub use perm::{CycleDecomposition, Parity, Permutation};
pub use sn::{decode_sn, encode_sn, normalize_sn, SnCanonicalForm};
pub use verify::VerificationReport;
