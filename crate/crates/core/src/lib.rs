//! Finite local rings, skew triangular matrix rings `T_n(R, σ)` and their
//! strongly clean decompositions.
//!
//! * [`ring`] builds finite rings from tables or ring-spec strings and
//!   computes units, the Jacobson radical and related data.
//! * [`operators`] handles the additive maps `x ↦ ax − xb`.
//! * [`skewtri`] implements `T_n(R, σ)`, the constructive decomposers for
//!   `n = 2, 3` and brute-force searches.
//! * [`theorems`] runs exhaustive or sampled verification sweeps and
//!   produces [`theorems::ClaimReport`]s.

pub mod error;
pub mod operators;
pub mod ring;
pub mod skewtri;
pub mod theorems;

pub use error::{Error, Result};
pub use ring::{Elem, Endomorphism, FiniteRing};
pub use skewtri::{CleanDecomposition, SkewTriRing, TriMatrix};
