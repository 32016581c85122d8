//! Exact computations in affine quantum Schur algebras.
//!
//! The crate realizes the affine quantum Schur algebra as the endomorphism algebra of
//! tensor space over the extended affine Hecke algebra, computes its standard and
//! canonical bases, and extracts the comultiplication structure constants `f`, `g`, `h`.

pub mod afcomb;
pub mod error;
pub mod hecke;
pub mod modified;
pub mod ring;
pub mod schur;
pub mod tensor;
pub mod verify;

pub use error::{Error, Result};
pub use ring::LaurentPoly;
