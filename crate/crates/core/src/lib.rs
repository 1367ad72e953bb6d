//! Exact computations in the automorphism group of a free group with
//! boundary, `AutFB(n,k,l)`, and its Birman kernel `K_{n,k,l}`.

pub mod abelianization;
pub mod automorphism;
pub mod cli;
pub mod cocycle;
pub mod error;
pub mod freegroup;
pub mod linalg;
pub mod presentation;

pub use automorphism::{AdHocAut, GeneratorImages, NamedAut, Symbol, SymbolWord};
pub use error::{Error, Result};
pub use freegroup::{AbelianVector, Class, FreeWord, Gen, Letter, Signature, Word};
