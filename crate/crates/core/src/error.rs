use thiserror::Error;

use crate::freegroup::{Gen, Signature};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid signature (n, k, l) = ({n}, {k}, {l}): at least one count must be positive")]
    InvalidSignature { n: u32, k: u32, l: u32 },

    #[error("generator {gen} is outside signature {sig}")]
    OutOfRange { gen: Gen, sig: Signature },

    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: Signature, right: Signature },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid generator: {0}")]
    InvalidGenerator(String),

    #[error("not an element of AutFB (some boundary generator leaves its conjugacy class)")]
    NotInAutFb,

    #[error("not an element of the Birman kernel")]
    NotInKernel,

    #[error("not an element of L = Ker(J'_y)")]
    NotInL,

    #[error("word is not in the normal closure of Y: {0}")]
    NotInNormalClosure(String),

    #[error("word is not in the commutator subgroup: {0}")]
    NotInCommutator(String),

    #[error("operation requires n = 0, got {0}")]
    RequiresNoX(Signature),

    #[error("operation requires k >= 1, got {0}")]
    RequiresY(Signature),

    #[error("unknown relation family: {0}")]
    UnknownFamily(String),

    #[error("invalid context: {0}")]
    InvalidContext(String),

    #[error("supplied inverse table does not invert the image table")]
    InverseMismatch,
}
