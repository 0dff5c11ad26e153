//! Principal-minor sequences of symmetric matrices over GF(2) and GF(4).
//!
//! The crate computes the epr-sequence (`A`/`S`/`N` per order: all, some or
//! none of the principal minors of that order are nonzero) and the
//! pr-sequence of a symmetric matrix, decides which sequences are attainable
//! over GF(2), builds witness matrices for the attainable ones, and checks
//! the whole characterization by exhaustive enumeration.
//!
//! ```
//! use eprseq::{classify_epr_z2, compute_epr, witness_epr_z2, EprSequence};
//!
//! let seq: EprSequence = "NSNA".parse().unwrap();
//! assert!(classify_epr_z2(&seq).attainable);
//!
//! let w = witness_epr_z2(&seq).unwrap();
//! assert_eq!(compute_epr(&w.matrix).unwrap(), seq);
//! ```

pub mod classify;
pub mod error;
pub mod field;
pub mod matrix;
pub mod sequence;
pub mod verify;
pub mod witness;

pub use classify::{classify_epr_z2, classify_pr_char2, rule_violations, FormId, RuleHit, Verdict};
pub use error::{Error, Result};
pub use field::{Elem, Field};
pub use matrix::{IndexSet, NamedKind, SchurComplement, SymMatrix};
pub use sequence::{compute_epr, compute_pr, pr_of_epr, EprSequence, Letter, PrSequence};
pub use witness::{witness_epr_z2, witness_pr_char2, Recipe, Step, Witness};

#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../book/src/sequences.md")]
    pub mod sequences {}
    #[doc = include_str!("../../../book/src/matrices.md")]
    pub mod matrices {}
    #[doc = include_str!("../../../book/src/classification.md")]
    pub mod classification {}
    #[doc = include_str!("../../../book/src/witnesses.md")]
    pub mod witnesses {}
    #[doc = include_str!("../../../book/src/verification.md")]
    pub mod verification {}
}
