//! Exact combinatorics of signed permutations and signed set partitions.
//!
//! The crate provides:
//!
//! - [`qpoly`]: exact polynomial arithmetic in `q` (and in `t` over
//!   `q`-polynomial coefficients) with checked 64-bit coefficients;
//! - [`combinat`]: generation and canonicalization of plain permutations,
//!   signed permutations with standard cycle form, and set partitions of
//!   type B in standard presentation;
//! - [`rg2`]: restricted-growth words of type B of the second kind, their
//!   weight statistic, and the q- and q,r-Stirling numbers of the second
//!   kind of type B by both enumeration and recursion;
//! - [`rg1`]: first-kind restricted-growth words for types A and B, the
//!   encodings of permutations and signed permutations as such words, the
//!   statistics `inv_A`, `inv_B`, `neg`, `nl`, `finv`, `sfinv`, and all
//!   first-kind q- and q,r-Stirling numbers with their product formulas;
//! - [`ssinv`]: the full-cycle standard form of a signed permutation, its
//!   2n-letter word, the inversion statistic on that word, and its flag
//!   decomposition;
//! - [`symfun`]: elementary, complete homogeneous, and power-sum symmetric
//!   polynomials specialized at the odd q-brackets, with orthogonality and
//!   power-sum residuals;
//! - [`verify`]: an identity registry that re-derives every recursion,
//!   product formula, and specialization by exhaustive enumeration at
//!   small `n` and reports machine-readable pass/fail results.
//!
//! Every computation is exact: integer coefficients are checked and any
//! overflow is reported as an error, never wrapped.

pub mod combinat;
pub mod qpoly;
pub mod rg1;
pub mod rg2;
pub mod ssinv;
pub mod symfun;
pub mod verify;

use std::fmt;

pub use combinat::{
    CycleDecomposition, CycleKind, PlainPermutation, SignedPermutation, SignedSetPartition,
};
pub use qpoly::{QPoly, TPoly};
pub use rg1::{FirstKindStats, RgWordA1, RgWordB1};
pub use rg2::RgWord2;
pub use ssinv::{FlagParts, SsForm};
pub use verify::{VerifyOptions, VerifyReport};

/// Every statistic of a signed permutation in one record: the word
/// statistics of its first-kind encoding, the inversion count of its
/// full-presentation standard form, and the flag decomposition parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct PermStats {
    #[serde(flatten)]
    pub word: FirstKindStats,
    pub ss_inv: u64,
    #[serde(flatten)]
    pub flags: FlagParts,
}

pub fn perm_stats(p: &SignedPermutation) -> PermStats {
    PermStats {
        word: rg1::first_kind_stats(&rg1::phi_b(p)),
        ss_inv: ssinv::ss_inv(p),
        flags: ssinv::flag_parts(p),
    }
}

/// Identifies which clause of a restricted-growth-word definition failed.
///
/// The identifiers follow the numbering used consistently across the three
/// word flavors: `(1)` first letter, `(2)` growth bound, `(2b)` sign of a
/// new maximum (second kind only), `(3a)` opener location, `(3b)` missing
/// predecessor location (first kind only).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    /// The first letter is not one of the allowed openers.
    First,
    /// A letter exceeds the prefix maximum plus one.
    Growth,
    /// A letter reaching a new maximum absolute value is negative.
    NewMaxSign,
    /// A pair opening a new cycle does not sit at location 1.
    OpenerLoc,
    /// No pair with the same cycle index occupies the preceding location.
    Predecessor,
}

impl Condition {
    pub fn id(&self) -> &'static str {
        match self {
            Condition::First => "(1)",
            Condition::Growth => "(2)",
            Condition::NewMaxSign => "(2b)",
            Condition::OpenerLoc => "(3a)",
            Condition::Predecessor => "(3b)",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// A failed restricted-growth condition, with the 1-based position of the
/// offending letter. Violations are ordinary values, not errors; they are
/// promoted to [`Error::InvalidWord`] only when a valid word was required.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub condition: Condition,
    pub position: usize,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "condition {} fails at position {}", self.condition, self.position)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("arithmetic overflow in {op}")]
    Overflow { op: &'static str },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("size guard rejected enumerating {what} at n={n} (default limit n<={max}); adjust STIRLINGB_MAX_OBJECTS to override")]
    SizeLimit { what: &'static str, n: usize, max: usize },
    #[error("invalid word: {0}")]
    InvalidWord(Violation),
    #[error("malformed {0}")]
    Malformed(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Domain(format!("serialization failed: {e}"))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
