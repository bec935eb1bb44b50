//! Combinatorics on finite binary words.
//!
//! `trapeze` analyzes finite words over an alphabet of at most two letters:
//! factor complexity profiles, left/right special factors, balance testing,
//! open/closed classification, palindromic richness, pathological factor
//! pairs and root factorizations. The [`lab`] module adds exhaustive
//! enumeration, per-length census tables and a statement-verification
//! harness that checks the structural laws relating all of these
//! classifications over every binary word up to a length budget.
//!
//! # Example
//!
//! ```
//! use trapeze::{classify, Word};
//!
//! let w = Word::parse("aaababa")?;
//! let c = classify(&w)?;
//! assert!(c.trapezoidal && !c.sturmian && c.rich);
//! # Ok::<(), trapeze::Error>(())
//! ```
//!
//! Positions are 1-based throughout the public API, so `w.letter(1)` is the
//! first letter and an occurrence of a factor `u` starting at position `i`
//! ends at position `i + |u| - 1`.

pub mod classify;
pub mod complexity;
pub mod lab;
pub mod structure;
pub mod word;

pub use classify::{
    balance_violation, classify, closedness, is_balanced, is_central, is_rich, is_standard,
    is_sturmian, is_trapezoidal, palindromic_factors, trapezoidal_conditions, BalanceViolation,
    Classification, Closedness, TrapezoidalConditions,
};
pub use complexity::{
    bispecial_factors, complexity_profile, left_special_factors, longest_left_special,
    longest_left_specials, longest_right_special, longest_right_specials, parameters,
    right_special_factors, ComplexityProfile, WordParameters,
};
pub use structure::{
    central_decomposition, complete_returns, dalessandro_factorize, factorization_splits,
    longest_bispecial_analysis, minimal_pathological_pair, CentralDecomposition, CompleteReturn,
    DalFactorization, PathologicalPair, SpecialFactorReport,
};
pub use word::{
    factor_set, fractional_root, is_primitive, longest_repeated_prefix, longest_repeated_suffix,
    occurrences, period, prefixes, primitive_root, suffixes, Occurrence, RootDecomposition, Word,
};

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Words are restricted to alphabets of at most two letters.
    #[error("alphabet has {found} distinct letters, at most 2 are supported")]
    AlphabetTooLarge { found: usize },

    /// The operation has no meaning for the empty word.
    #[error("{op} is undefined for the empty word")]
    EmptyWord { op: &'static str },

    /// The operation needs a word that actually uses two letters.
    #[error("{op} is undefined for `{word}`: it uses fewer than two letters")]
    UnaryUndefined { op: &'static str, word: String },

    /// A singular accessor was called while several candidates exist.
    #[error("`{word}` has {count} maximal {side} special factors, expected exactly one")]
    AmbiguousSpecial {
        word: String,
        side: &'static str,
        count: usize,
    },

    /// The input does not satisfy the operation's precondition.
    #[error("not applicable: {reason}")]
    NotApplicable { reason: String },

    /// `complete_returns` was asked about a word that never occurs.
    #[error("`{factor}` is not a factor of `{word}`")]
    FactorNotFound { factor: String, word: String },

    /// Complete returns to the empty factor are not defined.
    #[error("complete returns to the empty factor are undefined")]
    EmptyFactor,

    /// `central_decomposition` requires a central word.
    #[error("`{word}` is not a central word")]
    NotCentral { word: String },

    /// Enumeration or verification was asked to exceed its length budget.
    #[error("length {requested} exceeds the budget of {budget}")]
    BudgetExceeded { requested: usize, budget: usize },

    /// An unknown statement id was passed to the verification harness.
    #[error("unknown statement id `{id}`")]
    UnknownStatement { id: String },

    /// An internal consistency check failed; this indicates a bug, never a
    /// property of the input data.
    #[error("internal invariant violated: {context}")]
    Internal { context: String },
}

pub type Result<T> = std::result::Result<T, Error>;
