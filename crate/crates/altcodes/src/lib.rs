//! Decision toolkit for finite variable-length codes.
//!
//! Given finite sets of words, this library decides the classical code
//! hierarchy — code / prefix / suffix / bifix and the maximal variants —
//! and the product-based hierarchy built on top of it: unambiguous
//! products, alternative codes, strong alternative codes, and codes that
//! factor as `Z = XY` for an alternative pair `(X, Y)`.
//!
//! The main entry points:
//!
//! - [`check::sardinas_patterson`] — unique-decipherability test with a
//!   full remainder-set trace, plus [`check::ambiguity_witness`] for a
//!   shortest doubly-factorizable word when the test fails.
//! - [`check::classify`] — prefix/suffix/bifix and maximality report.
//! - [`alt::check_alternative`] / [`alt::check_strong`] — verdicts for a
//!   pair `(X, Y)`, with evidence.
//! - [`fic::decide_alt_induced`] — the full decision pipeline for "does
//!   some alternative pair induce this code?", including the reduction
//!   routes, the gcd pretest and the bounded exhaustive search.
//! - [`fic::enumerate_decompositions`] — all inducing pairs, and
//!   [`fic::enumerate_strong_decompositions`] for the strong ones.
//! - [`oracle::brute_force_decompositions`] — an independent brute-force
//!   ground truth used to cross-validate the decision pipeline.
//!
//! Run `cargo run --example decide_alt_induced` (or any of the other
//! examples) for worked end-to-end usage; the `altcodes` binary wraps the
//! same operations as a small CLI.

pub mod alt;
pub mod bench;
pub mod check;
pub mod cli;
pub mod fic;
pub mod gen;
pub mod io;
pub mod lang;
pub mod oracle;

pub use lang::{Alphabet, FiniteLanguage, FirstLetterPartition, Letter, Rational, Word};

/// Library-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Two languages with different declared alphabets were combined.
    #[error("alphabet mismatch: {{{left}}} vs {{{right}}}")]
    AlphabetMismatch { left: String, right: String },

    /// A word uses a letter missing from the declared alphabet.
    #[error("word '{word}' uses letter '{letter}' outside alphabet {{{alphabet}}}")]
    LetterOutsideAlphabet {
        letter: char,
        word: String,
        alphabet: String,
    },

    /// The operation is undefined on languages containing the empty word.
    #[error("{operation} is undefined on languages containing the empty word")]
    EpsilonInInput { operation: &'static str },

    /// The operation requires a non-empty language.
    #[error("{operation} requires a non-empty language")]
    EmptyLanguage { operation: &'static str },

    /// The operation requires every word to have length at least two.
    #[error("{operation} requires every word to have length ≥ 2, found '{word}'")]
    LengthOneWord {
        operation: &'static str,
        word: String,
    },

    /// The input is not a code; carries a checkable double factorization.
    #[error("input is not a code: '{}' factors as ({}) and ({})",
        .witness.word,
        .witness.factorization_a.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(")("),
        .witness.factorization_b.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(")("))]
    NotACode { witness: check::AmbiguityWitness },

    /// The operation was called on a code but requires a non-code (or the
    /// other way around).
    #[error("{0}")]
    ClassMismatch(String),

    /// The configured search budget or timeout was exhausted before a
    /// verdict was reached. Never reported as a verdict.
    #[error("search budget exceeded: {reason}")]
    BudgetExceeded { reason: String },

    /// Malformed parameter or input value.
    #[error("{0}")]
    InvalidInput(String),

    /// A language file failed to parse.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Generator parameters describe an impossible instance.
    #[error("infeasible generator parameters: {0}")]
    Infeasible(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

/// Library-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
