//! Rewriting engine for two finitely presented algebras that simulate a
//! Turing machine: one where a configuration word is nilpotent exactly when
//! the machine halts, one where it is a zero divisor exactly when it halts.
//!
//! Both rule sets are monic (monomial to monomial or zero) and form finite
//! Gröbner bases under their orders, so normal forms are unique and the
//! word problem is decidable even though nilpotency and zero-divisorhood
//! are not.

pub mod alphabet;
pub mod encodings;
pub mod error;
pub mod fixtures;
pub mod harness;
pub mod matcher;
pub mod order;
pub mod poly;
pub mod presentation;
pub mod rewrite;
pub mod rule;
pub mod tm;
pub mod verify;
pub mod word;

pub use alphabet::Alphabet;
pub use encodings::{
    decode_structure, encode_config, nilpotency_presentation, zerodivisor_presentation,
    Construction,
};
pub use error::{Error, ParseError, Result};
pub use harness::{DecisionOutcome, EncodedMachine, LockstepReport};
pub use matcher::{Matcher, Redex};
pub use order::{compare_nilp, compare_zd, height, weighted_degree, OrderKind};
pub use poly::Polynomial;
pub use presentation::Presentation;
pub use rewrite::{Normalized, Strategy, DEFAULT_BUDGET};
pub use rule::{Reduct, Rule, RuleTag, Schema};
pub use tm::{minsky_utm, tm_run, tm_step, TmConfig, TmSpec};
pub use word::{Letter, Word};
