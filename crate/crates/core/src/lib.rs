//! Exact root systems, Weyl groups and Demazure characters, with sweeps
//! that check cohomology statements about Schubert varieties over whole
//! Weyl groups.
//!
//! Simple roots follow Bourbaki labeling. Weights are stored in
//! fundamental-weight coordinates. A word `[i1, …, in]` is the composition
//! `s_{i1} ∘ … ∘ s_{in}`, and along a word the Demazure operator of the last
//! letter is applied first.

pub mod charring;
pub mod cohomology;
pub mod coxeter;
pub mod error;
pub mod report;
pub mod rootsys;
pub mod weyl;

pub use charring::{CharacterOf, Coefficient};
pub use error::{Error, Result};
pub use report::{Counterexample, Finding, Report};
pub use rootsys::{CartanType, Family, Rational, Root, RootSystem, Weight};
pub use weyl::{WeylElement, Word, DEFAULT_GUARD};

/// Characters with machine-word multiplicities.
pub type Character = CharacterOf<i64>;
/// Characters with 128-bit multiplicities.
pub type WideCharacter = CharacterOf<i128>;

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");
