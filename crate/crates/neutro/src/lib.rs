//! # neutro
//!
//! Scalar information measures for neutrosophic values — triplets
//! (mu, omega, nu) of truth, indeterminacy and falsity degrees, each free in
//! [0, 1] — together with their bifuzzy, intuitionistic and paraconsistent
//! specialisations and a verification harness for every property the
//! measures are supposed to satisfy.
//!
//! ## Measures
//!
//! | Function | Measures | Range |
//! |----------|----------|-------|
//! | [`distance`] / [`similarity`] | normalised dissimilarity between two triplets | [0, 1] |
//! | [`certainty`] | how far a value sits from its own complement | [0, 1] |
//! | [`score`] | signed certainty; ranks values from full falsity to full truth | [-1, 1] |
//! | [`uncertainty`] | negation of certainty | [0, 1] |
//! | [`escort`] | the score-preserving complementary fuzzy pair | pair sums to 1 |
//! | [`neutrosophic_entropy`] | Shannon entropy of the escort pair | [0, ln 2] nats / [0, 1] normalised |
//!
//! ## Quick start
//!
//! ```rust
//! use neutro::{neutrosophic_entropy, score, NeutrosophicTriplet};
//!
//! let x = NeutrosophicTriplet::new(0.7, 0.2, 0.1).unwrap();
//! assert!((score(x) - 3.0 / 7.0).abs() < 1e-15);
//! assert!((neutrosophic_entropy(x).normalized - 0.863121).abs() < 1e-6);
//! ```
//!
//! ## Two coordinate systems
//!
//! Every triplet also has a secondary view through the net truth
//! tau = mu - nu and the bifuzzy definedness delta = mu + nu - 1 (see
//! [`NeutrosophicTriplet::to_secondary`]). All the measures become
//! one-liners there: certainty is |tau| / (1 + |delta| + omega), and the
//! rest follow.
//!
//! ## Specialisations
//!
//! Dropping indeterminacy (omega = 0) gives bifuzzy pairs; constraining
//! mu + nu gives Atanassov's intuitionistic pairs (sum at most 1) and
//! paraconsistent pairs (sum at least 1). [`BifuzzyPair`] carries the kind
//! and the `pair_*` functions evaluate the matching simplified formulas;
//! each equals the general measure of the pair embedded at omega = 0.
//!
//! ## Verification
//!
//! The [`verify`] module re-derives every claim from independent routes
//! (derivation-form oracles, finite differences, exhaustive lattices) and
//! reports agreement as data. Run it yourself:
//!
//! ```rust
//! use neutro::verify::{run_property_suite, SuiteConfig, GridSpec};
//!
//! let grid = GridSpec::new(0.5, true, true).unwrap();
//! let config = SuiteConfig::new(grid).with_samples(1_000, 1_000);
//! assert!(run_property_suite(&config)
//!     .iter()
//!     .all(|check| !check.mandatory || check.passed));
//! ```
//!
//! The same suite backs `neutro verify` in the bundled CLI, which also
//! batch-evaluates CSV/JSON inputs (`eval`, `distance`) and emits lattice
//! sweeps for plotting (`sweep`).
//!
//! All domain types are small immutable `Copy` values and every operation
//! is a pure function, so everything is `Send + Sync` and safe to use from
//! any number of threads.

mod bifuzzy;
mod entropy;
mod error;
mod measures;
mod report;
mod triplet;

pub mod cli;
pub mod verify;

pub use bifuzzy::{BifuzzyPair, PairKind};
pub use entropy::{
    escort, neutrosophic_entropy, pair_entropy, pair_escort, shannon_fuzzy_entropy, EntropyValue,
    EscortPair,
};
pub use error::{Error, Result};
pub use measures::{
    certainty, distance, l1_distance, pair_distance, pair_measure, score, similarity, uncertainty,
    Measure, PairComparison, CONTRADICTION_ANCHOR, UNCERTAINTY_ANCHOR,
};
pub use report::MeasureReport;
pub use triplet::{NeutrosophicTriplet, SecondaryCoordinates};
