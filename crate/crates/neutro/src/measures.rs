//! Distance and similarity between triplets, and the certainty, score and
//! uncertainty of a single triplet.
//!
//! The dissimilarity D normalises the L1 distance by the longer of the two
//! detour paths through the auxiliary points C = (1, 0, 1) and U = (0, 0, 0),
//! which collapses to the closed form
//!
//! ```text
//! D(P1, P2) = (|mu1-mu2| + |omega1-omega2| + |nu1-nu2|)
//!             / (2 + |delta1+delta2| + omega1 + omega2)
//! ```
//!
//! D is documented as a dissimilarity, not a metric: it does not satisfy the
//! triangle inequality in general (the verification suite probes this and
//! reports, see [`crate::verify`]).
//!
//! Certainty, score and uncertainty all share the normalisation
//! 1 + |delta| + omega:
//!
//! | measure     | formula                    | range   |
//! |-------------|----------------------------|---------|
//! | certainty   | |tau| / (1 + |delta| + omega) | [0, 1]  |
//! | score       | tau / (1 + |delta| + omega)   | [-1, 1] |
//! | uncertainty | 1 - certainty              | [0, 1]  |

use crate::bifuzzy::{BifuzzyPair, PairKind};
use crate::error::{Error, Result};
use crate::triplet::NeutrosophicTriplet;

/// The full-contradiction detour anchor C = (1, 0, 1).
pub const CONTRADICTION_ANCHOR: NeutrosophicTriplet = NeutrosophicTriplet::new_unchecked(1.0, 0.0, 1.0);

/// The full-incompleteness detour anchor U = (0, 0, 0).
pub const UNCERTAINTY_ANCHOR: NeutrosophicTriplet = NeutrosophicTriplet::new_unchecked(0.0, 0.0, 0.0);

/// L1 (taxicab) distance between two triplets, in [0, 3].
pub fn l1_distance(a: NeutrosophicTriplet, b: NeutrosophicTriplet) -> f64 {
    ((a.mu() - b.mu()).abs() + (a.omega() - b.omega()).abs()) + (a.nu() - b.nu()).abs()
}

/// Normalised dissimilarity between two triplets, in [0, 1].
///
/// Symmetric, and zero exactly on identical triplets. See the module
/// docs for the metric caveat.
///
/// ```
/// use neutro::{distance, NeutrosophicTriplet};
///
/// let truth = NeutrosophicTriplet::new(1.0, 0.0, 0.0).unwrap();
/// let falsity = NeutrosophicTriplet::new(0.0, 0.0, 1.0).unwrap();
/// assert_eq!(distance(truth, falsity), 1.0);
/// ```
pub fn distance(a: NeutrosophicTriplet, b: NeutrosophicTriplet) -> f64 {
    // The grouping is load-bearing: it keeps D bitwise symmetric and makes
    // the omega = 0 specialisations and certainty(x) = D(x, complement)
    // reduce to it exactly.
    let numerator = l1_distance(a, b);
    let denominator = (2.0 + (a.delta() + b.delta()).abs()) + (a.omega() + b.omega());
    numerator / denominator
}

/// Similarity, the negation 1 - distance.
pub fn similarity(a: NeutrosophicTriplet, b: NeutrosophicTriplet) -> f64 {
    1.0 - distance(a, b)
}

/// Signed net truth after normalisation: tau / (1 + |delta| + omega).
///
/// +1 only at full truth (1, 0, 0), -1 only at full falsity (0, 0, 1),
/// zero whenever mu = nu. Antisymmetric under the complement.
pub fn score(x: NeutrosophicTriplet) -> f64 {
    let s = x.to_secondary();
    s.tau() / ((1.0 + s.delta().abs()) + s.omega())
}

/// The dissimilarity between a triplet and its own complement; equals
/// |score| identically.
pub fn certainty(x: NeutrosophicTriplet) -> f64 {
    score(x).abs()
}

/// The negation of certainty: 1 at every self-complementary triplet.
pub fn uncertainty(x: NeutrosophicTriplet) -> f64 {
    1.0 - certainty(x)
}

/// Selects one of the three scalar measures of a pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Measure {
    Certainty,
    Score,
    Uncertainty,
}

/// Evaluates a scalar measure of a bifuzzy pair through the specialised
/// omega = 0 formula of its kind.
///
/// The specialisations are algebraic simplifications, not new definitions:
/// the result equals the general triplet measure at (mu, 0, nu) exactly.
pub fn pair_measure(pair: BifuzzyPair, which: Measure) -> f64 {
    let denominator = match pair.kind() {
        PairKind::Bifuzzy => 1.0 + pair.delta().abs(),
        PairKind::Intuitionistic => 1.0 + pair.pi(),
        PairKind::Paraconsistent => 1.0 + pair.kappa(),
    };
    let r = pair.tau() / denominator;
    match which {
        Measure::Certainty => r.abs(),
        Measure::Score => r,
        Measure::Uncertainty => 1.0 - r.abs(),
    }
}

/// Selects the pairwise comparison direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairComparison {
    Distance,
    Similarity,
}

/// Distance or similarity between two pairs of the same kind, through the
/// specialised denominator of that kind.
///
/// Errors with [`Error::MixedKinds`] when the kinds differ.
pub fn pair_distance(a: BifuzzyPair, b: BifuzzyPair, which: PairComparison) -> Result<f64> {
    if a.kind() != b.kind() {
        return Err(Error::MixedKinds {
            left: a.kind(),
            right: b.kind(),
        });
    }
    let numerator = (a.mu() - b.mu()).abs() + (a.nu() - b.nu()).abs();
    let denominator = match a.kind() {
        PairKind::Bifuzzy => 2.0 + (a.delta() + b.delta()).abs(),
        PairKind::Intuitionistic => 2.0 + (a.pi() + b.pi()),
        PairKind::Paraconsistent => 2.0 + (a.kappa() + b.kappa()),
    };
    let d = numerator / denominator;
    Ok(match which {
        PairComparison::Distance => d,
        PairComparison::Similarity => 1.0 - d,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(mu: f64, omega: f64, nu: f64) -> NeutrosophicTriplet {
        NeutrosophicTriplet::new(mu, omega, nu).unwrap()
    }

    #[test]
    fn l1_examples() {
        assert_eq!(l1_distance(t(1.0, 0.0, 0.0), t(0.0, 0.0, 1.0)), 2.0);
        assert_eq!(l1_distance(t(0.3, 0.4, 0.5), t(0.3, 0.4, 0.5)), 0.0);
        assert_eq!(l1_distance(t(1.0, 1.0, 1.0), t(0.0, 0.0, 0.0)), 3.0);
    }

    #[test]
    fn distance_examples() {
        // numerator 2, deltas cancel, denominator 2
        assert_eq!(distance(t(1.0, 0.0, 0.0), t(0.0, 0.0, 1.0)), 1.0);
        assert_eq!(distance(t(0.2, 0.7, 0.9), t(0.2, 0.7, 0.9)), 0.0);
        // numerator 2, denominator 2 + 0 + 1 + 1
        assert!((distance(t(1.0, 1.0, 0.0), t(0.0, 1.0, 1.0)) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn similarity_is_the_negation() {
        assert_eq!(similarity(t(1.0, 0.0, 0.0), t(0.0, 0.0, 1.0)), 0.0);
        assert_eq!(similarity(t(0.4, 0.2, 0.9), t(0.4, 0.2, 0.9)), 1.0);
        assert!((similarity(t(1.0, 1.0, 0.0), t(0.0, 1.0, 1.0)) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn certainty_boundary_and_derived_values() {
        assert_eq!(certainty(t(1.0, 0.0, 0.0)), 1.0);
        assert_eq!(certainty(t(0.0, 0.0, 1.0)), 1.0);
        assert_eq!(certainty(t(0.4, 0.7, 0.4)), 0.0);
        // 0.6 / (1 + 0.2 + 0.2)
        assert!((certainty(t(0.7, 0.2, 0.1)) - 3.0 / 7.0).abs() < 1e-15);
    }

    #[test]
    fn score_boundary_and_derived_values() {
        assert_eq!(score(t(1.0, 0.0, 0.0)), 1.0);
        assert_eq!(score(t(0.0, 0.0, 1.0)), -1.0);
        assert_eq!(score(t(0.3, 0.6, 0.3)), 0.0);
        assert!((score(t(1.0, 1.0, 0.0)) - 0.5).abs() < 1e-15);
        assert!((score(t(0.0, 1.0, 1.0)) + 0.5).abs() < 1e-15);
    }

    #[test]
    fn uncertainty_boundary_and_derived_values() {
        assert_eq!(uncertainty(t(1.0, 0.0, 0.0)), 0.0);
        assert_eq!(uncertainty(t(0.0, 0.0, 1.0)), 0.0);
        assert_eq!(uncertainty(t(0.2, 0.5, 0.2)), 1.0);
        assert!((uncertainty(t(0.7, 0.2, 0.1)) - 4.0 / 7.0).abs() < 1e-15);
    }

    #[test]
    fn pair_measure_examples() {
        let intuit = BifuzzyPair::new(0.6, 0.2, PairKind::Intuitionistic).unwrap();
        assert!((pair_measure(intuit, Measure::Score) - 1.0 / 3.0).abs() < 1e-15);

        let para = BifuzzyPair::new(0.9, 0.4, PairKind::Paraconsistent).unwrap();
        assert!((pair_measure(para, Measure::Certainty) - 0.5 / 1.3).abs() < 1e-15);

        let balanced = BifuzzyPair::new(0.5, 0.5, PairKind::Bifuzzy).unwrap();
        assert_eq!(pair_measure(balanced, Measure::Uncertainty), 1.0);
    }

    #[test]
    fn pair_distance_examples() {
        let a = BifuzzyPair::new(1.0, 0.0, PairKind::Intuitionistic).unwrap();
        let b = BifuzzyPair::new(0.0, 1.0, PairKind::Intuitionistic).unwrap();
        assert_eq!(pair_distance(a, b, PairComparison::Distance).unwrap(), 1.0);

        let c = BifuzzyPair::new(0.3, 0.3, PairKind::Bifuzzy).unwrap();
        assert_eq!(pair_distance(c, c, PairComparison::Distance).unwrap(), 0.0);

        let d = BifuzzyPair::new(1.0, 1.0, PairKind::Paraconsistent).unwrap();
        assert_eq!(pair_distance(d, d, PairComparison::Similarity).unwrap(), 1.0);

        assert!(matches!(
            pair_distance(a, c, PairComparison::Distance),
            Err(Error::MixedKinds { .. })
        ));
    }

    #[test]
    fn score_ordering_chain_on_the_corners() {
        let r = |mu, om, nu| score(t(mu, om, nu));
        assert!(r(1.0, 0.0, 0.0) > r(1.0, 1.0, 0.0));
        assert!(r(1.0, 1.0, 0.0) > r(1.0, 1.0, 1.0));
        assert_eq!(r(1.0, 1.0, 1.0), r(1.0, 0.0, 1.0));
        assert_eq!(r(1.0, 0.0, 1.0), r(0.0, 1.0, 0.0));
        assert_eq!(r(0.0, 1.0, 0.0), r(0.0, 0.0, 0.0));
        assert!(r(0.0, 0.0, 0.0) > r(0.0, 1.0, 1.0));
        assert!(r(0.0, 1.0, 1.0) > r(0.0, 0.0, 1.0));
    }

    fn triplet_strategy() -> impl Strategy<Value = NeutrosophicTriplet> {
        (0.0f64..=1.0, 0.0f64..=1.0, 0.0f64..=1.0)
            .prop_map(|(mu, omega, nu)| NeutrosophicTriplet::new(mu, omega, nu).unwrap())
    }

    proptest! {
        #[test]
        fn distance_is_symmetric_and_bounded(a in triplet_strategy(), b in triplet_strategy()) {
            let d = distance(a, b);
            prop_assert!((0.0..=1.0).contains(&d));
            prop_assert_eq!(d, distance(b, a));
            prop_assert_eq!(distance(a, a), 0.0);
        }

        #[test]
        fn certainty_equals_self_complement_distance(x in triplet_strategy()) {
            prop_assert_eq!(certainty(x), distance(x, x.complement()));
        }

        #[test]
        fn score_certainty_uncertainty_are_consistent(x in triplet_strategy()) {
            prop_assert_eq!(certainty(x), score(x).abs());
            prop_assert_eq!(uncertainty(x), 1.0 - certainty(x));
            prop_assert!((score(x.complement()) + score(x)).abs() < 1e-15);
            prop_assert!((certainty(x.complement()) - certainty(x)).abs() < 1e-15);
        }

        #[test]
        fn pair_measures_match_the_general_formulas(
            mu in 0.0f64..=1.0,
            nu in 0.0f64..=1.0,
        ) {
            let embedded = NeutrosophicTriplet::new(mu, 0.0, nu).unwrap();
            let bifuzzy = BifuzzyPair::new(mu, nu, PairKind::Bifuzzy).unwrap();
            prop_assert_eq!(pair_measure(bifuzzy, Measure::Score), score(embedded));
            let delta = (mu + nu) - 1.0;
            let kind = if delta <= 0.0 { PairKind::Intuitionistic } else { PairKind::Paraconsistent };
            let constrained = BifuzzyPair::new(mu, nu, kind).unwrap();
            prop_assert_eq!(pair_measure(constrained, Measure::Score), score(embedded));
            prop_assert_eq!(pair_measure(constrained, Measure::Certainty), certainty(embedded));
            prop_assert_eq!(pair_measure(constrained, Measure::Uncertainty), uncertainty(embedded));
        }

        #[test]
        fn pair_distance_matches_the_general_formula(
            mu1 in 0.0f64..=1.0, nu1 in 0.0f64..=1.0,
            mu2 in 0.0f64..=1.0, nu2 in 0.0f64..=1.0,
        ) {
            let a = BifuzzyPair::new(mu1, nu1, PairKind::Bifuzzy).unwrap();
            let b = BifuzzyPair::new(mu2, nu2, PairKind::Bifuzzy).unwrap();
            let general = distance(a.to_triplet(), b.to_triplet());
            prop_assert_eq!(pair_distance(a, b, PairComparison::Distance).unwrap(), general);
            prop_assert_eq!(pair_distance(a, b, PairComparison::Similarity).unwrap(), 1.0 - general);
        }
    }
}
