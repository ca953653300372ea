//! The escort fuzzy pair and the Shannon entropy it induces.
//!
//! Every triplet x has a unique complementary fuzzy pair that preserves its
//! score: the *escort pair* (mu_hat, nu_hat) with mu_hat + nu_hat = 1 and
//! mu_hat - nu_hat = score(x). Applying the De Luca-Termini fuzzy entropy
//! to the escort pair lifts Shannon entropy to neutrosophic information:
//!
//! ```text
//! E(x)  = -mu_hat ln(mu_hat) - nu_hat ln(nu_hat)        (nats, in [0, ln 2])
//! E_N(x) = E(x) / ln 2                                  (normalised, in [0, 1])
//! ```
//!
//! Only the normalised form reaches 1 on every triplet with mu = nu, which
//! is why it is the headline output. The canonical computation path is
//! escort-then-entropy; the equivalent closed forms live in
//! [`crate::verify`] as oracles and are held to 1e-12 agreement.

use crate::bifuzzy::{BifuzzyPair, PairKind};
use crate::error::{Error, Result};
use crate::measures::score;
use crate::triplet::NeutrosophicTriplet;

/// The score-preserving complementary fuzzy pair of a triplet.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EscortPair {
    /// Escort membership, (1 + score)/2.
    pub mu: f64,
    /// Escort non-membership, (1 - score)/2.
    pub nu: f64,
}

/// A Shannon entropy value in both exposed scales.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyValue {
    /// Raw Shannon value in nats, in [0, ln 2].
    pub nats: f64,
    /// nats / ln 2, in [0, 1].
    pub normalized: f64,
}

impl EntropyValue {
    fn from_nats(nats: f64) -> Self {
        Self {
            nats,
            normalized: nats / std::f64::consts::LN_2,
        }
    }
}

/// One term of the De Luca-Termini sum, with the 0 ln 0 = 0 convention.
/// The explicit branch avoids the NaN from 0 * (-inf).
fn entropy_term(z: f64) -> f64 {
    if z == 0.0 {
        0.0
    } else {
        -z * z.ln()
    }
}

pub(crate) fn two_point_entropy(m: f64, n: f64) -> f64 {
    entropy_term(m) + entropy_term(n)
}

/// The escort fuzzy pair of a triplet: the unique solution of
/// mu_hat + nu_hat = 1, mu_hat - nu_hat = score(x).
///
/// ```
/// use neutro::{escort, NeutrosophicTriplet};
///
/// let x = NeutrosophicTriplet::new(1.0, 0.0, 0.0).unwrap();
/// let e = escort(x);
/// assert_eq!((e.mu, e.nu), (1.0, 0.0));
/// ```
pub fn escort(x: NeutrosophicTriplet) -> EscortPair {
    let r = score(x);
    EscortPair {
        mu: (1.0 + r) / 2.0,
        nu: (1.0 - r) / 2.0,
    }
}

/// The escort pair of a bifuzzy pair through the specialised omega = 0
/// closed forms of its kind; equals `escort` of the embedded triplet.
pub fn pair_escort(pair: BifuzzyPair) -> EscortPair {
    match pair.kind() {
        PairKind::Bifuzzy => {
            let den = 1.0 + pair.delta().abs();
            EscortPair {
                mu: (pair.mu() + pair.pi()) / den,
                nu: (pair.nu() + pair.pi()) / den,
            }
        }
        PairKind::Intuitionistic => {
            let den = 1.0 + pair.pi();
            EscortPair {
                mu: (pair.mu() + pair.pi()) / den,
                nu: (pair.nu() + pair.pi()) / den,
            }
        }
        PairKind::Paraconsistent => {
            let den = 1.0 + pair.kappa();
            EscortPair {
                mu: pair.mu() / den,
                nu: pair.nu() / den,
            }
        }
    }
}

/// De Luca-Termini fuzzy entropy of a membership degree, in nats.
///
/// -m ln(m) - (1-m) ln(1-m), maximal (ln 2) at m = 1/2, zero at the crisp
/// ends. Errors when m leaves [0, 1].
pub fn shannon_fuzzy_entropy(m: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&m) {
        return Err(Error::OutOfRange {
            component: "membership",
            value: m,
        });
    }
    Ok(two_point_entropy(m, 1.0 - m))
}

/// Shannon entropy of a triplet: the fuzzy entropy of its escort pair.
///
/// Zero exactly at full truth (1, 0, 0) and full falsity (0, 0, 1); the
/// normalised value is 1 exactly whenever mu = nu. Invariant under the
/// complement.
///
/// ```
/// use neutro::{neutrosophic_entropy, NeutrosophicTriplet};
///
/// let balanced = NeutrosophicTriplet::new(0.4, 0.8, 0.4).unwrap();
/// assert_eq!(neutrosophic_entropy(balanced).normalized, 1.0);
/// ```
pub fn neutrosophic_entropy(x: NeutrosophicTriplet) -> EntropyValue {
    // escort components stay inside [0, 1] for every valid triplet, so the
    // unchecked term form is safe here
    let e = escort(x);
    EntropyValue::from_nats(two_point_entropy(e.mu, 1.0 - e.mu))
}

/// Shannon entropy of a bifuzzy pair through the specialised omega = 0
/// closed form of its kind; equals `neutrosophic_entropy` of the embedded
/// triplet.
pub fn pair_entropy(pair: BifuzzyPair) -> EntropyValue {
    let e = pair_escort(pair);
    EntropyValue::from_nats(two_point_entropy(e.mu, e.nu))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(mu: f64, omega: f64, nu: f64) -> NeutrosophicTriplet {
        NeutrosophicTriplet::new(mu, omega, nu).unwrap()
    }

    #[test]
    fn escort_examples() {
        let full = escort(t(1.0, 0.0, 0.0));
        assert_eq!((full.mu, full.nu), (1.0, 0.0));

        let center = escort(t(0.5, 0.5, 0.5));
        assert_eq!((center.mu, center.nu), (0.5, 0.5));

        let e = escort(t(0.7, 0.2, 0.1));
        assert!((e.mu - 5.0 / 7.0).abs() < 1e-15);
        assert!((e.nu - 2.0 / 7.0).abs() < 1e-15);
    }

    #[test]
    fn pair_escort_examples() {
        let intuit = BifuzzyPair::new(0.6, 0.2, PairKind::Intuitionistic).unwrap();
        let e = pair_escort(intuit);
        assert!((e.mu - 2.0 / 3.0).abs() < 1e-15);
        assert!((e.nu - 1.0 / 3.0).abs() < 1e-15);

        let para = BifuzzyPair::new(0.9, 0.4, PairKind::Paraconsistent).unwrap();
        let f = pair_escort(para);
        assert!((f.mu - 0.9 / 1.3).abs() < 1e-15);
        assert!((f.nu - 0.4 / 1.3).abs() < 1e-15);

        let sym = BifuzzyPair::new(0.5, 0.5, PairKind::Bifuzzy).unwrap();
        let g = pair_escort(sym);
        assert_eq!((g.mu, g.nu), (0.5, 0.5));
    }

    #[test]
    fn shannon_fuzzy_entropy_examples() {
        assert!((shannon_fuzzy_entropy(0.5).unwrap() - std::f64::consts::LN_2).abs() < 1e-15);
        assert_eq!(shannon_fuzzy_entropy(0.0).unwrap(), 0.0);
        assert_eq!(shannon_fuzzy_entropy(1.0).unwrap(), 0.0);
        // frozen from a 50-digit evaluation of -m ln m - (1-m) ln (1-m) at m = 5/7
        assert!((shannon_fuzzy_entropy(5.0 / 7.0).unwrap() - 0.5982695885852573).abs() < 1e-14);
        assert!(shannon_fuzzy_entropy(1.5).is_err());
        assert!(shannon_fuzzy_entropy(-0.1).is_err());
        assert!(shannon_fuzzy_entropy(f64::NAN).is_err());
    }

    #[test]
    fn entropy_examples() {
        assert_eq!(neutrosophic_entropy(t(1.0, 0.0, 0.0)).normalized, 0.0);
        assert_eq!(neutrosophic_entropy(t(0.0, 0.0, 1.0)).normalized, 0.0);
        assert_eq!(neutrosophic_entropy(t(0.4, 0.8, 0.4)).normalized, 1.0);
        // frozen: g = 3/7 through the escort path, normalised
        assert!((neutrosophic_entropy(t(0.7, 0.2, 0.1)).normalized - 0.863120568566631).abs() < 1e-14);
    }

    #[test]
    fn entropy_is_not_uncertainty() {
        // same boundary behaviour, different functions in between
        let x = t(0.7, 0.2, 0.1);
        let entropy = neutrosophic_entropy(x).normalized;
        let uncertainty = crate::measures::uncertainty(x);
        assert!((entropy - uncertainty).abs() > 0.2);
    }

    #[test]
    fn pair_entropy_examples() {
        let sym = BifuzzyPair::new(0.5, 0.5, PairKind::Intuitionistic).unwrap();
        assert_eq!(pair_entropy(sym).normalized, 1.0);

        let crisp = BifuzzyPair::new(1.0, 0.0, PairKind::Intuitionistic).unwrap();
        assert_eq!(pair_entropy(crisp).normalized, 0.0);

        // frozen: g = 0.5/1.3, escort (9/13, 4/13), normalised
        let para = BifuzzyPair::new(0.9, 0.4, PairKind::Paraconsistent).unwrap();
        assert!((pair_entropy(para).normalized - 0.8904916402194913).abs() < 1e-14);
    }

    fn triplet_strategy() -> impl Strategy<Value = NeutrosophicTriplet> {
        (0.0f64..=1.0, 0.0f64..=1.0, 0.0f64..=1.0)
            .prop_map(|(mu, omega, nu)| NeutrosophicTriplet::new(mu, omega, nu).unwrap())
    }

    proptest! {
        #[test]
        fn escort_preserves_the_score(x in triplet_strategy()) {
            let e = escort(x);
            prop_assert!((e.mu + e.nu - 1.0).abs() < 1e-15);
            prop_assert!((e.mu - e.nu - score(x)).abs() < 1e-15);
        }

        #[test]
        fn entropy_is_complement_invariant_and_bounded(x in triplet_strategy()) {
            let e = neutrosophic_entropy(x);
            let c = neutrosophic_entropy(x.complement());
            prop_assert!((e.normalized - c.normalized).abs() < 1e-15);
            prop_assert!((-1e-15..=1.0 + 1e-15).contains(&e.normalized));
            prop_assert!((e.normalized - e.nats / std::f64::consts::LN_2).abs() < 1e-15);
        }

        #[test]
        fn pair_paths_match_the_embedded_triplet(
            mu in 0.0f64..=1.0,
            nu in 0.0f64..=1.0,
        ) {
            let pair = BifuzzyPair::new(mu, nu, PairKind::Bifuzzy).unwrap();
            let embedded = pair.to_triplet();
            let pe = pair_escort(pair);
            let ge = escort(embedded);
            prop_assert!((pe.mu - ge.mu).abs() < 1e-15);
            prop_assert!((pe.nu - ge.nu).abs() < 1e-15);
            let diff = pair_entropy(pair).normalized - neutrosophic_entropy(embedded).normalized;
            prop_assert!(diff.abs() < 1e-15);
        }
    }
}
