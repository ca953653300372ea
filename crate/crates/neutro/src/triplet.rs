//! The two coordinate systems for a neutrosophic value.
//!
//! The primary space is the unit cube of (mu, omega, nu): degree of truth,
//! degree of indeterminacy and degree of falsity, each free in [0, 1] with
//! no constraint on their sum. The secondary space describes the same value
//! through the net truth tau = mu - nu and the bifuzzy definedness
//! delta = mu + nu - 1, from which the incompleteness pi = max(-delta, 0)
//! and the contradiction kappa = max(delta, 0) follow. The two spaces are
//! related by mu = (1 + delta + tau)/2 and nu = (1 + delta - tau)/2, and
//! mu + nu + pi - kappa = 1 always holds.

use std::fmt;

use crate::error::{Error, Result};

fn component(name: &'static str, value: f64) -> Result<f64> {
    // Exact bounds; NaN fails the containment test.
    if (0.0..=1.0).contains(&value) {
        Ok(value)
    } else {
        Err(Error::OutOfRange {
            component: name,
            value,
        })
    }
}

/// A point (mu, omega, nu) of the unit cube: degrees of truth,
/// indeterminacy and falsity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NeutrosophicTriplet {
    mu: f64,
    omega: f64,
    nu: f64,
}

impl NeutrosophicTriplet {
    /// Validates the three degrees and builds the triplet.
    ///
    /// Rejection is strict at the exact bounds: every downstream denominator
    /// and range depends on the box constraint, so out-of-range data is an
    /// error rather than something to clamp.
    ///
    /// ```
    /// use neutro::NeutrosophicTriplet;
    ///
    /// let x = NeutrosophicTriplet::new(0.7, 0.2, 0.1).unwrap();
    /// assert_eq!(x.mu(), 0.7);
    /// // mu + omega + nu may exceed 1: (1, 0, 1) is the full contradiction.
    /// assert!(NeutrosophicTriplet::new(1.0, 0.0, 1.0).is_ok());
    /// assert!(NeutrosophicTriplet::new(1.2, 0.0, 0.0).is_err());
    /// ```
    pub fn new(mu: f64, omega: f64, nu: f64) -> Result<Self> {
        Ok(Self {
            mu: component("mu", mu)?,
            omega: component("omega", omega)?,
            nu: component("nu", nu)?,
        })
    }

    /// For compile-time constants with known-valid components.
    pub(crate) const fn new_unchecked(mu: f64, omega: f64, nu: f64) -> Self {
        Self { mu, omega, nu }
    }

    /// Degree of truth.
    pub fn mu(self) -> f64 {
        self.mu
    }

    /// Degree of indeterminacy.
    pub fn omega(self) -> f64 {
        self.omega
    }

    /// Degree of falsity.
    pub fn nu(self) -> f64 {
        self.nu
    }

    /// The complement: truth and falsity swap, indeterminacy stays.
    /// An involution; fixes every triplet with mu = nu.
    pub fn complement(self) -> Self {
        Self {
            mu: self.nu,
            omega: self.omega,
            nu: self.mu,
        }
    }

    /// Net truth tau = mu - nu, in [-1, 1].
    pub fn tau(self) -> f64 {
        self.mu - self.nu
    }

    /// Bifuzzy definedness delta = mu + nu - 1, in [-1, 1].
    pub fn delta(self) -> f64 {
        (self.mu + self.nu) - 1.0
    }

    /// The secondary-space view (tau, delta, omega) of this value.
    pub fn to_secondary(self) -> SecondaryCoordinates {
        SecondaryCoordinates {
            tau: self.tau(),
            delta: self.delta(),
            omega: self.omega,
        }
    }

    /// Rebuilds a triplet from secondary coordinates.
    ///
    /// Fails when the implied mu = (1 + delta + tau)/2 or
    /// nu = (1 + delta - tau)/2 leaves [0, 1], or when omega does.
    ///
    /// ```
    /// use neutro::NeutrosophicTriplet;
    ///
    /// let x = NeutrosophicTriplet::from_secondary(0.6, -0.2, 0.2).unwrap();
    /// assert!((x.mu() - 0.7).abs() < 1e-15);
    /// assert!(NeutrosophicTriplet::from_secondary(1.5, 0.0, 0.0).is_err());
    /// ```
    pub fn from_secondary(tau: f64, delta: f64, omega: f64) -> Result<Self> {
        // Summing delta and tau before the shift keeps round trips of valid
        // triplets inside the closed unit interval.
        let mu = (1.0 + (delta + tau)) / 2.0;
        let nu = (1.0 + (delta - tau)) / 2.0;
        Ok(Self {
            mu: component("implied mu", mu)?,
            omega: component("omega", omega)?,
            nu: component("implied nu", nu)?,
        })
    }
}

impl fmt::Display for NeutrosophicTriplet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.mu, self.omega, self.nu)
    }
}

/// The secondary-space coordinates (tau, delta, omega) of a neutrosophic
/// value, with the derived incompleteness and contradiction masses.
///
/// pi and kappa are always recomputed from delta, never stored, so
/// pi >= 0, kappa >= 0, pi * kappa = 0 and kappa - pi = delta hold by
/// construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SecondaryCoordinates {
    tau: f64,
    delta: f64,
    omega: f64,
}

impl SecondaryCoordinates {
    /// Net truth mu - nu.
    pub fn tau(self) -> f64 {
        self.tau
    }

    /// Bifuzzy definedness mu + nu - 1.
    pub fn delta(self) -> f64 {
        self.delta
    }

    /// Degree of indeterminacy, carried through from the primary space.
    pub fn omega(self) -> f64 {
        self.omega
    }

    /// Bifuzzy incompleteness pi = max(-delta, 0).
    pub fn pi(self) -> f64 {
        (-self.delta).max(0.0)
    }

    /// Bifuzzy contradiction kappa = max(delta, 0).
    pub fn kappa(self) -> f64 {
        self.delta.max(0.0)
    }

    /// The primary-space triplet these coordinates describe.
    pub fn to_triplet(self) -> Result<NeutrosophicTriplet> {
        NeutrosophicTriplet::from_secondary(self.tau, self.delta, self.omega)
    }
}

impl fmt::Display for SecondaryCoordinates {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(tau {}, delta {}, omega {})",
            self.tau, self.delta, self.omega
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(mu: f64, omega: f64, nu: f64) -> NeutrosophicTriplet {
        NeutrosophicTriplet::new(mu, omega, nu).unwrap()
    }

    #[test]
    fn validation_accepts_the_whole_cube() {
        assert_eq!(t(0.7, 0.2, 0.1).nu(), 0.1);
        // sum > 1 is legal: the paraconsistent corner
        let c = t(1.0, 0.0, 1.0);
        assert_eq!((c.mu(), c.omega(), c.nu()), (1.0, 0.0, 1.0));
    }

    #[test]
    fn validation_rejects_at_exact_bounds() {
        match NeutrosophicTriplet::new(1.2, 0.0, 0.0) {
            Err(Error::OutOfRange { component, value }) => {
                assert_eq!(component, "mu");
                assert_eq!(value, 1.2);
            }
            other => panic!("expected OutOfRange, got {other:?}"),
        }
        assert!(NeutrosophicTriplet::new(0.5, -0.1, 0.0).is_err());
        assert!(NeutrosophicTriplet::new(0.5, 0.0, f64::NAN).is_err());
        assert!(NeutrosophicTriplet::new(0.5, f64::INFINITY, 0.0).is_err());
    }

    #[test]
    fn complement_swaps_truth_and_falsity() {
        assert_eq!(t(0.7, 0.2, 0.1).complement(), t(0.1, 0.2, 0.7));
        // fixed point when mu = nu
        assert_eq!(t(0.5, 0.9, 0.5).complement(), t(0.5, 0.9, 0.5));
        // involution
        let x = t(0.3, 0.4, 0.8);
        assert_eq!(x.complement().complement(), x);
    }

    #[test]
    fn secondary_coordinates_match_hand_evaluation() {
        let s = t(0.7, 0.2, 0.1).to_secondary();
        assert!((s.tau() - 0.6).abs() < 1e-15);
        assert!((s.delta() + 0.2).abs() < 1e-15);
        assert_eq!(s.omega(), 0.2);
        assert!((s.pi() - 0.2).abs() < 1e-15);
        assert_eq!(s.kappa(), 0.0);

        let c = t(1.0, 0.0, 1.0).to_secondary();
        assert_eq!((c.tau(), c.delta(), c.pi(), c.kappa()), (0.0, 1.0, 0.0, 1.0));

        let u = t(0.0, 0.0, 0.0).to_secondary();
        assert_eq!((u.tau(), u.delta(), u.pi(), u.kappa()), (0.0, -1.0, 1.0, 0.0));
    }

    #[test]
    fn from_secondary_inverts_to_secondary() {
        let x = NeutrosophicTriplet::from_secondary(0.6, -0.2, 0.2).unwrap();
        assert!((x.mu() - 0.7).abs() < 1e-15);
        assert_eq!(x.omega(), 0.2);
        assert!((x.nu() - 0.1).abs() < 1e-15);

        let center = NeutrosophicTriplet::from_secondary(0.0, 0.0, 0.5).unwrap();
        assert_eq!(center, t(0.5, 0.5, 0.5));
    }

    #[test]
    fn from_secondary_rejects_implied_overflow() {
        // implied mu = 1.25
        match NeutrosophicTriplet::from_secondary(1.5, 0.0, 0.0) {
            Err(Error::OutOfRange { component, .. }) => assert_eq!(component, "implied mu"),
            other => panic!("expected OutOfRange, got {other:?}"),
        }
        assert!(NeutrosophicTriplet::from_secondary(0.0, 0.0, 1.5).is_err());
    }

    #[test]
    fn identity_mu_nu_pi_kappa() {
        for x in [t(0.7, 0.2, 0.1), t(1.0, 0.0, 1.0), t(0.0, 1.0, 0.0), t(0.3, 0.5, 0.9)] {
            let s = x.to_secondary();
            let lhs = x.mu() + x.nu() + s.pi() - s.kappa();
            assert!((lhs - 1.0).abs() < 1e-12, "mass identity failed at {x}");
            assert!(s.pi() >= 0.0 && s.kappa() >= 0.0);
            assert_eq!(s.pi() * s.kappa(), 0.0);
        }
    }
}
