//! Closed-form oracles for the canonical computation paths.
//!
//! Production code keeps a single route for each quantity (the simplified
//! distance formula; escort-then-entropy). The equivalent derivation forms
//! live here so the suite can hold both routes against each other without a
//! second route ever shipping in the measures themselves.

use crate::entropy::{two_point_entropy, EscortPair};
use crate::measures::{certainty, l1_distance, score};
use crate::triplet::NeutrosophicTriplet;

/// Dissimilarity from its definition: the L1 distance divided by the longer
/// of the two detours through the anchors C = (1, 0, 1) and U = (0, 0, 0),
/// with the four path lengths in their affine forms. Never uses the
/// simplified production formula.
pub fn distance_oracle(p1: NeutrosophicTriplet, p2: NeutrosophicTriplet) -> f64 {
    let via_contradiction =
        (((2.0 - p1.mu()) - p1.nu()) + p1.omega()) + (((2.0 - p2.mu()) - p2.nu()) + p2.omega());
    let via_uncertainty = ((p1.mu() + p1.omega()) + p1.nu()) + ((p2.mu() + p2.omega()) + p2.nu());
    l1_distance(p1, p2) / via_contradiction.max(via_uncertainty)
}

/// Escort pair from the primary-space closed forms
/// (mu + pi + omega/2) / (1 + |delta| + omega) and its nu counterpart,
/// rather than from the score.
pub fn escort_closed_form(x: NeutrosophicTriplet) -> EscortPair {
    let s = x.to_secondary();
    let den = (1.0 + s.delta().abs()) + s.omega();
    EscortPair {
        mu: (x.mu() + s.pi() + x.omega() / 2.0) / den,
        nu: (x.nu() + s.pi() + x.omega() / 2.0) / den,
    }
}

/// Entropy (nats) from the primary-space closed form: both escort
/// components written out in mu, nu, pi, delta, omega.
pub fn entropy_primary_form(x: NeutrosophicTriplet) -> f64 {
    let e = escort_closed_form(x);
    two_point_entropy(e.mu, e.nu)
}

/// Entropy (nats) as a function of the signed score r.
pub fn entropy_score_form(x: NeutrosophicTriplet) -> f64 {
    let r = score(x);
    two_point_entropy((1.0 + r) / 2.0, (1.0 - r) / 2.0)
}

/// Entropy (nats) as a function of |r|; equal to the signed form by the
/// symmetry between r and -r.
pub fn entropy_abs_score_form(x: NeutrosophicTriplet) -> f64 {
    let a = score(x).abs();
    two_point_entropy((1.0 + a) / 2.0, (1.0 - a) / 2.0)
}

/// Entropy (nats) as a function of the certainty g.
pub fn entropy_certainty_form(x: NeutrosophicTriplet) -> f64 {
    let g = certainty(x);
    two_point_entropy((1.0 + g) / 2.0, (1.0 - g) / 2.0)
}

/// Partial derivatives along the secondary coordinates |tau|, |delta| and
/// omega.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Gradient {
    pub wrt_abs_tau: f64,
    pub wrt_abs_delta: f64,
    pub wrt_omega: f64,
}

/// Gradient of the certainty g = |tau| / (1 + |delta| + omega).
pub fn certainty_gradient(x: NeutrosophicTriplet) -> Gradient {
    let s = x.to_secondary();
    let den = (1.0 + s.delta().abs()) + s.omega();
    Gradient {
        wrt_abs_tau: 1.0 / den,
        wrt_abs_delta: -s.tau().abs() / (den * den),
        wrt_omega: -s.tau().abs() / (den * den),
    }
}

/// Slope of the entropy in the certainty: dE/dg = ln((1-g)/(1+g)) / 2.
/// Diverges to -inf as g -> 1.
pub fn entropy_slope_in_certainty(x: NeutrosophicTriplet) -> f64 {
    let g = certainty(x);
    0.5 * ((1.0 - g) / (1.0 + g)).ln()
}

/// Entropy gradient in its direct closed forms.
pub fn entropy_gradient(x: NeutrosophicTriplet) -> Gradient {
    let s = x.to_secondary();
    let den = (1.0 + s.delta().abs()) + s.omega();
    let g = certainty(x);
    let slope = ((1.0 - g) / (1.0 + g)).ln();
    Gradient {
        wrt_abs_tau: 0.5 / den * slope,
        wrt_abs_delta: -0.5 * s.tau().abs() / (den * den) * slope,
        wrt_omega: -0.5 * s.tau().abs() / (den * den) * slope,
    }
}

/// Entropy gradient assembled by the chain rule from the certainty gradient
/// and dE/dg; must agree with [`entropy_gradient`].
pub fn entropy_gradient_composed(x: NeutrosophicTriplet) -> Gradient {
    let cg = certainty_gradient(x);
    let slope = entropy_slope_in_certainty(x);
    Gradient {
        wrt_abs_tau: cg.wrt_abs_tau * slope,
        wrt_abs_delta: cg.wrt_abs_delta * slope,
        wrt_omega: cg.wrt_omega * slope,
    }
}
