//! Bifuzzy pairs: the omega = 0 slice of the neutrosophic cube.
//!
//! A pair (mu, nu) carries no indeterminacy. Unconstrained pairs are
//! *bifuzzy*; pairs with mu + nu <= 1 are *intuitionistic* (Atanassov) and
//! pairs with mu + nu >= 1 are *paraconsistent*. The boundary mu + nu = 1
//! satisfies both constraints, so delta = 0 is legal for every kind.

use std::fmt;

use crate::error::{Error, Result};
use crate::triplet::NeutrosophicTriplet;

/// Which sign condition on delta = mu + nu - 1 a pair declares.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairKind {
    /// No constraint on mu + nu.
    Bifuzzy,
    /// mu + nu <= 1 (delta <= 0).
    Intuitionistic,
    /// mu + nu >= 1 (delta >= 0).
    Paraconsistent,
}

impl fmt::Display for PairKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairKind::Bifuzzy => "bifuzzy",
            PairKind::Intuitionistic => "intuitionistic",
            PairKind::Paraconsistent => "paraconsistent",
        })
    }
}

/// A validated (mu, nu) pair with its declared kind.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BifuzzyPair {
    mu: f64,
    nu: f64,
    kind: PairKind,
}

impl BifuzzyPair {
    /// Validates the components against [0, 1] and the declared kind's
    /// sign condition on delta (non-strict: delta = 0 passes every kind).
    pub fn new(mu: f64, nu: f64, kind: PairKind) -> Result<Self> {
        if !(0.0..=1.0).contains(&mu) {
            return Err(Error::OutOfRange {
                component: "mu",
                value: mu,
            });
        }
        if !(0.0..=1.0).contains(&nu) {
            return Err(Error::OutOfRange {
                component: "nu",
                value: nu,
            });
        }
        let delta = (mu + nu) - 1.0;
        let ok = match kind {
            PairKind::Bifuzzy => true,
            PairKind::Intuitionistic => delta <= 0.0,
            PairKind::Paraconsistent => delta >= 0.0,
        };
        if ok {
            Ok(Self { mu, nu, kind })
        } else {
            Err(Error::KindMismatch {
                kind,
                mu,
                nu,
                delta,
            })
        }
    }

    pub fn mu(self) -> f64 {
        self.mu
    }

    pub fn nu(self) -> f64 {
        self.nu
    }

    pub fn kind(self) -> PairKind {
        self.kind
    }

    /// Net truth mu - nu.
    pub fn tau(self) -> f64 {
        self.mu - self.nu
    }

    /// Bifuzzy definedness mu + nu - 1.
    pub fn delta(self) -> f64 {
        (self.mu + self.nu) - 1.0
    }

    /// Incompleteness max(-delta, 0).
    pub fn pi(self) -> f64 {
        (-self.delta()).max(0.0)
    }

    /// Contradiction max(delta, 0).
    pub fn kappa(self) -> f64 {
        self.delta().max(0.0)
    }

    /// The pair embedded in the cube at omega = 0. Every specialised
    /// formula must agree with the general one evaluated here.
    pub fn to_triplet(self) -> NeutrosophicTriplet {
        NeutrosophicTriplet::new_unchecked(self.mu, 0.0, self.nu)
    }
}

impl fmt::Display for BifuzzyPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({}, {})", self.kind, self.mu, self.nu)
    }
}
