//! Finite-difference verification of the entropy's derivative signs.
//!
//! The entropy depends on the secondary coordinates only through
//! t = |tau|, d = |delta| and w = omega, so differences are taken in the
//! (t, d, w) box. The admissible region is the unit box cut by t + d <= 1
//! (the implied mu, nu must stay inside [0, 1]). Probes prefer central
//! differences; at points where one side would leave the region the
//! estimate falls back to a one-sided difference and is tagged as such.
//! Points with tau = 0 sit on the kink of |tau| and are degenerate.

use crate::entropy::neutrosophic_entropy;
use crate::error::{Error, Result};
use crate::triplet::NeutrosophicTriplet;
use crate::verify::oracles::entropy_gradient;
use crate::verify::{Check, CheckFailure, CheckReport};

/// Sign slack for central differences. Truncation there is O(h^2), far
/// below this at the permitted steps.
pub(crate) const CENTRAL_SIGN_SLACK: f64 = 1e-7;
/// Sign slack for one-sided boundary differences, whose truncation is O(h).
pub(crate) const ONE_SIDED_SIGN_SLACK: f64 = 1e-6;
/// Analytic derivatives below this magnitude are not held to relative
/// accuracy; the difference quotient's cancellation noise dominates there.
pub(crate) const RELATIVE_CHECK_FLOOR: f64 = 1e-3;

/// Relative tolerance for central differences against the analytic forms:
/// the O(h^2) scaling with a floor of 1e-6 at the default step.
pub(crate) fn relative_tolerance(h: f64) -> f64 {
    (10.0 * h * h).max(1e-6)
}

pub(crate) fn validate_fd_step(h: f64) -> Result<f64> {
    if h.is_finite() && h > 0.0 && h <= 0.01 {
        Ok(h)
    } else {
        Err(Error::InvalidFdStep(h))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Direction {
    AbsTau,
    AbsDelta,
    Omega,
}

impl Direction {
    pub(crate) fn name(self) -> &'static str {
        match self {
            Direction::AbsTau => "|tau|",
            Direction::AbsDelta => "|delta|",
            Direction::Omega => "omega",
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct DirectionalEstimate {
    pub direction: Direction,
    pub estimate: f64,
    pub analytic: f64,
    pub one_sided: bool,
}

#[derive(Debug, Clone)]
pub(crate) struct PointProbe {
    pub estimates: Vec<DirectionalEstimate>,
    pub skipped_directions: u64,
}

/// Entropy in nats at the secondary point (t, d, w) with t, d >= 0.
fn entropy_at(t: f64, d: f64, w: f64) -> f64 {
    let x = NeutrosophicTriplet::from_secondary(t, d, w)
        .expect("probe stays inside the admissible region");
    neutrosophic_entropy(x).nats
}

/// Difference quotients of the entropy at x along the three secondary
/// coordinates. Errors with `DegenerateInput` at tau = 0.
pub(crate) fn probe_point(x: NeutrosophicTriplet, h: f64) -> Result<PointProbe> {
    let s = x.to_secondary();
    if s.tau() == 0.0 {
        return Err(Error::DegenerateInput);
    }
    let (t, d, w) = (s.tau().abs(), s.delta().abs(), s.omega());
    let analytic = entropy_gradient(x);

    let mut estimates = Vec::with_capacity(3);
    let mut skipped = 0u64;
    let directions = [
        // direction, can step down, can step up, value at -h, value at +h
        (Direction::AbsTau, t - h >= 0.0, (t + h) + d <= 1.0),
        (Direction::AbsDelta, d - h >= 0.0, t + (d + h) <= 1.0),
        (Direction::Omega, w - h >= 0.0, w + h <= 1.0),
    ];
    for (direction, down_ok, up_ok) in directions {
        let at = |offset: f64| match direction {
            Direction::AbsTau => entropy_at(t + offset, d, w),
            Direction::AbsDelta => entropy_at(t, d + offset, w),
            Direction::Omega => entropy_at(t, d, w + offset),
        };
        let (estimate, one_sided) = match (down_ok, up_ok) {
            (true, true) => ((at(h) - at(-h)) / (2.0 * h), false),
            (false, true) => ((at(h) - at(0.0)) / h, true),
            (true, false) => ((at(0.0) - at(-h)) / h, true),
            (false, false) => {
                skipped += 1;
                continue;
            }
        };
        let analytic = match direction {
            Direction::AbsTau => analytic.wrt_abs_tau,
            Direction::AbsDelta => analytic.wrt_abs_delta,
            Direction::Omega => analytic.wrt_omega,
        };
        estimates.push(DirectionalEstimate {
            direction,
            estimate,
            analytic,
            one_sided,
        });
    }
    Ok(PointProbe {
        estimates,
        skipped_directions: skipped,
    })
}

/// Folds one probed point into a sign-and-accuracy check.
pub(crate) fn record_probe(check: &mut Check, x: NeutrosophicTriplet, probe: &PointProbe, h: f64) {
    let point = [x.mu(), x.omega(), x.nu()];
    check.cases_skipped += probe.skipped_directions;
    for est in &probe.estimates {
        if est.one_sided {
            check.cases_one_sided += 1;
        }
        let slack = if est.one_sided {
            ONE_SIDED_SIGN_SLACK
        } else {
            CENTRAL_SIGN_SLACK
        };
        // dE/d|tau| <= 0; dE/d|delta| >= 0; dE/domega >= 0
        let sign_violation = match est.direction {
            Direction::AbsTau => (est.estimate - slack).max(0.0),
            Direction::AbsDelta | Direction::Omega => (-slack - est.estimate).max(0.0),
        };
        let estimate = est.estimate;
        let direction = est.direction.name();
        check.case(sign_violation, || CheckFailure {
            points: vec![point],
            relation: format!("finite-difference dE/d{direction} has the proven sign"),
            observed: vec![estimate],
        });
        if !est.one_sided && est.analytic.abs() > RELATIVE_CHECK_FLOOR {
            let relative = (est.estimate - est.analytic).abs() / est.analytic.abs();
            let excess = (relative - relative_tolerance(h)).max(0.0);
            let analytic = est.analytic;
            check.case(excess, || CheckFailure {
                points: vec![point],
                relation: format!("central difference along {direction} matches the analytic form"),
                observed: vec![estimate, analytic],
            });
        }
    }
}

/// Checks the derivative-sign claims at a single triplet.
///
/// Central differences where both probes stay admissible, tagged one-sided
/// differences at the boundary; the analytic forms are cross-checked where
/// the central estimate applies and the derivative is not tiny. Errors with
/// [`Error::DegenerateInput`] at tau = 0 (the |tau| kink) and
/// [`Error::InvalidFdStep`] for steps outside (0, 0.01].
pub fn finite_difference_signs(x: NeutrosophicTriplet, h: f64) -> Result<CheckReport> {
    let h = validate_fd_step(h)?;
    let probe = probe_point(x, h)?;
    let mut check = Check::new("finite_difference_signs", 0.0);
    record_probe(&mut check, x, &probe, h);
    Ok(check.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(mu: f64, omega: f64, nu: f64) -> NeutrosophicTriplet {
        NeutrosophicTriplet::new(mu, omega, nu).unwrap()
    }

    #[test]
    fn all_three_signs_hold_at_an_interior_point() {
        let report = finite_difference_signs(t(0.7, 0.2, 0.1), 1e-4).unwrap();
        assert!(report.passed);
        assert_eq!(report.cases_failed, 0);
        assert!(report.cases_run >= 3);
    }

    #[test]
    fn tau_zero_is_degenerate() {
        assert_eq!(
            finite_difference_signs(t(0.5, 0.3, 0.5), 1e-4),
            Err(Error::DegenerateInput)
        );
    }

    #[test]
    fn boundary_points_fall_back_to_one_sided_probes() {
        // omega = 0 and t + d = 0.9 + 0.05 = 0.95 close to the cut
        let report = finite_difference_signs(t(0.9, 0.0, 0.05), 1e-4).unwrap();
        assert!(report.passed, "failures: {:?}", report.failures);
        assert!(report.cases_one_sided >= 1);
    }

    #[test]
    fn step_validation() {
        assert_eq!(
            finite_difference_signs(t(0.7, 0.2, 0.1), 0.02),
            Err(Error::InvalidFdStep(0.02))
        );
        assert_eq!(
            finite_difference_signs(t(0.7, 0.2, 0.1), 0.0),
            Err(Error::InvalidFdStep(0.0))
        );
    }

    #[test]
    fn strictly_negative_tau_slope_away_from_the_kink() {
        let probe = probe_point(t(0.9, 0.0, 0.05), 1e-4).unwrap();
        let tau_est = probe
            .estimates
            .iter()
            .find(|e| e.direction == Direction::AbsTau)
            .unwrap();
        assert!(tau_est.estimate < 0.0);
    }
}
