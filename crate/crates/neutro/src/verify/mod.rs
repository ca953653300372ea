//! Empirical verification of every analytic claim behind the measures.
//!
//! The suite re-derives each production formula from an independent route
//! (derivation-form oracles, finite differences, exhaustive lattice
//! comparison) and reports the agreement as data. Checks never panic:
//! [`run_property_suite`] returns one [`CheckReport`] per claim, sorted by
//! name, with any failures listed point by point.
//!
//! All checks are mandatory except `triangle_inequality_probe`. The
//! dissimilarity D is not claimed to be a metric, and in fact is not one:
//! the probe records the counterexamples and never affects pass/fail.

mod finite_diff;
mod oracles;

pub use finite_diff::finite_difference_signs;
pub use oracles::{
    certainty_gradient, distance_oracle, entropy_abs_score_form, entropy_certainty_form,
    entropy_gradient, entropy_gradient_composed, entropy_primary_form, entropy_score_form,
    entropy_slope_in_certainty, escort_closed_form, Gradient,
};

use serde::Serialize;

use crate::bifuzzy::{BifuzzyPair, PairKind};
use crate::entropy::{escort, neutrosophic_entropy, pair_entropy, pair_escort};
use crate::error::{Error, Result};
use crate::measures::{
    certainty, distance, pair_distance, pair_measure, score, similarity, uncertainty, Measure,
    PairComparison,
};
use crate::triplet::NeutrosophicTriplet;

/// A uniform lattice over the unit cube.
///
/// The step must divide 1 so the lattice covers both endpoints exactly;
/// axis values are computed as i / divisions, the correctly rounded
/// rationals. Corners and the centre can be forced in for steps whose
/// lattice would miss them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    step: f64,
    divisions: u32,
    include_corners: bool,
    include_center: bool,
}

impl GridSpec {
    pub fn new(step: f64, include_corners: bool, include_center: bool) -> Result<Self> {
        if !step.is_finite() || step <= 0.0 || step > 1.0 {
            return Err(Error::InvalidGridStep(step));
        }
        let divisions = (1.0 / step).round();
        if divisions < 1.0 || divisions > u32::MAX as f64 || (divisions * step - 1.0).abs() > 1e-12
        {
            return Err(Error::InvalidGridStep(step));
        }
        Ok(Self {
            step,
            divisions: divisions as u32,
            include_corners,
            include_center,
        })
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn divisions(&self) -> u32 {
        self.divisions
    }

    /// The lattice values of one axis, 0 to 1 inclusive.
    pub fn axis(&self) -> Vec<f64> {
        let n = self.divisions;
        (0..=n).map(|i| f64::from(i) / f64::from(n)).collect()
    }

    /// Every lattice point of the cube, plus any forced corners/centre,
    /// deduplicated and sorted lexicographically by (mu, omega, nu).
    pub fn points(&self) -> Vec<NeutrosophicTriplet> {
        let axis = self.axis();
        let mut points = Vec::with_capacity(axis.len().pow(3));
        for &mu in &axis {
            for &omega in &axis {
                for &nu in &axis {
                    points.push(NeutrosophicTriplet::new_unchecked(mu, omega, nu));
                }
            }
        }
        if self.include_corners {
            for mu in [0.0, 1.0] {
                for omega in [0.0, 1.0] {
                    for nu in [0.0, 1.0] {
                        points.push(NeutrosophicTriplet::new_unchecked(mu, omega, nu));
                    }
                }
            }
        }
        if self.include_center {
            points.push(NeutrosophicTriplet::new_unchecked(0.5, 0.5, 0.5));
        }
        points.sort_by(|a, b| {
            (a.mu(), a.omega(), a.nu())
                .partial_cmp(&(b.mu(), b.omega(), b.nu()))
                .expect("lattice points are never NaN")
        });
        points.dedup();
        points
    }

    /// The (mu, nu) lattice of the omega = 0 plane, for the bifuzzy
    /// specialisations.
    pub fn plane(&self) -> Vec<(f64, f64)> {
        let axis = self.axis();
        let mut plane = Vec::with_capacity(axis.len().pow(2));
        for &mu in &axis {
            for &nu in &axis {
                plane.push((mu, nu));
            }
        }
        plane
    }
}

impl Default for GridSpec {
    fn default() -> Self {
        Self::new(0.1, true, true).expect("0.1 divides the unit interval")
    }
}

/// Multiplier of Knuth's MMIX linear congruential generator.
const LCG_MULTIPLIER: u64 = 6364136223846793005;
/// Increment of Knuth's MMIX linear congruential generator.
const LCG_INCREMENT: u64 = 1442695040888963407;
/// Default fixed seed for the pair/triple subsampling stream.
pub const DEFAULT_LCG_SEED: u64 = 0x9E37_79B9_7F4A_7C15;

struct Lcg(u64);

impl Lcg {
    fn next_index(&mut self, n: usize) -> usize {
        self.0 = self.0.wrapping_mul(LCG_MULTIPLIER).wrapping_add(LCG_INCREMENT);
        ((self.0 >> 33) as usize) % n
    }
}

/// Configuration of [`run_property_suite`].
///
/// Point checks and the monotonicity comparisons enumerate the whole
/// lattice (monotonicity over every ordered pair of precomputed values).
/// Checks that recompute a distance per pair or triple are subsampled to
/// `pair_samples` / `triple_samples` draws (with replacement) from the
/// fixed-seed linear congruential stream x <- x * 6364136223846793005 +
/// 1442695040888963407 (mod 2^64), index = high 31 bits mod the pair count,
/// so every run visits the same deterministic sample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteConfig {
    grid: GridSpec,
    fd_step: f64,
    pair_samples: usize,
    triple_samples: usize,
    lcg_seed: u64,
}

impl SuiteConfig {
    pub fn new(grid: GridSpec) -> Self {
        Self {
            grid,
            fd_step: 1e-4,
            pair_samples: 100_000,
            triple_samples: 100_000,
            lcg_seed: DEFAULT_LCG_SEED,
        }
    }

    /// Replaces the finite-difference step; must lie in (0, 0.01].
    pub fn with_fd_step(mut self, h: f64) -> Result<Self> {
        self.fd_step = finite_diff::validate_fd_step(h)?;
        Ok(self)
    }

    pub fn with_samples(mut self, pairs: usize, triples: usize) -> Self {
        self.pair_samples = pairs;
        self.triple_samples = triples;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.lcg_seed = seed;
        self
    }

    pub fn grid(&self) -> &GridSpec {
        &self.grid
    }

    pub fn fd_step(&self) -> f64 {
        self.fd_step
    }

    pub fn pair_samples(&self) -> usize {
        self.pair_samples
    }

    pub fn triple_samples(&self) -> usize {
        self.triple_samples
    }

    pub fn lcg_seed(&self) -> u64 {
        self.lcg_seed
    }
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self::new(GridSpec::default())
    }
}

/// One relation that failed, with the offending input(s).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckFailure {
    /// The input point(s), each as (mu, omega, nu).
    pub points: Vec<[f64; 3]>,
    /// The relation that was expected to hold.
    pub relation: String,
    /// Observed values, in the order the relation names them.
    pub observed: Vec<f64>,
}

/// Outcome of one verification check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub name: String,
    /// Informational checks never affect exit status.
    pub mandatory: bool,
    /// Absolute tolerance each case's violation is held to.
    pub tolerance: f64,
    pub cases_run: u64,
    pub cases_skipped: u64,
    pub cases_one_sided: u64,
    pub cases_failed: u64,
    /// Largest violation observed across all cases.
    pub max_violation: f64,
    pub passed: bool,
    /// First failures in lexicographic point order; `cases_failed` counts
    /// them all.
    pub failures: Vec<CheckFailure>,
}

const FAILURE_CAP: usize = 16;

/// Accumulator behind a [`CheckReport`].
struct Check {
    name: &'static str,
    mandatory: bool,
    tolerance: f64,
    cases_run: u64,
    cases_skipped: u64,
    cases_one_sided: u64,
    cases_failed: u64,
    max_violation: f64,
    failures: Vec<CheckFailure>,
}

impl Check {
    fn new(name: &'static str, tolerance: f64) -> Self {
        Self {
            name,
            mandatory: true,
            tolerance,
            cases_run: 0,
            cases_skipped: 0,
            cases_one_sided: 0,
            cases_failed: 0,
            max_violation: 0.0,
            failures: Vec::new(),
        }
    }

    fn informational(name: &'static str, tolerance: f64) -> Self {
        Self {
            mandatory: false,
            ..Self::new(name, tolerance)
        }
    }

    fn case(&mut self, violation: f64, failure: impl FnOnce() -> CheckFailure) {
        self.cases_run += 1;
        let violation = if violation.is_nan() {
            f64::INFINITY
        } else {
            violation
        };
        if violation > self.max_violation {
            self.max_violation = violation;
        }
        if violation > self.tolerance {
            self.cases_failed += 1;
            if self.failures.len() < FAILURE_CAP {
                self.failures.push(failure());
            }
        }
    }

    fn skip(&mut self) {
        self.cases_skipped += 1;
    }

    fn finish(mut self) -> CheckReport {
        self.failures.sort_by(|a, b| {
            a.points
                .partial_cmp(&b.points)
                .expect("failure points are never NaN")
        });
        CheckReport {
            name: self.name.to_string(),
            mandatory: self.mandatory,
            tolerance: self.tolerance,
            cases_run: self.cases_run,
            cases_skipped: self.cases_skipped,
            cases_one_sided: self.cases_one_sided,
            cases_failed: self.cases_failed,
            max_violation: self.max_violation,
            passed: self.cases_failed == 0,
            failures: self.failures,
        }
    }
}

/// Per-point values shared across checks.
struct PointData {
    x: NeutrosophicTriplet,
    tau: f64,
    abs_tau: f64,
    abs_delta: f64,
    omega: f64,
    score: f64,
    certainty: f64,
    uncertainty: f64,
    entropy_nats: f64,
    entropy_normalized: f64,
}

impl PointData {
    fn evaluate(x: NeutrosophicTriplet) -> Self {
        let s = x.to_secondary();
        let entropy = neutrosophic_entropy(x);
        Self {
            x,
            tau: s.tau(),
            abs_tau: s.tau().abs(),
            abs_delta: s.delta().abs(),
            omega: s.omega(),
            score: score(x),
            certainty: certainty(x),
            uncertainty: uncertainty(x),
            entropy_nats: entropy.nats,
            entropy_normalized: entropy.normalized,
        }
    }

    fn point(&self) -> [f64; 3] {
        [self.x.mu(), self.x.omega(), self.x.nu()]
    }
}

fn point_of(x: NeutrosophicTriplet) -> [f64; 3] {
    [x.mu(), x.omega(), x.nu()]
}

/// Runs every check over the configured lattice and returns the reports
/// sorted by name. Failures are data; nothing here panics or exits.
pub fn run_property_suite(config: &SuiteConfig) -> Vec<CheckReport> {
    let points = config.grid.points();
    let data: Vec<PointData> = points.into_iter().map(PointData::evaluate).collect();

    let mut reports = vec![
        check_secondary_identity(&data),
        check_secondary_split(&data),
        check_secondary_round_trip(&data),
        check_complement_involution(&data),
        check_complement_tau_antisymmetry(&data),
        check_certainty_self_complement_distance(&data),
        check_certainty_score_consistency(&data),
        check_score_complement_antisymmetry(&data),
        check_certainty_complement_symmetry(&data),
        check_measure_boundary_conditions(&data),
        check_escort_score_preservation(&data),
        check_escort_closed_form_agreement(&data),
        check_entropy_four_form_agreement(&data),
        check_entropy_complement_invariance(&data),
        check_entropy_range(&data),
        check_analytic_derivative_signs(&data),
        check_analytic_derivative_chain_rule(&data),
        check_score_ordering_chain(),
        check_finite_differences(&data, config.fd_step),
        check_denominator_identity(&data, config),
        check_distance_oracle_equivalence(&data, config),
        check_distance_range_and_symmetry(&data, config),
        check_triangle_inequality_probe(&data, config),
        check_specialization_points(config),
        check_specialization_distances(config),
    ];
    reports.extend(check_monotonicity(&data));
    reports.sort_by(|a, b| a.name.cmp(&b.name));
    reports
}

fn check_secondary_identity(data: &[PointData]) -> CheckReport {
    let mut check = Check::new("secondary_mass_identity", 1e-12);
    for p in data {
        let s = p.x.to_secondary();
        let lhs = ((p.x.mu() + p.x.nu()) + s.pi()) - s.kappa();
        check.case((lhs - 1.0).abs(), || CheckFailure {
            points: vec![p.point()],
            relation: "mu + nu + pi - kappa = 1".to_string(),
            observed: vec![lhs],
        });
    }
    check.finish()
}

fn check_secondary_split(data: &[PointData]) -> CheckReport {
    let mut check = Check::new("incompleteness_contradiction_split", 0.0);
    for p in data {
        let s = p.x.to_secondary();
        let (pi, kappa) = (s.pi(), s.kappa());
        let violation = (-pi)
            .max(-kappa)
            .max((pi * kappa).abs())
            .max(((kappa - pi) - s.delta()).abs())
            .max(0.0);
        check.case(violation, || CheckFailure {
            points: vec![p.point()],
            relation: "pi >= 0, kappa >= 0, pi*kappa = 0, kappa - pi = delta".to_string(),
            observed: vec![pi, kappa],
        });
    }
    check.finish()
}

fn check_secondary_round_trip(data: &[PointData]) -> CheckReport {
    let mut check = Check::new("secondary_round_trip", 1e-12);
    for p in data {
        let s = p.x.to_secondary();
        let violation = match NeutrosophicTriplet::from_secondary(s.tau(), s.delta(), s.omega()) {
            Ok(back) => (back.mu() - p.x.mu())
                .abs()
                .max((back.omega() - p.x.omega()).abs())
                .max((back.nu() - p.x.nu()).abs()),
            Err(_) => f64::INFINITY,
        };
        check.case(violation, || CheckFailure {
            points: vec![p.point()],
            relation: "from_secondary(to_secondary(x)) = x".to_string(),
            observed: vec![s.tau(), s.delta(), s.omega()],
        });
    }
    check.finish()
}

fn check_complement_involution(data: &[PointData]) -> CheckReport {
    let mut check = Check::new("complement_involution", 1e-15);
    for p in data {
        let back = p.x.complement().complement();
        let violation = (back.mu() - p.x.mu())
            .abs()
            .max((back.omega() - p.x.omega()).abs())
            .max((back.nu() - p.x.nu()).abs());
        check.case(violation, || CheckFailure {
            points: vec![p.point()],
            relation: "complement(complement(x)) = x".to_string(),
            observed: vec![back.mu(), back.omega(), back.nu()],
        });
    }
    check.finish()
}

fn check_complement_tau_antisymmetry(data: &[PointData]) -> CheckReport {
    let mut check = Check::new("complement_tau_antisymmetry", 1e-15);
    for p in data {
        let c = p.x.complement().to_secondary();
        let s = p.x.to_secondary();
        let violation = (c.tau() + s.tau())
            .abs()
            .max((c.delta() - s.delta()).abs())
            .max((c.omega() - s.omega()).abs());
        check.case(violation, || CheckFailure {
            points: vec![p.point()],
            relation: "complement flips tau, fixes delta and omega".to_string(),
            observed: vec![s.tau(), c.tau()],
        });
    }
    check.finish()
}

fn check_certainty_self_complement_distance(data: &[PointData]) -> CheckReport {
    let mut check = Check::new("certainty_self_complement_distance", 1e-15);
    for p in data {
        let d = distance(p.x, p.x.complement());
        check.case((d - p.certainty).abs(), || CheckFailure {
            points: vec![p.point()],
            relation: "certainty(x) = distance(x, complement(x))".to_string(),
            observed: vec![p.certainty, d],
        });
    }
    check.finish()
}

fn check_certainty_score_consistency(data: &[PointData]) -> CheckReport {
    let mut check = Check::new("certainty_score_consistency", 1e-15);
    for p in data {
        let violation = (p.certainty - p.score.abs())
            .abs()
            .max((p.uncertainty - (1.0 - p.certainty)).abs());
        check.case(violation, || CheckFailure {
            points: vec![p.point()],
            relation: "certainty = |score|, uncertainty = 1 - certainty".to_string(),
            observed: vec![p.certainty, p.score, p.uncertainty],
        });
    }
    check.finish()
}

fn check_score_complement_antisymmetry(data: &[PointData]) -> CheckReport {
    let mut check = Check::new("score_complement_antisymmetry", 1e-15);
    for p in data {
        let rc = score(p.x.complement());
        check.case((rc + p.score).abs(), || CheckFailure {
            points: vec![p.point()],
            relation: "score(complement(x)) = -score(x)".to_string(),
            observed: vec![p.score, rc],
        });
    }
    check.finish()
}

fn check_certainty_complement_symmetry(data: &[PointData]) -> CheckReport {
    let mut check = Check::new("certainty_complement_symmetry", 1e-15);
    for p in data {
        let gc = certainty(p.x.complement());
        check.case((gc - p.certainty).abs(), || CheckFailure {
            points: vec![p.point()],
            relation: "certainty(mu, omega, nu) = certainty(nu, omega, mu)".to_string(),
            observed: vec![p.certainty, gc],
        });
    }
    check.finish()
}

fn check_measure_boundary_conditions(data: &[PointData]) -> CheckReport {
    let mut check = Check::new("measure_boundary_conditions", 1e-15);
    let truth = NeutrosophicTriplet::new_unchecked(1.0, 0.0, 0.0);
    let falsity = NeutrosophicTriplet::new_unchecked(0.0, 0.0, 1.0);
    for (x, expected_score) in [(truth, 1.0), (falsity, -1.0)] {
        let violation = (certainty(x) - 1.0)
            .abs()
            .max((score(x) - expected_score).abs())
            .max(uncertainty(x).abs())
            .max(neutrosophic_entropy(x).normalized.abs());
        check.case(violation, || CheckFailure {
            points: vec![point_of(x)],
            relation: "full truth/falsity: certainty 1, |score| 1, uncertainty 0, entropy 0"
                .to_string(),
            observed: vec![certainty(x), score(x), uncertainty(x)],
        });
    }
    for p in data {
        if p.x.mu() != p.x.nu() {
            continue;
        }
        let violation = p
            .certainty
            .abs()
            .max(p.score.abs())
            .max((p.uncertainty - 1.0).abs())
            .max((p.entropy_normalized - 1.0).abs());
        check.case(violation, || CheckFailure {
            points: vec![p.point()],
            relation: "mu = nu: certainty 0, uncertainty 1, normalised entropy 1".to_string(),
            observed: vec![p.certainty, p.uncertainty, p.entropy_normalized],
        });
    }
    check.finish()
}

fn check_escort_score_preservation(data: &[PointData]) -> CheckReport {
    let mut check = Check::new("escort_score_preservation", 1e-15);
    for p in data {
        let e = escort(p.x);
        let violation = ((e.mu + e.nu) - 1.0)
            .abs()
            .max(((e.mu - e.nu) - p.score).abs());
        check.case(violation, || CheckFailure {
            points: vec![p.point()],
            relation: "escort_mu + escort_nu = 1, escort_mu - escort_nu = score".to_string(),
            observed: vec![e.mu, e.nu, p.score],
        });
    }
    check.finish()
}

fn check_escort_closed_form_agreement(data: &[PointData]) -> CheckReport {
    let mut check = Check::new("escort_closed_form_agreement", 1e-12);
    for p in data {
        let canonical = escort(p.x);
        let closed = escort_closed_form(p.x);
        let violation = (canonical.mu - closed.mu)
            .abs()
            .max((canonical.nu - closed.nu).abs());
        check.case(violation, || CheckFailure {
            points: vec![p.point()],
            relation: "score form of the escort pair equals its primary closed form".to_string(),
            observed: vec![canonical.mu, closed.mu, canonical.nu, closed.nu],
        });
    }
    check.finish()
}

fn check_entropy_four_form_agreement(data: &[PointData]) -> CheckReport {
    let mut check = Check::new("entropy_four_form_agreement", 1e-12);
    for p in data {
        let forms = [
            p.entropy_nats,
            entropy_primary_form(p.x),
            entropy_score_form(p.x),
            entropy_abs_score_form(p.x),
            entropy_certainty_form(p.x),
        ];
        let max = forms.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let min = forms.iter().cloned().fold(f64::INFINITY, f64::min);
        check.case(max - min, || CheckFailure {
            points: vec![p.point()],
            relation: "the four entropy forms agree with the canonical path".to_string(),
            observed: forms.to_vec(),
        });
    }
    check.finish()
}

fn check_entropy_complement_invariance(data: &[PointData]) -> CheckReport {
    let mut check = Check::new("entropy_complement_invariance", 1e-15);
    for p in data {
        let c = neutrosophic_entropy(p.x.complement());
        let violation = (c.nats - p.entropy_nats)
            .abs()
            .max((c.normalized - p.entropy_normalized).abs());
        check.case(violation, || CheckFailure {
            points: vec![p.point()],
            relation: "entropy(complement(x)) = entropy(x)".to_string(),
            observed: vec![p.entropy_nats, c.nats],
        });
    }
    check.finish()
}

fn check_entropy_range(data: &[PointData]) -> CheckReport {
    let mut check = Check::new("entropy_range", 1e-15);
    for p in data {
        let violation = (-p.entropy_normalized)
            .max(p.entropy_normalized - 1.0)
            .max((p.entropy_normalized - p.entropy_nats / std::f64::consts::LN_2).abs())
            .max(0.0);
        check.case(violation, || CheckFailure {
            points: vec![p.point()],
            relation: "normalised entropy lies in [0, 1] and equals nats / ln 2".to_string(),
            observed: vec![p.entropy_nats, p.entropy_normalized],
        });
    }
    check.finish()
}

fn check_analytic_derivative_signs(data: &[PointData]) -> CheckReport {
    let mut check = Check::new("analytic_derivative_signs", 0.0);
    for p in data {
        if p.tau == 0.0 || p.certainty == 1.0 {
            // the |tau| kink and the diverging slope at g = 1
            check.skip();
            continue;
        }
        let slope = entropy_slope_in_certainty(p.x);
        let grad = entropy_gradient(p.x);
        let violation = slope
            .max(grad.wrt_abs_tau)
            .max(-grad.wrt_abs_delta)
            .max(-grad.wrt_omega)
            .max(0.0);
        check.case(violation, || CheckFailure {
            points: vec![p.point()],
            relation: "dE/dg <= 0, dE/d|tau| <= 0, dE/d|delta| >= 0, dE/domega >= 0".to_string(),
            observed: vec![slope, grad.wrt_abs_tau, grad.wrt_abs_delta, grad.wrt_omega],
        });
    }
    check.finish()
}

fn check_analytic_derivative_chain_rule(data: &[PointData]) -> CheckReport {
    let mut check = Check::new("analytic_derivative_chain_rule", 1e-12);
    for p in data {
        if p.certainty == 1.0 {
            check.skip();
            continue;
        }
        let direct = entropy_gradient(p.x);
        let composed = entropy_gradient_composed(p.x);
        let violation = (direct.wrt_abs_tau - composed.wrt_abs_tau)
            .abs()
            .max((direct.wrt_abs_delta - composed.wrt_abs_delta).abs())
            .max((direct.wrt_omega - composed.wrt_omega).abs());
        check.case(violation, || CheckFailure {
            points: vec![p.point()],
            relation: "chain-rule composition equals the direct derivative forms".to_string(),
            observed: vec![direct.wrt_abs_tau, composed.wrt_abs_tau],
        });
    }
    check.finish()
}

fn check_score_ordering_chain() -> CheckReport {
    let mut check = Check::new("score_ordering_chain", 1e-15);
    let chain: [([f64; 3], f64); 8] = [
        ([1.0, 0.0, 0.0], 1.0),
        ([1.0, 1.0, 0.0], 0.5),
        ([1.0, 1.0, 1.0], 0.0),
        ([1.0, 0.0, 1.0], 0.0),
        ([0.0, 1.0, 0.0], 0.0),
        ([0.0, 0.0, 0.0], 0.0),
        ([0.0, 1.0, 1.0], -0.5),
        ([0.0, 0.0, 1.0], -1.0),
    ];
    let scores: Vec<f64> = chain
        .iter()
        .map(|(p, _)| score(NeutrosophicTriplet::new_unchecked(p[0], p[1], p[2])))
        .collect();
    for ((point, expected), &observed) in chain.iter().zip(&scores) {
        check.case((observed - expected).abs(), || CheckFailure {
            points: vec![*point],
            relation: format!("score = {expected}"),
            observed: vec![observed],
        });
    }
    for k in 0..chain.len() - 1 {
        let expected_gap = chain[k].1 - chain[k + 1].1;
        let observed_gap = scores[k] - scores[k + 1];
        check.case((observed_gap - expected_gap).abs(), || CheckFailure {
            points: vec![chain[k].0, chain[k + 1].0],
            relation: format!("score gap = {expected_gap}"),
            observed: vec![scores[k], scores[k + 1]],
        });
    }
    check.finish()
}

fn check_finite_differences(data: &[PointData], h: f64) -> CheckReport {
    let mut check = Check::new("finite_difference_derivative_signs", 0.0);
    for p in data {
        match finite_diff::probe_point(p.x, h) {
            Ok(probe) => finite_diff::record_probe(&mut check, p.x, &probe, h),
            Err(_) => check.skip(),
        }
    }
    check.finish()
}

/// Draws a deterministic ordered pair of lattice indices.
fn draw_pair(lcg: &mut Lcg, n: usize) -> (usize, usize) {
    let k = lcg.next_index(n * n);
    (k / n, k % n)
}

fn check_denominator_identity(data: &[PointData], config: &SuiteConfig) -> CheckReport {
    let mut check = Check::new("detour_denominator_identity", 1e-12);
    let mut lcg = Lcg(config.lcg_seed);
    let n = data.len();
    for _ in 0..config.pair_samples {
        let (i, j) = draw_pair(&mut lcg, n);
        let (a, b) = (&data[i], &data[j]);
        let delta_a = a.x.delta();
        let delta_b = b.x.delta();
        let omegas = a.omega + b.omega;
        let via_contradiction = ((2.0 - delta_a) - delta_b) + omegas;
        let via_uncertainty = ((2.0 + delta_a) + delta_b) + omegas;
        let closed = (2.0 + (delta_a + delta_b).abs()) + omegas;
        let violation = (via_contradiction.max(via_uncertainty) - closed).abs();
        check.case(violation, || CheckFailure {
            points: vec![a.point(), b.point()],
            relation: "max of the two detour lengths equals 2 + |delta1+delta2| + omega1 + omega2"
                .to_string(),
            observed: vec![via_contradiction, via_uncertainty, closed],
        });
    }
    check.finish()
}

fn check_distance_oracle_equivalence(data: &[PointData], config: &SuiteConfig) -> CheckReport {
    let mut check = Check::new("distance_oracle_equivalence", 1e-12);
    let mut lcg = Lcg(config.lcg_seed);
    let n = data.len();
    for _ in 0..config.pair_samples {
        let (i, j) = draw_pair(&mut lcg, n);
        let (a, b) = (&data[i], &data[j]);
        let produced = distance(a.x, b.x);
        let oracle = distance_oracle(a.x, b.x);
        check.case((produced - oracle).abs(), || CheckFailure {
            points: vec![a.point(), b.point()],
            relation: "closed-form distance equals its max-of-detours definition".to_string(),
            observed: vec![produced, oracle],
        });
    }
    check.finish()
}

fn check_distance_range_and_symmetry(data: &[PointData], config: &SuiteConfig) -> CheckReport {
    let mut check = Check::new("distance_range_and_symmetry", 0.0);
    let mut lcg = Lcg(config.lcg_seed);
    let n = data.len();
    for _ in 0..config.pair_samples {
        let (i, j) = draw_pair(&mut lcg, n);
        let (a, b) = (&data[i], &data[j]);
        let d_ab = distance(a.x, b.x);
        let d_ba = distance(b.x, a.x);
        let violation = (-d_ab).max(d_ab - 1.0).max((d_ab - d_ba).abs()).max(0.0);
        check.case(violation, || CheckFailure {
            points: vec![a.point(), b.point()],
            relation: "0 <= D <= 1 and D(p1, p2) = D(p2, p1)".to_string(),
            observed: vec![d_ab, d_ba],
        });
    }
    for p in data {
        check.case(distance(p.x, p.x).abs(), || CheckFailure {
            points: vec![p.point()],
            relation: "D(p, p) = 0".to_string(),
            observed: vec![distance(p.x, p.x)],
        });
    }
    check.finish()
}

fn check_triangle_inequality_probe(data: &[PointData], config: &SuiteConfig) -> CheckReport {
    // report-only: D is a dissimilarity, not a metric, and counterexamples
    // exist (e.g. (1,0,1), (0,0,0) via (1,0,0))
    let mut check = Check::informational("triangle_inequality_probe", 0.0);
    let mut lcg = Lcg(config.lcg_seed);
    let n = data.len();
    for _ in 0..config.triple_samples {
        let a = &data[lcg.next_index(n)];
        let b = &data[lcg.next_index(n)];
        let c = &data[lcg.next_index(n)];
        let violation = (distance(a.x, c.x) - (distance(a.x, b.x) + distance(b.x, c.x))).max(0.0);
        check.case(violation, || CheckFailure {
            points: vec![a.point(), b.point(), c.point()],
            relation: "D(a, c) <= D(a, b) + D(b, c)".to_string(),
            observed: vec![
                distance(a.x, c.x),
                distance(a.x, b.x),
                distance(b.x, c.x),
            ],
        });
    }
    check.finish()
}

/// Kinds whose sign condition a plane point satisfies (always includes
/// Bifuzzy; both constrained kinds at delta = 0).
fn eligible_kinds(delta: f64) -> Vec<PairKind> {
    let mut kinds = vec![PairKind::Bifuzzy];
    if delta <= 0.0 {
        kinds.push(PairKind::Intuitionistic);
    }
    if delta >= 0.0 {
        kinds.push(PairKind::Paraconsistent);
    }
    kinds
}

fn check_specialization_points(config: &SuiteConfig) -> CheckReport {
    let mut check = Check::new("specialization_point_consistency", 1e-15);
    for (mu, nu) in config.grid.plane() {
        let delta = (mu + nu) - 1.0;
        for kind in eligible_kinds(delta) {
            let pair = BifuzzyPair::new(mu, nu, kind).expect("kind chosen by delta sign");
            let embedded = pair.to_triplet();
            let pair_esc = pair_escort(pair);
            let general_esc = escort(embedded);
            let pair_ent = pair_entropy(pair);
            let general_ent = neutrosophic_entropy(embedded);
            let violation = (pair_measure(pair, Measure::Certainty) - certainty(embedded))
                .abs()
                .max((pair_measure(pair, Measure::Score) - score(embedded)).abs())
                .max((pair_measure(pair, Measure::Uncertainty) - uncertainty(embedded)).abs())
                .max((pair_esc.mu - general_esc.mu).abs())
                .max((pair_esc.nu - general_esc.nu).abs())
                .max((pair_ent.nats - general_ent.nats).abs())
                .max((pair_ent.normalized - general_ent.normalized).abs());
            check.case(violation, || CheckFailure {
                points: vec![point_of(embedded)],
                relation: format!("{kind} specialisations equal the general forms at omega = 0"),
                observed: vec![pair_measure(pair, Measure::Score), score(embedded)],
            });
        }
    }
    check.finish()
}

fn check_specialization_distances(config: &SuiteConfig) -> CheckReport {
    let mut check = Check::new("specialization_distance_consistency", 1e-15);
    let plane = config.grid.plane();
    for &(mu1, nu1) in &plane {
        for &(mu2, nu2) in &plane {
            let delta1 = (mu1 + nu1) - 1.0;
            let delta2 = (mu2 + nu2) - 1.0;
            for kind in eligible_kinds(delta1) {
                if !eligible_kinds(delta2).contains(&kind) {
                    continue;
                }
                let a = BifuzzyPair::new(mu1, nu1, kind).expect("kind chosen by delta sign");
                let b = BifuzzyPair::new(mu2, nu2, kind).expect("kind chosen by delta sign");
                let spec_d = pair_distance(a, b, PairComparison::Distance)
                    .expect("kinds match by construction");
                let spec_s = pair_distance(a, b, PairComparison::Similarity)
                    .expect("kinds match by construction");
                let general_d = distance(a.to_triplet(), b.to_triplet());
                let general_s = similarity(a.to_triplet(), b.to_triplet());
                let violation = (spec_d - general_d).abs().max((spec_s - general_s).abs());
                check.case(violation, || CheckFailure {
                    points: vec![point_of(a.to_triplet()), point_of(b.to_triplet())],
                    relation: format!("{kind} distance/similarity equal the general forms"),
                    observed: vec![spec_d, general_d, spec_s, general_s],
                });
            }
        }
    }
    check.finish()
}

/// One pass over every ordered pair of precomputed points, feeding the five
/// monotonicity checks.
fn check_monotonicity(data: &[PointData]) -> Vec<CheckReport> {
    let mut certainty_mono = Check::new("certainty_monotonicity", 0.0);
    let mut score_nonneg = Check::new("score_monotonicity_nonnegative_tau", 0.0);
    let mut score_nonpos = Check::new("score_monotonicity_nonpositive_tau", 0.0);
    let mut uncertainty_mono = Check::new("uncertainty_monotonicity", 0.0);
    // Entropy comparisons pass through ln, so mathematically equal inputs
    // written differently can disagree by an ulp; the slack covers that
    // double-rounding, nothing more.
    let mut entropy_mono = Check::new("entropy_monotonicity", 1e-15);

    for a in data {
        for b in data {
            if a.abs_tau <= b.abs_tau && a.abs_delta >= b.abs_delta && a.omega >= b.omega {
                certainty_mono.case((a.certainty - b.certainty).max(0.0), || CheckFailure {
                    points: vec![a.point(), b.point()],
                    relation: "|tau| up, |delta| down, omega down raises certainty".to_string(),
                    observed: vec![a.certainty, b.certainty],
                });
            }
            if 0.0 <= a.tau && a.tau <= b.tau && a.abs_delta >= b.abs_delta && a.omega >= b.omega {
                score_nonneg.case((a.score - b.score).max(0.0), || CheckFailure {
                    points: vec![a.point(), b.point()],
                    relation: "score rises with tau on tau >= 0".to_string(),
                    observed: vec![a.score, b.score],
                });
            }
            if a.tau <= b.tau && b.tau <= 0.0 && a.abs_delta <= b.abs_delta && a.omega <= b.omega {
                score_nonpos.case((a.score - b.score).max(0.0), || CheckFailure {
                    points: vec![a.point(), b.point()],
                    relation: "score rises with tau on tau <= 0".to_string(),
                    observed: vec![a.score, b.score],
                });
            }
            if a.abs_tau >= b.abs_tau && a.abs_delta <= b.abs_delta && a.omega <= b.omega {
                uncertainty_mono.case((a.uncertainty - b.uncertainty).max(0.0), || CheckFailure {
                    points: vec![a.point(), b.point()],
                    relation: "|tau| down, |delta| up, omega up raises uncertainty".to_string(),
                    observed: vec![a.uncertainty, b.uncertainty],
                });
                entropy_mono.case((a.entropy_nats - b.entropy_nats).max(0.0), || CheckFailure {
                    points: vec![a.point(), b.point()],
                    relation: "entropy shares the uncertainty comparison".to_string(),
                    observed: vec![a.entropy_nats, b.entropy_nats],
                });
            }
        }
    }
    vec![
        certainty_mono.finish(),
        score_nonneg.finish(),
        score_nonpos.finish(),
        uncertainty_mono.finish(),
        entropy_mono.finish(),
    ]
}
