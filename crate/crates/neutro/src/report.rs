//! Batch aggregation of every scalar measure at one input.

use crate::entropy::{escort, neutrosophic_entropy, EntropyValue, EscortPair};
use crate::measures::{certainty, score, uncertainty};
use crate::triplet::NeutrosophicTriplet;

/// All scalar measures of one triplet, for batch output.
///
/// By construction `uncertainty = 1 - certainty`, the escort components sum
/// to 1, and `entropy.normalized = entropy.nats / ln 2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasureReport {
    pub input: NeutrosophicTriplet,
    pub certainty: f64,
    pub score: f64,
    pub uncertainty: f64,
    pub escort: EscortPair,
    pub entropy: EntropyValue,
}

impl MeasureReport {
    pub fn evaluate(input: NeutrosophicTriplet) -> Self {
        Self {
            input,
            certainty: certainty(input),
            score: score(input),
            uncertainty: uncertainty(input),
            escort: escort(input),
            entropy: neutrosophic_entropy(input),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_invariants_hold_by_construction() {
        let x = NeutrosophicTriplet::new(0.7, 0.2, 0.1).unwrap();
        let r = MeasureReport::evaluate(x);
        assert_eq!(r.uncertainty, 1.0 - r.certainty);
        assert!((r.escort.mu + r.escort.nu - 1.0).abs() < 1e-15);
        assert_eq!(r.entropy.normalized, r.entropy.nats / std::f64::consts::LN_2);
    }
}
