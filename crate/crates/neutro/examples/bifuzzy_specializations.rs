//! Bifuzzy, intuitionistic and paraconsistent pairs: the omega = 0
//! specialisations of every measure.
//!
//! ```bash
//! cargo run -p neutro --example bifuzzy_specializations
//! ```

use neutro::{
    neutrosophic_entropy, pair_distance, pair_entropy, pair_measure, score, BifuzzyPair, Measure,
    PairComparison, PairKind,
};

fn main() {
    // A pair declares which sign condition on mu + nu - 1 it satisfies;
    // construction validates it.
    let intuitionistic = BifuzzyPair::new(0.6, 0.2, PairKind::Intuitionistic).unwrap();
    let paraconsistent = BifuzzyPair::new(0.9, 0.4, PairKind::Paraconsistent).unwrap();
    let unconstrained = BifuzzyPair::new(0.5, 0.5, PairKind::Bifuzzy).unwrap();
    let mismatch = BifuzzyPair::new(0.9, 0.4, PairKind::Intuitionistic).unwrap_err();
    println!("kind checking: {mismatch}\n");

    println!(
        "{:>28} | {:>9} {:>7} {:>11} {:>16}",
        "pair", "certainty", "score", "uncertainty", "escort"
    );
    for pair in [intuitionistic, paraconsistent, unconstrained] {
        let escort = neutro::pair_escort(pair);
        println!(
            "{:>28} | {:>9.4} {:>7.4} {:>11.4} ({:>6.4}, {:>6.4})",
            pair.to_string(),
            pair_measure(pair, Measure::Certainty),
            pair_measure(pair, Measure::Score),
            pair_measure(pair, Measure::Uncertainty),
            escort.mu,
            escort.nu,
        );
    }

    // The specialised formulas are simplifications, not new definitions:
    // each equals the general measure of the pair embedded at omega = 0.
    println!("\nspecialised vs general at omega = 0:");
    for pair in [intuitionistic, paraconsistent] {
        let embedded = pair.to_triplet();
        println!(
            "  {:>28}  score {} = {}   entropy {:.12} = {:.12}",
            pair.to_string(),
            pair_measure(pair, Measure::Score),
            score(embedded),
            pair_entropy(pair).normalized,
            neutrosophic_entropy(embedded).normalized,
        );
    }

    // Distances between pairs of the same kind use the kind's denominator.
    let a = BifuzzyPair::new(1.0, 0.0, PairKind::Intuitionistic).unwrap();
    let b = BifuzzyPair::new(0.0, 1.0, PairKind::Intuitionistic).unwrap();
    println!(
        "\nintuitionistic distance({a}, {b}) = {}",
        pair_distance(a, b, PairComparison::Distance).unwrap()
    );
    let kinds_differ = pair_distance(a, unconstrained, PairComparison::Distance).unwrap_err();
    println!("mixed kinds are rejected: {kinds_differ}");
}
