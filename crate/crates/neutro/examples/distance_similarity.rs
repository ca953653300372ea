//! Normalised dissimilarity and similarity between triplets.
//!
//! ```bash
//! cargo run -p neutro --example distance_similarity
//! ```

use neutro::{distance, l1_distance, similarity, NeutrosophicTriplet};

fn t(mu: f64, omega: f64, nu: f64) -> NeutrosophicTriplet {
    NeutrosophicTriplet::new(mu, omega, nu).unwrap()
}

fn main() {
    let pairs = [
        (t(1.0, 0.0, 0.0), t(0.0, 0.0, 1.0)), // full truth vs full falsity
        (t(1.0, 1.0, 0.0), t(0.0, 1.0, 1.0)), // the same under full indeterminacy
        (t(0.7, 0.2, 0.1), t(0.6, 0.3, 0.2)),
        (t(0.2, 0.7, 0.9), t(0.2, 0.7, 0.9)), // identical
        (t(1.0, 0.0, 1.0), t(0.0, 0.0, 0.0)), // contradiction vs incompleteness
    ];

    println!("{:>18} {:>18} | {:>5} {:>8} {:>10}", "p1", "p2", "L1", "distance", "similarity");
    for (a, b) in pairs {
        println!(
            "{:>18} {:>18} | {:>5.2} {:>8.4} {:>10.4}",
            a.to_string(),
            b.to_string(),
            l1_distance(a, b),
            distance(a, b),
            similarity(a, b),
        );
    }

    // D is a dissimilarity, not a metric: the triangle inequality can fail
    // because the normalisation depends on the pair.
    let (p1, p2, via) = (t(1.0, 0.0, 1.0), t(0.0, 0.0, 0.0), t(1.0, 0.0, 0.0));
    println!(
        "\ntriangle check: D(p1,p2) = {} but D(p1,via) + D(via,p2) = {}",
        distance(p1, p2),
        distance(p1, via) + distance(via, p2),
    );
}
