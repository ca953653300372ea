//! The three scalar features of a single triplet.
//!
//! ```bash
//! cargo run -p neutro --example certainty_score_uncertainty
//! ```

use neutro::{certainty, distance, score, uncertainty, NeutrosophicTriplet};

fn t(mu: f64, omega: f64, nu: f64) -> NeutrosophicTriplet {
    NeutrosophicTriplet::new(mu, omega, nu).unwrap()
}

fn main() {
    // The score ranks values from full falsity (-1) to full truth (+1);
    // the certainty is its magnitude, the uncertainty the complement.
    println!("{:>18} | {:>9} {:>7} {:>11}", "(mu, omega, nu)", "certainty", "score", "uncertainty");
    for x in [
        t(1.0, 0.0, 0.0),
        t(1.0, 1.0, 0.0),
        t(0.7, 0.2, 0.1),
        t(0.5, 0.5, 0.5),
        t(0.1, 0.2, 0.7),
        t(0.0, 1.0, 1.0),
        t(0.0, 0.0, 1.0),
    ] {
        println!(
            "{:>18} | {:>9.4} {:>7.3} {:>11.4}",
            x.to_string(),
            certainty(x),
            score(x),
            uncertainty(x),
        );
    }

    // Certainty is literally the dissimilarity between a value and its
    // complement.
    let x = t(0.7, 0.2, 0.1);
    println!(
        "\ncertainty{} = {} = D(x, complement) = {}",
        x,
        certainty(x),
        distance(x, x.complement()),
    );

    // The corner ordering: indeterminacy and contradiction both pull the
    // score towards 0.
    println!("\nscore ordering across the cube corners:");
    println!(
        "  r(1,0,0)={} > r(1,1,0)={} > r(1,1,1)={} = r(1,0,1)={} = r(0,1,0)={} = r(0,0,0)={} > r(0,1,1)={} > r(0,0,1)={}",
        score(t(1.0, 0.0, 0.0)),
        score(t(1.0, 1.0, 0.0)),
        score(t(1.0, 1.0, 1.0)),
        score(t(1.0, 0.0, 1.0)),
        score(t(0.0, 1.0, 0.0)),
        score(t(0.0, 0.0, 0.0)),
        score(t(0.0, 1.0, 1.0)),
        score(t(0.0, 0.0, 1.0)),
    );
}
