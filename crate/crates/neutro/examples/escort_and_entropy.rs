//! The escort fuzzy pair and the Shannon entropy built on it.
//!
//! ```bash
//! cargo run -p neutro --example escort_and_entropy
//! ```

use neutro::{escort, neutrosophic_entropy, score, shannon_fuzzy_entropy, NeutrosophicTriplet};

fn t(mu: f64, omega: f64, nu: f64) -> NeutrosophicTriplet {
    NeutrosophicTriplet::new(mu, omega, nu).unwrap()
}

fn main() {
    // Every triplet has a unique complementary fuzzy pair preserving its
    // score; the entropy of the triplet is the fuzzy entropy of that pair.
    println!(
        "{:>18} | {:>7} {:>16} {:>9} {:>11}",
        "(mu, omega, nu)", "score", "escort", "nats", "normalised"
    );
    for x in [
        t(1.0, 0.0, 0.0),
        t(0.9, 0.0, 0.05),
        t(0.7, 0.2, 0.1),
        t(0.5, 0.5, 0.5),
        t(0.4, 0.8, 0.4),
        t(0.0, 0.0, 1.0),
    ] {
        let e = escort(x);
        let entropy = neutrosophic_entropy(x);
        println!(
            "{:>18} | {:>7.3} ({:>6.4}, {:>6.4}) {:>9.6} {:>11.6}",
            x.to_string(),
            score(x),
            e.mu,
            e.nu,
            entropy.nats,
            entropy.normalized,
        );
    }

    // The underlying fuzzy entropy peaks at the balanced membership.
    println!("\nDe Luca-Termini fuzzy entropy along the membership axis:");
    for i in 0..=10 {
        let m = f64::from(i) / 10.0;
        let nats = shannon_fuzzy_entropy(m).unwrap();
        let bar = "#".repeat((nats / std::f64::consts::LN_2 * 40.0).round() as usize);
        println!("  m = {m:.1}  {nats:.4} nats  {bar}");
    }

    // More indeterminacy means more entropy; more net truth means less.
    println!("\nentropy responds to the secondary coordinates:");
    for (label, x, y) in [
        ("omega up   ", t(0.7, 0.1, 0.1), t(0.7, 0.6, 0.1)),
        ("|tau| up   ", t(0.6, 0.2, 0.4), t(0.9, 0.2, 0.1)),
        ("|delta| up ", t(0.55, 0.2, 0.35), t(0.8, 0.2, 0.6)),
    ] {
        println!(
            "  {label} E_N{} = {:.6} -> E_N{} = {:.6}",
            x,
            neutrosophic_entropy(x).normalized,
            y,
            neutrosophic_entropy(y).normalized,
        );
    }
}
