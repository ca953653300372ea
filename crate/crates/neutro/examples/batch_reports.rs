//! Batch evaluation through MeasureReport, the aggregate the CLI emits.
//!
//! ```bash
//! cargo run -p neutro --example batch_reports
//! ```

use neutro::{MeasureReport, NeutrosophicTriplet};

fn main() {
    // Think of these as rows of a sensor log: evidence for, indeterminacy,
    // evidence against.
    let batch = [
        (0.92, 0.05, 0.03),
        (0.50, 0.50, 0.50),
        (0.70, 0.20, 0.10),
        (0.10, 0.10, 0.85),
        (0.60, 0.00, 0.60),
        (0.20, 0.90, 0.25),
    ];

    println!(
        "{:<22} {:>7} {:>9} {:>12} {:>10}",
        "input", "score", "certainty", "uncertainty", "entropy"
    );
    for (mu, omega, nu) in batch {
        let x = match NeutrosophicTriplet::new(mu, omega, nu) {
            Ok(x) => x,
            Err(e) => {
                eprintln!("skipping row: {e}");
                continue;
            }
        };
        let report = MeasureReport::evaluate(x);
        println!(
            "{:<22} {:>7.3} {:>9.4} {:>12.4} {:>10.6}",
            x.to_string(),
            report.score,
            report.certainty,
            report.uncertainty,
            report.entropy.normalized,
        );
    }

    // Ranking a batch by score gives a defensible decision order; entropy
    // flags the rows whose evidence is too balanced to trust.
    let mut ranked: Vec<_> = batch
        .iter()
        .filter_map(|&(mu, omega, nu)| NeutrosophicTriplet::new(mu, omega, nu).ok())
        .map(MeasureReport::evaluate)
        .collect();
    ranked.sort_by(|a, b| b.score.total_cmp(&a.score));
    println!("\nranked by score:");
    for (rank, report) in ranked.iter().enumerate() {
        println!(
            "  {}. {} (score {:.3}, entropy {:.3})",
            rank + 1,
            report.input,
            report.score,
            report.entropy.normalized
        );
    }
}
