//! Run the verification suite programmatically and summarise the reports.
//!
//! ```bash
//! cargo run -p neutro --example property_suite
//! ```

use neutro::verify::{run_property_suite, GridSpec, SuiteConfig};

fn main() {
    let grid = GridSpec::new(0.1, true, true).expect("0.1 divides the unit interval");
    let config = SuiteConfig::new(grid);
    let reports = run_property_suite(&config);

    println!(
        "{:>42} | {:>9} {:>7} {:>9} {:>11}",
        "check", "cases", "failed", "max viol", "verdict"
    );
    for report in &reports {
        let verdict = match (report.mandatory, report.passed) {
            (_, true) => "pass",
            (false, false) => "reported",
            (true, false) => "FAIL",
        };
        println!(
            "{:>42} | {:>9} {:>7} {:>9.2e} {:>11}",
            report.name, report.cases_run, report.cases_failed, report.max_violation, verdict
        );
    }

    // The informational triangle probe is expected to find counterexamples:
    // the dissimilarity is not a metric.
    let probe = reports
        .iter()
        .find(|r| r.name == "triangle_inequality_probe")
        .expect("the probe always runs");
    if let Some(first) = probe.failures.first() {
        println!(
            "\nsample triangle counterexample through {:?}: D(a,c) = {:.4} > {:.4} + {:.4}",
            first.points[1], first.observed[0], first.observed[1], first.observed[2]
        );
    }

    let mandatory_green = reports.iter().all(|r| !r.mandatory || r.passed);
    println!(
        "\nmandatory checks: {}",
        if mandatory_green { "all passing" } else { "FAILURES PRESENT" }
    );
}
