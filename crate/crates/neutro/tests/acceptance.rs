//! Acceptance suite: every release criterion, one test and one printed
//! pass/fail line each, at the pinned tolerances.
//!
//! Run with `cargo test -p neutro --test acceptance -- --nocapture` to see
//! the lines.

use std::process::Command;
use std::sync::OnceLock;

use neutro::verify::{run_property_suite, CheckReport, SuiteConfig};
use neutro::{certainty, neutrosophic_entropy, score, uncertainty, NeutrosophicTriplet};

fn suite() -> &'static [CheckReport] {
    static REPORTS: OnceLock<Vec<CheckReport>> = OnceLock::new();
    REPORTS.get_or_init(|| run_property_suite(&SuiteConfig::default()))
}

fn report(name: &str) -> Result<&'static CheckReport, String> {
    suite()
        .iter()
        .find(|r| r.name == name)
        .ok_or_else(|| format!("suite emitted no check named {name}"))
}

/// Asserts one suite check ran at the expected tolerance with zero failures.
fn passed_at(name: &str, tolerance: f64) -> Result<(), String> {
    let check = report(name)?;
    if check.tolerance != tolerance {
        return Err(format!(
            "{name} ran at tolerance {} instead of {tolerance}",
            check.tolerance
        ));
    }
    if check.cases_run == 0 {
        return Err(format!("{name} ran no cases"));
    }
    if !check.passed || check.cases_failed != 0 {
        return Err(format!(
            "{name} failed {} of {} cases, max violation {}",
            check.cases_failed, check.cases_run, check.max_violation
        ));
    }
    Ok(())
}

fn conclude(criterion: &str, outcome: Result<(), String>) {
    match &outcome {
        Ok(()) => println!("{criterion}: PASS"),
        Err(why) => println!("{criterion}: FAIL ({why})"),
    }
    if let Err(why) = outcome {
        panic!("{criterion}: {why}");
    }
}

fn t(mu: f64, omega: f64, nu: f64) -> NeutrosophicTriplet {
    NeutrosophicTriplet::new(mu, omega, nu).unwrap()
}

fn close(label: &str, observed: f64, expected: f64, tolerance: f64) -> Result<(), String> {
    if (observed - expected).abs() <= tolerance {
        Ok(())
    } else {
        Err(format!("{label}: observed {observed}, expected {expected}"))
    }
}

#[test]
fn criterion_01_boundary_values() {
    let run = || -> Result<(), String> {
        let truth = t(1.0, 0.0, 0.0);
        let falsity = t(0.0, 0.0, 1.0);
        close("certainty(1,0,0)", certainty(truth), 1.0, 1e-15)?;
        close("certainty(0,0,1)", certainty(falsity), 1.0, 1e-15)?;
        close("score(1,0,0)", score(truth), 1.0, 1e-15)?;
        close("score(0,0,1)", score(falsity), -1.0, 1e-15)?;
        close("uncertainty(1,0,0)", uncertainty(truth), 0.0, 1e-15)?;
        close("uncertainty(0,0,1)", uncertainty(falsity), 0.0, 1e-15)?;
        close("entropy(1,0,0)", neutrosophic_entropy(truth).normalized, 0.0, 1e-15)?;
        close("entropy(0,0,1)", neutrosophic_entropy(falsity).normalized, 0.0, 1e-15)?;
        for i in 0..=10u32 {
            for j in 0..=10u32 {
                let x = t(f64::from(i) / 10.0, f64::from(j) / 10.0, f64::from(i) / 10.0);
                close(&format!("uncertainty at mu=nu {x}"), uncertainty(x), 1.0, 1e-15)?;
                close(
                    &format!("entropy at mu=nu {x}"),
                    neutrosophic_entropy(x).normalized,
                    1.0,
                    1e-15,
                )?;
            }
        }
        Ok(())
    };
    conclude("criterion 01 boundary values", run());
}

#[test]
fn criterion_02_score_ordering_chain() {
    let run = || -> Result<(), String> {
        let chain = [
            (t(1.0, 0.0, 0.0), 1.0),
            (t(1.0, 1.0, 0.0), 0.5),
            (t(1.0, 1.0, 1.0), 0.0),
            (t(1.0, 0.0, 1.0), 0.0),
            (t(0.0, 1.0, 0.0), 0.0),
            (t(0.0, 0.0, 0.0), 0.0),
            (t(0.0, 1.0, 1.0), -0.5),
            (t(0.0, 0.0, 1.0), -1.0),
        ];
        for (x, expected) in &chain {
            close(&format!("score{x}"), score(*x), *expected, 1e-15)?;
        }
        for window in chain.windows(2) {
            let (a, ra) = window[0];
            let (b, rb) = window[1];
            let (observed_a, observed_b) = (score(a), score(b));
            if ra > rb && observed_a <= observed_b {
                return Err(format!("expected score{a} > score{b}"));
            }
            if ra == rb && observed_a != observed_b {
                return Err(format!("expected score{a} = score{b}"));
            }
        }
        passed_at("score_ordering_chain", 1e-15)
    };
    conclude("criterion 02 score ordering chain", run());
}

#[test]
fn criterion_03_distance_oracle_equivalence() {
    let run = || -> Result<(), String> {
        passed_at("distance_oracle_equivalence", 1e-12)?;
        let check = report("distance_oracle_equivalence")?;
        if check.cases_run != 100_000 {
            return Err(format!(
                "expected the deterministic 100k pair sample, ran {}",
                check.cases_run
            ));
        }
        // direct spot checks of the two routes
        for (a, b) in [
            (t(1.0, 0.0, 0.0), t(0.0, 0.0, 1.0)),
            (t(1.0, 1.0, 0.0), t(0.0, 1.0, 1.0)),
            (t(0.7, 0.2, 0.1), t(0.3, 0.9, 0.8)),
        ] {
            let produced = neutro::distance(a, b);
            let oracle = neutro::verify::distance_oracle(a, b);
            close(&format!("distance{a}{b}"), produced, oracle, 1e-12)?;
        }
        Ok(())
    };
    conclude("criterion 03 distance oracle equivalence (100k pairs)", run());
}

#[test]
fn criterion_04_escort_identities() {
    let run = || -> Result<(), String> {
        passed_at("escort_closed_form_agreement", 1e-12)?;
        passed_at("escort_score_preservation", 1e-15)?;
        let e = neutro::escort(t(0.7, 0.2, 0.1));
        close("escort_mu(0.7,0.2,0.1)", e.mu, 5.0 / 7.0, 1e-15)?;
        close("escort sum", e.mu + e.nu, 1.0, 1e-15)?;
        close("escort diff", e.mu - e.nu, score(t(0.7, 0.2, 0.1)), 1e-15)?;
        Ok(())
    };
    conclude("criterion 04 escort algebraic identities", run());
}

#[test]
fn criterion_05_entropy_four_form_agreement() {
    let run = || -> Result<(), String> {
        passed_at("entropy_four_form_agreement", 1e-12)?;
        let check = report("entropy_four_form_agreement")?;
        if check.cases_run != 1331 {
            return Err(format!("expected every lattice point, ran {}", check.cases_run));
        }
        Ok(())
    };
    conclude("criterion 05 four-form entropy agreement", run());
}

#[test]
fn criterion_06_derivative_signs() {
    let run = || -> Result<(), String> {
        let check = report("finite_difference_derivative_signs")?;
        if !check.passed {
            return Err(format!(
                "{} of {} derivative cases failed, max violation {}",
                check.cases_failed, check.cases_run, check.max_violation
            ));
        }
        // 576 lattice points admit central differences in all three
        // directions; each contributes three sign cases
        if check.cases_run < 1728 {
            return Err(format!("only {} derivative cases ran", check.cases_run));
        }
        passed_at("analytic_derivative_signs", 0.0)?;
        passed_at("analytic_derivative_chain_rule", 1e-12)?;
        let single = neutro::verify::finite_difference_signs(t(0.7, 0.2, 0.1), 1e-4)
            .map_err(|e| e.to_string())?;
        if !single.passed {
            return Err("signs fail at (0.7, 0.2, 0.1)".to_string());
        }
        Ok(())
    };
    conclude("criterion 06 derivative signs (finite differences)", run());
}

#[test]
fn criterion_07_monotonicity_grids() {
    let run = || -> Result<(), String> {
        passed_at("certainty_monotonicity", 0.0)?;
        passed_at("score_monotonicity_nonnegative_tau", 0.0)?;
        passed_at("score_monotonicity_nonpositive_tau", 0.0)?;
        passed_at("uncertainty_monotonicity", 0.0)?;
        // entropy comparisons pass through ln; the slack covers one ulp of
        // double rounding and nothing more
        passed_at("entropy_monotonicity", 1e-15)?;
        Ok(())
    };
    conclude("criterion 07 monotonicity grids (zero violations)", run());
}

#[test]
fn criterion_08_specialization_consistency() {
    let run = || -> Result<(), String> {
        passed_at("specialization_point_consistency", 1e-15)?;
        passed_at("specialization_distance_consistency", 1e-15)?;
        Ok(())
    };
    conclude("criterion 08 specialisation consistency at omega = 0", run());
}

#[test]
fn criterion_09_core_identities() {
    let run = || -> Result<(), String> {
        passed_at("secondary_mass_identity", 1e-12)?;
        passed_at("secondary_round_trip", 1e-12)?;
        passed_at("complement_involution", 1e-15)?;
        passed_at("complement_tau_antisymmetry", 1e-15)?;
        passed_at("incompleteness_contradiction_split", 0.0)?;
        Ok(())
    };
    conclude("criterion 09 core coordinate identities", run());
}

#[test]
fn criterion_10_cli_determinism() {
    let run = || -> Result<(), String> {
        let bin = env!("CARGO_BIN_EXE_neutro");
        let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
        let input = dir.path().join("input.csv");
        std::fs::write(&input, "mu,omega,nu\n1,0,0\n0.7,0.2,0.1\n0.5,0.5,0.5\n")
            .map_err(|e| e.to_string())?;

        let run_command = |args: &[&str]| -> Result<(Vec<u8>, Option<i32>), String> {
            let output = Command::new(bin)
                .args(args)
                .env_remove("NEUTRO_PRECISION")
                .output()
                .map_err(|e| e.to_string())?;
            Ok((output.stdout, output.status.code()))
        };

        let input_str = input.to_str().ok_or("temp path is not UTF-8")?;
        let (eval_a, code_a) = run_command(&["eval", "--input", input_str])?;
        let (eval_b, _) = run_command(&["eval", "--input", input_str])?;
        if code_a != Some(0) {
            return Err(format!("eval exited {code_a:?}"));
        }
        if eval_a != eval_b {
            return Err("eval output differs between runs".to_string());
        }

        let (sweep_a, _) = run_command(&["sweep", "--grid-step", "0.2"])?;
        let (sweep_b, _) = run_command(&["sweep", "--grid-step", "0.2"])?;
        if sweep_a.is_empty() || sweep_a != sweep_b {
            return Err("sweep output differs between runs".to_string());
        }

        let (verify_a, verify_code) = run_command(&["verify"])?;
        let (verify_b, _) = run_command(&["verify"])?;
        if verify_code != Some(0) {
            return Err(format!("verify exited {verify_code:?}, expected 0"));
        }
        if verify_a != verify_b {
            return Err("verify output differs between runs".to_string());
        }
        Ok(())
    };
    conclude("criterion 10 CLI determinism and verify exit status", run());
}
