//! The two coordinate systems of a neutrosophic value.
//!
//! ```bash
//! cargo run -p neutro --example coordinate_spaces
//! ```

use neutro::NeutrosophicTriplet;

fn main() {
    // A triplet assigns independent degrees of truth, indeterminacy and
    // falsity; the components do not need to sum to 1.
    let samples = [
        NeutrosophicTriplet::new(0.7, 0.2, 0.1).unwrap(),
        NeutrosophicTriplet::new(1.0, 0.0, 1.0).unwrap(), // over-defined (contradictory)
        NeutrosophicTriplet::new(0.0, 0.0, 0.0).unwrap(), // under-defined (incomplete)
        NeutrosophicTriplet::new(0.5, 0.9, 0.5).unwrap(),
    ];

    println!("{:>18} | {:>6} {:>6} {:>6} {:>6} | identity", "(mu, omega, nu)", "tau", "delta", "pi", "kappa");
    for x in samples {
        let s = x.to_secondary();
        // mu + nu + pi - kappa = 1 ties the two views together
        let identity = x.mu() + x.nu() + s.pi() - s.kappa();
        println!(
            "{:>18} | {:>6.2} {:>6.2} {:>6.2} {:>6.2} | {identity:.12}",
            x.to_string(),
            s.tau(),
            s.delta(),
            s.pi(),
            s.kappa(),
        );
    }

    // The secondary view round-trips.
    let x = NeutrosophicTriplet::new(0.7, 0.2, 0.1).unwrap();
    let s = x.to_secondary();
    let back = NeutrosophicTriplet::from_secondary(s.tau(), s.delta(), s.omega()).unwrap();
    println!("\nround trip: {x} -> {s} -> {back}");

    // The complement swaps truth and falsity and flips the net truth.
    let c = x.complement();
    println!(
        "complement: {x} -> {c} (tau {} -> {})",
        s.tau(),
        c.to_secondary().tau()
    );

    // Validation is strict: nothing outside the unit cube gets in.
    let rejected = NeutrosophicTriplet::new(1.2, 0.0, 0.0).unwrap_err();
    println!("rejected:   {rejected}");
}
