//! Invert the shooting map: given a geodesic ball radius, recover the neck
//! value whose annulus meets that ball orthogonally.
//!
//! ```bash
//! cargo run --release --example radius_inversion
//! ```

use gapcert::numerics::NumericsConfig;
use gapcert::profile;

fn main() {
    let cfg = NumericsConfig::default();

    for target in [1.0, 2.0, 4.0] {
        let solution = profile::solve_for_radius(target, 64, &cfg).expect("attainable radius");
        println!(
            "R = {target}: c(R) = {:.12}, achieved radius = {:.12}",
            solution.c, solution.radius
        );
    }

    // Round trip: c -> R(c) -> c.
    for c in [0.2, 0.5, 0.8] {
        let forward = profile::shoot(c, &cfg).unwrap();
        let back = profile::solve_for_radius(forward.radius, 16, &cfg).unwrap();
        println!(
            "c = {c}: R(c) = {:.12}, c(R(c)) = {:.12}, drift = {:.3e}",
            forward.radius,
            back.c,
            (back.c - c).abs()
        );
    }

    // Requests outside the attainable range report the scanned window.
    match profile::solve_for_radius(1e-6, 16, &cfg) {
        Err(e) => println!("R = 1e-6 -> {e}"),
        Ok(_) => unreachable!("degenerate radius should be rejected"),
    }
}
