//! Shoot the hyperbolic profile equation from a neck value and inspect the
//! free boundary it lands on.
//!
//! ```bash
//! cargo run --release --example profile_shooting
//! ```

use gapcert::numerics::NumericsConfig;
use gapcert::profile;

fn main() {
    let cfg = NumericsConfig::default();
    for c in [0.2, 0.5, 0.8] {
        let solution = profile::solve_profile(c, 400, &cfg).expect("profile solves");
        let boundary = solution.boundary();
        println!("neck value c = {c}");
        println!("  half-width t_max      = {:.12}", solution.t_max);
        println!("  ball radius R         = {:.12}", solution.radius);
        println!("  neck radius r0        = {:.12}", solution.neck_radius);
        println!(
            "  boundary residual     = {:.3e}  (f - t f' at t_max)",
            boundary.f - boundary.t * boundary.fp
        );
        // The free-boundary point lies strictly inside the unit ball.
        let norm = (boundary.t.powi(2) + boundary.f.powi(2)).sqrt();
        println!("  |z| at the boundary   = {norm:.12}\n");
    }

    // Degenerate requests are rejected, not clamped.
    let err = profile::solve_profile(1.5, 400, &cfg).unwrap_err();
    println!("c = 1.5 -> {err}");
}
