//! Two independent constructions of the same annulus: shooting the profile
//! equation in the Poincare ball versus the closed-form hyperboloid
//! parametrization. Matching the neck radii must match the free-boundary
//! ball radii.
//!
//! ```bash
//! cargo run --release --example cross_model_check
//! ```

use gapcert::catenoid::{free_boundary_s0, CatenoidModel};
use gapcert::numerics::NumericsConfig;
use gapcert::profile;

fn main() {
    let cfg = NumericsConfig::default();
    println!("  c        a(c)        R (shooting)      R (tangent line)  difference");
    for c in [0.3f64, 0.4, 0.5, 0.6, 0.7] {
        // Same neck circle: cosh(r0) = (1 + c^2)/(1 - c^2) on one side,
        // sqrt(a + 1/2) on the other.
        let neck_radius = ((1.0 + c) / (1.0 - c)).ln();
        let a = neck_radius.cosh().powi(2) - 0.5;
        let shot = profile::shoot(c, &cfg).expect("profile shoots");
        let (_, radius) =
            free_boundary_s0(CatenoidModel::Hyperbolic, a, &cfg).expect("tangent-line root");
        println!(
            "  {c:<8} {a:<11.6} {:<17.12} {:<17.12} {:.3e}",
            shot.radius,
            radius,
            (shot.radius - radius).abs()
        );
    }
}
