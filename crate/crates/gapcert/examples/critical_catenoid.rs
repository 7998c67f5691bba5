//! Euclidean regression anchor: the critical catenoid of the unit ball and
//! the classical bound `|A|^2 <x, N>^2 <= 2` through the same pipeline
//! (`lambda = r`, `lambda' = 1`).
//!
//! ```bash
//! cargo run --release --example critical_catenoid
//! ```

use gapcert::catenoid::{geometry, CriticalCatenoid};
use gapcert::numerics::NumericsConfig;
use gapcert::pinch;

fn main() {
    let cfg = NumericsConfig::default();
    let cat = CriticalCatenoid::new(&cfg).expect("critical catenoid");
    println!("meridian half-length s0 = {:.15}  (s0 tanh s0 = 1)", cat.s0);
    println!("neck radius (scale)     = {:.15}", cat.scale);

    let neck = cat
        .sample_geometry(0.0, 0.0, geometry::SURFACE_FD_STEP)
        .unwrap();
    println!(
        "neck: |A|^2 = {:.12}, <x, N> = {:+.12}, Q = {:.12}",
        neck.second_form_norm2(),
        neck.support,
        neck.q
    );

    let report = pinch::certify_critical_catenoid(&cat, 201, 16).expect("certifiable");
    println!(
        "sup |A|^2 <x, N>^2 = {:.12} (classical equality case: 2)",
        report.sup_q
    );
    println!(
        "monotone decay = {}, boundary Q = {:.3e}, boundary support = {:.3e}",
        report.monotone, report.boundary_q, report.max_boundary_support_residual
    );
}
