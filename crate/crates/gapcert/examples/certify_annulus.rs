//! Full certification of a profile annulus: the pinching value tops out at
//! exactly 2 on the neck circle, decays strictly along the meridian, and
//! vanishes on the free boundary.
//!
//! ```bash
//! cargo run --release --example certify_annulus
//! ```

use gapcert::numerics::NumericsConfig;
use gapcert::pinch::{self, Gates};
use gapcert::profile;

fn main() {
    let cfg = NumericsConfig::default();
    let solution = profile::solve_profile(0.5, 400, &cfg).expect("profile solves");
    let report = pinch::certify_profile(&solution).expect("certifiable");

    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    println!();
    println!("gates pass: {}", report.passes(&Gates::profile()));

    // A few meridian stations of the decay profile.
    println!("\n  t        eq1 factor      Q");
    for i in [0, 100, 200, 300, 399] {
        let p = &solution.samples[i];
        let eq1 = pinch::eq1_value(p.t, p.f, p.fp).unwrap();
        let sample = pinch::profile_surface_sample(p.t, p.f, p.fp, p.fpp).unwrap();
        println!("  {:<8.5} {:<15.12} {:.12}", p.t, eq1, sample.q);
    }
}
