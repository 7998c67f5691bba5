//! The closed-form catenoid family on the hyperboloid: free-boundary
//! location by the tangent-line criterion, curvature extraction, and the
//! pinching profile along the meridian.
//!
//! ```bash
//! cargo run --release --example minkowski_catenoid
//! ```

use gapcert::catenoid::{geometry, Catenoid, CatenoidModel};
use gapcert::numerics::NumericsConfig;
use gapcert::pinch;

fn main() {
    let cfg = NumericsConfig::default();
    for a in [0.75, 1.0, 2.0] {
        let cat = Catenoid::new(CatenoidModel::Hyperbolic, a, &cfg).expect("family member");
        println!("a = {a}");
        println!("  meridian half-length s0 = {:.12}", cat.s0);
        println!("  ball radius R           = {:.12}", cat.radius);
        println!("  neck radius             = {:.12}", cat.neck_radius());

        let neck = cat
            .sample_geometry(0.0, 0.0, geometry::SURFACE_FD_STEP)
            .unwrap();
        println!(
            "  neck: k = ({:+.6}, {:+.6}), support = {:+.6}, Q = {:.12}",
            neck.kappa_meridian, neck.kappa_parallel, neck.support, neck.q
        );
        let boundary = cat
            .sample_geometry(cat.s0, 0.0, geometry::SURFACE_FD_STEP)
            .unwrap();
        println!(
            "  boundary: |<N, d_r>| = {:.3e}, Q = {:.3e}",
            boundary.unit_support().unwrap().abs(),
            boundary.q
        );

        let report = pinch::certify_catenoid(&cat, 101, 16).expect("certifiable");
        println!(
            "  certification: sup Q = {:.12}, monotone = {}, min Hessian eig = {:+.3e}\n",
            report.sup_q, report.monotone, report.min_hess_eig
        );
    }
}
