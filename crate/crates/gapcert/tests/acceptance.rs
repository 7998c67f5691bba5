//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! (visible with `cargo test --test acceptance -- --nocapture`).

use gapcert::catenoid::jacobi::{jacobi_residuals, RotationAxis};
use gapcert::catenoid::{
    geometry, lorentz_cross, Catenoid, CatenoidModel, CriticalCatenoid, LorentzVec4,
};
use gapcert::numerics::NumericsConfig;
use gapcert::pinch::{self, Gates};
use gapcert::profile;

fn cfg() -> NumericsConfig {
    NumericsConfig::default()
}

fn criterion(number: u32, name: &str, pass: bool, detail: String) {
    println!(
        "criterion {number:2} ({name}): {} [{detail}]",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {number} ({name}) failed: {detail}");
}

fn splitmix(state: &mut u64) -> f64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    (z ^ (z >> 31)) as f64 / u64::MAX as f64
}

const HYPERBOLIC_PARAMS: [f64; 3] = [0.75, 1.0, 2.0];
const SPHERICAL_PARAMS: [f64; 3] = [-0.4, -0.25, -0.1];
const NECK_VALUES: [f64; 3] = [0.2, 0.5, 0.8];

#[test]
fn criterion_01_neck_equality() {
    let mut worst = 0.0f64;
    for c in NECK_VALUES {
        let solution = profile::solve_profile(c, 64, &cfg()).unwrap();
        let neck = &solution.samples[0];
        let eq1 = pinch::eq1_value(neck.t, neck.f, neck.fp).unwrap();
        let sample = pinch::profile_surface_sample(neck.t, neck.f, neck.fp, neck.fpp).unwrap();
        worst = worst.max((eq1 - 1.0).abs()).max((sample.q - 2.0).abs());
    }
    criterion(
        1,
        "neck equality",
        worst <= 1e-10,
        format!("max deviation {worst:.3e} (tol 1e-10)"),
    );
}

#[test]
fn criterion_02_boundary_vanishing() {
    let mut worst_q = 0.0f64;
    let mut worst_support = 0.0f64;
    // Hyperbolic profile construction.
    let solution = profile::solve_profile(0.5, 400, &cfg()).unwrap();
    let b = solution.boundary();
    let sample = pinch::profile_surface_sample(b.t, b.f, b.fp, b.fpp).unwrap();
    worst_q = worst_q.max(sample.q);
    worst_support = worst_support.max(sample.unit_support().unwrap().abs());
    // Quadric-model families.
    for (model, a) in [
        (CatenoidModel::Hyperbolic, 1.0),
        (CatenoidModel::Spherical, -0.25),
    ] {
        let cat = Catenoid::new(model, a, &cfg()).unwrap();
        for s in [-cat.s0, cat.s0] {
            let sample = cat
                .sample_geometry(s, 0.7, geometry::SURFACE_FD_STEP)
                .unwrap();
            worst_q = worst_q.max(sample.q);
            worst_support = worst_support.max(sample.unit_support().unwrap().abs());
        }
    }
    // Euclidean critical catenoid.
    let crit = CriticalCatenoid::new(&cfg()).unwrap();
    for s in [-crit.s0, crit.s0] {
        let sample = crit
            .sample_geometry(s, 0.7, geometry::SURFACE_FD_STEP)
            .unwrap();
        worst_q = worst_q.max(sample.q);
        worst_support = worst_support.max(sample.unit_support().unwrap().abs());
    }
    criterion(
        2,
        "boundary vanishing",
        worst_q <= 1e-8 && worst_support <= 1e-8,
        format!("boundary Q <= {worst_q:.3e}, |<N, d_r>| <= {worst_support:.3e} (tol 1e-8)"),
    );
}

#[test]
fn criterion_03_monotone_decrease() {
    let gates = Gates::profile();
    let mut all_monotone = true;
    let mut checked = 0usize;
    for c in NECK_VALUES {
        let solution = profile::solve_profile(c, 400, &cfg()).unwrap();
        assert!(solution.samples.len() >= 400);
        let series: Vec<(f64, f64)> = solution
            .samples
            .iter()
            .map(|p| (p.t, pinch::eq1_value(p.t, p.f, p.fp).unwrap()))
            .collect();
        let end = series.last().unwrap().0;
        for w in series.windows(2) {
            let inside = w[0].0 >= gates.endpoint_band && w[1].0 <= end - gates.endpoint_band;
            if inside {
                checked += 1;
                if w[1].1 - w[0].1 >= -gates.monotone_margin {
                    all_monotone = false;
                }
            }
        }
        let report = pinch::certify_profile(&solution).unwrap();
        all_monotone &= report.monotone;
    }
    criterion(
        3,
        "monotone decrease",
        all_monotone && checked > 1000,
        format!("{checked} consecutive differences < -1e-10 outside 1e-6 bands"),
    );
}

#[test]
fn criterion_04_gap_hypothesis() {
    let mut sup_q = f64::NEG_INFINITY;
    let solution = profile::solve_profile(0.5, 400, &cfg()).unwrap();
    let report = pinch::certify_profile(&solution).unwrap();
    sup_q = sup_q.max(report.sup_q);
    for a in HYPERBOLIC_PARAMS {
        let cat = Catenoid::new(CatenoidModel::Hyperbolic, a, &cfg()).unwrap();
        let report = pinch::certify_catenoid(&cat, 101, 16).unwrap();
        sup_q = sup_q.max(report.sup_q);
    }
    for a in SPHERICAL_PARAMS {
        let cat = Catenoid::new(CatenoidModel::Spherical, a, &cfg()).unwrap();
        let report = pinch::certify_catenoid(&cat, 101, 16).unwrap();
        sup_q = sup_q.max(report.sup_q);
    }
    criterion(
        4,
        "gap hypothesis",
        sup_q <= 2.0 + 1e-8,
        format!("sup Q = {sup_q:.12} (bound 2 + 1e-8)"),
    );
}

#[test]
fn criterion_05_minimality_residuals() {
    let mut profile_residual = 0.0f64;
    for c in NECK_VALUES {
        let solution = profile::solve_profile(c, 400, &cfg()).unwrap();
        for p in &solution.samples {
            let (km, kp) = pinch::conformal_curvatures(p.t, p.f, p.fp, p.fpp).unwrap();
            profile_residual = profile_residual.max((km + kp).abs());
        }
    }
    let mut fd_residual = 0.0f64;
    let mut state = 2024u64;
    for a in HYPERBOLIC_PARAMS {
        let cat = Catenoid::new(CatenoidModel::Hyperbolic, a, &cfg()).unwrap();
        for _ in 0..67 {
            let s = (2.0 * splitmix(&mut state) - 1.0) * cat.s0;
            let theta = splitmix(&mut state) * std::f64::consts::TAU;
            let sample = cat
                .sample_geometry(s, theta, geometry::SURFACE_FD_STEP)
                .unwrap();
            fd_residual = fd_residual.max(sample.minimality_residual());
        }
    }
    for a in SPHERICAL_PARAMS {
        let cat = Catenoid::new(CatenoidModel::Spherical, a, &cfg()).unwrap();
        for _ in 0..30 {
            let s = (2.0 * splitmix(&mut state) - 1.0) * cat.s0;
            let theta = splitmix(&mut state) * std::f64::consts::TAU;
            let sample = cat
                .sample_geometry(s, theta, geometry::SURFACE_FD_STEP)
                .unwrap();
            fd_residual = fd_residual.max(sample.minimality_residual());
        }
    }
    criterion(
        5,
        "minimality residuals",
        profile_residual <= 1e-8 && fd_residual <= 1e-5,
        format!(
            "profile |k1 + k2| <= {profile_residual:.3e} (tol 1e-8), \
             parametric |H| <= {fd_residual:.3e} (tol 1e-5)"
        ),
    );
}

#[test]
fn criterion_06_quadric_residuals() {
    let mut quadric = 0.0f64;
    let mut speed = 0.0f64;
    for (model, a) in [
        (CatenoidModel::Hyperbolic, 0.75),
        (CatenoidModel::Hyperbolic, 2.0),
        (CatenoidModel::Spherical, -0.25),
    ] {
        let cat = Catenoid::new(model, a, &cfg()).unwrap();
        // 1000+ points: 64 meridian stations x 16 angles.
        for i in 0..64 {
            let s = cat.s0 * (2.0 * i as f64 / 63.0 - 1.0);
            for j in 0..16 {
                let theta = std::f64::consts::TAU * j as f64 / 16.0;
                let p = cat.eval(s, theta).unwrap();
                let res = match model {
                    CatenoidModel::Hyperbolic => (p.dot(p) + 1.0).abs(),
                    CatenoidModel::Spherical => (p.dot_euclidean(p) - 1.0).abs(),
                };
                quadric = quadric.max(res);
            }
            let speed_res =
                geometry::meridian_speed_residual(&cat, s, 0.9, geometry::SURFACE_FD_STEP).unwrap();
            speed = speed.max(speed_res);
        }
    }
    criterion(
        6,
        "quadric residuals",
        quadric <= 1e-10 && speed <= 1e-8,
        format!(
            "max quadric residual {quadric:.3e} (tol 1e-10), unit speed {speed:.3e} (tol 1e-8)"
        ),
    );
}

#[test]
fn criterion_07_hessian_psd() {
    let mut min_eig = f64::INFINITY;
    let solution = profile::solve_profile(0.5, 400, &cfg()).unwrap();
    min_eig = min_eig.min(pinch::certify_profile(&solution).unwrap().min_hess_eig);
    for a in HYPERBOLIC_PARAMS {
        let cat = Catenoid::new(CatenoidModel::Hyperbolic, a, &cfg()).unwrap();
        min_eig = min_eig.min(pinch::certify_catenoid(&cat, 101, 16).unwrap().min_hess_eig);
    }
    for a in SPHERICAL_PARAMS {
        let cat = Catenoid::new(CatenoidModel::Spherical, a, &cfg()).unwrap();
        min_eig = min_eig.min(pinch::certify_catenoid(&cat, 101, 16).unwrap().min_hess_eig);
    }
    let crit = CriticalCatenoid::new(&cfg()).unwrap();
    min_eig = min_eig.min(
        pinch::certify_critical_catenoid(&crit, 101, 16)
            .unwrap()
            .min_hess_eig,
    );
    let mut identity = 0.0f64;
    for i in 1..=100 {
        let r = std::f64::consts::FRAC_PI_2 * i as f64 / 101.0;
        identity = identity.max(pinch::spherical_identity_residual(r).unwrap().abs());
    }
    criterion(
        7,
        "hessian psd",
        min_eig >= -1e-9 && identity <= 1e-12,
        format!(
            "min eigenvalue {min_eig:.3e} (floor -1e-9), \
             spherical identity residual {identity:.3e} (tol 1e-12)"
        ),
    );
}

#[test]
fn criterion_08_jacobi_function() {
    let mut max_u = 0.0f64;
    for a in HYPERBOLIC_PARAMS {
        let cat = Catenoid::new(CatenoidModel::Hyperbolic, a, &cfg()).unwrap();
        let res = jacobi_residuals(&cat, 41, 12, RotationAxis::Axis34).unwrap();
        max_u = max_u.max(res.max_u);
    }
    // Defining identity of the Lorentz cross on random quadruples against a
    // Laplace-expansion determinant.
    let det3 = |m: [[f64; 3]; 3]| {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    };
    let det4 = |cols: [[f64; 4]; 4]| {
        let mut det = 0.0;
        for j in 0..4 {
            let rows: Vec<usize> = (0..4).filter(|&r| r != j).collect();
            let m = det3([
                [cols[0][rows[0]], cols[1][rows[0]], cols[2][rows[0]]],
                [cols[0][rows[1]], cols[1][rows[1]], cols[2][rows[1]]],
                [cols[0][rows[2]], cols[1][rows[2]], cols[2][rows[2]]],
            ]);
            let sign = if j % 2 == 0 { -1.0 } else { 1.0 };
            det += sign * cols[3][j] * m;
        }
        det
    };
    let mut state = 99u64;
    let mut cross_err = 0.0f64;
    for _ in 0..100 {
        let mut v = [[0.0f64; 4]; 4];
        for row in &mut v {
            for x in row.iter_mut() {
                *x = 4.0 * splitmix(&mut state) - 2.0;
            }
        }
        let cross = lorentz_cross(
            LorentzVec4::from_array(v[0]),
            LorentzVec4::from_array(v[1]),
            LorentzVec4::from_array(v[2]),
        );
        let lhs = cross.dot(LorentzVec4::from_array(v[3]));
        let rhs = det4(v);
        cross_err = cross_err.max((lhs - rhs).abs() / (1.0 + rhs.abs()));
    }
    criterion(
        8,
        "jacobi function",
        max_u <= 1e-8 && cross_err <= 1e-10,
        format!("max |u| = {max_u:.3e} (tol 1e-8), cross identity {cross_err:.3e} (tol 1e-10)"),
    );
}

#[test]
fn criterion_09_cross_model_consistency() {
    let mut worst = 0.0f64;
    for c in [0.4f64, 0.5, 0.6] {
        let neck_r = ((1.0 + c) / (1.0 - c)).ln();
        let a = neck_r.cosh().powi(2) - 0.5;
        let shot = profile::shoot(c, &cfg()).unwrap();
        let (_, radius) =
            gapcert::catenoid::free_boundary_s0(CatenoidModel::Hyperbolic, a, &cfg()).unwrap();
        worst = worst.max((shot.radius - radius).abs());
    }
    criterion(
        9,
        "cross-model consistency",
        worst <= 1e-6,
        format!("max |R_profile - R_quadric| = {worst:.3e} (tol 1e-6)"),
    );
}

#[test]
fn criterion_10_round_trips() {
    let mut worst_c = 0.0f64;
    for c in NECK_VALUES {
        let forward = profile::shoot(c, &cfg()).unwrap();
        let back = profile::solve_for_radius(forward.radius, 16, &cfg()).unwrap();
        worst_c = worst_c.max((back.c - c).abs());
    }
    // Bit-exact serialization round trips.
    let solution = profile::solve_profile(0.37, 64, &cfg()).unwrap();
    let csv = gapcert::cli::output::profile_csv(&solution);
    let parsed = gapcert::cli::output::parse_profile_csv(&csv).unwrap();
    let mut bit_exact = parsed.len() == solution.samples.len();
    for (a, b) in parsed.iter().zip(&solution.samples) {
        bit_exact &= a.t.to_bits() == b.t.to_bits()
            && a.f.to_bits() == b.f.to_bits()
            && a.fp.to_bits() == b.fp.to_bits()
            && a.fpp.to_bits() == b.fpp.to_bits();
    }
    let json_rows: Vec<serde_json::Value> = solution
        .samples
        .iter()
        .map(|s| serde_json::json!({"t": s.t, "f": s.f, "fp": s.fp, "fpp": s.fpp}))
        .collect();
    let json_text = serde_json::to_string(&json_rows).unwrap();
    let json_back: Vec<serde_json::Value> = serde_json::from_str(&json_text).unwrap();
    for (row, sample) in json_back.iter().zip(&solution.samples) {
        bit_exact &= row["f"].as_f64().unwrap().to_bits() == sample.f.to_bits()
            && row["fpp"].as_f64().unwrap().to_bits() == sample.fpp.to_bits();
    }
    criterion(
        10,
        "round trips",
        worst_c <= 1e-8 && bit_exact,
        format!(
            "max |c(R(c)) - c| = {worst_c:.3e} (tol 1e-8), serialization bit-exact: {bit_exact}"
        ),
    );
}

#[test]
fn criterion_11_euclidean_regression() {
    let crit = CriticalCatenoid::new(&cfg()).unwrap();
    let report = pinch::certify_critical_catenoid(&crit, 201, 16).unwrap();
    // lambda' = 1, so sup Q is exactly Theorem-style |A|^2 <x, N>^2.
    let deviation = (report.sup_q - 2.0).abs();
    criterion(
        11,
        "euclidean regression",
        deviation <= 1e-6 && report.monotone && report.boundary_q <= 1e-8,
        format!(
            "sup |A|^2 <x,N>^2 = {:.12} (target 2 +- 1e-6)",
            report.sup_q
        ),
    );
}
