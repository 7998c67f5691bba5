//! End-to-end tests of the `gapcert` binary: exit codes, output schemas,
//! and byte-level determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

use gapcert::cli::output;

fn gapcert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gapcert"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn temp_path(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("gapcert-it-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir");
    dir.join(name)
}

#[test]
fn shoot_summary_fields_and_exit_zero() {
    let out = gapcert(&[
        "shoot",
        "--space",
        "hyperbolic",
        "--c",
        "0.5",
        "--samples",
        "32",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    for key in ["c", "t_max", "R", "max_minimality_residual"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn usage_errors_exit_two() {
    // c out of range.
    let out = gapcert(&["shoot", "--space", "hyperbolic", "--c", "1.5"]);
    assert_eq!(out.status.code(), Some(2));
    // Euclidean shooting is not a thing.
    let out = gapcert(&["shoot", "--space", "euclidean", "--c", "0.5"]);
    assert_eq!(out.status.code(), Some(2));
    // Unknown flag.
    let out = gapcert(&["shoot", "--space", "hyperbolic", "--c", "0.5", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
    // Zero steps.
    let out = gapcert(&[
        "family",
        "--space",
        "hyperbolic",
        "--c-min",
        "0.2",
        "--c-max",
        "0.8",
        "--steps",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn numerical_failures_exit_three() {
    // Radius far below the attainable range of the scan.
    let out = gapcert(&[
        "solve",
        "--space",
        "hyperbolic",
        "--radius",
        "1e-6",
        "--samples",
        "16",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_profile_and_radius_round_trip() {
    let out = gapcert(&[
        "verify",
        "--space",
        "hyperbolic",
        "--c",
        "0.5",
        "--samples",
        "128",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {:?}", out.stderr);
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert!((report["sup_q"].as_f64().unwrap() - 2.0).abs() < 1e-8);
    assert_eq!(report["monotone"].as_bool(), Some(true));
    for key in [
        "sup_q",
        "argmax_t",
        "boundary_q",
        "monotone",
        "min_hess_eig",
        "max_mean_curv_residual",
        "max_boundary_support_residual",
    ] {
        assert!(report.get(key).is_some(), "missing report field {key}");
    }

    let out = gapcert(&[
        "verify",
        "--space",
        "hyperbolic",
        "--radius",
        "2.0",
        "--samples",
        "64",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_spherical_and_euclidean() {
    let out = gapcert(&[
        "verify",
        "--space",
        "spherical",
        "--a",
        "-0.25",
        "--samples",
        "64",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {:?}", out.stderr);
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert!(report["sup_q"].as_f64().unwrap() <= 2.0 + 1e-8);

    let out = gapcert(&["verify", "--space", "euclidean", "--samples", "64"]);
    assert_eq!(out.status.code(), Some(0));

    // Spherical needs --a; Euclidean takes no parameter.
    let out = gapcert(&["verify", "--space", "spherical", "--c", "0.5"]);
    assert_eq!(out.status.code(), Some(2));
    let out = gapcert(&["verify", "--space", "euclidean", "--c", "0.5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn family_rows_ordered_and_passing() {
    let out = gapcert(&[
        "family",
        "--space",
        "hyperbolic",
        "--c-min",
        "0.1",
        "--c-max",
        "0.9",
        "--steps",
        "9",
        "--samples",
        "64",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {:?}", out.stderr);
    let rows = output::parse_family_csv(&stdout_of(&out)).unwrap();
    assert_eq!(rows.len(), 9);
    assert!(rows.iter().all(|r| r.pass), "all members certify");
    assert!(rows.windows(2).all(|w| w[0].param < w[1].param));
}

#[test]
fn byte_identical_reruns() {
    let args = [
        "family",
        "--space",
        "spherical",
        "--a-min",
        "-0.3",
        "--a-max",
        "-0.2",
        "--steps",
        "2",
        "--samples",
        "32",
    ];
    let first = gapcert(&args);
    let second = gapcert(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);

    let args = ["verify", "--space", "euclidean", "--samples", "48"];
    let first = gapcert(&args);
    let second = gapcert(&args);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn config_file_applies_and_flags_override() {
    let conf = temp_path("tolerances.conf");
    std::fs::write(&conf, "samples = 24\n# comment line\nformat = json\n").unwrap();
    let conf_str = conf.to_str().unwrap();
    let grid = temp_path("prof.json");
    let grid_str = grid.to_str().unwrap();
    let out = gapcert(&[
        "export",
        "--space",
        "hyperbolic",
        "--c",
        "0.5",
        "--grid",
        "profile",
        "--config",
        conf_str,
        "--out",
        grid_str,
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {:?}", out.stderr);
    let rows: Vec<serde_json::Value> =
        serde_json::from_str(&std::fs::read_to_string(&grid).unwrap()).unwrap();
    assert_eq!(rows.len(), 24);

    // Flag overrides the file's sample count.
    let out = gapcert(&[
        "export",
        "--space",
        "hyperbolic",
        "--c",
        "0.5",
        "--grid",
        "profile",
        "--config",
        conf_str,
        "--samples",
        "16",
        "--out",
        grid_str,
    ]);
    assert_eq!(out.status.code(), Some(0));
    let rows: Vec<serde_json::Value> =
        serde_json::from_str(&std::fs::read_to_string(&grid).unwrap()).unwrap();
    assert_eq!(rows.len(), 16);

    // Unknown config key is a usage error.
    std::fs::write(&conf, "wibble = 3\n").unwrap();
    let out = gapcert(&[
        "export",
        "--space",
        "hyperbolic",
        "--c",
        "0.5",
        "--config",
        conf_str,
        "--out",
        grid_str,
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn surface_export_reloads_bit_identically() {
    let path = temp_path("surface.csv");
    let path_str = path.to_str().unwrap();
    let out = gapcert(&[
        "export",
        "--space",
        "spherical",
        "--a",
        "-0.25",
        "--grid",
        "surface",
        "--samples",
        "17",
        "--out",
        path_str,
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {:?}", out.stderr);
    let text = std::fs::read_to_string(&path).unwrap();
    let rows = output::parse_surface_csv(&text).unwrap();
    assert_eq!(rows.len(), 17 * 32);
    // Re-render from the parsed rows: must reproduce the file byte for byte.
    let rewritten = output::surface_csv(&rows);
    assert_eq!(text, rewritten);
    // Column sanity: the quadric constraint holds row-wise.
    for r in rows.iter().take(40) {
        let norm2 = r.y1 * r.y1 + r.y2 * r.y2 + r.y3 * r.y3 + r.y4 * r.y4;
        assert!((norm2 - 1.0).abs() < 1e-9);
        assert!(r.k1 >= r.k2);
        assert!(r.q <= 2.0 + 1e-8);
    }
}

#[test]
fn export_requires_model_parameter() {
    let path = temp_path("surf2.csv");
    let path_str = path.to_str().unwrap();
    // Hyperbolic surface grids need --a (quadric model).
    let out = gapcert(&[
        "export",
        "--space",
        "hyperbolic",
        "--c",
        "0.5",
        "--grid",
        "surface",
        "--out",
        path_str,
    ]);
    assert_eq!(out.status.code(), Some(2));
    // Profile grids are hyperbolic-only.
    let out = gapcert(&[
        "export",
        "--space",
        "spherical",
        "--a",
        "-0.25",
        "--grid",
        "profile",
        "--out",
        path_str,
    ]);
    assert_eq!(out.status.code(), Some(2));
}
