//! Deterministic table formats.
//!
//! CSV uses `.` decimals, no separators, and 17 significant digits so every
//! double round-trips bit-exactly; JSON mirrors the same rows through
//! shortest-round-trip float printing. Parsers for the documented schemas
//! feed the round-trip tests and any downstream reloading.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pinch::{Position, SurfaceSample};
use crate::profile::{ProfileSample, ProfileSolution};

/// Render a double with 17 significant digits (round-trip exact).
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

/// Output format of tables and grids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Format, String> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format '{other}' (expected csv or json)")),
        }
    }
}

pub const PROFILE_HEADER: &str = "t,f,fp,fpp";
pub const SURFACE_HEADER: &str = "s,theta,y1,y2,y3,y4,k1,k2,r,support,Q";
pub const FAMILY_HEADER: &str = "param,t_max_or_s0,R,neck_r,sup_Q,pass";

/// One exported surface-grid row.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct SurfaceRow {
    pub s: f64,
    pub theta: f64,
    pub y1: f64,
    pub y2: f64,
    pub y3: f64,
    pub y4: f64,
    pub k1: f64,
    pub k2: f64,
    pub r: f64,
    pub support: f64,
    #[serde(rename = "Q")]
    pub q: f64,
}

impl SurfaceRow {
    pub fn new(s: f64, theta: f64, sample: &SurfaceSample) -> SurfaceRow {
        let [y1, y2, y3, y4] = match sample.position {
            Position::Quadric(p) => p,
            Position::Ball([x, y, z]) => [x, y, z, 0.0],
        };
        SurfaceRow {
            s,
            theta,
            y1,
            y2,
            y3,
            y4,
            k1: sample.kappa1(),
            k2: sample.kappa2(),
            r: sample.radius,
            support: sample.support,
            q: sample.q,
        }
    }
}

/// One family-sweep row.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilyRow {
    pub param: f64,
    pub t_max_or_s0: f64,
    #[serde(rename = "R")]
    pub radius: f64,
    pub neck_r: f64,
    #[serde(rename = "sup_Q")]
    pub sup_q: f64,
    pub pass: bool,
}

pub fn profile_csv(solution: &ProfileSolution) -> String {
    let mut out = String::from(PROFILE_HEADER);
    out.push('\n');
    for s in &solution.samples {
        out.push_str(&format!(
            "{},{},{},{}\n",
            fmt_f64(s.t),
            fmt_f64(s.f),
            fmt_f64(s.fp),
            fmt_f64(s.fpp)
        ));
    }
    out
}

pub fn parse_profile_csv(text: &str) -> Result<Vec<ProfileSample>> {
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h == PROFILE_HEADER => {}
        other => {
            return Err(Error::Parse(format!(
                "expected profile header '{PROFILE_HEADER}', got {other:?}"
            )))
        }
    }
    lines
        .filter(|l| !l.is_empty())
        .map(|line| {
            let fields = parse_floats(line, 4)?;
            Ok(ProfileSample {
                t: fields[0],
                f: fields[1],
                fp: fields[2],
                fpp: fields[3],
            })
        })
        .collect()
}

pub fn surface_csv(rows: &[SurfaceRow]) -> String {
    let mut out = String::from(SURFACE_HEADER);
    out.push('\n');
    for r in rows {
        let fields = [
            r.s, r.theta, r.y1, r.y2, r.y3, r.y4, r.k1, r.k2, r.r, r.support, r.q,
        ];
        let line: Vec<String> = fields.iter().map(|v| fmt_f64(*v)).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

pub fn parse_surface_csv(text: &str) -> Result<Vec<SurfaceRow>> {
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h == SURFACE_HEADER => {}
        other => {
            return Err(Error::Parse(format!(
                "expected surface header '{SURFACE_HEADER}', got {other:?}"
            )))
        }
    }
    lines
        .filter(|l| !l.is_empty())
        .map(|line| {
            let f = parse_floats(line, 11)?;
            Ok(SurfaceRow {
                s: f[0],
                theta: f[1],
                y1: f[2],
                y2: f[3],
                y3: f[4],
                y4: f[5],
                k1: f[6],
                k2: f[7],
                r: f[8],
                support: f[9],
                q: f[10],
            })
        })
        .collect()
}

pub fn family_csv(rows: &[FamilyRow]) -> String {
    let mut out = String::from(FAMILY_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            fmt_f64(r.param),
            fmt_f64(r.t_max_or_s0),
            fmt_f64(r.radius),
            fmt_f64(r.neck_r),
            fmt_f64(r.sup_q),
            r.pass
        ));
    }
    out
}

pub fn parse_family_csv(text: &str) -> Result<Vec<FamilyRow>> {
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h == FAMILY_HEADER => {}
        other => {
            return Err(Error::Parse(format!(
                "expected family header '{FAMILY_HEADER}', got {other:?}"
            )))
        }
    }
    lines
        .filter(|l| !l.is_empty())
        .map(|line| {
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != 6 {
                return Err(Error::Parse(format!(
                    "expected 6 fields per family row, got {}",
                    fields.len()
                )));
            }
            let num = |s: &str| {
                s.parse::<f64>()
                    .map_err(|e| Error::Parse(format!("bad float '{s}': {e}")))
            };
            Ok(FamilyRow {
                param: num(fields[0])?,
                t_max_or_s0: num(fields[1])?,
                radius: num(fields[2])?,
                neck_r: num(fields[3])?,
                sup_q: num(fields[4])?,
                pass: fields[5]
                    .parse::<bool>()
                    .map_err(|e| Error::Parse(format!("bad bool '{}': {e}", fields[5])))?,
            })
        })
        .collect()
}

fn parse_floats(line: &str, n: usize) -> Result<Vec<f64>> {
    let fields: Vec<&str> = line.split(',').collect();
    if fields.len() != n {
        return Err(Error::Parse(format!(
            "expected {n} fields, got {} in '{line}'",
            fields.len()
        )));
    }
    fields
        .iter()
        .map(|s| {
            s.parse::<f64>()
                .map_err(|e| Error::Parse(format!("bad float '{s}': {e}")))
        })
        .collect()
}

pub fn to_json<T: Serialize>(rows: &T) -> Result<String> {
    serde_json::to_string_pretty(rows).map_err(|e| Error::Parse(e.to_string()))
}
