//! Regime maps over a `(r, velocity)` grid, written as CSV plus a JSON sidecar
//! holding the characteristic curves.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;

use crate::backgrounds::DEFAULT_MARGIN;
use crate::casimir::{casimir_energy_density, Regime};
use crate::error::{Error, Result};
use crate::geometry::{BoundaryCondition, CavityConfig, Orientation};
use crate::regimes::{cylinder_critical_set, kerr_critical_set, CriticalSet, Observer};

pub const CSV_HEADER: [&str; 7] = [
    "r", "omega", "allowed", "eps_x", "eps_y", "regime_x", "regime_y",
];

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "background", rename_all = "lowercase")]
pub enum SweepBackground {
    Cylinder { k: f64 },
    Kerr { mass: f64, a: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub background: SweepBackground,
    pub r_range: (f64, f64),
    pub r_steps: usize,
    /// Fixed velocity range; `None` spans each radius's admissible band.
    pub velocity_range: Option<(f64, f64)>,
    pub velocity_steps: usize,
    pub bc: BoundaryCondition,
    pub field_mass: f64,
    pub plate_separation: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRow {
    pub r: f64,
    /// Cylinder velocity `v` or Kerr angular velocity `Ω`.
    pub omega: f64,
    pub allowed: bool,
    pub eps_x: Option<f64>,
    pub eps_y: Option<f64>,
    pub regime_x: Regime,
    pub regime_y: Regime,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurvePoint {
    pub r: f64,
    pub drag: f64,
    pub bound_minus: f64,
    pub bound_plus: f64,
    pub zero_minus: f64,
    pub zero_plus: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flip_minus: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flip_plus: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub geo_minus: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub geo_plus: Option<f64>,
}

impl CurvePoint {
    fn new(r: f64, c: &CriticalSet) -> Self {
        Self {
            r,
            drag: c.drag,
            bound_minus: c.bounds.0,
            bound_plus: c.bounds.1,
            zero_minus: c.zero_energy.0,
            zero_plus: c.zero_energy.1,
            flip_minus: c.sign_flip_unit.map(|p| p.0),
            flip_plus: c.sign_flip_unit.map(|p| p.1),
            geo_minus: c.geodesic.map(|p| p.0),
            geo_plus: c.geodesic.map(|p| p.1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Sweep {
    pub rows: Vec<SweepRow>,
    pub curves: Vec<CurvePoint>,
}

fn linspace(lo: f64, hi: f64, steps: usize) -> impl Iterator<Item = f64> {
    let h = (hi - lo) / (steps - 1) as f64;
    (0..steps).map(move |i| {
        if i == steps - 1 {
            hi
        } else {
            lo + h * i as f64
        }
    })
}

fn check_range(name: &str, range: (f64, f64), steps: usize) -> Result<()> {
    if steps < 2 {
        return Err(Error::Usage(format!(
            "{name} steps must be >= 2, got {steps}"
        )));
    }
    if !(range.0.is_finite() && range.1.is_finite() && range.0 < range.1) {
        return Err(Error::Usage(format!(
            "{name} range must satisfy min < max, got {range:?}"
        )));
    }
    Ok(())
}

impl SweepSpec {
    fn observer(&self, r: f64, w: f64) -> Observer {
        match self.background {
            SweepBackground::Cylinder { k } => Observer::Cylinder { k, r, v: w },
            SweepBackground::Kerr { mass, a } => Observer::Kerr {
                mass,
                a,
                r,
                omega: w,
            },
        }
    }

    fn critical_set(&self, r: f64) -> Result<CriticalSet> {
        match self.background {
            SweepBackground::Cylinder { k } => cylinder_critical_set(k, r),
            SweepBackground::Kerr { mass, a } => kerr_critical_set(mass, a, r),
        }
    }

    fn row(&self, r: f64, w: f64) -> SweepRow {
        let energies = self.observer(r, w).local_metric().and_then(|metric| {
            let eval = |o| {
                let c = CavityConfig::new(o, self.bc, self.field_mass, self.plate_separation)?;
                casimir_energy_density(&metric, &c)
            };
            Ok((eval(Orientation::X)?, eval(Orientation::Y)?))
        });
        match energies {
            Ok((x, y)) => SweepRow {
                r,
                omega: w,
                allowed: true,
                eps_x: Some(x.energy_density),
                eps_y: Some(y.energy_density),
                regime_x: x.regime,
                regime_y: y.regime,
            },
            Err(_) => SweepRow {
                r,
                omega: w,
                allowed: false,
                eps_x: None,
                eps_y: None,
                regime_x: Regime::Forbidden,
                regime_y: Regime::Forbidden,
            },
        }
    }
}

/// Evaluates the grid with `r` as the outer and velocity as the inner index.
///
/// Without a fixed velocity range each radius spans its own band, pulled in by
/// ten times the admissibility margin; radii where the band does not exist
/// (Kerr inside the horizon, cylinder outside its patch) are skipped.
pub fn sweep(spec: &SweepSpec) -> Result<Sweep> {
    check_range("r", spec.r_range, spec.r_steps)?;
    if let Some(range) = spec.velocity_range {
        check_range("velocity", range, spec.velocity_steps)?;
    } else if spec.velocity_steps < 2 {
        return Err(Error::Usage(format!(
            "velocity steps must be >= 2, got {}",
            spec.velocity_steps
        )));
    }
    CavityConfig::new(
        Orientation::X,
        spec.bc,
        spec.field_mass,
        spec.plate_separation,
    )?;

    let radii: Vec<f64> = linspace(spec.r_range.0, spec.r_range.1, spec.r_steps).collect();
    let per_radius: Vec<(Option<CurvePoint>, Vec<SweepRow>)> = radii
        .par_iter()
        .map(|&r| {
            let critical = spec.critical_set(r).ok();
            let range = match (spec.velocity_range, critical) {
                (Some(range), _) => Some(range),
                (None, Some(c)) => {
                    let inset = 10.0 * DEFAULT_MARGIN * (c.bounds.1 - c.bounds.0) / 2.0;
                    Some((c.bounds.0 + inset, c.bounds.1 - inset))
                }
                (None, None) => None,
            };
            let rows = range
                .map(|(lo, hi)| {
                    linspace(lo, hi, spec.velocity_steps)
                        .map(|w| spec.row(r, w))
                        .collect()
                })
                .unwrap_or_default();
            (critical.map(|c| CurvePoint::new(r, &c)), rows)
        })
        .collect();

    let mut rows = Vec::with_capacity(spec.r_steps * spec.velocity_steps);
    let mut curves = Vec::with_capacity(spec.r_steps);
    for (curve, r_rows) in per_radius {
        curves.extend(curve);
        rows.extend(r_rows);
    }
    Ok(Sweep { rows, curves })
}

fn fmt_float(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn write_csv<W: Write>(rows: &[SweepRow], writer: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(writer);
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(CSV_HEADER).map_err(io)?;
    for row in rows {
        w.write_record([
            fmt_float(row.r),
            fmt_float(row.omega),
            row.allowed.to_string(),
            row.eps_x.map(fmt_float).unwrap_or_default(),
            row.eps_y.map(fmt_float).unwrap_or_default(),
            row.regime_x.to_string(),
            row.regime_y.to_string(),
        ])
        .map_err(io)?;
    }
    w.flush()?;
    Ok(())
}

/// Path of the JSON sidecar written next to `csv_path`.
pub fn curves_path(csv_path: &Path) -> PathBuf {
    let mut name = csv_path.as_os_str().to_owned();
    name.push(".curves.json");
    PathBuf::from(name)
}

/// Writes `<path>` and `<path>.curves.json`.
pub fn write_outputs(result: &Sweep, path: &Path) -> Result<()> {
    write_csv(&result.rows, BufWriter::new(File::create(path)?))?;
    let mut side = BufWriter::new(File::create(curves_path(path))?);
    serde_json::to_writer_pretty(&mut side, &result.curves)
        .map_err(|e| Error::Io(e.to_string()))?;
    side.write_all(b"\n")?;
    side.flush()?;
    Ok(())
}
