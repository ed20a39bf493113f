//! Critical velocities, closed-form energies and regime classification for the
//! cylinder and Kerr backgrounds.
//!
//! The closed forms here are written directly in the background parameters
//! (`v_d`, `R`, `A`, `Δ`, ...) and never go through [`LocalMetric`], so they are
//! an independent route to the generic [`casimir_energy_density`] pipeline.

use serde::Serialize;

use crate::backgrounds::{
    cylinder_drag_velocity, cylinder_exponents, cylinder_local_metric, cylinder_velocity_bounds,
    kerr_angular_velocity_bounds, kerr_auxiliaries, kerr_drag_angular_velocity,
    kerr_equatorial_local_metric, kerr_r, CylinderParams, KerrParams,
};
use crate::casimir::{casimir_energy_density, casimir_energy_flat_massive, Regime};
use crate::error::{Error, Result};
use crate::geometry::{CavityConfig, LocalMetric, Orientation};

/// Weak-field regime used by [`weak_field_consistent`].
pub const WEAK_FIELD_LIMIT: f64 = 1e-3;

/// Characteristic velocities of a background at fixed radius.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CriticalSet {
    /// `v_d` or `ω_d`.
    pub drag: f64,
    /// `v_±` or `Ω_±`.
    pub bounds: (f64, f64),
    /// Where the Y-orientation energy vanishes.
    pub zero_energy: (f64, f64),
    /// Where the Y-orientation energy equals `−E_m` (cylinder only).
    pub sign_flip_unit: Option<(f64, f64)>,
    /// Circular geodesic angular velocities (Kerr only).
    pub geodesic: Option<(f64, f64)>,
}

impl CriticalSet {
    /// `bounds.0 < zero_energy.0 < drag < zero_energy.1 < bounds.1`.
    pub fn is_nested(&self) -> bool {
        self.bounds.0 < self.zero_energy.0
            && self.zero_energy.0 < self.drag
            && self.drag < self.zero_energy.1
            && self.zero_energy.1 < self.bounds.1
    }
}

/// A background together with the apparatus velocity, unvalidated.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "background", rename_all = "lowercase")]
pub enum Observer {
    Flat,
    Cylinder {
        k: f64,
        r: f64,
        v: f64,
    },
    Kerr {
        mass: f64,
        a: f64,
        r: f64,
        omega: f64,
    },
}

impl Observer {
    /// Comoving metric, or the admissibility error.
    pub fn local_metric(&self) -> Result<LocalMetric> {
        match *self {
            Observer::Flat => Ok(LocalMetric::minkowski()),
            Observer::Cylinder { k, r, v } => cylinder_local_metric(&CylinderParams::new(k, r, v)?),
            Observer::Kerr { mass, a, r, omega } => {
                kerr_equatorial_local_metric(&KerrParams::new(mass, a, r, omega)?)
            }
        }
    }

    pub fn critical_set(&self) -> Result<Option<CriticalSet>> {
        match *self {
            Observer::Flat => Ok(None),
            Observer::Cylinder { k, r, .. } => cylinder_critical_set(k, r).map(Some),
            Observer::Kerr { mass, a, r, .. } => kerr_critical_set(mass, a, r).map(Some),
        }
    }
}

// ---------------------------------------------------------------------------
// Cylinder

pub fn cylinder_critical_set(k: f64, r: f64) -> Result<CriticalSet> {
    // validates the coordinate patch
    let vd = cylinder_drag_velocity(k, r)?;
    CylinderParams::new(k, r, vd)?;
    let d = vd * vd + 1.0;
    let zero = (d / 3.0).sqrt();
    let flip = ((2.0 * 3f64.sqrt() - 3.0) * d).sqrt();
    Ok(CriticalSet {
        drag: vd,
        bounds: cylinder_velocity_bounds(k, r)?,
        zero_energy: (vd - zero, vd + zero),
        sign_flip_unit: Some((vd - flip, vd + flip)),
        geodesic: None,
    })
}

fn require_orientation(config: &CavityConfig, expected: Orientation) -> Result<()> {
    if config.orientation == expected {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "configuration orientation {:?} does not match {:?}",
            config.orientation, expected
        )))
    }
}

/// `(v_d² + 1, (v − v_d)²)` for the closed forms.
fn cylinder_boost(p: &CylinderParams) -> Result<(f64, f64)> {
    let vd = cylinder_drag_velocity(p.k(), p.r())?;
    let u = p.v() - vd;
    Ok((vd * vd + 1.0, u * u))
}

/// `ε_x = E_m √(1 − (v − v_d)²/(v_d² + 1))`.
pub fn cylinder_energy_x(p: &CylinderParams, config: &CavityConfig) -> Result<f64> {
    require_orientation(config, Orientation::X)?;
    let (d, u2) = cylinder_boost(p)?;
    let (q_minus, _) = cylinder_exponents(p.k());
    let cosine = (2.0 * p.k() * p.r().ln()).cos();
    let l_p = config.plate_separation * (p.r().powf(2.0 * q_minus) / (cosine * (d - u2))).sqrt();
    let e_m = casimir_energy_flat_massive(config.mass, l_p, config.bc)?;
    Ok(e_m * (1.0 - u2 / d).sqrt())
}

/// `ε_y = E_m (v_d² + 1 − 3(v − v_d)²) √(v_d² + 1) / (v_d² + 1 − (v − v_d)²)^{3/2}`.
pub fn cylinder_energy_y(p: &CylinderParams, config: &CavityConfig) -> Result<f64> {
    require_orientation(config, Orientation::Y)?;
    let (d, u2) = cylinder_boost(p)?;
    // g_yy = −1: proper and coordinate separations coincide
    let e_m = casimir_energy_flat_massive(config.mass, config.plate_separation, config.bc)?;
    Ok(e_m * (d - 3.0 * u2) * d.sqrt() / (d - u2).powf(1.5))
}

pub fn cylinder_energy(p: &CylinderParams, config: &CavityConfig) -> Result<f64> {
    match config.orientation {
        Orientation::X => cylinder_energy_x(p, config),
        Orientation::Y => cylinder_energy_y(p, config),
    }
}

// ---------------------------------------------------------------------------
// Kerr

/// Prograde and retrograde circular geodesic angular velocities `±√M/(r^{3/2} ± a√M)`.
pub fn kerr_geodesic_angular_velocities(mass: f64, a: f64, r: f64) -> (f64, f64) {
    let sm = mass.sqrt();
    let r32 = r * r.sqrt();
    (-sm / (r32 - a * sm), sm / (r32 + a * sm))
}

pub fn kerr_critical_set(mass: f64, a: f64, r: f64) -> Result<CriticalSet> {
    let drag = kerr_drag_angular_velocity(mass, a, r)?;
    let bounds = kerr_angular_velocity_bounds(mass, a, r)?;
    let (_, delta, big_a) = kerr_auxiliaries(mass, a, r);
    let zero = (delta / 3.0).sqrt() * r * r / big_a;
    Ok(CriticalSet {
        drag,
        bounds,
        zero_energy: (drag - zero, drag + zero),
        sign_flip_unit: None,
        geodesic: Some(kerr_geodesic_angular_velocities(mass, a, r)),
    })
}

/// `ε_x = R E_m` with `L_p = L √A/(r² R)`.
pub fn kerr_energy_x(p: &KerrParams, config: &CavityConfig) -> Result<f64> {
    require_orientation(config, Orientation::X)?;
    let big_r = kerr_r(p)?;
    let (_, _, big_a) = p.auxiliaries();
    let l_p = config.plate_separation * big_a.sqrt() / (p.r() * p.r() * big_r);
    Ok(big_r * casimir_energy_flat_massive(config.mass, l_p, config.bc)?)
}

/// `ε_y = R⁻³ (3R² − 2) E_m` with `L_p = L r/√Δ`.
pub fn kerr_energy_y(p: &KerrParams, config: &CavityConfig) -> Result<f64> {
    require_orientation(config, Orientation::Y)?;
    let big_r = kerr_r(p)?;
    let (_, delta, _) = p.auxiliaries();
    let l_p = config.plate_separation * p.r() / delta.sqrt();
    let e_m = casimir_energy_flat_massive(config.mass, l_p, config.bc)?;
    Ok((3.0 * big_r * big_r - 2.0) / big_r.powi(3) * e_m)
}

pub fn kerr_energy(p: &KerrParams, config: &CavityConfig) -> Result<f64> {
    match config.orientation {
        Orientation::X => kerr_energy_x(p, config),
        Orientation::Y => kerr_energy_y(p, config),
    }
}

/// `g(δ) = (Aδ)²/(Δr⁴ − (Aδ)²)` with `δ = |Ω − ω_d|`.
pub fn kerr_g_delta(p: &KerrParams) -> f64 {
    let (_, delta, big_a) = p.auxiliaries();
    let ad = big_a * (p.omega() - p.drag());
    let ad2 = ad * ad;
    ad2 / (delta * p.r().powi(4) - ad2)
}

/// `ε_y/ε_x = 1 − g(δ)(1 + 2g(δ))` at equal proper plate separation.
pub fn kerr_energy_ratio(mass: f64, a: f64, r: f64, omega: f64) -> Result<f64> {
    let g = kerr_g_delta(&KerrParams::new(mass, a, r, omega)?);
    Ok(1.0 - g * (1.0 + 2.0 * g))
}

/// Weak-field expansion parameter `x = 1 − R`, evaluated without cancellation.
pub fn kerr_weak_field_x(mass: f64, a: f64, r: f64, omega: f64) -> Result<f64> {
    let p = KerrParams::new(mass, a, r, omega)?;
    let beta = p.boost_squared();
    Ok(beta / (1.0 + (1.0 - beta).sqrt()))
}

/// Checks `|ε_y/E_m − (1 − 3x)| ≤ 10 x²` when `x < ` [`WEAK_FIELD_LIMIT`];
/// returns `None` outside the weak-field regime.
pub fn weak_field_consistent(mass: f64, a: f64, r: f64, omega: f64) -> Result<Option<bool>> {
    let x = kerr_weak_field_x(mass, a, r, omega)?;
    if x >= WEAK_FIELD_LIMIT {
        return Ok(None);
    }
    let big_r = 1.0 - x;
    let ratio = (3.0 * big_r * big_r - 2.0) / big_r.powi(3);
    Ok(Some((ratio - (1.0 - 3.0 * x)).abs() <= 10.0 * x * x))
}

// ---------------------------------------------------------------------------

/// Sign regime of the energy density; [`Regime::Forbidden`] for inadmissible observers.
pub fn classify_regime(observer: &Observer, config: &CavityConfig) -> Regime {
    observer
        .local_metric()
        .and_then(|m| casimir_energy_density(&m, config))
        .map(|e| e.regime)
        .unwrap_or(Regime::Forbidden)
}
