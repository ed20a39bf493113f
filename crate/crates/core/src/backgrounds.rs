//! Comoving-frame metrics for the two concrete backgrounds: the exterior of a
//! cylinder carrying linear momentum, and equatorial circular orbits in Kerr.
//!
//! All quantities are in geometric units. Admissibility intervals are open and
//! shrunk by a relative margin (default [`DEFAULT_MARGIN`]) of their half-width.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::LocalMetric;

pub const DEFAULT_MARGIN: f64 = 1e-12;

const DRAG_COS_TOL: f64 = 1e-12;

fn check_margin(margin: f64) -> Result<()> {
    if (0.0..1.0).contains(&margin) {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "admissibility margin must be in [0, 1), got {margin}"
        )))
    }
}

// ---------------------------------------------------------------------------
// Cylinder with linear momentum

/// Exponents `q_± = (1 ± 2√(1 + 3k²))/3`.
pub fn cylinder_exponents(k: f64) -> (f64, f64) {
    let root = (1.0 + 3.0 * k * k).sqrt();
    ((1.0 - 2.0 * root) / 3.0, (1.0 + 2.0 * root) / 3.0)
}

fn check_radius(r: f64) -> Result<()> {
    if r.is_finite() && r > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "radius must be finite and > 0, got {r}"
        )))
    }
}

/// `v_d = −tan(2k ln r)`: the velocity at which the comoving metric is diagonal.
pub fn cylinder_drag_velocity(k: f64, r: f64) -> Result<f64> {
    check_radius(r)?;
    if !k.is_finite() {
        return Err(Error::Domain(format!(
            "momentum parameter must be finite, got {k}"
        )));
    }
    let phase = 2.0 * k * r.ln();
    if phase.cos().abs() <= DRAG_COS_TOL {
        return Err(Error::Domain(format!(
            "drag velocity undefined: cos(2k ln r) = {} at r = {r}",
            phase.cos()
        )));
    }
    Ok(-phase.tan())
}

/// `v_± = v_d ± √(v_d² + 1)`, the time-orientation preserving velocity limits.
pub fn cylinder_velocity_bounds(k: f64, r: f64) -> Result<(f64, f64)> {
    let vd = cylinder_drag_velocity(k, r)?;
    let root = vd.hypot(1.0);
    // v₊ v₋ = −1; take the root free of cancellation first.
    if vd >= 0.0 {
        let vp = vd + root;
        Ok((-1.0 / vp, vp))
    } else {
        let vm = vd - root;
        Ok((vm, -1.0 / vm))
    }
}

/// Apparatus moving along the cylinder axis at fixed radius.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CylinderParams {
    k: f64,
    r: f64,
    v: f64,
}

impl CylinderParams {
    pub fn new(k: f64, r: f64, v: f64) -> Result<Self> {
        Self::with_margin(k, r, v, DEFAULT_MARGIN)
    }

    /// Requires `cos(2k ln r) > 0` and `|v − v_d| < (1 − margin) √(v_d² + 1)`.
    pub fn with_margin(k: f64, r: f64, v: f64, margin: f64) -> Result<Self> {
        check_margin(margin)?;
        check_radius(r)?;
        let cosine = (2.0 * k * r.ln()).cos();
        if !(cosine > 0.0) {
            return Err(Error::PatchInvalid { r, cosine });
        }
        let vd = cylinder_drag_velocity(k, r)?;
        let half = vd.hypot(1.0);
        if !(v.is_finite() && (v - vd).abs() < (1.0 - margin) * half) {
            let (lower, upper) = cylinder_velocity_bounds(k, r)?;
            return Err(Error::ObserverNotTimelike {
                value: v,
                lower,
                upper,
            });
        }
        Ok(Self { k, r, v })
    }

    pub fn k(&self) -> f64 {
        self.k
    }
    pub fn r(&self) -> f64 {
        self.r
    }
    pub fn v(&self) -> f64 {
        self.v
    }
}

/// Metric in the frame comoving with the apparatus (`dx = dx̃ − v dt`, `dy = dr`, `dz = r dθ`).
pub fn cylinder_local_metric(p: &CylinderParams) -> Result<LocalMetric> {
    let (q_minus, q_plus) = cylinder_exponents(p.k);
    let rho = p.r.powf(2.0 * q_minus);
    let phase = 2.0 * p.k * p.r.ln();
    let (s, c) = phase.sin_cos();
    let g_xx = -rho * c;
    let g_tx = g_xx * p.v - rho * s;
    let g_tt = 2.0 * p.v * g_tx - (1.0 + p.v * p.v) * g_xx;
    let g_zz = -p.r.powf(2.0 * (q_plus - 1.0));
    LocalMetric::new(g_tt, g_tx, g_xx, -1.0, g_zz).map_err(|e| match e {
        Error::InvalidMetric { .. } => Error::PatchInvalid { r: p.r, cosine: c },
        other => other,
    })
}

// ---------------------------------------------------------------------------
// Kerr, equatorial plane

/// Equatorial Boyer–Lindquist auxiliaries `(Σ, Δ, A)`.
pub fn kerr_auxiliaries(mass: f64, a: f64, r: f64) -> (f64, f64, f64) {
    let sigma = r * r;
    let delta = r * r + a * a - 2.0 * mass * r;
    let big_a = (r * r + a * a) * r * r + 2.0 * mass * r * a * a;
    (sigma, delta, big_a)
}

fn check_kerr(mass: f64, a: f64, r: f64) -> Result<(f64, f64, f64)> {
    if !(mass.is_finite() && mass > 0.0) {
        return Err(Error::Domain(format!(
            "mass must be finite and > 0, got {mass}"
        )));
    }
    if !a.is_finite() || a.abs() > mass {
        return Err(Error::OverExtremal { a, mass });
    }
    check_radius(r)?;
    let aux = kerr_auxiliaries(mass, a, r);
    // The exterior is r > r₊; Δ > 0 also holds inside the inner horizon.
    let r_plus = mass + (mass * mass - a * a).sqrt();
    if !(aux.1 > 0.0 && r > r_plus) {
        return Err(Error::InsideHorizon { r, delta: aux.1 });
    }
    Ok(aux)
}

/// `ω_d = 2Mar/A`.
pub fn kerr_drag_angular_velocity(mass: f64, a: f64, r: f64) -> Result<f64> {
    let (_, _, big_a) = check_kerr(mass, a, r)?;
    Ok(2.0 * mass * a * r / big_a)
}

/// Half-width `Σ√Δ/A` of the allowed angular-velocity band around `ω_d`.
fn kerr_half_width(sigma: f64, delta: f64, big_a: f64) -> f64 {
    sigma * delta.sqrt() / big_a
}

/// `Ω_± = ω_d ± Σ√Δ/A`.
pub fn kerr_angular_velocity_bounds(mass: f64, a: f64, r: f64) -> Result<(f64, f64)> {
    let (sigma, delta, big_a) = check_kerr(mass, a, r)?;
    let wd = 2.0 * mass * a * r / big_a;
    let hw = kerr_half_width(sigma, delta, big_a);
    Ok((wd - hw, wd + hw))
}

/// Apparatus on an equatorial circle of radius `r` with angular velocity `Ω`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KerrParams {
    mass: f64,
    a: f64,
    r: f64,
    omega: f64,
}

impl KerrParams {
    pub fn new(mass: f64, a: f64, r: f64, omega: f64) -> Result<Self> {
        Self::with_margin(mass, a, r, omega, DEFAULT_MARGIN)
    }

    pub fn with_margin(mass: f64, a: f64, r: f64, omega: f64, margin: f64) -> Result<Self> {
        check_margin(margin)?;
        let (sigma, delta, big_a) = check_kerr(mass, a, r)?;
        let wd = 2.0 * mass * a * r / big_a;
        let hw = kerr_half_width(sigma, delta, big_a);
        if !(omega.is_finite() && (omega - wd).abs() < (1.0 - margin) * hw) {
            return Err(Error::ObserverNotTimelike {
                value: omega,
                lower: wd - hw,
                upper: wd + hw,
            });
        }
        Ok(Self { mass, a, r, omega })
    }

    /// Observer co-rotating with the spacetime (ZAMO).
    pub fn zamo(mass: f64, a: f64, r: f64) -> Result<Self> {
        let wd = kerr_drag_angular_velocity(mass, a, r)?;
        Self::new(mass, a, r, wd)
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }
    pub fn a(&self) -> f64 {
        self.a
    }
    pub fn r(&self) -> f64 {
        self.r
    }
    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn auxiliaries(&self) -> (f64, f64, f64) {
        kerr_auxiliaries(self.mass, self.a, self.r)
    }

    pub fn drag(&self) -> f64 {
        let (_, _, big_a) = self.auxiliaries();
        2.0 * self.mass * self.a * self.r / big_a
    }

    /// `A²(Ω − ω_d)²/(r⁴Δ) = 1 − R²`.
    pub fn boost_squared(&self) -> f64 {
        let (_, delta, big_a) = self.auxiliaries();
        let u = big_a * (self.omega - self.drag()) / (self.r * self.r);
        u * u / delta
    }
}

/// Comoving metric for the equatorial orbit (`dx = r dφ'`, `dy = dr`, `dz = r dθ`).
pub fn kerr_equatorial_local_metric(p: &KerrParams) -> Result<LocalMetric> {
    let (sigma, delta, big_a) = p.auxiliaries();
    let r = p.r;
    let g_tt = delta * sigma / big_a * (1.0 - p.boost_squared());
    let g_tx = -big_a / (r * r * r) * (p.omega - p.drag());
    let g_xx = -big_a / (r * r * r * r);
    let g_yy = -r * r / delta;
    LocalMetric::new(g_tt, g_tx, g_xx, g_yy, -1.0).map_err(|e| match e {
        Error::InvalidMetric { .. } => {
            let (lower, upper) = (
                p.drag() - kerr_half_width(sigma, delta, big_a),
                p.drag() + kerr_half_width(sigma, delta, big_a),
            );
            Error::ObserverNotTimelike {
                value: p.omega,
                lower,
                upper,
            }
        }
        other => other,
    })
}

/// `R = [1 − A²(Ω − ω_d)²/(r⁴Δ)]^{1/2} ∈ (0, 1]`.
pub fn kerr_r(p: &KerrParams) -> Result<f64> {
    let arg = 1.0 - p.boost_squared();
    if arg > 0.0 {
        Ok(arg.sqrt())
    } else {
        Err(Error::ObserverNotTimelike {
            value: p.omega,
            lower: f64::NAN,
            upper: f64::NAN,
        })
    }
}
