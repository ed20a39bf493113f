//! Casimir energy density of a scalar field between parallel plates.
//!
//! The flat-space massive energy
//! `E_m = −m²/(8π²L_p²) Σ_{n≥1} (−1)^{bn} n^{−2} K₂(2 m L_p n)`
//! is dressed by a metric-dependent prefactor
//! `(g̃/(g_tt g_xx))^{(4G_ξ−1)/2} (1 + 3 G_ξ g_tx²/g̃)`,
//! with `G_ξ = 0` for the X orientation and 1 for Y. The second factor can
//! change sign in the Y orientation, flipping the force.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{proper_length, BoundaryCondition, CavityConfig, LocalMetric, Orientation};
use crate::specfun;

/// Relative size below which an energy density is labelled [`Regime::Null`].
pub const NULL_TOL: f64 = 1e-9;

/// Below this value of `2 m L_p` the massless closed form is used.
pub const MASSLESS_CROSSOVER: f64 = 1e-6;

/// Series tolerance used for the massive energy.
pub const SERIES_REL_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Regime {
    /// Negative energy density.
    Attractive,
    /// Positive energy density.
    Repulsive,
    /// Energy density within [`NULL_TOL`] of zero relative to `E_m`.
    Null,
    /// Observer outside the admissible band; nothing is computed.
    Forbidden,
}

impl Regime {
    pub fn from_energy(energy: f64, flat_reference: f64) -> Self {
        if energy.abs() <= NULL_TOL * flat_reference.abs() {
            Regime::Null
        } else if energy < 0.0 {
            Regime::Attractive
        } else {
            Regime::Repulsive
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Regime::Attractive => "Attractive",
            Regime::Repulsive => "Repulsive",
            Regime::Null => "Null",
            Regime::Forbidden => "Forbidden",
        }
    }
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnergyResult {
    pub energy_density: f64,
    #[serde(rename = "flat_reference_Em")]
    pub flat_reference: f64,
    pub prefactor: f64,
    pub proper_length: f64,
    pub regime: Regime,
}

/// Controls for the massive flat-space energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FlatEnergyOptions {
    pub series_rel_tol: f64,
    /// Use the massless form when `2 m L_p` is below this; `None` always sums the series.
    pub massless_crossover: Option<f64>,
}

impl Default for FlatEnergyOptions {
    fn default() -> Self {
        Self {
            series_rel_tol: SERIES_REL_TOL,
            massless_crossover: Some(MASSLESS_CROSSOVER),
        }
    }
}

fn check_length(l_p: f64) -> Result<()> {
    if l_p.is_finite() && l_p > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "proper length must be > 0, got {l_p}"
        )))
    }
}

/// `−(−7/8)^b π²/(1440 L_p⁴)`.
pub fn casimir_energy_flat_massless(l_p: f64, bc: BoundaryCondition) -> Result<f64> {
    check_length(l_p)?;
    let base = -PI * PI / (1440.0 * l_p.powi(4));
    Ok(match bc {
        BoundaryCondition::Dirichlet => base,
        BoundaryCondition::Mixed => -7.0 / 8.0 * base,
    })
}

/// Massive flat-space energy with the default series tolerance and crossover.
pub fn casimir_energy_flat_massive(mass: f64, l_p: f64, bc: BoundaryCondition) -> Result<f64> {
    casimir_energy_flat_massive_with(mass, l_p, bc, &FlatEnergyOptions::default())
}

pub fn casimir_energy_flat_massive_with(
    mass: f64,
    l_p: f64,
    bc: BoundaryCondition,
    options: &FlatEnergyOptions,
) -> Result<f64> {
    check_length(l_p)?;
    if !(mass.is_finite() && mass >= 0.0) {
        return Err(Error::Domain(format!(
            "field mass must be >= 0, got {mass}"
        )));
    }
    let x = 2.0 * mass * l_p;
    let use_massless = mass == 0.0 || options.massless_crossover.is_some_and(|c| x < c);
    if use_massless {
        return casimir_energy_flat_massless(l_p, bc);
    }
    let series = specfun::casimir_series(x, bc.b(), options.series_rel_tol)?;
    Ok(-mass * mass / (8.0 * PI * PI * l_p * l_p) * series.value)
}

/// Metric factor multiplying `E_m` for the given plate orientation.
pub fn orientation_prefactor(metric: &LocalMetric, orientation: Orientation) -> f64 {
    let selector = orientation.selector();
    let gt = metric.g_tilde();
    let base = gt / (metric.g_tt() * metric.g_xx());
    let exponent = (4.0 * selector - 1.0) / 2.0;
    base.powf(exponent) * (1.0 + 3.0 * selector * metric.g_tx() * metric.g_tx() / gt)
}

/// Averaged vacuum energy density between the plates.
pub fn casimir_energy_density(metric: &LocalMetric, config: &CavityConfig) -> Result<EnergyResult> {
    casimir_energy_density_with(metric, config, &FlatEnergyOptions::default())
}

pub fn casimir_energy_density_with(
    metric: &LocalMetric,
    config: &CavityConfig,
    options: &FlatEnergyOptions,
) -> Result<EnergyResult> {
    let l_p = proper_length(metric, config);
    let flat = casimir_energy_flat_massive_with(config.mass, l_p, config.bc, options)?;
    let prefactor = orientation_prefactor(metric, config.orientation);
    let energy = prefactor * flat;
    Ok(EnergyResult {
        energy_density: energy,
        flat_reference: flat,
        prefactor,
        proper_length: l_p,
        regime: Regime::from_energy(energy, flat),
    })
}

/// `g_tx² < −G_ξ g_tt g_xx / 2`: true when the force keeps its flat-space sign
/// in the Y orientation; never true for X.
pub fn repulsion_condition(metric: &LocalMetric, orientation: Orientation) -> bool {
    metric.g_tx() * metric.g_tx() < -orientation.selector() * metric.g_tt() * metric.g_xx() / 2.0
}

/// True when the metric reverses the sign of the energy relative to `E_m`.
pub fn sign_flipped(metric: &LocalMetric, orientation: Orientation) -> bool {
    orientation == Orientation::Y
        && metric.g_tx() * metric.g_tx() > -metric.g_tt() * metric.g_xx() / 2.0
}
