//! Conversion between SI and geometric units (`G = c = ħ = 1` lengths in metres).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;
pub const GRAVITATIONAL_CONSTANT: f64 = 6.674_30e-11;
pub const HBAR: f64 = 1.054_571_817e-34;
/// Heliocentric gravitational parameter `G M⊙` in m³/s².
pub const GM_SUN: f64 = 1.327_124_400_18e20;

/// One solar mass as a length, `G M⊙ / c²` (≈ 1476.6 m).
pub fn solar_mass_length() -> f64 {
    GM_SUN / (SPEED_OF_LIGHT * SPEED_OF_LIGHT)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum UnitSystem {
    Geometric,
    Si,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QuantityKind {
    /// Gravitating mass in kg, geometric value in m.
    MassKg,
    /// Gravitating mass in solar masses, geometric value in m.
    MassSolar,
    /// Angular velocity in rad/s, geometric value in 1/m.
    AngularVelocitySi,
    /// Length in m (unchanged).
    LengthM,
    /// Field mass in kg, geometric value as inverse Compton length in 1/m.
    FieldMassKg,
    /// Energy density in J/m³, geometric value in 1/m⁴.
    EnergyDensityGeometric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    ToGeometric,
    ToSi,
}

fn factor(kind: QuantityKind) -> f64 {
    let c = SPEED_OF_LIGHT;
    match kind {
        QuantityKind::MassKg => GRAVITATIONAL_CONSTANT / (c * c),
        QuantityKind::MassSolar => solar_mass_length(),
        QuantityKind::AngularVelocitySi => 1.0 / c,
        QuantityKind::LengthM => 1.0,
        QuantityKind::FieldMassKg => c / HBAR,
        QuantityKind::EnergyDensityGeometric => 1.0 / (HBAR * c),
    }
}

/// Converts `value` of the given kind; `ToGeometric` maps SI to geometric.
pub fn convert(value: f64, kind: QuantityKind, direction: Direction) -> Result<f64> {
    if !value.is_finite() {
        return Err(Error::Domain(format!(
            "cannot convert non-finite value {value}"
        )));
    }
    Ok(match direction {
        Direction::ToGeometric => value * factor(kind),
        Direction::ToSi => value / factor(kind),
    })
}
