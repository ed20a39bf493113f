//! Comoving-frame metric algebra for a small plate apparatus.
//!
//! The apparatus sees a constant metric
//! `ds² = g_tt dt² + 2 g_tx dt dx + g_xx dx² + g_yy dy² + g_zz dz²`
//! with signature −2. Everything here is closed-form in those five numbers;
//! the inverse of the (t, x) block is written out analytically.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Constant metric seen by the apparatus in its comoving Cartesian frame.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LocalMetric {
    g_tt: f64,
    g_tx: f64,
    g_xx: f64,
    g_yy: f64,
    g_zz: f64,
}

/// Contravariant components of a [`LocalMetric`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InverseMetric {
    pub tt: f64,
    pub tx: f64,
    pub xx: f64,
    pub yy: f64,
    pub zz: f64,
}

impl LocalMetric {
    /// Validates `g_tt > 0` (allowed observer) and negative spatial diagonal.
    pub fn new(g_tt: f64, g_tx: f64, g_xx: f64, g_yy: f64, g_zz: f64) -> Result<Self> {
        let check = |component: &'static str, value: f64, ok: bool, reason: &'static str| {
            if value.is_finite() && ok {
                Ok(())
            } else {
                Err(Error::InvalidMetric {
                    component,
                    value,
                    reason,
                })
            }
        };
        check("g_tt", g_tt, g_tt > 0.0, "observer requires g_tt > 0")?;
        check("g_tx", g_tx, true, "must be finite")?;
        check("g_xx", g_xx, g_xx < 0.0, "signature requires g_xx < 0")?;
        check("g_yy", g_yy, g_yy < 0.0, "signature requires g_yy < 0")?;
        check("g_zz", g_zz, g_zz < 0.0, "signature requires g_zz < 0")?;
        Ok(Self {
            g_tt,
            g_tx,
            g_xx,
            g_yy,
            g_zz,
        })
    }

    pub fn minkowski() -> Self {
        Self {
            g_tt: 1.0,
            g_tx: 0.0,
            g_xx: -1.0,
            g_yy: -1.0,
            g_zz: -1.0,
        }
    }

    pub fn g_tt(&self) -> f64 {
        self.g_tt
    }
    pub fn g_tx(&self) -> f64 {
        self.g_tx
    }
    pub fn g_xx(&self) -> f64 {
        self.g_xx
    }
    pub fn g_yy(&self) -> f64 {
        self.g_yy
    }
    pub fn g_zz(&self) -> f64 {
        self.g_zz
    }

    /// `g̃ = g_tt g_xx − g_tx²`, always negative for a valid metric.
    pub fn g_tilde(&self) -> f64 {
        self.g_tt * self.g_xx - self.g_tx * self.g_tx
    }

    /// Full determinant `g = g_yy g_zz g̃`.
    pub fn determinant(&self) -> f64 {
        self.g_yy * self.g_zz * self.g_tilde()
    }

    /// `K = g^{tx}/g^{xx} = −g_tx/g_tt`, the phase factor removing the term linear in ω.
    pub fn drag_parameter(&self) -> f64 {
        -self.g_tx / self.g_tt
    }

    /// `g_tt g_xx / g̃ ∈ (0, 1]`; equals one exactly when `g_tx = 0`.
    pub fn diagonality(&self) -> f64 {
        self.g_tt * self.g_xx / self.g_tilde()
    }

    pub fn inverse(&self) -> InverseMetric {
        let gt = self.g_tilde();
        InverseMetric {
            tt: self.g_xx / gt,
            tx: -self.g_tx / gt,
            xx: self.g_tt / gt,
            yy: 1.0 / self.g_yy,
            zz: 1.0 / self.g_zz,
        }
    }

    /// Same metric with `g_yy` and `g_zz` exchanged.
    pub fn swap_transverse(&self) -> Self {
        Self {
            g_yy: self.g_zz,
            g_zz: self.g_yy,
            ..*self
        }
    }

    /// Same metric with every component of the (t, x) block multiplied by `lambda`.
    pub fn scale_tx_block(&self, lambda: f64) -> Result<Self> {
        Self::new(
            lambda * self.g_tt,
            lambda * self.g_tx,
            lambda * self.g_xx,
            self.g_yy,
            self.g_zz,
        )
    }
}

/// Direction normal to the plates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// Plates normal to the drag direction.
    X,
    /// Plates normal to the radial direction.
    Y,
}

impl Orientation {
    /// 0 for X, 1 for Y.
    pub fn selector(self) -> f64 {
        match self {
            Orientation::X => 0.0,
            Orientation::Y => 1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundaryCondition {
    /// Field vanishes on both plates (b = 0).
    Dirichlet,
    /// Dirichlet on the first plate, Neumann on the second (b = 1).
    Mixed,
}

impl BoundaryCondition {
    pub fn b(self) -> u8 {
        match self {
            BoundaryCondition::Dirichlet => 0,
            BoundaryCondition::Mixed => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CavityConfig {
    pub orientation: Orientation,
    pub bc: BoundaryCondition,
    /// Field mass as an inverse length.
    pub mass: f64,
    /// Coordinate distance between the plates.
    pub plate_separation: f64,
}

impl CavityConfig {
    pub fn new(
        orientation: Orientation,
        bc: BoundaryCondition,
        mass: f64,
        plate_separation: f64,
    ) -> Result<Self> {
        if !(mass.is_finite() && mass >= 0.0) {
            return Err(Error::Domain(format!(
                "field mass must be >= 0, got {mass}"
            )));
        }
        if !(plate_separation.is_finite() && plate_separation > 0.0) {
            return Err(Error::Domain(format!(
                "plate separation must be > 0, got {plate_separation}"
            )));
        }
        Ok(Self {
            orientation,
            bc,
            mass,
            plate_separation,
        })
    }

    /// Configuration whose coordinate separation gives the requested proper length in `metric`.
    pub fn with_proper_length(
        metric: &LocalMetric,
        orientation: Orientation,
        bc: BoundaryCondition,
        mass: f64,
        proper_length: f64,
    ) -> Result<Self> {
        let unit = CavityConfig::new(orientation, bc, mass, 1.0)?;
        let per_unit = self::proper_length(metric, &unit);
        CavityConfig::new(orientation, bc, mass, proper_length / per_unit)
    }
}

/// Proper distance between the plates, `L √(−1/g^{ξξ})`.
pub fn proper_length(metric: &LocalMetric, config: &CavityConfig) -> f64 {
    let l = config.plate_separation;
    match config.orientation {
        Orientation::X => l * (-metric.g_tilde() / metric.g_tt).sqrt(),
        Orientation::Y => l * (-metric.g_yy).sqrt(),
    }
}

/// ω² of a mode with wave vector `(k_x, k_y, k_z)` and the given mass.
pub fn mode_frequency_squared(
    metric: &LocalMetric,
    k_x: f64,
    k_y: f64,
    k_z: f64,
    mass: f64,
) -> f64 {
    -metric.g_tt
        * (metric.g_tt / metric.g_tilde() * k_x * k_x
            + k_y * k_y / metric.g_yy
            + k_z * k_z / metric.g_zz
            - mass * mass)
}

/// Wavenumber of the n-th standing mode between the plates, `(π/L)(n − b/2)`.
pub fn discrete_wavenumber(n: u64, config: &CavityConfig) -> Result<f64> {
    if n < 1 {
        return Err(Error::Domain("mode index must be >= 1".into()));
    }
    let b = f64::from(config.bc.b());
    Ok(PI / config.plate_separation * (n as f64 - 0.5 * b))
}

/// `|N|²` of a Klein–Gordon mode with frequency `omega` and drag-direction wavenumber `k_x`.
///
/// In the Y orientation the continuous `k_x` modes see `g_tx` through the
/// denominator `ω + (g_tt g_tx/g̃) k_x`; in the X orientation they do not.
pub fn mode_norm_squared(
    metric: &LocalMetric,
    config: &CavityConfig,
    omega: f64,
    k_x: f64,
) -> Result<f64> {
    if !(omega.is_finite() && omega > 0.0) {
        return Err(Error::Domain(format!("omega must be > 0, got {omega}")));
    }
    let gt = metric.g_tilde();
    let denom = omega + metric.g_tt * metric.g_tx / gt * config.orientation.selector() * k_x;
    if denom <= 0.0 {
        return Err(Error::ModeOutsideBranch(denom));
    }
    let root = (-metric.g_tt * metric.g_xx * metric.g_yy * metric.g_zz).sqrt();
    Ok(-metric.g_tt * root
        / (metric.determinant() * (2.0 * PI).powi(2) * config.plate_separation * denom))
}

/// `F = 1 + G_ξ g_tx²/g̃`; one for the X orientation, `g_tt g_xx/g̃` for Y.
pub fn f_factor(metric: &LocalMetric, config: &CavityConfig) -> Result<f64> {
    let f = match config.orientation {
        Orientation::X => 1.0,
        Orientation::Y => 1.0 + metric.g_tx * metric.g_tx / metric.g_tilde(),
    };
    if f > 0.0 {
        Ok(f)
    } else {
        Err(Error::Domain(format!(
            "F = {f} <= 0: metric is not an allowed-observer frame"
        )))
    }
}
