//! Independent reference computations and the dual-path verification run.
//!
//! Each check pairs a main-path value with one obtained through different
//! numerics: quadrature instead of Bessel approximations, fixed-length sums
//! instead of adaptive truncation, elimination instead of the analytic inverse,
//! finite differences instead of the closed geodesic formula.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::backgrounds::{
    cylinder_drag_velocity, cylinder_local_metric, kerr_auxiliaries, kerr_drag_angular_velocity,
    kerr_equatorial_local_metric, CylinderParams, KerrParams,
};
use crate::casimir::{casimir_energy_density, casimir_energy_flat_massive};
use crate::error::{Error, Result};
use crate::geometry::{BoundaryCondition, CavityConfig, LocalMetric, Orientation};
use crate::regimes::{
    cylinder_energy, kerr_energy, kerr_geodesic_angular_velocities, kerr_weak_field_x,
};
use crate::specfun::{bessel_k2, bessel_k2_integral_oracle};
use crate::units::{self, Direction, QuantityKind};

const GAP_FLOOR: f64 = 1e-300;
const K2_QUAD_TOL: f64 = 1e-13;
/// Beyond this argument `e^{−z}` underflows and every K₂ term is exactly zero.
const K2_ZERO_ARG: f64 = 746.0;

/// Default tolerance on every dual-path gap.
pub const DUAL_PATH_TOL: f64 = 1e-9;

/// Literature value of the weak-field parameter for the neutron-star example.
pub const NEUTRON_STAR_X: f64 = 2.3e-5;
pub const NEUTRON_STAR_TOL: f64 = 0.3;
pub const NEUTRON_STAR_MASS_SOLAR: f64 = 1.4;
pub const NEUTRON_STAR_RADIUS_M: f64 = 1e4;
pub const NEUTRON_STAR_OMEGA_SI: f64 = 190.0;

/// One main-path versus reference comparison.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleReport {
    pub quantity_name: String,
    pub main_value: f64,
    pub oracle_value: f64,
    /// `|main − oracle| / max(|oracle|, 1e-300)`.
    pub relative_gap: f64,
    /// Terms, quadrature panels or samples spent by the reference path.
    pub budget: u64,
    pub tolerance: f64,
    pub passed: bool,
}

impl OracleReport {
    pub fn new(
        name: impl Into<String>,
        main: f64,
        oracle: f64,
        budget: u64,
        tolerance: f64,
    ) -> Self {
        let gap = relative_gap(main, oracle);
        Self {
            quantity_name: name.into(),
            main_value: main,
            oracle_value: oracle,
            relative_gap: gap,
            budget,
            tolerance,
            passed: gap <= tolerance,
        }
    }
}

pub fn relative_gap(main: f64, oracle: f64) -> f64 {
    (main - oracle).abs() / oracle.abs().max(GAP_FLOOR)
}

/// Fixed-length partial sum of the massive flat energy with quadrature K₂.
pub fn em_bruteforce(mass: f64, l_p: f64, bc: BoundaryCondition, terms: u64) -> Result<f64> {
    if terms < 1 {
        return Err(Error::Domain("term count must be >= 1".into()));
    }
    if !(mass > 0.0 && l_p > 0.0) {
        return Err(Error::Domain(format!(
            "need m > 0 and L_p > 0, got {mass}, {l_p}"
        )));
    }
    let x = 2.0 * mass * l_p;
    let last = terms.min((K2_ZERO_ARG / x).ceil() as u64).max(1);
    let values: Vec<f64> = (1..=last)
        .into_par_iter()
        .map(|n| {
            let nf = n as f64;
            let sign = if bc == BoundaryCondition::Mixed && n % 2 == 1 {
                -1.0
            } else {
                1.0
            };
            bessel_k2_integral_oracle(nf * x, K2_QUAD_TOL).map(|k| sign * k / (nf * nf))
        })
        .collect::<Result<_>>()?;
    // smallest terms first
    let sum: f64 = values.iter().rev().sum();
    Ok(-mass * mass / (8.0 * PI * PI * l_p * l_p) * sum)
}

/// Inverse of the metric by Gaussian elimination on the (t, x) block.
pub fn metric_inverse_oracle(metric: &LocalMetric) -> Result<[f64; 5]> {
    let mut a = [
        [metric.g_tt(), metric.g_tx(), 1.0, 0.0],
        [metric.g_tx(), metric.g_xx(), 0.0, 1.0],
    ];
    if a[1][0].abs() > a[0][0].abs() {
        a.swap(0, 1);
    }
    if a[0][0] == 0.0 {
        return Err(Error::Domain("singular (t, x) block".into()));
    }
    let factor = a[1][0] / a[0][0];
    for j in 0..4 {
        a[1][j] -= factor * a[0][j];
    }
    if a[1][1] == 0.0 {
        return Err(Error::Domain("singular (t, x) block".into()));
    }
    let row1: Vec<f64> = (0..4).map(|j| a[1][j] / a[1][1]).collect();
    let row0: Vec<f64> = (0..4)
        .map(|j| (a[0][j] - a[0][1] * row1[j]) / a[0][0])
        .collect();
    Ok([
        row0[2],
        row0[3],
        row1[3],
        1.0 / metric.g_yy(),
        1.0 / metric.g_zz(),
    ])
}

/// Equatorial Boyer–Lindquist `(g_tt, g_tφ, g_φφ)`.
fn kerr_bl_equatorial(mass: f64, a: f64, r: f64) -> (f64, f64, f64) {
    let sigma = r * r;
    let big_a = (r * r + a * a) * sigma + 2.0 * mass * r * a * a;
    (
        1.0 - 2.0 * mass * r / sigma,
        2.0 * mass * a * r / sigma,
        -big_a / sigma,
    )
}

/// Circular-orbit angular velocities from `∂_r g_tt + 2Ω ∂_r g_tφ + Ω² ∂_r g_φφ = 0`
/// with five-point finite differences; returns (retrograde, prograde).
pub fn kerr_geodesic_oracle(mass: f64, a: f64, r: f64) -> (f64, f64) {
    let h = 1e-3 * r;
    let d = |f: &dyn Fn(f64) -> f64| {
        (f(r - 2.0 * h) - 8.0 * f(r - h) + 8.0 * f(r + h) - f(r + 2.0 * h)) / (12.0 * h)
    };
    let c0 = d(&|s| kerr_bl_equatorial(mass, a, s).0);
    let c1 = d(&|s| kerr_bl_equatorial(mass, a, s).1);
    let c2 = d(&|s| kerr_bl_equatorial(mass, a, s).2);
    let disc = (c1 * c1 - c0 * c2).sqrt();
    // c2 < 0; avoid cancellation in the smaller root
    let q = -(c1 + c1.signum() * disc);
    let roots = (q / c2, c0 / q);
    (roots.0.min(roots.1), roots.0.max(roots.1))
}

/// Residual of the circular-orbit condition, normalized by its largest term.
pub fn kerr_circular_orbit_residual(mass: f64, a: f64, r: f64, omega: f64) -> f64 {
    let h = 1e-3 * r;
    let d = |f: &dyn Fn(f64) -> f64| {
        (f(r - 2.0 * h) - 8.0 * f(r - h) + 8.0 * f(r + h) - f(r + 2.0 * h)) / (12.0 * h)
    };
    let c0 = d(&|s| kerr_bl_equatorial(mass, a, s).0);
    let c1 = d(&|s| kerr_bl_equatorial(mass, a, s).1);
    let c2 = d(&|s| kerr_bl_equatorial(mass, a, s).2);
    let terms = [c0, 2.0 * omega * c1, omega * omega * c2];
    let scale = terms.iter().map(|t| t.abs()).fold(0.0, f64::max);
    terms.iter().sum::<f64>() / scale
}

/// Weak-field parameter `x = 1 − R` for the neutron-star example (non-rotating).
pub fn neutron_star_x() -> Result<f64> {
    let mass = units::convert(
        NEUTRON_STAR_MASS_SOLAR,
        QuantityKind::MassSolar,
        Direction::ToGeometric,
    )?;
    let omega = units::convert(
        NEUTRON_STAR_OMEGA_SI,
        QuantityKind::AngularVelocitySi,
        Direction::ToGeometric,
    )?;
    kerr_weak_field_x(mass, 0.0, NEUTRON_STAR_RADIUS_M, omega)
}

fn random_config<R: Rng>(rng: &mut R, orientation: Orientation) -> CavityConfig {
    let bc = if rng.random_bool(0.5) {
        BoundaryCondition::Dirichlet
    } else {
        BoundaryCondition::Mixed
    };
    let mass = if rng.random_bool(0.3) {
        0.0
    } else {
        rng.random_range(0.05..2.0)
    };
    CavityConfig::new(orientation, bc, mass, rng.random_range(0.5..2.0)).expect("valid ranges")
}

/// Cylinder observer at least 20% of the half-width inside the bounds.
pub fn random_cylinder<R: Rng>(rng: &mut R, interior: f64) -> CylinderParams {
    loop {
        let k = rng.random_range(-1.5..1.5);
        let r: f64 = rng.random_range(0.3..4.0);
        if (2.0 * k * r.ln()).cos() < 0.2 {
            continue;
        }
        let vd = cylinder_drag_velocity(k, r).expect("cosine checked");
        let s = rng.random_range(-interior..interior);
        if let Ok(p) = CylinderParams::new(k, r, vd + s * vd.hypot(1.0)) {
            return p;
        }
    }
}

/// Kerr observer outside `1.2 r₊` and at least `1 − interior` of the half-width inside the band.
pub fn random_kerr<R: Rng>(rng: &mut R, interior: f64) -> KerrParams {
    loop {
        let mass: f64 = rng.random_range(0.5..2.0);
        let a = mass * rng.random_range(-0.99..0.99);
        let r_plus = mass + (mass * mass - a * a).sqrt();
        let r = r_plus * rng.random_range(1.2..15.0);
        let (sigma, delta, big_a) = kerr_auxiliaries(mass, a, r);
        let wd = kerr_drag_angular_velocity(mass, a, r).expect("outside horizon");
        let hw = sigma * delta.sqrt() / big_a;
        let s = rng.random_range(-interior..interior);
        if let Ok(p) = KerrParams::new(mass, a, r, wd + s * hw) {
            return p;
        }
    }
}

fn sample_reports(seed: u64, index: u64) -> Result<Vec<OracleReport>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let mut out = Vec::new();

    let z = 10f64.powf(rng.random_range(-6.0..50f64.log10()));
    out.push(OracleReport::new(
        format!("bessel_k2(z={z:.6e})"),
        bessel_k2(z)?,
        bessel_k2_integral_oracle(z, K2_QUAD_TOL)?,
        0,
        1e-10,
    ));

    let m_lp = rng.random_range(0.1..3.0);
    let bc = if rng.random_bool(0.5) {
        BoundaryCondition::Dirichlet
    } else {
        BoundaryCondition::Mixed
    };
    out.push(OracleReport::new(
        format!("flat_massive_energy(mL_p={m_lp:.6}, b={})", bc.b()),
        casimir_energy_flat_massive(m_lp, 1.0, bc)?,
        em_bruteforce(m_lp, 1.0, bc, 10_000)?,
        10_000,
        DUAL_PATH_TOL,
    ));

    for orientation in [Orientation::X, Orientation::Y] {
        let p = random_cylinder(&mut rng, 0.8);
        let c = random_config(&mut rng, orientation);
        let generic = casimir_energy_density(&cylinder_local_metric(&p)?, &c)?.energy_density;
        out.push(OracleReport::new(
            format!(
                "cylinder_energy_{orientation:?}(k={:.4}, r={:.4}, v={:.4})",
                p.k(),
                p.r(),
                p.v()
            ),
            generic,
            cylinder_energy(&p, &c)?,
            1,
            DUAL_PATH_TOL,
        ));
    }

    for orientation in [Orientation::X, Orientation::Y] {
        let p = random_kerr(&mut rng, 0.8);
        let c = random_config(&mut rng, orientation);
        let generic =
            casimir_energy_density(&kerr_equatorial_local_metric(&p)?, &c)?.energy_density;
        out.push(OracleReport::new(
            format!(
                "kerr_energy_{orientation:?}(M={:.4}, a={:.4}, r={:.4}, Omega={:.4e})",
                p.mass(),
                p.a(),
                p.r(),
                p.omega()
            ),
            generic,
            kerr_energy(&p, &c)?,
            1,
            DUAL_PATH_TOL,
        ));
    }

    let p = random_kerr(&mut rng, 0.8);
    let metric = kerr_equatorial_local_metric(&p)?;
    let analytic = metric.inverse();
    let numeric = metric_inverse_oracle(&metric)?;
    let pairs = [
        (analytic.tt, numeric[0]),
        (analytic.tx, numeric[1]),
        (analytic.xx, numeric[2]),
    ];
    // report the worst component
    let (main, oracle) = pairs
        .into_iter()
        .max_by(|a, b| relative_gap(a.0, a.1).total_cmp(&relative_gap(b.0, b.1)))
        .expect("three components");
    out.push(OracleReport::new(
        "metric_inverse(worst of tt, tx, xx)",
        main,
        oracle,
        1,
        1e-12,
    ));

    let (mass, a) = (p.mass(), p.a());
    let r = p.r().max(4.0 * mass);
    let formula = kerr_geodesic_angular_velocities(mass, a, r);
    let numeric = kerr_geodesic_oracle(mass, a, r);
    out.push(OracleReport::new(
        format!("geodesic_prograde(M={mass:.4}, a={a:.4}, r={r:.4})"),
        formula.1,
        numeric.1,
        5,
        DUAL_PATH_TOL,
    ));
    out.push(OracleReport::new(
        format!("geodesic_retrograde(M={mass:.4}, a={a:.4}, r={r:.4})"),
        formula.0,
        numeric.0,
        5,
        DUAL_PATH_TOL,
    ));
    Ok(out)
}

/// Runs every dual-path check on `samples` deterministic pseudo-random inputs,
/// then the neutron-star benchmark once.
///
/// Samples run in parallel; reports are ordered by sample index.
pub fn verify_all(seed: u64, samples: u64) -> Result<Vec<OracleReport>> {
    if samples < 1 {
        return Err(Error::Usage("samples must be >= 1".into()));
    }
    let per_sample: Vec<Vec<OracleReport>> = (0..samples)
        .into_par_iter()
        .map(|i| sample_reports(seed, i))
        .collect::<Result<_>>()?;
    let mut reports: Vec<OracleReport> = per_sample.into_iter().flatten().collect();
    reports.push(OracleReport::new(
        "neutron_star_weak_field_x(a=0)",
        neutron_star_x()?,
        NEUTRON_STAR_X,
        1,
        NEUTRON_STAR_TOL,
    ));
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bruteforce_partial_sums_bracket_for_mixed() {
        let one = em_bruteforce(1.0, 1.0, BoundaryCondition::Mixed, 1).unwrap();
        let two = em_bruteforce(1.0, 1.0, BoundaryCondition::Mixed, 2).unwrap();
        let limit = casimir_energy_flat_massive(1.0, 1.0, BoundaryCondition::Mixed).unwrap();
        assert!(one.min(two) <= limit && limit <= one.max(two));
        assert!(em_bruteforce(1.0, 1.0, BoundaryCondition::Mixed, 0).is_err());
    }

    #[test]
    fn inverse_oracle_examples() {
        let inv = metric_inverse_oracle(&LocalMetric::minkowski()).unwrap();
        assert_eq!(inv, [1.0, 0.0, -1.0, -1.0, -1.0]);
        let m = LocalMetric::new(0.7, -0.45, -1.3, -2.0, -0.5).unwrap();
        let inv = metric_inverse_oracle(&m).unwrap();
        assert!((inv[2] - m.g_tt() / m.g_tilde()).abs() < 1e-13 * inv[2].abs());
        let zamo = kerr_equatorial_local_metric(&KerrParams::zamo(1.0, 0.7, 3.0).unwrap()).unwrap();
        assert_eq!(metric_inverse_oracle(&zamo).unwrap()[1], 0.0);
    }

    #[test]
    fn geodesic_oracle_matches_formula() {
        for &(m, a, r) in &[(1.0, 0.7, 3.0), (1.0, 0.0, 6.0), (2.0, -1.5, 12.0)] {
            let f = kerr_geodesic_angular_velocities(m, a, r);
            let o = kerr_geodesic_oracle(m, a, r);
            assert!(relative_gap(f.1, o.1) < 1e-10);
            assert!(relative_gap(f.0, o.0) < 1e-10);
            assert!(kerr_circular_orbit_residual(m, a, r, f.1).abs() < 1e-10);
            assert!(kerr_circular_orbit_residual(m, a, r, f.0).abs() < 1e-10);
        }
    }

    #[test]
    fn verify_rejects_zero_samples() {
        assert!(verify_all(0, 0).is_err());
    }
}
