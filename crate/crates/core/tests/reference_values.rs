//! Values frozen from 40-digit evaluations of the defining formulas.

use std::f64::consts::PI;

use stationary_casimir::backgrounds::{
    cylinder_local_metric, kerr_equatorial_local_metric, CylinderParams, KerrParams,
};
use stationary_casimir::casimir::{
    casimir_energy_density, casimir_energy_flat_massive, casimir_energy_flat_massless,
};
use stationary_casimir::geometry::{BoundaryCondition, CavityConfig, Orientation};
use stationary_casimir::oracle::{em_bruteforce, neutron_star_x};
use stationary_casimir::specfun::{bessel_k2, casimir_series};

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

#[test]
fn bessel_k2_table() {
    let table = [
        (1e-6, 1_999_999_999_999.5),
        (0.1, 199.503_964_642_114_14),
        (1.0, 1.624_838_898_635_177_5),
        (2.0, 0.253_759_754_566_055_86),
        (5.0, 0.005_308_943_712_223_460),
        (10.0, 2.150_981_700_693_276_8e-5),
        (50.0, 3.547_931_838_858_197_7e-23),
    ];
    for (z, expected) in table {
        assert!(rel(bessel_k2(z).unwrap(), expected) < 1e-13, "z = {z}");
    }
}

#[test]
fn casimir_series_table() {
    let table = [
        (0.2, 0, 53.387_630_783_708_165),
        (0.2, 1, -46.947_728_885_657_855),
        (2.0, 0, 0.258_310_628_694_448_94),
        (2.0, 1, -0.249_586_607_077_612_24),
        (6.0, 0, 0.001_692_613_775_698_103_5),
        (6.0, 1, -0.001_691_322_465_240_789_1),
    ];
    for (x, b, expected) in table {
        let s = casimir_series(x, b, 1e-12).unwrap();
        assert!(
            (s.value - expected).abs() <= s.tail_bound + 1e-14 * expected.abs(),
            "x = {x}, b = {b}"
        );
    }
}

#[test]
fn flat_massive_energy_at_unit_mass_and_length() {
    let d = casimir_energy_flat_massive(1.0, 1.0, BoundaryCondition::Dirichlet).unwrap();
    let m = casimir_energy_flat_massive(1.0, 1.0, BoundaryCondition::Mixed).unwrap();
    assert!(rel(d, -0.003_271_542_330_839_748_2) < 1e-10);
    assert!(rel(m, 0.003_161_051_306_297_343_8) < 1e-10);
}

#[test]
fn bruteforce_matches_adaptive_sum() {
    for bc in [BoundaryCondition::Dirichlet, BoundaryCondition::Mixed] {
        let brute = em_bruteforce(1.0, 1.0, bc, 10_000).unwrap();
        let main = casimir_energy_flat_massive(1.0, 1.0, bc).unwrap();
        assert!(rel(main, brute) < 1e-10, "{bc:?}: {main} vs {brute}");
    }
}

#[test]
fn bruteforce_light_field_approaches_massless() {
    let brute = em_bruteforce(1e-3, 1.0, BoundaryCondition::Dirichlet, 1_000_000).unwrap();
    assert!(rel(brute, -PI * PI / 1440.0) < 1e-5);
}

#[test]
fn cylinder_energies_at_a_sample_point() {
    let p = CylinderParams::new(0.3, 1.7, 0.1).unwrap();
    let g = cylinder_local_metric(&p).unwrap();
    let table = [
        (
            Orientation::X,
            BoundaryCondition::Dirichlet,
            -0.009_704_434_920_479_141_7,
            0.855_110_816_906_206_6,
        ),
        (
            Orientation::X,
            BoundaryCondition::Mixed,
            0.008_885_555_281_941_338_2,
            0.855_110_816_906_206_6,
        ),
        (
            Orientation::Y,
            BoundaryCondition::Dirichlet,
            -0.003_533_533_260_716_229_1,
            1.0,
        ),
        (
            Orientation::Y,
            BoundaryCondition::Mixed,
            0.003_264_519_897_160_787_1,
            1.0,
        ),
    ];
    for (o, bc, energy, l_p) in table {
        let e = casimir_energy_density(&g, &CavityConfig::new(o, bc, 0.5, 1.0).unwrap()).unwrap();
        assert!(rel(e.energy_density, energy) < 1e-10, "{o:?} {bc:?}");
        assert!(rel(e.proper_length, l_p) < 1e-14);
    }
}

#[test]
fn kerr_energies_at_a_sample_point() {
    let g = kerr_equatorial_local_metric(&KerrParams::new(1.0, 0.7, 3.0, 0.1).unwrap()).unwrap();
    let table = [
        (
            Orientation::X,
            -0.003_899_931_881_307_304_2,
            1.086_485_092_511_141_2,
            0.961_251_422_882_832_1,
        ),
        (
            Orientation::Y,
            -0.000_620_067_884_694_631_58,
            1.605_863_182_716_567_7,
            0.869_187_689_882_913_9,
        ),
    ];
    for (o, energy, l_p, prefactor) in table {
        let c = CavityConfig::new(o, BoundaryCondition::Dirichlet, 0.4, 1.0).unwrap();
        let e = casimir_energy_density(&g, &c).unwrap();
        assert!(rel(e.energy_density, energy) < 1e-10, "{o:?}");
        assert!(rel(e.proper_length, l_p) < 1e-13);
        assert!(rel(e.prefactor, prefactor) < 1e-13);
    }
}

#[test]
fn massless_closed_forms() {
    let d = casimir_energy_flat_massless(1.0, BoundaryCondition::Dirichlet).unwrap();
    assert!(rel(d, -0.006_853_891_945_200_942) < 1e-14);
}

#[test]
fn neutron_star_parameter_from_exact_boost() {
    // 1 − R at M = 1.4 solar masses, r = 10 km, Ω = 190 rad/s, a = 0
    assert!(rel(neutron_star_x().unwrap(), 3.424_064_260_6e-5) < 1e-9);
}
