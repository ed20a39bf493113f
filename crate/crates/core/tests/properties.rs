use proptest::prelude::*;

use stationary_casimir::backgrounds::{
    cylinder_drag_velocity, cylinder_exponents, cylinder_local_metric, cylinder_velocity_bounds,
    kerr_angular_velocity_bounds, kerr_auxiliaries, kerr_drag_angular_velocity,
    kerr_equatorial_local_metric, kerr_r, CylinderParams, KerrParams,
};
use stationary_casimir::casimir::{
    casimir_energy_density, casimir_energy_flat_massive, casimir_energy_flat_massless,
    orientation_prefactor, Regime,
};
use stationary_casimir::geometry::{
    f_factor, mode_frequency_squared, proper_length, BoundaryCondition, CavityConfig, LocalMetric,
    Orientation,
};
use stationary_casimir::oracle::metric_inverse_oracle;
use stationary_casimir::regimes::{
    classify_regime, cylinder_critical_set, cylinder_energy, kerr_critical_set, kerr_energy,
    Observer,
};
use stationary_casimir::specfun::{
    bessel_k2, bessel_k2_integral_oracle, casimir_partial_sum, casimir_series,
};

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn metric() -> impl Strategy<Value = LocalMetric> {
    (
        0.1..3.0f64,
        -3.0..3.0f64,
        -3.0..-0.1f64,
        -3.0..-0.1f64,
        -3.0..-0.1f64,
    )
        .prop_map(|(tt, tx, xx, yy, zz)| LocalMetric::new(tt, tx, xx, yy, zz).unwrap())
}

fn bc() -> impl Strategy<Value = BoundaryCondition> {
    prop_oneof![
        Just(BoundaryCondition::Dirichlet),
        Just(BoundaryCondition::Mixed)
    ]
}

fn orientation() -> impl Strategy<Value = Orientation> {
    prop_oneof![Just(Orientation::X), Just(Orientation::Y)]
}

/// `(k, r)` with `cos(2k ln r) ≥ 0.2`.
fn cylinder_point() -> impl Strategy<Value = (f64, f64)> {
    (-1.5..1.5f64, 0.3..4.0f64).prop_filter("patch", |(k, r)| (2.0 * k * r.ln()).cos() >= 0.2)
}

/// `(M, a, r)` outside the horizon.
fn kerr_point() -> impl Strategy<Value = (f64, f64, f64)> {
    (0.5..2.0f64, -1.0..1.0f64, 1.05..15.0f64).prop_map(|(m, s, f)| {
        let a = m * s;
        let r_plus = m + (m * m - a * a).sqrt();
        (m, a, r_plus * f)
    })
}

/// Fractional position inside the admissible band.
fn interior() -> impl Strategy<Value = f64> {
    -0.99..0.99f64
}

fn kerr_observer(m: f64, a: f64, r: f64, s: f64) -> KerrParams {
    let (lo, hi) = kerr_angular_velocity_bounds(m, a, r).unwrap();
    let wd = kerr_drag_angular_velocity(m, a, r).unwrap();
    let omega = wd + s * (hi - lo) / 2.0;
    KerrParams::new(m, a, r, omega).unwrap()
}

fn cylinder_observer(k: f64, r: f64, s: f64) -> CylinderParams {
    let vd = cylinder_drag_velocity(k, r).unwrap();
    CylinderParams::new(k, r, vd + s * vd.hypot(1.0)).unwrap()
}

/// `g_tt/|g_xx|` of the dragged observer at the same radius, `|g̃|/g_xx²`.
fn drag_scale(g: &LocalMetric) -> f64 {
    (g.g_tilde() / (g.g_xx() * g.g_xx())).abs()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn scaling_of_the_tx_block(g in metric(), lambda in 0.01..100.0f64) {
        let s = g.scale_tx_block(lambda).unwrap();
        prop_assert!(rel(s.drag_parameter(), g.drag_parameter()) < 1e-14 || g.g_tx() == 0.0);
        prop_assert!(rel(s.g_tilde(), lambda * lambda * g.g_tilde()) < 1e-14);
        let cy = CavityConfig::new(Orientation::Y, BoundaryCondition::Dirichlet, 0.0, 1.0).unwrap();
        prop_assert!(rel(f_factor(&s, &cy).unwrap(), f_factor(&g, &cy).unwrap()) < 1e-14);
    }

    #[test]
    fn spectrum_matches_inverse_metric_form(
        g in metric(),
        kx in -5.0..5.0f64, ky in -5.0..5.0f64, kz in -5.0..5.0f64, m in 0.0..3.0f64,
    ) {
        prop_assume!(kx.abs() + ky.abs() + kz.abs() + m > 1e-3);
        let inv = metric_inverse_oracle(&g).unwrap();
        let (tt, tx, xx, yy, zz) = (inv[0], inv[1], inv[2], inv[3], inv[4]);
        let other = (xx * kx * kx + zz * kz * kz + yy * ky * ky - m * m) / (tx * tx / xx - tt);
        let w2 = mode_frequency_squared(&g, kx, ky, kz, m);
        prop_assert!(w2 > 0.0);
        prop_assert!(rel(w2, other) < 1e-13, "{} vs {}", w2, other);
    }

    #[test]
    fn analytic_inverse_matches_elimination(g in metric()) {
        let a = g.inverse();
        let n = metric_inverse_oracle(&g).unwrap();
        prop_assert!(rel(a.tt, n[0]) < 1e-13);
        prop_assert!((a.tx - n[1]).abs() <= 1e-13 * n[1].abs().max(a.tt.abs()));
        prop_assert!(rel(a.xx, n[2]) < 1e-13);
        prop_assert_eq!(a.yy, n[3]);
        prop_assert_eq!(a.zz, n[4]);
    }

    #[test]
    fn energy_ignores_g_zz(g in metric(), zz in -5.0..-0.01f64, o in orientation(), b in bc(), m in 0.0..2.0f64) {
        let h = LocalMetric::new(g.g_tt(), g.g_tx(), g.g_xx(), g.g_yy(), zz).unwrap();
        let c = CavityConfig::new(o, b, m, 1.0).unwrap();
        prop_assert_eq!(
            casimir_energy_density(&g, &c).unwrap().energy_density,
            casimir_energy_density(&h, &c).unwrap().energy_density
        );
    }

    #[test]
    fn g_yy_enters_only_the_y_length(g in metric(), yy in -5.0..-0.01f64, b in bc()) {
        let h = LocalMetric::new(g.g_tt(), g.g_tx(), g.g_xx(), yy, g.g_zz()).unwrap();
        let cx = CavityConfig::new(Orientation::X, b, 0.0, 1.0).unwrap();
        prop_assert_eq!(
            casimir_energy_density(&g, &cx).unwrap().energy_density,
            casimir_energy_density(&h, &cx).unwrap().energy_density
        );
        let cy = CavityConfig::new(Orientation::Y, b, 0.0, 1.0).unwrap();
        let eg = casimir_energy_density(&g, &cy).unwrap().energy_density;
        let eh = casimir_energy_density(&h, &cy).unwrap().energy_density;
        prop_assert!(rel(eh / eg, (g.g_yy() / yy).powi(2)) < 1e-13);
    }

    #[test]
    fn transverse_swap_is_a_symmetry_of_x_plates(g in metric(), b in bc(), m in 0.0..2.0f64) {
        let c = CavityConfig::new(Orientation::X, b, m, 1.0).unwrap();
        prop_assert_eq!(
            casimir_energy_density(&g, &c).unwrap(),
            casimir_energy_density(&g.swap_transverse(), &c).unwrap()
        );
    }

    #[test]
    fn y_prefactor_is_r_cubed_form(g in metric()) {
        let r2 = g.diagonality();
        let y = orientation_prefactor(&g, Orientation::Y);
        prop_assert!((y - (3.0 * r2 - 2.0) / r2.powf(1.5)).abs() <= 1e-12 * y.abs().max(1.0));
        let cy = CavityConfig::new(Orientation::Y, BoundaryCondition::Dirichlet, 0.0, 1.0).unwrap();
        prop_assert!(rel(f_factor(&g, &cy).unwrap(), r2) < 1e-13);
    }

    #[test]
    fn k2_matches_quadrature(t in 0.0..1.0f64) {
        let z = 1e-6 * (50.0f64 / 1e-6).powf(t);
        let oracle = bessel_k2_integral_oracle(z, 1e-13).unwrap();
        prop_assert!(rel(bessel_k2(z).unwrap(), oracle) <= 1e-10);
    }

    #[test]
    fn series_tail_bound_is_honest(x in 0.01..20.0f64, b in 0u8..2) {
        let s = casimir_series(x, b, 1e-10).unwrap();
        let longer = casimir_partial_sum(x, b, 4 * s.terms_used).unwrap();
        prop_assert!((longer - s.value).abs() <= s.tail_bound);
    }

    #[test]
    fn flat_energy_signs_and_mass_monotonicity(l in 0.2..5.0f64, m in 0.0..3.0f64, dm in 0.01..1.0f64) {
        let d0 = casimir_energy_flat_massive(m, l, BoundaryCondition::Dirichlet).unwrap();
        let d1 = casimir_energy_flat_massive(m + dm, l, BoundaryCondition::Dirichlet).unwrap();
        let mx = casimir_energy_flat_massive(m, l, BoundaryCondition::Mixed).unwrap();
        prop_assert!(d0 < 0.0 && mx > 0.0);
        prop_assert!(d1.abs() < d0.abs());
    }

    #[test]
    fn mixed_labels_invert_dirichlet(
        (m, a, r) in kerr_point(), s in interior(), o in orientation(), fm in 0.0..2.0f64,
    ) {
        let p = kerr_observer(m, a, r, s);
        let obs = Observer::Kerr { mass: m, a, r, omega: p.omega() };
        let d = classify_regime(&obs, &CavityConfig::new(o, BoundaryCondition::Dirichlet, fm, 1.0).unwrap());
        let x = classify_regime(&obs, &CavityConfig::new(o, BoundaryCondition::Mixed, fm, 1.0).unwrap());
        let flipped = match d {
            Regime::Attractive => Regime::Repulsive,
            Regime::Repulsive => Regime::Attractive,
            other => other,
        };
        prop_assert_eq!(x, flipped);
    }

    #[test]
    fn kerr_critical_velocities_are_nested((m, a, r) in kerr_point()) {
        prop_assert!(kerr_critical_set(m, a, r).unwrap().is_nested());
    }

    #[test]
    fn cylinder_critical_velocities_are_nested((k, r) in cylinder_point()) {
        let c = cylinder_critical_set(k, r).unwrap();
        prop_assert!(c.is_nested());
        let (lo, hi) = c.sign_flip_unit.unwrap();
        prop_assert!(c.bounds.0 < lo && lo < c.zero_energy.0 && c.zero_energy.1 < hi && hi < c.bounds.1);
    }

    #[test]
    fn zero_energy_surfaces_bracket_a_sign_change((m, a, r) in kerr_point(), o in 0usize..2) {
        let c = kerr_critical_set(m, a, r).unwrap();
        let zero = [c.zero_energy.0, c.zero_energy.1][o];
        let h = 1e-4 * (c.bounds.1 - c.bounds.0);
        let cy = CavityConfig::new(Orientation::Y, BoundaryCondition::Dirichlet, 0.0, 1.0).unwrap();
        let e = |w: f64| kerr_energy(&KerrParams::new(m, a, r, w).unwrap(), &cy).unwrap();
        prop_assert!(e(zero - h).signum() != e(zero + h).signum());
    }

    #[test]
    fn drag_velocity_is_neutral((m, a, r) in kerr_point(), (k, rc) in cylinder_point()) {
        let g = kerr_equatorial_local_metric(&KerrParams::zamo(m, a, r).unwrap()).unwrap();
        prop_assert!(g.g_tx().abs() <= 1e-14 * g.g_xx().abs());
        let vd = cylinder_drag_velocity(k, rc).unwrap();
        let g = cylinder_local_metric(&CylinderParams::new(k, rc, vd).unwrap()).unwrap();
        prop_assert!(g.g_tx().abs() <= 1e-14 * g.g_xx().abs());
    }

    #[test]
    fn g_tt_degenerates_at_the_bounds((m, a, r) in kerr_point(), (k, rc) in cylinder_point()) {
        let (lo, hi) = kerr_angular_velocity_bounds(m, a, r).unwrap();
        let off = 1e-6 * (hi - lo) / 2.0;
        for w in [lo + off, hi - off] {
            let g = kerr_equatorial_local_metric(&KerrParams::new(m, a, r, w).unwrap()).unwrap();
            prop_assert!(g.g_tt() > 0.0 && g.g_tt() < 1e-5 * g.g_xx().abs() * drag_scale(&g));
        }
        let (lo, hi) = cylinder_velocity_bounds(k, rc).unwrap();
        let off = 1e-6 * (hi - lo) / 2.0;
        for v in [lo + off, hi - off] {
            let g = cylinder_local_metric(&CylinderParams::new(k, rc, v).unwrap()).unwrap();
            prop_assert!(g.g_tt() > 0.0 && g.g_tt() < 1e-5 * g.g_xx().abs() * drag_scale(&g));
        }
    }

    #[test]
    fn g_tilde_closed_forms((m, a, r) in kerr_point(), s in interior(), (k, rc) in cylinder_point(), t in interior()) {
        let p = kerr_observer(m, a, r, s);
        let (_, delta, _) = kerr_auxiliaries(m, a, r);
        let g = kerr_equatorial_local_metric(&p).unwrap();
        prop_assert!(rel(g.g_tilde(), -delta / (r * r)) < 1e-12);
        let big_r = kerr_r(&p).unwrap();
        prop_assert!(rel(g.diagonality(), big_r * big_r) < 1e-12);

        let q = cylinder_observer(k, rc, t);
        let g = cylinder_local_metric(&q).unwrap();
        let (q_minus, _) = cylinder_exponents(k);
        prop_assert!(rel(g.g_tilde(), -rc.powf(4.0 * q_minus)) < 1e-12);
    }

    #[test]
    fn closed_forms_match_pipeline(
        (m, a, r) in kerr_point(), (k, rc) in cylinder_point(), s in interior(),
        o in orientation(), b in bc(), fm in 0.0..2.0f64, l in 0.3..3.0f64,
    ) {
        let c = CavityConfig::new(o, b, fm, l).unwrap();
        let p = kerr_observer(m, a, r, s);
        let generic = casimir_energy_density(&kerr_equatorial_local_metric(&p).unwrap(), &c).unwrap();
        let closed = kerr_energy(&p, &c).unwrap();
        let scale = generic.flat_reference.abs().max(closed.abs());
        prop_assert!((generic.energy_density - closed).abs() <= 1e-12 * scale);

        let q = cylinder_observer(k, rc, s);
        let generic = casimir_energy_density(&cylinder_local_metric(&q).unwrap(), &c).unwrap();
        let closed = cylinder_energy(&q, &c).unwrap();
        let scale = generic.flat_reference.abs().max(closed.abs());
        prop_assert!((generic.energy_density - closed).abs() <= 1e-12 * scale);
    }

    #[test]
    fn kerr_y_energy_dominates_x_at_equal_proper_length(
        (m, a, r) in kerr_point(), s in interior(), fm in 0.0..2.0f64, lp in 0.3..3.0f64,
    ) {
        let g = kerr_equatorial_local_metric(&kerr_observer(m, a, r, s)).unwrap();
        let b = BoundaryCondition::Dirichlet;
        let cx = CavityConfig::with_proper_length(&g, Orientation::X, b, fm, lp).unwrap();
        let cy = CavityConfig::with_proper_length(&g, Orientation::Y, b, fm, lp).unwrap();
        prop_assert!(rel(proper_length(&g, &cx), lp) < 1e-14);
        let ex = casimir_energy_density(&g, &cx).unwrap().energy_density;
        let ey = casimir_energy_density(&g, &cy).unwrap().energy_density;
        prop_assert!(ey >= ex);
    }

    #[test]
    fn sign_of_y_energy_follows_three_r_squared_minus_two(
        (m, a, r) in kerr_point(), s in interior(), b in bc(),
    ) {
        let p = kerr_observer(m, a, r, s);
        let g = kerr_equatorial_local_metric(&p).unwrap();
        let e = casimir_energy_density(&g, &CavityConfig::new(Orientation::Y, b, 0.0, 1.0).unwrap()).unwrap();
        let r2 = g.diagonality();
        prop_assume!((3.0 * r2 - 2.0).abs() > 1e-12);
        prop_assert_eq!(e.energy_density.signum(), (3.0 * r2 - 2.0).signum() * e.flat_reference.signum());
    }

    #[test]
    fn massless_energy_scales_as_inverse_fourth_power(l in 0.1..10.0f64, b in bc()) {
        let e1 = casimir_energy_flat_massless(1.0, b).unwrap();
        prop_assert!(rel(casimir_energy_flat_massless(l, b).unwrap(), e1 / l.powi(4)) < 1e-14);
    }
}
