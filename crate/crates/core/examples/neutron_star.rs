//! Weak-field estimate for plates on the surface of a millisecond pulsar:
//! 1.4 solar masses, radius 10 km, spinning at 190 rad/s.
//!
//!     cargo run --example neutron_star

use stationary_casimir::backgrounds::{kerr_equatorial_local_metric, KerrParams};
use stationary_casimir::casimir::casimir_energy_density;
use stationary_casimir::geometry::{BoundaryCondition, CavityConfig, Orientation};
use stationary_casimir::units::{convert, Direction, QuantityKind};

fn main() -> stationary_casimir::Result<()> {
    let mass = convert(1.4, QuantityKind::MassSolar, Direction::ToGeometric)?;
    let omega = convert(
        190.0,
        QuantityKind::AngularVelocitySi,
        Direction::ToGeometric,
    )?;
    let r = 1e4;
    println!("M = {mass:.3} m, r = {r} m, Omega = {omega:.6e} 1/m");

    let cy = CavityConfig::new(Orientation::Y, BoundaryCondition::Dirichlet, 0.0, 1.0)?;
    // a = 0, and a uniform sphere with J = (2/5) M r² Ω
    for (label, a) in [
        ("non-rotating exterior", 0.0),
        ("uniform-sphere spin", 0.4 * r * r * omega),
    ] {
        let g = kerr_equatorial_local_metric(&KerrParams::new(mass, a, r, omega)?)?;
        let beta = 1.0 - g.diagonality();
        let x = beta / (1.0 + (1.0 - beta).sqrt());
        let e = casimir_energy_density(&g, &cy)?;
        let ratio = e.energy_density / e.flat_reference;
        println!("\n{label} (a = {a:.4} m)");
        println!("  x = 1 - R          = {x:.6e}");
        println!("  eps_y/E_m          = {ratio:.15}");
        println!("  1 - 3x             = {:.15}", 1.0 - 3.0 * x);
        println!("  relative reduction = {:.3e}", 1.0 - ratio);
    }
    Ok(())
}
