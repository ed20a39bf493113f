//! Energy density between plates carried around a rotating cylinder, scanned
//! across the admissible velocity band. In the y orientation the sign flips
//! past the zero-energy velocities and reaches `−E_m` at the unit-flip ones.
//!
//!     cargo run --example cylinder_sign_flip -- [k] [r]

use stationary_casimir::backgrounds::{cylinder_local_metric, CylinderParams};
use stationary_casimir::casimir::casimir_energy_density;
use stationary_casimir::geometry::{BoundaryCondition, CavityConfig, Orientation};
use stationary_casimir::regimes::cylinder_critical_set;

fn main() -> stationary_casimir::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<f64>().expect("numeric argument"));
    let k = args.next().unwrap_or(0.3);
    let r = args.next().unwrap_or(1.7);

    let c = cylinder_critical_set(k, r)?;
    let (flip_lo, flip_hi) = c.sign_flip_unit.expect("cylinder has unit-flip velocities");
    println!("k = {k}, r = {r}");
    println!("  drag        v_d  = {:+.6}", c.drag);
    println!(
        "  bounds      v_±  = {:+.6}, {:+.6}",
        c.bounds.0, c.bounds.1
    );
    println!(
        "  zero energy v_0± = {:+.6}, {:+.6}",
        c.zero_energy.0, c.zero_energy.1
    );
    println!("  unit flip   v̂_±  = {flip_lo:+.6}, {flip_hi:+.6}");

    let bc = BoundaryCondition::Dirichlet;
    let cx = CavityConfig::new(Orientation::X, bc, 0.0, 1.0)?;
    let cy = CavityConfig::new(Orientation::Y, bc, 0.0, 1.0)?;
    println!(
        "\n{:>10}  {:>12}  {:>12}  regime_y",
        "v", "eps_x/E_m", "eps_y/E_m"
    );
    let steps = 16;
    for i in 1..steps {
        let v = c.bounds.0 + (c.bounds.1 - c.bounds.0) * i as f64 / steps as f64;
        let g = cylinder_local_metric(&CylinderParams::new(k, r, v)?)?;
        let ex = casimir_energy_density(&g, &cx)?;
        let ey = casimir_energy_density(&g, &cy)?;
        println!(
            "{v:>+10.5}  {:>+12.6}  {:>+12.6}  {}",
            ex.energy_density / ex.flat_reference,
            ey.energy_density / ey.flat_reference,
            ey.regime
        );
    }
    for v in [flip_lo, flip_hi] {
        let g = cylinder_local_metric(&CylinderParams::new(k, r, v)?)?;
        let ey = casimir_energy_density(&g, &cy)?;
        println!(
            "at v = {v:+.6}: eps_y/E_m = {:+.12}",
            ey.energy_density / ey.flat_reference
        );
    }
    Ok(())
}
