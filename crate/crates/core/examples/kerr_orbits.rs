//! Characteristic angular velocities in the Kerr equatorial plane and the
//! energy of plates on circular geodesics.
//!
//!     cargo run --example kerr_orbits -- [M] [a]

use stationary_casimir::backgrounds::{kerr_equatorial_local_metric, KerrParams};
use stationary_casimir::casimir::casimir_energy_density;
use stationary_casimir::geometry::{BoundaryCondition, CavityConfig, Orientation};
use stationary_casimir::regimes::kerr_critical_set;

fn main() -> stationary_casimir::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<f64>().expect("numeric argument"));
    let mass = args.next().unwrap_or(1.0);
    let a = args.next().unwrap_or(0.7);
    let cy = CavityConfig::new(Orientation::Y, BoundaryCondition::Dirichlet, 0.0, 1.0)?;

    println!("M = {mass}, a = {a}");
    println!(
        "{:>6}  {:>10} {:>10} {:>10} {:>10} {:>10}  {:>10} {:>10}  {:>12}",
        "r", "Ω−", "Ω0−", "ω_d", "Ω0+", "Ω+", "Ωgeo−", "Ωgeo+", "eps_y/E_m(+)"
    );
    for r in [2.0, 2.5, 3.0, 4.0, 6.0, 8.0, 12.0, 20.0] {
        let c = kerr_critical_set(mass, a, r)?;
        let (geo_lo, geo_hi) = c.geodesic.expect("Kerr has geodesics");
        // the prograde orbit is timelike only outside the photon orbit
        let on_orbit = KerrParams::new(mass, a, r, geo_hi)
            .and_then(|p| kerr_equatorial_local_metric(&p))
            .and_then(|g| casimir_energy_density(&g, &cy))
            .map(|e| format!("{:+12.6}", e.energy_density / e.flat_reference))
            .unwrap_or_else(|_| format!("{:>12}", "not timelike"));
        println!(
            "{r:>6}  {:>+10.5} {:>+10.5} {:>+10.5} {:>+10.5} {:>+10.5}  {geo_lo:>+10.5} {geo_hi:>+10.5}  {on_orbit}",
            c.bounds.0, c.zero_energy.0, c.drag, c.zero_energy.1, c.bounds.1
        );
    }
    Ok(())
}
