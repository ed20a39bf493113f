//! Flat-space Casimir energy density for a massless and a massive scalar.
//!
//!     cargo run --example flat_casimir

use stationary_casimir::casimir::{casimir_energy_flat_massive, casimir_energy_flat_massless};
use stationary_casimir::geometry::BoundaryCondition;

fn main() -> stationary_casimir::Result<()> {
    let l = 1.0;
    for bc in [BoundaryCondition::Dirichlet, BoundaryCondition::Mixed] {
        println!(
            "{bc:?}: massless E = {:+.12e}",
            casimir_energy_flat_massless(l, bc)?
        );
    }

    println!(
        "\n{:>8}  {:>20}  {:>20}",
        "m L_p", "E_m (Dirichlet)", "E_m (mixed)"
    );
    for m in [0.0, 1e-3, 0.1, 0.5, 1.0, 2.0, 5.0] {
        let d = casimir_energy_flat_massive(m, l, BoundaryCondition::Dirichlet)?;
        let x = casimir_energy_flat_massive(m, l, BoundaryCondition::Mixed)?;
        println!("{m:>8}  {d:>+20.12e}  {x:>+20.12e}");
    }
    Ok(())
}
