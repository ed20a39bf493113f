//! Regime map for Kerr with M = 1, a = 0.7: writes `kerr_map.csv` and
//! `kerr_map.csv.curves.json` into the given directory (default: current).
//!
//!     cargo run --release --example kerr_regime_map -- /tmp

use std::path::PathBuf;

use stationary_casimir::casimir::Regime;
use stationary_casimir::geometry::BoundaryCondition;
use stationary_casimir::sweep::{sweep, write_outputs, SweepBackground, SweepSpec};

fn main() -> stationary_casimir::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_default();
    let spec = SweepSpec {
        background: SweepBackground::Kerr { mass: 1.0, a: 0.7 },
        r_range: (1.8, 8.0),
        r_steps: 200,
        velocity_range: None,
        velocity_steps: 200,
        bc: BoundaryCondition::Dirichlet,
        field_mass: 0.0,
        plate_separation: 1.0,
    };
    let result = sweep(&spec)?;
    let path = dir.join("kerr_map.csv");
    write_outputs(&result, &path)?;

    let count = |f: &dyn Fn(Regime) -> bool| result.rows.iter().filter(|r| f(r.regime_y)).count();
    println!("wrote {} rows to {}", result.rows.len(), path.display());
    println!("  y attractive: {}", count(&|g| g == Regime::Attractive));
    println!("  y repulsive:  {}", count(&|g| g == Regime::Repulsive));
    Ok(())
}
