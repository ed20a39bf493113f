//! Runs the dual-path oracle checks and prints the worst gap per quantity.
//!
//!     cargo run --release --example verify -- [seed] [samples]

use std::collections::BTreeMap;

use stationary_casimir::oracle::verify_all;

fn main() -> stationary_casimir::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u64>().expect("integer argument"));
    let seed = args.next().unwrap_or(0);
    let samples = args.next().unwrap_or(20);
    let reports = verify_all(seed, samples)?;

    let mut worst: BTreeMap<String, (f64, f64, usize)> = BTreeMap::new();
    for r in &reports {
        let kind = r.quantity_name.split('(').next().unwrap_or("").to_owned();
        let entry = worst.entry(kind).or_insert((0.0, r.tolerance, 0));
        entry.0 = entry.0.max(r.relative_gap);
        entry.2 += usize::from(!r.passed);
    }
    println!("{:<28}  {:>10}  {:>8}  failed", "check", "worst gap", "tol");
    for (kind, (gap, tol, failed)) in worst {
        println!("{kind:<28}  {gap:>10.3e}  {tol:>8.1e}  {failed}");
    }
    Ok(())
}
