//! K₂ against its integral representation, and the truncated plate series
//! with its certified tail bound.
//!
//!     cargo run --example bessel_series

use stationary_casimir::specfun::{
    bessel_k2, bessel_k2_integral_oracle, casimir_partial_sum, casimir_series,
};

fn main() -> stationary_casimir::Result<()> {
    println!("{:>10}  {:>24}  {:>10}", "z", "K2(z)", "rel. gap");
    for z in [1e-6, 1e-3, 0.1, 1.0, 2.0, 5.0, 20.0, 50.0] {
        let k = bessel_k2(z)?;
        let q = bessel_k2_integral_oracle(z, 1e-13)?;
        println!("{z:>10.1e}  {k:>24.16e}  {:>10.2e}", (k - q).abs() / q);
    }

    println!(
        "\n{:>6} {:>2}  {:>24}  {:>6}  {:>10}  {:>10}",
        "x", "b", "S(x, b)", "terms", "tail", "4x shift"
    );
    for x in [0.01, 0.2, 2.0, 10.0] {
        for b in [0u8, 1] {
            let s = casimir_series(x, b, 1e-10)?;
            let longer = casimir_partial_sum(x, b, 4 * s.terms_used)?;
            println!(
                "{x:>6} {b:>2}  {:>24.16e}  {:>6}  {:>10.2e}  {:>10.2e}",
                s.value,
                s.terms_used,
                s.tail_bound,
                (longer - s.value).abs()
            );
        }
    }
    Ok(())
}
