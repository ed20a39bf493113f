//! Modified Bessel function K₂ and the Bessel series behind the massive Casimir energy.
//!
//! K₀ and K₁ come from their ascending series for `z ≤ 2` and from Steed's
//! continued fraction (Temme's CF2) above that; K₂ follows by the upward
//! recurrence `K₂ = K₀ + (2/z) K₁`, which is stable for K.

use crate::error::{Error, Result};
use crate::quadrature;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_606_512_090_082_402_43;

/// Arguments above this return an exact zero flagged as underflow.
pub const K2_UNDERFLOW_ARG: f64 = 700.0;

const SERIES_SWITCH: f64 = 2.0;
const MAX_TERMS_LIMIT: f64 = 1e8;

/// K₂ together with an underflow flag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct K2Value {
    pub value: f64,
    /// True when `z` exceeded [`K2_UNDERFLOW_ARG`] and `value` was forced to zero.
    pub underflow: bool,
}

/// Truncated Bessel series with an absolute truncation bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult {
    pub value: f64,
    pub terms_used: usize,
    /// Upper bound on `|value - exact sum|`: the discarded tail plus final rounding.
    pub tail_bound: f64,
}

fn check_arg(z: f64) -> Result<()> {
    if !z.is_finite() || z <= 0.0 {
        return Err(Error::Domain(format!(
            "Bessel argument must be finite and positive, got {z}"
        )));
    }
    Ok(())
}

/// (K₀(z), K₁(z)) from the ascending series, `0 < z ≤ 2`.
fn k01_series(z: f64) -> (f64, f64) {
    let t = 0.25 * z * z;
    let log_term = (0.5 * z).ln() + EULER_GAMMA;
    // c0 = t^k/(k!)^2, c1 = t^k/(k!(k+1)!), h = H_k
    let mut c0 = 1.0;
    let mut c1 = 1.0;
    let mut h = 0.0;
    let mut k0 = -log_term;
    let mut k1 = log_term - 0.5;
    for k in 1..200 {
        let kf = k as f64;
        c0 *= t / (kf * kf);
        c1 *= t / (kf * (kf + 1.0));
        h += 1.0 / kf;
        let d0 = c0 * (h - log_term);
        let d1 = c1 * (log_term - h - 0.5 / (kf + 1.0));
        k0 += d0;
        k1 += d1;
        if d0.abs() <= f64::EPSILON * k0.abs() * 0.1 && d1.abs() <= f64::EPSILON * k1.abs() * 0.1 {
            break;
        }
    }
    (k0, 1.0 / z + 0.5 * z * k1)
}

/// (eᶻK₀(z), eᶻK₁(z)) from Steed's continued fraction, `z ≥ 2`.
fn k01_scaled_cf(z: f64) -> (f64, f64) {
    let a1 = 0.25;
    let mut b = 2.0 * (1.0 + z);
    let mut d = 1.0 / b;
    let mut delh = d;
    let mut h = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let mut c = a1;
    let mut q = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 1..10_000 {
        let fi = i as f64;
        a -= 2.0 * fi;
        c = -a * c / (fi + 1.0);
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh *= b * d - 1.0;
        h += delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < f64::EPSILON * 0.5 {
            break;
        }
    }
    let h = a1 * h;
    let k0 = (std::f64::consts::PI / (2.0 * z)).sqrt() / s;
    let k1 = k0 * (z + 0.5 - h) / z;
    (k0, k1)
}

/// K₂(z) with the underflow flag.
pub fn bessel_k2_eval(z: f64) -> Result<K2Value> {
    check_arg(z)?;
    if z > K2_UNDERFLOW_ARG {
        return Ok(K2Value {
            value: 0.0,
            underflow: true,
        });
    }
    let value = if z <= SERIES_SWITCH {
        let (k0, k1) = k01_series(z);
        k0 + 2.0 / z * k1
    } else {
        let (k0, k1) = k01_scaled_cf(z);
        (k0 + 2.0 / z * k1) * (-z).exp()
    };
    Ok(K2Value {
        value,
        underflow: false,
    })
}

/// Modified Bessel function of the second kind, order two.
///
/// Returns exactly zero for `z >` [`K2_UNDERFLOW_ARG`].
pub fn bessel_k2(z: f64) -> Result<f64> {
    bessel_k2_eval(z).map(|k| k.value)
}

/// K₂(z) as `∫₀^∞ exp(−z cosh t) cosh(2t) dt` by adaptive Gauss–Kronrod quadrature.
///
/// Shares no code with [`bessel_k2`]; it exists to check it. The integrand is
/// evaluated in the scaled form `exp(−z (cosh t − 1))` and the factor `e^{−z}`
/// applied at the end.
pub fn bessel_k2_integral_oracle(z: f64, tol: f64) -> Result<f64> {
    check_arg(z)?;
    if !(tol > 0.0 && tol < 1e-6) {
        return Err(Error::Domain(format!(
            "tolerance must be in (0, 1e-6), got {tol}"
        )));
    }
    // log of the scaled integrand: 2t − z(cosh t − 1) + ln((1 + e^{−4t})/2)
    let log_f = |t: f64| 2.0 * t - z * (t.cosh() - 1.0);
    let peak = (2.0 / z).asinh();
    let peak_log = log_f(peak);
    // Walk past the peak until the integrand is 80 e-folds below its maximum.
    let mut upper = peak + 1.0;
    while log_f(upper) > peak_log - 80.0 {
        upper += 1.0 + 0.5 * (upper - peak);
    }
    let f = |t: f64| {
        let e = (2.0 * t - z * (t.cosh() - 1.0)).exp();
        0.5 * e * (1.0 + (-4.0 * t).exp())
    };
    // Split at the peak so both panels start smooth.
    let left = quadrature::integrate(f, 0.0, peak.max(1e-3), tol * 0.25, 4000)?;
    let right = quadrature::integrate(f, peak.max(1e-3), upper, tol * 0.25, 4000)?;
    Ok((left.value + right.value) * (-z).exp())
}

fn check_parity(b: u8) -> Result<f64> {
    match b {
        0 => Ok(1.0),
        1 => Ok(-1.0),
        _ => Err(Error::Domain(format!(
            "boundary parity b must be 0 or 1, got {b}"
        ))),
    }
}

/// Largest number of terms [`casimir_series`] may take at argument `x`.
pub fn series_term_budget(x: f64) -> f64 {
    (40.0 / x).ceil() + 64.0
}

/// Plain partial sum `Σ_{n=1}^{terms} (−1)^{bn} n^{−2} K₂(n x)`, compensated.
pub fn casimir_partial_sum(x: f64, b: u8, terms: usize) -> Result<f64> {
    check_arg(x)?;
    let sign = check_parity(b)?;
    let mut acc = Neumaier::default();
    let mut s = 1.0;
    for n in 1..=terms {
        s *= sign;
        let nf = n as f64;
        let k = bessel_k2_eval(nf * x)?;
        if k.underflow {
            break;
        }
        acc.add(s * k.value / (nf * nf));
    }
    Ok(acc.sum())
}

/// `S(x, b) = Σ_{n≥1} (−1)^{bn} n^{−2} K₂(n x)` to relative accuracy `rel_tol`.
///
/// Terms are added until the geometric majorant of the tail,
/// `N^{−2} K₂(N x) e^{−x}/(1 − e^{−x})` (valid because `eᶻK₂(z)` decreases),
/// drops below `rel_tol` times the certified magnitude of the sum. At least
/// `max(1, 2/x)` terms are always taken.
pub fn casimir_series(x: f64, b: u8, rel_tol: f64) -> Result<SeriesResult> {
    check_arg(x)?;
    let sign = check_parity(b)?;
    if !(rel_tol > 0.0 && rel_tol <= 1e-8) {
        return Err(Error::Domain(format!(
            "series tolerance must be in (0, 1e-8], got {rel_tol}"
        )));
    }
    let budget = series_term_budget(x);
    if budget > MAX_TERMS_LIMIT {
        return Err(Error::SeriesRange { x, terms: budget });
    }
    let budget = budget as usize;
    let min_terms = (2.0 / x).ceil().max(1.0) as usize;
    let ratio = (-x).exp() / -(-x).exp_m1();

    let mut acc = Neumaier::default();
    let mut s = 1.0;
    let mut tail = f64::INFINITY;
    for n in 1..=budget {
        s *= sign;
        let nf = n as f64;
        let k = bessel_k2_eval(nf * x)?;
        if k.underflow {
            // Remaining terms are below the smallest normal number.
            return Ok(SeriesResult {
                value: acc.sum(),
                terms_used: n.max(1),
                tail_bound: f64::MIN_POSITIVE * (1.0 + ratio) + rounding(acc.sum()),
            });
        }
        let term = k.value / (nf * nf);
        acc.add(s * term);
        tail = term * ratio;
        let sum = acc.sum();
        if n >= min_terms && tail <= rel_tol * (sum.abs() - tail) {
            return Ok(SeriesResult {
                value: sum,
                terms_used: n,
                tail_bound: tail + rounding(sum),
            });
        }
    }
    Err(Error::SeriesRange {
        x,
        terms: budget as f64 + tail,
    })
}

/// Final rounding of a compensated sum.
fn rounding(sum: f64) -> f64 {
    2.0 * f64::EPSILON * sum.abs()
}

#[derive(Debug, Default, Clone, Copy)]
struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    fn sum(&self) -> f64 {
        self.sum + self.comp
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn k2_at_one_matches_quadrature() {
        let oracle = bessel_k2_integral_oracle(1.0, 1e-12).unwrap();
        // frozen from the quadrature oracle
        assert!(rel(oracle, 1.624_838_898_635_177_5) < 1e-12, "{oracle}");
        assert!(rel(bessel_k2(1.0).unwrap(), oracle) < 1e-11);
    }

    #[test]
    fn k2_at_ten_matches_quadrature() {
        let oracle = bessel_k2_integral_oracle(10.0, 1e-12).unwrap();
        assert!(rel(bessel_k2(10.0).unwrap(), oracle) < 1e-11);
    }

    #[test]
    fn k2_small_argument_asymptote() {
        let z = 1e-6;
        let scaled = bessel_k2(z).unwrap() * z * z / 2.0;
        assert!((scaled - 1.0).abs() <= 1e-6);
        let oracle = bessel_k2_integral_oracle(1e-4, 1e-10).unwrap();
        assert!(rel(oracle, 2.0 / 1e-8) < 1e-3);
    }

    #[test]
    fn k2_large_argument_asymptote() {
        let z: f64 = 50.0;
        let asym = (std::f64::consts::PI / (2.0 * z)).sqrt() * (-z).exp();
        assert!(rel(bessel_k2(z).unwrap(), asym) < 0.05);
    }

    #[test]
    fn k2_is_continuous_across_method_switch() {
        let below = bessel_k2(SERIES_SWITCH).unwrap();
        let above = bessel_k2(SERIES_SWITCH * (1.0 + 1e-15)).unwrap();
        assert!(rel(below, above) < 1e-13);
        let (k0s, k1s) = k01_series(2.0);
        let (k0c, k1c) = k01_scaled_cf(2.0);
        let e = (-2.0f64).exp();
        assert!(rel(k0s, k0c * e) < 1e-14);
        assert!(rel(k1s, k1c * e) < 1e-14);
    }

    #[test]
    fn k2_domain_and_underflow() {
        assert!(bessel_k2(0.0).is_err());
        assert!(bessel_k2(-1.0).is_err());
        assert!(bessel_k2(f64::NAN).is_err());
        assert!(bessel_k2(f64::INFINITY).is_err());
        let k = bessel_k2_eval(701.0).unwrap();
        assert!(k.underflow && k.value == 0.0);
        let k = bessel_k2_eval(700.0).unwrap();
        assert!(!k.underflow && k.value > 0.0 && k.value.is_normal());
    }

    #[test]
    fn oracle_rejects_loose_tolerance() {
        assert!(bessel_k2_integral_oracle(1.0, 1e-3).is_err());
        assert!(bessel_k2_integral_oracle(1.0, 0.0).is_err());
    }

    #[test]
    fn series_dirichlet_at_two() {
        let s = casimir_series(2.0, 0, 1e-10).unwrap();
        assert!(s.value > 0.0);
        assert!(s.terms_used <= 30, "{}", s.terms_used);
        let reference = casimir_partial_sum(2.0, 0, 10_000).unwrap();
        assert!((s.value - reference).abs() <= s.tail_bound);
    }

    #[test]
    fn series_mixed_is_smaller_and_negative() {
        let d = casimir_series(2.0, 0, 1e-10).unwrap();
        let m = casimir_series(2.0, 1, 1e-10).unwrap();
        assert!(m.value < 0.0);
        assert!(m.value.abs() < d.value);
    }

    #[test]
    fn series_small_argument_recovers_zeta_four() {
        let x = 1e-3;
        let s = casimir_series(x, 0, 1e-10).unwrap();
        let zeta4 = std::f64::consts::PI.powi(4) / 90.0;
        assert!(rel(s.value * x * x / 2.0, zeta4) < 1e-5);
    }

    #[test]
    fn series_signs_on_grid() {
        for &x in &[0.01, 0.1, 1.0, 5.0, 20.0] {
            assert!(casimir_series(x, 0, 1e-10).unwrap().value > 0.0);
            assert!(casimir_series(x, 1, 1e-10).unwrap().value < 0.0);
        }
    }

    #[test]
    fn series_range_error_for_tiny_argument() {
        assert!(matches!(
            casimir_series(1e-7, 0, 1e-10),
            Err(Error::SeriesRange { .. })
        ));
        assert!(casimir_series(1.0, 2, 1e-10).is_err());
        assert!(casimir_series(1.0, 0, 1e-6).is_err());
    }
}
