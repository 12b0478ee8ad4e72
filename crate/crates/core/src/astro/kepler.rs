use std::f64::consts::{PI, TAU};

use super::{AstroError, AstroResult};

/// Iteration cap shared by both Kepler branches.
pub const KEPLER_MAX_ITER: usize = 100;

/// Solves `E - e sin E = M` for the eccentric anomaly, `0 <= e < 1`.
///
/// Newton iteration kept inside the bracket `|E - M| <= e`, falling back to
/// bisection whenever a step would leave it.
pub fn solve_kepler(mean_anomaly: f64, e: f64) -> AstroResult<f64> {
    if !(0.0..1.0).contains(&e) || !mean_anomaly.is_finite() {
        return Err(AstroError::InvalidInput("elliptic Kepler equation needs 0 <= e < 1 and finite M"));
    }
    if e == 0.0 {
        return Ok(mean_anomaly);
    }
    // Reduce to [-pi, pi) and shift back at the end.
    let turns = ((mean_anomaly + PI) / TAU).floor();
    let m = mean_anomaly - turns * TAU;
    let residual = |ea: f64| ea - e * ea.sin() - m;

    let (mut lo, mut hi) = (m - e, m + e);
    let mut ea = if e < 0.8 { m + e * m.sin() } else { PI.copysign(m) };
    if ea <= lo || ea >= hi {
        ea = m;
    }
    for _ in 0..KEPLER_MAX_ITER {
        let f = residual(ea);
        if f == 0.0 {
            return Ok(ea + turns * TAU);
        }
        if f < 0.0 {
            lo = lo.max(ea);
        } else {
            hi = hi.min(ea);
        }
        let df = 1.0 - e * ea.cos();
        let mut next = ea - f / df;
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        let step = (next - ea).abs();
        ea = next;
        if step <= 4.0 * f64::EPSILON * ea.abs().max(1.0) {
            return Ok(ea + turns * TAU);
        }
    }
    Err(AstroError::NoConvergence {
        what: "elliptic Kepler equation",
        iterations: KEPLER_MAX_ITER,
        best: ea + turns * TAU,
        residual: residual(ea),
    })
}

/// Solves `e sinh H - H = M` for the hyperbolic anomaly, `e > 1`.
pub fn solve_kepler_hyperbolic(mean_anomaly: f64, e: f64) -> AstroResult<f64> {
    if !(e > 1.0) || !mean_anomaly.is_finite() {
        return Err(AstroError::InvalidInput("hyperbolic Kepler equation needs e > 1 and finite M"));
    }
    // Odd in M: solve for |M| and restore the sign.
    let m = mean_anomaly.abs();
    if m == 0.0 {
        return Ok(0.0);
    }
    let residual = |h: f64| e * h.sinh() - h - m;

    // e sinh H >= e sinh H - H >= (e - 1) H  for H >= 0
    let mut lo = (m / e).asinh();
    let mut hi = (m / (e - 1.0)).min((2.0 * m / e + 2.0).ln() + 1.0).max(lo);
    while residual(hi) < 0.0 {
        hi *= 2.0;
    }
    let mut h = if m / e > 1.0 { (2.0 * m / e).ln() + 0.5 } else { m / (e - 1.0) }.clamp(lo, hi);
    for _ in 0..KEPLER_MAX_ITER {
        let f = residual(h);
        if f == 0.0 {
            return Ok(h.copysign(mean_anomaly));
        }
        if f < 0.0 {
            lo = lo.max(h);
        } else {
            hi = hi.min(h);
        }
        let df = e * h.cosh() - 1.0;
        let mut next = h - f / df;
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        let step = (next - h).abs();
        h = next;
        if step <= 4.0 * f64::EPSILON * h.abs().max(1.0) {
            return Ok(h.copysign(mean_anomaly));
        }
    }
    Err(AstroError::NoConvergence {
        what: "hyperbolic Kepler equation",
        iterations: KEPLER_MAX_ITER,
        best: h.copysign(mean_anomaly),
        residual: residual(h),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if (f(mid) > 0.0) == (f(hi) > 0.0) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn zero_mean_anomaly() {
        assert_eq!(solve_kepler(0.0, 0.7).unwrap(), 0.0);
        assert_eq!(solve_kepler_hyperbolic(0.0, 1.7).unwrap(), 0.0);
    }

    #[test]
    fn circular_identity() {
        assert_eq!(solve_kepler(2.5, 0.0).unwrap(), 2.5);
    }

    #[test]
    fn matches_bisection_oracle() {
        let oracle = bisect(|x| x - 0.5 * x.sin() - 1.0, 0.0, PI);
        let ea = solve_kepler(1.0, 0.5).unwrap();
        assert!((ea - oracle).abs() < 1e-10, "{ea} vs {oracle}");
        // frozen from the oracle
        assert!((ea - 1.498_701_133_517_848).abs() < 1e-10);
    }

    #[test]
    fn hyperbolic_matches_bisection_oracle() {
        let oracle = bisect(|h| 2.0 * h.sinh() - h - 3.0, 0.0, 10.0);
        let h = solve_kepler_hyperbolic(3.0, 2.0).unwrap();
        assert!((h - oracle).abs() < 1e-10);
        assert!((h - 1.562_846_184_058_93).abs() < 1e-10);
        assert!((solve_kepler_hyperbolic(-3.0, 2.0).unwrap() + oracle).abs() < 1e-10);
    }

    #[test]
    fn rejects_invalid_eccentricity() {
        assert!(solve_kepler(1.0, 1.0).is_err());
        assert!(solve_kepler(1.0, -0.1).is_err());
        assert!(solve_kepler_hyperbolic(1.0, 1.0).is_err());
        assert!(solve_kepler(f64::NAN, 0.1).is_err());
    }

    #[test]
    fn large_mean_anomaly_keeps_turns() {
        let m = 1000.0;
        let ea = solve_kepler(m, 0.3).unwrap();
        assert!((ea - 0.3 * ea.sin() - m).abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn elliptic_residual(m in -10.0f64..10.0, e in 0.0f64..0.999) {
            let ea = solve_kepler(m, e).unwrap();
            prop_assert!((ea - e * ea.sin() - m).abs() <= 1e-12);
        }

        #[test]
        fn hyperbolic_residual(m in -20.0f64..20.0, e in 1.0001f64..6.0) {
            let h = solve_kepler_hyperbolic(m, e).unwrap();
            prop_assert!((e * h.sinh() - h - m).abs() <= 1e-12);
        }
    }
}
