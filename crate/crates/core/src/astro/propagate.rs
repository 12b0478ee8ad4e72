use super::kepler::{solve_kepler, solve_kepler_hyperbolic, KEPLER_MAX_ITER};
use super::{AstroError, AstroResult, StateVector};

/// |alpha * r0| below this is handled with universal variables.
const NEAR_PARABOLIC: f64 = 1e-10;
/// |h| / (|r||v|) below this is a rectilinear orbit.
const RECTILINEAR: f64 = 1e-12;

/// Advances `s` by `dt` seconds along its osculating two-body conic.
///
/// Elliptic and hyperbolic orbits go through the Kepler equation in
/// eccentric (hyperbolic) anomaly and Lagrange f/g coefficients; the
/// near-parabolic band uses universal variables.
pub fn propagate(s: &StateVector, dt: f64, mu: f64) -> AstroResult<StateVector> {
    if !(mu > 0.0) || !dt.is_finite() {
        return Err(AstroError::InvalidInput("propagate needs mu > 0 and finite dt"));
    }
    let r0 = s.r.norm();
    let v0 = s.v.norm();
    if !(r0 > 0.0) || !r0.is_finite() || !v0.is_finite() {
        return Err(AstroError::DegenerateConic);
    }
    if dt == 0.0 {
        return Ok(*s);
    }
    if s.angular_momentum().norm() <= RECTILINEAR * r0 * v0 {
        return Err(AstroError::DegenerateConic);
    }
    let rv = s.r.dot(&s.v);
    let alpha = 2.0 / r0 - v0 * v0 / mu;

    let (f, g, fdot_scale, gdot_of) = if alpha * r0 > NEAR_PARABOLIC {
        elliptic_coefficients(r0, rv, alpha, dt, mu)?
    } else if alpha * r0 < -NEAR_PARABOLIC {
        hyperbolic_coefficients(r0, rv, alpha, dt, mu)?
    } else {
        universal_coefficients(r0, rv, alpha, dt, mu)?
    };
    let r = s.r * f + s.v * g;
    let rn = r.norm();
    let fdot = fdot_scale / (rn * r0);
    let gdot = 1.0 - gdot_of / rn;
    Ok(StateVector::new(r, s.r * fdot + s.v * gdot))
}

/// Returns (f, g, fdot * r * r0, (1 - gdot) * r).
type Coefficients = (f64, f64, f64, f64);

fn elliptic_coefficients(r0: f64, rv: f64, alpha: f64, dt: f64, mu: f64) -> AstroResult<Coefficients> {
    let a = 1.0 / alpha;
    let sqrt_mu_a = (mu * a).sqrt();
    let e_cos = 1.0 - r0 / a;
    let e_sin = rv / sqrt_mu_a;
    let e = e_cos.hypot(e_sin);
    let ea0 = if e > 0.0 { e_sin.atan2(e_cos) } else { 0.0 };
    let n = (mu / (a * a * a)).sqrt();
    let m = ea0 - e_sin + n * dt;
    let ea = solve_kepler(m, e.min(1.0 - f64::EPSILON))?;
    let de = ea - ea0;
    let half = (0.5 * de).sin();
    let one_minus_cos = 2.0 * half * half;
    let f = 1.0 - a / r0 * one_minus_cos;
    let g = dt - (de - de.sin()) / n;
    Ok((f, g, -sqrt_mu_a * de.sin(), a * one_minus_cos))
}

fn hyperbolic_coefficients(r0: f64, rv: f64, alpha: f64, dt: f64, mu: f64) -> AstroResult<Coefficients> {
    let a = 1.0 / alpha;
    let sqrt_mu_ma = (-mu * a).sqrt();
    let e_cosh = 1.0 - r0 / a;
    let e_sinh = rv / sqrt_mu_ma;
    let e = ((e_cosh - e_sinh) * (e_cosh + e_sinh)).sqrt();
    let h0 = (e_sinh / e).asinh();
    let n = (mu / (-a * a * a)).sqrt();
    let m = e_sinh - h0 + n * dt;
    let h = solve_kepler_hyperbolic(m, e.max(1.0 + f64::EPSILON))?;
    let dh = h - h0;
    let half = (0.5 * dh).sinh();
    let cosh_minus_one = 2.0 * half * half;
    let f = 1.0 + a / r0 * cosh_minus_one;
    let g = dt - (dh.sinh() - dh) / n;
    Ok((f, g, -sqrt_mu_ma * dh.sinh(), -a * cosh_minus_one))
}

/// Stumpff functions C(z), S(z).
fn stumpff(z: f64) -> (f64, f64) {
    if z.abs() < 1e-3 {
        let c = 0.5 - z / 24.0 + z * z / 720.0 - z * z * z / 40320.0;
        let s = 1.0 / 6.0 - z / 120.0 + z * z / 5040.0 - z * z * z / 362880.0;
        (c, s)
    } else if z > 0.0 {
        let sz = z.sqrt();
        ((1.0 - sz.cos()) / z, (sz - sz.sin()) / (z * sz))
    } else {
        let sz = (-z).sqrt();
        ((sz.cosh() - 1.0) / -z, (sz.sinh() - sz) / (-z * sz))
    }
}

fn universal_coefficients(r0: f64, rv: f64, alpha: f64, dt: f64, mu: f64) -> AstroResult<Coefficients> {
    let sqrt_mu = mu.sqrt();
    let sigma0 = rv / sqrt_mu;
    let target = sqrt_mu * dt;
    // F(chi) is increasing with dF/dchi = r > 0.
    let eval = |chi: f64| {
        let z = alpha * chi * chi;
        let (c, s) = stumpff(z);
        let chi2 = chi * chi;
        let f = sigma0 * chi2 * c + (1.0 - alpha * r0) * chi2 * chi * s + r0 * chi - target;
        let r = chi2 * c + sigma0 * chi * (1.0 - z * s) + r0 * (1.0 - z * c);
        (f, r)
    };
    let (mut lo, mut hi) = if dt > 0.0 { (0.0, target / r0) } else { (target / r0, 0.0) };
    while eval(hi).0 < 0.0 {
        hi = lo + 2.0 * (hi - lo);
    }
    while eval(lo).0 > 0.0 {
        lo = hi - 2.0 * (hi - lo);
    }
    let mut chi = 0.5 * (lo + hi);
    let mut converged = false;
    for _ in 0..KEPLER_MAX_ITER {
        let (f, r) = eval(chi);
        if f == 0.0 {
            converged = true;
            break;
        }
        if f < 0.0 {
            lo = chi;
        } else {
            hi = chi;
        }
        let mut next = chi - f / r;
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        let step = (next - chi).abs();
        chi = next;
        if step <= 4.0 * f64::EPSILON * chi.abs().max(1e-300) {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(AstroError::NoConvergence {
            what: "universal Kepler equation",
            iterations: KEPLER_MAX_ITER,
            best: chi,
            residual: eval(chi).0,
        });
    }
    let z = alpha * chi * chi;
    let (c, s) = stumpff(z);
    let chi2 = chi * chi;
    let f = 1.0 - chi2 * c / r0;
    let g = dt - chi2 * chi * s / sqrt_mu;
    Ok((f, g, sqrt_mu * (z * s - 1.0) * chi, chi2 * c))
}
