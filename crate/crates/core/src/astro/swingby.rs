use std::f64::consts::PI;

use super::{AstroError, AstroResult, Body, Vec3};

/// Iteration cap for the pericenter root search.
pub const ROOT_MAX_ITER: usize = 100;

/// Result of inverting a powered swing-by.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoweredSwingby {
    /// Impulse applied at pericenter, km/s.
    pub dv: f64,
    /// Pericenter radius, km.
    pub rp: f64,
    /// The requested turn exceeds what any pericenter radius can deliver;
    /// `rp` is the rp -> 0 limit.
    pub saturated: bool,
}

/// Deflection of a hyperbola with excess speed `vinf` and pericenter `rp`.
pub fn turning_angle(vinf: f64, rp: f64, mu: f64) -> f64 {
    2.0 * (1.0 / (1.0 + rp * vinf * vinf / mu)).asin()
}

/// Pericenter radius and pericenter impulse that turn an incoming excess
/// speed `vin` into `vout` with total deflection `alpha`.
///
/// The deflection is half from the incoming and half from the outgoing
/// hyperbola, both sharing the pericenter. A zero turn places the pericenter
/// at the body's minimum radius.
pub fn powered_swingby_dv(vin: f64, vout: f64, alpha: f64, body: &Body) -> AstroResult<PoweredSwingby> {
    if !(vin > 0.0 && vout > 0.0) || !vin.is_finite() || !vout.is_finite() || !(alpha >= 0.0) {
        return Err(AstroError::InvalidInput("powered swing-by needs positive speeds and alpha >= 0"));
    }
    let mu = body.mu;
    let dv_at = |rp: f64| ((vout * vout + 2.0 * mu / rp).sqrt() - (vin * vin + 2.0 * mu / rp).sqrt()).abs();
    if alpha == 0.0 {
        let rp = body.rp_min;
        return Ok(PoweredSwingby { dv: dv_at(rp), rp, saturated: false });
    }
    if alpha >= PI {
        return Ok(PoweredSwingby { dv: 0.0, rp: 0.0, saturated: true });
    }

    let a_in = mu / (vin * vin);
    let a_out = mu / (vout * vout);
    // decreasing from pi - alpha at rp = 0 to -alpha as rp -> inf
    let f = |rp: f64| (a_in / (a_in + rp)).asin() + (a_out / (a_out + rp)).asin() - alpha;
    let df = |rp: f64| {
        -a_in / ((a_in + rp) * (rp * (rp + 2.0 * a_in)).sqrt())
            - a_out / ((a_out + rp) * (rp * (rp + 2.0 * a_out)).sqrt())
    };

    // symmetric-hyperbola estimate
    let a_mean = 0.5 * (a_in + a_out);
    let guess = a_mean / (0.5 * alpha).sin() - a_mean;
    let mut rp = if guess > 0.0 && guess.is_finite() { guess } else { a_mean };
    let (mut lo, mut hi) = (rp, rp);
    while f(lo) < 0.0 {
        lo *= 0.5;
    }
    while f(hi) > 0.0 {
        hi *= 2.0;
    }

    for _ in 0..ROOT_MAX_ITER {
        let fx = f(rp);
        if fx == 0.0 {
            return Ok(PoweredSwingby { dv: dv_at(rp), rp, saturated: false });
        }
        if fx > 0.0 {
            lo = lo.max(rp);
        } else {
            hi = hi.min(rp);
        }
        let mut next = rp - fx / df(rp);
        if !(next > lo && next < hi) {
            next = (lo * hi).sqrt();
        }
        let step = (next - rp).abs();
        rp = next;
        if step <= 1e-15 * rp || hi - lo <= 1e-15 * hi {
            return Ok(PoweredSwingby { dv: dv_at(rp), rp, saturated: false });
        }
    }
    Err(AstroError::NoConvergence { what: "swing-by pericenter", iterations: ROOT_MAX_ITER, best: rp, residual: f(rp) })
}

/// Outgoing excess velocity of an unpowered fly-by.
///
/// `vin` is the incoming excess velocity relative to the planet and
/// `planet_velocity` the planet's heliocentric velocity; the latter fixes the
/// b-plane frame `i = vin/|vin|`, `j = i x v_planet` (normalised),
/// `k = i x j`, about which `beta` rotates the deflection.
pub fn unpowered_swingby(vin: &Vec3, rp: f64, beta: f64, body: &Body, planet_velocity: &Vec3) -> AstroResult<Vec3> {
    let speed = vin.norm();
    if !(speed > 0.0) || !speed.is_finite() || !(rp > 0.0) {
        return Err(AstroError::InvalidInput("unpowered swing-by needs |vin| > 0 and rp > 0"));
    }
    let delta = turning_angle(speed, rp, body.mu);
    let i = vin / speed;
    let j = i.cross(planet_velocity);
    let j_norm = j.norm();
    if !(j_norm > 0.0) {
        return Err(AstroError::InvalidInput("b-plane undefined: v-infinity parallel to planet velocity"));
    }
    let j = j / j_norm;
    let k = i.cross(&j);
    let (sd, cd) = delta.sin_cos();
    let (sb, cb) = beta.sin_cos();
    Ok((i * cd + j * (cb * sd) + k * (sb * sd)) * speed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::astro::{body, BodyId};

    fn earth() -> &'static Body {
        body(BodyId::EARTH).unwrap()
    }

    #[test]
    fn equal_speeds_need_no_impulse() {
        for alpha in [0.1, 1.0, 2.5] {
            let s = powered_swingby_dv(7.0, 7.0, alpha, earth()).unwrap();
            assert_eq!(s.dv, 0.0);
            assert!(!s.saturated);
            assert!((turning_angle(7.0, s.rp, earth().mu) - alpha).abs() < 1e-12);
        }
    }

    #[test]
    fn zero_turn_clamps_to_minimum_radius() {
        let s = powered_swingby_dv(5.0, 5.0, 0.0, earth()).unwrap();
        assert_eq!(s.dv, 0.0);
        assert_eq!(s.rp, earth().rp_min);
    }

    #[test]
    fn full_reversal_saturates() {
        let s = powered_swingby_dv(5.0, 6.0, PI, earth()).unwrap();
        assert!(s.saturated);
        assert_eq!(s.rp, 0.0);
    }

    #[test]
    fn rejects_zero_speed() {
        assert!(powered_swingby_dv(0.0, 6.0, 1.0, earth()).is_err());
    }

    #[test]
    fn unpowered_preserves_speed_and_turns_by_delta() {
        let vin = Vec3::new(3.0, -4.0, 0.0);
        let vpl = Vec3::new(0.0, 29.8, 0.0);
        let vout = unpowered_swingby(&vin, 6878.0, 0.7, earth(), &vpl).unwrap();
        assert!((vout.norm() / vin.norm() - 1.0).abs() < 1e-12);
        let angle = (vin.dot(&vout) / (vin.norm() * vout.norm())).clamp(-1.0, 1.0).acos();
        let delta = 2.0 * (1.0 / (1.0 + 6878.0 * 25.0 / earth().mu)).asin();
        assert!((angle - delta).abs() < 1e-9);
    }

    #[test]
    fn distant_flyby_leaves_velocity_unchanged() {
        let vin = Vec3::new(1.0, 2.0, 3.0);
        let vout = unpowered_swingby(&vin, 1e12, -2.0, earth(), &Vec3::new(0.0, 30.0, 0.0)).unwrap();
        assert!((vout - vin).norm() / vin.norm() < 1e-6);
    }

    #[test]
    fn beta_zero_bends_toward_planet_velocity_normal() {
        let vin = Vec3::new(5.0, 0.0, 0.0);
        let vpl = Vec3::new(0.0, 30.0, 0.0);
        let vout = unpowered_swingby(&vin, 7000.0, 0.0, earth(), &vpl).unwrap();
        // j = x cross y = z
        assert!(vout.z > 0.0 && vout.y.abs() < 1e-12);
    }
}
