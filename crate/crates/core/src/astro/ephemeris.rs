use std::f64::consts::TAU;

use super::bodies::{body_table, BodyId};
use super::kepler::solve_kepler;
use super::{AstroError, AstroResult, Epoch, StateVector, Vec3, AU, DAYS_PER_CENTURY, MU_SUN, SECONDS_PER_DAY};

/// Keplerian elements. `a` is in AU when read from the constants table and in
/// km once converted; angles are radians.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrbitalElements {
    pub a: f64,
    pub e: f64,
    pub i: f64,
    pub raan: f64,
    pub argp: f64,
    pub mean_anomaly: f64,
}

/// Secular polynomials in Julian centuries for each element (a in AU, angles
/// in degrees).
#[derive(Debug, Clone, PartialEq)]
pub struct ElementSeries {
    pub epoch_offset_days: f64,
    pub a: Vec<f64>,
    pub e: Vec<f64>,
    pub i: Vec<f64>,
    pub raan: Vec<f64>,
    pub argp: Vec<f64>,
    pub mean_anomaly: Vec<f64>,
}

fn horner(coeffs: &[f64], t: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * t + c)
}

impl ElementSeries {
    /// Elements at `epoch`, a in km, angles in radians, M reduced modulo 2pi.
    pub fn at(&self, epoch: Epoch) -> OrbitalElements {
        let t = (epoch.days() + self.epoch_offset_days) / DAYS_PER_CENTURY;
        OrbitalElements {
            a: horner(&self.a, t) * AU,
            e: horner(&self.e, t),
            i: horner(&self.i, t).to_radians(),
            raan: horner(&self.raan, t).to_radians(),
            argp: horner(&self.argp, t).to_radians(),
            mean_anomaly: horner(&self.mean_anomaly, t).to_radians() % TAU,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum EphemerisModel {
    Series(ElementSeries),
    /// Two-body motion around the Sun from osculating elements (a in AU).
    Osculating {
        epoch_mjd: f64,
        elements: OrbitalElements,
    },
}

/// MJD of the MJD2000 origin.
const MJD2000_IN_MJD: f64 = 51_544.0;

impl EphemerisModel {
    pub fn elements(&self, epoch: Epoch) -> OrbitalElements {
        match self {
            EphemerisModel::Series(series) => series.at(epoch),
            EphemerisModel::Osculating { epoch_mjd, elements } => {
                let a = elements.a * AU;
                let dt = (epoch.days() - (epoch_mjd - MJD2000_IN_MJD)) * SECONDS_PER_DAY;
                let n = (MU_SUN / (a * a * a)).sqrt();
                OrbitalElements { a, mean_anomaly: (elements.mean_anomaly + n * dt) % TAU, ..*elements }
            }
        }
    }

    pub fn state(&self, epoch: Epoch) -> AstroResult<StateVector> {
        elements_to_state(&self.elements(epoch), MU_SUN)
    }
}

/// Elliptic elements (a in km) to Cartesian state.
pub fn elements_to_state(el: &OrbitalElements, mu: f64) -> AstroResult<StateVector> {
    if !(el.a > 0.0) || !(0.0..1.0).contains(&el.e) {
        return Err(AstroError::InvalidInput("elements_to_state needs a > 0 and 0 <= e < 1"));
    }
    let ecc_anomaly = solve_kepler(el.mean_anomaly, el.e)?;
    let (a, e) = (el.a, el.e);
    let b = a * (1.0 - e * e).sqrt();
    let n = (mu / (a * a * a)).sqrt();
    let (sin_e, cos_e) = ecc_anomaly.sin_cos();
    let denom = 1.0 - e * cos_e;

    // perifocal frame
    let xp = a * (cos_e - e);
    let yp = b * sin_e;
    let vxp = -a * n * sin_e / denom;
    let vyp = b * n * cos_e / denom;

    let (sin_o, cos_o) = el.raan.sin_cos();
    let (sin_w, cos_w) = el.argp.sin_cos();
    let (sin_i, cos_i) = el.i.sin_cos();
    let p = Vec3::new(cos_o * cos_w - sin_o * sin_w * cos_i, sin_o * cos_w + cos_o * sin_w * cos_i, sin_w * sin_i);
    let q = Vec3::new(-cos_o * sin_w - sin_o * cos_w * cos_i, -sin_o * sin_w + cos_o * cos_w * cos_i, cos_w * sin_i);
    Ok(StateVector::new(p * xp + q * yp, p * vxp + q * vyp))
}

/// Source of heliocentric body states. Implemented by the analytic model and
/// by test stubs.
pub trait Ephemeris: Sync {
    fn state(&self, body: BodyId, epoch: Epoch) -> AstroResult<StateVector>;
}

/// Analytic ephemerides from the bundled constants table.
#[derive(Debug, Clone, Copy, Default)]
pub struct AnalyticEphemeris;

impl Ephemeris for AnalyticEphemeris {
    fn state(&self, body: BodyId, epoch: Epoch) -> AstroResult<StateVector> {
        body_table().model(body)?.state(epoch)
    }
}

/// Heliocentric ecliptic J2000 state of `body` at `epoch`.
pub fn ephemeris(body: BodyId, epoch: Epoch) -> AstroResult<StateVector> {
    AnalyticEphemeris.state(body, epoch)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn earth_at_reference_epoch() {
        let s = ephemeris(BodyId::EARTH, Epoch(0.0)).unwrap();
        assert!((s.r.norm() / 1.496e8 - 1.0).abs() < 0.02);
        assert!(s.energy(MU_SUN) < 0.0);
        // ecliptic: Earth stays in the reference plane
        assert_eq!(s.r.z, 0.0);
    }

    #[test]
    fn unknown_body() {
        assert_eq!(ephemeris(BodyId(42), Epoch(0.0)).unwrap_err(), AstroError::UnknownBody(42));
        assert_eq!(ephemeris(BodyId::SUN, Epoch(0.0)).unwrap_err(), AstroError::UnknownBody(0));
    }

    #[test]
    fn deterministic() {
        let a = ephemeris(BodyId::JUPITER, Epoch(1234.5)).unwrap();
        let b = ephemeris(BodyId::JUPITER, Epoch(1234.5)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn planets_have_plausible_distances() {
        let expected_au = [0.387, 0.723, 1.0, 1.524, 5.203, 9.555, 19.22, 30.11, 39.5];
        for (k, au) in expected_au.iter().enumerate() {
            let s = ephemeris(BodyId(k as u32 + 1), Epoch(500.0)).unwrap();
            let r = s.r.norm() / AU;
            assert!((r / au - 1.0).abs() < 0.3, "body {} at {r} AU", k + 1);
        }
    }

    #[test]
    fn comet_at_perihelion_epoch() {
        // 67P elements are given at perihelion passage (M = 0).
        let epoch = Epoch(52504.23754000012 - MJD2000_IN_MJD);
        let s = ephemeris(BodyId::COMET_67P, epoch).unwrap();
        let q = 3.50294972836275 * AU * (1.0 - 0.6319356);
        assert!((s.r.norm() / q - 1.0).abs() < 1e-9);
        assert!(s.r.dot(&s.v).abs() / (s.r.norm() * s.v.norm()) < 1e-9);
    }

    #[test]
    fn horner_evaluates_polynomial() {
        assert_eq!(horner(&[1.0, 2.0, 3.0], 2.0), 17.0);
        assert_eq!(horner(&[5.0], 123.0), 5.0);
    }
}
