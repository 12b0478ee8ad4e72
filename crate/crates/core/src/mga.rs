//! Multi-gravity-assist model with powered swing-bys.
//!
//! The spacecraft follows one Lambert arc per leg. Mismatches between the
//! arriving and departing excess velocities at each intermediate body are
//! closed by an impulse at the pericenter of the swing-by hyperbola.

use crate::astro::{
    body, lambert_with, powered_swingby_dv, BodyId, Direction, Ephemeris, Epoch, Precision, StateVector, Vec3, MU_SUN,
    SECONDS_PER_DAY,
};
use crate::error::ModelError;

/// Standard gravity in km/s^2.
pub const G0: f64 = 9.806_65e-3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MgaArrival {
    /// Capture into an orbit of pericenter `rp` (km) and eccentricity `e`.
    OrbitInsertion { rp: f64, e: f64 },
    /// Kinetic impact on an asteroid. The objective is
    /// `-m_final * |v_rel . v_asteroid|` with `m_final` from the rocket
    /// equation on the manoeuvre total.
    AsteroidImpact { initial_mass: f64, isp: f64 },
}

/// Fixed part of an MGA mission.
#[derive(Debug, Clone, PartialEq)]
pub struct MgaMission {
    pub sequence: Vec<BodyId>,
    /// One flag per leg; a set flag selects the retrograde Lambert arc.
    pub retrograde: Vec<bool>,
    pub arrival: MgaArrival,
    /// Launch excess speed provided for free by the launcher, km/s.
    pub launch_allowance: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MgaDecoded {
    pub t0: Epoch,
    /// Days between consecutive events.
    pub leg_times: Vec<f64>,
    pub sequence: Vec<BodyId>,
}

impl MgaDecoded {
    /// `x = [t0, T1, .., TL]`.
    pub fn from_slice(x: &[f64], sequence: &[BodyId]) -> Result<Self, ModelError> {
        if sequence.len() < 2 || x.len() != sequence.len() {
            return Err(ModelError::Dimension { expected: sequence.len(), got: x.len() });
        }
        Ok(Self { t0: Epoch(x[0]), leg_times: x[1..].to_vec(), sequence: sequence.to_vec() })
    }

    pub fn epochs(&self) -> Vec<Epoch> {
        let mut t = self.t0;
        let mut out = Vec::with_capacity(self.leg_times.len() + 1);
        out.push(t);
        for dt in &self.leg_times {
            t = t.plus_days(*dt);
            out.push(t);
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MgaOutcome {
    /// The instance objective: `dv_total` for orbit insertion, the negated
    /// impact figure for asteroid impact.
    pub objective: f64,
    pub dv_total: f64,
    /// Launch, each fly-by, arrival (km/s). Launch is net of the allowance.
    pub dv_legs: Vec<f64>,
    /// Pericenter radius of each intermediate fly-by, km.
    pub rp_flybys: Vec<f64>,
    /// Fly-bys whose turn exceeds the achievable deflection.
    pub saturated: Vec<bool>,
}

pub fn evaluate_mga<E: Ephemeris + ?Sized>(
    eph: &E,
    d: &MgaDecoded,
    mission: &MgaMission,
) -> Result<MgaOutcome, ModelError> {
    let legs = d.leg_times.len();
    if d.sequence.len() != legs + 1 || mission.retrograde.len() != legs {
        return Err(ModelError::Dimension { expected: mission.retrograde.len() + 1, got: d.sequence.len() });
    }
    let states = d
        .epochs()
        .iter()
        .zip(&d.sequence)
        .enumerate()
        .map(|(k, (t, b))| eph.state(*b, *t).map_err(ModelError::leg(k.max(1))))
        .collect::<Result<Vec<StateVector>, _>>()?;

    let mut departures = Vec::with_capacity(legs);
    let mut arrivals = Vec::with_capacity(legs);
    for k in 0..legs {
        let direction = if mission.retrograde[k] { Direction::Retrograde } else { Direction::Prograde };
        let tof = d.leg_times[k] * SECONDS_PER_DAY;
        let sol = lambert_with(&states[k].r, &states[k + 1].r, tof, MU_SUN, direction, Precision::Single)
            .map_err(ModelError::leg(k + 1))?;
        departures.push(sol.v1);
        arrivals.push(sol.v2);
    }

    let launch = (departures[0] - states[0].v).norm();
    let mut dv_legs = Vec::with_capacity(legs + 1);
    dv_legs.push((launch - mission.launch_allowance).max(0.0));

    let mut rp_flybys = Vec::with_capacity(legs - 1);
    let mut saturated = Vec::with_capacity(legs - 1);
    for k in 1..legs {
        let planet = body(d.sequence[k]).map_err(ModelError::leg(k))?;
        let vin = arrivals[k - 1] - states[k].v;
        let vout = departures[k] - states[k].v;
        let (sin, sout) = (vin.norm(), vout.norm());
        let alpha = (vin.dot(&vout) / (sin * sout)).clamp(-1.0, 1.0).acos();
        let fb = powered_swingby_dv(sin, sout, alpha, planet).map_err(ModelError::leg(k))?;
        dv_legs.push(fb.dv);
        rp_flybys.push(fb.rp);
        saturated.push(fb.saturated);
    }

    let target = &states[legs];
    let v_rel: Vec3 = arrivals[legs - 1] - target.v;
    let arrival = match mission.arrival {
        MgaArrival::OrbitInsertion { rp, e } => {
            let mu = body(d.sequence[legs]).map_err(ModelError::leg(legs))?.mu;
            ((v_rel.norm_squared() + 2.0 * mu / rp).sqrt() - (mu * (1.0 + e) / rp).sqrt()).abs()
        }
        MgaArrival::AsteroidImpact { .. } => 0.0,
    };
    dv_legs.push(arrival);

    let dv_total = dv_legs.iter().sum::<f64>();
    let objective = match mission.arrival {
        MgaArrival::OrbitInsertion { .. } => dv_total,
        MgaArrival::AsteroidImpact { initial_mass, isp } => {
            let final_mass = initial_mass * (-dv_total / (isp * G0)).exp();
            -final_mass * v_rel.dot(&target.v).abs()
        }
    };
    Ok(MgaOutcome { objective, dv_total, dv_legs, rp_flybys, saturated })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::astro::{AnalyticEphemeris, AstroResult};

    fn cassini1() -> MgaMission {
        MgaMission {
            sequence: vec![BodyId::EARTH, BodyId::VENUS, BodyId::VENUS, BodyId::EARTH, BodyId::JUPITER, BodyId::SATURN],
            retrograde: vec![false; 5],
            arrival: MgaArrival::OrbitInsertion { rp: 108_950.0, e: 0.98 },
            launch_allowance: 0.0,
        }
    }

    #[test]
    fn epochs_accumulate() {
        let d = MgaDecoded::from_slice(&[-100.0, 10.0, 20.5, 1.0], &[BodyId::EARTH; 4]).unwrap();
        let e: Vec<f64> = d.epochs().iter().map(|e| e.days()).collect();
        assert_eq!(e, vec![-100.0, -90.0, -69.5, -68.5]);
    }

    #[test]
    fn wrong_length_is_dimension_error() {
        let m = cassini1();
        assert_eq!(
            MgaDecoded::from_slice(&[0.0; 5], &m.sequence).unwrap_err(),
            ModelError::Dimension { expected: 6, got: 5 }
        );
    }

    #[test]
    fn breakdown_adds_up() {
        let m = cassini1();
        let x = [-789.8, 158.3, 449.4, 54.7, 1024.4, 4552.3];
        let d = MgaDecoded::from_slice(&x, &m.sequence).unwrap();
        let out = evaluate_mga(&AnalyticEphemeris, &d, &m).unwrap();
        assert_eq!(out.dv_legs.len(), 6);
        assert_eq!(out.rp_flybys.len(), 4);
        assert_eq!(out.dv_total, out.dv_legs.iter().sum::<f64>());
        assert_eq!(out.objective, out.dv_total);
    }

    /// Bodies on one circular orbit: a Lambert arc between two of them over
    /// their own phase separation is the circular orbit itself.
    struct RingEphemeris;

    impl Ephemeris for RingEphemeris {
        fn state(&self, body: BodyId, epoch: Epoch) -> AstroResult<StateVector> {
            let r = 1.2e8;
            let n = (MU_SUN / (r * r * r)).sqrt();
            let phase = n * epoch.seconds() + 0.1 * body.0 as f64;
            let (s, c) = phase.sin_cos();
            let v = n * r;
            Ok(StateVector::new(Vec3::new(r * c, r * s, 0.0), Vec3::new(-v * s, v * c, 0.0)))
        }
    }

    #[test]
    fn zero_mismatch_legs_cost_nothing() {
        // Same body at every event, so the spacecraft simply co-orbits it.
        // e = 1 makes the insertion term vanish at zero excess speed. The
        // residue is single-precision Lambert noise.
        let mission = MgaMission {
            sequence: vec![BodyId::EARTH; 3],
            retrograde: vec![false; 2],
            arrival: MgaArrival::OrbitInsertion { rp: 1.0e5, e: 1.0 },
            launch_allowance: 0.0,
        };
        let d = MgaDecoded::from_slice(&[0.0, 40.0, 70.0], &mission.sequence).unwrap();
        let out = evaluate_mga(&RingEphemeris, &d, &mission).unwrap();
        assert!(out.dv_legs[0] < 1e-4, "launch {}", out.dv_legs[0]);
        assert!(out.dv_legs[1] < 1e-4);
        assert!(out.dv_legs[2] < 1e-4, "arrival {}", out.dv_legs[2]);
    }

    #[test]
    fn launch_allowance_is_subtracted() {
        let mut m = cassini1();
        let x = [-789.8, 158.3, 449.4, 54.7, 1024.4, 4552.3];
        let d = MgaDecoded::from_slice(&x, &m.sequence).unwrap();
        let full = evaluate_mga(&AnalyticEphemeris, &d, &m).unwrap().dv_legs[0];
        m.launch_allowance = 1.0;
        let net = evaluate_mga(&AnalyticEphemeris, &d, &m).unwrap().dv_legs[0];
        assert!((full - 1.0 - net).abs() < 1e-12);
        m.launch_allowance = 100.0;
        assert_eq!(evaluate_mga(&AnalyticEphemeris, &d, &m).unwrap().dv_legs[0], 0.0);
    }
}
