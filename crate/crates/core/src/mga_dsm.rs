//! Multi-gravity-assist model with one deep-space manoeuvre per leg.
//!
//! Each leg is a coast from the departure body (or the fly-by exit state) for
//! a fraction `eta` of the leg time, an impulsive manoeuvre, and a Lambert
//! arc to the next body. Fly-bys are unpowered and parameterised by the
//! pericenter radius and the b-plane angle.

use std::f64::consts::TAU;

use crate::astro::{
    body, lambert_with, propagate, unpowered_swingby, AstroError, AstroResult, BodyId, Direction, Ephemeris, Epoch,
    Precision, StateVector, Vec3, AU, MU_SUN, SECONDS_PER_DAY,
};
use crate::error::ModelError;

pub const DAYS_PER_YEAR: f64 = 365.25;
/// Objective reported when the escape distance is never reached.
pub const UNREACHABLE_OBJECTIVE: f64 = 1.0e5;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DsmArrival {
    /// Match the target's velocity.
    Rendezvous,
    /// Capture into an orbit of pericenter `rp` (km) and eccentricity `e`.
    OrbitInsertion { rp: f64, e: f64 },
    /// Fly by the last body and coast outwards to `distance_au`. Adds one
    /// (radius, b-plane angle) pair for the final fly-by and turns the
    /// objective into the flight time in years.
    EscapeDistance { distance_au: f64 },
}

/// Fixed part of an MGA-DSM mission.
#[derive(Debug, Clone, PartialEq)]
pub struct MgaDsmMission {
    pub sequence: Vec<BodyId>,
    pub arrival: DsmArrival,
    /// Whether the launch excess speed counts toward the objective.
    pub count_launch: bool,
}

impl MgaDsmMission {
    pub fn legs(&self) -> usize {
        self.sequence.len() - 1
    }

    /// Number of fly-bys parameterised by the decision vector.
    pub fn flybys(&self) -> usize {
        match self.arrival {
            DsmArrival::EscapeDistance { .. } => self.legs(),
            _ => self.legs() - 1,
        }
    }

    pub fn dimension(&self) -> usize {
        4 + 2 * self.legs() + 2 * self.flybys()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MgaDsmDecoded {
    pub t0: Epoch,
    /// Launch excess speed, km/s.
    pub vinf0: f64,
    pub u: f64,
    pub v: f64,
    /// Days.
    pub leg_times: Vec<f64>,
    pub eta: Vec<f64>,
    /// Pericenter radii in body radii, one per fly-by.
    pub rp_ratio: Vec<f64>,
    /// B-plane angles, rad.
    pub bplane: Vec<f64>,
    pub sequence: Vec<BodyId>,
}

/// Splits `x = [t0, vinf, u, v, T.., eta.., rp.., beta..]`.
pub fn decode_dsm(x: &[f64], mission: &MgaDsmMission) -> Result<MgaDsmDecoded, ModelError> {
    let expected = mission.dimension();
    if x.len() != expected {
        return Err(ModelError::Dimension { expected, got: x.len() });
    }
    let (legs, flybys) = (mission.legs(), mission.flybys());
    let mut rest = &x[4..];
    let mut take = |k: usize| {
        let (head, tail) = rest.split_at(k);
        rest = tail;
        head.to_vec()
    };
    Ok(MgaDsmDecoded {
        t0: Epoch(x[0]),
        vinf0: x[1],
        u: x[2],
        v: x[3],
        leg_times: take(legs),
        eta: take(legs),
        rp_ratio: take(flybys),
        bplane: take(flybys),
        sequence: mission.sequence.clone(),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct MgaDsmOutcome {
    /// Objective of the instance: ΔV in km/s, or years for an escape target.
    pub objective: f64,
    /// Launch excess speed (when counted), manoeuvres and arrival, km/s.
    pub dv_total: f64,
    pub dv_dsm: Vec<f64>,
    pub dv_arrival: f64,
    /// Escape targets only: days from the last fly-by to the target
    /// distance, `None` when the outgoing orbit turns back first.
    pub time_to_distance: Option<f64>,
    /// Escape targets only: the target distance if reached, otherwise the
    /// aphelion of the outgoing orbit, AU.
    pub distance_reached: Option<f64>,
}

/// Launch excess velocity from speed and the two direction parameters.
///
/// The frame is `i` along the planet velocity, `k` along its orbital angular
/// momentum, `j = k x i`.
pub fn launch_vinf(planet: &StateVector, vinf: f64, u: f64, v: f64) -> Vec3 {
    let theta = TAU * u;
    let phi = (2.0 * v - 1.0).clamp(-1.0, 1.0).acos() - std::f64::consts::FRAC_PI_2;
    let i = planet.v.normalize();
    let k = planet.angular_momentum().normalize();
    let j = k.cross(&i);
    let (st, ct) = theta.sin_cos();
    let (sp, cp) = phi.sin_cos();
    (i * (ct * cp) + j * (st * cp) + k * sp) * vinf
}

pub fn evaluate_mga_dsm<E: Ephemeris + ?Sized>(
    eph: &E,
    d: &MgaDsmDecoded,
    mission: &MgaDsmMission,
) -> Result<MgaDsmOutcome, ModelError> {
    let legs = mission.legs();
    if d.leg_times.len() != legs || d.eta.len() != legs || d.rp_ratio.len() != mission.flybys() {
        return Err(ModelError::Dimension { expected: mission.dimension(), got: 0 });
    }

    let mut epoch = d.t0;
    let mut planets = Vec::with_capacity(legs + 1);
    for (k, b) in mission.sequence.iter().enumerate() {
        if k > 0 {
            epoch = epoch.plus_days(d.leg_times[k - 1]);
        }
        planets.push(eph.state(*b, epoch).map_err(ModelError::leg(k.max(1)))?);
    }

    let mut dv_dsm = Vec::with_capacity(legs);
    let mut v_depart = planets[0].v + launch_vinf(&planets[0], d.vinf0, d.u, d.v);
    let mut v_arrive = Vec3::zeros();
    for k in 0..legs {
        let leg = k + 1;
        if k > 0 {
            let planet = &planets[k];
            let b = body(mission.sequence[k]).map_err(ModelError::leg(leg))?;
            let vin = v_arrive - planet.v;
            let vout = unpowered_swingby(&vin, d.rp_ratio[k - 1] * b.radius, d.bplane[k - 1], b, &planet.v)
                .map_err(ModelError::leg(leg))?;
            v_depart = planet.v + vout;
        }
        let tof = d.leg_times[k] * SECONDS_PER_DAY;
        let coast = propagate(&StateVector::new(planets[k].r, v_depart), d.eta[k] * tof, MU_SUN)
            .map_err(ModelError::leg(leg))?;
        let arc = lambert_with(
            &coast.r,
            &planets[k + 1].r,
            (1.0 - d.eta[k]) * tof,
            MU_SUN,
            Direction::Prograde,
            Precision::Single,
        )
        .map_err(ModelError::leg(leg))?;
        dv_dsm.push((arc.v1 - coast.v).norm());
        v_arrive = arc.v2;
    }

    let target = &planets[legs];
    let v_rel = v_arrive - target.v;
    let launch = if mission.count_launch { d.vinf0 } else { 0.0 };
    let dsm_sum = dv_dsm.iter().sum::<f64>();

    let (dv_arrival, objective, time_to_distance, distance_reached) = match mission.arrival {
        DsmArrival::Rendezvous => {
            let dv = v_rel.norm();
            (dv, launch + dsm_sum + dv, None, None)
        }
        DsmArrival::OrbitInsertion { rp, e } => {
            let mu = body(mission.sequence[legs]).map_err(ModelError::leg(legs))?.mu;
            let dv = ((v_rel.norm_squared() + 2.0 * mu / rp).sqrt() - (mu * (1.0 + e) / rp).sqrt()).abs();
            (dv, launch + dsm_sum + dv, None, None)
        }
        DsmArrival::EscapeDistance { distance_au } => {
            let b = body(mission.sequence[legs]).map_err(ModelError::leg(legs))?;
            let vout = unpowered_swingby(&v_rel, d.rp_ratio[legs - 1] * b.radius, d.bplane[legs - 1], b, &target.v)
                .map_err(ModelError::leg(legs))?;
            let exit = StateVector::new(target.r, target.v + vout);
            let reach = time_to_radius(&exit, distance_au * AU, MU_SUN).map_err(ModelError::leg(legs))?;
            let elapsed = d.leg_times.iter().sum::<f64>();
            match reach {
                Reach::At(seconds) => {
                    let days = seconds / SECONDS_PER_DAY;
                    (0.0, (elapsed + days) / DAYS_PER_YEAR, Some(days), Some(distance_au))
                }
                Reach::Never { apoapsis } => (0.0, UNREACHABLE_OBJECTIVE, None, Some(apoapsis / AU)),
            }
        }
    };
    let dv_total = launch + dsm_sum + dv_arrival;
    Ok(MgaDsmOutcome { objective, dv_total, dv_dsm, dv_arrival, time_to_distance, distance_reached })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum Reach {
    At(f64),
    Never { apoapsis: f64 },
}

/// Time (s) for a two-body orbit to first reach heliocentric radius `radius`
/// moving outwards from `s`.
pub(crate) fn time_to_radius(s: &StateVector, radius: f64, mu: f64) -> AstroResult<Reach> {
    let r0 = s.r.norm();
    if r0 >= radius {
        return Ok(Reach::At(0.0));
    }
    let rv = s.r.dot(&s.v);
    let v2 = s.v.norm_squared();
    let e_vec = (s.r * (v2 - mu / r0) - s.v * rv) / mu;
    let e = e_vec.norm();
    let energy = 0.5 * v2 - mu / r0;
    if s.angular_momentum().norm() == 0.0 {
        return Err(AstroError::DegenerateConic);
    }
    if energy < 0.0 {
        let a = -mu / (2.0 * energy);
        let apoapsis = a * (1.0 + e);
        if apoapsis < radius {
            return Ok(Reach::Never { apoapsis });
        }
        let e0 = (rv / (mu * a).sqrt()).atan2(1.0 - r0 / a);
        let e1 = ((1.0 - radius / a) / e).clamp(-1.0, 1.0).acos();
        let n = (mu / (a * a * a)).sqrt();
        Ok(Reach::At(((e1 - e * e1.sin()) - (e0 - e * e0.sin())) / n))
    } else if energy > 0.0 {
        let a = -mu / (2.0 * energy);
        let h0 = (rv / (e * (-mu * a).sqrt())).asinh();
        let h1 = ((1.0 - radius / a) / e).max(1.0).acosh();
        let n = (mu / (-a * a * a)).sqrt();
        Ok(Reach::At(((e * h1.sinh() - h1) - (e * h0.sinh() - h0)) / n))
    } else {
        // parabola: Barker's equation in D = tan(nu/2)
        let p = s.angular_momentum().norm_squared() / mu;
        let d_of = |r: f64, sign: f64| sign * (r / (0.5 * p) - 1.0).max(0.0).sqrt();
        let d0 = d_of(r0, rv.signum());
        let d1 = d_of(radius, 1.0);
        let barker = |d: f64| d + d * d * d / 3.0;
        Ok(Reach::At(0.5 * (p * p * p / mu).sqrt() * (barker(d1) - barker(d0))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::astro::AnalyticEphemeris;

    fn rosetta() -> MgaDsmMission {
        MgaDsmMission {
            sequence: vec![BodyId::EARTH, BodyId::EARTH, BodyId::MARS, BodyId::EARTH, BodyId::EARTH, BodyId::COMET_67P],
            arrival: DsmArrival::Rendezvous,
            count_launch: false,
        }
    }

    const ROSETTA_PREVIOUS: [f64; 22] = [
        1542.802723,
        4.478444171,
        0.73169868,
        0.878289696,
        365.2423131,
        707.7546444,
        257.3238516,
        730.4837236,
        1850.0,
        0.469187104,
        0.810371727,
        0.057240939,
        0.123333369,
        0.436535683,
        2.657626174,
        1.05,
        3.197806169,
        1.056221792,
        -1.253888118,
        1.78760233,
        -1.594671417,
        -1.977325495,
    ];

    #[test]
    fn layout_sizes() {
        assert_eq!(rosetta().dimension(), 22);
        let sagas = MgaDsmMission {
            sequence: vec![BodyId::EARTH, BodyId::EARTH, BodyId::JUPITER],
            arrival: DsmArrival::EscapeDistance { distance_au: 50.0 },
            count_launch: true,
        };
        assert_eq!(sagas.dimension(), 12);
    }

    #[test]
    fn decode_positions() {
        let d = decode_dsm(&ROSETTA_PREVIOUS, &rosetta()).unwrap();
        assert_eq!(d.t0, Epoch(1542.802723));
        assert_eq!(d.vinf0, 4.478444171);
        assert_eq!(d.eta, ROSETTA_PREVIOUS[9..14].to_vec());
        assert_eq!(d.rp_ratio.len(), 4);
        assert_eq!(d.bplane[3], -1.977325495);
        assert_eq!(
            decode_dsm(&ROSETTA_PREVIOUS[..21], &rosetta()).unwrap_err(),
            ModelError::Dimension { expected: 22, got: 21 }
        );
    }

    #[test]
    fn components_add_up() {
        let m = rosetta();
        let d = decode_dsm(&ROSETTA_PREVIOUS, &m).unwrap();
        let out = evaluate_mga_dsm(&AnalyticEphemeris, &d, &m).unwrap();
        assert_eq!(out.dv_dsm.len(), 5);
        assert_eq!(out.objective, out.dv_total);
        assert!(out.time_to_distance.is_none());
    }

    #[test]
    fn launch_vinf_has_requested_speed() {
        let planet = StateVector::new(Vec3::new(AU, 0.0, 0.0), Vec3::new(0.0, 29.8, 0.0));
        for (u, v) in [(0.0, 0.5), (0.3, 0.1), (0.9, 1.0)] {
            assert!((launch_vinf(&planet, 3.5, u, v).norm() - 3.5).abs() < 1e-12);
        }
        // u = 0, v = 0.5 points along the planet velocity
        let along = launch_vinf(&planet, 2.0, 0.0, 0.5);
        assert!((along - Vec3::new(0.0, 2.0, 0.0)).norm() < 1e-12);
        // v = 0 points along the orbit normal, v = 1 against it
        let up = launch_vinf(&planet, 2.0, 0.25, 0.0);
        assert!((up - Vec3::new(0.0, 0.0, 2.0)).norm() < 1e-12);
        let down = launch_vinf(&planet, 2.0, 0.25, 1.0);
        assert!((down - Vec3::new(0.0, 0.0, -2.0)).norm() < 1e-12);
    }

    #[test]
    fn time_to_radius_matches_propagation() {
        // hyperbolic: v^2 / 2 = 200 > mu / r = 177
        let s = StateVector::new(Vec3::new(5.0 * AU, 0.0, 0.0), Vec3::new(12.0, 16.0, 0.5));
        for target in [10.0 * AU, 50.0 * AU] {
            let Reach::At(t) = time_to_radius(&s, target, MU_SUN).unwrap() else { panic!("unreachable") };
            let end = propagate(&s, t, MU_SUN).unwrap();
            assert!((end.r.norm() / target - 1.0).abs() < 1e-10);
        }
        let bound = StateVector::new(Vec3::new(AU, 0.0, 0.0), Vec3::new(0.0, 31.0, 0.0));
        assert!(matches!(time_to_radius(&bound, 50.0 * AU, MU_SUN).unwrap(), Reach::Never { .. }));
        let Reach::At(t) = time_to_radius(&bound, 1.05 * AU, MU_SUN).unwrap() else { panic!() };
        let end = propagate(&bound, t, MU_SUN).unwrap();
        assert!((end.r.norm() / (1.05 * AU) - 1.0).abs() < 1e-10);
        assert_eq!(time_to_radius(&s, 2.0 * AU, MU_SUN).unwrap(), Reach::At(0.0));
    }

    #[test]
    fn inbound_state_passes_pericenter_first() {
        let s = StateVector::new(Vec3::new(2.0 * AU, 0.0, 0.0), Vec3::new(-5.0, 30.0, 0.0));
        let Reach::At(t) = time_to_radius(&s, 3.0 * AU, MU_SUN).unwrap() else { panic!() };
        let end = propagate(&s, t, MU_SUN).unwrap();
        assert!((end.r.norm() / (3.0 * AU) - 1.0).abs() < 1e-10);
        assert!(end.r.dot(&end.v) > 0.0);
    }
}
