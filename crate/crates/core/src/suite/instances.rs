use crate::astro::{body, BodyId, Ephemeris};
use crate::mga::{evaluate_mga, MgaArrival, MgaDecoded, MgaMission, MgaOutcome};
use crate::mga_dsm::{decode_dsm, evaluate_mga_dsm, DsmArrival, MgaDsmMission};

use super::{EvalResult, ProblemSpec, SuiteError};

const E: BodyId = BodyId::EARTH;
const V: BodyId = BodyId::VENUS;
const ME: BodyId = BodyId::MERCURY;
const MA: BodyId = BodyId::MARS;
const J: BodyId = BodyId::JUPITER;
const S: BodyId = BodyId::SATURN;

pub const GTOC1_INITIAL_MASS: f64 = 1500.0;
/// Specific impulse, s.
pub const GTOC1_ISP: f64 = 2500.0;
/// Launch excess speed supplied by the launcher, km/s.
pub const GTOC1_LAUNCH_ALLOWANCE: f64 = 2.5;

const CASSINI_CAPTURE: MgaArrival = MgaArrival::OrbitInsertion { rp: 108_950.0, e: 0.98 };
const MESSENGER_CAPTURE: DsmArrival = DsmArrival::OrbitInsertion { rp: 2640.0, e: 0.704 };

/// Launch excess speed plus manoeuvres, km/s.
pub const SAGAS_TOTAL_LIMIT: f64 = 6.782;
/// Sum of manoeuvres, km/s.
pub const SAGAS_ONBOARD_LIMIT: f64 = 1.782;

/// Upper limit on the first objective of the two-objective instances.
pub const MO_BOUND_CASSINI1: f64 = 7.0;
pub const MO_BOUND_MINLP: f64 = 6.0;

const CASSINI1_SEQUENCE: [BodyId; 6] = [E, V, V, E, J, S];

pub fn cassini1_mission() -> MgaMission {
    minlp_mission([V, V, E, J])
}

/// Cassini1 with the four fly-by planets replaced.
pub fn minlp_mission(flybys: [BodyId; 4]) -> MgaMission {
    let mut sequence = vec![E];
    sequence.extend(flybys);
    sequence.push(S);
    MgaMission { sequence, retrograde: vec![false; 5], arrival: CASSINI_CAPTURE, launch_allowance: 0.0 }
}

fn gtoc1_mission() -> MgaMission {
    let mut retrograde = vec![false; 7];
    retrograde[6] = true;
    MgaMission {
        sequence: vec![E, V, E, V, E, J, S, BodyId::TW229],
        retrograde,
        arrival: MgaArrival::AsteroidImpact { initial_mass: GTOC1_INITIAL_MASS, isp: GTOC1_ISP },
        launch_allowance: GTOC1_LAUNCH_ALLOWANCE,
    }
}

/// The deep-space-manoeuvre mission of instance `id`, if it is one.
pub fn mission_dsm(id: u32) -> Option<MgaDsmMission> {
    let (sequence, arrival, count_launch) = match id {
        2 => (CASSINI1_SEQUENCE.to_vec(), DsmArrival::Rendezvous, true),
        3 => (vec![E, E, V, V, ME], DsmArrival::Rendezvous, true),
        4 => (vec![E, V, V, ME, ME, ME, ME], MESSENGER_CAPTURE, false),
        6 => (vec![E, E, MA, E, E, BodyId::COMET_67P], DsmArrival::Rendezvous, false),
        7 => (vec![E, E, J], DsmArrival::EscapeDistance { distance_au: 50.0 }, true),
        _ => return None,
    };
    Some(MgaDsmMission { sequence, arrival, count_launch })
}

pub(super) fn spec(id: u32, lb: Vec<f64>, ub: Vec<f64>) -> ProblemSpec {
    let (name, n_obj, m, best_known_f) = match id {
        1 => ("Cassini1", 1, 4, Some(4.9307)),
        2 => ("Cassini2", 1, 0, Some(8.3830)),
        3 => ("Messenger (reduced)", 1, 0, Some(8.6299)),
        4 => ("Messenger (full)", 1, 0, Some(1.9579)),
        5 => ("GTOC1", 1, 6, Some(-1581950.0)),
        6 => ("Rosetta", 1, 0, Some(1.3434)),
        7 => ("Sagas", 1, 2, Some(18.1877)),
        8 => ("Cassini1-MINLP", 1, 4, Some(3.5007)),
        9 => ("Cassini1-MO", 2, 5, None),
        10 => ("Cassini1-MO-MINLP", 2, 5, None),
        _ => unreachable!("instance ids are 1..=10"),
    };
    let default_sequence = match id {
        1 | 8 | 9 | 10 => CASSINI1_SEQUENCE.to_vec(),
        5 => gtoc1_mission().sequence,
        _ => mission_dsm(id).expect("remaining ids are DSM missions").sequence,
    };
    let integer_slots: Vec<usize> = if matches!(id, 8 | 10) { (6..10).collect() } else { Vec::new() };
    let n = lb.len();
    ProblemSpec {
        id,
        name,
        n_obj,
        n_cont: n - integer_slots.len(),
        n_int: integer_slots.len(),
        n,
        m,
        lb,
        ub,
        default_sequence,
        integer_slots,
        best_known_f,
    }
}

/// Rounds an integer slot half away from zero into a planet id 1..=9.
pub fn decode_flyby_planet(id: u32, index: usize, value: f64) -> Result<BodyId, SuiteError> {
    let r = value.round();
    if (1.0..=9.0).contains(&r) {
        Ok(BodyId(r as u32))
    } else {
        Err(SuiteError::InvalidFlybyPlanet { id, index, value })
    }
}

fn run_mga<E: Ephemeris + ?Sized>(eph: &E, id: u32, x: &[f64], mission: &MgaMission) -> Result<MgaOutcome, SuiteError> {
    let wrap = |source| SuiteError::Evaluation { id, source };
    let d = MgaDecoded::from_slice(x, &mission.sequence).map_err(wrap)?;
    evaluate_mga(eph, &d, mission).map_err(wrap)
}

/// `(rp - rp_min) / rp_min` for each fly-by.
fn pericenter_constraints(outcome: &MgaOutcome, sequence: &[BodyId]) -> Vec<f64> {
    outcome
        .rp_flybys
        .iter()
        .zip(&sequence[1..])
        .map(|(rp, b)| {
            let rp_min = body(*b).expect("sequence bodies are known").rp_min;
            (rp - rp_min) / rp_min
        })
        .collect()
}

fn mga_result<E: Ephemeris + ?Sized>(
    eph: &E,
    id: u32,
    x: &[f64],
    mission: &MgaMission,
) -> Result<EvalResult, SuiteError> {
    let out = run_mga(eph, id, x, mission)?;
    let g = pericenter_constraints(&out, &mission.sequence);
    Ok(EvalResult { f: vec![out.objective], g })
}

fn minlp_result<E: Ephemeris + ?Sized>(eph: &E, id: u32, x: &[f64]) -> Result<EvalResult, SuiteError> {
    let mut flybys = [E; 4];
    for (k, slot) in flybys.iter_mut().enumerate() {
        *slot = decode_flyby_planet(id, 6 + k, x[6 + k])?;
    }
    mga_result(eph, id, &x[..6], &minlp_mission(flybys))
}

/// Appends the time-of-flight objective and the bound on the first one.
fn two_objective(mut r: EvalResult, x: &[f64], bound: f64) -> EvalResult {
    let f1 = r.f[0];
    r.f.push(x[1..6].iter().sum());
    r.g.push(bound - f1);
    r
}

pub(super) fn evaluate<E: Ephemeris + ?Sized>(
    eph: &E,
    spec: &ProblemSpec,
    x: &[f64],
) -> Result<EvalResult, SuiteError> {
    let id = spec.id;
    match id {
        1 => mga_result(eph, id, x, &cassini1_mission()),
        5 => mga_result(eph, id, x, &gtoc1_mission()),
        8 => minlp_result(eph, id, x),
        9 => Ok(two_objective(mga_result(eph, id, x, &cassini1_mission())?, x, MO_BOUND_CASSINI1)),
        10 => Ok(two_objective(minlp_result(eph, id, x)?, x, MO_BOUND_MINLP)),
        _ => {
            let mission = mission_dsm(id).expect("remaining ids are DSM missions");
            let wrap = |source| SuiteError::Evaluation { id, source };
            let d = decode_dsm(x, &mission).map_err(wrap)?;
            let out = evaluate_mga_dsm(eph, &d, &mission).map_err(wrap)?;
            let g = if let DsmArrival::EscapeDistance { .. } = mission.arrival {
                let onboard: f64 = out.dv_dsm.iter().sum();
                vec![
                    (SAGAS_TOTAL_LIMIT - out.dv_total) / SAGAS_TOTAL_LIMIT,
                    (SAGAS_ONBOARD_LIMIT - onboard) / SAGAS_ONBOARD_LIMIT,
                ]
            } else {
                Vec::new()
            };
            Ok(EvalResult { f: vec![out.objective], g })
        }
    }
}
