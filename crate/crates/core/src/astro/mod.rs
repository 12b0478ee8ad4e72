//! Two-body astrodynamics kernel.
//!
//! Everything here is a pure function of its inputs. Units are km, km/s and
//! seconds unless a name says otherwise; epochs are days since 2000-01-01
//! 00:00 (MJD2000).

mod bodies;
mod ephemeris;
mod kepler;
mod lambert;
mod propagate;
mod swingby;

use nalgebra::Vector3;
use thiserror::Error;

pub use bodies::{body, body_table, Body, BodyId, BodyTable, BODY_TABLE_SHA256, BODY_TABLE_SOURCE};
pub use ephemeris::{
    elements_to_state, ephemeris, AnalyticEphemeris, ElementSeries, Ephemeris, EphemerisModel, OrbitalElements,
};
pub use kepler::{solve_kepler, solve_kepler_hyperbolic, KEPLER_MAX_ITER};
pub use lambert::{lambert, lambert_with, Direction, LambertSolution, Precision};
pub use propagate::propagate;
pub use swingby::{powered_swingby_dv, turning_angle, unpowered_swingby, PoweredSwingby, ROOT_MAX_ITER};

pub type Vec3 = Vector3<f64>;

/// Astronomical unit in km.
pub const AU: f64 = 149_597_870.66;
/// Gravitational parameter of the Sun in km^3/s^2.
pub const MU_SUN: f64 = 1.327_124_28e11;
pub const SECONDS_PER_DAY: f64 = 86_400.0;
pub const DAYS_PER_CENTURY: f64 = 36_525.0;

/// Days since 1 January 2000 (MJD2000).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Epoch(pub f64);

impl Epoch {
    pub fn mjd2000(days: f64) -> Self {
        Epoch(days)
    }

    pub fn days(self) -> f64 {
        self.0
    }

    pub fn seconds(self) -> f64 {
        self.0 * SECONDS_PER_DAY
    }

    pub fn plus_days(self, days: f64) -> Self {
        Epoch(self.0 + days)
    }
}

/// Heliocentric (or planetocentric) position and velocity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateVector {
    /// km
    pub r: Vec3,
    /// km/s
    pub v: Vec3,
}

impl StateVector {
    pub fn new(r: Vec3, v: Vec3) -> Self {
        Self { r, v }
    }

    /// Specific orbital energy v^2/2 - mu/r.
    pub fn energy(&self, mu: f64) -> f64 {
        0.5 * self.v.norm_squared() - mu / self.r.norm()
    }

    pub fn angular_momentum(&self) -> Vec3 {
        self.r.cross(&self.v)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AstroError {
    #[error("unknown body {0}")]
    UnknownBody(u32),
    #[error("{what} did not converge after {iterations} iterations (best iterate {best}, residual {residual:e})")]
    NoConvergence { what: &'static str, iterations: usize, best: f64, residual: f64 },
    #[error("degenerate conic")]
    DegenerateConic,
    #[error("time of flight must be positive, got {0} s")]
    NonPositiveTof(f64),
    #[error("ill-conditioned transfer: transfer angle {angle} rad")]
    IllConditionedTransfer { angle: f64 },
    #[error("invalid input: {0}")]
    InvalidInput(&'static str),
}

pub type AstroResult<T> = Result<T, AstroError>;
