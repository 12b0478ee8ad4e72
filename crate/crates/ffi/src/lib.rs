//! C ABI over the benchmark suite.
//!
//! All reals are `double`, all integers `int32_t`. Callers own every buffer;
//! nothing allocated here crosses the boundary. Every entry point is
//! reentrant and may be called from any thread. See `include/gtopx.h`.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::slice;

use gtopx::suite::{evaluate, info, ProblemSpec, SuiteError};

/// Status codes returned by every entry point. Stable across versions.
#[repr(i32)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AbiStatus {
    Ok = 0,
    UnknownBenchmark = 1,
    Dimension = 2,
    Evaluation = 3,
    InvalidInteger = 4,
}

impl From<&SuiteError> for AbiStatus {
    fn from(e: &SuiteError) -> Self {
        match e {
            SuiteError::UnknownBenchmark(_) => AbiStatus::UnknownBenchmark,
            SuiteError::Dimension { .. } => AbiStatus::Dimension,
            SuiteError::InvalidFlybyPlanet { .. } => AbiStatus::InvalidInteger,
            SuiteError::Evaluation { .. } => AbiStatus::Evaluation,
        }
    }
}

fn spec_of(benchmark: i32) -> Result<&'static ProblemSpec, AbiStatus> {
    u32::try_from(benchmark).ok().and_then(|id| info(id).ok()).ok_or(AbiStatus::UnknownBenchmark)
}

/// Shared body of the evaluation entry points. Lengths are already checked
/// against `spec`.
unsafe fn run(spec: &ProblemSpec, f: *mut f64, g: *mut f64, x: *const f64) -> AbiStatus {
    if x.is_null() || f.is_null() || (spec.m > 0 && g.is_null()) {
        return AbiStatus::Dimension;
    }
    let x = slice::from_raw_parts(x, spec.n);
    let result = match catch_unwind(AssertUnwindSafe(|| evaluate(spec.id, x))) {
        Ok(Ok(r)) => r,
        Ok(Err(e)) => return AbiStatus::from(&e),
        Err(_) => return AbiStatus::Evaluation,
    };
    slice::from_raw_parts_mut(f, spec.n_obj).copy_from_slice(&result.f);
    if spec.m > 0 {
        slice::from_raw_parts_mut(g, spec.m).copy_from_slice(&result.g);
    }
    AbiStatus::Ok
}

/// Evaluates `benchmark` at `x` (length n), writing o objectives to `f` and
/// m constraints to `g`. `g` may be null when m = 0. On error the contents of
/// `f` and `g` are unspecified.
///
/// # Safety
/// `x` must point to n readable doubles, `f` to o writable doubles and `g` to
/// m writable doubles, with n, o, m as reported by [`gtopx_info`].
#[no_mangle]
pub unsafe extern "C" fn gtopx(benchmark: i32, f: *mut f64, g: *mut f64, x: *const f64) -> i32 {
    match spec_of(benchmark) {
        Ok(spec) => run(spec, f, g, x) as i32,
        Err(s) => s as i32,
    }
}

/// [`gtopx`] with explicit buffer lengths; returns status 2 when any length
/// differs from the instance dimensions.
///
/// # Safety
/// Each pointer must be valid for the length passed with it.
#[no_mangle]
pub unsafe extern "C" fn gtopx_checked(
    benchmark: i32,
    f: *mut f64,
    o: i32,
    g: *mut f64,
    m: i32,
    x: *const f64,
    n: i32,
) -> i32 {
    let spec = match spec_of(benchmark) {
        Ok(spec) => spec,
        Err(s) => return s as i32,
    };
    let matches = |len: i32, want: usize| usize::try_from(len).is_ok_and(|l| l == want);
    if !(matches(o, spec.n_obj) && matches(m, spec.m) && matches(n, spec.n)) {
        return AbiStatus::Dimension as i32;
    }
    run(spec, f, g, x) as i32
}

/// Writes the number of objectives, variables, constraints and integer
/// variables of `benchmark`. Null out-pointers are skipped.
///
/// # Safety
/// Each non-null pointer must be valid for one `int32_t` write.
#[no_mangle]
pub unsafe extern "C" fn gtopx_info(benchmark: i32, o: *mut i32, n: *mut i32, m: *mut i32, n_int: *mut i32) -> i32 {
    let spec = match spec_of(benchmark) {
        Ok(spec) => spec,
        Err(s) => return s as i32,
    };
    for (ptr, value) in [(o, spec.n_obj), (n, spec.n), (m, spec.m), (n_int, spec.n_int)] {
        if !ptr.is_null() {
            *ptr = value as i32;
        }
    }
    AbiStatus::Ok as i32
}
