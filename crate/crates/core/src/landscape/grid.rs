use rayon::prelude::*;

use super::LandscapeError;
use crate::suite::{evaluate, info, is_feasible};

/// Points per grid axis, both bounds included.
pub const GRID_POINTS: usize = 1001;

/// `lb + k * 0.001 * (ub - lb)` for `k = 0..=1000`; the last point is
/// pinned to `ub` so both bounds appear exactly.
pub fn grid_axis(lb: f64, ub: f64) -> Vec<f64> {
    let mut axis: Vec<f64> = (0..GRID_POINTS).map(|k| lb + (k as f64 * 0.001) * (ub - lb)).collect();
    axis[GRID_POINTS - 1] = ub;
    axis
}

/// First-objective values over a two-variable grid, all other variables
/// held at `base`. Row `a` follows `axis_i[a]`, column `b` follows `axis_j[b]`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSlice {
    pub id: u32,
    /// Zero-based variable indices.
    pub var_i: usize,
    pub var_j: usize,
    pub axis_i: Vec<f64>,
    pub axis_j: Vec<f64>,
    /// Row-major; `NaN` where evaluation failed.
    pub f_grid: Vec<f64>,
    pub feasible_grid: Vec<bool>,
}

impl GridSlice {
    pub fn f(&self, a: usize, b: usize) -> f64 {
        self.f_grid[a * self.axis_j.len() + b]
    }

    pub fn feasible(&self, a: usize, b: usize) -> bool {
        self.feasible_grid[a * self.axis_j.len() + b]
    }

    /// Lowest feasible cell as `(a, b, f)`; ties keep the first in row-major order.
    pub fn min_feasible(&self) -> Option<(usize, usize, f64)> {
        let cols = self.axis_j.len();
        let mut best: Option<(usize, f64)> = None;
        for (k, (f, ok)) in self.f_grid.iter().zip(&self.feasible_grid).enumerate() {
            if *ok && best.is_none_or(|(_, b)| *f < b) {
                best = Some((k, *f));
            }
        }
        best.map(|(k, f)| (k / cols, k % cols, f))
    }
}

pub fn grid_pair(id: u32, base: &[f64], i: usize, j: usize) -> Result<GridSlice, LandscapeError> {
    let spec = info(id)?;
    if base.len() != spec.n {
        return Err(LandscapeError::CenterDimension { id, expected: spec.n, got: base.len() });
    }
    for k in [i, j] {
        if k >= spec.n {
            return Err(LandscapeError::IndexOutOfRange { index: k, n: spec.n });
        }
        if spec.is_integer(k) {
            return Err(LandscapeError::IntegerGridVariable(k));
        }
    }
    if i == j {
        return Err(LandscapeError::SameIndex(i));
    }
    let axis_i = grid_axis(spec.lb[i], spec.ub[i]);
    let axis_j = grid_axis(spec.lb[j], spec.ub[j]);
    let rows: Vec<(Vec<f64>, Vec<bool>)> = axis_i
        .par_iter()
        .map(|vi| {
            let mut x = base.to_vec();
            x[i] = *vi;
            let mut f = Vec::with_capacity(GRID_POINTS);
            let mut ok = Vec::with_capacity(GRID_POINTS);
            for vj in &axis_j {
                x[j] = *vj;
                match evaluate(id, &x) {
                    Ok(r) => {
                        ok.push(is_feasible(&r));
                        f.push(r.f[0]);
                    }
                    Err(_) => {
                        ok.push(false);
                        f.push(f64::NAN);
                    }
                }
            }
            (f, ok)
        })
        .collect();
    let (f_grid, feasible_grid) = rows.into_iter().fold(
        (Vec::with_capacity(GRID_POINTS * GRID_POINTS), Vec::with_capacity(GRID_POINTS * GRID_POINTS)),
        |(mut fs, mut oks), (f, ok)| {
            fs.extend(f);
            oks.extend(ok);
            (fs, oks)
        },
    );
    Ok(GridSlice { id, var_i: i, var_j: j, axis_i, axis_j, f_grid, feasible_grid })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axis_has_exact_endpoints() {
        for (lb, ub) in [(-std::f64::consts::PI, std::f64::consts::PI), (0.01, 0.9), (-1000.0, 0.0), (1.05, 9.0)] {
            let a = grid_axis(lb, ub);
            assert_eq!(a.len(), 1001);
            assert_eq!(a[0], lb);
            assert_eq!(a[1000], ub);
            assert!(a.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn argument_errors() {
        let base = vec![0.0; 6];
        assert!(matches!(grid_pair(1, &base, 2, 2), Err(LandscapeError::SameIndex(2))));
        assert!(matches!(grid_pair(1, &base, 0, 6), Err(LandscapeError::IndexOutOfRange { index: 6, n: 6 })));
        assert!(matches!(grid_pair(1, &base[..5], 0, 1), Err(LandscapeError::CenterDimension { .. })));
        let minlp = vec![1.0; 10];
        let err = grid_pair(8, &minlp, 0, 7).unwrap_err();
        assert!(err.to_string().starts_with("grid over integer variable unsupported"));
    }
}
