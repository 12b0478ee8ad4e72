use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;

use super::LandscapeError;
use crate::suite::{evaluate, info, is_feasible, ProblemSpec, SuiteError};

/// One evaluated neighbour of the sampling center.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleRecord {
    /// Position in the stream; also selects the random substream.
    pub index: u64,
    pub x: Vec<f64>,
    /// `NaN`-filled when the evaluation failed.
    pub f: Vec<f64>,
    pub g: Vec<f64>,
    pub feasible: bool,
    pub mutated: Vec<bool>,
    pub error: Option<SuiteError>,
}

impl SampleRecord {
    pub fn mutation_count(&self) -> usize {
        self.mutated.iter().filter(|m| **m).count()
    }
}

/// Raw proposals of sample `index`: `Some(value)` for each variable that
/// mutates, drawn from `Normal(center_i, sigma_i)` before any clipping.
/// Each variable mutates independently with probability `1/N`.
pub fn mutation_draws(center: &[f64], sigma: &[f64], seed: u64, index: u64) -> Vec<Option<f64>> {
    let rate = 1.0 / center.len() as f64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    center
        .iter()
        .zip(sigma)
        .map(|(c, s)| {
            // Both draws are always consumed so the stream layout is fixed.
            let hit = rng.random::<f64>() < rate;
            let z: f64 = StandardNormal.sample(&mut rng);
            hit.then_some(c + s * z)
        })
        .collect()
}

/// The neighbour with stream index `index`: [`mutation_draws`] with
/// `sigma_i = (ub_i - lb_i) / 3`, clipped to the box. Variables listed in
/// `integer_slots` are rounded after clipping.
pub fn perturb(
    center: &[f64],
    lb: &[f64],
    ub: &[f64],
    integer_slots: &[usize],
    seed: u64,
    index: u64,
) -> (Vec<f64>, Vec<bool>) {
    let sigma: Vec<f64> = lb.iter().zip(ub).map(|(l, u)| (u - l) / 3.0).collect();
    let draws = mutation_draws(center, &sigma, seed, index);
    let mut x = center.to_vec();
    for (k, d) in draws.iter().enumerate() {
        if let Some(v) = d {
            let v = v.clamp(lb[k], ub[k]);
            x[k] = if integer_slots.contains(&k) { v.round() } else { v };
        }
    }
    (x, draws.iter().map(Option::is_some).collect())
}

/// Seeded neighbourhood sampler for one instance. Sample `k` is a pure
/// function of `(seed, k)`.
#[derive(Debug, Clone)]
pub struct LocalSampler {
    spec: &'static ProblemSpec,
    center: Vec<f64>,
    count: u64,
    seed: u64,
}

pub fn local_sample(id: u32, center: &[f64], count: u64, seed: u64) -> Result<LocalSampler, LandscapeError> {
    let spec = info(id)?;
    if center.len() != spec.n {
        return Err(LandscapeError::CenterDimension { id, expected: spec.n, got: center.len() });
    }
    if count == 0 {
        return Err(LandscapeError::EmptyCount);
    }
    Ok(LocalSampler { spec, center: center.to_vec(), count, seed })
}

impl LocalSampler {
    pub fn spec(&self) -> &'static ProblemSpec {
        self.spec
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn record(&self, index: u64) -> SampleRecord {
        let s = self.spec;
        let (x, mutated) = perturb(&self.center, &s.lb, &s.ub, &s.integer_slots, self.seed, index);
        match evaluate(s.id, &x) {
            Ok(r) => {
                let feasible = is_feasible(&r);
                SampleRecord { index, x, f: r.f, g: r.g, feasible, mutated, error: None }
            }
            Err(e) => SampleRecord {
                index,
                x,
                f: vec![f64::NAN; s.n_obj],
                g: vec![f64::NAN; s.m],
                feasible: false,
                mutated,
                error: Some(e),
            },
        }
    }

    /// Serial stream over all samples.
    pub fn iter(&self) -> impl Iterator<Item = SampleRecord> + '_ {
        (0..self.count).map(|k| self.record(k))
    }

    /// Samples `start..end` (clamped to the count), evaluated on the rayon
    /// pool and returned in index order.
    pub fn batch(&self, start: u64, end: u64) -> Vec<SampleRecord> {
        (start..end.min(self.count)).into_par_iter().map(|k| self.record(k)).collect()
    }
}
