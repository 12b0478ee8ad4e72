#![allow(dead_code)]

use gtopx::vectors::parse_vectors;

pub fn fixture(name: &str) -> Vec<Vec<f64>> {
    let path = format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    parse_vectors(&text).unwrap_or_else(|e| panic!("{path}: {e}"))
}

/// Plain geometric bisection on the deflection equation of a powered
/// swing-by; returns the pericenter radius.
pub fn bisect_rp(vin: f64, vout: f64, alpha: f64, mu: f64) -> f64 {
    let turn = |rp: f64| (1.0 / (1.0 + rp * vin * vin / mu)).asin() + (1.0 / (1.0 + rp * vout * vout / mu)).asin();
    let (mut lo, mut hi) = (1e-12_f64, 1e15_f64);
    for _ in 0..400 {
        let mid = (lo * hi).sqrt();
        if turn(mid) > alpha {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo * hi).sqrt()
}

/// Indices of non-dominated points by exhaustive pairwise comparison.
pub fn dominance_oracle(points: &[Vec<f64>]) -> Vec<usize> {
    let dominates = |a: &[f64], b: &[f64]| a.iter().zip(b).all(|(x, y)| x <= y) && a.iter().zip(b).any(|(x, y)| x < y);
    (0..points.len()).filter(|&k| !points.iter().any(|p| dominates(p, &points[k]))).collect()
}
