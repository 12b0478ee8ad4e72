use super::LandscapeError;

fn check(points: &[Vec<f64>]) -> Result<usize, LandscapeError> {
    let o = points.first().map_or(0, Vec::len);
    for (index, p) in points.iter().enumerate() {
        if p.len() != o {
            return Err(LandscapeError::MixedLengths { index, expected: o, got: p.len() });
        }
        if p.iter().any(|v| !v.is_finite()) {
            return Err(LandscapeError::NonFinitePoint(index));
        }
    }
    Ok(o)
}

/// `a` weakly dominates `b` with at least one strict improvement (minimisation).
fn dominates(a: &[f64], b: &[f64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y) && a.iter().zip(b).any(|(x, y)| x < y)
}

/// Indices of the non-dominated points, in input order. Identical points do
/// not dominate each other, so duplicates on the front are all kept.
pub fn pareto_indices(points: &[Vec<f64>]) -> Result<Vec<usize>, LandscapeError> {
    let o = check(points)?;
    let mut keep = if o == 2 {
        front_2d(points)
    } else {
        (0..points.len()).filter(|&k| !points.iter().any(|q| dominates(q, &points[k]))).collect()
    };
    keep.sort_unstable();
    Ok(keep)
}

pub fn pareto_filter(points: &[Vec<f64>]) -> Result<Vec<Vec<f64>>, LandscapeError> {
    Ok(pareto_indices(points)?.into_iter().map(|k| points[k].clone()).collect())
}

/// Sort-and-sweep front for two objectives.
fn front_2d(points: &[Vec<f64>]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| points[a][0].total_cmp(&points[b][0]).then(points[a][1].total_cmp(&points[b][1])));
    let mut keep = Vec::new();
    // Smallest second objective among points with a strictly smaller first one.
    let mut prior_min = f64::INFINITY;
    let mut start = 0;
    while start < order.len() {
        let f1 = points[order[start]][0];
        let end = start + order[start..].iter().take_while(|&&k| points[k][0] == f1).count();
        let group_min = points[order[start]][1];
        for &k in &order[start..end] {
            let f2 = points[k][1];
            if f2 == group_min && f2 < prior_min {
                keep.push(k);
            }
        }
        prior_min = prior_min.min(group_min);
        start = end;
    }
    keep
}
