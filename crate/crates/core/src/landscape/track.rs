use std::borrow::Borrow;

use super::SampleRecord;

/// Improvements below this percentage are reported but not significant.
pub const SIGNIFICANT_PERCENT: f64 = 0.1;

#[derive(Debug, Clone, PartialEq)]
pub struct Improvement {
    pub index: u64,
    pub f: f64,
    /// `100 * (incumbent - f) / |incumbent|`.
    pub percent: f64,
    pub significant: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ImprovementReport {
    pub incumbent: f64,
    /// In stream order.
    pub improvements: Vec<Improvement>,
}

impl ImprovementReport {
    pub fn best(&self) -> Option<&Improvement> {
        self.improvements.iter().min_by(|a, b| a.f.total_cmp(&b.f))
    }

    pub fn any_significant(&self) -> bool {
        self.improvements.iter().any(|i| i.significant)
    }
}

pub fn percent_change(incumbent: f64, f: f64) -> f64 {
    100.0 * (incumbent - f) / incumbent.abs()
}

/// Every feasible record whose first objective beats the fixed `incumbent`.
pub fn track_best<I>(records: I, incumbent: f64) -> ImprovementReport
where
    I: IntoIterator,
    I::Item: Borrow<SampleRecord>,
{
    let improvements = records
        .into_iter()
        .filter_map(|r| {
            let r = r.borrow();
            let f = *r.f.first()?;
            (r.feasible && f < incumbent).then(|| {
                let percent = percent_change(incumbent, f);
                Improvement { index: r.index, f, percent, significant: percent >= SIGNIFICANT_PERCENT }
            })
        })
        .collect();
    ImprovementReport { incumbent, improvements }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(index: u64, f: f64, feasible: bool) -> SampleRecord {
        SampleRecord { index, x: vec![], f: vec![f], g: vec![], feasible, mutated: vec![], error: None }
    }

    #[test]
    fn no_improvement_is_empty() {
        let r = track_best([rec(0, 2.0, true), rec(1, 1.0, false)], 1.5);
        assert!(r.improvements.is_empty());
        assert!(r.best().is_none());
    }

    #[test]
    fn tiny_gain_is_not_significant() {
        let r = track_best(vec![rec(7, 1.34334199, true)], 1.34335206);
        let i = &r.improvements[0];
        assert!((i.percent - 0.00075).abs() < 5e-6, "{}", i.percent);
        assert!(!i.significant);
    }

    #[test]
    fn threshold_gain_is_significant() {
        let r = track_best(&[rec(0, 9.98, true), rec(1, 9.5, true)], 10.0);
        assert!((r.improvements[0].percent - 0.2).abs() < 1e-12);
        assert!(r.improvements[0].significant);
        assert_eq!(r.best().unwrap().index, 1);
    }

    #[test]
    fn negative_incumbent_uses_magnitude() {
        let r = track_best([rec(0, -1_600_000.0, true)], -1_581_950.0);
        assert!(r.improvements[0].percent > 1.0);
    }
}
