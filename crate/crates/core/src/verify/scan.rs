use rayon::prelude::*;
use serde::Serialize;

use crate::cheeger::ParallelFlow;
use crate::error::{Error, Result};
use crate::geom::RoundedBody;

/// Constancy and strictness threshold, relative to the largest sampled value.
pub const TOL_SCAN: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    StrictlyDecreasing,
    Nonincreasing,
    Constant,
    Increasing,
    Mixed,
}

/// Samples of a scalar function on an increasing grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanSeries {
    pub t_values: Vec<f64>,
    pub values: Vec<f64>,
    pub verdict: Verdict,
    /// Largest increase between consecutive samples, relative to the scale.
    pub max_violation: f64,
}

impl ScanSeries {
    pub fn new(t_values: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if t_values.len() != values.len() || t_values.len() < 2 {
            return Err(Error::param("grid", "need at least two samples"));
        }
        if t_values.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::param("grid", "must be strictly increasing"));
        }
        let verdict = verdict(&values, TOL_SCAN);
        let scale = scale(&values);
        let max_violation = values
            .windows(2)
            .map(|w| (w[1] - w[0]) / scale)
            .fold(0.0, f64::max);
        Ok(ScanSeries {
            t_values,
            values,
            verdict,
            max_violation,
        })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn scale(&self) -> f64 {
        scale(&self.values)
    }

    /// The verdict under a different relative tolerance.
    pub fn verdict_at(&self, rel_tol: f64) -> Verdict {
        verdict(&self.values, rel_tol)
    }

    /// The samples with `lo ≤ t ≤ hi`, with the verdict recomputed.
    pub fn restrict(&self, lo: f64, hi: f64) -> Option<ScanSeries> {
        let (t, v): (Vec<f64>, Vec<f64>) = self
            .t_values
            .iter()
            .zip(&self.values)
            .filter(|(t, _)| **t >= lo && **t <= hi)
            .map(|(t, v)| (*t, *v))
            .unzip();
        ScanSeries::new(t, v).ok()
    }
}

fn scale(values: &[f64]) -> f64 {
    values.iter().fold(0.0f64, |m, v| m.max(v.abs())).max(f64::MIN_POSITIVE)
}

/// Classifies a sequence, testing the verdicts in order from most to least
/// specific.
pub(crate) fn verdict(values: &[f64], rel_tol: f64) -> Verdict {
    let tol = rel_tol * scale(values);
    let (lo, hi) = values
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(l, h), &v| (l.min(v), h.max(v)));
    if values.iter().any(|v| !v.is_finite()) {
        return Verdict::Mixed;
    }
    let diffs: Vec<f64> = values.windows(2).map(|w| w[1] - w[0]).collect();
    if hi - lo <= tol {
        Verdict::Constant
    } else if diffs.iter().all(|&d| d < -tol) {
        Verdict::StrictlyDecreasing
    } else if diffs.iter().all(|&d| d <= tol) {
        Verdict::Nonincreasing
    } else if diffs.iter().all(|&d| d >= -tol) {
        Verdict::Increasing
    } else {
        Verdict::Mixed
    }
}

/// Evaluates `f` on the grid in parallel; output order follows the grid.
pub(crate) fn sample<F>(grid: &[f64], f: F) -> Result<Vec<f64>>
where
    F: Fn(f64) -> Result<f64> + Sync,
{
    grid.par_iter().map(|&t| f(t)).collect()
}

/// `t ↦ √|Ωₜ|·h(Ωₜ)` on `n_pts` uniform samples of `[t_min, t_max]`.
pub fn scan_scaled_cheeger(
    b: &RoundedBody,
    t_min: f64,
    t_max: f64,
    n_pts: usize,
) -> Result<ScanSeries> {
    let r = b.inradius();
    if !(t_min > -r && t_max > t_min && t_max.is_finite()) {
        return Err(Error::OutOfDomain {
            what: "scan start",
            value: t_min,
            lo: -r,
            hi: t_max,
        });
    }
    if n_pts < 8 {
        return Err(Error::param("grid", format!("need at least 8 points, got {n_pts}")));
    }
    let grid = super::uniform_grid(t_min, t_max, n_pts);
    let flow = ParallelFlow::new(b)?;
    let values = sample(&grid, |t| flow.scaled_invariant(t))?;
    ScanSeries::new(grid, values)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_order() {
        assert_eq!(verdict(&[1.0, 1.0, 1.0], 1e-9), Verdict::Constant);
        assert_eq!(verdict(&[3.0, 2.0, 1.0], 1e-9), Verdict::StrictlyDecreasing);
        assert_eq!(verdict(&[3.0, 2.0, 2.0], 1e-9), Verdict::Nonincreasing);
        assert_eq!(verdict(&[1.0, 2.0, 2.0], 1e-9), Verdict::Increasing);
        assert_eq!(verdict(&[1.0, 2.0, 1.0], 1e-9), Verdict::Mixed);
        assert_eq!(verdict(&[1.0, f64::NAN], 1e-9), Verdict::Mixed);
        // drops below the tolerance do not count as strict
        assert_eq!(verdict(&[2.0, 1.0, 1.0 - 1e-12, 0.0], 1e-9), Verdict::Nonincreasing);
    }

    #[test]
    fn grid_validation() {
        assert!(ScanSeries::new(vec![0.0, 0.0], vec![1.0, 1.0]).is_err());
        assert!(ScanSeries::new(vec![0.0], vec![1.0]).is_err());
        let s = ScanSeries::new(vec![0.0, 1.0, 2.0], vec![3.0, 4.0, 3.0]).unwrap();
        assert!((s.max_violation - 0.25).abs() < 1e-15);
        assert_eq!(s.restrict(1.0, 2.0).unwrap().verdict, Verdict::StrictlyDecreasing);
    }
}
