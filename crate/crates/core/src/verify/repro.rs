use std::f64::consts::PI;

use super::{uniform_grid, CheckReport, Tally};
use crate::cheeger::{cheeger, rect2x1_inner_h, ParallelFlow};
use crate::error::{Error, Result};
use crate::geom::{shapes, RoundedBody};
use crate::spectral::{
    bessel_bound, bessel_bound_check, eigenvalue_condition_threshold,
    eigenvalue_perimeter_condition, ratio_lambda_h, RectSpec, J2,
};

/// `√|Ω|·h` along dilation of a unit square carrying a thin tail of width
/// `ε`, squared: `[(1−2t)² + (ε−2t)(1−t)]·[(2+√π)/(1−2t)]²`.
pub fn tailed_f(eps: f64, t: f64) -> f64 {
    let h = (2.0 + PI.sqrt()) / (1.0 - 2.0 * t);
    ((1.0 - 2.0 * t).powi(2) + (eps - 2.0 * t) * (1.0 - t)) * h * h
}

/// The squared invariant of the tailed square drops below its value at
/// `t = 0`, with slope `(2+√π)²(3ε−2)`.
pub fn repro_tailed_counterexample(eps: f64, grid: &[f64]) -> Result<CheckReport> {
    if !(eps > 0.0 && eps < 0.5) {
        return Err(Error::OutOfDomain {
            what: "tail width",
            value: eps,
            lo: 0.0,
            hi: 0.5,
        });
    }
    if grid.is_empty() || grid.iter().any(|&t| !(t > 0.0 && t <= 0.25 * eps)) {
        return Err(Error::param("grid", "must be nonempty and lie in (0, ε/4]"));
    }
    let f0 = tailed_f(eps, 0.0);
    let mut tally = Tally::strict("tailed_counterexample", 1e-14);
    for &t in grid {
        tally.push(t, f0, tailed_f(eps, t), f0);
    }
    let h2 = (2.0 + PI.sqrt()).powi(2);
    let slope = h2 * (3.0 * eps - 2.0);
    let dt = 1e-4;
    let fd = (tailed_f(eps, dt) - f0) / dt;
    let rel = (fd - slope).abs() / slope.abs();
    tally.extra("f0", f0);
    tally.extra("slope_expected", slope);
    tally.extra("slope_observed", fd);
    tally.extra("slope_rel_error", rel);
    tally.require(rel <= 0.05, "slope differs by more than 5%");
    tally.require(
        (f0 - (1.0 + eps) * h2).abs() <= 1e-12 * f0,
        "value at t = 0 differs from (1+ε)(2+√π)²",
    );
    Ok(tally.finish())
}

/// `h(Q₋ₜ)(1 − t/r(Q)) = h(Q)` for the cut triangle `Q`, which shares its
/// Cheeger set with the enclosing triangle.
pub fn repro_quad_scaling(grid: &[f64]) -> Result<CheckReport> {
    let q = RoundedBody::polygon(shapes::quadrilateral_q());
    let r = q.inradius();
    if grid.is_empty() || grid.iter().any(|&t| !(0.0..=0.6 * r).contains(&t)) {
        return Err(Error::param("grid", "must be nonempty and lie in [0, 0.6·r(Q)]"));
    }
    let h = cheeger(&q)?.h;
    let mut tally = Tally::equal("quadrilateral_scaling", 1e-8);
    for &t in grid {
        let eroded = q.parallel(-t)?;
        let lhs = cheeger(&eroded)?.h * (1.0 - t / r);
        tally.push(t, lhs, h, h);
    }
    let tri = RoundedBody::polygon(shapes::apex_triangle());
    tally.extra("h", h);
    tally.extra("h_enclosing_triangle", cheeger(&tri)?.h);
    tally.extra("inradius", r);
    Ok(tally.finish())
}

/// `h(R₋ₜ)/√λ₁(R₋ₜ)` strictly decreasing for the `2 × 1` rectangle; the
/// closed form of `h` is cross-checked against the solver at `t = 1/4`.
pub fn repro_rectangle_ratio(grid: &[f64]) -> Result<CheckReport> {
    if grid.len() < 2
        || grid.iter().any(|&t| !(t > 0.0 && t < 0.5))
        || grid.windows(2).any(|w| w[1] <= w[0])
    {
        return Err(Error::param("grid", "must be increasing and lie in (0, 0.5)"));
    }
    let ratios = grid
        .iter()
        .map(|&t| ratio_lambda_h(t))
        .collect::<Result<Vec<_>>>()?;
    let r0 = ratio_lambda_h(0.0)?;
    let mut tally = Tally::strict("rectangle_ratio", 1e-14);
    for (w, v) in grid.windows(2).zip(ratios.windows(2)) {
        tally.push(w[1], v[0], v[1], r0);
    }
    for (&t, &v) in grid.iter().zip(&ratios) {
        tally.push(t, r0, v, r0);
    }
    let rect = RoundedBody::polygon(shapes::rect(2.0, 1.0));
    let solver = ParallelFlow::new(&rect)?.h(-0.25)?;
    let closed = rect2x1_inner_h(0.25);
    let gap = (solver - closed).abs() / closed;
    tally.extra("ratio_at_zero", r0);
    tally.extra("closed_form_gap", gap);
    tally.require(gap <= 1e-9, "closed form and solver disagree at t = 1/4");
    Ok(tally.finish())
}

/// The eigenvalue–perimeter condition holds for the `0.01 × 1` rectangle
/// and fails for the unit square; reports the threshold width.
pub fn repro_thin_rect() -> Result<CheckReport> {
    let thin = RectSpec::new(0.01, 1.0)?;
    let square = RectSpec::new(1.0, 1.0)?;
    let mut tally = Tally::at_least("thin_rectangle_condition", 0.0);
    let thin_ok = eigenvalue_perimeter_condition(thin);
    let square_ok = eigenvalue_perimeter_condition(square);
    tally.require(thin_ok, "condition fails for the thin rectangle");
    tally.require(!square_ok, "condition holds for the square");
    let side = |r: RectSpec| 0.5 * J2 * r.perimeter() / r.area();
    tally.extra("thin_sqrt_lambda", crate::spectral::lambda1_rectangle(thin).sqrt());
    tally.extra("thin_bound", side(thin));
    tally.extra("square_sqrt_lambda", crate::spectral::lambda1_rectangle(square).sqrt());
    tally.extra("square_bound", side(square));
    tally.extra("threshold_width", eigenvalue_condition_threshold());
    Ok(tally.finish())
}

/// Airy-type upper bound for Bessel zeros below `πn/2` for `n = 3..=n_max`,
/// and `j₂ < π`.
pub fn repro_bessel(n_max: u32) -> Result<CheckReport> {
    let all = bessel_bound_check(n_max)?;
    let mut tally = Tally::at_least("bessel_bound", 0.0);
    let worst = (3..=n_max)
        .map(|n| bessel_bound(n) - PI * n as f64 / 2.0)
        .fold(f64::NEG_INFINITY, f64::max);
    tally.require(all, "bound exceeds πn/2");
    tally.require(J2 < PI, "j₂ ≥ π");
    tally.extra("n_max", n_max as f64);
    tally.extra("max_bound_minus_limit", worst);
    tally.extra("j2", J2);
    Ok(tally.finish())
}

/// Default grids used by the suite and the command line.
pub fn tailed_grid(eps: f64, n: usize) -> Vec<f64> {
    (1..=n).map(|k| 0.25 * eps * k as f64 / n as f64).collect()
}

pub fn quad_grid(n: usize) -> Vec<f64> {
    let r = shapes::quadrilateral_q().inradius();
    (1..=n).map(|k| 0.6 * r * k as f64 / n as f64).collect()
}

pub fn ratio_grid(n: usize) -> Vec<f64> {
    uniform_grid(0.001, 0.499, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tailed_values() {
        let h2 = (2.0 + PI.sqrt()).powi(2);
        assert!((h2 - 14.231408057).abs() < 1e-8);
        assert!((tailed_f(0.1, 0.0) - 15.654545).abs() < 1e-5);
        let d = tailed_f(0.1, 0.001) - tailed_f(0.1, 0.0);
        assert!((d / -0.02419 - 1.0).abs() < 0.05);
        assert!(tailed_f(0.4, 1e-3) < tailed_f(0.4, 0.0));
        assert!(repro_tailed_counterexample(0.6, &[0.01]).is_err());
        assert!(repro_tailed_counterexample(0.1, &[0.03]).is_err());
    }

    #[test]
    fn repro_reports_pass() {
        assert!(repro_tailed_counterexample(0.1, &tailed_grid(0.1, 64)).unwrap().passed);
        assert!(repro_thin_rect().unwrap().passed);
        assert!(repro_bessel(50).unwrap().passed);
    }
}
