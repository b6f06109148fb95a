use std::f64::consts::PI;

use serde::Serialize;

use super::scan::{sample, scan_scaled_cheeger, Verdict, TOL_SCAN};
use super::{inner_grid, CheckReport, Tally};
use crate::cheeger::{cheeger, derivative_fd, polygon_derivative_identity, ParallelFlow};
use crate::error::Result;
use crate::geom::{RoundedBody, TANGENTIAL_TOL};

/// Relative gap below which an inequality counts as an equality.
pub const EQUALITY_TOL: f64 = 1e-10;

/// Slack allowed for rounding in non-strict inequalities, relative.
const INEQ_TOL: f64 = 1e-11;

/// Required relative margin for strict inequalities.
const STRICT_MARGIN: f64 = 1e-14;

fn bool_f64(b: bool) -> f64 {
    if b {
        1.0
    } else {
        0.0
    }
}

/// Turns a fallible check into a report, failing on errors.
fn guard(name: &str, f: impl FnOnce() -> Result<CheckReport>) -> CheckReport {
    f().unwrap_or_else(|e| CheckReport::failed(name, e.to_string()))
}

fn tangential(b: &RoundedBody) -> bool {
    b.is_tangential(TANGENTIAL_TOL)
}

/// Equality within [`EQUALITY_TOL`] exactly when the body is tangential.
fn equality_dichotomy(tally: &mut Tally, is_tangential: bool, max_gap: f64) {
    tally.extra("tangential", bool_f64(is_tangential));
    tally.extra("max_equality_gap", max_gap);
    if is_tangential {
        tally.require(max_gap <= EQUALITY_TOL, "tangential body without equality");
    } else {
        tally.require(max_gap > EQUALITY_TOL, "non-tangential body with equality");
    }
}

fn validate_inner_grid(tally: &mut Tally, grid: &[f64], r: f64) -> bool {
    let ok = !grid.is_empty() && grid.iter().all(|&t| (0.0..r).contains(&t));
    tally.require(ok, "grid must be nonempty and lie in [0, r)");
    ok
}

/// A comparison `J(Ω₋ₜ) ≥ bound(t)` along erosion, with the equality case
/// characterizing tangential bodies.
fn erosion_inequality(
    name: &str,
    b: &RoundedBody,
    grid: &[f64],
    value: impl Fn(f64) -> (f64, f64),
) -> CheckReport {
    let mut tally = Tally::at_least(name, INEQ_TOL);
    if !validate_inner_grid(&mut tally, grid, b.inradius()) {
        return tally.finish();
    }
    let mut max_gap = 0.0f64;
    for &t in grid {
        let (lhs, rhs) = value(t);
        tally.push(t, lhs, rhs, 1.0);
        max_gap = max_gap.max(lhs - rhs);
    }
    equality_dichotomy(&mut tally, tangential(b), max_gap);
    tally.finish()
}

/// `|Ω₋ₜ| ≥ |Ω|(1 − t/r)²`, compared after dividing by `|Ω|`.
pub fn check_matheron(b: &RoundedBody, grid: &[f64]) -> CheckReport {
    let fam = b.inner();
    let (a, r) = (b.area(), b.inradius());
    erosion_inequality("matheron", b, grid, |t| {
        (fam.area(t) / a, (1.0 - t / r).powi(2))
    })
}

/// `P(Ω₋ₜ) ≥ P(Ω)(1 − t/r)`, compared after dividing by `P(Ω)`.
pub fn check_larson(b: &RoundedBody, grid: &[f64]) -> CheckReport {
    let fam = b.inner();
    let (p, r) = (b.perimeter(), b.inradius());
    erosion_inequality("larson", b, grid, |t| (fam.perimeter(t) / p, 1.0 - t / r))
}

/// `P(Ω₋ₜ)/P(Ω) ≥ (|Ω₋ₜ|/|Ω|)^{1/2}`.
pub fn check_isoperimetric(b: &RoundedBody, grid: &[f64]) -> CheckReport {
    let fam = b.inner();
    let (a, p) = (b.area(), b.perimeter());
    erosion_inequality("isoperimetric_quotient", b, grid, |t| {
        (fam.perimeter(t) / p, (fam.area(t) / a).sqrt())
    })
}

/// Inner bodies of `Ω` and of `Ω₋c`, both rescaled to unit area: the first
/// has strictly larger inner parallel sets.
pub fn check_inner_area_comparison(b: &RoundedBody, c: f64) -> CheckReport {
    const NAME: &str = "inner_area_comparison";
    if b.is_disk() || tangential(b) {
        return CheckReport::skipped(NAME, "body is tangential");
    }
    let r = b.inradius();
    let mut tally = Tally::strict(NAME, STRICT_MARGIN);
    tally.extra("c", c);
    if !(c > 0.0 && c < r) {
        tally.require(false, "c must lie in (0, r)");
        return tally.finish();
    }
    let fam = b.inner();
    let a = b.area();
    let ac = fam.area(c);
    let (sa, sac) = (a.sqrt(), ac.sqrt());
    for t in inner_grid(r / sa, 32) {
        let lhs = fam.area(t * sa) / a;
        let rhs = fam.area(c + t * sac) / ac;
        tally.push(t, lhs, rhs, 1.0);
    }
    tally.finish()
}

/// `contact/P(Ω) ≥ ½|C|/|Ω|`, `contact ≥ ½P(C)` and `h ≥ P(Ω)/(2|Ω|)`.
pub fn check_contact_bounds(b: &RoundedBody) -> CheckReport {
    const NAME: &str = "contact_bounds";
    guard(NAME, || {
        let res = cheeger(b)?;
        let (a, p) = (b.area(), b.perimeter());
        let mut tally = Tally::at_least(NAME, INEQ_TOL);

        let (lhs, rhs) = (res.contact_length / p, 0.5 * res.area_c / a);
        tally.push(0.0, lhs, rhs, rhs);
        tally.extra("contact_ratio_gap", lhs - rhs);

        let (lhs, rhs) = (res.contact_length, 0.5 * res.perimeter_c);
        tally.push(0.0, lhs, rhs, rhs);
        tally.extra("half_perimeter_gap", lhs - rhs);

        let (lhs, rhs) = (res.h, p / (2.0 * a));
        tally.push(0.0, lhs, rhs, rhs);
        tally.extra("lower_bound_gap", lhs - rhs);

        tally.extra("contact_length", res.contact_length);
        Ok(tally.finish())
    })
}

/// `h(Ωₜ)⁻¹ ≥ h(Ω)⁻¹ + t/2`, the Cheeger Brunn–Minkowski inequality
/// against the disk `tB`; disks give equality.
pub fn check_brunn_minkowski_h(b: &RoundedBody, ts: &[f64]) -> CheckReport {
    const NAME: &str = "brunn_minkowski_cheeger";
    guard(NAME, || {
        let flow = ParallelFlow::new(b)?;
        let base = 1.0 / flow.h(0.0)?;
        let mut tally = Tally::at_least(NAME, INEQ_TOL);
        tally.require(
            !ts.is_empty() && ts.iter().all(|&t| t >= 0.0 && t.is_finite()),
            "grid must be nonempty and lie in [0, ∞)",
        );
        let mut max_gap = 0.0f64;
        for &t in ts {
            let lhs = 1.0 / flow.h(t)?;
            let rhs = base + 0.5 * t;
            tally.push(t, lhs, rhs, rhs);
            max_gap = max_gap.max((lhs - rhs).abs() / rhs);
        }
        tally.extra("max_equality_gap", max_gap);
        if b.is_disk() {
            tally.require(max_gap <= EQUALITY_TOL, "disk without equality");
        }
        Ok(tally.finish())
    })
}

/// Functionals `J` with homogeneity `α` for which `J(Ωₜ)/r(Ωₜ)^α` is
/// monotone along the parallel flow.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Functional {
    Area,
    Perimeter,
    InvCheeger,
}

impl Functional {
    pub const ALL: [Functional; 3] = [Functional::Area, Functional::Perimeter, Functional::InvCheeger];

    pub fn name(self) -> &'static str {
        match self {
            Functional::Area => "area",
            Functional::Perimeter => "perimeter",
            Functional::InvCheeger => "inv_cheeger",
        }
    }

    fn alpha(self) -> i32 {
        match self {
            Functional::Area => 2,
            Functional::Perimeter | Functional::InvCheeger => 1,
        }
    }
}

/// `J(Ωₜ)/r(Ωₜ)^α` is nonincreasing on the grid. On the inner range it is
/// constant while `Ωₜ` is tangential (`t ≤ τ`); for area and perimeter it
/// is strictly decreasing after.
pub fn check_general_monotonicity(b: &RoundedBody, functional: Functional, grid: &[f64]) -> CheckReport {
    let name = format!("monotonicity_{}", functional.name());
    guard(&name, || {
        let flow = ParallelFlow::new(b)?;
        let r = b.inradius();
        let mut tally = Tally::at_least(name.clone(), TOL_SCAN);
        if grid.len() < 2
            || grid.iter().any(|&t| !(t > -r && t.is_finite()))
            || grid.windows(2).any(|w| w[1] <= w[0])
        {
            tally.require(false, "grid must be increasing and lie in (−r, ∞)");
            return Ok(tally.finish());
        }
        let values = sample(grid, |t| {
            let j = match functional {
                Functional::Area => flow.area(t),
                Functional::Perimeter => flow.perimeter(t),
                Functional::InvCheeger => 1.0 / flow.h(t)?,
            };
            Ok(j / flow.inradius(t).powi(functional.alpha()))
        })?;
        let scale = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let tol = TOL_SCAN * scale;
        for (w, v) in grid.windows(2).zip(values.windows(2)) {
            tally.push(w[1], v[0], v[1], scale);
        }

        // τ splits the inner range into a constant and a strict part
        let tau = if b.is_disk() { f64::INFINITY } else { b.tau()? };
        let guard_band = 1e-6 * r;
        let (mut constant, mut strict) = (0usize, 0usize);
        let mut inner_all_strict = true;
        let mut inner_pairs = 0usize;
        for (w, v) in grid.windows(2).zip(values.windows(2)) {
            let d = v[1] - v[0];
            if w[1] > 0.0 {
                continue;
            }
            inner_pairs += 1;
            inner_all_strict &= d < -tol;
            if w[1] <= tau - guard_band {
                constant += 1;
                tally.require(d.abs() <= tol, format!("not constant at t = {}", w[1]));
            } else if w[0] >= tau + guard_band && functional != Functional::InvCheeger {
                // 1/h can stay constant on non-tangential bodies whose
                // Cheeger set is that of a tangential one
                strict += 1;
                tally.require(d < -tol, format!("not strictly decreasing at t = {}", w[1]));
            }
        }
        if tau.is_finite() {
            tally.extra("tau", tau);
        }
        tally.extra("constant_pairs", constant as f64);
        tally.extra("strict_pairs", strict as f64);
        tally.extra(
            "strict_on_inner_range",
            bool_f64(inner_pairs > 0 && inner_all_strict),
        );
        Ok(tally.finish())
    })
}

/// Inequalities obtained from the derivative at `0`:
/// `P ≤ 2|Ω|/r` (equality iff tangential), `P ≥ 2πr` for bodies with a
/// rounded boundary, and `h² − h/r ≤ 2π/|C|`, which is `d/dt (1/h) ≤ 1/(hr)`.
pub fn check_derivative_inequalities(b: &RoundedBody) -> CheckReport {
    const NAME: &str = "derivative_inequalities";
    guard(NAME, || {
        let res = cheeger(b)?;
        let (a, p, r) = (b.area(), b.perimeter(), b.inradius());
        let mut tally = Tally::at_least(NAME, INEQ_TOL);

        let bound = 2.0 * a / r;
        tally.push(0.0, bound, p, p);
        let gap = (bound - p) / p;
        tally.extra("perimeter_inradius_gap", gap);
        tally.require(
            (gap <= EQUALITY_TOL) == tangential(b),
            "equality in P ≤ 2|Ω|/r does not match tangency",
        );

        if b.radius() > 0.0 {
            tally.push(0.0, p, 2.0 * PI * r, p);
            tally.extra("curvature_bound_gap", p - 2.0 * PI * r);
        }

        let curvature = 2.0 * PI / res.area_c;
        let decay = res.h * res.h - res.h / r;
        tally.push(0.0, curvature, decay, curvature);
        tally.extra("cheeger_curvature_gap", curvature - decay);
        Ok(tally.finish())
    })
}

/// Dilations strictly lower `√|Ω|h(Ω)`, and
/// `√|Ω|h(Ω) ≥ P/(2√|Ω|) + √π` with equality iff tangential.
pub fn local_min_demo(b: &RoundedBody) -> CheckReport {
    const NAME: &str = "local_minimizer";
    if b.is_disk() {
        return CheckReport::skipped(NAME, "body is a disk");
    }
    guard(NAME, || {
        let flow = ParallelFlow::new(b)?;
        let r = b.inradius();
        let base = flow.scaled_invariant(0.0)?;
        let mut tally = Tally::strict(NAME, STRICT_MARGIN);
        for t in [0.01 * r, 0.1 * r, r] {
            tally.push(t, base, flow.scaled_invariant(t)?, base);
        }
        let a = b.area();
        let bound = b.perimeter() / (2.0 * a.sqrt()) + PI.sqrt();
        let gap = (base - bound) / bound;
        tally.extra("scaled_invariant", base);
        tally.extra("lower_bound_gap", gap);
        tally.require(gap >= -INEQ_TOL, "lower bound violated");
        tally.require(
            (gap <= EQUALITY_TOL) == tangential(b),
            "equality in the lower bound does not match tangency",
        );
        Ok(tally.finish())
    })
}

/// `√|Ωₜ|h(Ωₜ)` on a grid: nonincreasing; constant up to `τ` and strictly
/// decreasing one grid step beyond it; constant `2√π` for disks.
pub fn check_scaled_monotonicity(b: &RoundedBody, t_min: f64, t_max: f64, n_pts: usize) -> CheckReport {
    const NAME: &str = "scaled_cheeger_monotonicity";
    guard(NAME, || {
        let series = scan_scaled_cheeger(b, t_min, t_max, n_pts)?;
        let scale = series.scale();
        let mut tally = Tally::at_least(NAME, TOL_SCAN);
        for (w, v) in series.t_values.windows(2).zip(series.values.windows(2)) {
            tally.push(w[1], v[0], v[1], scale);
        }
        if b.is_disk() {
            let target = 2.0 * PI.sqrt();
            let dev = series
                .values
                .iter()
                .fold(0.0f64, |m, v| m.max((v - target).abs()));
            tally.extra("max_deviation", dev);
            tally.require(dev <= EQUALITY_TOL, "disk invariant differs from 2√π");
            return Ok(tally.finish());
        }
        let tau = b.tau()?;
        let step = (t_max - t_min) / (n_pts - 1) as f64;
        tally.extra("tau", tau);
        if let Some(below) = series.restrict(f64::NEG_INFINITY, tau) {
            tally.extra("constant_samples", below.len() as f64);
            tally.require(below.verdict == Verdict::Constant, "not constant below τ");
        }
        if let Some(above) = series.restrict(tau + step, f64::INFINITY) {
            tally.extra("strict_samples", above.len() as f64);
            tally.require(
                above.verdict == Verdict::StrictlyDecreasing,
                "not strictly decreasing above τ",
            );
        }
        Ok(tally.finish())
    })
}

/// The derivative `2π/|C| − h²` of `t ↦ h(Ωₜ)` at `0` against finite
/// differences, and against `−h·contact/|C|` when the contact is flat.
pub fn check_derivative_consistency(b: &RoundedBody) -> CheckReport {
    const NAME: &str = "derivative_formula";
    guard(NAME, || {
        let res = cheeger(b)?;
        let step = (1e-3f64).min(b.inradius() / 16.0);
        let fd = derivative_fd(b, step)?;
        let mut tally = Tally::equal(NAME, 1e-6);
        tally.push(0.0, res.derivative_at_zero, fd, res.derivative_at_zero.abs());
        tally.extra("analytic", res.derivative_at_zero);
        tally.extra("finite_difference", fd);
        tally.extra("step", step);
        if res.t_star > b.radius() {
            let (a, c) = polygon_derivative_identity(b)?;
            let gap = (a - c).abs() / a.abs();
            tally.extra("identity_gap", gap);
            tally.require(gap <= EQUALITY_TOL, "derivative forms disagree");
        } else {
            tally.note("Cheeger set is the body; contact form not applicable");
        }
        Ok(tally.finish())
    })
}
