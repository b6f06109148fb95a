//! Cheeger constant and Cheeger set of a rounded body.
//!
//! For a planar convex body `Ω` the Cheeger constant is `1/t*`, where `t*` is
//! the unique root in `(0, r)` of `|Ω₋ₜ| = πt²`, and the Cheeger set is
//! `Ω₋ₜ* ⊕ t*B`.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{InnerParallel, Kernel, RoundedBody, TANGENTIAL_TOL};

/// Relative bracket width at which the root bisection stops.
pub const ROOT_REL_TOL: f64 = 1e-13;
pub const ROOT_MAX_ITER: usize = 200;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheegerResult {
    pub h: f64,
    pub t_star: f64,
    pub cheeger_set: RoundedBody,
    #[serde(rename = "area_C")]
    pub area_c: f64,
    #[serde(rename = "perimeter_C")]
    pub perimeter_c: f64,
    /// Length of `∂C ∩ ∂Ω`.
    pub contact_length: f64,
    /// `d/dt h(Ωₜ)` at `t = 0`.
    pub derivative_at_zero: f64,
}

/// `|Ω₋ₜ| − πt²` for `0 < t < r`.
pub fn inner_area_gap(b: &RoundedBody, t: f64) -> Result<f64> {
    let r = b.inradius();
    if !(t > 0.0 && t < r) {
        return Err(Error::OutOfDomain {
            what: "inner distance",
            value: t,
            lo: 0.0,
            hi: r,
        });
    }
    Ok(b.inner().area(t) - PI * t * t)
}

/// Root of `area(u) = πu²` on `(0, hi)` by bisection, for `area` decreasing
/// with `area(0) > 0` and `area(hi) ≤ π·hi²`.
fn solve_root(area: impl Fn(f64) -> f64, mut hi: f64) -> f64 {
    let mut lo = 0.0;
    for _ in 0..ROOT_MAX_ITER {
        if hi - lo <= ROOT_REL_TOL * hi {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if area(mid) - PI * mid * mid > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

pub fn cheeger(b: &RoundedBody) -> Result<CheegerResult> {
    if !b.has_interior() {
        return Err(Error::EmptyInterior);
    }
    let family = b.inner();
    let t_star = solve_root(|u| family.area(u), family.inradius());
    let s = b.radius();
    let (cheeger_set, contact_length) = if t_star > s {
        let core = family.body(t_star)?;
        let set = RoundedBody::new(core.kernel().clone(), t_star)?;
        let contact = set.kernel().perimeter();
        (set, contact)
    } else {
        (b.clone(), b.perimeter())
    };
    let h = 1.0 / t_star;
    let area_c = cheeger_set.area();
    let perimeter_c = cheeger_set.perimeter();
    Ok(CheegerResult {
        h,
        t_star,
        area_c,
        perimeter_c,
        contact_length,
        derivative_at_zero: 2.0 * PI / area_c - h * h,
        cheeger_set,
    })
}

/// `t ↦ h(Ωₜ)` for all `t > −r`, evaluated from one erosion schedule.
#[derive(Debug, Clone)]
pub struct ParallelFlow<'a> {
    family: InnerParallel<'a>,
}

impl<'a> ParallelFlow<'a> {
    pub fn new(b: &'a RoundedBody) -> Result<Self> {
        if !b.has_interior() {
            return Err(Error::EmptyInterior);
        }
        Ok(ParallelFlow { family: b.inner() })
    }

    fn check(&self, t: f64) -> Result<()> {
        let r = self.family.inradius();
        if t.is_finite() && t > -r {
            Ok(())
        } else {
            Err(Error::OutOfDomain {
                what: "parallel distance",
                value: t,
                lo: -r,
                hi: f64::INFINITY,
            })
        }
    }

    pub fn area(&self, t: f64) -> f64 {
        self.family.area(-t)
    }

    pub fn perimeter(&self, t: f64) -> f64 {
        self.family.perimeter(-t)
    }

    pub fn inradius(&self, t: f64) -> f64 {
        self.family.inradius() + t
    }

    /// `h(Ωₜ)`: the inner body of `Ωₜ` at distance `u` is `Ω_{t−u}`.
    pub fn h(&self, t: f64) -> Result<f64> {
        self.check(t)?;
        let u = solve_root(|u| self.family.area(u - t), self.inradius(t));
        Ok(1.0 / u)
    }

    /// `√|Ωₜ| · h(Ωₜ)`.
    pub fn scaled_invariant(&self, t: f64) -> Result<f64> {
        Ok(self.area(t).sqrt() * self.h(t)?)
    }
}

/// `√|Ω| · h(Ω)`, invariant under scaling.
pub fn scaled_invariant(b: &RoundedBody) -> Result<f64> {
    Ok(b.area().sqrt() * cheeger(b)?.h)
}

/// `h = P/(2|Ω|) + √(π/|Ω|)`, valid for tangential polygons and disks.
pub fn tangential_closed_form_h(b: &RoundedBody) -> Result<f64> {
    let ok = match b.kernel() {
        Kernel::Polygon(p) => b.radius() == 0.0 && p.is_tangential(TANGENTIAL_TOL),
        Kernel::Point(_) => b.is_disk(),
        Kernel::Segment(..) => false,
    };
    if !ok {
        return Err(Error::NotTangential);
    }
    let (a, p) = (b.area(), b.perimeter());
    Ok(p / (2.0 * a) + (PI / a).sqrt())
}

/// `h(R₋ₜ)` for the `2 × 1` rectangle `R`, in closed form:
/// `(4 − π)/(3 − 4t − √(1 + π(1−2t)(2−2t)))` for `0 ≤ t < 1/2`.
pub fn rect2x1_inner_h(t: f64) -> f64 {
    (4.0 - PI) / (3.0 - 4.0 * t - (1.0 + PI * (1.0 - 2.0 * t) * (2.0 - 2.0 * t)).sqrt())
}

/// Richardson-extrapolated central difference of `t ↦ h(Ωₜ)` at `0`.
pub fn derivative_fd(b: &RoundedBody, step: f64) -> Result<f64> {
    let r = b.inradius();
    if !(step > 0.0 && step < r / 8.0) {
        return Err(Error::OutOfDomain {
            what: "finite-difference step",
            value: step,
            lo: 0.0,
            hi: r / 8.0,
        });
    }
    let central = |s: f64| -> Result<f64> {
        let plus = cheeger(&b.parallel(s)?)?.h;
        let minus = cheeger(&b.parallel(-s)?)?.h;
        Ok((plus - minus) / (2.0 * s))
    };
    let coarse = central(step)?;
    let fine = central(0.5 * step)?;
    Ok((4.0 * fine - coarse) / 3.0)
}

/// The derivative at zero in two forms, `2π/|C| − h²` and `−h·contact/|C|`.
/// They agree when the contact set consists of flat edges only.
pub fn polygon_derivative_identity(b: &RoundedBody) -> Result<(f64, f64)> {
    let res = cheeger(b)?;
    if res.t_star <= b.radius() {
        return Err(Error::Precondition(format!(
            "Cheeger radius {} does not exceed body radius {}",
            res.t_star,
            b.radius()
        )));
    }
    Ok((
        res.derivative_at_zero,
        -res.h * res.contact_length / res.area_c,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{shapes, Point2};

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    fn square() -> RoundedBody {
        RoundedBody::polygon(shapes::square(1.0))
    }

    #[test]
    fn gap_examples() {
        let t = 1.0 / (2.0 + PI.sqrt());
        assert!(inner_area_gap(&square(), t).unwrap().abs() < 1e-12);
        assert!((inner_area_gap(&square(), 1e-12).unwrap() - 1.0).abs() < 1e-11);
        let disk = RoundedBody::disk(Point2::ORIGIN, 1.0).unwrap();
        assert!(inner_area_gap(&disk, 0.5).unwrap().abs() < 1e-15);
        assert!(inner_area_gap(&square(), 0.0).is_err());
        assert!(inner_area_gap(&square(), 0.5).is_err());
    }

    #[test]
    fn square_values() {
        let res = cheeger(&square()).unwrap();
        let h = 2.0 + PI.sqrt();
        let t = 1.0 / h;
        let area = 1.0 - (4.0 - PI) * t * t;
        assert!(rel(res.h, h) < 1e-12);
        assert!(rel(res.area_c, area) < 1e-11);
        assert!(rel(res.contact_length, h * area - 2.0 * PI * t) < 1e-10);
        assert!(rel(res.t_star, 0.2650794) < 1e-6);
        assert!(rel(res.area_c, 0.9396821) < 1e-6);
        assert!(rel(res.contact_length, 1.8793644) < 1e-6);
        assert!(rel(res.h, res.perimeter_c / res.area_c) < 1e-10);
    }

    #[test]
    fn disk_values() {
        for r in [0.5, 1.0, 3.0] {
            let disk = RoundedBody::disk(Point2::new(1.0, -2.0), r).unwrap();
            let res = cheeger(&disk).unwrap();
            assert!(rel(res.h, 2.0 / r) < 1e-12);
            assert_eq!(res.cheeger_set, disk);
            assert!(rel(res.contact_length, 2.0 * PI * r) < 1e-15);
            assert!(rel(scaled_invariant(&disk).unwrap(), 2.0 * PI.sqrt()) < 1e-12);
        }
    }

    #[test]
    fn rectangle_and_triangle() {
        let rect = RoundedBody::polygon(shapes::rect(2.0, 1.0));
        let expected = (4.0 - PI) / (3.0 - (1.0 + 2.0 * PI).sqrt());
        assert!(rel(cheeger(&rect).unwrap().h, expected) < 1e-11);
        assert!(rel(expected, 2.84937) < 1e-5);

        let tri = RoundedBody::polygon(shapes::equilateral(1.0));
        let h = cheeger(&tri).unwrap().h;
        assert!(rel(h, 6.157645) < 1e-6);
        assert!(rel(h, tangential_closed_form_h(&tri).unwrap()) < 1e-11);
    }

    #[test]
    fn closed_form_preconditions() {
        assert!(rel(tangential_closed_form_h(&square()).unwrap(), 2.0 + PI.sqrt()) < 1e-15);
        let disk = RoundedBody::disk(Point2::ORIGIN, 1.0).unwrap();
        assert!(rel(tangential_closed_form_h(&disk).unwrap(), 2.0) < 1e-15);
        let rect = RoundedBody::polygon(shapes::rect(2.0, 1.0));
        assert_eq!(tangential_closed_form_h(&rect), Err(Error::NotTangential));
        let rounded = square().parallel(0.1).unwrap();
        assert!(tangential_closed_form_h(&rounded).is_err());
    }

    #[test]
    fn scale_equivariance() {
        let s1 = scaled_invariant(&square()).unwrap();
        let s7 = scaled_invariant(&RoundedBody::polygon(shapes::square(7.0))).unwrap();
        assert!(rel(s7, s1) < 1e-12);
        assert!(rel(s1, 2.0 + PI.sqrt()) < 1e-12);
    }

    #[test]
    fn set_is_inside_and_rolls() {
        // a large rounding radius keeps the whole body as its own Cheeger set
        let fat = RoundedBody::polygon(shapes::square(0.1)).parallel(1.0).unwrap();
        let res = cheeger(&fat).unwrap();
        assert!(res.t_star <= fat.radius());
        assert_eq!(res.cheeger_set, fat);
        assert_eq!(res.contact_length, fat.perimeter());

        let res = cheeger(&square()).unwrap();
        assert!(rel(res.cheeger_set.radius(), res.t_star) < 1e-15);
        assert!(res.contact_length <= res.perimeter_c.min(4.0));
    }

    #[test]
    fn flow_matches_direct_solves() {
        for body in [
            square(),
            RoundedBody::polygon(shapes::quadrilateral_q()),
            square().parallel(0.3).unwrap(),
            RoundedBody::disk(Point2::ORIGIN, 1.0).unwrap(),
        ] {
            let flow = ParallelFlow::new(&body).unwrap();
            let r = body.inradius();
            for t in [-0.9 * r, -0.5 * r, -0.05 * r, 0.0, 0.2, 1.5] {
                let direct = body.parallel(t).unwrap();
                assert!(rel(flow.h(t).unwrap(), cheeger(&direct).unwrap().h) < 1e-12, "t = {t}");
                assert!(rel(flow.area(t), direct.area()) < 1e-12);
                assert!(rel(flow.perimeter(t), direct.perimeter()) < 1e-12);
            }
            assert!(flow.h(-r).is_err());
        }
    }

    #[test]
    fn derivative_forms() {
        let (a, b) = polygon_derivative_identity(&square()).unwrap();
        assert!(rel(a, b) < 1e-10);
        assert!(rel(a, -7.5451) < 1e-4, "{a}");
        let fd = derivative_fd(&square(), 1e-3).unwrap();
        assert!(rel(fd, a) < 1e-6, "{fd} vs {a}");

        let disk = RoundedBody::disk(Point2::ORIGIN, 2.0).unwrap();
        let fd = derivative_fd(&disk, 1e-3).unwrap();
        assert!(rel(fd, -0.5) < 1e-6);
        assert!(polygon_derivative_identity(&disk).is_err());
        assert!(derivative_fd(&square(), 0.1).is_err());
    }
}
