//! Closed-form first Dirichlet eigenvalues and related bounds.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::cheeger::rect2x1_inner_h;

/// `√λ₁` of the unit disk: first zero of the Bessel function `J₀`.
pub const J2: f64 = 2.404825557695773;

/// First negative zero of the Airy function `Ai`.
pub const AIRY_A1: f64 = -2.338107410459767;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RectSpec {
    a: f64,
    b: f64,
}

impl RectSpec {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        for (name, v) in [("a", a), ("b", b)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::param(name, format!("must be finite and > 0, got {v}")));
            }
        }
        Ok(RectSpec { a, b })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn area(&self) -> f64 {
        self.a * self.b
    }

    pub fn perimeter(&self) -> f64 {
        2.0 * (self.a + self.b)
    }
}

/// `π²(1/a² + 1/b²)`.
pub fn lambda1_rectangle(r: RectSpec) -> f64 {
    PI * PI * (1.0 / (r.a * r.a) + 1.0 / (r.b * r.b))
}

/// `(j₂/r)²`.
pub fn lambda1_disk(r: f64) -> Result<f64> {
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::param("r", format!("must be finite and > 0, got {r}")));
    }
    Ok((J2 / r) * (J2 / r))
}

/// Whether `√λ₁ > (j₂/2)·P/|R|`.
pub fn eigenvalue_perimeter_condition(r: RectSpec) -> bool {
    lambda1_rectangle(r).sqrt() > 0.5 * J2 * r.perimeter() / r.area()
}

/// Width `ε` of the `ε × 1` rectangle at which the eigenvalue condition
/// switches from true (thin) to false (square), found by bisection.
pub fn eigenvalue_condition_threshold() -> f64 {
    let holds = |eps: f64| eigenvalue_perimeter_condition(RectSpec { a: eps, b: 1.0 });
    let (mut lo, mut hi) = (1e-6, 1.0);
    debug_assert!(holds(lo) && !holds(hi));
    while hi - lo > 1e-15 {
        let mid = 0.5 * (lo + hi);
        if holds(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// `λ₁` of the inner parallel body at distance `t` of the `2 × 1` rectangle,
/// written in the half-width form `π²(1/(1−2t)² + 1/(4(1−t)²))`.
pub fn lambda1_inner_rect2x1(t: f64) -> f64 {
    PI * PI * (1.0 / ((1.0 - 2.0 * t) * (1.0 - 2.0 * t)) + 1.0 / (4.0 * (1.0 - t) * (1.0 - t)))
}

/// `h(R₋ₜ)/√λ₁(R₋ₜ)` for the `2 × 1` rectangle, from closed forms.
pub fn ratio_lambda_h(t: f64) -> Result<f64> {
    if !(0.0..0.5).contains(&t) {
        return Err(Error::OutOfDomain {
            what: "inner distance",
            value: t,
            lo: 0.0,
            hi: 0.5,
        });
    }
    Ok(rect2x1_inner_h(t) / lambda1_inner_rect2x1(t).sqrt())
}

/// Upper bound for the first zero of `J_{n/2−1}` in terms of the Airy zero.
pub fn bessel_bound(n: u32) -> f64 {
    let nu = n as f64 / 2.0 - 1.0;
    nu - AIRY_A1 / 2f64.cbrt() * nu.cbrt() + 0.15 * AIRY_A1 * AIRY_A1 * (2.0 / nu).cbrt()
}

/// Whether `bessel_bound(n) < πn/2` for every `n` in `3..=n_max`.
pub fn bessel_bound_check(n_max: u32) -> Result<bool> {
    if n_max < 3 {
        return Err(Error::param("n_max", format!("must be ≥ 3, got {n_max}")));
    }
    Ok((3..=n_max).all(|n| bessel_bound(n) < PI * n as f64 / 2.0))
}
