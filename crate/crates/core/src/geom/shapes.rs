//! Named polygons used throughout the crate and its tests.

use std::f64::consts::PI;

use super::{ConvexPolygon, Point2};

/// Axis-aligned square `[0, a]²`.
pub fn square(a: f64) -> ConvexPolygon {
    rect(a, a)
}

/// Axis-aligned rectangle `[0, a] × [0, b]`.
pub fn rect(a: f64, b: f64) -> ConvexPolygon {
    ConvexPolygon::new(vec![
        Point2::new(0.0, 0.0),
        Point2::new(a, 0.0),
        Point2::new(a, b),
        Point2::new(0.0, b),
    ])
    .expect("rectangle with positive sides")
}

/// Regular `n`-gon with the given side length, centered at the origin with a
/// horizontal bottom edge.
pub fn regular(n: usize, side: f64) -> ConvexPolygon {
    let circumradius = side / (2.0 * (PI / n as f64).sin());
    let start = -PI / 2.0 - PI / n as f64;
    let vertices = (0..n)
        .map(|k| Point2::from_angle(start + 2.0 * PI * k as f64 / n as f64) * circumradius)
        .collect();
    ConvexPolygon::new(vertices).expect("regular polygon")
}

/// Equilateral triangle `(0,0), (a,0), (a/2, a√3/2)`.
pub fn equilateral(a: f64) -> ConvexPolygon {
    ConvexPolygon::new(vec![
        Point2::new(0.0, 0.0),
        Point2::new(a, 0.0),
        Point2::new(0.5 * a, 0.5 * a * 3f64.sqrt()),
    ])
    .expect("equilateral triangle")
}

/// Right isosceles triangle `(0,0), (1,0), (0,1)`.
pub fn right_triangle() -> ConvexPolygon {
    ConvexPolygon::new(vec![
        Point2::new(0.0, 0.0),
        Point2::new(1.0, 0.0),
        Point2::new(0.0, 1.0),
    ])
    .expect("right triangle")
}

/// The triangle `(−1,0), (1,0), (0,1)` with its apex cut at height 0.99.
pub fn quadrilateral_q() -> ConvexPolygon {
    ConvexPolygon::new(vec![
        Point2::new(-1.0, 0.0),
        Point2::new(1.0, 0.0),
        Point2::new(0.01, 0.99),
        Point2::new(-0.01, 0.99),
    ])
    .expect("quadrilateral")
}

/// The triangle `(−1,0), (1,0), (0,1)` enclosing [`quadrilateral_q`].
pub fn apex_triangle() -> ConvexPolygon {
    ConvexPolygon::new(vec![
        Point2::new(-1.0, 0.0),
        Point2::new(1.0, 0.0),
        Point2::new(0.0, 1.0),
    ])
    .expect("triangle")
}
