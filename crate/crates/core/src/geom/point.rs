use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// A point (or free vector) in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const ORIGIN: Point2 = Point2 { x: 0.0, y: 0.0 };

    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    #[inline]
    pub fn dot(self, other: Point2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3D cross product; positive when `other` is
    /// counterclockwise from `self`.
    #[inline]
    pub fn cross(self, other: Point2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn dist(self, other: Point2) -> f64 {
        (self - other).norm()
    }

    /// Rotation by +90°.
    #[inline]
    pub fn perp(self) -> Point2 {
        Point2::new(-self.y, self.x)
    }

    #[inline]
    pub fn midpoint(self, other: Point2) -> Point2 {
        Point2::new(0.5 * (self.x + other.x), 0.5 * (self.y + other.y))
    }

    pub fn unit(self) -> Point2 {
        let n = self.norm();
        Point2::new(self.x / n, self.y / n)
    }

    #[inline]
    pub fn from_angle(theta: f64) -> Point2 {
        Point2::new(theta.cos(), theta.sin())
    }
}

impl Add for Point2 {
    type Output = Point2;
    #[inline]
    fn add(self, o: Point2) -> Point2 {
        Point2::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point2 {
    type Output = Point2;
    #[inline]
    fn sub(self, o: Point2) -> Point2 {
        Point2::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Point2;
    #[inline]
    fn mul(self, k: f64) -> Point2 {
        Point2::new(self.x * k, self.y * k)
    }
}

impl Neg for Point2 {
    type Output = Point2;
    #[inline]
    fn neg(self) -> Point2 {
        Point2::new(-self.x, -self.y)
    }
}

impl From<[f64; 2]> for Point2 {
    fn from([x, y]: [f64; 2]) -> Self {
        Point2::new(x, y)
    }
}

/// Signed area of a closed vertex loop (shoelace); positive for CCW.
///
/// Coordinates are taken relative to the first vertex, so small loops far
/// from the origin do not lose digits to cancellation.
pub fn signed_area(vertices: &[Point2]) -> f64 {
    let n = vertices.len();
    if n < 3 {
        return 0.0;
    }
    let o = vertices[0];
    let mut acc = 0.0;
    for i in 1..n - 1 {
        acc += (vertices[i] - o).cross(vertices[i + 1] - o);
    }
    0.5 * acc
}

/// Length of a closed vertex loop.
pub fn loop_length(vertices: &[Point2]) -> f64 {
    let n = vertices.len();
    if n < 2 {
        return 0.0;
    }
    (0..n).map(|i| vertices[i].dist(vertices[(i + 1) % n])).sum()
}

/// Largest pairwise distance.
pub fn diameter(points: &[Point2]) -> f64 {
    let mut d: f64 = 0.0;
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            d = d.max(p.dist(*q));
        }
    }
    d
}

/// Indices of a pair realizing [`diameter`].
pub(crate) fn farthest_pair(points: &[Point2]) -> (usize, usize) {
    let mut best = (0, 0);
    let mut d = -1.0;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let dij = points[i].dist(points[j]);
            if dij > d {
                d = dij;
                best = (i, j);
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shoelace_unit_square() {
        let sq = [
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.0, 1.0),
        ];
        assert_eq!(signed_area(&sq), 1.0);
        assert_eq!(loop_length(&sq), 4.0);
        assert!((diameter(&sq) - 2f64.sqrt()).abs() < 1e-15);
        let mut rev = sq;
        rev.reverse();
        assert_eq!(signed_area(&rev), -1.0);
    }

    #[test]
    fn shoelace_far_from_origin() {
        let (c, d) = (Point2::new(3.7, -2.9), 1e-6);
        let sq = [c, c + Point2::new(d, 0.0), c + Point2::new(d, d), c + Point2::new(0.0, d)];
        assert!((signed_area(&sq) / (d * d) - 1.0).abs() < 1e-9);
    }

    #[test]
    fn cross_orientation() {
        let ex = Point2::new(1.0, 0.0);
        assert!(ex.cross(ex.perp()) > 0.0);
        assert_eq!(ex.perp(), Point2::new(0.0, 1.0));
    }
}
