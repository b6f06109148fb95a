use serde::Serialize;

use super::point::{diameter, loop_length, signed_area, Point2};
use super::wavefront::Wavefront;
use super::{Kernel, TOL_GEO};
use crate::error::{Error, Result};

/// Default tolerance of [`ConvexPolygon::is_tangential`], relative to the diameter.
pub const TANGENTIAL_TOL: f64 = 1e-8;

/// Supporting line `{x : ⟨normal, x⟩ = offset}` of one edge, with the polygon
/// on the side `⟨normal, x⟩ ≤ offset`. The normal is outward and unit length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgeLine {
    pub normal: Point2,
    pub offset: f64,
}

impl EdgeLine {
    pub fn through(a: Point2, b: Point2) -> Self {
        let d = (b - a).unit();
        let normal = Point2::new(d.y, -d.x);
        EdgeLine {
            normal,
            offset: normal.dot(a),
        }
    }

    /// Signed distance from `p` to the line, positive inside.
    #[inline]
    pub fn inner_distance(&self, p: Point2) -> f64 {
        self.offset - self.normal.dot(p)
    }

    /// Unit direction of the edge in counterclockwise traversal.
    #[inline]
    pub fn direction(&self) -> Point2 {
        self.normal.perp()
    }
}

/// A strictly convex polygon with counterclockwise vertices.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvexPolygon {
    vertices: Vec<Point2>,
}

impl ConvexPolygon {
    /// Validates and wraps a counterclockwise vertex list.
    pub fn new(vertices: Vec<Point2>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::InvalidPolygon(format!(
                "need at least 3 vertices, got {n}"
            )));
        }
        if let Some(i) = vertices.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidPolygon(format!("vertex {i} is not finite")));
        }
        let diam = diameter(&vertices);
        if diam <= 0.0 {
            return Err(Error::InvalidPolygon("all vertices coincide".into()));
        }
        if signed_area(&vertices) <= 0.0 {
            return Err(Error::InvalidPolygon(
                "vertices must be in counterclockwise order".into(),
            ));
        }
        for i in 0..n {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            let c = vertices[(i + 2) % n];
            if a.dist(b) <= TOL_GEO * diam {
                return Err(Error::InvalidPolygon(format!(
                    "vertices {i} and {} coincide",
                    (i + 1) % n
                )));
            }
            if (b - a).cross(c - b) <= TOL_GEO * diam * diam {
                return Err(Error::InvalidPolygon(format!(
                    "not strictly convex at vertex {}",
                    (i + 1) % n
                )));
            }
        }
        Ok(ConvexPolygon { vertices })
    }

    /// Drops near-duplicate and near-collinear vertices before validating.
    /// Used for polygons produced by erosion, where vanishing edges leave
    /// vertices closer than the tolerance.
    pub(crate) fn from_noisy(mut vertices: Vec<Point2>) -> Option<Self> {
        loop {
            let n = vertices.len();
            if n < 3 {
                return None;
            }
            let diam = diameter(&vertices);
            let mut drop = None;
            for i in 0..n {
                let prev = vertices[(i + n - 1) % n];
                let cur = vertices[i];
                let next = vertices[(i + 1) % n];
                if cur.dist(next) <= TOL_GEO * diam
                    || (cur - prev).cross(next - cur) <= TOL_GEO * diam * diam
                {
                    drop = Some(i);
                    break;
                }
            }
            match drop {
                Some(i) => {
                    vertices.remove(i);
                }
                None => return ConvexPolygon::new(vertices).ok(),
            }
        }
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn area(&self) -> f64 {
        signed_area(&self.vertices)
    }

    pub fn perimeter(&self) -> f64 {
        loop_length(&self.vertices)
    }

    pub fn diameter(&self) -> f64 {
        diameter(&self.vertices)
    }

    /// Supporting lines of the edges, edge `i` running from vertex `i` to `i + 1`.
    pub fn edge_lines(&self) -> Vec<EdgeLine> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| EdgeLine::through(self.vertices[i], self.vertices[(i + 1) % n]))
            .collect()
    }

    /// Outward unit normals of the edges.
    pub fn normals(&self) -> Vec<Point2> {
        self.edge_lines().into_iter().map(|l| l.normal).collect()
    }

    pub fn scaled(&self, factor: f64) -> ConvexPolygon {
        ConvexPolygon {
            vertices: self.vertices.iter().map(|&v| v * factor).collect(),
        }
    }

    pub fn translated(&self, by: Point2) -> ConvexPolygon {
        ConvexPolygon {
            vertices: self.vertices.iter().map(|&v| v + by).collect(),
        }
    }

    /// Whether `p` lies in the closed polygon, up to `slack` (length units).
    pub fn contains(&self, p: Point2, slack: f64) -> bool {
        self.edge_lines()
            .iter()
            .all(|l| l.inner_distance(p) >= -slack)
    }

    /// Center and radius of the largest inscribed disk. When the set of
    /// centers is a segment, its midpoint is returned.
    pub fn chebyshev_center(&self) -> (Point2, f64) {
        let wf = Wavefront::new(self);
        (wf.center(), wf.inradius())
    }

    pub fn inradius(&self) -> f64 {
        Wavefront::new(self).inradius()
    }

    /// Inner parallel set at distance `t`: the intersection of all edge
    /// half-planes moved inward by `t`.
    pub fn erode(&self, t: f64) -> Result<Kernel> {
        Wavefront::new(self).kernel_at(t)
    }

    /// The polygon `⋂ᵢ {x : ⟨x, uᵢ⟩ ≤ 1}` over the outward edge normals, which
    /// circumscribes the unit disk centered at the origin.
    pub fn form_body(&self) -> ConvexPolygon {
        let normals = self.normals();
        let n = normals.len();
        let vertices = (0..n)
            .map(|i| {
                let a = normals[(i + n - 1) % n];
                let b = normals[i];
                // ⟨a, x⟩ = 1, ⟨b, x⟩ = 1
                let det = a.cross(b);
                Point2::new((b.y - a.y) / det, (a.x - b.x) / det)
            })
            .collect();
        ConvexPolygon::new(vertices).expect("form body of a valid polygon is valid")
    }

    /// Whether every edge line is tangent to one common circle, i.e. whether
    /// the polygon is homothetic to its form body.
    ///
    /// Solves `offsetᵢ − ⟨nᵢ, c⟩ = r` in the least-squares sense for `(c, r)`
    /// and accepts when the worst residual and the gap between `r` and the
    /// inradius are both within `tol · diam`.
    pub fn is_tangential(&self, tol: f64) -> bool {
        let diam = self.diameter();
        let origin = self.centroid();
        let rows: Vec<([f64; 3], f64)> = self
            .edge_lines()
            .iter()
            .map(|l| {
                (
                    [l.normal.x, l.normal.y, 1.0],
                    l.offset - l.normal.dot(origin),
                )
            })
            .collect();
        let Some([cx, cy, r]) = least_squares3(&rows) else {
            return false;
        };
        let worst = rows
            .iter()
            .map(|(a, b)| (a[0] * cx + a[1] * cy + a[2] * r - b).abs())
            .fold(0.0, f64::max);
        worst <= tol * diam && (r - self.inradius()).abs() <= tol * diam
    }

    pub fn centroid(&self) -> Point2 {
        let n = self.vertices.len() as f64;
        let s = self
            .vertices
            .iter()
            .fold(Point2::ORIGIN, |acc, &v| acc + v);
        s * (1.0 / n)
    }
}

/// Least squares for `rows · x ≈ rhs` with three unknowns via the normal
/// equations and partial pivoting.
fn least_squares3(rows: &[([f64; 3], f64)]) -> Option<[f64; 3]> {
    let mut m = [[0.0f64; 4]; 3];
    for (a, b) in rows {
        for i in 0..3 {
            for j in 0..3 {
                m[i][j] += a[i] * a[j];
            }
            m[i][3] += a[i] * b;
        }
    }
    for col in 0..3 {
        let piv = (col..3).max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))?;
        if m[piv][col].abs() < 1e-14 {
            return None;
        }
        m.swap(col, piv);
        for row in 0..3 {
            if row != col {
                let f = m[row][col] / m[col][col];
                for k in col..4 {
                    m[row][k] -= f * m[col][k];
                }
            }
        }
    }
    Some([m[0][3] / m[0][0], m[1][3] / m[1][1], m[2][3] / m[2][2]])
}
