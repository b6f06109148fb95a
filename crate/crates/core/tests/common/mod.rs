//! Reference implementations used as oracles. Deliberately naive and
//! independent of the library's algorithms.
#![allow(dead_code)]

use std::f64::consts::PI;

use cheeger_core::geom::{ConvexPolygon, Point2};
use proptest::prelude::*;

pub fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

pub fn shoelace(pts: &[(f64, f64)]) -> f64 {
    let n = pts.len();
    (0..n)
        .map(|i| {
            let (a, b) = (pts[i], pts[(i + 1) % n]);
            a.0 * b.1 - a.1 * b.0
        })
        .sum::<f64>()
        / 2.0
}

fn xy(p: Point2) -> (f64, f64) {
    (p.x, p.y)
}

/// Outward unit normal and offset of each edge, recomputed from scratch.
pub fn half_planes(p: &ConvexPolygon) -> Vec<((f64, f64), f64)> {
    let v: Vec<(f64, f64)> = p.vertices().iter().copied().map(xy).collect();
    let n = v.len();
    (0..n)
        .map(|i| {
            let (a, b) = (v[i], v[(i + 1) % n]);
            let (dx, dy) = (b.0 - a.0, b.1 - a.1);
            let len = dx.hypot(dy);
            let normal = (dy / len, -dx / len);
            (normal, normal.0 * a.0 + normal.1 * a.1)
        })
        .collect()
}

/// Clips a polygon by `⟨n, x⟩ ≤ c`.
fn clip(poly: &[(f64, f64)], n: (f64, f64), c: f64) -> Vec<(f64, f64)> {
    let inside = |p: (f64, f64)| n.0 * p.0 + n.1 * p.1 <= c;
    let cross = |a: (f64, f64), b: (f64, f64)| {
        let da = n.0 * a.0 + n.1 * a.1 - c;
        let db = n.0 * b.0 + n.1 * b.1 - c;
        let s = da / (da - db);
        (a.0 + s * (b.0 - a.0), a.1 + s * (b.1 - a.1))
    };
    let mut out = Vec::new();
    for i in 0..poly.len() {
        let cur = poly[i];
        let prev = poly[(i + poly.len() - 1) % poly.len()];
        match (inside(prev), inside(cur)) {
            (true, true) => out.push(cur),
            (true, false) => out.push(cross(prev, cur)),
            (false, true) => {
                out.push(cross(prev, cur));
                out.push(cur);
            }
            (false, false) => {}
        }
    }
    out
}

/// Area of the polygon with every edge moved inward by `t`, by successive
/// half-plane clipping of the original polygon.
pub fn clipped_erosion_area(p: &ConvexPolygon, t: f64) -> f64 {
    let mut poly: Vec<(f64, f64)> = p.vertices().iter().copied().map(xy).collect();
    for (n, c) in half_planes(p) {
        poly = clip(&poly, n, c - t);
        if poly.len() < 3 {
            return 0.0;
        }
    }
    shoelace(&poly).max(0.0)
}

/// Largest inscribed disk by enumerating all triples of edge lines.
pub fn brute_chebyshev(p: &ConvexPolygon) -> ((f64, f64), f64) {
    let hp = half_planes(p);
    let m = hp.len();
    let scale = p.diameter();
    let mut best = ((0.0, 0.0), f64::NEG_INFINITY);
    for i in 0..m {
        for j in i + 1..m {
            for k in j + 1..m {
                // ⟨n, c⟩ + r = b for the three lines
                let rows = [hp[i], hp[j], hp[k]];
                let a = rows.map(|((x, y), b)| [x, y, 1.0, b]);
                let Some((cx, cy, r)) = solve3(a) else { continue };
                let feasible = hp
                    .iter()
                    .all(|&((x, y), b)| x * cx + y * cy + r <= b + 1e-12 * scale);
                if feasible && r > best.1 {
                    best = ((cx, cy), r);
                }
            }
        }
    }
    best
}

fn solve3(mut a: [[f64; 4]; 3]) -> Option<(f64, f64, f64)> {
    for col in 0..3 {
        let piv = (col..3).max_by(|&x, &y| a[x][col].abs().total_cmp(&a[y][col].abs()))?;
        if a[piv][col].abs() < 1e-12 {
            return None;
        }
        a.swap(col, piv);
        for row in 0..3 {
            if row != col {
                let f = a[row][col] / a[col][col];
                for k in col..4 {
                    a[row][k] -= f * a[col][k];
                }
            }
        }
    }
    Some((a[0][3] / a[0][0], a[1][3] / a[1][1], a[2][3] / a[2][2]))
}

/// Andrew's monotone chain; counterclockwise, collinear points dropped.
pub fn convex_hull(mut pts: Vec<(f64, f64)>) -> Vec<(f64, f64)> {
    pts.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    let turn = |o: (f64, f64), a: (f64, f64), b: (f64, f64)| {
        (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
    };
    let mut hull: Vec<(f64, f64)> = Vec::new();
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &(f64, f64)>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for &p in iter {
            while hull.len() >= start + 2 && turn(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull
}

/// Area and perimeter of `kernel ⊕ sB` with the disk replaced by the
/// regular `m`-gon inscribed in it, via the convex hull of translated copies.
pub fn minkowski_ngon(kernel: &[Point2], s: f64, m: usize) -> (f64, f64) {
    let mut pts = Vec::with_capacity(kernel.len() * m);
    for v in kernel {
        for k in 0..m {
            let th = 2.0 * PI * k as f64 / m as f64;
            pts.push((v.x + s * th.cos(), v.y + s * th.sin()));
        }
    }
    let hull = convex_hull(pts);
    let n = hull.len();
    let per = (0..n)
        .map(|i| {
            let (a, b) = (hull[i], hull[(i + 1) % n]);
            (b.0 - a.0).hypot(b.1 - a.1)
        })
        .sum();
    (shoelace(&hull), per)
}

/// Convex polygons with vertices on a random ellipse, rotated and shifted.
pub fn ellipse_polygon() -> impl Strategy<Value = ConvexPolygon> {
    (
        prop::collection::vec(0.0f64..1.0, 3..14),
        0.2f64..1.0,
        0.0f64..PI,
        -2.0f64..2.0,
        -2.0f64..2.0,
    )
        .prop_filter_map("degenerate polygon", |(gaps, aspect, rot, dx, dy)| {
            let weights: Vec<f64> = gaps.iter().map(|g| 0.15 + g).collect();
            let total: f64 = weights.iter().sum();
            let mut angle = 0.0;
            let (c, s) = (rot.cos(), rot.sin());
            let vertices = weights
                .iter()
                .map(|w| {
                    angle += 2.0 * PI * w / total;
                    let (x, y) = (angle.cos(), aspect * angle.sin());
                    Point2::new(c * x - s * y + dx, s * x + c * y + dy)
                })
                .collect();
            ConvexPolygon::new(vertices).ok()
        })
}

/// Polygons circumscribed about a disk: tangential by construction.
pub fn tangential_polygon() -> impl Strategy<Value = ConvexPolygon> {
    (prop::collection::vec(0.0f64..1.0, 3..10), 0.3f64..3.0).prop_filter_map(
        "gap of π or more",
        |(gaps, radius)| {
            let weights: Vec<f64> = gaps.iter().map(|g| 0.2 + g).collect();
            let total: f64 = weights.iter().sum();
            let mut angle = 0.0;
            let normals: Vec<f64> = weights
                .iter()
                .map(|w| {
                    angle += 2.0 * PI * w / total;
                    angle
                })
                .collect();
            let n = normals.len();
            let mut vertices = Vec::with_capacity(n);
            for i in 0..n {
                let (a, b) = (normals[i], normals[(i + 1) % n]);
                let mut gap = b - a;
                if gap <= 0.0 {
                    gap += 2.0 * PI;
                }
                if gap >= 0.95 * PI {
                    return None;
                }
                // corner between tangent lines at angles a and b
                let mid = a + gap / 2.0;
                let d = radius / (gap / 2.0).cos();
                vertices.push(Point2::new(d * mid.cos(), d * mid.sin()));
            }
            ConvexPolygon::new(vertices).ok()
        },
    )
}
