//! Inward offsetting of a convex polygon.
//!
//! All edge lines move inward at unit speed. Between events the set of
//! surviving lines is fixed and every vertex moves linearly in `t`; an event
//! happens when one edge shrinks to zero length and its line drops out. The
//! schedule of events is computed once per polygon, after which the inner
//! parallel set at any `t` is read off in `O(n)`. The last event is the
//! collapse of the whole polygon onto a point or a segment, which happens at
//! `t = r` and yields the Chebyshev center.

use super::point::{diameter, farthest_pair, loop_length, signed_area, Point2};
use super::polygon::{ConvexPolygon, EdgeLine};
use super::{Kernel, TOL_GEO};
use crate::error::{Error, Result};

/// Two consecutive surviving lines whose directions turn by π or more
/// cannot bound a vertex; the polygon has collapsed.
const PARALLEL_EPS: f64 = 1e-12;

#[derive(Debug, Clone)]
struct Stage {
    start: f64,
    active: Vec<usize>,
}

#[derive(Debug, Clone)]
pub(crate) struct Wavefront {
    lines: Vec<EdgeLine>,
    stages: Vec<Stage>,
    inradius: f64,
    collapse: Vec<Point2>,
    diam: f64,
}

impl Wavefront {
    pub(crate) fn new(polygon: &ConvexPolygon) -> Self {
        let lines = polygon.edge_lines();
        let diam = polygon.diameter();
        let mut active: Vec<usize> = (0..lines.len()).collect();
        let mut stages = vec![Stage {
            start: 0.0,
            active: active.clone(),
        }];
        let mut now = 0.0f64;

        let (inradius, last) = loop {
            let m = active.len();
            let mut best = (f64::INFINITY, 0usize);
            for k in 0..m {
                let tau = collapse_time(
                    &lines,
                    active[(k + m - 1) % m],
                    active[k],
                    active[(k + 1) % m],
                );
                if tau < best.0 {
                    best = (tau, k);
                }
            }
            let (tau, k) = best;
            let tau = tau.max(now);
            let prev = lines[active[(k + m - 1) % m]].direction();
            let next = lines[active[(k + 1) % m]].direction();
            if m == 3 || prev.cross(next) <= PARALLEL_EPS {
                break (tau, active);
            }
            active.remove(k);
            now = tau;
            stages.push(Stage {
                start: tau,
                active: active.clone(),
            });
        };

        let collapse = loop_vertices(&lines, &last, inradius);
        Wavefront {
            lines,
            stages,
            inradius,
            collapse,
            diam,
        }
    }

    pub(crate) fn inradius(&self) -> f64 {
        self.inradius
    }

    /// Start of the last stage, during which the set of edges no longer changes.
    pub(crate) fn last_event(&self) -> f64 {
        self.stages.last().map_or(0.0, |s| s.start)
    }

    /// Midpoint of the collapse set.
    pub(crate) fn center(&self) -> Point2 {
        let (i, j) = farthest_pair(&self.collapse);
        self.collapse[i].midpoint(self.collapse[j])
    }

    fn stage_at(&self, t: f64) -> &Stage {
        let idx = self.stages.partition_point(|s| s.start <= t);
        &self.stages[idx.saturating_sub(1)]
    }

    /// Raw vertex loop of the offset polygon at `0 ≤ t < r`; may contain
    /// near-duplicate vertices close to an event.
    pub(crate) fn vertices_at(&self, t: f64) -> Vec<Point2> {
        loop_vertices(&self.lines, &self.stage_at(t).active, t)
    }

    /// Area of the inner parallel set, zero from `t = r` on.
    pub(crate) fn area_at(&self, t: f64) -> f64 {
        if t >= self.inradius {
            return 0.0;
        }
        signed_area(&self.vertices_at(t)).max(0.0)
    }

    /// Boundary length of the inner parallel set; a collapsed segment
    /// counts both of its sides.
    pub(crate) fn perimeter_at(&self, t: f64) -> f64 {
        if t >= self.inradius {
            return self.collapse_kernel().perimeter();
        }
        loop_length(&self.vertices_at(t))
    }

    fn collapse_kernel(&self) -> Kernel {
        degenerate_kernel(&self.collapse, self.diam)
    }

    pub(crate) fn kernel_at(&self, t: f64) -> Result<Kernel> {
        if !(t >= 0.0) {
            return Err(Error::OutOfDomain {
                what: "erosion distance",
                value: t,
                lo: 0.0,
                hi: self.inradius,
            });
        }
        if t > self.inradius + TOL_GEO * self.diam {
            return Err(Error::EmptyInterior);
        }
        if t >= self.inradius {
            return Ok(self.collapse_kernel());
        }
        let vertices = self.vertices_at(t);
        if signed_area(&vertices) < TOL_GEO * self.diam * self.diam {
            return Ok(degenerate_kernel(&vertices, self.diam));
        }
        match ConvexPolygon::from_noisy(vertices.clone()) {
            Some(p) => Ok(Kernel::Polygon(p)),
            None => Ok(degenerate_kernel(&vertices, self.diam)),
        }
    }
}

/// A thin vertex loop collapsed to its longest chord, or to a point.
fn degenerate_kernel(points: &[Point2], scale: f64) -> Kernel {
    let (i, j) = farthest_pair(points);
    let (a, b) = (points[i], points[j]);
    if diameter(points) <= TOL_GEO * scale {
        Kernel::Point(a.midpoint(b))
    } else {
        Kernel::Segment(a, b)
    }
}

/// Intersection of lines `a` and `b` moved inward by `t`, as `p0 − t·w`.
fn vertex_motion(lines: &[EdgeLine], a: usize, b: usize) -> (Point2, Point2) {
    let (na, nb) = (lines[a].normal, lines[b].normal);
    let (oa, ob) = (lines[a].offset, lines[b].offset);
    let det = na.cross(nb);
    let p0 = Point2::new((oa * nb.y - ob * na.y) / det, (na.x * ob - nb.x * oa) / det);
    let w = Point2::new((nb.y - na.y) / det, (na.x - nb.x) / det);
    (p0, w)
}

fn loop_vertices(lines: &[EdgeLine], active: &[usize], t: f64) -> Vec<Point2> {
    let m = active.len();
    (0..m)
        .map(|k| {
            let (p0, w) = vertex_motion(lines, active[(k + m - 1) % m], active[k]);
            p0 - w * t
        })
        .collect()
}

/// Time at which edge `i`, between surviving neighbors `p` and `q`, has zero length.
fn collapse_time(lines: &[EdgeLine], p: usize, i: usize, q: usize) -> f64 {
    let d = lines[i].direction();
    let (s0, sw) = vertex_motion(lines, p, i);
    let (e0, ew) = vertex_motion(lines, i, q);
    let len0 = (e0 - s0).dot(d);
    let rate = (ew - sw).dot(d);
    if rate > 0.0 {
        len0 / rate
    } else {
        f64::INFINITY
    }
}
