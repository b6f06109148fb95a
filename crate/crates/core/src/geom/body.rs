use std::f64::consts::PI;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::point::{diameter, Point2};
use super::polygon::{ConvexPolygon, TANGENTIAL_TOL};
use super::wavefront::Wavefront;
use super::TOL_TAU;
use crate::error::{Error, Result};

/// The polygonal part of a rounded body. Segments and points are the
/// limits of erosion; a segment counts both of its sides in the perimeter so
/// that `|K ⊕ sB| = |K| + P(K)s + πs²` stays exact.
#[derive(Debug, Clone, PartialEq)]
pub enum Kernel {
    Polygon(ConvexPolygon),
    Segment(Point2, Point2),
    Point(Point2),
}

impl Kernel {
    pub fn area(&self) -> f64 {
        match self {
            Kernel::Polygon(p) => p.area(),
            _ => 0.0,
        }
    }

    pub fn perimeter(&self) -> f64 {
        match self {
            Kernel::Polygon(p) => p.perimeter(),
            Kernel::Segment(a, b) => 2.0 * a.dist(*b),
            Kernel::Point(_) => 0.0,
        }
    }

    pub fn inradius(&self) -> f64 {
        match self {
            Kernel::Polygon(p) => p.inradius(),
            _ => 0.0,
        }
    }

    /// Vertices in counterclockwise order; a segment is a two-vertex loop.
    pub fn vertices(&self) -> Vec<Point2> {
        match self {
            Kernel::Polygon(p) => p.vertices().to_vec(),
            Kernel::Segment(a, b) => vec![*a, *b],
            Kernel::Point(p) => vec![*p],
        }
    }

    pub fn diameter(&self) -> f64 {
        diameter(&self.vertices())
    }

    pub fn scaled(&self, factor: f64) -> Kernel {
        match self {
            Kernel::Polygon(p) => Kernel::Polygon(p.scaled(factor)),
            Kernel::Segment(a, b) => Kernel::Segment(*a * factor, *b * factor),
            Kernel::Point(p) => Kernel::Point(*p * factor),
        }
    }

    pub fn as_polygon(&self) -> Option<&ConvexPolygon> {
        match self {
            Kernel::Polygon(p) => Some(p),
            _ => None,
        }
    }
}

/// Serialized as `{"type": ..., "vertices": [...]}`.
impl Serialize for Kernel {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let kind = match self {
            Kernel::Polygon(_) => "polygon",
            Kernel::Segment(..) => "segment",
            Kernel::Point(_) => "point",
        };
        let mut st = serializer.serialize_struct("Kernel", 2)?;
        st.serialize_field("type", kind)?;
        st.serialize_field("vertices", &self.vertices())?;
        st.end()
    }
}

/// `kernel ⊕ radius·B`: every parallel body and every Cheeger set met in
/// this crate has this form.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RoundedBody {
    kernel: Kernel,
    radius: f64,
}

impl RoundedBody {
    pub fn new(kernel: Kernel, radius: f64) -> Result<Self> {
        if !(radius.is_finite() && radius >= 0.0) {
            return Err(Error::param("radius", format!("must be finite and ≥ 0, got {radius}")));
        }
        match &kernel {
            Kernel::Segment(a, b) => {
                if !(a.is_finite() && b.is_finite()) {
                    return Err(Error::param("kernel", "segment endpoints must be finite"));
                }
                if a == b {
                    return Err(Error::param("kernel", "segment endpoints coincide"));
                }
            }
            Kernel::Point(p) if !p.is_finite() => {
                return Err(Error::param("kernel", "point must be finite"));
            }
            _ => {}
        }
        Ok(RoundedBody { kernel, radius })
    }

    pub fn polygon(p: ConvexPolygon) -> Self {
        RoundedBody {
            kernel: Kernel::Polygon(p),
            radius: 0.0,
        }
    }

    pub fn disk(center: Point2, radius: f64) -> Result<Self> {
        if !(radius > 0.0) {
            return Err(Error::param("radius", "disk radius must be positive"));
        }
        RoundedBody::new(Kernel::Point(center), radius)
    }

    pub fn kernel(&self) -> &Kernel {
        &self.kernel
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn has_interior(&self) -> bool {
        matches!(self.kernel, Kernel::Polygon(_)) || self.radius > 0.0
    }

    pub fn is_disk(&self) -> bool {
        matches!(self.kernel, Kernel::Point(_)) && self.radius > 0.0
    }

    /// Steiner formula `|K| + P(K)s + πs²`.
    pub fn area(&self) -> f64 {
        let s = self.radius;
        self.kernel.area() + self.kernel.perimeter() * s + PI * s * s
    }

    pub fn perimeter(&self) -> f64 {
        self.kernel.perimeter() + 2.0 * PI * self.radius
    }

    pub fn inradius(&self) -> f64 {
        self.kernel.inradius() + self.radius
    }

    pub fn diameter(&self) -> f64 {
        self.kernel.diameter() + 2.0 * self.radius
    }

    pub fn scaled(&self, factor: f64) -> RoundedBody {
        RoundedBody {
            kernel: self.kernel.scaled(factor),
            radius: self.radius * factor,
        }
    }

    /// `Ω_t`: outer parallel body for `t ≥ 0`, inner for `−r < t < 0`.
    pub fn parallel(&self, t: f64) -> Result<RoundedBody> {
        let r = self.inradius();
        if !t.is_finite() || t <= -r {
            return Err(Error::OutOfDomain {
                what: "parallel distance",
                value: t,
                lo: -r,
                hi: f64::INFINITY,
            });
        }
        let s = self.radius + t;
        if s >= 0.0 {
            return Ok(RoundedBody {
                kernel: self.kernel.clone(),
                radius: s,
            });
        }
        match &self.kernel {
            Kernel::Polygon(p) => Ok(RoundedBody {
                kernel: p.erode(-s)?,
                radius: 0.0,
            }),
            // r = radius for these kernels, so s < 0 was rejected above
            _ => unreachable!("inner distance beyond inradius"),
        }
    }

    /// Whether the body is homothetic to its form body. Disks are; any other
    /// body with `s > 0` has only regular boundary points and a round form body.
    pub fn is_tangential(&self, tol: f64) -> bool {
        match &self.kernel {
            Kernel::Polygon(p) if self.radius == 0.0 => p.is_tangential(tol),
            Kernel::Point(_) => self.radius > 0.0,
            _ => false,
        }
    }

    /// `τ = inf{t > −r : Ω_t not tangential}`, or `−r` if no parallel body is
    /// tangential. Found by bisection on the erosion distance of the kernel;
    /// inner bodies of tangential bodies are tangential, so the predicate is monotone.
    pub fn tau(&self) -> Result<f64> {
        if self.is_disk() {
            return Err(Error::DiskUndefined("τ"));
        }
        if !self.has_interior() {
            return Err(Error::EmptyInterior);
        }
        let s = self.radius;
        let poly = match &self.kernel {
            Kernel::Polygon(p) => p,
            _ => return Ok(-s),
        };
        if poly.is_tangential(TANGENTIAL_TOL) {
            return Ok(-s);
        }
        let wf = Wavefront::new(poly);
        let r_kernel = wf.inradius();
        let tangential_at = |u: f64| match wf.kernel_at(u) {
            Ok(Kernel::Polygon(p)) => p.is_tangential(TANGENTIAL_TOL),
            _ => false,
        };
        // the edge set is fixed during the last stage, and so is tangency
        let (mut lo, mut hi) = (0.0, 0.5 * (wf.last_event() + r_kernel));
        if !tangential_at(hi) {
            return Ok(-(s + r_kernel));
        }
        let width = TOL_TAU * (r_kernel + s);
        for _ in 0..200 {
            if hi - lo <= width {
                break;
            }
            let mid = 0.5 * (lo + hi);
            if tangential_at(mid) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Ok(-(s + 0.5 * (lo + hi)))
    }

    /// Inner parallel bodies of `self`, prepared for repeated evaluation.
    pub fn inner(&self) -> InnerParallel<'_> {
        let wavefront = match &self.kernel {
            Kernel::Polygon(p) => Some(Wavefront::new(p)),
            _ => None,
        };
        InnerParallel {
            body: self,
            wavefront,
        }
    }

    /// Closed counterclockwise polyline inscribed in the boundary. Corner
    /// arcs are split so that every chord has sagitta at most `arc_tol`.
    pub fn to_polyline(&self, arc_tol: f64) -> Vec<Point2> {
        let verts = self.kernel.vertices();
        let s = self.radius;
        if s == 0.0 {
            return verts;
        }
        let max_step = if arc_tol >= s {
            PI / 2.0
        } else {
            (2.0 * (1.0 - arc_tol / s).acos()).clamp(1e-6, PI / 2.0)
        };
        let n = verts.len();
        let mut out = Vec::new();
        for i in 0..n {
            let (from, sweep) = corner_arc(&verts, i);
            let steps = ((sweep / max_step).ceil() as usize).max(1);
            // the last point of a full-turn arc repeats its first
            let count = if n == 1 { steps } else { steps + 1 };
            for k in 0..count {
                let theta = from + sweep * k as f64 / steps as f64;
                out.push(verts[i] + Point2::from_angle(theta) * s);
            }
        }
        out
    }

    /// Corner arcs as `(center, start angle, sweep)`, counterclockwise.
    pub fn corner_arcs(&self) -> Vec<(Point2, f64, f64)> {
        if self.radius == 0.0 {
            return Vec::new();
        }
        let verts = self.kernel.vertices();
        (0..verts.len())
            .map(|i| {
                let (from, sweep) = corner_arc(&verts, i);
                (verts[i], from, sweep)
            })
            .collect()
    }
}

/// Start angle and sweep of the arc around vertex `i` of a kernel loop,
/// running from the normal of the incoming edge to that of the outgoing edge.
fn corner_arc(verts: &[Point2], i: usize) -> (f64, f64) {
    let n = verts.len();
    if n == 1 {
        return (0.0, 2.0 * PI);
    }
    let prev = verts[(i + n - 1) % n];
    let next = verts[(i + 1) % n];
    let d_in = (verts[i] - prev).unit();
    let d_out = (next - verts[i]).unit();
    let n_in = Point2::new(d_in.y, -d_in.x);
    let from = n_in.y.atan2(n_in.x);
    let mut sweep = d_in.cross(d_out).atan2(d_in.dot(d_out));
    if sweep <= 0.0 {
        // antiparallel edges of a segment kernel
        sweep += 2.0 * PI;
        if sweep > PI + 1e-12 {
            sweep = PI;
        }
    }
    (from, sweep)
}

/// The family `t ↦ Ω₋ₜ` of inner parallel bodies of one body, with the
/// erosion schedule of its polygonal kernel computed once.
#[derive(Debug, Clone)]
pub struct InnerParallel<'a> {
    body: &'a RoundedBody,
    wavefront: Option<Wavefront>,
}

impl InnerParallel<'_> {
    pub fn inradius(&self) -> f64 {
        self.body.radius + self.wavefront.as_ref().map_or(0.0, |w| w.inradius())
    }

    /// `|Ω₋ₜ|`, zero once `t ≥ r`. Negative `t` gives outer parallel bodies.
    pub fn area(&self, t: f64) -> f64 {
        let s = self.body.radius;
        if t <= s {
            let u = s - t;
            let k = &self.body.kernel;
            return k.area() + k.perimeter() * u + PI * u * u;
        }
        match &self.wavefront {
            Some(w) => w.area_at(t - s),
            None => 0.0,
        }
    }

    /// `P(Ω₋ₜ)`; past the inradius this is the boundary measure of the
    /// collapse set. Negative `t` gives outer parallel bodies.
    pub fn perimeter(&self, t: f64) -> f64 {
        let s = self.body.radius;
        if t <= s {
            return self.body.kernel.perimeter() + 2.0 * PI * (s - t);
        }
        match &self.wavefront {
            Some(w) => w.perimeter_at(t - s),
            None => 0.0,
        }
    }

    /// `Ω₋ₜ` as a rounded body, for `0 ≤ t < r` (up to `TOL_GEO · diam`).
    pub fn body(&self, t: f64) -> Result<RoundedBody> {
        let s = self.body.radius;
        if t <= s {
            return Ok(RoundedBody {
                kernel: self.body.kernel.clone(),
                radius: s - t,
            });
        }
        match &self.wavefront {
            Some(w) => Ok(RoundedBody {
                kernel: w.kernel_at(t - s)?,
                radius: 0.0,
            }),
            None => Err(Error::EmptyInterior),
        }
    }
}
