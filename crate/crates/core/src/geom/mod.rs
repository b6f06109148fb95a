//! Planar convex bodies of the form `kernel ⊕ s·B` and their measurements.

mod body;
mod point;
mod polygon;
pub mod shapes;
mod spec;
mod wavefront;

pub use body::{InnerParallel, Kernel, RoundedBody};
pub use point::{diameter, loop_length, signed_area, Point2};
pub use polygon::{ConvexPolygon, EdgeLine, TANGENTIAL_TOL};
pub use spec::{BodySpec, ShapeKind};

/// Relative tolerance for convexity, duplicate-vertex and degeneracy checks.
/// Lengths are compared against `TOL_GEO · diam`, areas against `TOL_GEO · diam²`.
pub const TOL_GEO: f64 = 1e-9;

/// Relative width (in units of the inradius) at which the τ bisection stops.
pub const TOL_TAU: f64 = 1e-9;
