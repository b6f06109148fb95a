//! Exact computations on parallel bodies of planar convex sets.
//!
//! Every body handled here has the form `kernel ⊕ s·B`, where the kernel is a
//! convex polygon, a segment or a point and `B` is the closed unit disk. The
//! class is closed under inner and outer parallel bodies and contains the
//! Cheeger set of each of its members, so areas, perimeters, Cheeger constants
//! and contact lengths all have closed forms up to one scalar root.
//!
//! - [`geom`]: points, polygons, the erosion wavefront, rounded bodies.
//! - [`cheeger`]: Cheeger constant and set via the inner-area equation
//!   `|Ω₋ₜ| = πt²`, the derivative along the parallel flow.
//! - [`spectral`]: closed-form Dirichlet eigenvalues for rectangles and disks.
//! - [`verify`]: named checks, scans and reproductions.

pub mod cheeger;
pub mod error;
pub mod geom;
pub mod spectral;
pub mod verify;

pub use cheeger::{cheeger, CheegerResult};
pub use error::{Error, Result};
pub use geom::{BodySpec, ConvexPolygon, Kernel, Point2, RoundedBody};
