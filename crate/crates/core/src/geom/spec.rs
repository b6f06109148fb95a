use serde::{Deserialize, Serialize};

use super::point::signed_area;
use super::{shapes, ConvexPolygon, Point2, RoundedBody};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ShapeKind {
    Square,
    Rect,
    Regpoly,
    Triangle,
    Disk,
    Custom,
}

/// Textual description of a body, as read from JSON or assembled from flags.
///
/// | shape      | params              | vertices        |
/// |------------|---------------------|-----------------|
/// | `square`   | `[a]`               | –               |
/// | `rect`     | `[a, b]`            | –               |
/// | `regpoly`  | `[n, side]`         | –               |
/// | `triangle` | `[x1,y1,x2,y2,x3,y3]` | or 3 points  |
/// | `disk`     | `[r]`               | –               |
/// | `custom`   | –                   | ≥ 3 points      |
///
/// `radius` dilates the result. Clockwise vertex lists are reversed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BodySpec {
    pub shape: ShapeKind,
    #[serde(default)]
    pub params: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<[f64; 2]>>,
    #[serde(default)]
    pub radius: f64,
}

impl BodySpec {
    pub fn new(shape: ShapeKind, params: Vec<f64>) -> Self {
        BodySpec {
            shape,
            params,
            vertices: None,
            radius: 0.0,
        }
    }

    pub fn build(&self) -> Result<RoundedBody> {
        if !(self.radius.is_finite() && self.radius >= 0.0) {
            return Err(Error::param("radius", "must be finite and ≥ 0"));
        }
        let polygon = match self.shape {
            ShapeKind::Square => {
                let [a] = self.positive_params::<1>(&["a"])?;
                shapes::square(a)
            }
            ShapeKind::Rect => {
                let [a, b] = self.positive_params::<2>(&["a", "b"])?;
                shapes::rect(a, b)
            }
            ShapeKind::Regpoly => {
                let [n, side] = self.positive_params::<2>(&["n", "side"])?;
                if n.fract() != 0.0 || n < 3.0 || n > 1e6 {
                    return Err(Error::param("n", format!("must be an integer ≥ 3, got {n}")));
                }
                shapes::regular(n as usize, side)
            }
            ShapeKind::Disk => {
                let [r] = self.positive_params::<1>(&["r"])?;
                return RoundedBody::disk(Point2::ORIGIN, r + self.radius);
            }
            ShapeKind::Triangle => {
                let pts = match (&self.vertices, self.params.len()) {
                    (Some(v), 0) => v.clone(),
                    (None, 6) => self.params.chunks(2).map(|c| [c[0], c[1]]).collect(),
                    _ => {
                        return Err(Error::param(
                            "vertices",
                            "triangle needs 3 vertices or 6 params",
                        ))
                    }
                };
                if pts.len() != 3 {
                    return Err(Error::param("vertices", "triangle needs exactly 3 vertices"));
                }
                oriented_polygon(pts)?
            }
            ShapeKind::Custom => {
                let pts = self
                    .vertices
                    .clone()
                    .ok_or_else(|| Error::param("vertices", "required for custom shape"))?;
                oriented_polygon(pts)?
            }
        };
        let body = RoundedBody::polygon(polygon);
        if self.radius > 0.0 {
            body.parallel(self.radius)
        } else {
            Ok(body)
        }
    }

    fn positive_params<const N: usize>(&self, names: &[&'static str; N]) -> Result<[f64; N]> {
        if self.params.len() != N {
            return Err(Error::param(
                "params",
                format!(
                    "{:?} expects {N} value(s) [{}], got {}",
                    self.shape,
                    names.join(", "),
                    self.params.len()
                ),
            ));
        }
        let mut out = [0.0; N];
        for (i, (&v, &name)) in self.params.iter().zip(names).enumerate() {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::param(name, format!("must be finite and > 0, got {v}")));
            }
            out[i] = v;
        }
        Ok(out)
    }
}

fn oriented_polygon(pts: Vec<[f64; 2]>) -> Result<ConvexPolygon> {
    let mut pts: Vec<Point2> = pts.into_iter().map(Point2::from).collect();
    if signed_area(&pts) < 0.0 {
        pts.reverse();
    }
    ConvexPolygon::new(pts).map_err(|e| match e {
        Error::InvalidPolygon(msg) => Error::param("vertices", msg),
        other => other,
    })
}
