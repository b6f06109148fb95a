//! SVG drawing of a rounded body and, optionally, its Cheeger set.

use std::f64::consts::FRAC_PI_2;
use std::fmt::Write;

use cheeger_core::geom::{Kernel, Point2, RoundedBody};
use cheeger_core::CheegerResult;

fn num(v: f64) -> String {
    let s = format!("{v:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

/// Screen coordinates: `y` points down.
fn pt(p: Point2) -> String {
    format!("{} {}", num(p.x), num(-p.y))
}

/// Closed path of the boundary: kernel edges as lines, corners as arcs of
/// at most a quarter turn each.
pub fn boundary_path(b: &RoundedBody) -> String {
    let s = b.radius();
    let verts = b.kernel().vertices();
    let mut d = String::new();
    if s == 0.0 {
        for (i, v) in verts.iter().enumerate() {
            let _ = write!(d, "{}{} ", if i == 0 { "M" } else { "L" }, pt(*v));
        }
        d.push('Z');
        return d;
    }
    for (i, (center, from, sweep)) in b.corner_arcs().into_iter().enumerate() {
        let start = center + Point2::from_angle(from) * s;
        let _ = write!(d, "{}{} ", if i == 0 { "M" } else { "L" }, pt(start));
        let pieces = (sweep / FRAC_PI_2 - 1e-12).ceil().max(1.0) as usize;
        for k in 1..=pieces {
            let theta = from + sweep * k as f64 / pieces as f64;
            let end = center + Point2::from_angle(theta) * s;
            // counterclockwise in the plane is sweep-flag 0 once y is flipped
            let _ = write!(d, "A{} {} 0 0 0 {} ", num(s), num(s), pt(end));
        }
    }
    d.push('Z');
    d
}

/// Flat parts of `∂C`, which lie on `∂Ω`.
fn contact_segments(c: &RoundedBody) -> Vec<(Point2, Point2)> {
    let s = c.radius();
    let verts = c.kernel().vertices();
    let n = verts.len();
    match c.kernel() {
        Kernel::Point(_) => Vec::new(),
        _ => (0..n)
            .map(|i| {
                let (a, b) = (verts[i], verts[(i + 1) % n]);
                let d = (b - a).unit();
                let out = Point2::new(d.y, -d.x) * s;
                (a + out, b + out)
            })
            .collect(),
    }
}

pub fn render(body: &RoundedBody, cheeger: Option<&CheegerResult>) -> String {
    let verts = body.kernel().vertices();
    let s = body.radius();
    let (mut lo, mut hi) = (verts[0], verts[0]);
    for v in &verts {
        lo = Point2::new(lo.x.min(v.x), lo.y.min(v.y));
        hi = Point2::new(hi.x.max(v.x), hi.y.max(v.y));
    }
    let (lo, hi) = (lo - Point2::new(s, s), hi + Point2::new(s, s));
    let (w, h) = (hi.x - lo.x, hi.y - lo.y);
    let pad = 0.1 * w.max(h);
    let stroke = 0.006 * w.max(h);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        num(lo.x - pad),
        num(-hi.y - pad),
        num(w + 2.0 * pad),
        num(h + 2.0 * pad)
    );
    let _ = writeln!(
        out,
        r##"  <path id="body" d="{}" fill="#eef2f7" stroke="#1f3b63" stroke-width="{}"/>"##,
        boundary_path(body),
        num(stroke)
    );
    if let Some(res) = cheeger {
        let c = &res.cheeger_set;
        let _ = writeln!(
            out,
            r##"  <path id="cheeger-set" d="{}" fill="#f6d7a7" fill-opacity="0.6" stroke="#b5651d" stroke-width="{}"/>"##,
            boundary_path(c),
            num(stroke)
        );
        if res.t_star > body.radius() {
            for (a, b) in contact_segments(c) {
                let _ = writeln!(
                    out,
                    r##"  <path class="contact" d="M{} L{}" stroke="#c0392b" stroke-width="{}"/>"##,
                    pt(a),
                    pt(b),
                    num(2.0 * stroke)
                );
            }
        } else {
            let _ = writeln!(
                out,
                r##"  <path class="contact" d="{}" fill="none" stroke="#c0392b" stroke-width="{}"/>"##,
                boundary_path(c),
                num(2.0 * stroke)
            );
        }
    }
    out.push_str("</svg>\n");
    out
}
