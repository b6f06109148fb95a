use rayon::prelude::*;

use super::checks::*;
use super::repro::*;
use super::CheckReport;
use crate::geom::{shapes, Kernel, Point2, RoundedBody};

/// `n` equally spaced points from `a` to `b` inclusive.
pub fn uniform_grid(a: f64, b: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![a],
        _ => (0..n)
            .map(|k| {
                if k == n - 1 {
                    b
                } else {
                    a + (b - a) * k as f64 / (n - 1) as f64
                }
            })
            .collect(),
    }
}

/// `n` equally spaced points strictly inside `(0, r)`.
pub fn inner_grid(r: f64, n: usize) -> Vec<f64> {
    (1..=n).map(|k| r * k as f64 / (n + 1) as f64).collect()
}

/// The named test bodies.
pub fn corpus() -> Vec<(&'static str, RoundedBody)> {
    let stadium = RoundedBody::new(
        Kernel::Segment(Point2::new(0.0, 0.0), Point2::new(1.0, 0.0)),
        0.5,
    )
    .expect("stadium");
    let rounded_square = RoundedBody::new(Kernel::Polygon(shapes::square(1.0)), 0.3)
        .expect("rounded square");
    vec![
        ("square", RoundedBody::polygon(shapes::square(1.0))),
        ("rect_2x1", RoundedBody::polygon(shapes::rect(2.0, 1.0))),
        ("equilateral", RoundedBody::polygon(shapes::equilateral(1.0))),
        ("pentagon", RoundedBody::polygon(shapes::regular(5, 1.0))),
        ("hexagon", RoundedBody::polygon(shapes::regular(6, 1.0))),
        ("right_triangle", RoundedBody::polygon(shapes::right_triangle())),
        ("quadrilateral_q", RoundedBody::polygon(shapes::quadrilateral_q())),
        ("disk", RoundedBody::disk(Point2::ORIGIN, 1.0).expect("disk")),
        ("rounded_square", rounded_square),
        ("stadium", stadium),
    ]
}

/// Every body-level check, named `"<label>/<check>"`.
pub fn body_suite(label: &str, b: &RoundedBody) -> Vec<CheckReport> {
    let r = b.inradius();
    let erosion = inner_grid(r, 32);
    let flow = {
        // inset from −r so the innermost body keeps a nondegenerate kernel
        let lo = -r * (1.0 - 1e-6);
        super::uniform_grid(lo, r, 64)
    };
    let mut reports = vec![
        check_matheron(b, &erosion),
        check_larson(b, &erosion),
        check_isoperimetric(b, &erosion),
        check_inner_area_comparison(b, 0.4 * r),
        check_contact_bounds(b),
        check_brunn_minkowski_h(b, &[0.1, 0.5, 2.0]),
        check_derivative_inequalities(b),
        local_min_demo(b),
        check_scaled_monotonicity(b, flow[0], r, 64),
        check_derivative_consistency(b),
    ];
    for f in Functional::ALL {
        reports.push(check_general_monotonicity(b, f, &flow));
    }
    for rep in &mut reports {
        rep.name = format!("{label}/{}", rep.name);
    }
    reports
}

fn unwrap_report(name: &str, r: crate::Result<CheckReport>) -> CheckReport {
    r.unwrap_or_else(|e| CheckReport::failed(name, e.to_string()))
}

/// Reproductions that do not depend on a body.
pub fn repro_suite() -> Vec<CheckReport> {
    vec![
        unwrap_report(
            "tailed_counterexample",
            repro_tailed_counterexample(0.1, &tailed_grid(0.1, 64)),
        ),
        unwrap_report("quadrilateral_scaling", repro_quad_scaling(&quad_grid(16))),
        unwrap_report("rectangle_ratio", repro_rectangle_ratio(&ratio_grid(256))),
        unwrap_report("thin_rectangle_condition", repro_thin_rect()),
        unwrap_report("bessel_bound", repro_bessel(1000)),
    ]
}

/// All body checks on the corpus plus all reproductions, sorted by name.
pub fn default_suite() -> Vec<CheckReport> {
    let bodies = corpus();
    let mut reports: Vec<CheckReport> = bodies
        .par_iter()
        .flat_map_iter(|(label, b)| body_suite(label, b))
        .collect();
    reports.extend(repro_suite());
    reports.sort_by(|a, b| a.name.cmp(&b.name));
    reports
}
