//! Acceptance criteria, one line each. Exits nonzero if any criterion fails.

mod common;

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use cheeger_core::cheeger::{
    cheeger, derivative_fd, polygon_derivative_identity, rect2x1_inner_h,
};
use cheeger_core::geom::{shapes, signed_area, Point2, RoundedBody};
use cheeger_core::spectral::{eigenvalue_perimeter_condition, RectSpec, J2};
use cheeger_core::verify::{
    check_brunn_minkowski_h, check_contact_bounds, check_isoperimetric, check_larson,
    check_matheron, corpus, default_suite, inner_grid, quad_grid, ratio_grid, repro_bessel,
    repro_quad_scaling, repro_rectangle_ratio, repro_tailed_counterexample, scan_scaled_cheeger,
    tailed_grid, Verdict,
};
use common::{clipped_erosion_area, rel};

struct Outcome {
    ok: bool,
    detail: String,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            ok: true,
            detail: String::new(),
        }
    }

    fn expect(&mut self, cond: bool, what: impl Into<String>) {
        if !cond {
            self.ok = false;
            if !self.detail.is_empty() {
                self.detail.push_str("; ");
            }
            self.detail.push_str(&what.into());
        }
    }
}

fn square() -> RoundedBody {
    RoundedBody::polygon(shapes::square(1.0))
}

fn rect() -> RoundedBody {
    RoundedBody::polygon(shapes::rect(2.0, 1.0))
}

fn triangle() -> RoundedBody {
    RoundedBody::polygon(shapes::equilateral(1.0))
}

fn disk() -> RoundedBody {
    RoundedBody::disk(Point2::ORIGIN, 1.0).unwrap()
}

fn square_constant() -> Outcome {
    let mut out = Outcome::new();
    let start = Instant::now();
    let h = cheeger(&square()).unwrap().h;
    let elapsed = start.elapsed();
    let exact = 2.0 + PI.sqrt();
    out.expect(rel(h, exact) <= 1e-10, format!("h = {h}, expected {exact}"));
    out.expect(elapsed < Duration::from_millis(10), format!("took {elapsed:?}"));
    out
}

fn rectangle_closed_form() -> Outcome {
    let mut out = Outcome::new();
    for k in 0..10 {
        let t = 0.05 * k as f64;
        let h = cheeger(&rect().parallel(-t).unwrap()).unwrap().h;
        let exact = rect2x1_inner_h(t);
        out.expect(rel(h, exact) <= 1e-9, format!("t = {t}: {h} vs {exact}"));
    }
    out
}

fn scaled_monotonicity() -> Outcome {
    let mut out = Outcome::new();
    let start = Instant::now();

    let s = scan_scaled_cheeger(&rect(), -0.45, 1.0, 64).unwrap();
    out.expect(s.verdict == Verdict::StrictlyDecreasing, format!("rectangle: {:?}", s.verdict));

    let s = scan_scaled_cheeger(&triangle(), -0.25, 0.0, 64).unwrap();
    let spread = s.values.iter().fold(f64::NEG_INFINITY, |m, v| m.max(*v))
        - s.values.iter().fold(f64::INFINITY, |m, v| m.min(*v));
    out.expect(
        s.verdict == Verdict::Constant && spread <= 1e-9 * s.scale(),
        format!("triangle inner: {:?}, spread {spread:e}", s.verdict),
    );
    let s = scan_scaled_cheeger(&triangle(), 1.0 / 64.0, 1.0, 64).unwrap();
    out.expect(s.verdict == Verdict::StrictlyDecreasing, format!("triangle outer: {:?}", s.verdict));

    let s = scan_scaled_cheeger(&disk(), -0.9, 2.0, 64).unwrap();
    let dev = s
        .values
        .iter()
        .fold(0.0f64, |m, v| m.max((v - 2.0 * PI.sqrt()).abs()));
    out.expect(dev <= 1e-10, format!("disk deviates by {dev:e}"));

    let elapsed = start.elapsed();
    out.expect(elapsed < Duration::from_secs(1), format!("took {elapsed:?}"));
    out
}

fn derivative_formula() -> Outcome {
    let mut out = Outcome::new();
    let bodies = [
        ("square", square()),
        ("rectangle", rect()),
        ("hexagon", RoundedBody::polygon(shapes::regular(6, 1.0))),
        ("Q", RoundedBody::polygon(shapes::quadrilateral_q())),
    ];
    for (name, b) in bodies {
        let analytic = cheeger(&b).unwrap().derivative_at_zero;
        let fd = derivative_fd(&b, 1e-3).unwrap();
        out.expect(rel(fd, analytic) <= 1e-6, format!("{name}: {analytic} vs {fd}"));
        let (a, c) = polygon_derivative_identity(&b).unwrap();
        out.expect(rel(c, a) <= 1e-10, format!("{name}: forms {a} vs {c}"));
    }
    out
}

fn contact_inequalities() -> Outcome {
    let mut out = Outcome::new();
    for (name, b) in corpus() {
        let rep = check_contact_bounds(&b);
        out.expect(rep.passed, format!("{name}: {:?}", rep.note));
        let gap = rep.extra("contact_ratio_gap").unwrap_or(f64::NAN);
        let half = rep.extra("half_perimeter_gap").unwrap_or(f64::NAN);
        out.expect(half >= 0.0, format!("{name}: contact below half of P(C)"));
        let tangential_polygon = matches!(
            name,
            "square" | "equilateral" | "pentagon" | "hexagon" | "right_triangle"
        );
        if tangential_polygon {
            out.expect(gap.abs() < 1e-9, format!("{name}: equality gap {gap:e}"));
        }
        if name == "rect_2x1" {
            out.expect(gap > 1e-3, format!("rectangle: gap {gap:e}"));
        }
    }
    for n in 3..=12 {
        let b = RoundedBody::polygon(shapes::regular(n, 1.0));
        let rep = check_contact_bounds(&b);
        let gap = rep.extra("contact_ratio_gap").unwrap_or(f64::NAN);
        out.expect(rep.passed && gap.abs() < 1e-9, format!("{n}-gon: gap {gap:e}"));
    }
    out
}

fn erosion_inequalities() -> Outcome {
    let mut out = Outcome::new();
    for (name, b) in corpus() {
        let grid = inner_grid(b.inradius(), 32);
        let tangential = b.is_tangential(cheeger_core::geom::TANGENTIAL_TOL);
        for rep in [
            check_matheron(&b, &grid),
            check_larson(&b, &grid),
            check_isoperimetric(&b, &grid),
        ] {
            out.expect(rep.passed, format!("{name}/{}: {:?}", rep.name, rep.note));
            let equality = rep.extra("max_equality_gap").unwrap_or(f64::NAN) <= 1e-10;
            out.expect(equality == tangential, format!("{name}/{}: equality {equality}", rep.name));
        }
    }
    out
}

fn tailed_counterexample() -> Outcome {
    let mut out = Outcome::new();
    let rep = repro_tailed_counterexample(0.1, &tailed_grid(0.1, 64)).unwrap();
    out.expect(rep.passed, format!("{:?}", rep.note));
    let f0 = rep.extra("f0").unwrap();
    out.expect(rel(f0, 1.1 * (2.0 + PI.sqrt()).powi(2)) < 1e-14, format!("F(0) = {f0}"));
    let slope_err = rep.extra("slope_rel_error").unwrap();
    out.expect(slope_err <= 0.05, format!("slope error {slope_err}"));
    out
}

fn eigenvalue_ratio_and_quadrilateral() -> Outcome {
    let mut out = Outcome::new();
    let grid = ratio_grid(256);
    out.expect(grid.len() == 256, "grid size");
    let rep = repro_rectangle_ratio(&grid).unwrap();
    out.expect(rep.passed, format!("rectangle ratio: {:?}", rep.witness));
    let grid = quad_grid(16);
    let rep = repro_quad_scaling(&grid).unwrap();
    out.expect(rep.passed && rep.violation <= 1e-8, format!("Q: {:?}", rep.witness));
    out
}

fn brunn_minkowski() -> Outcome {
    let mut out = Outcome::new();
    for (name, b) in corpus() {
        let rep = check_brunn_minkowski_h(&b, &[0.1, 0.5, 2.0]);
        out.expect(rep.passed, format!("{name}: {:?}", rep.witness));
        if b.is_disk() {
            let gap = rep.extra("max_equality_gap").unwrap();
            out.expect(gap <= 1e-10, format!("disk gap {gap:e}"));
        }
    }
    out
}

fn spectral_checks() -> Outcome {
    let mut out = Outcome::new();
    out.expect(
        eigenvalue_perimeter_condition(RectSpec::new(0.01, 1.0).unwrap()),
        "thin rectangle fails the condition",
    );
    out.expect(
        !eigenvalue_perimeter_condition(RectSpec::new(1.0, 1.0).unwrap()),
        "unit square satisfies the condition",
    );
    let rep = repro_bessel(1000).unwrap();
    out.expect(rep.passed, format!("{:?}", rep.note));
    out.expect(J2 < PI, "j2 ≥ π");
    out
}

fn oracle_agreement() -> Outcome {
    let mut out = Outcome::new();
    for (name, b) in corpus() {
        let line = b.to_polyline(b.diameter() * 1e-8);
        let area = signed_area(&line);
        let per: f64 = (0..line.len())
            .map(|i| line[i].dist(line[(i + 1) % line.len()]))
            .sum();
        out.expect(rel(area, b.area()) <= 1e-6, format!("{name}: area {area}"));
        out.expect(rel(per, b.perimeter()) <= 1e-6, format!("{name}: perimeter {per}"));
        if let Some(p) = b.kernel().as_polygon() {
            if b.radius() == 0.0 {
                let r = p.inradius();
                for k in 0..32 {
                    let t = r * k as f64 / 32.0;
                    let got = p.erode(t).unwrap().area();
                    let want = clipped_erosion_area(p, t);
                    out.expect(rel(got, want) <= 1e-9, format!("{name}: erosion at {t}"));
                }
            }
        }
    }
    let start = Instant::now();
    let suite = default_suite();
    let elapsed = start.elapsed();
    let failed: Vec<&str> = suite.iter().filter(|r| !r.passed).map(|r| r.name.as_str()).collect();
    out.expect(failed.is_empty(), format!("suite failures: {failed:?}"));
    out.expect(elapsed < Duration::from_secs(30), format!("suite took {elapsed:?}"));
    out
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("square Cheeger constant equals 2 + sqrt(pi)", square_constant),
        ("2x1 rectangle inner bodies match closed form", rectangle_closed_form),
        ("sqrt(area) * h monotone along the parallel flow", scaled_monotonicity),
        ("derivative formula vs finite differences", derivative_formula),
        ("contact length inequalities", contact_inequalities),
        ("erosion inequalities with tangential equality", erosion_inequalities),
        ("tailed square counterexample", tailed_counterexample),
        ("eigenvalue ratio and quadrilateral scaling", eigenvalue_ratio_and_quadrilateral),
        ("Brunn-Minkowski inequality for 1/h", brunn_minkowski),
        ("eigenvalue condition and Bessel bound", spectral_checks),
        ("oracle agreement and suite runtime", oracle_agreement),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = run();
        let tag = if outcome.ok { "PASS" } else { "FAIL" };
        if outcome.ok {
            println!("[{tag}] {:>2} {name}", i + 1);
        } else {
            failures += 1;
            println!("[{tag}] {:>2} {name}: {}", i + 1, outcome.detail);
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
