//! `cheeger-lab`: compute, scan, verify and draw parallel bodies of convex
//! polygons from the command line.

mod output;
mod svg;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use cheeger_core::cheeger::ParallelFlow;
use cheeger_core::geom::{BodySpec, Kernel, Point2, RoundedBody, ShapeKind, TANGENTIAL_TOL};
use cheeger_core::verify::{
    body_suite, default_suite, quad_grid, ratio_grid, repro_bessel, repro_quad_scaling,
    repro_rectangle_ratio, repro_tailed_counterexample, repro_thin_rect, tailed_grid,
    CheckReport, ScanSeries,
};
use output::{fmt17, to_csv, to_json};

#[derive(Parser, Debug)]
#[command(name = "cheeger-lab", version, about = "Cheeger constants and parallel bodies of planar convex sets")]
struct Cli {
    /// Relative tolerance of the tangential-body test.
    #[arg(long, global = true, value_name = "TOL")]
    tol: Option<f64>,
    /// Number of grid points for scans.
    #[arg(long, global = true, value_name = "N")]
    grid: Option<usize>,
    /// Scan start (parallel distance, negative for inner bodies).
    #[arg(long, global = true, allow_hyphen_values = true)]
    tmin: Option<f64>,
    /// Scan end.
    #[arg(long, global = true, allow_hyphen_values = true)]
    tmax: Option<f64>,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Area, perimeter, inradius, tangency, τ and form body.
    Body(BodyArgs),
    /// Cheeger constant, Cheeger set and contact length.
    Cheeger(BodyArgs),
    /// t, area, perimeter, inradius, h and √A·h along the parallel flow.
    Scan(BodyArgs),
    /// Run every body check, or the full suite on the built-in corpus.
    Verify(OptionalBody),
    /// Reproduce a closed-form example.
    Repro {
        #[command(subcommand)]
        which: Repro,
    },
    /// Draw the body as SVG.
    Render {
        #[command(flatten)]
        body: BodyArgs,
        /// Also draw the Cheeger set and highlight its contact with the boundary.
        #[arg(long)]
        with_cheeger: bool,
    },
}

#[derive(Subcommand, Debug)]
enum Repro {
    /// Unit square with a thin tail.
    Tailed {
        #[arg(long, default_value_t = 0.1)]
        eps: f64,
    },
    /// h/√λ₁ along erosion of the 2×1 rectangle.
    RectRatio,
    /// Cheeger scaling of the cut triangle under erosion.
    QuadScaling,
    /// Eigenvalue–perimeter condition on thin rectangles.
    ThinRect,
    /// Airy-type bound for Bessel zeros.
    Bessel {
        #[arg(long, default_value_t = 1000)]
        n_max: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ShapeArg {
    Square,
    Rect,
    Regpoly,
    Triangle,
    Disk,
    Custom,
}

#[derive(Args, Debug, Clone, Default)]
struct BodyArgs {
    #[arg(long, value_enum)]
    shape: Option<ShapeArg>,
    /// Side length (square, regpoly) or first side (rect).
    #[arg(long)]
    a: Option<f64>,
    /// Second side (rect).
    #[arg(long)]
    b: Option<f64>,
    /// Number of sides (regpoly).
    #[arg(long)]
    n: Option<u32>,
    /// Disk radius.
    #[arg(long)]
    r: Option<f64>,
    /// Dilation radius added to the shape.
    #[arg(long, allow_hyphen_values = true)]
    radius: Option<f64>,
    /// Vertices as "x,y x,y ..." (triangle, custom).
    #[arg(long, allow_hyphen_values = true)]
    vertices: Option<String>,
    /// Read the body from a JSON file.
    #[arg(long, value_name = "FILE", conflicts_with_all = ["shape", "json"])]
    spec: Option<PathBuf>,
    /// Read the body from a JSON string.
    #[arg(long, conflicts_with = "shape")]
    json: Option<String>,
}

#[derive(Args, Debug, Clone)]
struct OptionalBody {
    #[command(flatten)]
    body: BodyArgs,
}

enum Failure {
    /// Bad input: exit code 2.
    Usage(String),
    /// Geometry or solver error: exit code 1.
    Compute(cheeger_core::Error),
    Io(String),
}

impl From<cheeger_core::Error> for Failure {
    fn from(e: cheeger_core::Error) -> Self {
        use cheeger_core::Error::*;
        match e {
            InvalidPolygon(_) | InvalidParameter { .. } => Failure::Usage(e.to_string()),
            other => Failure::Compute(other),
        }
    }
}

type CliResult<T> = Result<T, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn parse_spec(text: &str, origin: &str) -> CliResult<BodySpec> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let field = if path == "." { String::new() } else { format!(" at `{path}`") };
        usage(format!("{origin}{field}: {}", e.inner()))
    })
}

fn parse_vertices(text: &str) -> CliResult<Vec<[f64; 2]>> {
    text.split_whitespace()
        .map(|pair| {
            let (x, y) = pair
                .split_once(',')
                .ok_or_else(|| usage(format!("--vertices: expected x,y but got `{pair}`")))?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<f64>()
                    .map_err(|_| usage(format!("--vertices: `{s}` is not a number")))
            };
            Ok([parse(x)?, parse(y)?])
        })
        .collect()
}

impl BodyArgs {
    fn is_given(&self) -> bool {
        self.shape.is_some() || self.spec.is_some() || self.json.is_some()
    }

    fn to_spec(&self) -> CliResult<BodySpec> {
        if let Some(path) = &self.spec {
            let text = fs::read_to_string(path)
                .map_err(|e| usage(format!("--spec {}: {e}", path.display())))?;
            return parse_spec(&text, &format!("--spec {}", path.display()));
        }
        if let Some(text) = &self.json {
            return parse_spec(text, "--json");
        }
        let shape = self
            .shape
            .ok_or_else(|| usage("a body is required: give --shape, --spec or --json"))?;
        let need = |v: Option<f64>, flag: &str| {
            v.ok_or_else(|| usage(format!("--shape {shape:?} requires --{flag}").to_lowercase()))
        };
        let (kind, params) = match shape {
            ShapeArg::Square => (ShapeKind::Square, vec![need(self.a, "a")?]),
            ShapeArg::Rect => (ShapeKind::Rect, vec![need(self.a, "a")?, need(self.b, "b")?]),
            ShapeArg::Regpoly => {
                let n = self.n.ok_or_else(|| usage("--shape regpoly requires --n"))?;
                (ShapeKind::Regpoly, vec![n as f64, need(self.a, "a")?])
            }
            ShapeArg::Disk => (ShapeKind::Disk, vec![need(self.r, "r")?]),
            ShapeArg::Triangle => (ShapeKind::Triangle, Vec::new()),
            ShapeArg::Custom => (ShapeKind::Custom, Vec::new()),
        };
        let mut spec = BodySpec::new(kind, params);
        if matches!(shape, ShapeArg::Triangle | ShapeArg::Custom) {
            let text = self
                .vertices
                .as_deref()
                .ok_or_else(|| usage(format!("--shape {shape:?} requires --vertices").to_lowercase()))?;
            spec.vertices = Some(parse_vertices(text)?);
        }
        spec.radius = self.radius.unwrap_or(0.0);
        Ok(spec)
    }

    fn build(&self) -> CliResult<RoundedBody> {
        Ok(self.to_spec()?.build()?)
    }
}

#[derive(Serialize)]
struct FormBody {
    #[serde(rename = "type")]
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    vertices: Option<Vec<Point2>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    radius: Option<f64>,
}

#[derive(Serialize)]
struct BodyReport {
    area: f64,
    perimeter: f64,
    inradius: f64,
    diameter: f64,
    tangential: bool,
    tau: Option<f64>,
    kernel: Kernel,
    radius: f64,
    form_body: FormBody,
    chebyshev_center: Option<Point2>,
}

fn body_report(b: &RoundedBody, tol: f64) -> CliResult<BodyReport> {
    let tau = if b.is_disk() { None } else { Some(b.tau()? + 0.0) };
    let (form_body, center) = match b.kernel() {
        Kernel::Polygon(p) if b.radius() == 0.0 => (
            FormBody {
                kind: "polygon",
                vertices: Some(p.form_body().vertices().to_vec()),
                radius: None,
            },
            Some(p.chebyshev_center().0),
        ),
        // every direction is a regular normal of a body with round corners
        kernel => (
            FormBody {
                kind: "disk",
                vertices: None,
                radius: Some(1.0),
            },
            match kernel {
                Kernel::Point(c) => Some(*c),
                Kernel::Polygon(p) => Some(p.chebyshev_center().0),
                Kernel::Segment(..) => None,
            },
        ),
    };
    Ok(BodyReport {
        area: b.area(),
        perimeter: b.perimeter(),
        inradius: b.inradius(),
        diameter: b.diameter(),
        tangential: b.is_tangential(tol),
        tau,
        kernel: b.kernel().clone(),
        radius: b.radius(),
        form_body,
        chebyshev_center: center,
    })
}

#[derive(Serialize)]
struct ScanRow {
    t: f64,
    area: f64,
    perimeter: f64,
    inradius: f64,
    h: f64,
    #[serde(rename = "sqrtA_h")]
    sqrt_a_h: f64,
}

#[derive(Serialize)]
struct ScanOutput {
    rows: Vec<ScanRow>,
    verdict: cheeger_core::verify::Verdict,
    max_violation: f64,
}

fn reports_csv(reports: &[CheckReport]) -> String {
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            vec![
                r.name.clone(),
                r.passed.to_string(),
                r.skipped.to_string(),
                fmt17(r.violation),
                fmt17(r.tolerance),
            ]
        })
        .collect();
    to_csv(&["name", "passed", "skipped", "violation", "tolerance"], &rows)
}

fn emit_reports(reports: &[CheckReport], format: Format) -> (String, bool) {
    let ok = reports.iter().all(|r| r.passed);
    let text = match format {
        Format::Json => to_json(&reports),
        Format::Csv => reports_csv(reports),
    };
    (text, ok)
}

fn run(cli: &Cli) -> CliResult<(String, bool)> {
    let tol = cli.tol.unwrap_or(TANGENTIAL_TOL);
    if !(tol.is_finite() && tol > 0.0) {
        return Err(usage("--tol must be positive"));
    }
    if cli.tol.is_some() && !matches!(cli.command, Command::Body(_)) {
        return Err(usage("--tol applies to the body command only"));
    }
    let format = cli.format.unwrap_or(match cli.command {
        Command::Scan(_) => Format::Csv,
        _ => Format::Json,
    });
    match &cli.command {
        Command::Body(args) => {
            let report = body_report(&args.build()?, tol)?;
            let text = match format {
                Format::Json => to_json(&report),
                Format::Csv => to_csv(
                    &["area", "perimeter", "inradius", "tangential", "tau"],
                    &[vec![
                        fmt17(report.area),
                        fmt17(report.perimeter),
                        fmt17(report.inradius),
                        report.tangential.to_string(),
                        report.tau.map(fmt17).unwrap_or_default(),
                    ]],
                ),
            };
            Ok((text, true))
        }
        Command::Cheeger(args) => {
            let res = cheeger_core::cheeger(&args.build()?)?;
            let text = match format {
                Format::Json => to_json(&res),
                Format::Csv => to_csv(
                    &["h", "t_star", "area_C", "perimeter_C", "contact_length", "derivative_at_zero"],
                    &[[res.h, res.t_star, res.area_c, res.perimeter_c, res.contact_length, res.derivative_at_zero]
                        .map(fmt17)
                        .to_vec()],
                ),
            };
            Ok((text, true))
        }
        Command::Scan(args) => {
            let body = args.build()?;
            let r = body.inradius();
            let n = cli.grid.unwrap_or(64);
            let t_min = cli.tmin.unwrap_or(-r * (1.0 - 1e-6));
            let t_max = cli.tmax.unwrap_or(r);
            if n < 2 {
                return Err(usage("--grid must be at least 2"));
            }
            if !(t_min > -r && t_max > t_min && t_max.is_finite()) {
                return Err(usage(format!(
                    "scan range must satisfy -{} < tmin < tmax",
                    fmt17(r)
                )));
            }
            let grid = cheeger_core::verify::uniform_grid(t_min, t_max, n);
            let flow = ParallelFlow::new(&body)?;
            let rows = grid
                .par_iter()
                .map(|&t| {
                    let h = flow.h(t)?;
                    let area = flow.area(t);
                    Ok(ScanRow {
                        t,
                        area,
                        perimeter: flow.perimeter(t),
                        inradius: flow.inradius(t),
                        h,
                        sqrt_a_h: area.sqrt() * h,
                    })
                })
                .collect::<cheeger_core::Result<Vec<_>>>()?;
            let text = match format {
                Format::Csv => to_csv(
                    &["t", "area", "perimeter", "inradius", "h", "sqrtA_h"],
                    &rows
                        .iter()
                        .map(|r| [r.t, r.area, r.perimeter, r.inradius, r.h, r.sqrt_a_h].map(fmt17).to_vec())
                        .collect::<Vec<_>>(),
                ),
                Format::Json => {
                    let series = ScanSeries::new(grid, rows.iter().map(|r| r.sqrt_a_h).collect())?;
                    to_json(&ScanOutput {
                        rows,
                        verdict: series.verdict,
                        max_violation: series.max_violation,
                    })
                }
            };
            Ok((text, true))
        }
        Command::Verify(OptionalBody { body }) => {
            let reports = if body.is_given() {
                body_suite("body", &body.build()?)
            } else {
                default_suite()
            };
            Ok(emit_reports(&reports, format))
        }
        Command::Repro { which } => {
            let report = match which {
                Repro::Tailed { eps } => {
                    if !(*eps > 0.0 && *eps < 0.5) {
                        return Err(usage("--eps must lie in (0, 0.5)"));
                    }
                    repro_tailed_counterexample(*eps, &tailed_grid(*eps, cli.grid.unwrap_or(64)))?
                }
                Repro::RectRatio => repro_rectangle_ratio(&ratio_grid(cli.grid.unwrap_or(256)))?,
                Repro::QuadScaling => repro_quad_scaling(&quad_grid(cli.grid.unwrap_or(16)))?,
                Repro::ThinRect => repro_thin_rect()?,
                Repro::Bessel { n_max } => {
                    if *n_max < 3 {
                        return Err(usage("--n-max must be at least 3"));
                    }
                    repro_bessel(*n_max)?
                }
            };
            let (text, ok) = emit_reports(std::slice::from_ref(&report), format);
            // a single report prints as an object rather than a list
            let text = if format == Format::Json { to_json(&report) } else { text };
            Ok((text, ok))
        }
        Command::Render { body, with_cheeger } => {
            let b = body.build()?;
            let res = if *with_cheeger {
                Some(cheeger_core::cheeger(&b)?)
            } else {
                None
            };
            Ok((svg::render(&b, res.as_ref()), true))
        }
    }
}

fn configure_threads() -> CliResult<()> {
    let Ok(value) = std::env::var("CHEEGER_LAB_THREADS") else {
        return Ok(());
    };
    let n: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| usage(format!("CHEEGER_LAB_THREADS must be a positive integer, got `{value}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::Io(e.to_string()))
}

#[derive(Serialize)]
struct ErrorBody {
    error: ErrorDetail,
}

#[derive(Serialize)]
struct ErrorDetail {
    kind: &'static str,
    message: String,
}

fn error_kind(e: &cheeger_core::Error) -> &'static str {
    use cheeger_core::Error::*;
    match e {
        InvalidPolygon(_) => "invalid_polygon",
        InvalidParameter { .. } => "invalid_parameter",
        OutOfDomain { .. } => "out_of_domain",
        EmptyInterior => "empty_interior",
        NotTangential => "not_tangential",
        DiskUndefined(_) => "disk_undefined",
        Precondition(_) => "precondition",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|_| run(&cli));
    let (text, ok) = match result {
        Ok(v) => v,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Compute(e)) => {
            let body = ErrorBody {
                error: ErrorDetail {
                    kind: error_kind(&e),
                    message: e.to_string(),
                },
            };
            eprint!("{}", to_json(&body));
            return ExitCode::from(1);
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{text}"),
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
