//! Named checks of inequalities, monotonicity scans and closed-form
//! reproductions, each producing a [`CheckReport`].

mod checks;
mod corpus;
mod repro;
mod scan;

use std::collections::BTreeMap;

use serde::Serialize;

pub use checks::{
    check_brunn_minkowski_h, check_contact_bounds, check_derivative_consistency,
    check_derivative_inequalities, check_general_monotonicity, check_inner_area_comparison,
    check_isoperimetric, check_larson, check_matheron, check_scaled_monotonicity, local_min_demo,
    Functional, EQUALITY_TOL,
};
pub use corpus::{body_suite, corpus, default_suite, inner_grid, repro_suite, uniform_grid};
pub use repro::{
    repro_bessel, repro_quad_scaling, repro_rectangle_ratio, repro_tailed_counterexample,
    repro_thin_rect, tailed_f, tailed_grid, quad_grid, ratio_grid,
};
pub use scan::{scan_scaled_cheeger, ScanSeries, Verdict, TOL_SCAN};

/// Worst-case sample of a check: the inequality read `lhs ≥ rhs` (or `=`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Witness {
    pub t: f64,
    pub lhs: f64,
    pub rhs: f64,
}

/// Outcome of one named check. `passed` holds iff `violation ≤ tolerance`;
/// strict inequalities use a negative tolerance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub skipped: bool,
    pub witness: Option<Witness>,
    pub tolerance: f64,
    pub violation: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub extra: BTreeMap<String, f64>,
}

impl CheckReport {
    /// A check whose precondition fails. Counts as passed.
    pub fn skipped(name: impl Into<String>, note: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            passed: true,
            skipped: true,
            witness: None,
            tolerance: 0.0,
            violation: 0.0,
            note: Some(note.into()),
            extra: BTreeMap::new(),
        }
    }

    pub fn failed(name: impl Into<String>, note: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            passed: false,
            skipped: false,
            witness: None,
            tolerance: 0.0,
            violation: f64::INFINITY,
            note: Some(note.into()),
            extra: BTreeMap::new(),
        }
    }

    pub fn extra(&self, key: &str) -> Option<f64> {
        self.extra.get(key).copied()
    }
}

/// How a sample contributes to the violation.
#[derive(Debug, Clone, Copy, PartialEq)]
enum Relation {
    /// `lhs ≥ rhs`: violation `(rhs − lhs)/scale`.
    AtLeast,
    /// `lhs = rhs`: violation `|lhs − rhs|/scale`.
    Equal,
}

/// Accumulates samples into a report, keeping the worst one.
#[derive(Debug)]
struct Tally {
    name: String,
    relation: Relation,
    tolerance: f64,
    worst: Option<(f64, Witness)>,
    extra: BTreeMap<String, f64>,
    notes: Vec<String>,
    forced_fail: bool,
}

impl Tally {
    fn new(name: impl Into<String>, relation: Relation, tolerance: f64) -> Self {
        Tally {
            name: name.into(),
            relation,
            tolerance,
            worst: None,
            extra: BTreeMap::new(),
            notes: Vec::new(),
            forced_fail: false,
        }
    }

    fn at_least(name: impl Into<String>, tolerance: f64) -> Self {
        Tally::new(name, Relation::AtLeast, tolerance)
    }

    /// `lhs > rhs` with at least `margin` to spare.
    fn strict(name: impl Into<String>, margin: f64) -> Self {
        Tally::new(name, Relation::AtLeast, -margin)
    }

    fn equal(name: impl Into<String>, tolerance: f64) -> Self {
        Tally::new(name, Relation::Equal, tolerance)
    }

    fn push(&mut self, t: f64, lhs: f64, rhs: f64, scale: f64) {
        let raw = match self.relation {
            Relation::AtLeast => rhs - lhs,
            Relation::Equal => (lhs - rhs).abs(),
        };
        let v = if raw.is_nan() { f64::INFINITY } else { raw / scale };
        if self.worst.is_none_or(|(w, _)| v > w) {
            self.worst = Some((v, Witness { t, lhs, rhs }));
        }
    }

    fn extra(&mut self, key: &str, value: f64) {
        self.extra.insert(key.to_string(), value);
    }

    /// Records a side condition; the report fails if it does not hold.
    fn require(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.forced_fail = true;
            self.notes.push(what.into());
        }
    }

    fn note(&mut self, what: impl Into<String>) {
        self.notes.push(what.into());
    }

    fn finish(self) -> CheckReport {
        let (violation, witness) = match self.worst {
            Some((v, w)) => (v, Some(w)),
            None => (0.0, None),
        };
        CheckReport {
            name: self.name,
            passed: violation <= self.tolerance && !self.forced_fail,
            skipped: false,
            witness,
            tolerance: self.tolerance,
            violation,
            note: (!self.notes.is_empty()).then(|| self.notes.join("; ")),
            extra: self.extra,
        }
    }
}
