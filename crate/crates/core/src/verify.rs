//! Batch comparison of graph-computed measures against the closed forms, and
//! the `Var − CS` gap sweeps.
//!
//! Comparisons are exact: integer and rational equality with zero tolerance.
//! The limiting `Var − CS → 0` statement is never assumed; sweeps just report
//! the gap series so callers (and the acceptance tests) can inspect how it
//! shrinks.

use alloc::vec::Vec;
use core::fmt;

use crate::formulas;
use crate::generators::{self, Family, FamilySpec, GenerateError};
use crate::indices;
use crate::spectral::{self, SpectralError};
use crate::Rational;

/// Quantity compared per grid point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    Irr,
    IrrT,
    Variance,
    MeanDegree,
}

impl Quantity {
    pub fn name(&self) -> &'static str {
        match self {
            Quantity::Irr => "irr",
            Quantity::IrrT => "irr_t",
            Quantity::Variance => "var",
            Quantity::MeanDegree => "mean_degree",
        }
    }
}

/// One quantity where graph and closed form disagree; carries both values.
#[derive(Debug, Clone, PartialEq)]
pub struct Diff {
    pub quantity: Quantity,
    pub graph_value: Rational,
    pub closed_value: Rational,
}

impl fmt::Display for Diff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: graph {} vs closed {}", self.quantity.name(), self.graph_value, self.closed_value)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum PointOutcome {
    Pass,
    Mismatch(Vec<Diff>),
    Invalid(GenerateError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct PointResult {
    pub spec: FamilySpec,
    pub outcome: PointOutcome,
}

impl PointResult {
    pub fn passed(&self) -> bool {
        matches!(self.outcome, PointOutcome::Pass)
    }
}

/// Compares graph-computed irr, irr_t, Var and mean degree against the
/// closed forms for every grid point. With `printed_forms` the uncorrected
/// published forms are used where an erratum exists, so the mismatches the
/// ledger documents become visible.
pub fn compare_grid(grid: &[FamilySpec], printed_forms: bool) -> Vec<PointResult> {
    grid.iter().map(|spec| compare_point(spec, printed_forms)).collect()
}

/// Single-point comparison; invalid parameters are recorded, not fatal.
pub fn compare_point(spec: &FamilySpec, printed_forms: bool) -> PointResult {
    let outcome = match compare_point_inner(spec, printed_forms) {
        Ok(diffs) if diffs.is_empty() => PointOutcome::Pass,
        Ok(diffs) => PointOutcome::Mismatch(diffs),
        Err(e) => PointOutcome::Invalid(e),
    };
    PointResult { spec: *spec, outcome }
}

fn compare_point_inner(
    spec: &FamilySpec,
    printed_forms: bool,
) -> Result<Vec<Diff>, GenerateError> {
    let g = generators::generate(spec)?;
    let closed = formulas::closed_form(spec)?;
    let ds = g.degree_sequence().expect("generated graphs are non-empty");

    let from_u64 = |v: u64| Rational::new(v as i128, 1);
    let mut expected_irr_t = from_u64(closed.irr_t);
    let mut expected_mean = closed.mean_degree;
    if printed_forms {
        if let Some(printed) = formulas::printed_total_irr(spec) {
            expected_irr_t = printed;
        }
        if let Some(q) = spec.param_values().q {
            if let Some(offset) = formulas::printed_cs_offset(spec.family(), q) {
                expected_mean = offset;
            }
        }
    }

    let checks = [
        (Quantity::Irr, from_u64(indices::albertson_irr(&g)), from_u64(closed.irr)),
        (Quantity::IrrT, from_u64(indices::total_irr(&ds)), expected_irr_t),
        (Quantity::Variance, indices::degree_variance(&ds), closed.variance),
        (Quantity::MeanDegree, ds.mean_degree, expected_mean),
    ];
    Ok(checks
        .into_iter()
        .filter(|(_, graph, closed)| graph != closed)
        .map(|(quantity, graph_value, closed_value)| Diff { quantity, graph_value, closed_value })
        .collect())
}

/// The standard verification grid per family: tubes over p, q from the
/// validity floor to 10, dendrimers k in 3..=5 and d in 1..=4,
/// circumcoronene k in 1..=10, Mycielski families n in 4..=30.
pub fn default_grid(family: Family) -> Vec<FamilySpec> {
    grid(family, 10, 5, 4, 10, 30)
}

/// Reduced grid for fast smoke runs.
pub fn quick_grid(family: Family) -> Vec<FamilySpec> {
    grid(family, 5, 4, 2, 5, 10)
}

fn grid(family: Family, pq_max: u32, k_max: u32, d_max: u32, circ_max: u32, myc_max: u32) -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    match family {
        Family::Tuc4c8s | Family::Tuc4c8r | Family::Tuc4 | Family::Tuhc6 | Family::Tuvc6 => {
            for p in 2..=pq_max {
                for q in 2..=pq_max {
                    let spec = match family {
                        Family::Tuc4c8s => FamilySpec::Tuc4c8s { p, q },
                        Family::Tuc4c8r => FamilySpec::Tuc4c8r { p, q },
                        Family::Tuc4 => FamilySpec::Tuc4 { p, q },
                        Family::Tuhc6 => FamilySpec::Tuhc6 { p, q },
                        Family::Tuvc6 => FamilySpec::Tuvc6 { p, q },
                        _ => unreachable!(),
                    };
                    if spec.validate().is_ok() {
                        specs.push(spec);
                    }
                }
            }
        }
        Family::Dendrimer => {
            for k in 3..=k_max {
                for d in 1..=d_max {
                    specs.push(FamilySpec::Dendrimer { k, d });
                }
            }
        }
        Family::Circumcoronene => {
            specs.extend((1..=circ_max).map(|k| FamilySpec::Circumcoronene { k }));
        }
        Family::MycielskiCycle => {
            specs.extend((4..=myc_max).map(|n| FamilySpec::MycielskiCycle { n }));
        }
        Family::MycielskiPath => {
            specs.extend((4..=myc_max).map(|n| FamilySpec::MycielskiPath { n }));
        }
    }
    specs
}

/// One point of a `Var − CS` sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRecord {
    pub spec: FamilySpec,
    pub n: usize,
    pub m: usize,
    pub variance: Rational,
    pub lambda1: f64,
    pub cs: f64,
    /// `Var − CS` as floats.
    pub gap: f64,
    pub iterations: usize,
    pub converged: bool,
}

impl SweepRecord {
    pub fn variance_f64(&self) -> f64 {
        crate::rational_to_f64(self.variance)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum SweepError {
    /// The limiting statement only covers the tube families and
    /// circumcoronene.
    OutOfScope(Family),
    Invalid(GenerateError),
    /// A point failed to converge and `allow_unconverged` was not set.
    NotConverged { spec: FamilySpec, best: spectral::SpectralResult },
}

impl fmt::Display for SweepError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SweepError::OutOfScope(family) => {
                write!(f, "family {family} is outside the sweep scope (tubes and circumcoronene)")
            }
            SweepError::Invalid(e) => write!(f, "{e}"),
            SweepError::NotConverged { spec, best } => write!(
                f,
                "solver did not converge on {spec} ({} iterations, residual {})",
                best.iterations, best.residual
            ),
        }
    }
}

impl core::error::Error for SweepError {}

/// Evaluates `Var` and `CS` over the given points and reports the gap series,
/// sorted by vertex count.
pub fn conjecture_sweep(
    points: &[FamilySpec],
    tol: f64,
    max_iter: usize,
    allow_unconverged: bool,
) -> Result<Vec<SweepRecord>, SweepError> {
    let mut records = Vec::with_capacity(points.len());
    for spec in points {
        if !spec.family().in_conjecture_scope() {
            return Err(SweepError::OutOfScope(spec.family()));
        }
        let g = generators::generate(spec).map_err(SweepError::Invalid)?;
        let solve = match spectral::lambda1_power(&g, tol, max_iter) {
            Ok(r) => r,
            Err(SpectralError::NotConverged(best)) if allow_unconverged => best,
            Err(SpectralError::NotConverged(best)) => {
                return Err(SweepError::NotConverged { spec: *spec, best });
            }
            Err(_) => unreachable!("generated graphs are connected and non-empty"),
        };
        let ds = g.degree_sequence().expect("non-empty");
        let variance = indices::degree_variance(&ds);
        let cs = solve.lambda1 - crate::rational_to_f64(ds.mean_degree);
        records.push(SweepRecord {
            spec: *spec,
            n: g.n(),
            m: g.m(),
            variance,
            lambda1: solve.lambda1,
            cs,
            gap: crate::rational_to_f64(variance) - cs,
            iterations: solve.iterations,
            converged: solve.converged,
        });
    }
    records.sort_by_key(|r| r.n);
    Ok(records)
}

/// The default sweep per family: tubes grow q (p = 4) through 4, 8, …, 64,
/// TUC4 grows p (q = 12), circumcoronene runs k in 2, 5, 10, 20, 40, 80.
pub fn default_sweep_grid(family: Family) -> Option<Vec<FamilySpec>> {
    let doubling = [4u32, 8, 16, 32, 64];
    let specs = match family {
        Family::Tuc4c8s => doubling.iter().map(|&q| FamilySpec::Tuc4c8s { p: 4, q }).collect(),
        Family::Tuc4c8r => doubling.iter().map(|&q| FamilySpec::Tuc4c8r { p: 4, q }).collect(),
        Family::Tuhc6 => doubling.iter().map(|&q| FamilySpec::Tuhc6 { p: 4, q }).collect(),
        Family::Tuvc6 => doubling.iter().map(|&q| FamilySpec::Tuvc6 { p: 4, q }).collect(),
        Family::Tuc4 => doubling.iter().map(|&p| FamilySpec::Tuc4 { p, q: 12 }).collect(),
        Family::Circumcoronene => {
            [2u32, 5, 10, 20, 40, 80].iter().map(|&k| FamilySpec::Circumcoronene { k }).collect()
        }
        _ => return None,
    };
    Some(specs)
}
