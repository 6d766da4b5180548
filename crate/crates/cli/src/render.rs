//! Text renderings: pretty report, CSV rows, verify tables. All output is
//! assembled as strings so identical invocations produce byte-identical
//! files.

use std::fmt::Write as _;

use molirr_core::generators::FamilySpec;
use molirr_core::indices::IndexReport;
use molirr_core::verify::{PointOutcome, PointResult, SweepRecord};
use molirr_core::Rational;

/// `p=4;q=4` style parameter cell (CSV-safe).
fn params_cell(spec: &FamilySpec) -> String {
    let v = spec.param_values();
    let mut parts = Vec::new();
    for (name, value) in [("p", v.p), ("q", v.q), ("k", v.k), ("d", v.d), ("n", v.n)] {
        if let Some(value) = value {
            parts.push(format!("{name}={value}"));
        }
    }
    parts.join(";")
}

fn opt_f64(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

pub const INDICES_CSV_HEADER: &str =
    "family,params,n,m,irr,irr_t,var_num,var_den,var_float,lambda1,cs,t_index";

pub fn indices_csv_row(source: &str, spec: Option<&FamilySpec>, r: &IndexReport) -> String {
    let params = spec.map(params_cell).unwrap_or_default();
    format!(
        "{source},{params},{},{},{},{},{},{},{},{},{},{}",
        r.n,
        r.m,
        r.irr,
        r.irr_t,
        r.variance.numer(),
        r.variance.denom(),
        r.variance_f64(),
        opt_f64(r.lambda1),
        opt_f64(r.cs),
        r.t_index,
    )
}

pub fn indices_pretty(source: &str, spec: Option<&FamilySpec>, r: &IndexReport) -> String {
    let mut out = String::new();
    let mut line = |k: &str, v: String| {
        let _ = writeln!(out, "{k:<12} {v}");
    };
    line("family", source.to_string());
    if let Some(spec) = spec {
        line("params", params_cell(spec));
    }
    line("n", r.n.to_string());
    line("m", r.m.to_string());
    line("irr", r.irr.to_string());
    line("irr_t", r.irr_t.to_string());
    line("var", format!("{} ({})", r.variance, r.variance_f64()));
    line("mean_degree", format!("{} ({})", r.mean_degree, r.mean_degree_f64()));
    line("t_index", r.t_index.to_string());
    match (r.lambda1, r.cs) {
        (Some(l), Some(cs)) => {
            line("lambda1", l.to_string());
            line("cs", cs.to_string());
            line(
                "solver",
                format!(
                    "{} after {} iterations",
                    if r.converged { "converged" } else { "NOT CONVERGED" },
                    r.iterations
                ),
            );
        }
        _ => line("cs", "n/a (graph disconnected)".to_string()),
    }
    out
}

pub const SWEEP_CSV_HEADER: &str =
    "family,p,q,k,d,n,m,var_float,lambda1,cs,gap,iterations,converged";

pub fn sweep_csv(records: &[SweepRecord]) -> String {
    let mut out = String::from(SWEEP_CSV_HEADER);
    out.push('\n');
    for r in records {
        let v = r.spec.param_values();
        let cell = |x: Option<u32>| x.map(|v| v.to_string()).unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            r.spec.family(),
            cell(v.p),
            cell(v.q),
            cell(v.k),
            cell(v.d),
            r.n,
            r.m,
            r.variance_f64(),
            r.lambda1,
            r.cs,
            r.gap,
            r.iterations,
            r.converged,
        );
    }
    out
}

/// Human-readable verify lines, one per grid point.
pub fn verify_lines(results: &[PointResult], printed_forms: bool) -> String {
    let mut out = String::new();
    let mut passed = 0usize;
    for r in results {
        match &r.outcome {
            PointOutcome::Pass => {
                passed += 1;
                let _ = writeln!(out, "ok       {}", r.spec);
            }
            PointOutcome::Mismatch(diffs) => {
                let detail: Vec<String> = diffs.iter().map(|d| d.to_string()).collect();
                let _ = writeln!(out, "MISMATCH {}: {}", r.spec, detail.join("; "));
                if printed_forms {
                    for e in molirr_core::formulas::errata_ledger() {
                        if e.family == r.spec.family()
                            && diffs.iter().any(|d| d.quantity.name() == e.field
                                || (e.field == "cs" && d.quantity.name() == "mean_degree"))
                        {
                            let _ = writeln!(
                                out,
                                "         erratum [{} {}]: printed {} ; corrected {}",
                                e.family, e.field, e.printed_form, e.corrected_form
                            );
                        }
                    }
                }
            }
            PointOutcome::Invalid(e) => {
                let _ = writeln!(out, "invalid  {}: {e}", r.spec);
            }
        }
    }
    let _ = writeln!(out, "{passed}/{} points passed", results.len());
    out
}

pub const VERIFY_CSV_HEADER: &str = "family,params,quantity,graph_value,closed_value,match";

/// Side-by-side CSV of graph vs closed values for diffing.
pub fn verify_csv(results: &[PointResult]) -> String {
    let mut out = String::from(VERIFY_CSV_HEADER);
    out.push('\n');
    let fmt = |r: &Rational| {
        if *r.denom() == 1 {
            r.numer().to_string()
        } else {
            format!("{}/{}", r.numer(), r.denom())
        }
    };
    for r in results {
        let (family, params) = (r.spec.family(), params_cell(&r.spec));
        match &r.outcome {
            PointOutcome::Pass => {
                let _ = writeln!(out, "{family},{params},all,,,true");
            }
            PointOutcome::Mismatch(diffs) => {
                for d in diffs {
                    let _ = writeln!(
                        out,
                        "{family},{params},{},{},{},false",
                        d.quantity.name(),
                        fmt(&d.graph_value),
                        fmt(&d.closed_value),
                    );
                }
            }
            PointOutcome::Invalid(_) => {
                let _ = writeln!(out, "{family},{params},invalid,,,false");
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use molirr_core::indices::full_report;
    use molirr_core::Graph;

    #[test]
    fn csv_row_shape() {
        let g = Graph::cycle(6);
        let r = full_report(&g, 1e-10, 10_000).unwrap();
        let row = indices_csv_row("edgelist", None, &r);
        assert_eq!(row.split(',').count(), INDICES_CSV_HEADER.split(',').count());
        assert!(row.starts_with("edgelist,,6,6,0,0,0,1,0,"));
    }

    #[test]
    fn disconnected_leaves_spectral_cells_empty() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let r = full_report(&g, 1e-10, 10_000).unwrap();
        let row = indices_csv_row("edgelist", None, &r);
        assert!(row.ends_with(",,,1"), "{row}");
        let pretty = indices_pretty("edgelist", None, &r);
        assert!(pretty.contains("n/a (graph disconnected)"));
    }
}
