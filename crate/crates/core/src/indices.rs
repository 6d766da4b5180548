//! The four irregularity measures and the distinct-degree index, computed
//! directly from a graph or its degree sequence.

use core::fmt;

use crate::graph::{DegreeSequence, Graph, GraphError};
use crate::spectral;
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndicesError {
    /// CS is only defined here for connected graphs (λ₁ needs a unique
    /// Perron vector).
    Disconnected,
}

impl fmt::Display for IndicesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndicesError::Disconnected => write!(f, "graph is disconnected; CS undefined"),
        }
    }
}

impl core::error::Error for IndicesError {}

/// Albertson irregularity: `Σ_{uv ∈ E} |deg(u) − deg(v)|`.
pub fn albertson_irr(g: &Graph) -> u64 {
    let mut sum = 0u64;
    for u in 0..g.n() {
        let du = g.degree(u) as i64;
        for &v in g.neighbors(u) {
            if (v as usize) > u {
                sum += (du - g.degree(v as usize) as i64).unsigned_abs();
            }
        }
    }
    sum
}

/// Total irregularity: `½ Σ_{u,v ∈ V} |deg(u) − deg(v)|`.
///
/// Computed from the degree counts as `Σ_{i<j} nᵢ·nⱼ·(j−i)`, quadratic only
/// in the number of distinct degrees.
pub fn total_irr(ds: &DegreeSequence) -> u64 {
    let mut sum = 0u128;
    for (pos, (&di, &ni)) in ds.counts.iter().enumerate() {
        for (&dj, &nj) in ds.counts.iter().skip(pos + 1) {
            sum += ni as u128 * nj as u128 * (dj - di) as u128;
        }
    }
    u64::try_from(sum).expect("total irregularity exceeds u64")
}

/// Degree variance `(1/n)Σd² − (1/n²)(Σd)²` as an exact rational.
pub fn degree_variance(ds: &DegreeSequence) -> Rational {
    let n = ds.n as i128;
    let mut sum = 0i128;
    let mut sum_sq = 0i128;
    for (&d, &count) in &ds.counts {
        sum += d as i128 * count as i128;
        sum_sq += (d as i128) * (d as i128) * count as i128;
    }
    Rational::new(n * sum_sq - sum * sum, n * n)
}

/// Collatz-Sinogowitz index `λ₁ − 2m/n` for a connected graph, given λ₁ from
/// the spectral module.
pub fn collatz_sinogowitz(g: &Graph, lambda1: f64) -> Result<f64, IndicesError> {
    if !g.is_connected() {
        return Err(IndicesError::Disconnected);
    }
    let mean = 2.0 * g.m() as f64 / g.n() as f64;
    Ok(lambda1 - mean)
}

/// Number of distinct degrees in the degree sequence.
pub fn t_index(ds: &DegreeSequence) -> usize {
    ds.distinct_degrees()
}

/// All measures of one graph in one record.
///
/// `variance` and `mean_degree` are exact; `lambda1`/`cs` are `None` for
/// disconnected input (the other measures remain defined).
#[derive(Debug, Clone, PartialEq)]
pub struct IndexReport {
    pub n: usize,
    pub m: usize,
    pub irr: u64,
    pub irr_t: u64,
    pub variance: Rational,
    pub mean_degree: Rational,
    pub t_index: usize,
    pub connected: bool,
    pub lambda1: Option<f64>,
    pub cs: Option<f64>,
    /// Eigensolver iterations (0 if the solver did not run).
    pub iterations: usize,
    /// False if the solver hit its iteration cap; λ₁/CS then carry the best
    /// estimate.
    pub converged: bool,
}

impl IndexReport {
    pub fn variance_f64(&self) -> f64 {
        crate::rational_to_f64(self.variance)
    }

    pub fn mean_degree_f64(&self) -> f64 {
        crate::rational_to_f64(self.mean_degree)
    }
}

/// Computes every measure of `g`. The spectral radius runs with tolerance
/// `tol` and iteration cap `max_iter`; non-convergence is reported through
/// the `converged` flag rather than an error so sweeps can log and continue.
pub fn full_report(g: &Graph, tol: f64, max_iter: usize) -> Result<IndexReport, GraphError> {
    let ds = g.degree_sequence()?;
    let connected = g.is_connected();
    let (lambda1, cs, iterations, converged) = if connected {
        let res = match spectral::lambda1_power(g, tol, max_iter) {
            Ok(r) => r,
            Err(spectral::SpectralError::NotConverged(r)) => r,
            Err(_) => unreachable!("connected non-empty graph"),
        };
        let mean = crate::rational_to_f64(ds.mean_degree);
        (Some(res.lambda1), Some(res.lambda1 - mean), res.iterations, res.converged)
    } else {
        (None, None, 0, true)
    };
    Ok(IndexReport {
        n: g.n(),
        m: g.m(),
        irr: albertson_irr(g),
        irr_t: total_irr(&ds),
        variance: degree_variance(&ds),
        mean_degree: ds.mean_degree,
        t_index: t_index(&ds),
        connected,
        lambda1,
        cs,
        iterations,
        converged,
    })
}
