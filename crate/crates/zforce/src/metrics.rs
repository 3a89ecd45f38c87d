//! Structural measurements: degree census, power-law tail exponent
//! estimation, graph diameter, and least-squares scaling fits.

use crate::graph::Graph;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Minimum tail sample size accepted by [`estimate_gamma`].
pub const MIN_TAIL_SAMPLES: usize = 50;

#[derive(Debug, Error, PartialEq)]
pub enum MetricsError {
    #[error("graph has no alive vertices")]
    EmptyGraph,
    #[error("k_min must be at least 1")]
    BadKmin,
    #[error("only {available} degrees >= k_min, need at least {required}")]
    InsufficientTail { available: usize, required: usize },
    #[error("all tail degrees are equal; exponent is undefined")]
    NoTailVariation,
    #[error("need at least 3 points, got {got}")]
    TooFewPoints { got: usize },
    #[error("all abscissae are equal; slope is undefined")]
    DegenerateAbscissae,
}

/// Exact degree census of the alive vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeStats {
    /// degree -> number of vertices with that degree
    pub histogram: BTreeMap<usize, usize>,
    /// total alive vertices (the histogram counts sum to this)
    pub n: usize,
}

impl DegreeStats {
    /// Empirical probability of degree `k`.
    pub fn p(&self, k: usize) -> f64 {
        *self.histogram.get(&k).unwrap_or(&0) as f64 / self.n as f64
    }
}

pub fn degree_distribution(g: &Graph) -> Result<DegreeStats, MetricsError> {
    if g.n_alive() == 0 {
        return Err(MetricsError::EmptyGraph);
    }
    let mut histogram = BTreeMap::new();
    for v in g.alive_vertices() {
        *histogram.entry(g.degree(v)).or_insert(0) += 1;
    }
    Ok(DegreeStats {
        histogram,
        n: g.n_alive(),
    })
}

/// Tail exponent estimate with its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaEstimate {
    pub gamma: f64,
    pub stderr: f64,
    /// number of degree samples >= k_min that entered the fit
    pub n_tail: usize,
}

/// Discrete maximum-likelihood estimate of the tail exponent of a power-law
/// degree distribution, fitted over degrees `>= k_min`:
/// `gamma = 1 + n / sum ln(k_i / (k_min - 1/2))`, standard error
/// `(gamma - 1) / sqrt(n)`. Requires at least [`MIN_TAIL_SAMPLES`] tail
/// degrees and some variation among them.
pub fn estimate_gamma(stats: &DegreeStats, k_min: usize) -> Result<GammaEstimate, MetricsError> {
    if k_min < 1 {
        return Err(MetricsError::BadKmin);
    }
    let tail: Vec<(usize, usize)> = stats
        .histogram
        .range(k_min..)
        .map(|(&k, &c)| (k, c))
        .collect();
    let n_tail: usize = tail.iter().map(|&(_, c)| c).sum();
    if n_tail < MIN_TAIL_SAMPLES {
        return Err(MetricsError::InsufficientTail {
            available: n_tail,
            required: MIN_TAIL_SAMPLES,
        });
    }
    if tail.len() < 2 {
        return Err(MetricsError::NoTailVariation);
    }
    let offset = k_min as f64 - 0.5;
    let log_sum: f64 = tail
        .iter()
        .map(|&(k, c)| c as f64 * (k as f64 / offset).ln())
        .sum();
    let gamma = 1.0 + n_tail as f64 / log_sum;
    Ok(GammaEstimate {
        gamma,
        stderr: (gamma - 1.0) / (n_tail as f64).sqrt(),
        n_tail,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiameterMethod {
    /// Max eccentricity over every vertex of the largest component; O(N*E).
    Exact,
    /// Double BFS: from a fixed vertex to the farthest, then again. A lower
    /// bound in general, exact on trees.
    TwoSweep,
}

impl fmt::Display for DiameterMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiameterMethod::Exact => write!(f, "exact"),
            DiameterMethod::TwoSweep => write!(f, "two-sweep"),
        }
    }
}

impl FromStr for DiameterMethod {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exact" => Ok(DiameterMethod::Exact),
            "two-sweep" => Ok(DiameterMethod::TwoSweep),
            other => Err(format!(
                "unknown diameter method {other:?}, expected exact or two-sweep"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiameterResult {
    /// Hop diameter of the largest component (ties broken by lowest id).
    pub diameter: usize,
    /// Number of connected components in the whole graph.
    pub component_count: usize,
    pub method: DiameterMethod,
}

/// Diameter of the largest connected component. Disconnected graphs are
/// not an error: the component count is reported alongside so callers can
/// tell a global diameter from a largest-component one.
pub fn diameter(g: &Graph, method: DiameterMethod) -> Result<DiameterResult, MetricsError> {
    let components = g.connected_components();
    let largest = components
        .iter()
        .max_by(|a, b| a.len().cmp(&b.len()).then(b[0].cmp(&a[0])))
        .ok_or(MetricsError::EmptyGraph)?;
    let diameter = match method {
        DiameterMethod::Exact => largest
            .iter()
            .map(|&v| g.eccentricity(v).expect("vertex is alive"))
            .max()
            .unwrap_or(0),
        DiameterMethod::TwoSweep => {
            let far = farthest_from(g, largest[0]);
            farthest_distance(g, far)
        }
    };
    Ok(DiameterResult {
        diameter,
        component_count: components.len(),
        method,
    })
}

fn farthest_from(g: &Graph, start: usize) -> usize {
    let dist = g.bfs_distances(start).expect("start vertex is alive");
    let mut best = start;
    let mut best_d = 0;
    for (v, d) in dist.iter().enumerate() {
        if let Some(d) = d {
            if *d > best_d {
                best = v;
                best_d = *d;
            }
        }
    }
    best
}

fn farthest_distance(g: &Graph, start: usize) -> usize {
    g.bfs_distances(start)
        .expect("start vertex is alive")
        .into_iter()
        .flatten()
        .max()
        .unwrap_or(0)
}

/// Ordinary least-squares line through scaling points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalingFit {
    pub slope: f64,
    pub intercept: f64,
    /// Coefficient of determination, clamped to [0, 1]; an all-equal
    /// response fitted without residue counts as a perfect fit.
    pub r_squared: f64,
}

/// Fits `y = slope * x + intercept` by ordinary least squares. Needs at
/// least three points with non-degenerate abscissae.
pub fn fit_scaling(points: &[(f64, f64)]) -> Result<ScalingFit, MetricsError> {
    if points.len() < 3 {
        return Err(MetricsError::TooFewPoints { got: points.len() });
    }
    let n = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    if sxx == 0.0 {
        return Err(MetricsError::DegenerateAbscissae);
    }
    let sxy: f64 = points
        .iter()
        .map(|p| (p.0 - mean_x) * (p.1 - mean_y))
        .sum();
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let ss_tot: f64 = points.iter().map(|p| (p.1 - mean_y).powi(2)).sum();
    let ss_res: f64 = points
        .iter()
        .map(|p| (p.1 - (slope * p.0 + intercept)).powi(2))
        .sum();
    let r_squared = if ss_tot == 0.0 {
        1.0
    } else {
        (1.0 - ss_res / ss_tot).clamp(0.0, 1.0)
    };
    Ok(ScalingFit {
        slope,
        intercept,
        r_squared,
    })
}
