//! Configuration-driven experiment harness: sweeps an attractiveness grid
//! for a growth model, runs the forcing and cover heuristics on every
//! replica, and emits deterministic CSV tables plus summary statistics.
//!
//! Replicas run in parallel but the output order is canonical (grid-major,
//! replica-minor) and each replica's seed is derived deterministically from
//! the master seed, so identical configs reproduce identical results in
//! every column except wall time.

use crate::generators::{
    derive_seed, gen_deactivation, gen_pa, DeactParams, GeneratorError, PaParams, Seed,
};
use crate::graph::Graph;
use crate::metrics::{
    degree_distribution, diameter, estimate_gamma, fit_scaling, DiameterMethod, MetricsError,
    ScalingFit,
};
use crate::vertex_cover::{is_vertex_cover, lm_vertex_cover};
use crate::zero_forcing::{is_forcing_set, lm_zero_forcing, LmMode};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;
use thiserror::Error;

/// k_min used for the optional per-replica tail-exponent measurement.
pub const DEFAULT_GAMMA_KMIN: usize = 8;

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error("invalid config: {0}")]
    Config(String),
    #[error(transparent)]
    Generator(#[from] GeneratorError),
    #[error(transparent)]
    Metrics(#[from] MetricsError),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv line {line}: {msg}")]
    Csv { line: usize, msg: String },
    #[error("internal check failed: {0}")]
    InvalidResult(String),
}

/// Which growth model an experiment sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ModelKind {
    #[serde(rename = "pa")]
    Pa,
    #[serde(rename = "deactivation")]
    Deactivation,
}

impl ModelKind {
    /// Stable tag mixed into derived seeds and printed in CSV.
    pub fn tag(&self) -> &'static str {
        match self {
            ModelKind::Pa => "pa",
            ModelKind::Deactivation => "deactivation",
        }
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for ModelKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "pa" => Ok(ModelKind::Pa),
            "deactivation" | "deact" => Ok(ModelKind::Deactivation),
            other => Err(format!(
                "unknown model {other:?}, expected pa or deactivation"
            )),
        }
    }
}

fn default_true() -> bool {
    true
}

/// Which quantities each replica measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeasureFlags {
    #[serde(default = "default_true")]
    pub zf: bool,
    #[serde(default = "default_true")]
    pub vc: bool,
    #[serde(default = "default_true")]
    pub diameter: bool,
    #[serde(default)]
    pub gamma: bool,
}

impl Default for MeasureFlags {
    fn default() -> Self {
        MeasureFlags {
            zf: true,
            vc: true,
            diameter: true,
            gamma: false,
        }
    }
}

/// A grid sweep: one growth model, one size, a list of attractiveness
/// values, and a replica count per grid point. Serialized as flat JSON with
/// these exact field names.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub model: ModelKind,
    pub n: usize,
    pub m: usize,
    pub a_grid: Vec<f64>,
    pub replicas: usize,
    pub master_seed: Seed,
    #[serde(default)]
    pub mode: LmMode,
    #[serde(default)]
    pub measure: MeasureFlags,
}

impl ExperimentConfig {
    /// Desk-scale preset: n = 2000, 20 replicas over the standard grid.
    /// The full-scale run (n = 10000, 100 replicas) uses the same shape.
    pub fn desk_scale(model: ModelKind, master_seed: Seed) -> Self {
        ExperimentConfig {
            model,
            n: 2000,
            m: 2,
            a_grid: vec![0.05, 0.1, 0.2, 0.5, 1.0, 2.0],
            replicas: 20,
            master_seed,
            mode: LmMode::default(),
            measure: MeasureFlags::default(),
        }
    }

    pub fn validate(&self) -> Result<(), ExperimentError> {
        if self.replicas < 1 {
            return Err(ExperimentError::Config("replicas must be >= 1".into()));
        }
        if self.a_grid.is_empty() {
            return Err(ExperimentError::Config("a_grid must be nonempty".into()));
        }
        if let Some(&bad) = self.a_grid.iter().find(|a| !a.is_finite() || **a <= 0.0) {
            return Err(ExperimentError::Config(format!(
                "a_grid values must be finite and > 0, got {bad}"
            )));
        }
        if self.m < 1 || self.n < self.m + 1 {
            return Err(ExperimentError::Config(format!(
                "need m >= 1 and n >= m + 1, got n = {}, m = {}",
                self.n, self.m
            )));
        }
        Ok(())
    }
}

/// One replica's measurements. Fractions are divided by the graph size;
/// unmeasured quantities are `None` and print as `NA`.
#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub model: ModelKind,
    pub a: f64,
    /// 2 + a, the model's target degree exponent.
    pub gamma_target: f64,
    pub replica: usize,
    pub seed: Seed,
    pub z_lm_frac: Option<f64>,
    pub delta_z_frac: Option<f64>,
    pub v_lm_frac: Option<f64>,
    pub delta_v_frac: Option<f64>,
    pub diameter: Option<usize>,
    /// Measured tail exponent (k_min = [`DEFAULT_GAMMA_KMIN`]); not a CSV
    /// column, available programmatically when `measure.gamma` is set.
    pub gamma_hat: Option<f64>,
    pub walltime_ms: u64,
}

/// Runs the sweep on the global thread pool. Records are ordered grid-major
/// then replica-minor regardless of scheduling.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<Vec<RunRecord>, ExperimentError> {
    cfg.validate()?;
    let jobs: Vec<(usize, usize)> = (0..cfg.a_grid.len())
        .flat_map(|gi| (0..cfg.replicas).map(move |r| (gi, r)))
        .collect();
    jobs.par_iter()
        .map(|&(gi, replica)| run_one(cfg, gi, replica))
        .collect()
}

/// Same as [`run_experiment`] but on a dedicated pool of `workers` threads.
pub fn run_experiment_with_workers(
    cfg: &ExperimentConfig,
    workers: usize,
) -> Result<Vec<RunRecord>, ExperimentError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| ExperimentError::Config(format!("thread pool: {e}")))?;
    pool.install(|| run_experiment(cfg))
}

fn run_one(
    cfg: &ExperimentConfig,
    grid_index: usize,
    replica: usize,
) -> Result<RunRecord, ExperimentError> {
    let a = cfg.a_grid[grid_index];
    let seed = derive_seed(cfg.master_seed, grid_index, replica, cfg.model.tag());
    let started = Instant::now();
    let g: Graph = match cfg.model {
        ModelKind::Pa => gen_pa(
            &PaParams {
                n: cfg.n,
                m: cfg.m,
                a,
            },
            seed,
        )?,
        ModelKind::Deactivation => gen_deactivation(
            &DeactParams {
                n: cfg.n,
                m: cfg.m,
                a,
            },
            seed,
        )?,
    };
    let n = g.n_alive() as f64;

    let (mut z_lm_frac, mut delta_z_frac) = (None, None);
    if cfg.measure.zf {
        let r = lm_zero_forcing(&g, cfg.mode);
        if !is_forcing_set(&g, &r.zfs) {
            return Err(ExperimentError::InvalidResult(format!(
                "replica {replica} at a = {a}: emitted set of size {} is not forcing",
                r.z_lm
            )));
        }
        z_lm_frac = Some(r.z_lm as f64 / n);
        delta_z_frac = Some(r.delta_z as f64 / n);
    }

    let (mut v_lm_frac, mut delta_v_frac) = (None, None);
    if cfg.measure.vc {
        let r = lm_vertex_cover(&g);
        if !is_vertex_cover(&g, &r.cover) {
            return Err(ExperimentError::InvalidResult(format!(
                "replica {replica} at a = {a}: emitted set of size {} is not a cover",
                r.v_lm
            )));
        }
        v_lm_frac = Some(r.v_lm as f64 / n);
        delta_v_frac = Some(r.delta_v as f64 / n);
    }

    let diameter_hops = if cfg.measure.diameter {
        Some(diameter(&g, DiameterMethod::TwoSweep)?.diameter)
    } else {
        None
    };

    let gamma_hat = if cfg.measure.gamma {
        degree_distribution(&g)
            .ok()
            .and_then(|s| estimate_gamma(&s, DEFAULT_GAMMA_KMIN).ok())
            .map(|e| e.gamma)
    } else {
        None
    };

    Ok(RunRecord {
        model: cfg.model,
        a,
        gamma_target: 2.0 + a,
        replica,
        seed,
        z_lm_frac,
        delta_z_frac,
        v_lm_frac,
        delta_v_frac,
        diameter: diameter_hops,
        gamma_hat,
        walltime_ms: started.elapsed().as_millis() as u64,
    })
}

/// Mean and standard error (sample standard deviation over sqrt(count)).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeanStderr {
    pub mean: f64,
    pub stderr: f64,
    pub count: usize,
}

fn mean_stderr(values: &[f64]) -> Option<MeanStderr> {
    if values.is_empty() {
        return None;
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let stderr = if values.len() < 2 {
        0.0
    } else {
        let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0);
        (var / n).sqrt()
    };
    Some(MeanStderr {
        mean,
        stderr,
        count: values.len(),
    })
}

/// Per-grid-point aggregate of [`RunRecord`]s.
#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub model: ModelKind,
    pub a: f64,
    pub gamma: f64,
    pub replicas: usize,
    pub z_lm: Option<MeanStderr>,
    pub delta_z: Option<MeanStderr>,
    pub v_lm: Option<MeanStderr>,
    pub delta_v: Option<MeanStderr>,
    pub diameter: Option<MeanStderr>,
}

/// Groups records by (model, a) in first-appearance order and averages each
/// measured quantity over the group's replicas.
pub fn aggregate(records: &[RunRecord]) -> Result<Vec<SummaryRow>, ExperimentError> {
    if records.is_empty() {
        return Err(ExperimentError::Config(
            "cannot aggregate an empty record list".into(),
        ));
    }
    let mut keys: Vec<(ModelKind, u64)> = Vec::new();
    let mut groups: Vec<Vec<&RunRecord>> = Vec::new();
    for rec in records {
        let key = (rec.model, rec.a.to_bits());
        match keys.iter().position(|&k| k == key) {
            Some(i) => groups[i].push(rec),
            None => {
                keys.push(key);
                groups.push(vec![rec]);
            }
        }
    }
    let collect = |group: &[&RunRecord], field: fn(&RunRecord) -> Option<f64>| {
        let values: Vec<f64> = group.iter().filter_map(|r| field(r)).collect();
        mean_stderr(&values)
    };
    Ok(groups
        .iter()
        .map(|group| {
            let first = group[0];
            SummaryRow {
                model: first.model,
                a: first.a,
                gamma: first.gamma_target,
                replicas: group.len(),
                z_lm: collect(group, |r| r.z_lm_frac),
                delta_z: collect(group, |r| r.delta_z_frac),
                v_lm: collect(group, |r| r.v_lm_frac),
                delta_v: collect(group, |r| r.delta_v_frac),
                diameter: collect(group, |r| r.diameter.map(|d| d as f64)),
            }
        })
        .collect())
}

/// Fits `1 - mean(z_lm/N)` and `mean(v_lm/N)` against `gamma - 2` over the
/// rows whose gamma lies in the inclusive window. Both responses are
/// predicted to grow linearly through the origin as gamma leaves 2.
pub fn fit_summary_scalings(
    rows: &[SummaryRow],
    gamma_window: (f64, f64),
) -> Result<(ScalingFit, ScalingFit), ExperimentError> {
    let (lo, hi) = gamma_window;
    let selected: Vec<&SummaryRow> = rows
        .iter()
        .filter(|r| r.gamma >= lo && r.gamma <= hi && r.z_lm.is_some() && r.v_lm.is_some())
        .collect();
    if selected.len() < 3 {
        return Err(ExperimentError::Config(format!(
            "need >= 3 rows with z and v inside gamma window [{lo}, {hi}], found {}",
            selected.len()
        )));
    }
    let z_points: Vec<(f64, f64)> = selected
        .iter()
        .map(|r| (r.gamma - 2.0, 1.0 - r.z_lm.unwrap().mean))
        .collect();
    let v_points: Vec<(f64, f64)> = selected
        .iter()
        .map(|r| (r.gamma - 2.0, r.v_lm.unwrap().mean))
        .collect();
    Ok((fit_scaling(&z_points)?, fit_scaling(&v_points)?))
}

/// Header of the per-replica CSV, fixed column order.
pub const RECORDS_HEADER: &str =
    "model,a,gamma,replica,seed,z_lm_frac,delta_z_frac,v_lm_frac,delta_v_frac,diameter,walltime_ms";

/// Header of the aggregated CSV, fixed column order.
pub const SUMMARY_HEADER: &str = "model,a,gamma,replicas,z_lm_mean,z_lm_stderr,delta_z_mean,delta_z_stderr,v_lm_mean,v_lm_stderr,delta_v_mean,delta_v_stderr,diameter_mean,diameter_stderr";

fn frac(v: Option<f64>) -> String {
    match v {
        Some(x) => format!("{x:.6}"),
        None => "NA".into(),
    }
}

/// Renders records as CSV. Every column except `walltime_ms` is a pure
/// function of the config.
pub fn records_to_csv(records: &[RunRecord]) -> String {
    let mut out = String::from(RECORDS_HEADER);
    out.push('\n');
    for r in records {
        let diam = r
            .diameter
            .map(|d| d.to_string())
            .unwrap_or_else(|| "NA".into());
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{}\n",
            r.model,
            r.a,
            r.gamma_target,
            r.replica,
            r.seed,
            frac(r.z_lm_frac),
            frac(r.delta_z_frac),
            frac(r.v_lm_frac),
            frac(r.delta_v_frac),
            diam,
            r.walltime_ms
        ));
    }
    out
}

/// Renders summary rows as CSV.
pub fn summary_to_csv(rows: &[SummaryRow]) -> String {
    let mut out = String::from(SUMMARY_HEADER);
    out.push('\n');
    for r in rows {
        let pair = |m: Option<MeanStderr>| {
            format!("{},{}", frac(m.map(|x| x.mean)), frac(m.map(|x| x.stderr)))
        };
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            r.model,
            r.a,
            r.gamma,
            r.replicas,
            pair(r.z_lm),
            pair(r.delta_z),
            pair(r.v_lm),
            pair(r.delta_v),
            pair(r.diameter),
        ));
    }
    out
}

pub fn write_records_csv(records: &[RunRecord], path: &Path) -> Result<(), ExperimentError> {
    std::fs::write(path, records_to_csv(records))?;
    Ok(())
}

pub fn write_summary_csv(rows: &[SummaryRow], path: &Path) -> Result<(), ExperimentError> {
    std::fs::write(path, summary_to_csv(rows))?;
    Ok(())
}

fn parse_field<T: FromStr>(s: &str, line: usize, what: &str) -> Result<T, ExperimentError>
where
    T::Err: fmt::Display,
{
    s.parse().map_err(|e| ExperimentError::Csv {
        line,
        msg: format!("bad {what} {s:?}: {e}"),
    })
}

fn parse_opt_f64(s: &str, line: usize, what: &str) -> Result<Option<f64>, ExperimentError> {
    if s == "NA" {
        Ok(None)
    } else {
        parse_field(s, line, what).map(Some)
    }
}

/// Parses a CSV produced by [`records_to_csv`].
pub fn parse_records_csv(text: &str) -> Result<Vec<RunRecord>, ExperimentError> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h == RECORDS_HEADER => {}
        other => {
            return Err(ExperimentError::Csv {
                line: 1,
                msg: format!("expected records header, got {:?}", other.map(|x| x.1)),
            })
        }
    }
    let mut records = Vec::new();
    for (i, line) in lines {
        if line.is_empty() {
            continue;
        }
        let lineno = i + 1;
        let cols: Vec<&str> = line.split(',').collect();
        if cols.len() != 11 {
            return Err(ExperimentError::Csv {
                line: lineno,
                msg: format!("expected 11 columns, got {}", cols.len()),
            });
        }
        let diameter = if cols[9] == "NA" {
            None
        } else {
            Some(parse_field(cols[9], lineno, "diameter")?)
        };
        records.push(RunRecord {
            model: ModelKind::from_str(cols[0]).map_err(|msg| ExperimentError::Csv {
                line: lineno,
                msg,
            })?,
            a: parse_field(cols[1], lineno, "a")?,
            gamma_target: parse_field(cols[2], lineno, "gamma")?,
            replica: parse_field(cols[3], lineno, "replica")?,
            seed: parse_field(cols[4], lineno, "seed")?,
            z_lm_frac: parse_opt_f64(cols[5], lineno, "z_lm_frac")?,
            delta_z_frac: parse_opt_f64(cols[6], lineno, "delta_z_frac")?,
            v_lm_frac: parse_opt_f64(cols[7], lineno, "v_lm_frac")?,
            delta_v_frac: parse_opt_f64(cols[8], lineno, "delta_v_frac")?,
            diameter,
            gamma_hat: None,
            walltime_ms: parse_field(cols[10], lineno, "walltime_ms")?,
        });
    }
    Ok(records)
}

/// Parses a CSV produced by [`summary_to_csv`].
pub fn parse_summary_csv(text: &str) -> Result<Vec<SummaryRow>, ExperimentError> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h == SUMMARY_HEADER => {}
        other => {
            return Err(ExperimentError::Csv {
                line: 1,
                msg: format!("expected summary header, got {:?}", other.map(|x| x.1)),
            })
        }
    }
    let mut rows = Vec::new();
    for (i, line) in lines {
        if line.is_empty() {
            continue;
        }
        let lineno = i + 1;
        let cols: Vec<&str> = line.split(',').collect();
        if cols.len() != 14 {
            return Err(ExperimentError::Csv {
                line: lineno,
                msg: format!("expected 14 columns, got {}", cols.len()),
            });
        }
        let replicas: usize = parse_field(cols[3], lineno, "replicas")?;
        let pair = |m: usize, s: usize| -> Result<Option<MeanStderr>, ExperimentError> {
            let mean = parse_opt_f64(cols[m], lineno, "mean")?;
            let stderr = parse_opt_f64(cols[s], lineno, "stderr")?;
            Ok(match (mean, stderr) {
                (Some(mean), Some(stderr)) => Some(MeanStderr {
                    mean,
                    stderr,
                    count: replicas,
                }),
                _ => None,
            })
        };
        rows.push(SummaryRow {
            model: ModelKind::from_str(cols[0]).map_err(|msg| ExperimentError::Csv {
                line: lineno,
                msg,
            })?,
            a: parse_field(cols[1], lineno, "a")?,
            gamma: parse_field(cols[2], lineno, "gamma")?,
            replicas,
            z_lm: pair(4, 5)?,
            delta_z: pair(6, 7)?,
            v_lm: pair(8, 9)?,
            delta_v: pair(10, 11)?,
            diameter: pair(12, 13)?,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny_config() -> ExperimentConfig {
        ExperimentConfig {
            model: ModelKind::Pa,
            n: 50,
            m: 2,
            a_grid: vec![1.0],
            replicas: 2,
            master_seed: 7,
            mode: LmMode::ClosureConsistent,
            measure: MeasureFlags::default(),
        }
    }

    fn science_fields(r: &RunRecord) -> impl PartialEq + std::fmt::Debug {
        (
            r.model,
            r.a.to_bits(),
            r.replica,
            r.seed,
            r.z_lm_frac.map(f64::to_bits),
            r.delta_z_frac.map(f64::to_bits),
            r.v_lm_frac.map(f64::to_bits),
            r.delta_v_frac.map(f64::to_bits),
            r.diameter,
        )
    }

    #[test]
    fn config_json_round_trip_with_defaults() {
        let json = r#"{
            "model": "pa",
            "n": 100,
            "m": 2,
            "a_grid": [0.5, 1.0],
            "replicas": 3,
            "master_seed": 42
        }"#;
        let cfg: ExperimentConfig = serde_json::from_str(json).unwrap();
        assert_eq!(cfg.mode, LmMode::ClosureConsistent);
        assert!(cfg.measure.zf && cfg.measure.vc && cfg.measure.diameter);
        assert!(!cfg.measure.gamma);
        let text = serde_json::to_string(&cfg).unwrap();
        let back: ExperimentConfig = serde_json::from_str(&text).unwrap();
        assert_eq!(cfg, back);
    }

    #[test]
    fn config_validation_rejects_nonsense() {
        let mut cfg = tiny_config();
        cfg.replicas = 0;
        assert!(cfg.validate().is_err());
        let mut cfg = tiny_config();
        cfg.a_grid.clear();
        assert!(cfg.validate().is_err());
        let mut cfg = tiny_config();
        cfg.a_grid = vec![-0.5];
        assert!(cfg.validate().is_err());
        let mut cfg = tiny_config();
        cfg.n = 2;
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn run_produces_grid_times_replicas_records() {
        let records = run_experiment(&tiny_config()).unwrap();
        assert_eq!(records.len(), 2);
        for (i, r) in records.iter().enumerate() {
            assert_eq!(r.replica, i);
            assert_eq!(r.gamma_target, 3.0);
            for v in [r.z_lm_frac, r.delta_z_frac, r.v_lm_frac, r.delta_v_frac] {
                let v = v.unwrap();
                assert!((0.0..=1.0).contains(&v));
            }
            assert!(r.diameter.unwrap() >= 1);
        }
        assert_ne!(records[0].seed, records[1].seed);
    }

    #[test]
    fn run_is_deterministic_and_order_independent_of_workers() {
        let cfg = ExperimentConfig {
            a_grid: vec![0.5, 1.0],
            replicas: 3,
            ..tiny_config()
        };
        let one = run_experiment_with_workers(&cfg, 1).unwrap();
        let four = run_experiment_with_workers(&cfg, 4).unwrap();
        let again = run_experiment(&cfg).unwrap();
        assert_eq!(one.len(), 6);
        for ((a, b), c) in one.iter().zip(&four).zip(&again) {
            assert_eq!(science_fields(a), science_fields(b));
            assert_eq!(science_fields(a), science_fields(c));
        }
        // canonical order: grid-major, replica-minor
        let order: Vec<(f64, usize)> = one.iter().map(|r| (r.a, r.replica)).collect();
        assert_eq!(
            order,
            vec![
                (0.5, 0),
                (0.5, 1),
                (0.5, 2),
                (1.0, 0),
                (1.0, 1),
                (1.0, 2)
            ]
        );
    }

    fn record_with(a: f64, replica: usize, z: f64) -> RunRecord {
        RunRecord {
            model: ModelKind::Pa,
            a,
            gamma_target: 2.0 + a,
            replica,
            seed: replica as u64,
            z_lm_frac: Some(z),
            delta_z_frac: Some(0.0),
            v_lm_frac: Some(0.5),
            delta_v_frac: Some(0.0),
            diameter: Some(7),
            gamma_hat: None,
            walltime_ms: 1,
        }
    }

    #[test]
    fn aggregate_matches_hand_arithmetic() {
        let rows = aggregate(&[record_with(1.0, 0, 0.4), record_with(1.0, 1, 0.6)]).unwrap();
        assert_eq!(rows.len(), 1);
        let z = rows[0].z_lm.unwrap();
        assert!((z.mean - 0.5).abs() < 1e-12);
        assert!((z.stderr - 0.1).abs() < 1e-12);
        assert_eq!(rows[0].replicas, 2);

        let rows = aggregate(&[record_with(1.0, 0, 0.4), record_with(1.0, 1, 0.4)]).unwrap();
        assert_eq!(rows[0].z_lm.unwrap().stderr, 0.0);

        let rows = aggregate(&[record_with(0.5, 0, 0.4), record_with(1.0, 0, 0.6)]).unwrap();
        assert_eq!(rows.len(), 2);

        assert!(aggregate(&[]).is_err());
    }

    #[test]
    fn fit_summary_scalings_on_synthetic_lines() {
        let rows: Vec<SummaryRow> = [0.05, 0.2, 0.4, 0.6]
            .iter()
            .map(|&a| {
                let mut row = aggregate(&[record_with(a, 0, 1.0 - 0.4 * a)])
                    .unwrap()
                    .remove(0);
                row.v_lm = Some(MeanStderr {
                    mean: 0.25 * a,
                    stderr: 0.0,
                    count: 1,
                });
                row
            })
            .collect();
        let (fz, fv) = fit_summary_scalings(&rows, (2.0, 2.6)).unwrap();
        assert!((fz.slope - 0.4).abs() < 1e-9);
        assert!((fv.slope - 0.25).abs() < 1e-9);
        assert!(fit_summary_scalings(&rows, (9.0, 10.0)).is_err());
    }

    #[test]
    fn records_csv_round_trip() {
        assert_eq!(records_to_csv(&[]).lines().count(), 1);
        let records = vec![record_with(0.05, 0, 0.973456), {
            let mut r = record_with(0.05, 1, 0.5);
            r.diameter = None;
            r
        }];
        let csv = records_to_csv(&records);
        assert_eq!(csv.lines().count(), 3);
        assert!(csv.starts_with(RECORDS_HEADER));
        assert!(csv.contains("0.973456"));
        assert!(csv.contains(",NA,"));
        let back = parse_records_csv(&csv).unwrap();
        assert_eq!(back.len(), 2);
        assert_eq!(back[0].z_lm_frac, Some(0.973456));
        assert_eq!(back[1].diameter, None);
        assert_eq!(back[0].a, 0.05);
    }

    #[test]
    fn summary_csv_round_trip() {
        let records = run_experiment(&tiny_config()).unwrap();
        let rows = aggregate(&records).unwrap();
        let csv = summary_to_csv(&rows);
        assert!(csv.starts_with(SUMMARY_HEADER));
        let back = parse_summary_csv(&csv).unwrap();
        assert_eq!(back.len(), rows.len());
        let (a, b) = (rows[0].z_lm.unwrap(), back[0].z_lm.unwrap());
        assert!((a.mean - b.mean).abs() < 1e-6);
        assert!((a.stderr - b.stderr).abs() < 1e-6);
    }

    #[test]
    fn csv_rejects_corrupt_input() {
        assert!(parse_records_csv("nonsense\n").is_err());
        let mut csv = records_to_csv(&[record_with(1.0, 0, 0.5)]);
        csv.push_str("pa,oops\n");
        assert!(parse_records_csv(&csv).is_err());
    }
}
