//! One benchmark measurement: a dataset, a query stream and one search
//! strategy.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use adaptive_search::{linear_search, Algorithm, Engine, EngineConfig, SortedDataset};
use rand::seq::index;

use crate::distribution::{generate, DistributionSpec};
use crate::error::{BenchError, Result};
use crate::seed::{self, stream};
use crate::workload::{generate_queries, QuerySpec};

/// Strategy measured by a trial. `Adaptive` lets the selector decide; the
/// others force one kernel through the same engine path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TrialAlgorithm {
    Binary,
    Interpolation,
    Linear,
    Adaptive,
}

impl TrialAlgorithm {
    pub const ALL: [TrialAlgorithm; 4] = [
        TrialAlgorithm::Binary,
        TrialAlgorithm::Interpolation,
        TrialAlgorithm::Linear,
        TrialAlgorithm::Adaptive,
    ];

    pub fn forced_kernel(self) -> Option<Algorithm> {
        match self {
            TrialAlgorithm::Binary => Some(Algorithm::Binary),
            TrialAlgorithm::Interpolation => Some(Algorithm::Interpolation),
            TrialAlgorithm::Linear => Some(Algorithm::Linear),
            TrialAlgorithm::Adaptive => None,
        }
    }

    pub fn from_override(kernel: Option<Algorithm>) -> Self {
        match kernel {
            Some(Algorithm::Binary) => TrialAlgorithm::Binary,
            Some(Algorithm::Interpolation) => TrialAlgorithm::Interpolation,
            Some(Algorithm::Linear) => TrialAlgorithm::Linear,
            None => TrialAlgorithm::Adaptive,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TrialAlgorithm::Binary => "binary",
            TrialAlgorithm::Interpolation => "interpolation",
            TrialAlgorithm::Linear => "linear",
            TrialAlgorithm::Adaptive => "adaptive",
        }
    }
}

impl fmt::Display for TrialAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TrialAlgorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TrialAlgorithm::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown algorithm {s:?}"))
    }
}

/// Seeds of the dataset and the query stream, rendered `dataset:queries`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Seeds {
    pub dataset: u64,
    pub queries: u64,
}

impl fmt::Display for Seeds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.dataset, self.queries)
    }
}

impl FromStr for Seeds {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (d, q) = s.split_once(':').ok_or_else(|| format!("bad seed pair {s:?}"))?;
        Ok(Seeds {
            dataset: d.parse().map_err(|_| format!("bad dataset seed {d:?}"))?,
            queries: q.parse().map_err(|_| format!("bad query seed {q:?}"))?,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrialRecord {
    pub algorithm: TrialAlgorithm,
    pub distribution: String,
    pub n: usize,
    pub queries: usize,
    pub found_rate: f64,
    /// Mean probes per answer. A cached answer counts the probes of the
    /// search that produced it, so this measures the kernel, not the cache.
    pub mean_probes: f64,
    /// Nearest-rank 99th percentile of per-query probes.
    pub p99_probes: usize,
    /// Only recorded for `Adaptive`.
    pub cache_hit_rate: Option<f64>,
    pub wall_time_ns: u64,
    pub seed: Seeds,
}

/// Per-query measurements from one pass, before aggregation.
#[derive(Debug, Clone, Default)]
pub struct TrialSamples {
    pub probes: Vec<usize>,
    pub kernel_probes: u64,
    pub found: usize,
}

/// Nearest-rank quantile of `sorted` (ascending). 0 when empty.
pub fn nearest_rank(sorted: &[usize], q: f64) -> usize {
    if sorted.is_empty() {
        return 0;
    }
    let rank = (q * sorted.len() as f64).ceil() as usize;
    sorted[rank.clamp(1, sorted.len()) - 1]
}

/// Generates the dataset and queries, then measures them.
pub fn run_trial(engine_cfg: &EngineConfig, spec: &DistributionSpec, query_spec: &QuerySpec) -> Result<TrialRecord> {
    let ds = generate(spec)?;
    let targets = generate_queries(&ds, query_spec)?;
    let seeds = Seeds {
        dataset: spec.seed,
        queries: query_spec.seed,
    };
    run_trial_on(engine_cfg, &ds, &spec.kind.to_string(), &targets, seeds).map(|(rec, _)| rec)
}

/// Runs `targets` through a fresh engine over `ds` on the current thread.
///
/// Found-ness of a random 1% of queries (at least one) is re-checked with a
/// linear scan; a disagreement is an [`BenchError::Invariant`].
pub fn run_trial_on(
    engine_cfg: &EngineConfig,
    ds: &SortedDataset,
    distribution: &str,
    targets: &[i64],
    seeds: Seeds,
) -> Result<(TrialRecord, TrialSamples)> {
    let mut engine = Engine::new(*engine_cfg)?;
    let reg = engine.register(ds.clone());

    let mut samples = TrialSamples {
        probes: Vec::with_capacity(targets.len()),
        ..TrialSamples::default()
    };
    let mut found = Vec::with_capacity(targets.len());
    let start = Instant::now();
    for &t in targets {
        let r = engine.adaptive_search(&reg, t);
        samples.probes.push(r.outcome.trace.probes());
        samples.kernel_probes += r.kernel_probes() as u64;
        found.push(r.outcome.index);
    }
    let wall_time_ns = start.elapsed().as_nanos() as u64;

    spot_check(ds, targets, &found, seeds)?;

    samples.found = found.iter().filter(|f| f.is_some()).count();
    let q = targets.len();
    let mean_probes = if q == 0 {
        0.0
    } else {
        samples.probes.iter().sum::<usize>() as f64 / q as f64
    };
    let mut sorted = samples.probes.clone();
    sorted.sort_unstable();
    let algorithm = TrialAlgorithm::from_override(engine_cfg.override_algorithm);
    let record = TrialRecord {
        algorithm,
        distribution: distribution.to_owned(),
        n: ds.len(),
        queries: q,
        found_rate: if q == 0 { 0.0 } else { samples.found as f64 / q as f64 },
        mean_probes,
        p99_probes: nearest_rank(&sorted, 0.99),
        cache_hit_rate: (algorithm == TrialAlgorithm::Adaptive).then(|| engine.cache_stats().hit_rate()),
        wall_time_ns,
        seed: seeds,
    };
    Ok((record, samples))
}

fn spot_check(ds: &SortedDataset, targets: &[i64], found: &[Option<usize>], seeds: Seeds) -> Result<()> {
    if targets.is_empty() {
        return Ok(());
    }
    let amount = targets.len().div_ceil(100);
    let mut rng = seed::rng(seed::derive_seed(seeds.queries, &[stream::SPOT_CHECK]));
    for i in index::sample(&mut rng, targets.len(), amount) {
        let oracle = linear_search(ds.values(), targets[i]);
        let ok = match found[i] {
            Some(pos) => oracle.found() && ds.values()[pos] == targets[i],
            None => !oracle.found(),
        };
        if !ok {
            return Err(BenchError::Invariant(format!(
                "query {i} (target {}) returned {:?}, linear scan says {:?}",
                targets[i], found[i], oracle.index
            )));
        }
    }
    Ok(())
}
