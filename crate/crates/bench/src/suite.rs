//! Paired benchmark grid.
//!
//! Cells are (distribution, size). Within a cell every algorithm sees the
//! same dataset and the same query stream, so probe differences come from
//! the algorithm alone.

use adaptive_search::EngineConfig;

use crate::distribution::{generate, DistributionKind, DistributionSpec};
use crate::error::{BenchError, Result};
use crate::seed::{derive_seed, stream};
use crate::trial::{run_trial_on, Seeds, TrialAlgorithm, TrialRecord};
use crate::workload::{generate_queries, QueryMode, QuerySpec};

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub distributions: Vec<DistributionKind>,
    pub sizes: Vec<usize>,
    pub algorithms: Vec<TrialAlgorithm>,
    pub queries: usize,
    pub query_mode: QueryMode,
    /// `override_algorithm` is ignored; each trial sets its own.
    pub engine: EngineConfig,
}

impl SuiteConfig {
    pub const DEFAULT_SIZES: [usize; 4] = [1 << 10, 1 << 14, 1 << 18, 1 << 20];
    pub const DEFAULT_QUERIES: usize = 10_000;

    pub fn with_seed(seed: u64) -> Self {
        Self {
            seed,
            distributions: vec![
                DistributionKind::uniform_default(),
                DistributionKind::exponential_default(),
            ],
            sizes: Self::DEFAULT_SIZES.to_vec(),
            algorithms: TrialAlgorithm::ALL.to_vec(),
            queries: Self::DEFAULT_QUERIES,
            query_mode: QueryMode::MembersOnly,
            engine: EngineConfig::default(),
        }
    }

    /// Seeds for the cell at (`dist_index`, `size_index`).
    pub fn cell_seeds(&self, dist_index: usize, size_index: usize) -> Seeds {
        let path = |s| [s, dist_index as u64, size_index as u64];
        Seeds {
            dataset: derive_seed(self.seed, &path(stream::DATASET)),
            queries: derive_seed(self.seed, &path(stream::QUERIES)),
        }
    }
}

/// Runs every cell, returning one record per (cell, algorithm) in grid order.
/// Stops at the first failing cell.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Vec<TrialRecord>> {
    let mut records = Vec::with_capacity(cfg.distributions.len() * cfg.sizes.len() * cfg.algorithms.len());
    for (di, kind) in cfg.distributions.iter().enumerate() {
        for (si, &n) in cfg.sizes.iter().enumerate() {
            let cell = format!("{kind} n={n}");
            let wrap = |e: BenchError| BenchError::Cell {
                cell: cell.clone(),
                source: Box::new(e),
            };
            let seeds = cfg.cell_seeds(di, si);
            let spec = DistributionSpec {
                kind: *kind,
                n,
                seed: seeds.dataset,
            };
            let ds = generate(&spec).map_err(wrap)?;
            let query_spec = QuerySpec {
                count: cfg.queries,
                mode: cfg.query_mode,
                seed: seeds.queries,
            };
            let targets = generate_queries(&ds, &query_spec).map_err(wrap)?;
            let distribution = kind.to_string();
            for &algorithm in &cfg.algorithms {
                let engine = EngineConfig {
                    override_algorithm: algorithm.forced_kernel(),
                    ..cfg.engine
                };
                let (record, _) = run_trial_on(&engine, &ds, &distribution, &targets, seeds).map_err(wrap)?;
                records.push(record);
            }
        }
    }
    Ok(records)
}
