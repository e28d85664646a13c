//! Adaptive lookup pipeline.
//!
//! Each query goes cache -> kernel -> cache fill. The kernel for a dataset is
//! chosen once, when the dataset is registered, from its gap statistics.

use std::collections::HashMap;
use std::fmt;

use crate::cache::{CacheKey, CacheStats, ResultCache};
use crate::dataset::{DatasetId, SortedDataset};
use crate::search::{Algorithm, SearchOutcome};
use crate::selector::{
    choose_algorithm, compute_stats, AlgorithmChoice, ConfigError, DistributionStats, SelectorConfig,
};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EngineConfig {
    pub selector: SelectorConfig,
    pub cache_capacity: usize,
    /// Forces one kernel for every dataset. Used for baseline measurements.
    pub override_algorithm: Option<Algorithm>,
}

impl EngineConfig {
    pub const DEFAULT_CACHE_CAPACITY: usize = 1024;

    pub fn validate(&self) -> Result<(), ConfigError> {
        self.selector.validate()?;
        if self.cache_capacity == 0 {
            return Err(ConfigError::CacheCapacity);
        }
        Ok(())
    }
}

impl Default for EngineConfig {
    fn default() -> Self {
        Self {
            selector: SelectorConfig::default(),
            cache_capacity: Self::DEFAULT_CACHE_CAPACITY,
            override_algorithm: None,
        }
    }
}

/// A dataset together with its memoized statistics and kernel choice.
#[derive(Debug, Clone)]
pub struct RegisteredDataset {
    pub dataset: SortedDataset,
    pub stats: DistributionStats,
    pub choice: AlgorithmChoice,
}

/// What served a query.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    Kernel(Algorithm),
    Cache,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Route::Kernel(a) => a.fmt(f),
            Route::Cache => f.write_str("cache"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QueryResult {
    /// On a cache hit this is the stored outcome, original trace included.
    pub outcome: SearchOutcome,
    pub cache_hit: bool,
    pub route: Route,
}

impl QueryResult {
    /// Probes performed while serving this query (0 on a cache hit).
    pub fn kernel_probes(&self) -> usize {
        if self.cache_hit {
            0
        } else {
            self.outcome.trace.probes()
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RegistryRow {
    pub id: DatasetId,
    pub n: usize,
    pub stats: DistributionStats,
    pub choice: AlgorithmChoice,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EngineReport {
    /// One row per distinct registered dataset, in registration order.
    pub datasets: Vec<RegistryRow>,
    pub cache: CacheStats,
}

pub struct Engine {
    config: EngineConfig,
    cache: ResultCache,
    registry: HashMap<DatasetId, RegisteredDataset>,
    order: Vec<DatasetId>,
}

impl Engine {
    pub fn new(config: EngineConfig) -> Result<Self, ConfigError> {
        config.validate()?;
        Ok(Self {
            config,
            cache: ResultCache::new(config.cache_capacity),
            registry: HashMap::new(),
            order: Vec::new(),
        })
    }

    pub fn config(&self) -> &EngineConfig {
        &self.config
    }

    /// Analyses `ds` and memoizes the result. Registering identical content
    /// again returns the memoized entry.
    pub fn register(&mut self, ds: SortedDataset) -> RegisteredDataset {
        if let Some(reg) = self.registry.get(&ds.id()) {
            return reg.clone();
        }
        let stats = compute_stats(&ds, &self.config.selector);
        let choice = choose_algorithm(&stats, &self.config.selector);
        let reg = RegisteredDataset {
            dataset: ds,
            stats,
            choice,
        };
        self.order.push(reg.dataset.id());
        self.registry.insert(reg.dataset.id(), reg.clone());
        reg
    }

    /// Kernel used for `reg` on a cache miss.
    pub fn kernel_for(&self, reg: &RegisteredDataset) -> Algorithm {
        self.config.override_algorithm.unwrap_or(reg.choice.algorithm)
    }

    pub fn adaptive_search(&mut self, reg: &RegisteredDataset, target: i64) -> QueryResult {
        let key = CacheKey {
            dataset: reg.dataset.id(),
            target,
        };
        if let Some(outcome) = self.cache.get(&key) {
            return QueryResult {
                outcome: outcome.clone(),
                cache_hit: true,
                route: Route::Cache,
            };
        }
        let algorithm = self.kernel_for(reg);
        let outcome = algorithm.search(&reg.dataset, target);
        self.cache.put(key, outcome.clone());
        QueryResult {
            outcome,
            cache_hit: false,
            route: Route::Kernel(algorithm),
        }
    }

    pub fn cache_stats(&self) -> CacheStats {
        self.cache.stats()
    }

    pub fn report(&self) -> EngineReport {
        let datasets = self
            .order
            .iter()
            .map(|id| {
                let reg = &self.registry[id];
                RegistryRow {
                    id: *id,
                    n: reg.dataset.len(),
                    stats: reg.stats,
                    choice: reg.choice,
                }
            })
            .collect();
        EngineReport {
            datasets,
            cache: self.cache.stats(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::selector::ChoiceReason;

    fn ds(values: Vec<i64>) -> SortedDataset {
        SortedDataset::new(values).unwrap()
    }

    fn engine() -> Engine {
        Engine::new(EngineConfig::default()).unwrap()
    }

    #[test]
    fn register_choices() {
        let mut e = engine();
        assert_eq!(
            e.register(ds((0..=10_000).collect())).choice.algorithm,
            Algorithm::Interpolation
        );
        assert_eq!(
            e.register(ds((0..=20).map(|i| 1i64 << i).collect())).choice.algorithm,
            Algorithm::Binary
        );
        let small = e.register(ds((0..8).collect()));
        assert_eq!(small.choice.algorithm, Algorithm::Binary);
        assert_eq!(small.choice.reason, ChoiceReason::TooSmall);
    }

    #[test]
    fn listing_query_then_cache_hit() {
        let mut e = engine();
        let reg = e.register(ds((0..11).map(|i| 1 + 2 * i).collect()));
        let first = e.adaptive_search(&reg, 13);
        assert_eq!(first.outcome.index, Some(6));
        assert!(!first.cache_hit);
        assert_eq!(first.route, Route::Kernel(Algorithm::Binary));
        assert!(first.kernel_probes() > 0);

        let again = e.adaptive_search(&reg, 13);
        assert!(again.cache_hit);
        assert_eq!(again.route, Route::Cache);
        assert_eq!(again.outcome, first.outcome);
        assert_eq!(again.kernel_probes(), 0);
    }

    #[test]
    fn uniform_query_uses_interpolation() {
        let mut e = engine();
        let reg = e.register(ds((0..10_000).collect()));
        let r = e.adaptive_search(&reg, 4242);
        assert_eq!(r.outcome.index, Some(4242));
        assert_eq!(r.route, Route::Kernel(Algorithm::Interpolation));
    }

    #[test]
    fn report_counts() {
        let mut e = engine();
        let r = e.report();
        assert!(r.datasets.is_empty());
        assert_eq!(r.cache.hits + r.cache.misses + r.cache.evictions, 0);

        let reg = e.register(ds(vec![1, 2, 3]));
        for _ in 0..100 {
            e.adaptive_search(&reg, 2);
        }
        assert_eq!(e.report().cache.hits, 99);

        e.register(ds(vec![4, 5, 6]));
        e.register(ds(vec![1, 2, 3]));
        assert_eq!(e.report().datasets.len(), 2);
    }

    #[test]
    fn override_forces_kernel() {
        let mut e = Engine::new(EngineConfig {
            override_algorithm: Some(Algorithm::Linear),
            ..EngineConfig::default()
        })
        .unwrap();
        let reg = e.register(ds((0..100).collect()));
        let r = e.adaptive_search(&reg, 40);
        assert_eq!(r.route, Route::Kernel(Algorithm::Linear));
        assert_eq!(r.outcome.trace.probes(), 41);
    }

    #[test]
    fn zero_capacity_rejected() {
        let cfg = EngineConfig {
            cache_capacity: 0,
            ..EngineConfig::default()
        };
        assert_eq!(Engine::new(cfg).err(), Some(ConfigError::CacheCapacity));
    }
}
