//! Sorted-key lookup with per-dataset algorithm selection and result caching.
//!
//! A [`SortedDataset`] is registered with an [`Engine`], which measures the
//! spread of its key gaps and picks binary or interpolation search for it.
//! Queries go through a bounded LRU cache keyed by dataset fingerprint and
//! target, so repeated lookups cost no probes.
//!
//! ```
//! use adaptive_search::{Engine, EngineConfig, SortedDataset};
//!
//! let mut engine = Engine::new(EngineConfig::default()).unwrap();
//! let reg = engine.register(SortedDataset::new((0..1000).map(|i| i * 3).collect()).unwrap());
//! let hit = engine.adaptive_search(&reg, 300);
//! assert_eq!(hit.outcome.index, Some(100));
//! assert!(engine.adaptive_search(&reg, 300).cache_hit);
//! ```

pub mod cache;
pub mod dataset;
pub mod engine;
pub mod search;
pub mod selector;

pub use cache::{CacheKey, CacheStats, LruCache, ResultCache};
pub use dataset::{fingerprint, load_dataset, DatasetError, DatasetId, SortedDataset};
pub use engine::{Engine, EngineConfig, EngineReport, QueryResult, RegisteredDataset, RegistryRow, Route};
pub use search::{binary_search, interpolation_search, linear_search, Algorithm, ProbeTrace, SearchOutcome};
pub use selector::{
    choose_algorithm, compute_stats, AlgorithmChoice, ChoiceReason, ConfigError, DistributionStats, SelectorConfig,
};
