//! Gap statistics and the binary/interpolation decision.
//!
//! A dataset is summarised by the gaps between consecutive keys. The
//! coefficient of variation of those gaps (`gap_std / gap_mean`) is the
//! uniformity score: 0 for an arithmetic progression, around 1 for iid
//! uniform keys, and much larger for clustered or geometric data. It is
//! unchanged by `x -> a*x + b` for `a > 0`, so the decision does not depend
//! on key units.

use thiserror::Error;

use crate::dataset::SortedDataset;
use crate::search::Algorithm;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("tau must be a finite number > 0, got {0}")]
    Tau(f64),
    #[error("min_interp_len must be >= 2, got {0}")]
    MinInterpLen(usize),
    #[error("max_gap_samples must be >= 2, got {0}")]
    MaxGapSamples(usize),
    #[error("cache capacity must be >= 1")]
    CacheCapacity,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SelectorConfig {
    /// Largest uniformity score that still selects interpolation.
    pub tau: f64,
    /// Datasets shorter than this always use binary search.
    pub min_interp_len: usize,
    /// Upper bound on gaps examined by [`compute_stats`].
    pub max_gap_samples: usize,
}

impl SelectorConfig {
    pub const DEFAULT_TAU: f64 = 1.5;
    pub const DEFAULT_MIN_INTERP_LEN: usize = 16;
    pub const DEFAULT_MAX_GAP_SAMPLES: usize = 4096;

    pub fn new(tau: f64, min_interp_len: usize, max_gap_samples: usize) -> Result<Self, ConfigError> {
        let cfg = Self {
            tau,
            min_interp_len,
            max_gap_samples,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(self.tau.is_finite() && self.tau > 0.0) {
            return Err(ConfigError::Tau(self.tau));
        }
        if self.min_interp_len < 2 {
            return Err(ConfigError::MinInterpLen(self.min_interp_len));
        }
        if self.max_gap_samples < 2 {
            return Err(ConfigError::MaxGapSamples(self.max_gap_samples));
        }
        Ok(())
    }
}

impl Default for SelectorConfig {
    fn default() -> Self {
        Self {
            tau: Self::DEFAULT_TAU,
            min_interp_len: Self::DEFAULT_MIN_INTERP_LEN,
            max_gap_samples: Self::DEFAULT_MAX_GAP_SAMPLES,
        }
    }
}

/// Gap statistics of a dataset.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistributionStats {
    pub n: usize,
    /// 0 for an empty dataset.
    pub min_value: i64,
    /// 0 for an empty dataset.
    pub max_value: i64,
    pub gap_mean: f64,
    /// Population standard deviation of the examined gaps.
    pub gap_std: f64,
    /// `gap_std / gap_mean`, or 0 when `gap_mean == 0`.
    pub uniformity_score: f64,
    /// Whether only a strided subset of gaps was examined.
    pub sampled: bool,
}

impl DistributionStats {
    pub fn is_degenerate(&self) -> bool {
        self.gap_mean == 0.0
    }
}

/// Index of the `i`-th sampled gap when `gap_count` gaps are thinned to
/// `samples`.
fn sampled_gap_index(i: usize, gap_count: usize, samples: usize) -> usize {
    ((i as u128 * gap_count as u128) / samples as u128) as usize
}

pub fn compute_stats(ds: &SortedDataset, cfg: &SelectorConfig) -> DistributionStats {
    let values = ds.values();
    let n = values.len();
    let (min_value, max_value) = (ds.first().unwrap_or(0), ds.last().unwrap_or(0));
    if n < 2 {
        return DistributionStats {
            n,
            min_value,
            max_value,
            gap_mean: 0.0,
            gap_std: 0.0,
            uniformity_score: 0.0,
            sampled: false,
        };
    }

    let gap_count = n - 1;
    let sampled = gap_count > cfg.max_gap_samples;
    let k = if sampled { cfg.max_gap_samples } else { gap_count };
    let gap = |j: usize| values[j + 1] as i128 - values[j] as i128;
    let gap_at = |i: usize| {
        if sampled {
            gap(sampled_gap_index(i, gap_count, k))
        } else {
            gap(i)
        }
    };

    // Deviations are taken exactly in integers as k*g - sum, so the score is
    // exactly zero iff every examined gap is equal.
    let sum: i128 = (0..k).map(gap_at).sum();
    let kk = k as i128;
    let sum_sq_dev: f64 = (0..k)
        .map(|i| {
            let d = (kk * gap_at(i) - sum) as f64 / k as f64;
            d * d
        })
        .sum();
    let gap_mean = sum as f64 / k as f64;
    let gap_std = (sum_sq_dev / k as f64).sqrt();
    let uniformity_score = if sum == 0 { 0.0 } else { gap_std / gap_mean };

    DistributionStats {
        n,
        min_value,
        max_value,
        gap_mean,
        gap_std,
        uniformity_score,
        sampled,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChoiceReason {
    TooSmall,
    UniformEnough,
    TooIrregular,
    Degenerate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlgorithmChoice {
    pub algorithm: Algorithm,
    pub reason: ChoiceReason,
}

/// Applies the decision table, first match wins:
///
/// | condition                  | choice                      |
/// |----------------------------|-----------------------------|
/// | `n < min_interp_len`       | binary, `TooSmall`          |
/// | `gap_mean == 0`            | binary, `Degenerate`        |
/// | `uniformity_score <= tau`  | interpolation, `UniformEnough` |
/// | otherwise                  | binary, `TooIrregular`      |
pub fn choose_algorithm(stats: &DistributionStats, cfg: &SelectorConfig) -> AlgorithmChoice {
    let (algorithm, reason) = if stats.n < cfg.min_interp_len {
        (Algorithm::Binary, ChoiceReason::TooSmall)
    } else if stats.is_degenerate() {
        (Algorithm::Binary, ChoiceReason::Degenerate)
    } else if stats.uniformity_score <= cfg.tau {
        (Algorithm::Interpolation, ChoiceReason::UniformEnough)
    } else {
        (Algorithm::Binary, ChoiceReason::TooIrregular)
    };
    AlgorithmChoice { algorithm, reason }
}
