//! Seeded synthetic key distributions.

use std::fmt;

use adaptive_search::SortedDataset;
use rand::Rng;
use rand_distr::{Distribution, Exp1, Normal, Zipf};

use crate::error::{BenchError, Result};
use crate::seed;

/// Range cluster centres are drawn from.
pub const CLUSTER_CENTER_RANGE: i64 = 1 << 40;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DistributionKind {
    /// iid uniform integers in `lo..=hi`.
    Uniform { lo: i64, hi: i64 },
    /// Points scattered around `clusters` centres with normal spread `spread`.
    Clustered { clusters: usize, spread: f64 },
    /// iid `floor(scale * Exp(1))`. Once sorted these are the cumulative sums
    /// of independent exponential gaps whose scale grows toward the tail.
    Exponential { scale: f64 },
    /// Zipf-weighted draws from `1..=universe`.
    Zipf { exponent: f64, universe: u64 },
}

impl DistributionKind {
    pub const UNIFORM_LO: i64 = 0;
    pub const UNIFORM_HI: i64 = 1 << 32;
    pub const CLUSTERS: usize = 16;
    pub const CLUSTER_SPREAD: f64 = 1.0e6;
    pub const EXPONENTIAL_SCALE: f64 = 1.0e12;
    pub const ZIPF_EXPONENT: f64 = 1.2;
    pub const ZIPF_UNIVERSE: u64 = 1_000_000;

    pub fn uniform_default() -> Self {
        DistributionKind::Uniform {
            lo: Self::UNIFORM_LO,
            hi: Self::UNIFORM_HI,
        }
    }

    pub fn clustered_default() -> Self {
        DistributionKind::Clustered {
            clusters: Self::CLUSTERS,
            spread: Self::CLUSTER_SPREAD,
        }
    }

    pub fn exponential_default() -> Self {
        DistributionKind::Exponential {
            scale: Self::EXPONENTIAL_SCALE,
        }
    }

    pub fn zipf_default() -> Self {
        DistributionKind::Zipf {
            exponent: Self::ZIPF_EXPONENT,
            universe: Self::ZIPF_UNIVERSE,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            DistributionKind::Uniform { .. } => "uniform",
            DistributionKind::Clustered { .. } => "clustered",
            DistributionKind::Exponential { .. } => "exponential",
            DistributionKind::Zipf { .. } => "zipf",
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(BenchError::InvalidSpec(msg));
        match *self {
            DistributionKind::Uniform { lo, hi } if lo > hi => bad(format!("uniform lo {lo} > hi {hi}")),
            DistributionKind::Clustered { clusters: 0, .. } => bad("clustered needs >= 1 cluster".into()),
            DistributionKind::Clustered { spread, .. } if !(spread.is_finite() && spread >= 0.0) => {
                bad(format!("clustered spread must be finite and >= 0, got {spread}"))
            }
            DistributionKind::Exponential { scale } if !(scale.is_finite() && scale > 0.0) => {
                bad(format!("exponential scale must be finite and > 0, got {scale}"))
            }
            DistributionKind::Zipf { exponent, .. } if !(exponent.is_finite() && exponent > 0.0) => {
                bad(format!("zipf exponent must be finite and > 0, got {exponent}"))
            }
            DistributionKind::Zipf { universe: 0, .. } => bad("zipf universe must be >= 1".into()),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for DistributionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DistributionKind::Uniform { lo, hi } => write!(f, "uniform[lo={lo} hi={hi}]"),
            DistributionKind::Clustered { clusters, spread } => write!(f, "clustered[c={clusters} s={spread}]"),
            DistributionKind::Exponential { scale } => write!(f, "exponential[scale={scale}]"),
            DistributionKind::Zipf { exponent, universe } => write!(f, "zipf[s={exponent} m={universe}]"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistributionSpec {
    pub kind: DistributionKind,
    pub n: usize,
    pub seed: u64,
}

fn to_key(x: f64) -> i64 {
    // `as` saturates at the i64 bounds.
    x.floor() as i64
}

/// Generates the dataset described by `spec`. Deterministic in the spec.
pub fn generate(spec: &DistributionSpec) -> Result<SortedDataset> {
    spec.kind.validate()?;
    let mut rng = seed::rng(spec.seed);
    let n = spec.n;
    let values: Vec<i64> = match spec.kind {
        DistributionKind::Uniform { lo, hi } => (0..n).map(|_| rng.random_range(lo..=hi)).collect(),
        DistributionKind::Clustered { clusters, spread } => {
            let centers: Vec<i64> = (0..clusters)
                .map(|_| rng.random_range(0..=CLUSTER_CENTER_RANGE))
                .collect();
            let noise = Normal::new(0.0, spread).map_err(|e| BenchError::InvalidSpec(e.to_string()))?;
            (0..n)
                .map(|_| {
                    let c = centers[rng.random_range(0..clusters)];
                    c.saturating_add(to_key(noise.sample(&mut rng).round()))
                })
                .collect()
        }
        DistributionKind::Exponential { scale } => (0..n)
            .map(|_| {
                let e: f64 = Exp1.sample(&mut rng);
                to_key(scale * e)
            })
            .collect(),
        DistributionKind::Zipf { exponent, universe } => {
            let zipf = Zipf::new(universe as f64, exponent).map_err(|e| BenchError::InvalidSpec(e.to_string()))?;
            (0..n).map(|_| to_key(zipf.sample(&mut rng))).collect()
        }
    };
    Ok(SortedDataset::from_unsorted(values))
}
