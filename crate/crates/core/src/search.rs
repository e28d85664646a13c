//! Instrumented search kernels.
//!
//! A probe is one read of a dataset element compared against the target.
//! Every kernel records the indices it probes, in order, so that callers can
//! count and replay the access pattern.

use std::fmt;
use std::str::FromStr;

use smallvec::SmallVec;

use crate::dataset::SortedDataset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Binary,
    Interpolation,
    Linear,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Binary, Algorithm::Interpolation, Algorithm::Linear];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Binary => "binary",
            Algorithm::Interpolation => "interpolation",
            Algorithm::Linear => "linear",
        }
    }

    /// Runs this kernel over `ds`.
    pub fn search(self, ds: &SortedDataset, target: i64) -> SearchOutcome {
        match self {
            Algorithm::Binary => binary_search(ds, target),
            Algorithm::Interpolation => interpolation_search(ds, target),
            Algorithm::Linear => linear_search(ds.values(), target),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownAlgorithm(pub String);

impl fmt::Display for UnknownAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown algorithm {:?} (expected binary, interpolation or linear)",
            self.0
        )
    }
}

impl std::error::Error for UnknownAlgorithm {}

impl FromStr for Algorithm {
    type Err = UnknownAlgorithm;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "binary" => Ok(Algorithm::Binary),
            "interpolation" => Ok(Algorithm::Interpolation),
            "linear" => Ok(Algorithm::Linear),
            _ => Err(UnknownAlgorithm(s.to_owned())),
        }
    }
}

/// Probe paths on small or well-behaved inputs stay inline.
type ProbePath = SmallVec<[usize; 6]>;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Visited {
    Indices(ProbePath),
    /// `0..len`, as produced by a front-to-back scan.
    Prefix(usize),
}

/// Probe-level record of one search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeTrace {
    algorithm: Algorithm,
    visited: Visited,
}

impl ProbeTrace {
    fn indices(algorithm: Algorithm) -> Self {
        Self {
            algorithm,
            visited: Visited::Indices(ProbePath::new()),
        }
    }

    fn record(&mut self, index: usize) {
        if let Visited::Indices(v) = &mut self.visited {
            v.push(index);
        }
    }

    pub fn algorithm(&self) -> Algorithm {
        self.algorithm
    }

    pub fn probes(&self) -> usize {
        match &self.visited {
            Visited::Indices(v) => v.len(),
            Visited::Prefix(n) => *n,
        }
    }

    /// Probed indices in probe order.
    pub fn visited(&self) -> impl Iterator<Item = usize> + '_ {
        let (slice, prefix) = match &self.visited {
            Visited::Indices(v) => (v.as_slice(), 0),
            Visited::Prefix(n) => (&[][..], *n),
        };
        slice.iter().copied().chain(0..prefix)
    }
}

/// Result of a search: the matching position, if any, plus its trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub index: Option<usize>,
    pub trace: ProbeTrace,
}

impl SearchOutcome {
    pub fn found(&self) -> bool {
        self.index.is_some()
    }
}

/// Iterative midpoint search. At most `floor(log2 n) + 1` probes.
pub fn binary_search(ds: &SortedDataset, target: i64) -> SearchOutcome {
    let values = ds.values();
    let mut trace = ProbeTrace::indices(Algorithm::Binary);
    // Half-open window [lo, hi).
    let (mut lo, mut hi) = (0usize, values.len());
    while lo < hi {
        let mid = lo + (hi - 1 - lo) / 2;
        trace.record(mid);
        let v = values[mid];
        if v == target {
            return SearchOutcome {
                index: Some(mid),
                trace,
            };
        }
        if v < target {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    SearchOutcome { index: None, trace }
}

/// Interpolation search.
///
/// The loop only runs while `values[low] <= target <= values[high]`; the
/// endpoint reads in that guard are not counted as probes. The position
/// estimate is evaluated in 128-bit arithmetic so wide key ranges cannot
/// overflow, and a window whose endpoints are equal is resolved directly
/// instead of dividing by zero.
pub fn interpolation_search(ds: &SortedDataset, target: i64) -> SearchOutcome {
    let values = ds.values();
    let mut trace = ProbeTrace::indices(Algorithm::Interpolation);
    if values.is_empty() {
        return SearchOutcome { index: None, trace };
    }
    let (mut low, mut high) = (0usize, values.len() - 1);
    while low <= high && values[low] <= target && target <= values[high] {
        let (lo_val, hi_val) = (values[low], values[high]);
        if lo_val == hi_val {
            // Guard established lo_val <= target <= hi_val, so this is a hit.
            trace.record(low);
            return SearchOutcome {
                index: Some(low),
                trace,
            };
        }
        let span = (high - low) as i128;
        let offset = span * (target as i128 - lo_val as i128) / (hi_val as i128 - lo_val as i128);
        let pos = low + offset as usize;
        trace.record(pos);
        let v = values[pos];
        if v == target {
            return SearchOutcome {
                index: Some(pos),
                trace,
            };
        }
        if v < target {
            low = pos + 1;
        } else if pos == 0 {
            break;
        } else {
            high = pos - 1;
        }
    }
    SearchOutcome { index: None, trace }
}

/// Front-to-back scan. Works on any sequence; returns the first occurrence.
pub fn linear_search(values: &[i64], target: i64) -> SearchOutcome {
    let index = values.iter().position(|&v| v == target);
    let probes = index.map_or(values.len(), |i| i + 1);
    SearchOutcome {
        index,
        trace: ProbeTrace {
            algorithm: Algorithm::Linear,
            visited: Visited::Prefix(probes),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(values: &[i64]) -> SortedDataset {
        SortedDataset::new(values.to_vec()).unwrap()
    }

    #[test]
    fn binary_listing_example() {
        let d = ds(&[2, 3, 4, 10, 40]);
        let out = binary_search(&d, 10);
        assert_eq!(out.index, Some(3));
        assert_eq!(out.trace.probes(), 2);
        assert_eq!(out.trace.visited().collect::<Vec<_>>(), vec![2, 3]);
        assert_eq!(out.trace.algorithm(), Algorithm::Binary);

        assert_eq!(binary_search(&d, 7).index, None);
    }

    #[test]
    fn binary_singleton_and_empty() {
        let out = binary_search(&ds(&[5]), 5);
        assert_eq!(out.index, Some(0));
        assert_eq!(out.trace.probes(), 1);
        let out = binary_search(&ds(&[]), 5);
        assert_eq!(out.index, None);
        assert_eq!(out.trace.probes(), 0);
    }

    #[test]
    fn interpolation_listing_examples() {
        let out = interpolation_search(&ds(&[1, 2, 3, 4, 5, 6, 7, 8, 9]), 8);
        assert_eq!(out.index, Some(7));
        assert_eq!(out.trace.probes(), 1);

        let odds: Vec<i64> = (0..11).map(|i| 1 + 2 * i).collect();
        let out = interpolation_search(&ds(&odds), 13);
        assert_eq!(out.index, Some(6));
        assert_eq!(out.trace.probes(), 1);
    }

    #[test]
    fn interpolation_equal_endpoints() {
        let d = ds(&[10, 10, 10]);
        let out = interpolation_search(&d, 10);
        assert!(matches!(out.index, Some(0..=2)));
        assert_eq!(interpolation_search(&d, 9).index, None);
        assert_eq!(interpolation_search(&d, 11).index, None);
        assert_eq!(interpolation_search(&d, 11).trace.probes(), 0);
    }

    #[test]
    fn interpolation_extreme_keys_do_not_overflow() {
        let d = ds(&[i64::MIN, -1, 0, 1, i64::MAX]);
        for (i, &v) in d.values().iter().enumerate() {
            assert_eq!(interpolation_search(&d, v).index, Some(i));
        }
        assert_eq!(interpolation_search(&d, 2).index, None);
        assert_eq!(interpolation_search(&d, i64::MIN + 1).index, None);
    }

    #[test]
    fn interpolation_out_of_range_targets_exit_immediately() {
        let d = ds(&[3, 5, 8]);
        assert_eq!(interpolation_search(&d, 2).trace.probes(), 0);
        assert_eq!(interpolation_search(&d, 9).trace.probes(), 0);
        assert_eq!(interpolation_search(&ds(&[]), 0).trace.probes(), 0);
    }

    #[test]
    fn linear_examples() {
        let out = linear_search(&[2, 3, 4, 10, 40], 40);
        assert_eq!(out.index, Some(4));
        assert_eq!(out.trace.probes(), 5);
        assert_eq!(out.trace.visited().collect::<Vec<_>>(), vec![0, 1, 2, 3, 4]);

        let out = linear_search(&[], 7);
        assert_eq!(out.index, None);
        assert_eq!(out.trace.probes(), 0);

        assert_eq!(linear_search(&[1, 1, 2], 1).index, Some(0));
        assert_eq!(linear_search(&[1, 1, 2], 3).trace.probes(), 3);
    }

    #[test]
    fn algorithm_names_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.name().parse::<Algorithm>().unwrap(), a);
        }
        assert!("galloping".parse::<Algorithm>().is_err());
    }
}
