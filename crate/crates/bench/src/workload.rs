//! Query streams.

use adaptive_search::SortedDataset;
use rand::Rng;

use crate::error::{BenchError, Result};
use crate::seed;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum QueryMode {
    /// Uniform draws over dataset positions.
    MembersOnly,
    /// Half member draws, half uniform over `min..=max` of the dataset.
    Mixed,
    /// Each query after the first replays a uniformly chosen earlier query
    /// with probability `fraction`; otherwise it is a fresh member draw.
    Repeated { fraction: f64 },
}

impl QueryMode {
    pub fn name(&self) -> String {
        match self {
            QueryMode::MembersOnly => "members".into(),
            QueryMode::Mixed => "mixed".into(),
            QueryMode::Repeated { fraction } => format!("repeated({fraction})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuerySpec {
    pub count: usize,
    pub mode: QueryMode,
    pub seed: u64,
}

impl QuerySpec {
    pub fn validate(&self) -> Result<()> {
        if let QueryMode::Repeated { fraction } = self.mode {
            if !(0.0..=1.0).contains(&fraction) {
                return Err(BenchError::InvalidQuerySpec(format!(
                    "repeat fraction must be within [0, 1], got {fraction}"
                )));
            }
        }
        Ok(())
    }
}

/// Generates the targets for `spec` against `ds`.
pub fn generate_queries(ds: &SortedDataset, spec: &QuerySpec) -> Result<Vec<i64>> {
    spec.validate()?;
    if spec.count == 0 {
        return Ok(Vec::new());
    }
    let values = ds.values();
    if values.is_empty() {
        return Err(BenchError::InvalidQuerySpec(
            "cannot draw queries from an empty dataset".into(),
        ));
    }
    let (lo, hi) = (values[0], values[values.len() - 1]);
    let mut rng = seed::rng(spec.seed);
    let mut out = Vec::with_capacity(spec.count);
    for i in 0..spec.count {
        let target = match spec.mode {
            QueryMode::MembersOnly => values[rng.random_range(0..values.len())],
            QueryMode::Mixed => {
                if rng.random_bool(0.5) {
                    values[rng.random_range(0..values.len())]
                } else {
                    rng.random_range(lo..=hi)
                }
            }
            QueryMode::Repeated { fraction } => {
                if i > 0 && rng.random_bool(fraction) {
                    out[rng.random_range(0..i)]
                } else {
                    values[rng.random_range(0..values.len())]
                }
            }
        };
        out.push(target);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds() -> SortedDataset {
        SortedDataset::new((0..1000).map(|i| i * 10).collect()).unwrap()
    }

    #[test]
    fn members_only_hits_members() {
        let spec = QuerySpec {
            count: 500,
            mode: QueryMode::MembersOnly,
            seed: 1,
        };
        let d = ds();
        let q = generate_queries(&d, &spec).unwrap();
        assert_eq!(q.len(), 500);
        assert!(q.iter().all(|t| d.values().binary_search(t).is_ok()));
        assert_eq!(q, generate_queries(&d, &spec).unwrap());
    }

    #[test]
    fn mixed_stays_in_range_and_misses_sometimes() {
        let d = ds();
        let q = generate_queries(
            &d,
            &QuerySpec {
                count: 2000,
                mode: QueryMode::Mixed,
                seed: 2,
            },
        )
        .unwrap();
        assert!(q.iter().all(|t| (0..=9990).contains(t)));
        let misses = q.iter().filter(|t| d.values().binary_search(t).is_err()).count();
        assert!(misses > 500 && misses < 1000, "{misses}");
    }

    #[test]
    fn repeated_extremes() {
        let d = ds();
        let all = generate_queries(
            &d,
            &QuerySpec {
                count: 50,
                mode: QueryMode::Repeated { fraction: 1.0 },
                seed: 3,
            },
        )
        .unwrap();
        assert!(all.iter().all(|&t| t == all[0]));
        assert!(generate_queries(
            &d,
            &QuerySpec {
                count: 5,
                mode: QueryMode::Repeated { fraction: 1.5 },
                seed: 3
            }
        )
        .is_err());
    }

    #[test]
    fn empty_dataset() {
        let empty = SortedDataset::new(vec![]).unwrap();
        let spec = QuerySpec {
            count: 3,
            mode: QueryMode::MembersOnly,
            seed: 0,
        };
        assert!(generate_queries(&empty, &spec).is_err());
        assert!(generate_queries(&empty, &QuerySpec { count: 0, ..spec })
            .unwrap()
            .is_empty());
    }
}
