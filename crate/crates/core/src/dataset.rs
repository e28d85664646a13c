//! Immutable sorted integer datasets.
//!
//! Datasets are read from a line-delimited text format: one base-10 signed
//! 64-bit integer per line, LF separated (a trailing CR is stripped), no
//! header. Lines holding only whitespace are skipped. Sortedness is checked
//! on load; a descent is an error.

use std::fmt;
use std::io::{self, BufRead, Write};
use std::num::IntErrorKind;
use std::sync::Arc;

use thiserror::Error;
use xxhash_rust::xxh3::Xxh3;

/// Errors raised while loading or constructing a dataset.
#[derive(Debug, Error)]
pub enum DatasetError {
    #[error("line {line}: cannot parse {text:?} as an integer")]
    Parse { line: usize, text: String },
    #[error("line {line}: {text:?} does not fit in a signed 64-bit integer")]
    Overflow { line: usize, text: String },
    #[error("values are not sorted: element {index} is smaller than its predecessor")]
    NotSorted { index: usize },
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Content fingerprint of a value sequence (128-bit XXH3 over the
/// little-endian encoding of the values).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DatasetId(u128);

impl DatasetId {
    pub fn as_u128(self) -> u128 {
        self.0
    }
}

impl fmt::Display for DatasetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:032x}", self.0)
    }
}

/// Computes the fingerprint of `values`.
pub fn fingerprint(values: &[i64]) -> DatasetId {
    let mut hasher = Xxh3::new();
    // Length prefix keeps the empty sequence distinct from any framing quirk.
    hasher.update(&(values.len() as u64).to_le_bytes());
    for v in values {
        hasher.update(&v.to_le_bytes());
    }
    DatasetId(hasher.digest128())
}

/// A nondecreasing sequence of `i64` keys with a content fingerprint.
///
/// Cloning is cheap: the values are shared.
#[derive(Clone, PartialEq, Eq)]
pub struct SortedDataset {
    values: Arc<[i64]>,
    id: DatasetId,
}

impl fmt::Debug for SortedDataset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SortedDataset")
            .field("id", &self.id)
            .field("len", &self.values.len())
            .finish()
    }
}

impl SortedDataset {
    /// Wraps `values`, verifying they are nondecreasing.
    pub fn new(values: Vec<i64>) -> Result<Self, DatasetError> {
        if let Some(index) = first_descent(&values) {
            return Err(DatasetError::NotSorted { index });
        }
        Ok(Self::from_sorted_unchecked(values))
    }

    /// Sorts `values` and wraps them.
    pub fn from_unsorted(mut values: Vec<i64>) -> Self {
        values.sort_unstable();
        Self::from_sorted_unchecked(values)
    }

    fn from_sorted_unchecked(values: Vec<i64>) -> Self {
        let id = fingerprint(&values);
        Self {
            values: values.into(),
            id,
        }
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn id(&self) -> DatasetId {
        self.id
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn first(&self) -> Option<i64> {
        self.values.first().copied()
    }

    pub fn last(&self) -> Option<i64> {
        self.values.last().copied()
    }

    /// Writes the dataset in the line format accepted by [`load_dataset`].
    pub fn write_lines<W: Write>(&self, mut out: W) -> io::Result<()> {
        for v in self.values.iter() {
            writeln!(out, "{v}")?;
        }
        out.flush()
    }
}

impl AsRef<[i64]> for SortedDataset {
    fn as_ref(&self) -> &[i64] {
        &self.values
    }
}

fn first_descent(values: &[i64]) -> Option<usize> {
    values.windows(2).position(|w| w[1] < w[0]).map(|i| i + 1)
}

/// Reads a dataset from line-delimited text.
pub fn load_dataset<R: BufRead>(source: R) -> Result<SortedDataset, DatasetError> {
    let mut values = Vec::new();
    for (lineno, line) in source.lines().enumerate() {
        let line = line?;
        let text = line.strip_suffix('\r').unwrap_or(&line).trim();
        if text.is_empty() {
            continue;
        }
        let value = text.parse::<i64>().map_err(|e| match e.kind() {
            IntErrorKind::PosOverflow | IntErrorKind::NegOverflow => DatasetError::Overflow {
                line: lineno + 1,
                text: text.to_owned(),
            },
            _ => DatasetError::Parse {
                line: lineno + 1,
                text: text.to_owned(),
            },
        })?;
        if let Some(&prev) = values.last() {
            if value < prev {
                return Err(DatasetError::NotSorted { index: values.len() });
            }
        }
        values.push(value);
    }
    Ok(SortedDataset::from_sorted_unchecked(values))
}
