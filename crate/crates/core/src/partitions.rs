//! Integer partitions: the class-intersection patterns of sigma-hypergraphs.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Upper bound accepted by [`enumerate_partitions`].
pub const MAX_ENUMERATION_TOTAL: usize = 25;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("a partition needs at least one part")]
    EmptyPartition,
    #[error("partition parts must be positive, got {0}")]
    NonPositivePart(i64),
    #[error("part index {index} out of range 1..={parts}")]
    IndexOutOfRange { index: usize, parts: usize },
    #[error("partitions can only be enumerated for 1 <= r <= {MAX_ENUMERATION_TOTAL}, got {0}")]
    ROutOfRange(usize),
    #[error("cannot parse partition {0:?}")]
    Syntax(String),
}

/// A partition of `total` into positive parts, stored non-increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<i64>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts `values` into non-increasing order.
    pub fn parse(values: &[i64]) -> Result<Self, PartitionError> {
        if values.is_empty() {
            return Err(PartitionError::EmptyPartition);
        }
        if let Some(&bad) = values.iter().find(|&&v| v < 1) {
            return Err(PartitionError::NonPositivePart(bad));
        }
        Ok(Self::from_parts(values.iter().map(|&v| v as usize).collect()))
    }

    /// Parses the comma-separated CLI form, e.g. `"3,1"`.
    pub fn parse_csv(text: &str) -> Result<Self, PartitionError> {
        let values = text
            .split(',')
            .map(|t| t.trim())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i64>().map_err(|_| PartitionError::Syntax(text.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Self::parse(&values)
    }

    pub(crate) fn from_parts(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        debug_assert!(!parts.is_empty() && parts.iter().all(|&p| p > 0));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn s(&self) -> usize {
        self.parts.len()
    }

    pub fn largest(&self) -> usize {
        self.parts[0]
    }

    /// Removes one from part `i` (1-based), dropping it if it reaches zero.
    ///
    /// Deleting from the single part of `(1)` would leave the empty partition
    /// of 0, which is not representable; that case is `None`.
    pub fn delete_one(&self, i: usize) -> Result<Option<Partition>, PartitionError> {
        if i == 0 || i > self.s() {
            return Err(PartitionError::IndexOutOfRange {
                index: i,
                parts: self.s(),
            });
        }
        let mut parts = self.parts.clone();
        parts[i - 1] -= 1;
        parts.retain(|&p| p > 0);
        Ok((!parts.is_empty()).then(|| Partition::from_parts(parts)))
    }

    pub fn is_rectangular(&self) -> bool {
        self.parts.iter().all(|&p| p == self.parts[0])
    }

    /// True iff deleting one from any part yields the same partition.
    pub fn is_symmetric(&self) -> bool {
        let first = self.delete_one(1).expect("index 1 always valid");
        (2..=self.s()).all(|i| self.delete_one(i).expect("index in range") == first)
    }

    /// The rectangular partition of `total + 1` that collapses onto `self`
    /// after one deletion, i.e. `self = (D, ..., D, D-1)` with the `D-1`
    /// part omitted when `D = 1`.
    pub fn rectangular_parent(&self) -> Option<Partition> {
        let n = self.total() + 1;
        (1..=n).filter(|d| n.is_multiple_of(*d)).find_map(|d| {
            let parent = Partition::from_parts(vec![d; n / d]);
            (parent.delete_one(1).ok()?.as_ref() == Some(self)).then_some(parent)
        })
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = PartitionError;

    fn try_from(values: Vec<i64>) -> Result<Self, Self::Error> {
        Partition::parse(&values)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `r` in reverse-lexicographic order, `(r)` first.
pub fn enumerate_partitions(r: usize) -> Result<Vec<Partition>, PartitionError> {
    if r == 0 || r > MAX_ENUMERATION_TOTAL {
        return Err(PartitionError::ROutOfRange(r));
    }
    fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(r, r, &mut Vec::new(), &mut out);
    Ok(out)
}
