//! Nonnegative integer vectors indexed by cardinality.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A vector of nonnegative counts indexed by cardinality `k = 1..=len`.
///
/// Used for face vectors, clique vectors and Turán vectors alike. Indexing is
/// by cardinality, not dimension: entry 2 of a face vector counts edges.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntVector(Vec<u64>);

impl IntVector {
    pub fn new(entries: Vec<u64>) -> Self {
        IntVector(entries)
    }

    pub fn zeros(len: usize) -> Self {
        IntVector(vec![0; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Entry at cardinality `k` (1-based). Zero beyond the stored length and
    /// for `k = 0`; callers needing the `c_0 = 1` convention use [`Self::get_or_unit`].
    pub fn get(&self, k: usize) -> u64 {
        if k == 0 {
            return 0;
        }
        self.0.get(k - 1).copied().unwrap_or(0)
    }

    /// Like [`Self::get`] but with the empty set counted once at `k = 0`.
    pub fn get_or_unit(&self, k: usize) -> u64 {
        if k == 0 {
            1
        } else {
            self.get(k)
        }
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<u64> {
        self.0
    }

    /// Number of leading positive entries.
    pub fn support_len(&self) -> usize {
        self.0.iter().take_while(|&&x| x > 0).count()
    }

    /// Entries up to the last nonzero one.
    pub fn trimmed(&self) -> &[u64] {
        let end = self.0.iter().rposition(|&x| x > 0).map_or(0, |p| p + 1);
        &self.0[..end]
    }

    /// True if no positive entry follows a zero entry.
    pub fn has_zero_tail(&self) -> bool {
        self.first_internal_zero().is_none()
    }

    /// 1-based position of a zero entry that is followed by a positive one.
    pub fn first_internal_zero(&self) -> Option<usize> {
        let support = self.support_len();
        if self.0[support..].iter().any(|&x| x > 0) {
            Some(support + 1)
        } else {
            None
        }
    }

    /// The `k`-truncation: entries `1..=k` copied, the rest zeroed.
    pub fn truncation(&self, k: usize) -> Result<IntVector> {
        if k == 0 || k > self.len() {
            return Err(Error::IndexOutOfRange {
                index: k,
                len: self.len(),
            });
        }
        let mut out = self.0.clone();
        out[k..].iter_mut().for_each(|x| *x = 0);
        Ok(IntVector(out))
    }

    /// Copy padded with zeros (or cut) to length `len`.
    pub fn resized(&self, len: usize) -> IntVector {
        let mut out = self.0.clone();
        out.resize(len, 0);
        IntVector(out)
    }

    /// Entrywise comparison `self <= other`, missing entries read as zero.
    pub fn dominated_by(&self, other: &IntVector) -> bool {
        let len = self.len().max(other.len());
        (1..=len).all(|k| self.get(k) <= other.get(k))
    }
}

impl From<Vec<u64>> for IntVector {
    fn from(v: Vec<u64>) -> Self {
        IntVector(v)
    }
}

impl fmt::Display for IntVector {
    /// Space separated entries up to the last nonzero one.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let trimmed = self.trimmed();
        for (i, x) in trimmed.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}
