//! Finite sets of non-negative integers, sumsets, and arithmetic-progression profiles.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{IasiError, Result};

/// Smallest AP length accepted as a vertex label.
pub const MIN_LABEL_LEN: usize = 3;

/// A non-empty finite set of non-negative integers, stored sorted and deduplicated.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i128>", into = "Vec<u64>")]
pub struct IntSet(Vec<u64>);

impl IntSet {
    /// Builds a set from arbitrary values, sorting and dropping duplicates.
    pub fn new<I: IntoIterator<Item = u64>>(values: I) -> Result<Self> {
        let mut elements: Vec<u64> = values.into_iter().collect();
        if elements.is_empty() {
            return Err(IasiError::InvalidSet("a label set must be non-empty".into()));
        }
        elements.sort_unstable();
        elements.dedup();
        Ok(IntSet(elements))
    }

    /// Like [`IntSet::new`] but accepts signed input and rejects negatives.
    pub fn from_signed(values: &[i64]) -> Result<Self> {
        Self::try_from(values.iter().map(|&v| v as i128).collect::<Vec<_>>())
    }

    /// The progression `{first + i*diff : 0 <= i < len}`.
    pub fn arithmetic(first: u64, diff: u64, len: usize) -> Result<Self> {
        if len == 0 {
            return Err(IasiError::InvalidSet("a progression needs at least one term".into()));
        }
        if diff == 0 && len > 1 {
            return Err(IasiError::InvalidSet("a progression needs a positive difference".into()));
        }
        let span = diff
            .checked_mul(len as u64 - 1)
            .and_then(|s| s.checked_add(first))
            .ok_or(IasiError::Overflow("arithmetic progression"))?;
        debug_assert!(span >= first);
        Ok(IntSet((0..len as u64).map(|i| first + i * diff).collect()))
    }

    pub fn elements(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn min(&self) -> u64 {
        self.0[0]
    }

    pub fn max(&self) -> u64 {
        self.0[self.0.len() - 1]
    }

    pub fn contains(&self, value: u64) -> bool {
        self.0.binary_search(&value).is_ok()
    }

    /// Set-indexing number: the cardinality of the label.
    pub fn set_indexing_number(&self) -> usize {
        self.0.len()
    }

    /// The sumset `{a + b : a in self, b in other}`.
    pub fn sumset(&self, other: &IntSet) -> Result<IntSet> {
        let mut sums = Vec::with_capacity(self.len() * other.len());
        for &a in &self.0 {
            for &b in &other.0 {
                sums.push(a.checked_add(b).ok_or(IasiError::Overflow("sumset"))?);
            }
        }
        sums.sort_unstable();
        sums.dedup();
        Ok(IntSet(sums))
    }

    /// Arithmetic-progression profile, if the elements are equally spaced.
    ///
    /// Singletons get `diff = 1` so the function is total on them.
    pub fn ap_profile(&self) -> Option<ApProfile> {
        let first = self.0[0];
        if self.0.len() == 1 {
            return Some(ApProfile { first, diff: 1, len: 1 });
        }
        let diff = self.0[1] - first;
        if self.0.windows(2).all(|w| w[1] - w[0] == diff) {
            Some(ApProfile { first, diff, len: self.0.len() })
        } else {
            None
        }
    }

    pub fn is_ap(&self) -> bool {
        self.ap_profile().is_some()
    }

    /// Profile of an admissible label: an AP with at least three terms.
    pub fn admissible_profile(&self) -> Result<ApProfile> {
        match self.ap_profile() {
            Some(p) if p.len >= MIN_LABEL_LEN => Ok(p),
            Some(p) => Err(IasiError::NotAdmissible {
                label: self.to_string(),
                reason: format!("length {} is below {}", p.len, MIN_LABEL_LEN),
            }),
            None => Err(IasiError::NotAdmissible {
                label: self.to_string(),
                reason: "elements are not in arithmetic progression".into(),
            }),
        }
    }

    /// The common difference of an admissible AP-set label.
    pub fn deterministic_index(&self) -> Result<u64> {
        self.admissible_profile().map(|p| p.diff)
    }
}

/// Free-function form of [`IntSet::sumset`].
pub fn sumset(a: &IntSet, b: &IntSet) -> Result<IntSet> {
    a.sumset(b)
}

impl TryFrom<Vec<i128>> for IntSet {
    type Error = IasiError;

    fn try_from(values: Vec<i128>) -> Result<Self> {
        let mut out = Vec::with_capacity(values.len());
        for v in values {
            if v < 0 {
                return Err(IasiError::InvalidSet(format!("negative element {v}")));
            }
            out.push(u64::try_from(v).map_err(|_| IasiError::Overflow("set element"))?);
        }
        IntSet::new(out)
    }
}

impl From<IntSet> for Vec<u64> {
    fn from(set: IntSet) -> Self {
        set.0
    }
}

impl fmt::Display for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Canonical form `(first, diff, len)` of an AP-set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ApProfile {
    pub first: u64,
    pub diff: u64,
    pub len: usize,
}

impl ApProfile {
    pub fn expand(&self) -> Result<IntSet> {
        IntSet::arithmetic(self.first, self.diff, self.len)
    }
}
