//! k-strict partitions: the index set of Schubert classes on `IG(n-k, 2n)`
//! and `OG(n-k, 2n+1)`.

use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be positive and weakly decreasing, got {0:?}")]
    NotAPartition(Vec<u32>),
    #[error("need 0 <= k <= n, got k = {k}, n = {n}")]
    BadRange { k: u32, n: u32 },
    #[error("{parts:?} is not {k}-strict")]
    NotKStrict { parts: Vec<u32>, k: u32 },
}

/// Box of `rows x cols`; for the Grassmannians here `rows = n - k`, `cols = n + k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RectangleBound {
    pub rows: u32,
    pub cols: u32,
}

impl RectangleBound {
    pub fn for_grassmannian(k: u32, n: u32) -> Result<Self, PartitionError> {
        check_range(k, n)?;
        Ok(RectangleBound {
            rows: n - k,
            cols: n + k,
        })
    }

    pub fn fits(&self, parts: &[u32]) -> bool {
        parts.len() <= self.rows as usize && parts.iter().all(|&p| p <= self.cols)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KStrictPartition {
    k: u32,
    parts: Vec<u32>,
}

impl KStrictPartition {
    /// Trailing zeros are dropped; the empty partition is the unit class.
    pub fn new(mut parts: Vec<u32>, k: u32) -> Result<Self, PartitionError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if !is_k_strict(&parts, k)? {
            return Err(PartitionError::NotKStrict { parts, k });
        }
        Ok(KStrictPartition { k, parts })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!(self.parts)
    }
}

impl fmt::Display for KStrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn check_range(k: u32, n: u32) -> Result<(), PartitionError> {
    if k > n {
        Err(PartitionError::BadRange { k, n })
    } else {
        Ok(())
    }
}

/// True when no part larger than `k` is repeated.
pub fn is_k_strict(parts: &[u32], k: u32) -> Result<bool, PartitionError> {
    if parts.contains(&0) || parts.windows(2).any(|w| w[1] > w[0]) {
        return Err(PartitionError::NotAPartition(parts.to_vec()));
    }
    Ok(parts.windows(2).all(|w| w[0] <= k || w[1] < w[0]))
}

/// All k-strict partitions in the `(n-k) x (n+k)` box, ordered by size and then
/// descending lexicographically on parts.
pub fn enumerate_partitions(
    k: u32,
    n: u32,
    size: Option<u32>,
) -> Result<Vec<KStrictPartition>, PartitionError> {
    let bound = RectangleBound::for_grassmannian(k, n)?;
    let mut out = Vec::new();
    let mut current = Vec::new();
    grow(k, bound, size, &mut current, &mut out);
    out.sort_by(|a, b| {
        (a.iter().sum::<u32>(), Reverse(a)).cmp(&(b.iter().sum::<u32>(), Reverse(b)))
    });
    Ok(out
        .into_iter()
        .map(|parts| KStrictPartition { k, parts })
        .collect())
}

fn grow(
    k: u32,
    bound: RectangleBound,
    size: Option<u32>,
    current: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    let total: u32 = current.iter().sum();
    if size.is_none_or(|s| s == total) {
        out.push(current.clone());
    }
    if current.len() == bound.rows as usize {
        return;
    }
    let mut max_next = match current.last() {
        None => bound.cols,
        Some(&last) if last > k => last - 1,
        Some(&last) => last,
    };
    if let Some(s) = size {
        max_next = max_next.min(s.saturating_sub(total));
    }
    for next in 1..=max_next {
        current.push(next);
        grow(k, bound, size, current, out);
        current.pop();
    }
}

/// Cohomological degree (`2|λ|`) to number of k-strict partitions of that size.
pub fn betti_profile(k: u32, n: u32) -> Result<BTreeMap<u32, u64>, PartitionError> {
    let mut profile = BTreeMap::new();
    for p in enumerate_partitions(k, n, None)? {
        *profile.entry(2 * p.size()).or_insert(0) += 1;
    }
    Ok(profile)
}

/// Complex dimension of `IG(n-k, 2n)` (equal to that of `OG(n-k, 2n+1)`).
pub fn grassmannian_dimension(k: u32, n: u32) -> Result<u32, PartitionError> {
    check_range(k, n)?;
    let m = n - k;
    Ok(m * (n + k) - m * m.saturating_sub(1) / 2)
}

/// `2^(n-k) * binomial(n, k)`, the number of Schubert classes.
pub fn schubert_class_count(k: u32, n: u32) -> Result<u64, PartitionError> {
    check_range(k, n)?;
    let mut binom: u64 = 1;
    for i in 0..k as u64 {
        binom = binom * (n as u64 - i) / (i + 1);
    }
    Ok(binom << (n - k))
}
