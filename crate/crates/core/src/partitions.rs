//! Strictly ordered partitions of integer sets and their weight counts.
//!
//! Under a gap parameter `d`, a sorted set splits into blocks wherever two
//! consecutive members differ by at least `d`; inside a block consecutive
//! members differ by at most `d - 1`. Counting subsets of `{1..t}` by block
//! sizes gives the bigraded Hilbert series of the d-window ideals, and for
//! `d = 2` the count of a weight of length `l` summing to `m` is
//! `C(t - m + 1, l)`.

use std::collections::BTreeMap;

use num_integer::binomial;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::taylor::{check_cap, DEFAULT_MAX_T};

/// Ordered blocks `S_1, ..., S_l` with `max S_i < min S_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrictPartition {
    pub blocks: Vec<Vec<usize>>,
}

impl StrictPartition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn weight(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    /// Whether the blocks satisfy both gap conditions for `d`.
    pub fn satisfies_gaps(&self, d: usize) -> bool {
        let inner = self
            .blocks
            .iter()
            .all(|b| !b.is_empty() && b.windows(2).all(|w| w[1] > w[0] && w[1] - w[0] < d));
        let across = self
            .blocks
            .windows(2)
            .all(|w| w[1][0] > *w[0].last().unwrap() && w[1][0] - w[0].last().unwrap() >= d);
        inner && across
    }
}

/// Splits the sorted set at every gap of at least `d`.
pub fn canonical_partition(set: &[usize], d: usize) -> Result<StrictPartition> {
    if set.is_empty() {
        return Err(Error::EmptySubset);
    }
    if d == 0 {
        return Err(Error::InvalidParameter("d must be at least 1".into()));
    }
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut blocks: Vec<Vec<usize>> = vec![vec![sorted[0]]];
    for w in sorted.windows(2) {
        if w[1] - w[0] >= d {
            blocks.push(vec![w[1]]);
        } else {
            blocks.last_mut().unwrap().push(w[1]);
        }
    }
    Ok(StrictPartition { blocks })
}

// Block sizes of the canonical partition of a bitmask subset.
fn mask_weight(mask: u64, d: usize) -> Vec<usize> {
    let mut weight = Vec::new();
    let mut prev: Option<usize> = None;
    let mut rest = mask;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        match prev {
            Some(p) if i - p < d => *weight.last_mut().unwrap() += 1,
            _ => weight.push(1),
        }
        prev = Some(i);
    }
    weight
}

fn check_params(t: usize, d: usize) -> Result<()> {
    if t == 0 || d == 0 {
        return Err(Error::InvalidParameter("t and d must be at least 1".into()));
    }
    check_cap(t, DEFAULT_MAX_T)
}

/// Number of nonempty subsets of `{1..t}` per canonical weight.
pub fn weight_counts(t: usize, d: usize) -> Result<BTreeMap<Vec<usize>, u64>> {
    weight_counts_with(t, d, Execution::default())
}

pub fn weight_counts_with(
    t: usize,
    d: usize,
    exec: Execution,
) -> Result<BTreeMap<Vec<usize>, u64>> {
    check_params(t, d)?;
    Ok(exec::fold_range(
        exec,
        1..1u64 << t,
        BTreeMap::new,
        |mut acc, s| {
            *acc.entry(mask_weight(s, d)).or_insert(0) += 1;
            acc
        },
        |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        },
    ))
}

/// `f(n_1, ..., n_l)`: subsets of `{1..t}` whose canonical partition has
/// exactly this weight.
pub fn count_by_weight(t: usize, d: usize, weight: &[usize]) -> Result<u64> {
    check_params(t, d)?;
    if weight.contains(&0) {
        return Err(Error::InvalidParameter("weights must be positive".into()));
    }
    let m: usize = weight.iter().sum();
    if m > t {
        return Ok(0);
    }
    Ok(exec::fold_range(
        Execution::default(),
        1..1u64 << t,
        || 0u64,
        |acc, s| acc + u64::from(s.count_ones() as usize == m && mask_weight(s, d) == weight),
        |a, b| a + b,
    ))
}

/// `C(t - m + 1, l)`, the `d = 2` count for any weight of length `l`
/// summing to `m`.
pub fn closed_form_d2(t: usize, m: usize, l: usize) -> Result<u64> {
    if !(1 <= l && l <= m && m <= t) {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= l <= m <= t, got t = {t}, m = {m}, l = {l}"
        )));
    }
    Ok(binomial((t - m + 1) as u64, l as u64))
}

/// All compositions of `m` (ordered tuples of positive parts), listed by
/// the binary counter over the `m - 1` cut positions.
pub fn compositions(m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    let cuts = m - 1;
    let mut out = Vec::with_capacity(1 << cuts);
    for mask in 0u64..1 << cuts {
        let mut parts = Vec::new();
        let mut run = 1;
        for k in 0..cuts {
            if mask >> k & 1 == 1 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        out.push(parts);
    }
    out
}

/// Checks `Σ_{compositions of m} C(t - m + 1, l) = C(t, m)`.
pub fn remark_identity_check(t: usize, m: usize) -> Result<bool> {
    if !(1 <= m && m <= t) {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= m <= t, got t = {t}, m = {m}"
        )));
    }
    let mut total: u64 = 0;
    for c in compositions(m) {
        total += closed_form_d2(t, m, c.len())?;
    }
    Ok(total == binomial(t as u64, m as u64))
}
