//! Execution strategy for the data-parallel sweeps (subset lattices,
//! permutation search, multidegree slices, corpus jobs).
//!
//! `Parallel` uses rayon when the `parallel` feature is enabled and silently
//! runs sequentially otherwise. Results never depend on the strategy.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// True when work will actually be spread over threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

const CHUNK: u64 = 1 << 12;

/// Folds `range` in fixed-size chunks and combines the chunk results.
///
/// `reduce` must be associative with `identity()` as unit; chunks are
/// combined in an unspecified order, so it should also be commutative.
pub fn fold_range<A, I, F, R>(
    exec: Execution,
    range: Range<u64>,
    identity: I,
    fold: F,
    reduce: R,
) -> A
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(A, u64) -> A + Sync + Send,
    R: Fn(A, A) -> A + Sync + Send,
{
    let start = range.start;
    let len = range.end.saturating_sub(range.start);
    let chunks = len.div_ceil(CHUNK);
    let run_chunk = |c: u64| {
        let lo = start + c * CHUNK;
        let hi = (lo + CHUNK).min(range.end);
        (lo..hi).fold(identity(), &fold)
    };
    #[cfg(feature = "parallel")]
    if exec.is_parallel() && chunks > 1 {
        return (0..chunks)
            .into_par_iter()
            .map(run_chunk)
            .reduce(&identity, &reduce);
    }
    let _ = exec;
    (0..chunks).map(run_chunk).fold(identity(), reduce)
}

/// Maps every item, keeping input order.
pub fn map_collect<T, U, F>(exec: Execution, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() && items.len() > 1 {
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}
