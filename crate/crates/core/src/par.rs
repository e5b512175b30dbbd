//! Data-parallel helpers.
//!
//! With the `parallel` feature (on by default) batch work is spread over the
//! rayon pool; without it every helper runs sequentially. Results are always
//! returned in input order and all reductions are done sequentially over the
//! collected per-item values, so outputs are bit-identical regardless of the
//! worker count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Execution strategy for the explicit `*_with` helpers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Exec {
    /// The strategy used by the implicit helpers in this build.
    pub const fn default_for_build() -> Exec {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    map_with(Exec::default_for_build(), items, f)
}

pub fn map_with<T, R, F>(exec: Exec, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => items.par_iter().map(f).collect(),
        _ => items.iter().map(f).collect(),
    }
}

pub fn map_range<R, F>(start: i64, end: i64, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(i64) -> R + Sync + Send,
{
    map_range_with(Exec::default_for_build(), start, end, f)
}

/// Maps `f` over the half-open index range `start..end`.
pub fn map_range_with<R, F>(exec: Exec, start: i64, end: i64, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(i64) -> R + Sync + Send,
{
    if end <= start {
        return Vec::new();
    }
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => (start..end).into_par_iter().map(f).collect(),
        _ => (start..end).map(f).collect(),
    }
}

/// Collects a batch of fallible results, returning the first error in input order.
pub fn try_collect<R, E>(results: Vec<Result<R, E>>) -> Result<Vec<R>, E> {
    results.into_iter().collect()
}

/// Pairwise summation in a fixed tree order.
pub fn pairwise_sum(values: &[f64]) -> f64 {
    const LEAF: usize = 64;
    if values.len() <= LEAF {
        return values.iter().sum();
    }
    let mid = values.len() / 2;
    pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
}
