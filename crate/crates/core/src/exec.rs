//! Parallel/sequential execution of independent per-item work.
//!
//! With the `parallel` feature (default) the maps below run on the rayon
//! thread pool; without it they run inline. Results are collected in item
//! order either way, and every floating-point reduction in this crate folds
//! over that ordered output, so values are identical no matter how many
//! worker threads run.

/// Inputs smaller than this are not worth shipping to the thread pool.
#[cfg(feature = "parallel")]
const PARALLEL_THRESHOLD: usize = 64;

#[cfg(feature = "parallel")]
pub(crate) fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Send + Sync,
{
    use rayon::prelude::*;
    if n < PARALLEL_THRESHOLD {
        (0..n).map(f).collect()
    } else {
        (0..n).into_par_iter().map(f).collect()
    }
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Send + Sync,
{
    (0..n).map(f).collect()
}

/// Like [`map_indexed`] but with a per-worker scratch value, so hot loops can
/// reuse allocations. `f` must leave no state in the scratch that later calls
/// could observe (reset what you touch).
#[cfg(feature = "parallel")]
pub(crate) fn map_indexed_scratch<S, T, I, F>(n: usize, init: I, f: F) -> Vec<T>
where
    S: Send,
    T: Send,
    I: Fn() -> S + Send + Sync,
    F: Fn(&mut S, usize) -> T + Send + Sync,
{
    use rayon::prelude::*;
    if n < PARALLEL_THRESHOLD {
        let mut scratch = init();
        (0..n).map(|i| f(&mut scratch, i)).collect()
    } else {
        (0..n)
            .into_par_iter()
            .map_init(&init, |scratch, i| f(scratch, i))
            .collect()
    }
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_indexed_scratch<S, T, I, F>(n: usize, init: I, f: F) -> Vec<T>
where
    S: Send,
    T: Send,
    I: Fn() -> S + Send + Sync,
    F: Fn(&mut S, usize) -> T + Send + Sync,
{
    let mut scratch = init();
    (0..n).map(|i| f(&mut scratch, i)).collect()
}

/// [`map_indexed`] without the size threshold, for callers whose items are
/// already coarse batches of work.
#[cfg(feature = "parallel")]
pub(crate) fn map_batches<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Send + Sync,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_batches<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Send + Sync,
{
    (0..n).map(f).collect()
}

/// [`map_indexed_scratch`] without the size threshold, for callers whose
/// items are already coarse batches of work.
#[cfg(feature = "parallel")]
pub(crate) fn map_batches_scratch<S, T, I, F>(n: usize, init: I, f: F) -> Vec<T>
where
    S: Send,
    T: Send,
    I: Fn() -> S + Send + Sync,
    F: Fn(&mut S, usize) -> T + Send + Sync,
{
    use rayon::prelude::*;
    (0..n)
        .into_par_iter()
        .map_init(&init, |scratch, i| f(scratch, i))
        .collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_batches_scratch<S, T, I, F>(n: usize, init: I, f: F) -> Vec<T>
where
    S: Send,
    T: Send,
    I: Fn() -> S + Send + Sync,
    F: Fn(&mut S, usize) -> T + Send + Sync,
{
    map_indexed_scratch(n, init, f)
}
