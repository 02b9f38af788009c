//! Execution seam between the rayon data-parallel path and the sequential
//! fallback.
//!
//! With the default `parallel` feature, [`map_indexed`] fans the closure out
//! over the rayon pool; without it the same call runs a plain sequential map.
//! Results come back in input order either way, so callers observe identical
//! output regardless of the feature or the pool size — determinism lives in
//! the per-task seed derivation, never in scheduling.

/// Map `f` over `0..len`, collecting results in index order.
#[cfg(feature = "parallel")]
pub fn map_indexed<T, F>(len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (0..len).into_par_iter().map(f).collect()
}

/// Map `f` over `0..len`, collecting results in index order.
#[cfg(not(feature = "parallel"))]
pub fn map_indexed<T, F>(len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..len).map(f).collect()
}

/// Sequential map with the same signature as [`map_indexed`]; used by the
/// bench suite to compare the two paths within one build.
pub fn map_indexed_seq<T, F>(len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..len).map(f).collect()
}

/// Cap the rayon worker pool. No-op without the `parallel` feature, and after
/// the global pool is already initialized.
pub fn limit_workers(jobs: usize) {
    #[cfg(feature = "parallel")]
    {
        if jobs > 0 {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build_global();
        }
    }
    #[cfg(not(feature = "parallel"))]
    let _ = jobs;
}
