//! Chunked data-parallel mapping with a sequential twin.
//!
//! With the `parallel` feature, [`par_map`] fans out over the rayon global
//! pool; without it the same call runs on the calling thread. Output order
//! always matches input order, so callers can merge partial results the same
//! way under either build.

/// Order-preserving map over owned items, parallel when the feature is on.
#[cfg(feature = "parallel")]
pub fn par_map<I, R, F>(items: Vec<I>, f: F) -> Vec<R>
where
    I: Send,
    R: Send,
    F: Fn(I) -> R + Sync + Send,
{
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn par_map<I, R, F>(items: Vec<I>, f: F) -> Vec<R>
where
    F: Fn(I) -> R,
{
    items.into_iter().map(f).collect()
}

/// Always-sequential twin of [`par_map`], for forcing serial runs and for
/// benchmarking the parallel speedup against.
pub fn seq_map<I, R, F>(items: Vec<I>, f: F) -> Vec<R>
where
    F: Fn(I) -> R,
{
    items.into_iter().map(f).collect()
}

/// Cap the worker count. Takes effect once per process, before the first
/// parallel call; later calls are silently ignored because the pool already
/// exists.
#[cfg(feature = "parallel")]
pub fn configure_jobs(jobs: usize) {
    if jobs > 0 {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
}

#[cfg(not(feature = "parallel"))]
pub fn configure_jobs(_jobs: usize) {}
