//! Thread-count control for the internally parallel enumerations.
//!
//! Every parallel map in this crate collects in input order, so results do
//! not depend on the number of threads.

use rayon::prelude::*;

/// Environment variable capping internal parallelism; `0` or unset means
/// one thread per core.
pub const THREADS_ENV: &str = "ANGK0_THREADS";

/// Reads `ANGK0_THREADS`; `None` when unset, empty or `0`.
pub fn threads_from_env() -> Option<usize> {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
}

/// Configures the global pool once. Later calls are ignored.
pub fn init_global_pool(threads: Option<usize>) {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        builder = builder.num_threads(n);
    }
    // Err only means the pool was already built.
    let _ = builder.build_global();
}

pub(crate) fn ordered_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.par_iter().map(f).collect()
}
