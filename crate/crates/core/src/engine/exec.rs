//! How rank ranges are folded: one thread, or rayon's pool.
//!
//! The rank space is always cut into the same fixed-size chunks, so the
//! merged result does not depend on the execution mode or the thread count.

use std::ops::Range;

/// Ranks per chunk.
pub const CHUNK_LEN: u64 = 1 << 14;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Execution {
    Sequential,
    /// Falls back to [`Execution::Sequential`] without the `parallel` feature.
    #[default]
    Parallel,
}

pub(crate) fn chunks(total: u64) -> impl Iterator<Item = Range<u64>> + Clone {
    let count = total.div_ceil(CHUNK_LEN);
    (0..count).map(move |i| i * CHUNK_LEN..((i + 1) * CHUNK_LEN).min(total))
}

/// Folds every chunk of `0..total` with `fold` and merges the partial
/// results with `merge`, which must be commutative and associative.
pub(crate) fn fold_chunks<T, F, M>(exec: Execution, total: u64, identity: T, fold: F, merge: M) -> T
where
    T: Clone + Send + Sync,
    F: Fn(Range<u64>) -> T + Sync + Send,
    M: Fn(T, T) -> T + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            let count = total.div_ceil(CHUNK_LEN);
            (0..count)
                .into_par_iter()
                .map(|i| fold(i * CHUNK_LEN..((i + 1) * CHUNK_LEN).min(total)))
                .reduce(|| identity.clone(), &merge)
        }
        _ => chunks(total).map(fold).fold(identity, merge),
    }
}

/// Runs `f` on a dedicated pool of `threads` workers (or rayon's global
/// pool when `None`).
#[cfg(feature = "parallel")]
pub fn with_threads<R, F>(threads: Option<usize>, f: F) -> R
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    match threads {
        None => f(),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .expect("thread pool")
            .install(f),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn with_threads<R, F>(_threads: Option<usize>, f: F) -> R
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    f()
}

/// Worker count the parallel path would use.
pub fn available_threads() -> usize {
    #[cfg(feature = "parallel")]
    {
        rayon::current_num_threads()
    }
    #[cfg(not(feature = "parallel"))]
    {
        1
    }
}
