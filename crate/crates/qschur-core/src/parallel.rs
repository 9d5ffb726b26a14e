//! Deterministic fork-join helper used for embarrassingly parallel loops.
//!
//! Results are always collected in index order, so parallel and serial runs
//! produce bit-identical output. The worker count is taken from the
//! `QSCHUR_THREADS` environment variable (capped by the machine's available
//! parallelism); unset or unparsable values fall back to the full machine.

use std::num::NonZeroUsize;

/// Number of worker threads to use for parallel loops.
pub fn thread_count() -> usize {
    let available = std::thread::available_parallelism()
        .map(NonZeroUsize::get)
        .unwrap_or(1);
    match std::env::var("QSCHUR_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        Some(n) if n >= 1 => n.min(available),
        _ => available,
    }
}

/// Applies `work` to every index in `0..len` and collects the results in
/// index order, farming contiguous chunks out to scoped threads.
pub fn map_indexed<T, F>(len: usize, work: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    let threads = thread_count().min(len);
    if threads <= 1 {
        return (0..len).map(work).collect();
    }
    let chunk = len.div_ceil(threads);
    let mut out: Vec<Option<T>> = (0..len).map(|_| None).collect();
    std::thread::scope(|scope| {
        for (c, slice) in out.chunks_mut(chunk).enumerate() {
            let work = &work;
            scope.spawn(move || {
                for (offset, slot) in slice.iter_mut().enumerate() {
                    *slot = Some(work(c * chunk + offset));
                }
            });
        }
    });
    out.into_iter().map(|slot| slot.unwrap()).collect()
}
