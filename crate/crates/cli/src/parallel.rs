//! Splitting an index range across worker threads.

use std::ops::Range;
use std::thread;

use cupsq::{FormalSum, Ring};

/// Evaluates `part` on up to `threads` contiguous pieces of `0..len` and
/// adds the results. The sum is independent of `threads`.
pub fn sum_parts<F>(ring: Ring, len: usize, threads: usize, part: F) -> FormalSum
where
    F: Fn(Range<usize>) -> FormalSum + Sync,
{
    let threads = threads.clamp(1, len.max(1));
    if threads == 1 {
        return part(0..len);
    }
    let chunk = len.div_ceil(threads);
    let pieces: Vec<FormalSum> = thread::scope(|s| {
        let handles: Vec<_> = (0..len)
            .step_by(chunk)
            .map(|start| {
                let part = &part;
                s.spawn(move || part(start..(start + chunk).min(len)))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut total = FormalSum::new(ring);
    for piece in &pieces {
        total.add_assign(piece).expect("pieces share the ring");
    }
    total
}
