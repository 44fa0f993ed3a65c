//! Deterministic chunked scans over `0..total` on scoped threads.
//!
//! Workers pull fixed-size chunks in increasing order. Once some chunk
//! reports a hit, chunks starting after it are skipped, but every chunk
//! before it is still scanned, so the earliest hit and the statistics up to
//! it do not depend on the number of workers.

use std::ops::Range;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

const MAX_CHUNK: u64 = 1 << 14;

pub fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn chunk_size(total: u64, jobs: usize) -> u64 {
    total.div_ceil(jobs as u64 * 16).clamp(1, MAX_CHUNK)
}

/// Results for the scanned chunks, sorted by start. `hit` marks a result
/// that ends the search.
pub fn scan_chunks<R, S, H>(total: u64, jobs: usize, scan: S, hit: H) -> Vec<(Range<u64>, R)>
where
    R: Send,
    S: Fn(Range<u64>) -> R + Sync,
    H: Fn(&R) -> bool + Sync,
{
    let size = chunk_size(total, jobs.max(1));
    let chunks = total.div_ceil(size);
    let next = AtomicU64::new(0);
    let first_hit = AtomicU64::new(u64::MAX);
    let results = Mutex::new(Vec::new());
    let worker = || loop {
        let c = next.fetch_add(1, Ordering::Relaxed);
        if c >= chunks || c > first_hit.load(Ordering::Acquire) {
            break;
        }
        let range = c * size..((c + 1) * size).min(total);
        let r = scan(range.clone());
        if hit(&r) {
            first_hit.fetch_min(c, Ordering::AcqRel);
        }
        results.lock().unwrap().push((range, r));
    };
    std::thread::scope(|s| {
        for _ in 1..jobs.max(1).min(chunks.max(1) as usize) {
            s.spawn(worker);
        }
        worker();
    });
    let mut results = results.into_inner().unwrap();
    results.sort_by_key(|(r, _)| r.start);
    let cut = first_hit.load(Ordering::Acquire);
    results.truncate(cut.saturating_add(1).min(results.len() as u64) as usize);
    results
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn earliest_hit_is_independent_of_jobs() {
        let scan = |r: Range<u64>| r.clone().find(|&i| i % 997 == 500 && i > 3000);
        for jobs in [1, 2, 3, 8] {
            let chunks = scan_chunks(100_000, jobs, scan, Option::is_some);
            let first = chunks.iter().find_map(|(_, r)| *r);
            assert_eq!(first, Some(3491));
            // Everything before the hit was covered, contiguously.
            let mut expected = 0;
            for (range, _) in &chunks {
                assert_eq!(range.start, expected);
                expected = range.end;
            }
            assert!(chunks.last().unwrap().0.contains(&3491));
        }
    }

    #[test]
    fn full_cover_without_hits() {
        for total in [0, 1, 5, 1 << 16] {
            let chunks = scan_chunks(total, 4, |r| r.end - r.start, |_| false);
            assert_eq!(chunks.iter().map(|(_, n)| n).sum::<u64>(), total);
        }
    }
}
