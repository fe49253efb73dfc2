//! Multi-threaded range enumeration.
//!
//! The rank space is cut into contiguous chunks that workers claim from a
//! shared counter. Each chunk yields a partial result keyed by minimum rank,
//! so the merged output does not depend on the worker count or schedule.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

use sumset_core::explorer::{PartialRange, RangeQuery, SizeRange};
use sumset_core::Result;

/// Chunks per worker; enough slack to balance uneven chunk costs.
const CHUNKS_PER_WORKER: u128 = 8;
const MIN_CHUNK: u128 = 4096;

pub fn enumerate_range(query: &RangeQuery, workers: usize) -> Result<SizeRange> {
    let (space, plan) = query.prepare()?;
    let workers = workers.max(1);
    if workers == 1 || plan.end <= MIN_CHUNK {
        let part = query.scan(&space, 0..plan.end)?;
        return Ok(query.finish(plan, part));
    }
    let chunk = plan.end.div_ceil(workers as u128 * CHUNKS_PER_WORKER).max(MIN_CHUNK);
    let chunks = plan.end.div_ceil(chunk) as usize;
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<Result<PartialRange>>>> = Mutex::new((0..chunks).map(|_| None).collect());
    thread::scope(|s| {
        for _ in 0..workers.min(chunks) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= chunks {
                    break;
                }
                let start = i as u128 * chunk;
                let end = (start + chunk).min(plan.end);
                let r = query.scan(&space, start..end);
                results.lock().unwrap()[i] = Some(r);
            });
        }
    });
    let mut merged = PartialRange::default();
    for r in results.into_inner().unwrap() {
        merged.merge(r.expect("every chunk is scanned")?);
    }
    Ok(query.finish(plan, merged))
}
