//! Deterministic work splitting. Enumeration is sharded by walk prefix; the
//! per-shard results are reassembled in prefix order, so the combined result
//! is byte-identical for every thread count.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use rectwalk_core::walk::{shard_prefixes, InfiniteClassError, Walk, WalkClass};

const SHARD_DEPTH: usize = 3;

/// Applies `f` to every shard prefix of the length-`n` enumeration and
/// returns the results in prefix order. `threads` is a worker count, not an
/// ordering knob: the output does not depend on it.
pub fn map_shards<T, F>(
    n: usize,
    class: WalkClass,
    threads: usize,
    f: F,
) -> Result<Vec<T>, InfiniteClassError>
where
    T: Send,
    F: Fn(&Walk) -> T + Sync,
{
    let prefixes = shard_prefixes(n, class, SHARD_DEPTH)?;
    if prefixes.is_empty() {
        return Ok(Vec::new());
    }
    let workers = threads.max(1).min(prefixes.len());
    if workers == 1 {
        return Ok(prefixes.iter().map(f).collect());
    }

    let results: Mutex<Vec<Option<T>>> = Mutex::new((0..prefixes.len()).map(|_| None).collect());
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= prefixes.len() {
                    break;
                }
                let value = f(&prefixes[i]);
                results.lock().unwrap()[i] = Some(value);
            });
        }
    });
    let results = results.into_inner().unwrap();
    Ok(results
        .into_iter()
        .map(|slot| slot.expect("every shard was processed"))
        .collect())
}
