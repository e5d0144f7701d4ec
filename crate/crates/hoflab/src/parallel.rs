//! Concurrent execution of the verification plan.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;
use std::time::Instant;

use hoflab_core::verify::{plan, CheckReport, RunConfig};

/// Runs every planned check on up to `jobs` threads. The result is in plan
/// order regardless of completion order.
pub fn run_all(config: &RunConfig, jobs: usize) -> Vec<CheckReport> {
    let planned = plan(config);
    let slots: Vec<Mutex<Option<CheckReport>>> = planned.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let workers = jobs.clamp(1, planned.len().max(1));
    thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(check) = planned.get(i) else { break };
                let start = Instant::now();
                let mut report = check.execute(config);
                report.elapsed = start.elapsed();
                *slots[i].lock().unwrap() = Some(report);
            });
        }
    });
    slots
        .into_iter()
        .map(|s| s.into_inner().unwrap().expect("every slot filled"))
        .collect()
}

/// Available hardware parallelism.
pub fn default_jobs() -> usize {
    thread::available_parallelism().map_or(1, |n| n.get())
}
