//! Fixed-width parallel execution with results merged by task name.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

pub type Job<'a, T> = Box<dyn FnOnce() -> T + Send + 'a>;

type Slot<'a, T> = Mutex<Option<(String, Job<'a, T>)>>;

/// Runs every job on at most `width` threads; the result map is keyed by task name,
/// so the merge order does not depend on scheduling. Names must be unique.
pub fn run_named<'a, T: Send>(width: usize, jobs: Vec<(String, Job<'a, T>)>) -> BTreeMap<String, T> {
    let n = jobs.len();
    let slots: Vec<Slot<'a, T>> = jobs.into_iter().map(|j| Mutex::new(Some(j))).collect();
    let results = Mutex::new(BTreeMap::new());
    let next = AtomicUsize::new(0);
    let worker = || loop {
        let i = next.fetch_add(1, Ordering::Relaxed);
        if i >= n {
            break;
        }
        let (name, job) = slots[i].lock().unwrap().take().expect("each job runs once");
        let out = job();
        let prev = results.lock().unwrap().insert(name.clone(), out);
        assert!(prev.is_none(), "duplicate task name {name}");
    };
    let width = width.max(1).min(n.max(1));
    if width == 1 {
        worker();
    } else {
        std::thread::scope(|s| {
            for _ in 0..width {
                s.spawn(worker);
            }
        });
    }
    results.into_inner().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merge_is_independent_of_width() {
        let mk = || -> Vec<(String, Job<'static, u64>)> {
            (0..40u64).map(|i| (format!("t{i:02}"), Box::new(move || i * i) as Job<'static, u64>)).collect()
        };
        let a = run_named(1, mk());
        let b = run_named(7, mk());
        assert_eq!(a, b);
        assert_eq!(a.len(), 40);
        assert!(run_named::<u64>(4, vec![]).is_empty());
    }
}
