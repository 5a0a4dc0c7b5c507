//! Data-parallel map over independent work items (graded pieces, cube
//! vertices). Runs on rayon when the `parallel` feature is enabled and the
//! runtime switch is on; otherwise sequentially. Output order always
//! follows input order.

use std::sync::atomic::{AtomicBool, Ordering};

static PARALLEL: AtomicBool = AtomicBool::new(true);

/// Turns the rayon path on or off at runtime (no effect without the feature).
pub fn set_parallel(on: bool) {
    PARALLEL.store(on, Ordering::Relaxed);
}

pub fn parallel_enabled() -> bool {
    cfg!(feature = "parallel") && PARALLEL.load(Ordering::Relaxed)
}

pub fn par_map<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel_enabled() {
        use rayon::prelude::*;
        return items.into_par_iter().map(f).collect();
    }
    items.into_iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let v: Vec<u64> = (0..100).collect();
        let a = par_map(v.clone(), |x| x * x);
        assert_eq!(a, v.iter().map(|x| x * x).collect::<Vec<_>>());
    }
}
