//! Data-parallel map over independent jobs (sites, bars).
//!
//! With the `parallel` feature the map runs on the rayon pool; without it, or
//! with [`Execution::Sequential`], it is a plain iterator map. Output order is
//! always the input order, so downstream min-reductions are deterministic.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Falls back to sequential when built without the `parallel` feature.
    #[default]
    Parallel,
}

impl Execution {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

pub(crate) fn map<T, R, F>(execution: Execution, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if execution.is_parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = execution;
    items.iter().map(f).collect()
}

/// Index of the smallest key, ties resolved to the lowest index.
pub(crate) fn argmin_by_key<T>(items: &[T], key: impl Fn(&T) -> f64) -> Option<usize> {
    let mut best: Option<(f64, usize)> = None;
    for (i, item) in items.iter().enumerate() {
        let k = key(item);
        if best.is_none_or(|(b, _)| k < b) {
            best = Some((k, i));
        }
    }
    best.map(|(_, i)| i)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_preserves_order() {
        let items: Vec<usize> = (0..100).collect();
        let seq = map(Execution::Sequential, &items, |x| x * 2);
        let par = map(Execution::Parallel, &items, |x| x * 2);
        assert_eq!(seq, par);
    }

    #[test]
    fn argmin_prefers_lowest_index() {
        assert_eq!(argmin_by_key(&[3.0, 1.0, 1.0], |x| *x), Some(1));
        assert_eq!(argmin_by_key::<f64>(&[], |x| *x), None);
    }
}
