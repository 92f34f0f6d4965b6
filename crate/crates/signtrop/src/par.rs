//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (on by default) [`Exec::Parallel`] dispatches
//! to rayon; without it every helper runs sequentially.  All helpers return
//! results in input order, so outcomes never depend on the schedule.

/// Execution policy for the data-parallel helpers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

/// Maps `f` over `items`, preserving order.
pub fn map<T, R, F>(items: &[T], exec: Exec, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}

/// The first (in input order) `Some` produced by `f`.
pub fn find_map_first<T, R, F>(items: &[T], exec: Exec, f: F) -> Option<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => {
            use rayon::prelude::*;
            items.par_iter().find_map_first(f)
        }
        _ => items.iter().find_map(f),
    }
}

/// Whether `f` holds for every item.
pub fn all<T, F>(items: &[T], exec: Exec, f: F) -> bool
where
    T: Sync,
    F: Fn(&T) -> bool + Sync + Send,
{
    find_map_first(items, exec, |x| if f(x) { None } else { Some(()) }).is_none()
}

/// Sets the number of worker threads of the global pool.  Has no effect
/// without the `parallel` feature.  Fails if the pool was already built.
pub fn configure_threads(threads: usize) -> Result<(), String> {
    #[cfg(feature = "parallel")]
    {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| e.to_string())
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = threads;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequential_and_parallel_agree() {
        let v: Vec<u64> = (0..1000).collect();
        for exec in [Exec::Sequential, Exec::Parallel] {
            assert_eq!(map(&v, exec, |x| x * x)[999], 998001);
            assert_eq!(find_map_first(&v, exec, |&x| (x % 7 == 6).then_some(x)), Some(6));
            assert!(all(&v, exec, |&x| x < 1000));
            assert!(!all(&v, exec, |&x| x < 999));
        }
    }
}
