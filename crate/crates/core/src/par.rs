//! Order-preserving job fan-out: rayon when the `parallel` feature is on,
//! a plain loop otherwise.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Falls back to sequential when built without `parallel`.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

/// `jobs.iter().map(f)` with results in job order regardless of execution.
pub fn map_jobs<T, R, F>(exec: Execution, jobs: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            jobs.par_iter().map(f).collect()
        }
        _ => jobs.iter().map(f).collect(),
    }
}
