//! A rayon-backed [`Executor`].

use neighborly_core::Executor;
use rayon::prelude::*;
use rayon::{ThreadPool, ThreadPoolBuildError, ThreadPoolBuilder};

/// Runs jobs on a dedicated thread pool. Results keep input order, so the
/// output never depends on the schedule.
pub struct Parallel {
    pool: ThreadPool,
}

impl Parallel {
    /// `jobs = 0` uses one thread per available core.
    pub fn new(jobs: usize) -> Result<Parallel, ThreadPoolBuildError> {
        Ok(Parallel { pool: ThreadPoolBuilder::new().num_threads(jobs).build()? })
    }

    pub fn threads(&self) -> usize {
        self.pool.current_num_threads()
    }
}

impl Executor for Parallel {
    fn run<T, R, F>(&self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send,
    {
        self.pool.install(|| items.into_par_iter().map(f).collect())
    }
}
