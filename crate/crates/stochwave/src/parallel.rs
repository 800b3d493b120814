//! Trial-parallel execution with deterministic aggregation.
//!
//! Monte Carlo trials are embarrassingly parallel: trial i owns random
//! stream i, and results are collected in trial order before any reduction.
//! Output is therefore bit-identical whether trials run on one thread, on a
//! rayon pool of any size, or with the `parallel` feature disabled.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Evaluates `f(0), f(1), ..., f(trials-1)` and collects the results in
/// index order. Runs on the rayon pool when the `parallel` feature is
/// enabled, sequentially otherwise.
pub fn run_trials<T, F>(trials: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync,
{
    #[cfg(feature = "parallel")]
    {
        (0..trials as u64).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..trials as u64).map(f).collect()
    }
}

/// Always-sequential twin of [`run_trials`], kept for benchmarking the two
/// paths against each other.
pub fn run_trials_serial<T, F>(trials: usize, f: F) -> Vec<T>
where
    F: Fn(u64) -> T,
{
    (0..trials as u64).map(f).collect()
}
