//! Execution-mode plumbing: every data-parallel kernel in the crate goes
//! through these helpers so that a run can be forced fully sequential at
//! runtime (reproducibility studies) or the `parallel` feature disabled at
//! compile time. All kernels are bitwise deterministic in either mode: work
//! is partitioned by output index and reductions are combined in index order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How the data-parallel kernels execute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExecMode {
    Sequential,
    #[default]
    Parallel,
}

impl ExecMode {
    pub fn is_parallel(self) -> bool {
        match self {
            ExecMode::Sequential => false,
            // degrade gracefully when rayon is compiled out
            ExecMode::Parallel => cfg!(feature = "parallel"),
        }
    }
}

/// Map `0..n` to a vector, preserving index order in the output.
pub fn map_indexed<R: Send>(
    mode: ExecMode,
    n: usize,
    f: impl Fn(usize) -> R + Sync + Send,
) -> Vec<R> {
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        return (0..n).into_par_iter().map(f).collect();
    }
    let _ = mode;
    (0..n).map(f).collect()
}

/// Apply `f` to disjoint chunks of `data`; `f` receives the chunk start index.
pub fn for_each_chunk<T: Send>(
    mode: ExecMode,
    data: &mut [T],
    chunk: usize,
    f: impl Fn(usize, &mut [T]) + Sync,
) {
    let chunk = chunk.max(1);
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        data.par_chunks_mut(chunk)
            .enumerate()
            .for_each(|(i, c)| f(i * chunk, c));
        return;
    }
    let _ = mode;
    for (i, c) in data.chunks_mut(chunk).enumerate() {
        f(i * chunk, c);
    }
}
