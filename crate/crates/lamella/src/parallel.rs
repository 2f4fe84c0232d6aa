//! Thin switch between rayon and sequential execution.
//!
//! All hot loops in the crate are index-wise maps collected in input order,
//! so results are bit-identical regardless of thread count or feature set.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Execution mode for data-parallel loops.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Parallelism {
    /// Use rayon when the `parallel` feature is enabled, otherwise run
    /// sequentially.
    #[default]
    Auto,
    /// Force sequential execution (used by the benchmark baseline).
    Sequential,
}

/// Maps `f` over `items`, preserving order.
pub fn map_slice<T: Sync, U: Send, F>(mode: Parallelism, items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U + Sync + Send,
{
    match mode {
        #[cfg(feature = "parallel")]
        Parallelism::Auto => items.par_iter().map(f).collect(),
        #[cfg(not(feature = "parallel"))]
        Parallelism::Auto => items.iter().map(f).collect(),
        Parallelism::Sequential => items.iter().map(f).collect(),
    }
}

/// Maps `f` over an index range, preserving order.
pub fn map_range<U: Send, F>(mode: Parallelism, n: usize, f: F) -> Vec<U>
where
    F: Fn(usize) -> U + Sync + Send,
{
    match mode {
        #[cfg(feature = "parallel")]
        Parallelism::Auto => (0..n).into_par_iter().map(f).collect(),
        #[cfg(not(feature = "parallel"))]
        Parallelism::Auto => (0..n).map(f).collect(),
        Parallelism::Sequential => (0..n).map(f).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let items: Vec<u64> = (0..1000).collect();
        let a = map_slice(Parallelism::Auto, &items, |x| x * x + 1);
        let b = map_slice(Parallelism::Sequential, &items, |x| x * x + 1);
        assert_eq!(a, b);
        let c = map_range(Parallelism::Auto, 100, |i| i as u64 * 3);
        let d = map_range(Parallelism::Sequential, 100, |i| i as u64 * 3);
        assert_eq!(c, d);
    }
}
