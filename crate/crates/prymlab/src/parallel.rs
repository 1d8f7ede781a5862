//! Execution helpers for the data-parallel inner loops.
//!
//! With the `parallel` feature (the default) [`map_indexed`] fans work out
//! over a rayon pool; without it the same call runs sequentially. Results
//! come back in index order either way, so every caller is deterministic.
//! [`map_indexed_seq`] is always sequential and exists so benchmarks can
//! compare both executors inside one binary.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    map_indexed_seq(n, f)
}

/// Sequential reference executor.
pub fn map_indexed_seq<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn executors_agree_and_preserve_order() {
        let square = |i: usize| i * i;
        assert_eq!(map_indexed(20, square), map_indexed_seq(20, square));
        assert_eq!(map_indexed(0, square), Vec::<usize>::new());
    }
}
