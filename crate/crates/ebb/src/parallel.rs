//! Data-parallel map over independent work items.
//!
//! Sweeps, tomography probes, and verification batches are embarrassingly
//! parallel; [`map_collect`] runs them on the rayon pool when the `parallel`
//! feature is enabled and sequentially otherwise. [`map_collect_seq`] is
//! always sequential, kept callable so benchmarks can compare both paths.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub fn map_collect<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(&f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(&f).collect()
    }
}

pub fn map_collect_seq<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(&f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_paths_agree_and_preserve_order() {
        let items: Vec<u64> = (0..257).collect();
        let square = |x: &u64| x * x;
        assert_eq!(map_collect(&items, square), map_collect_seq(&items, square));
    }
}
