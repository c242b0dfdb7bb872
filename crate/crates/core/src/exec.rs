//! Fan-out helpers: data-parallel with rayon by default, with an explicit
//! sequential code path kept alive for benchmarking and for builds without
//! the `parallel` feature.

/// Map `f` over `items`, in parallel when the `parallel` feature is on.
#[cfg(feature = "parallel")]
pub fn map_values<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(&f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_values<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(&f).collect()
}

/// Sequential mapper, always available; the benchmark suite compares this
/// against [`map_values`] on the same workload.
pub fn map_values_seq<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(&f).collect()
}
