//! Data-parallel helpers.
//!
//! With the `parallel` feature these run on the rayon pool that is current at
//! the call site; without it they fall back to plain iterators. Results are
//! always returned in input order.

pub use self::actual::{parallel_any, parallel_collect, parallel_filter_map};

#[cfg(feature = "parallel")]
mod actual {
    use rayon::prelude::*;

    /// Maps a slice into a vector, preserving order.
    pub fn parallel_collect<T, F, R>(source: &[T], map_op: F) -> Vec<R>
    where
        T: Sync,
        F: Fn(&T) -> R + Sync + Send,
        R: Send,
    {
        source.par_iter().map(map_op).collect()
    }

    pub fn parallel_filter_map<T, F, R>(source: &[T], map_op: F) -> Vec<R>
    where
        T: Sync,
        F: Fn(&T) -> Option<R> + Sync + Send,
        R: Send,
    {
        source.par_iter().filter_map(map_op).collect()
    }

    pub fn parallel_any<T, F>(source: &[T], pred: F) -> bool
    where
        T: Sync,
        F: Fn(&T) -> bool + Sync + Send,
    {
        source.par_iter().any(pred)
    }
}

#[cfg(not(feature = "parallel"))]
mod actual {
    pub fn parallel_collect<T, F, R>(source: &[T], map_op: F) -> Vec<R>
    where
        T: Sync,
        F: Fn(&T) -> R + Sync + Send,
        R: Send,
    {
        source.iter().map(map_op).collect()
    }

    pub fn parallel_filter_map<T, F, R>(source: &[T], map_op: F) -> Vec<R>
    where
        T: Sync,
        F: Fn(&T) -> Option<R> + Sync + Send,
        R: Send,
    {
        source.iter().filter_map(map_op).collect()
    }

    pub fn parallel_any<T, F>(source: &[T], pred: F) -> bool
    where
        T: Sync,
        F: Fn(&T) -> bool + Sync + Send,
    {
        source.iter().any(pred)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let xs: Vec<u32> = (0..1000).collect();
        let ys = parallel_collect(&xs, |x| x * 2);
        assert_eq!(ys, xs.iter().map(|x| x * 2).collect::<Vec<_>>());
        let odd = parallel_filter_map(&xs, |x| (x % 2 == 1).then_some(*x));
        assert_eq!(odd.len(), 500);
        assert!(odd.windows(2).all(|w| w[0] < w[1]));
        assert!(parallel_any(&xs, |x| *x == 999));
    }
}
