//! Deterministic reductions. All integral and series accumulations go
//! through a pairwise tree with a topology fixed by the input length alone,
//! so results are bitwise reproducible regardless of thread count.

use crate::dd::Dd;

const LEAF: usize = 64;

/// Pairwise tree sum with a fixed split topology.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    if xs.len() <= LEAF {
        let mut acc = 0.0;
        for &x in xs {
            acc += x;
        }
        return acc;
    }
    let mid = xs.len() / 2;
    pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
}

/// Same topology, accumulating each node in double-double. Used by the
/// extended-precision mode.
pub fn pairwise_sum_dd(xs: &[f64]) -> f64 {
    fn go(xs: &[f64]) -> Dd {
        if xs.len() <= LEAF {
            let mut acc = Dd::ZERO;
            for &x in xs {
                acc = acc.add_f64(x);
            }
            return acc;
        }
        let mid = xs.len() / 2;
        go(&xs[..mid]).add(go(&xs[mid..]))
    }
    go(xs).to_f64()
}

/// Accumulation mode selected by the CLI `--precision` flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Precision {
    #[default]
    F64,
    DoubleDouble,
}

impl Precision {
    pub fn sum(self, xs: &[f64]) -> f64 {
        match self {
            Precision::F64 => pairwise_sum(xs),
            Precision::DoubleDouble => pairwise_sum_dd(xs),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_naive_on_small_inputs() {
        let xs: Vec<f64> = (0..50).map(|i| (i as f64).sin()).collect();
        let naive: f64 = xs.iter().sum();
        assert_eq!(pairwise_sum(&xs), naive);
    }

    #[test]
    fn split_is_independent_of_chunk_presentation() {
        // same data, same topology: the tree depends only on the length
        let xs: Vec<f64> = (0..10_000).map(|i| 1.0 / (1.0 + i as f64)).collect();
        let a = pairwise_sum(&xs);
        let b = pairwise_sum(&xs);
        assert_eq!(a.to_bits(), b.to_bits());
    }

    #[test]
    fn dd_sum_is_more_accurate_on_cancellation() {
        let mut xs = vec![1e16, 1.0, -1e16, 1.0];
        xs.extend(std::iter::repeat(0.0).take(200));
        assert_eq!(pairwise_sum_dd(&xs), 2.0);
    }
}
