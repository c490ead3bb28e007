//! Fixed workloads shared by the benchmarks.

use derivlie::partition::build_complex;
use derivlie::{BitMatrix, QbarMonomial, SparseMatrix};

/// The top boundary map of the partition complex on `n` points.
pub fn partition_boundary(n: usize) -> SparseMatrix {
    let pc = build_complex(n).expect("supported size");
    pc.complex().boundary(n - 1).clone()
}

/// Dense copy of [`partition_boundary`].
pub fn dense_partition_boundary(n: usize) -> BitMatrix {
    partition_boundary(n).to_dense()
}

/// Every monomial of length 2 or 3 with entries in `lo..=hi`, paired with
/// the degrees 2..=4.
pub fn monomial_grid(lo: u32, hi: u32) -> Vec<(QbarMonomial, u32)> {
    let mut out = Vec::new();
    for a in lo..=hi {
        for b in lo..=hi {
            for n in 2..=4 {
                out.push((QbarMonomial::new(vec![a, b]), n));
                out.push((QbarMonomial::new(vec![a, b, n + 1]), n));
            }
        }
    }
    out
}
