//! Shared fixtures for the benchmarks.

use packmat::counts::enumerate_pack;
use packmat::{Limits, PackedMatrix};

/// The `n × n` identity pattern scaled by `a`, e.g. `[a 0;0 a]`.
pub fn scaled_identity(n: usize, a: u64) -> PackedMatrix {
    let rows: Vec<Vec<u64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { a } else { 0 }).collect())
        .collect();
    PackedMatrix::from_rows(&rows).expect("diagonal matrices are packed")
}

/// A dense matrix with entries `1..=rows*cols` in reading order.
pub fn dense(rows: usize, cols: usize) -> PackedMatrix {
    let grid: Vec<Vec<u64>> = (0..rows)
        .map(|i| (0..cols).map(|j| (i * cols + j + 1) as u64).collect())
        .collect();
    PackedMatrix::from_rows(&grid).expect("positive entries are packed")
}

/// Every packed matrix of weight `n`.
pub fn shell(n: u64) -> Vec<PackedMatrix> {
    enumerate_pack(n, &Limits::default())
        .expect("within the default weight guard")
        .to_vec()
}
