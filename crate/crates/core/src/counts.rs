//! Enumeration of packed-matrix shells and the counting series built on them.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::Result;
use crate::limits::Limits;
use crate::matrices::{Matrix, PackedMatrix};

/// Coefficients of a truncated integer power series, index = weight.
pub type IntSeries = Vec<BigInt>;

type ShellCache = OnceLock<Mutex<HashMap<u64, Arc<Vec<PackedMatrix>>>>>;

/// All packed matrices of weight `n`, in canonical order.
pub fn enumerate_pack(n: u64, limits: &Limits) -> Result<Arc<Vec<PackedMatrix>>> {
    limits.check_shell("max-weight", n)?;
    static CACHE: ShellCache = OnceLock::new();
    Ok(shell(&CACHE, n, n))
}

/// [`enumerate_pack`] without the shell cache.
pub fn enumerate_pack_uncached(n: u64, limits: &Limits) -> Result<Vec<PackedMatrix>> {
    limits.check_shell("max-weight", n)?;
    Ok(build_shell(n, n))
}

/// All packed 0/1 matrices with exactly `n` ones, in canonical order.
///
/// These are the supports of the packed matrices whose reading word has
/// length `n`.
pub fn packed_supports(n: u64, limits: &Limits) -> Result<Arc<Vec<PackedMatrix>>> {
    limits.check_shell("max-weight", n)?;
    static CACHE: ShellCache = OnceLock::new();
    Ok(shell(&CACHE, n, 1))
}

fn shell(cache: &'static ShellCache, n: u64, max_entry: u64) -> Arc<Vec<PackedMatrix>> {
    let map = cache.get_or_init(Default::default);
    if let Some(v) = map.lock().unwrap().get(&n) {
        return Arc::clone(v);
    }
    let v = Arc::new(build_shell(n, max_entry));
    Arc::clone(map.lock().unwrap().entry(n).or_insert(v))
}

fn build_shell(n: u64, max_entry: u64) -> Vec<PackedMatrix> {
    if n == 0 {
        return vec![PackedMatrix::empty()];
    }
    let n = n as usize;
    let shapes: Vec<(usize, usize)> = (1..=n).flat_map(|k| (1..=n).map(move |l| (k, l))).collect();
    let mut out: Vec<PackedMatrix> = shapes
        .par_iter()
        .flat_map_iter(|&(k, l)| fill_shape(k, l, n as u64, max_entry))
        .collect();
    out.sort();
    out
}

struct Filler {
    rows: usize,
    cols: usize,
    max_entry: u64,
    grid: Vec<u64>,
    col_sums: Vec<u64>,
    zero_cols: usize,
    out: Vec<PackedMatrix>,
}

fn fill_shape(rows: usize, cols: usize, weight: u64, max_entry: u64) -> Vec<PackedMatrix> {
    let mut f = Filler {
        rows,
        cols,
        max_entry,
        grid: vec![0; rows * cols],
        col_sums: vec![0; cols],
        zero_cols: cols,
        out: Vec::new(),
    };
    f.cell(0, weight, 0);
    f.out
}

impl Filler {
    // `left` is the weight still to place; `row_sum` the running sum of the current row.
    fn cell(&mut self, idx: usize, left: u64, row_sum: u64) {
        if idx == self.rows * self.cols {
            if left == 0 && self.zero_cols == 0 {
                let m = Matrix::from_parts_unchecked(self.rows, self.cols, self.grid.clone());
                self.out.push(PackedMatrix::new_unchecked(m));
            }
            return;
        }
        let (i, j) = (idx / self.cols, idx % self.cols);
        let last_col = j + 1 == self.cols;
        let rows_after = (self.rows - i - 1) as u64;
        for v in 0..=left.min(self.max_entry) {
            if last_col && row_sum + v == 0 {
                continue;
            }
            let opens = v > 0 && self.col_sums[j] == 0;
            let zero_after = (self.zero_cols - usize::from(opens)) as u64;
            // Each later row and each empty column still needs a unit.
            if left - v < rows_after.max(zero_after) {
                continue;
            }
            self.grid[idx] = v;
            self.col_sums[j] += v;
            if opens {
                self.zero_cols -= 1;
            }
            let next = if last_col { 0 } else { row_sum + v };
            self.cell(idx + 1, left - v, next);
            if opens {
                self.zero_cols += 1;
            }
            self.col_sums[j] -= v;
            self.grid[idx] = 0;
        }
    }
}

/// `|Pack_n|` for `n = 0..=upto`.
pub fn count_pack(upto: u64, limits: &Limits) -> Result<IntSeries> {
    limits.check_shell("max-weight", upto)?;
    (0..=upto)
        .map(|n| Ok(BigInt::from(enumerate_pack(n, limits)?.len())))
        .collect()
}

/// `P` with `D = 1/(1 - P)`, `D` the `|Pack_n|` series; index 0 is 0.
pub fn primitive_dims(upto: u64, limits: &Limits) -> Result<IntSeries> {
    let d = count_pack(upto, limits)?;
    Ok(primitives_from(&d))
}

/// `P = 1 - 1/D` for a series with `D_0 = 1`.
pub fn primitives_from(d: &[BigInt]) -> IntSeries {
    // Inverse series: inv_0 = 1, inv_n = -Σ_{k=1}^{n} d_k inv_{n-k}.
    let mut inv: Vec<BigInt> = Vec::with_capacity(d.len());
    for n in 0..d.len() {
        if n == 0 {
            inv.push(BigInt::one());
            continue;
        }
        let s: BigInt = (1..=n).map(|k| &d[k] * &inv[n - k]).sum();
        inv.push(-s);
    }
    inv.iter()
        .enumerate()
        .map(|(n, c)| if n == 0 { BigInt::zero() } else { -c })
        .collect()
}

/// `g` with `D = Π_{n≥1} (1 - t^n)^{-g_n}`, `D` the `|Pack_n|` series; index 0 is 0.
pub fn generator_counts(upto: u64, limits: &Limits) -> Result<IntSeries> {
    let d = count_pack(upto, limits)?;
    Ok(generators_from(&d))
}

/// Inverse Euler transform: `n d_n = Σ_{k=1}^{n} c_k d_{n-k}` with
/// `c_k = Σ_{e | k} e g_e`.
pub fn generators_from(d: &[BigInt]) -> IntSeries {
    let len = d.len();
    let mut c = vec![BigInt::zero(); len];
    let mut g = vec![BigInt::zero(); len];
    for n in 1..len {
        let s: BigInt = (1..n).map(|k| &c[k] * &d[n - k]).sum();
        c[n] = BigInt::from(n) * &d[n] - s;
        let divisors: BigInt = (1..n)
            .filter(|e| n % e == 0)
            .map(|e| BigInt::from(e) * &g[e])
            .sum();
        let (q, r) = (&c[n] - divisors).div_rem(&BigInt::from(n));
        debug_assert!(r.is_zero(), "non-integral generator count at {n}");
        g[n] = q;
    }
    g
}

/// `q_n`: the number of packed matrices with exactly `n` nonzero entries.
pub fn count_qn(n: u64, limits: &Limits) -> Result<BigInt> {
    Ok(BigInt::from(packed_supports(n, limits)?.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopfpack::is_indecomposable;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    // Independent oracle: every grid with entries in 0..=n of every shape.
    fn brute_pack(n: u64) -> Vec<PackedMatrix> {
        let mut out = Vec::new();
        if n == 0 {
            return vec![PackedMatrix::empty()];
        }
        for k in 1..=n as usize {
            for l in 1..=n as usize {
                let cells = k * l;
                let base = n + 1;
                let total = base.pow(cells as u32);
                for code in 0..total {
                    let mut c = code;
                    let mut e = Vec::with_capacity(cells);
                    for _ in 0..cells {
                        e.push(c % base);
                        c /= base;
                    }
                    if e.iter().sum::<u64>() != n {
                        continue;
                    }
                    let m = Matrix::new(k, l, e).unwrap();
                    if m.is_packed() {
                        out.push(PackedMatrix::new(m).unwrap());
                    }
                }
            }
        }
        out.sort();
        out
    }

    #[test]
    fn shells_match_brute_force() {
        let lim = Limits::default();
        for n in 0..=3 {
            assert_eq!(*enumerate_pack(n, &lim).unwrap(), brute_pack(n), "n = {n}");
        }
    }

    #[test]
    fn shell_examples() {
        let lim = Limits::default();
        let two: Vec<String> = enumerate_pack(2, &lim)
            .unwrap()
            .iter()
            .map(|m| m.to_string())
            .collect();
        assert_eq!(two, ["[2]", "[1 1]", "[1;1]", "[0 1;1 0]", "[1 0;0 1]"]);
        assert_eq!(enumerate_pack(3, &lim).unwrap().len(), 33);
        assert_eq!(count_pack(4, &lim).unwrap(), big(&[1, 1, 5, 33, 281]));
        let tight = Limits {
            max_weight: 3,
            ..Limits::default()
        };
        assert!(enumerate_pack(4, &tight).is_err());
    }

    #[test]
    fn series_transforms() {
        let d = big(&[1, 1, 5, 33, 281, 2961]);
        assert_eq!(primitives_from(&d), big(&[0, 1, 4, 24, 204, 2224]));
        assert_eq!(generators_from(&d), big(&[0, 1, 4, 28, 238, 2568]));
        // The partition numbers are the Euler transform of all ones.
        let partitions = big(&[1, 1, 2, 3, 5, 7, 11, 15]);
        assert_eq!(generators_from(&partitions), big(&[0, 1, 1, 1, 1, 1, 1, 1]));
    }

    #[test]
    fn primitives_are_indecomposables() {
        let lim = Limits::default();
        let p = primitive_dims(4, &lim).unwrap();
        for n in 1..=4 {
            let count = enumerate_pack(n, &lim)
                .unwrap()
                .iter()
                .filter(|m| is_indecomposable(m))
                .count();
            assert_eq!(BigInt::from(count), p[n as usize], "n = {n}");
        }
    }

    #[test]
    fn qn_small() {
        let lim = Limits::default();
        let q: Vec<BigInt> = (1..=4).map(|n| count_qn(n, &lim).unwrap()).collect();
        assert_eq!(q, big(&[1, 4, 24, 196]));
        // Supports are exactly the 0/1 members of the weight shell.
        for n in 1..=4 {
            let ones: Vec<PackedMatrix> = enumerate_pack(n, &lim)
                .unwrap()
                .iter()
                .filter(|m| m.max_entry() == 1)
                .cloned()
                .collect();
            assert_eq!(*packed_supports(n, &lim).unwrap(), ones);
        }
    }
}
