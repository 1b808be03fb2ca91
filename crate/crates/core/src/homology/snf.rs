//! Integer matrices and their Smith normal form.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Integer matrix stored by columns; each column sorted by row, no zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn new(rows: usize, mut cols: Vec<Vec<(usize, i64)>>) -> Self {
        for c in &mut cols {
            c.sort_unstable_by_key(|e| e.0);
            // merge repeated rows
            let mut merged: Vec<(usize, i64)> = Vec::with_capacity(c.len());
            for &(r, v) in c.iter() {
                assert!(r < rows, "row {r} out of range");
                match merged.last_mut() {
                    Some(last) if last.0 == r => last.1 += v,
                    _ => merged.push((r, v)),
                }
            }
            merged.retain(|e| e.1 != 0);
            *c = merged;
        }
        SparseMatrix { rows, cols }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols: vec![Vec::new(); cols],
        }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let cols = (0..ncols)
            .map(|j| {
                (0..nrows)
                    .filter(|&i| rows[i][j] != 0)
                    .map(|i| (i, rows[i][j]))
                    .collect()
            })
            .collect();
        SparseMatrix { rows: nrows, cols }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn columns(&self) -> &[Vec<(usize, i64)>] {
        &self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut d = vec![vec![0; self.cols.len()]; self.rows];
        for (j, c) in self.cols.iter().enumerate() {
            for &(i, v) in c {
                d[i][j] = v;
            }
        }
        d
    }

    /// `self * other`, exact.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols.len(), other.rows, "dimension mismatch");
        let cols = other
            .cols
            .iter()
            .map(|c| {
                let mut acc: HashMap<usize, i64> = HashMap::new();
                for &(k, v) in c {
                    for &(i, w) in &self.cols[k] {
                        *acc.entry(i).or_insert(0) += v * w;
                    }
                }
                acc.into_iter().collect()
            })
            .collect();
        SparseMatrix::new(self.rows, cols)
    }

    /// Row `i` moves to `row_perm[i]`, column `j` to `col_perm[j]`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> SparseMatrix {
        let mut cols = vec![Vec::new(); self.cols.len()];
        for (j, c) in self.cols.iter().enumerate() {
            cols[col_perm[j]] = c.iter().map(|&(i, v)| (row_perm[i], v)).collect();
        }
        SparseMatrix::new(self.rows, cols)
    }
}

const PHASE_ONE_LIMIT: i128 = 1 << 60;

/// Nonzero invariant factors `d_1 | d_2 | ...` of the Smith normal form.
pub fn invariant_factors(m: &SparseMatrix) -> Vec<BigInt> {
    let (units, residual) = eliminate_units(m);
    let mut diag = vec![BigInt::one(); units];
    diag.extend(diagonalize(residual));
    normalize(diag)
}

/// Rank over the integers (equivalently over the rationals).
pub fn rank(m: &SparseMatrix) -> usize {
    invariant_factors(m).len()
}

/// Pivots on entries of absolute value one, taking Schur complements.
/// Returns the number of pivots and the remaining dense block.
fn eliminate_units(m: &SparseMatrix) -> (usize, Vec<Vec<BigInt>>) {
    let mut cols: Vec<HashMap<usize, i128>> = m
        .cols
        .iter()
        .map(|c| c.iter().map(|&(r, v)| (r, v as i128)).collect())
        .collect();
    let mut rows: Vec<HashSet<usize>> = vec![HashSet::new(); m.rows];
    for (j, c) in cols.iter().enumerate() {
        for &r in c.keys() {
            rows[r].insert(j);
        }
    }
    let mut active: Vec<bool> = vec![true; cols.len()];
    let mut pivots = 0;
    let mut overflow = false;
    let mut progress = true;
    while progress && !overflow {
        progress = false;
        for c in 0..cols.len() {
            if !active[c] || cols[c].is_empty() {
                continue;
            }
            // unit entry whose row is sparsest
            let Some(r) = cols[c]
                .iter()
                .filter(|(_, v)| v.abs() == 1)
                .map(|(&r, _)| r)
                .min_by_key(|&r| (rows[r].len(), r))
            else {
                continue;
            };
            let u = cols[c][&r];
            let pivot_col: Vec<(usize, i128)> =
                cols[c].iter().map(|(&i, &v)| (i, v)).collect();
            let mut others: Vec<usize> = rows[r].iter().copied().filter(|&j| j != c).collect();
            others.sort_unstable();
            for j in others {
                let factor = cols[j][&r] * u;
                for &(i, v) in &pivot_col {
                    let entry = cols[j].entry(i).or_insert(0);
                    *entry -= factor * v;
                    if *entry == 0 {
                        cols[j].remove(&i);
                        rows[i].remove(&j);
                    } else {
                        if entry.abs() > PHASE_ONE_LIMIT {
                            overflow = true;
                        }
                        rows[i].insert(j);
                    }
                }
            }
            for &(i, _) in &pivot_col {
                rows[i].remove(&c);
            }
            cols[c].clear();
            active[c] = false;
            pivots += 1;
            progress = true;
            if overflow {
                break;
            }
        }
    }
    let live_cols: Vec<usize> = (0..cols.len()).filter(|&j| !cols[j].is_empty()).collect();
    let mut live_rows: Vec<usize> = live_cols
        .iter()
        .flat_map(|&j| cols[j].keys().copied())
        .collect();
    live_rows.sort_unstable();
    live_rows.dedup();
    let row_pos: HashMap<usize, usize> =
        live_rows.iter().enumerate().map(|(k, &r)| (r, k)).collect();
    let mut dense = vec![vec![BigInt::zero(); live_cols.len()]; live_rows.len()];
    for (k, &j) in live_cols.iter().enumerate() {
        for (&i, &v) in &cols[j] {
            dense[row_pos[&i]][k] = BigInt::from(v);
        }
    }
    (pivots, dense)
}

/// Diagonalizes a dense matrix by unimodular row and column operations,
/// pivoting on an entry of minimal absolute value. Returns the nonzero
/// diagonal (not yet in divisibility order).
fn diagonalize(mut m: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        let Some((pi, pj)) = min_entry(&m, t..nrows, t..ncols) else {
            break;
        };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..nrows {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = m[i][t].div_floor(&m[t][t]);
                for j in t..ncols {
                    let d = &q * &m[t][j];
                    m[i][j] -= d;
                }
                if !m[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..ncols {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = m[t][j].div_floor(&m[t][t]);
                for row in m.iter_mut().skip(t) {
                    let d = &q * &row[t];
                    row[j] -= d;
                }
                if !m[t][j].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
            // move the smallest remaining entry of row/column t to the pivot
            let mut best = (t, t);
            for i in t + 1..nrows {
                if !m[i][t].is_zero() && m[i][t].abs() < m[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t + 1..ncols {
                if !m[t][j].is_zero() && m[t][j].abs() < m[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            if best.0 != t {
                m.swap(t, best.0);
            } else if best.1 != t {
                for row in m.iter_mut() {
                    row.swap(t, best.1);
                }
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    diag
}

fn min_entry(
    m: &[Vec<BigInt>],
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            if m[i][j].is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if m[bi][bj].abs() <= m[i][j].abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Turns a diagonal into invariant factors by repeated gcd/lcm exchange.
fn normalize(mut diag: Vec<BigInt>) -> Vec<BigInt> {
    diag.retain(|d| !d.is_zero());
    let n = diag.len();
    for i in 0..n {
        for j in i + 1..n {
            let g = diag[i].gcd(&diag[j]);
            let l = diag[i].lcm(&diag[j]);
            diag[i] = g;
            diag[j] = l;
        }
    }
    diag
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factors(rows: &[Vec<i64>]) -> Vec<i64> {
        invariant_factors(&SparseMatrix::from_dense(rows))
            .into_iter()
            .map(|b| i64::try_from(b).unwrap())
            .collect()
    }

    #[test]
    fn textbook_examples() {
        assert_eq!(factors(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]), [2, 6, 12]);
        assert_eq!(factors(&[vec![2, 0], vec![0, 3]]), [1, 6]);
        assert_eq!(factors(&[vec![0, 0], vec![0, 0]]), Vec::<i64>::new());
        assert_eq!(factors(&[vec![4, 6]]), [2]);
    }

    #[test]
    fn unit_phase_and_residual_agree() {
        let m = vec![vec![1, 2, 0], vec![3, 4, 0], vec![0, 0, 5]];
        assert_eq!(factors(&m), [1, 1, 10]);
    }

    #[test]
    fn product_is_exact() {
        let a = SparseMatrix::from_dense(&[vec![1, 2], vec![0, 1]]);
        let b = SparseMatrix::from_dense(&[vec![1, -2], vec![0, 1]]);
        assert_eq!(a.mul(&b).to_dense(), vec![vec![1, 0], vec![0, 1]]);
    }
}
