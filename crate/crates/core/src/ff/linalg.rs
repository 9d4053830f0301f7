//! Dense matrices over an [`Arith`] backend, stored as rows.

use super::arith::Arith;

/// Reduces `rows` in place to reduced row echelon form; returns pivot columns.
pub(crate) fn rref<A: Arith>(ar: &A, rows: &mut [Vec<u32>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = ar.inv(rows[r][c]);
        if inv != 1 {
            for x in rows[r].iter_mut() {
                *x = ar.mul(*x, inv);
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let f = ar.neg(row[c]);
            for (x, &y) in row.iter_mut().zip(&pivot_row).skip(c) {
                if y != 0 {
                    *x = ar.add(*x, ar.mul(f, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of `{v : M v = 0}`, one vector per free column, in column order.
pub(crate) fn kernel<A: Arith>(ar: &A, m: &[Vec<u32>], ncols: usize) -> Vec<Vec<u32>> {
    let mut rows = m.to_vec();
    let pivots = rref(ar, &mut rows, ncols);
    let mut is_pivot = vec![None; ncols];
    for (r, &c) in pivots.iter().enumerate() {
        is_pivot[c] = Some(r);
    }
    let mut basis = Vec::new();
    for free in 0..ncols {
        if is_pivot[free].is_some() {
            continue;
        }
        let mut v = vec![0u32; ncols];
        v[free] = 1;
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = ar.neg(rows[r][free]);
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
pub(crate) fn rank<A: Arith>(ar: &A, m: &[Vec<u32>], ncols: usize) -> usize {
    let mut rows = m.to_vec();
    rref(ar, &mut rows, ncols).len()
}

pub(crate) fn det<A: Arith>(ar: &A, m: &[Vec<u32>]) -> u32 {
    let n = m.len();
    let mut a = m.to_vec();
    let mut d = 1u32;
    for c in 0..n {
        let Some(pr) = (c..n).find(|&i| a[i][c] != 0) else {
            return 0;
        };
        if pr != c {
            a.swap(pr, c);
            d = ar.neg(d);
        }
        d = ar.mul(d, a[c][c]);
        let inv = ar.inv(a[c][c]);
        for i in c + 1..n {
            if a[i][c] == 0 {
                continue;
            }
            let f = ar.neg(ar.mul(a[i][c], inv));
            for j in c..n {
                let v = ar.mul(f, a[c][j]);
                a[i][j] = ar.add(a[i][j], v);
            }
        }
    }
    d
}

pub(crate) fn inverse<A: Arith>(ar: &A, m: &[Vec<u32>]) -> Option<Vec<Vec<u32>>> {
    let n = m.len();
    let mut aug: Vec<Vec<u32>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| u32::from(i == j)));
            r
        })
        .collect();
    let piv = rref(ar, &mut aug, n);
    if piv.len() < n || piv.iter().enumerate().any(|(i, &c)| i != c) {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Solves `A x = b` where `A` is given by its columns (each of length `rows`).
pub(crate) fn solve_columns<A: Arith>(ar: &A, cols: &[Vec<u32>], b: &[u32]) -> Option<Vec<u32>> {
    let ncols = cols.len();
    let nrows = b.len();
    let mut aug: Vec<Vec<u32>> = (0..nrows)
        .map(|i| {
            let mut r: Vec<u32> = cols.iter().map(|c| c[i]).collect();
            r.push(b[i]);
            r
        })
        .collect();
    let piv = rref(ar, &mut aug, ncols + 1);
    if piv.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![0u32; ncols];
    for (r, &c) in piv.iter().enumerate() {
        x[c] = aug[r][ncols];
    }
    Some(x)
}

#[cfg(test)]
pub(crate) fn matmul<A: Arith>(ar: &A, a: &[Vec<u32>], b: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let inner = b.len();
    let ncols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..ncols)
                .map(|j| {
                    (0..inner).fold(0, |acc, t| ar.add(acc, ar.mul(row[t], b[t][j])))
                })
                .collect()
        })
        .collect()
}
