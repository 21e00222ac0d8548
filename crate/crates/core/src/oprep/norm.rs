use std::collections::{BTreeMap, HashMap, VecDeque};

use nalgebra::{ComplexField, DMatrix};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::matrix::SparseMatrix;

/// Up to this many columns (or rows) a block's norm comes from a dense eigensolve.
pub const DENSE_NORM_MAX: usize = 512;

const SEED: u64 = 0x005e_ed0f_0a71;

type Columns<T> = Vec<Vec<(usize, T)>>;

/// Largest singular value. The matrix is split into the connected
/// components of its row/column graph; each block is made real by a
/// diagonal unitary change of basis when one exists, then handled by a
/// dense eigensolve or by Lanczos on `A* A`.
pub fn op_norm(m: &SparseMatrix) -> f64 {
    if m.nnz() == 0 {
        return 0.0;
    }
    if let Some(d) = m.as_diagonal() {
        return d.iter().map(|v| v.norm()).fold(0.0, f64::max);
    }
    components(m)
        .iter()
        .map(|(rows, cols)| block_norm(m, rows, cols))
        .fold(0.0, f64::max)
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Connected components of the bipartite row/column graph of the nonzeros.
fn components(m: &SparseMatrix) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut parent: Vec<usize> = (0..m.cols + m.rows).collect();
    for (j, col) in m.columns.iter().enumerate() {
        for &(i, _) in col {
            let (a, b) = (find(&mut parent, j), find(&mut parent, m.cols + i));
            if a != b {
                parent[a] = b;
            }
        }
    }
    let mut groups: BTreeMap<usize, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
    for (j, col) in m.columns.iter().enumerate() {
        if !col.is_empty() {
            let r = find(&mut parent, j);
            groups.entry(r).or_default().1.push(j);
        }
    }
    let mut row_seen = vec![false; m.rows];
    for col in &m.columns {
        for &(i, _) in col {
            if !row_seen[i] {
                row_seen[i] = true;
                let r = find(&mut parent, m.cols + i);
                groups.entry(r).or_default().0.push(i);
            }
        }
    }
    groups.into_values().collect()
}

fn block_norm(m: &SparseMatrix, rows: &[usize], cols: &[usize]) -> f64 {
    let index: HashMap<usize, usize> = rows.iter().enumerate().map(|(k, &i)| (i, k)).collect();
    let columns: Columns<Complex64> = cols
        .iter()
        .map(|&j| m.columns[j].iter().map(|&(i, v)| (index[&i], v)).collect())
        .collect();
    match realify(rows.len(), &columns) {
        Some(real) => norm_of(rows.len(), &real),
        None => norm_of(rows.len(), &columns),
    }
}

/// Diagonal unitaries `U`, `V` with `V* A U` real, found along a spanning
/// tree and checked on every entry. `None` when the phases have holonomy.
fn realify(rows: usize, columns: &Columns<Complex64>) -> Option<Columns<f64>> {
    if columns.iter().flatten().all(|(_, v)| v.im == 0.0) {
        return Some(
            columns
                .iter()
                .map(|c| c.iter().map(|&(i, v)| (i, v.re)).collect())
                .collect(),
        );
    }
    let unit = |z: Complex64| z / z.norm();
    let mut by_row: Vec<Vec<(usize, Complex64)>> = vec![Vec::new(); rows];
    for (j, col) in columns.iter().enumerate() {
        for &(i, v) in col {
            by_row[i].push((j, v));
        }
    }
    let mut u: Vec<Option<Complex64>> = vec![None; columns.len()];
    let mut w: Vec<Option<Complex64>> = vec![None; rows];
    u[0] = Some(Complex64::new(1.0, 0.0));
    let mut queue = VecDeque::from([(true, 0usize)]);
    while let Some((is_col, k)) = queue.pop_front() {
        if is_col {
            let uk = u[k].unwrap();
            for &(i, v) in &columns[k] {
                if w[i].is_none() {
                    w[i] = Some(unit(v * uk));
                    queue.push_back((false, i));
                }
            }
        } else {
            let wk = w[k].unwrap();
            for &(j, v) in &by_row[k] {
                if u[j].is_none() {
                    u[j] = Some(unit(v.conj()) * wk);
                    queue.push_back((true, j));
                }
            }
        }
    }
    let mut out = Vec::with_capacity(columns.len());
    for (j, col) in columns.iter().enumerate() {
        if col.is_empty() {
            out.push(Vec::new());
            continue;
        }
        let uj = u[j]?;
        let mut c = Vec::with_capacity(col.len());
        for &(i, v) in col {
            let z = w[i]?.conj() * v * uj;
            if z.im.abs() > 1e-14 * v.norm() {
                return None;
            }
            c.push((i, z.re));
        }
        out.push(c);
    }
    Some(out)
}

fn norm_of<T: ComplexField<RealField = f64> + Copy>(rows: usize, columns: &Columns<T>) -> f64 {
    if columns.len() <= DENSE_NORM_MAX || rows <= DENSE_NORM_MAX {
        dense_norm(rows, columns)
    } else {
        lanczos_norm(rows, columns, SEED)
    }
}

/// Top eigenvalue of the smaller Gram matrix, assembled from the sparse entries.
fn dense_norm<T: ComplexField<RealField = f64> + Copy>(rows: usize, columns: &Columns<T>) -> f64 {
    let mut by_row: Columns<T> = vec![Vec::new(); rows];
    for (j, col) in columns.iter().enumerate() {
        for &(i, v) in col {
            by_row[i].push((j, v));
        }
    }
    // Entries sharing a row contribute to A*A; entries sharing a column to AA*.
    let (lists, n) = if columns.len() <= rows {
        (&by_row, columns.len())
    } else {
        (columns, rows)
    };
    let mut g = DMatrix::<T>::zeros(n, n);
    for list in lists {
        for &(i, x) in list {
            for &(j, y) in list {
                g[(i, j)] += x.conjugate() * y;
            }
        }
    }
    g.symmetric_eigenvalues()
        .iter()
        .cloned()
        .fold(0.0, f64::max)
        .max(0.0)
        .sqrt()
}

fn matvec<T: ComplexField<RealField = f64> + Copy>(
    rows: usize,
    columns: &Columns<T>,
    x: &[T],
) -> Vec<T> {
    let mut y = vec![T::zero(); rows];
    for (col, &xj) in columns.iter().zip(x) {
        for &(i, v) in col {
            y[i] += v * xj;
        }
    }
    y
}

fn adj_matvec<T: ComplexField<RealField = f64> + Copy>(columns: &Columns<T>, y: &[T]) -> Vec<T> {
    columns
        .iter()
        .map(|col| {
            col.iter()
                .fold(T::zero(), |acc, &(i, v)| acc + v.conjugate() * y[i])
        })
        .collect()
}

fn dot<T: ComplexField<RealField = f64> + Copy>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (&x, &y)| acc + x.conjugate() * y)
}

fn vnorm<T: ComplexField<RealField = f64> + Copy>(a: &[T]) -> f64 {
    a.iter().map(|x| x.modulus_squared()).sum::<f64>().sqrt()
}

/// Number of eigenvalues of the symmetric tridiagonal `(a, b)` below `x`.
fn sturm_count(a: &[f64], b: &[f64], x: f64) -> usize {
    let mut count = 0;
    let mut d = 1.0;
    for i in 0..a.len() {
        let off = if i == 0 { 0.0 } else { b[i - 1] * b[i - 1] };
        d = a[i] - x - off / d;
        if d == 0.0 {
            d = -f64::EPSILON * (a[i].abs() + x.abs()).max(f64::MIN_POSITIVE);
        }
        if d < 0.0 {
            count += 1;
        }
    }
    count
}

/// Largest eigenvalue of a symmetric tridiagonal matrix by bisection, and
/// the modulus of the last entry of its unit eigenvector by inverse iteration.
fn top_tridiagonal(a: &[f64], b: &[f64]) -> (f64, f64) {
    let k = a.len();
    let radius = |i: usize| {
        (if i > 0 { b[i - 1].abs() } else { 0.0 }) + (if i + 1 < k { b[i].abs() } else { 0.0 })
    };
    let mut lo = (0..k)
        .map(|i| a[i] - radius(i))
        .fold(f64::INFINITY, f64::min);
    let mut hi = (0..k)
        .map(|i| a[i] + radius(i))
        .fold(f64::NEG_INFINITY, f64::max);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if sturm_count(a, &b[..k - 1], mid) == k {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let theta = hi;
    if k == 1 {
        return (theta, 1.0);
    }
    let shift = theta + 4.0 * f64::EPSILON * theta.abs().max(1.0);
    let mut y = vec![1.0; k];
    for _ in 0..3 {
        // Thomas algorithm on (T - shift) z = y.
        let mut c = vec![0.0; k];
        let mut d = vec![0.0; k];
        for i in 0..k {
            let mut piv = a[i] - shift - if i > 0 { b[i - 1] * c[i - 1] } else { 0.0 };
            if piv.abs() < f64::MIN_POSITIVE {
                piv = f64::MIN_POSITIVE;
            }
            c[i] = if i + 1 < k { b[i] / piv } else { 0.0 };
            d[i] = (y[i] - if i > 0 { b[i - 1] * d[i - 1] } else { 0.0 }) / piv;
        }
        for i in (0..k - 1).rev() {
            d[i] -= c[i] * d[i + 1];
        }
        let n = d.iter().map(|x| x * x).sum::<f64>().sqrt();
        y = d.into_iter().map(|x| x / n).collect();
    }
    (theta, y[k - 1].abs())
}

/// Lanczos on `A* A` with full reorthogonalization. Every 8 steps the top
/// Ritz pair is checked: stop once its residual is below `1e-13` relative,
/// or once the Ritz value has moved by at most `1e-14` relative over two
/// consecutive checks. Ritz values increase monotonically toward the top
/// eigenvalue, so the second test catches clustered spectra early.
fn lanczos_norm<T: ComplexField<RealField = f64> + Copy>(
    rows: usize,
    columns: &Columns<T>,
    seed: u64,
) -> f64 {
    let n = columns.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut v: Vec<T> = (0..n)
        .map(|_| T::from_real(rng.random::<f64>() - 0.5))
        .collect();
    let nv = vnorm(&v);
    v.iter_mut().for_each(|x| *x = x.unscale(nv));
    let mut basis: Vec<Vec<T>> = vec![v];
    let mut alpha: Vec<f64> = Vec::new();
    let mut beta: Vec<f64> = Vec::new();
    let max_iter = n.min(400);
    let mut best: f64 = 0.0;
    let mut still = 0;
    for j in 0..max_iter {
        let vj = &basis[j];
        let mut w = adj_matvec(columns, &matvec(rows, columns, vj));
        alpha.push(dot(vj, &w).real());
        for _ in 0..2 {
            for b in &basis {
                let p = dot(b, &w);
                w.iter_mut().zip(b).for_each(|(x, &y)| *x -= p * y);
            }
        }
        let bnorm = vnorm(&w);
        let k = alpha.len();
        if !k.is_multiple_of(8) && bnorm >= 1e-14 && j + 1 < max_iter {
            beta.push(bnorm);
            basis.push(w.into_iter().map(|x| x.unscale(bnorm)).collect());
            continue;
        }
        let (theta, last) = top_tridiagonal(&alpha, &beta);
        let scale = theta.abs().max(1e-300);
        still = if (theta - best).abs() <= 1e-14 * scale {
            still + 1
        } else {
            0
        };
        best = theta;
        let resid = bnorm * last;
        if resid <= 1e-13 * scale || still >= 2 || bnorm < 1e-14 {
            break;
        }
        beta.push(bnorm);
        basis.push(w.into_iter().map(|x| x.unscale(bnorm)).collect());
    }
    best.max(0.0).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn random(rng: &mut ChaCha8Rng, n: usize, density: f64) -> SparseMatrix {
        let mut d = DMatrix::<Complex64>::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                if rng.random::<f64>() < density {
                    d[(i, j)] =
                        Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5);
                }
            }
        }
        SparseMatrix::from_dense(&d)
    }

    fn svd_norm(m: &SparseMatrix) -> f64 {
        m.to_dense().singular_values().max()
    }

    #[test]
    fn lanczos_agrees_with_dense() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let m = random(&mut rng, 60, 0.2);
        let a = dense_norm(m.rows, &m.columns);
        let b = lanczos_norm(m.rows, &m.columns, 3);
        assert!((a - b).abs() <= 1e-10 * a, "{a} {b}");
        assert!((a - svd_norm(&m)).abs() <= 1e-12 * a);
    }

    #[test]
    fn block_split_and_gauge_preserve_norm() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let a = random(&mut rng, 12, 0.3);
        let b = random(&mut rng, 9, 0.4);
        let z = |r, c| SparseMatrix::zeros(r, c);
        let m =
            SparseMatrix::block(&[vec![a.clone(), z(12, 9)], vec![z(9, 12), b.clone()]]).unwrap();
        assert_eq!(components(&m).len(), 2);
        let want = svd_norm(&a).max(svd_norm(&b));
        assert!((op_norm(&m) - want).abs() <= 1e-12 * want);
        // A weighted shift with phases is gauge-equivalent to a real one.
        let n = 20;
        let mut d = DMatrix::<Complex64>::zeros(n, n);
        for k in 0..n - 1 {
            d[(k + 1, k)] = Complex64::from_polar(1.0 + k as f64 / n as f64, 0.7 * k as f64);
            d[(k, k)] = Complex64::from_polar(0.5, 1.3);
        }
        let s = SparseMatrix::from_dense(&d);
        assert!(realify(s.rows, &s.columns).is_some());
        assert!((op_norm(&s) - svd_norm(&s)).abs() <= 1e-12 * svd_norm(&s));
    }

    #[test]
    fn holonomy_blocks_gauge() {
        let i = Complex64::new(0.0, 1.0);
        let one = Complex64::new(1.0, 0.0);
        let d = DMatrix::from_row_slice(2, 2, &[one, one, one, i]);
        let m = SparseMatrix::from_dense(&d);
        assert!(realify(2, &m.columns).is_none());
        assert!((op_norm(&m) - svd_norm(&m)).abs() < 1e-14);
    }
}
