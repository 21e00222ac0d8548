use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

use super::symbol::{OpLetter, OpSymbolExpr};

/// Image of each basis index under one leg word: target index and weight.
type LegTable = Vec<Option<(usize, f64)>>;

/// Largest total dimension `materialize` will build.
pub const DIM_CAP: usize = 1 << 16;

/// Column-compressed complex matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub(super) columns: Vec<Vec<(usize, Complex64)>>,
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(&vec![c(1.0); n])
    }

    pub fn diagonal(d: &[Complex64]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (k, v) in d.iter().enumerate() {
            m.push(k, k, *v);
        }
        m
    }

    pub fn from_dense(d: &DMatrix<Complex64>) -> Self {
        let mut m = Self::zeros(d.nrows(), d.ncols());
        for j in 0..d.ncols() {
            for i in 0..d.nrows() {
                m.push(i, j, d[(i, j)]);
            }
        }
        m
    }

    pub fn to_dense(&self) -> DMatrix<Complex64> {
        let mut d = DMatrix::zeros(self.rows, self.cols);
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                d[(i, j)] += v;
            }
        }
        d
    }

    fn push(&mut self, i: usize, j: usize, v: Complex64) {
        if v != c(0.0) {
            self.columns[j].push((i, v));
        }
    }

    /// Sorts each column and merges duplicate rows.
    fn compress(mut self) -> Self {
        for col in &mut self.columns {
            let mut acc: BTreeMap<usize, Complex64> = BTreeMap::new();
            for &(i, v) in col.iter() {
                *acc.entry(i).or_insert(c(0.0)) += v;
            }
            *col = acc.into_iter().filter(|(_, v)| *v != c(0.0)).collect();
        }
        self
    }

    pub fn column(&self, j: usize) -> &[(usize, Complex64)] {
        &self.columns[j]
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.columns[j]
            .iter()
            .filter(|(r, _)| *r == i)
            .map(|(_, v)| *v)
            .sum()
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(|c| c.len()).sum()
    }

    pub fn matvec(&self, x: &[Complex64]) -> Vec<Complex64> {
        let mut y = vec![c(0.0); self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            if x[j] == c(0.0) {
                continue;
            }
            for &(i, v) in col {
                y[i] += v * x[j];
            }
        }
        y
    }

    pub fn adj_matvec(&self, y: &[Complex64]) -> Vec<Complex64> {
        self.columns
            .iter()
            .map(|col| col.iter().map(|&(i, v)| v.conj() * y[i]).sum())
            .collect()
    }

    pub fn adjoint(&self) -> SparseMatrix {
        let mut m = Self::zeros(self.cols, self.rows);
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                m.columns[i].push((j, v.conj()));
            }
        }
        m
    }

    pub fn scale(&self, s: Complex64) -> SparseMatrix {
        let mut m = self.clone();
        for col in &mut m.columns {
            for e in col.iter_mut() {
                e.1 *= s;
            }
        }
        m.compress()
    }

    pub fn add(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} + {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut m = self.clone();
        for (j, col) in other.columns.iter().enumerate() {
            m.columns[j].extend_from_slice(col);
        }
        Ok(m.compress())
    }

    pub fn sub(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        self.add(&other.scale(c(-1.0)))
    }

    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut m = Self::zeros(self.rows, other.cols);
        for (j, col) in other.columns.iter().enumerate() {
            for &(k, b) in col {
                for &(i, a) in &self.columns[k] {
                    m.columns[j].push((i, a * b));
                }
            }
        }
        Ok(m.compress())
    }

    pub fn kron(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut m = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for (ja, ca) in self.columns.iter().enumerate() {
            for (jb, cb) in other.columns.iter().enumerate() {
                let j = ja * other.cols + jb;
                for &(ia, a) in ca {
                    for &(ib, b) in cb {
                        m.columns[j].push((ia * other.rows + ib, a * b));
                    }
                }
            }
        }
        m
    }

    /// Block matrix from a rectangular grid of blocks with consistent sizes.
    pub fn block(blocks: &[Vec<SparseMatrix>]) -> Result<SparseMatrix> {
        let row_sizes: Vec<usize> = blocks.iter().map(|r| r[0].rows).collect();
        let col_sizes: Vec<usize> = blocks[0].iter().map(|b| b.cols).collect();
        let rows = row_sizes.iter().sum();
        let cols = col_sizes.iter().sum();
        let mut m = Self::zeros(rows, cols);
        let mut r0 = 0;
        for (bi, row) in blocks.iter().enumerate() {
            let mut c0 = 0;
            for (bj, b) in row.iter().enumerate() {
                if b.rows != row_sizes[bi] || b.cols != col_sizes[bj] {
                    return Err(Error::DimensionMismatch(format!("block ({bi},{bj})")));
                }
                for (j, col) in b.columns.iter().enumerate() {
                    for &(i, v) in col {
                        m.columns[c0 + j].push((r0 + i, v));
                    }
                }
                c0 += col_sizes[bj];
            }
            r0 += row_sizes[bi];
        }
        Ok(m)
    }

    /// Keeps only the columns where `mask` is true, in order.
    pub fn select_cols(&self, mask: &[bool]) -> SparseMatrix {
        let columns: Vec<_> = self
            .columns
            .iter()
            .zip(mask)
            .filter(|(_, &keep)| keep)
            .map(|(c, _)| c.clone())
            .collect();
        SparseMatrix {
            rows: self.rows,
            cols: columns.len(),
            columns,
        }
    }

    /// Top-left `k × k` corner.
    pub fn corner(&self, k: usize) -> SparseMatrix {
        let mut m = Self::zeros(k, k);
        for j in 0..k.min(self.cols) {
            m.columns[j] = self.columns[j]
                .iter()
                .filter(|(i, _)| *i < k)
                .copied()
                .collect();
        }
        m
    }

    pub fn frobenius(&self) -> f64 {
        self.columns
            .iter()
            .flatten()
            .map(|(_, v)| v.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.columns
            .iter()
            .flatten()
            .map(|(_, v)| v.norm())
            .fold(0.0, f64::max)
    }

    /// Diagonal entries when every stored entry sits on the diagonal.
    pub fn as_diagonal(&self) -> Option<Vec<Complex64>> {
        let mut d = vec![c(0.0); self.cols];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                if i != j {
                    return None;
                }
                d[j] += v;
            }
        }
        Some(d)
    }
}

/// `{S, S*, C_n, D}` as `N × N` matrices in the corner-compressed truncation.
pub fn base_op(l: OpLetter, n: usize, q: f64) -> SparseMatrix {
    let mut m = SparseMatrix::zeros(n, n);
    for k in 0..n {
        if let Some((row, v)) = letter_on_basis(l, k, n, q) {
            m.push(row, k, c(v));
        }
    }
    m
}

/// Checked version of [`base_op`] for the public `base_ops` contract.
pub fn base_ops(n: usize, q: f64) -> Result<Vec<(String, SparseMatrix)>> {
    if n < 2 {
        return Err(Error::TruncationTooSmall(n));
    }
    crate::qscalar::check_q(q)?;
    Ok(vec![
        ("I".into(), SparseMatrix::identity(n)),
        ("S".into(), base_op(OpLetter::S, n, q)),
        ("S*".into(), base_op(OpLetter::Sd, n, q)),
        ("C2".into(), base_op(OpLetter::C(2), n, q)),
        ("C4".into(), base_op(OpLetter::C(4), n, q)),
        ("D".into(), base_op(OpLetter::D, n, q)),
    ])
}

fn letter_on_basis(l: OpLetter, k: usize, n: usize, q: f64) -> Option<(usize, f64)> {
    match l {
        OpLetter::S => (k + 1 < n).then_some((k + 1, 1.0)),
        OpLetter::Sd => (k > 0).then(|| (k - 1, 1.0)),
        OpLetter::C(m) => {
            let v = (1.0 - q.powi(m as i32 * k as i32)).sqrt();
            (v != 0.0).then_some((k, v))
        }
        OpLetter::D => Some((k, q.powi(k as i32))),
    }
}

/// Word acting on `e_k`: every letter maps a basis vector to a multiple of
/// one basis vector, so the result is a single entry or zero.
fn word_on_basis(w: &[OpLetter], mut k: usize, n: usize, q: f64) -> Option<(usize, f64)> {
    let mut val = 1.0;
    for &l in w.iter().rev() {
        let (r, v) = letter_on_basis(l, k, n, q)?;
        k = r;
        val *= v;
    }
    Some((k, val))
}

/// Builds the matrix of `e` with leg truncations `dims`, leg 0 most significant.
pub fn materialize(e: &OpSymbolExpr, dims: &[usize], q: f64, vals: &[f64]) -> Result<SparseMatrix> {
    if dims.len() != e.legs() {
        return Err(Error::DimensionMismatch(format!(
            "{} dims for {} legs",
            dims.len(),
            e.legs()
        )));
    }
    if let Some(&n) = dims.iter().find(|&&n| n < 2) {
        return Err(Error::TruncationTooSmall(n));
    }
    let total: usize = dims.iter().product();
    if total > DIM_CAP {
        return Err(Error::ResourceCap {
            dim: total,
            cap: DIM_CAP,
        });
    }
    // Per term and leg, the image of each basis index.
    let terms: Vec<(Complex64, Vec<LegTable>)> = e
        .terms()
        .iter()
        .map(|(words, coeff)| {
            let tables = words
                .iter()
                .zip(dims)
                .map(|(w, &n)| (0..n).map(|k| word_on_basis(w, k, n, q)).collect())
                .collect();
            (coeff.eval(q, vals), tables)
        })
        .collect();
    let mut m = SparseMatrix::zeros(total, total);
    let mut idx = vec![0usize; dims.len()];
    for col in 0..total {
        let mut rem = col;
        for k in (0..dims.len()).rev() {
            idx[k] = rem % dims[k];
            rem /= dims[k];
        }
        'terms: for (coeff, tables) in &terms {
            let mut row = 0;
            let mut val = *coeff;
            for (k, t) in tables.iter().enumerate() {
                match t[idx[k]] {
                    Some((r, v)) => {
                        row = row * dims[k] + r;
                        val *= v;
                    }
                    None => continue 'terms,
                }
            }
            m.push(row, col, val);
        }
    }
    Ok(m.compress())
}

/// Columns whose leg indices all satisfy `i_k < N_k - guard_k`.
pub fn guard_mask(dims: &[usize], guard: &[usize]) -> Vec<bool> {
    let total: usize = dims.iter().product();
    (0..total)
        .map(|col| {
            let mut rem = col;
            let mut ok = true;
            for k in (0..dims.len()).rev() {
                let i = rem % dims[k];
                rem /= dims[k];
                ok &= i + guard[k] < dims[k];
            }
            ok
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::super::norm::op_norm;
    use super::super::phase::Coeff;
    use super::*;

    const Q: f64 = 0.5;

    #[test]
    fn base_ops_values() {
        let ops = base_ops(4, Q).unwrap();
        let c2 = &ops[3].1;
        let want = [
            0.0,
            (1.0 - Q * Q).sqrt(),
            (1.0 - Q.powi(4)).sqrt(),
            (1.0 - Q.powi(6)).sqrt(),
        ];
        for (k, w) in want.iter().enumerate() {
            assert!((c2.get(k, k).re - w).abs() < 1e-15);
        }
        let d = base_op(OpLetter::D, 3, Q);
        assert_eq!(d.as_diagonal().unwrap(), vec![c(1.0), c(0.5), c(0.25)]);
        let s = base_op(OpLetter::S, 4, Q);
        assert_eq!(s.get(1, 0), c(1.0));
        assert!(s.column(3).is_empty());
        assert!(base_ops(1, Q).is_err());
    }

    #[test]
    fn materialize_identity_and_d_squared() {
        let i = materialize(&OpSymbolExpr::identity(2), &[3, 4], Q, &[]).unwrap();
        assert_eq!(i, SparseMatrix::identity(12));
        let d2 = OpSymbolExpr::parse(&["D D"], Coeff::one());
        let m = materialize(&d2, &[4], Q, &[]).unwrap();
        assert_eq!(
            m.as_diagonal().unwrap(),
            vec![c(1.0), c(0.25), c(0.0625), c(0.015625)]
        );
    }

    #[test]
    fn kron_order_matches_materialize() {
        let e = OpSymbolExpr::parse(&["S", "C2 S*"], Coeff::one());
        let m = materialize(&e, &[3, 4], Q, &[]).unwrap();
        let k = base_op(OpLetter::S, 3, Q).kron(
            &base_op(OpLetter::C(2), 4, Q)
                .mul(&base_op(OpLetter::Sd, 4, Q))
                .unwrap(),
        );
        assert!(m.sub(&k).unwrap().max_abs() < 1e-15);
    }

    #[test]
    fn c4s_norm() {
        let n = 16;
        let e = OpSymbolExpr::parse(&["C4 S"], Coeff::one());
        let m = materialize(&e, &[n], Q, &[]).unwrap();
        let want = (1.0 - Q.powi(4 * (n as i32 - 1))).sqrt();
        assert!((op_norm(&m) - want).abs() < 1e-14);
    }

    #[test]
    fn guard_mask_counts() {
        let mask = guard_mask(&[4, 5], &[1, 2]);
        assert_eq!(mask.iter().filter(|&&b| b).count(), 3 * 3);
    }
}
