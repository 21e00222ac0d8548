use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ncalg::presets::{Z11, Z21, Z22};
use crate::ncalg::{Letter, NcExpr};

use super::catalog::{rep_image, Family, RepSpec};
use super::matrix::{base_op, materialize, SparseMatrix};
use super::norm::op_norm;
use super::symbol::{op_word, OpLetter};

/// `(I - A)^{1/2}` for a Hermitian `A ≤ I`.
fn defect(a: DMatrix<Complex64>) -> DMatrix<Complex64> {
    let n = a.nrows();
    let m = DMatrix::<Complex64>::identity(n, n) - a;
    let eig = SymmetricEigen::new(m);
    let v = &eig.eigenvectors;
    let d = DMatrix::from_diagonal(
        &eig.eigenvalues
            .map(|x| Complex64::new(x.max(0.0).sqrt(), 0.0)),
    );
    v * d * v.adjoint()
}

/// Egerváry's unitary on `H^{m+1}` whose compression to the first summand
/// reproduces `T^n` for `1 ≤ n ≤ m`.
pub fn egervary_dilation(t: &SparseMatrix, m: usize) -> Result<SparseMatrix> {
    if t.rows != t.cols {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} is not square",
            t.rows, t.cols
        )));
    }
    if m == 0 {
        return Err(Error::InvalidConfig(
            "dilation order must be at least 1".into(),
        ));
    }
    let norm = op_norm(t);
    if norm > 1.0 + 1e-12 {
        return Err(Error::NotContraction(norm));
    }
    let n = t.rows;
    let td = t.to_dense();
    let d_t = SparseMatrix::from_dense(&defect(td.adjoint() * &td));
    let d_ts = SparseMatrix::from_dense(&defect(&td * td.adjoint()));
    let zero = SparseMatrix::zeros(n, n);
    let id = SparseMatrix::identity(n);
    let mut blocks = vec![vec![zero; m + 1]; m + 1];
    blocks[0][0] = t.clone();
    blocks[0][m] = d_ts;
    blocks[1][0] = d_t;
    blocks[1][m] = blocks[1][m].sub(&t.adjoint())?;
    for k in 2..=m {
        blocks[k][k - 1] = id.clone();
    }
    SparseMatrix::block(&blocks)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DilationReport {
    pub order: usize,
    pub unitarity: f64,
    /// `max_n ‖P U^n|_H - T^n‖` over `1 ≤ n ≤ order`.
    pub compression: f64,
}

pub fn dilation_report(t: &SparseMatrix, m: usize) -> Result<DilationReport> {
    let u = egervary_dilation(t, m)?;
    let dim = u.rows;
    let id = SparseMatrix::identity(dim);
    let unitarity =
        op_norm(&u.adjoint().mul(&u)?.sub(&id)?).max(op_norm(&u.mul(&u.adjoint())?.sub(&id)?));
    let mut compression: f64 = 0.0;
    let mut up = u.clone();
    let mut tp = t.clone();
    for k in 1..=m {
        if k > 1 {
            up = up.mul(&u)?;
            tp = tp.mul(t)?;
        }
        compression = compression.max(op_norm(&up.corner(t.rows).sub(&tp)?));
    }
    Ok(DilationReport {
        order: m,
        unitarity,
        compression,
    })
}

/// Which dilated map to build.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum PsiVariant {
    /// Dilates the third Fock leg: `Ψ(z11) = I ⊗ D² ⊗ U - q⁻¹ S*C4 ⊗ C2SC2S ⊗ I`.
    Psi,
    /// Dilates the first leg of the coaction picture, with phase `φ`.
    PsiPhi(f64),
}

fn w(s: &str, n: usize, q: f64) -> SparseMatrix {
    op_word(s)
        .iter()
        .fold(SparseMatrix::identity(n), |acc, &l: &OpLetter| {
            acc.mul(&base_op(l, n, q)).unwrap()
        })
}

/// `Ψ(z)` or `Ψ_φ(z)` for a holomorphic generator, with `u` the dilation
/// of `C4 S` at truncation `n`.
pub fn psi_image(
    gen: Letter,
    u: &SparseMatrix,
    variant: &PsiVariant,
    n: usize,
    q: f64,
) -> Result<SparseMatrix> {
    if !u.rows.is_multiple_of(n) || u.rows != u.cols {
        return Err(Error::DimensionMismatch(format!(
            "dilation of size {} over N = {n}",
            u.rows
        )));
    }
    let k = SparseMatrix::identity(u.rows);
    let i = SparseMatrix::identity(n);
    let qi = Complex64::new(1.0 / q, 0.0);
    Ok(match variant {
        PsiVariant::Psi => match gen {
            Z11 => i.kron(&w("D D", n, q)).kron(u).sub(
                &w("S* C4", n, q)
                    .kron(&w("C2 S C2 S", n, q))
                    .kron(&k)
                    .scale(qi),
            )?,
            Z21 => w("D D", n, q).kron(&w("C2 S", n, q)).kron(&k),
            Z22 => w("C4 S", n, q).kron(&i).kron(&k),
            _ => return Err(Error::NonHolomorphic(format!("letter {gen}"))),
        },
        PsiVariant::PsiPhi(phi) => {
            let e = Complex64::from_polar(1.0, *phi);
            match gen {
                Z11 => u
                    .kron(&w("S* C2 S* C2", n, q))
                    .scale(qi)
                    .add(&k.kron(&w("D D", n, q)).scale(e))?,
                Z21 => u
                    .kron(&w("S* C2 D", n, q))
                    .scale(-qi)
                    .add(&k.kron(&w("C2 S D", n, q)).scale(e))?,
                Z22 => u
                    .kron(&w("D D", n, q))
                    .scale(Complex64::new(q, 0.0))
                    .add(&k.kron(&w("C2 S C2 S", n, q)).scale(e))?,
                _ => return Err(Error::NonHolomorphic(format!("letter {gen}"))),
            }
        }
    })
}

/// Leg index pattern that keeps the first summand of the dilated leg.
fn compression_mask(dims: &[usize], leg: usize, n: usize) -> Vec<bool> {
    let total: usize = dims.iter().product();
    (0..total)
        .map(|col| {
            let mut rem = col;
            let mut idx = 0;
            for k in (0..dims.len()).rev() {
                if k == leg {
                    idx = rem % dims[k];
                }
                rem /= dims[k];
            }
            idx < n
        })
        .collect()
}

/// Max over holomorphic words of degree `1..=m` of the distance between the
/// compressed `Ψ(w)` and the truncated image of `w`.
pub fn psi_compression_residual(variant: &PsiVariant, n: usize, m: usize, q: f64) -> Result<f64> {
    let t = w("C4 S", n, q);
    let u = egervary_dilation(&t, m)?;
    let (dims, leg, spec, vals) = match variant {
        PsiVariant::Psi => (
            vec![n, n, u.rows],
            2,
            RepSpec::symbolic(Family::Fock),
            vec![],
        ),
        PsiVariant::PsiPhi(phi) => (
            vec![u.rows, n],
            0,
            RepSpec::symbolic(Family::FphiCoact),
            vec![*phi],
        ),
    };
    let small: Vec<usize> = (0..dims.len())
        .map(|k| if k == leg { n } else { dims[k] })
        .collect();
    let mask = compression_mask(&dims, leg, n);
    let gens = [Z11, Z21, Z22];
    let psi: Vec<SparseMatrix> = gens
        .iter()
        .map(|&g| psi_image(g, &u, variant, n, q))
        .collect::<Result<_>>()?;

    let mut worst: f64 = 0.0;
    let mut layer: Vec<(Vec<Letter>, SparseMatrix)> =
        vec![(Vec::new(), SparseMatrix::identity(psi[0].rows))];
    for _ in 0..m {
        let mut next = Vec::new();
        for (word, mat) in &layer {
            for (k, &g) in gens.iter().enumerate() {
                let prod = mat.mul(&psi[k])?;
                let mut wd = word.clone();
                wd.push(g);
                let comp = prod
                    .select_cols(&mask)
                    .adjoint()
                    .select_cols(&mask)
                    .adjoint();
                let want = materialize(
                    &rep_image(&NcExpr::word(wd.clone()), &spec)?,
                    &small,
                    q,
                    &vals,
                )?;
                worst = worst.max(comp.sub(&want)?.max_abs());
                next.push((wd, prod));
            }
        }
        layer = next;
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_dilates_to_swap() {
        let u = egervary_dilation(&SparseMatrix::zeros(1, 1), 1).unwrap();
        assert_eq!(
            u.to_dense(),
            DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 1.0, 0.0]).map(|x| Complex64::new(x, 0.0))
        );
    }

    #[test]
    fn unitary_input_has_no_defect() {
        let t =
            SparseMatrix::diagonal(&[Complex64::from_polar(1.0, 0.3), Complex64::new(-1.0, 0.0)]);
        let r = dilation_report(&t, 3).unwrap();
        assert!(r.unitarity <= 1e-12 && r.compression <= 1e-12, "{r:?}");
    }

    #[test]
    fn shift_dilation_compresses() {
        let t = w("C4 S", 16, 0.5);
        let r = dilation_report(&t, 4).unwrap();
        assert!(r.unitarity <= 1e-12 && r.compression <= 1e-12, "{r:?}");
        assert!(egervary_dilation(&t.scale(Complex64::new(1.1, 0.0)), 2).is_err());
    }

    #[test]
    fn psi_compressions() {
        assert!(psi_compression_residual(&PsiVariant::Psi, 4, 2, 0.5).unwrap() <= 1e-12);
        assert!(psi_compression_residual(&PsiVariant::PsiPhi(0.4), 4, 2, 0.5).unwrap() <= 1e-12);
    }
}
