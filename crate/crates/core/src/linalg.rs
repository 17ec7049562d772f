//! Dense complex linear-algebra helpers shared by every module.
//!
//! Spectral work goes through the Hermitian eigensolver only. Rank decisions
//! use a cutoff relative to the largest eigenvalue or singular value.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

pub type C64 = Complex64;
pub type CMat = DMatrix<C64>;
pub type CVec = DVector<C64>;

/// Default relative cutoff for rank and support decisions.
pub const DEFAULT_RANK_CUTOFF: f64 = 1e-10;

/// Default absolute tolerance for complex comparisons.
pub const DEFAULT_TOL: f64 = 1e-9;

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn real(re: f64) -> C64 {
    C64::new(re, 0.0)
}

/// Largest entry modulus.
pub fn max_abs(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn max_abs_vec(v: &CVec) -> f64 {
    v.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Operator (spectral) norm, the largest singular value.
pub fn op_norm(m: &CMat) -> f64 {
    if m.is_empty() {
        return 0.0;
    }
    m.clone().singular_values().iter().copied().fold(0.0, f64::max)
}

pub fn hermitian_defect(m: &CMat) -> f64 {
    max_abs(&(m - m.adjoint()))
}

/// `<x, y>`, linear in `x` and conjugate-linear in `y`.
pub fn inner(x: &CVec, y: &CVec) -> C64 {
    y.dotc(x)
}

/// Eigen-decomposition of a Hermitian matrix with a deterministic output
/// convention: eigenvalues descending, each eigenvector's first component
/// above `1e-12` in modulus rotated to be real positive.
pub fn hermitian_eigen(m: &CMat) -> (Vec<f64>, CMat) {
    let n = m.nrows();
    if n == 0 {
        return (Vec::new(), CMat::zeros(0, 0));
    }
    // symmetrize so the solver sees an exactly Hermitian input
    let h = (m + m.adjoint()).scale(0.5);
    let eig = h.symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        eig.eigenvalues[b]
            .partial_cmp(&eig.eigenvalues[a])
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let mut values = Vec::with_capacity(n);
    let mut vectors = CMat::zeros(n, n);
    for (col, &idx) in order.iter().enumerate() {
        values.push(eig.eigenvalues[idx]);
        let mut v = eig.eigenvectors.column(idx).into_owned();
        if let Some(lead) = v.iter().find(|z| z.norm() > 1e-12).copied() {
            let phase = lead.conj() / lead.norm();
            v *= phase;
        }
        vectors.set_column(col, &v);
    }
    (values, vectors)
}

/// `U diag(f(lambda)) U*` for a Hermitian `m`.
pub fn hermitian_apply(m: &CMat, f: impl Fn(f64) -> f64) -> CMat {
    let (values, vectors) = hermitian_eigen(m);
    from_spectrum(&values, &vectors, f)
}

pub fn from_spectrum(values: &[f64], vectors: &CMat, f: impl Fn(f64) -> f64) -> CMat {
    let n = values.len();
    let mut scaled = vectors.clone();
    for j in 0..n {
        let s = f(values[j]);
        for i in 0..n {
            scaled[(i, j)] *= s;
        }
    }
    scaled * vectors.adjoint()
}

/// Orthonormal basis (as columns) for the column span of `m`, decided by SVD
/// with singular values below `rel_cutoff * max` discarded.
pub fn range_basis(m: &CMat, rel_cutoff: f64) -> CMat {
    let rows = m.nrows();
    if m.ncols() == 0 || rows == 0 {
        return CMat::zeros(rows, 0);
    }
    let svd = m.clone().svd(true, false);
    let u = svd.u.expect("left singular vectors requested");
    let smax = svd.singular_values.iter().copied().fold(0.0, f64::max);
    if smax == 0.0 {
        return CMat::zeros(rows, 0);
    }
    let keep: Vec<usize> = (0..svd.singular_values.len())
        .filter(|&i| svd.singular_values[i] > rel_cutoff * smax)
        .collect();
    let mut basis = CMat::zeros(rows, keep.len());
    for (col, &i) in keep.iter().enumerate() {
        basis.set_column(col, &u.column(i));
    }
    basis
}

/// Numerical rank via SVD with relative cutoff.
pub fn numerical_rank(m: &CMat, rel_cutoff: f64) -> usize {
    range_basis(m, rel_cutoff).ncols()
}

/// Orthogonal projection onto the column span of `m`.
pub fn span_projection(m: &CMat, rel_cutoff: f64) -> CMat {
    let q = range_basis(m, rel_cutoff);
    &q * q.adjoint()
}

/// Moore-Penrose pseudo-inverse with relative singular-value cutoff.
pub fn pseudo_inverse(m: &CMat, rel_cutoff: f64) -> CMat {
    let (rows, cols) = m.shape();
    if rows == 0 || cols == 0 {
        return CMat::zeros(cols, rows);
    }
    let svd = m.clone().svd(true, true);
    let u = svd.u.expect("u requested");
    let v_t = svd.v_t.expect("v_t requested");
    let smax = svd.singular_values.iter().copied().fold(0.0, f64::max);
    let mut out = CMat::zeros(cols, rows);
    if smax == 0.0 {
        return out;
    }
    for (i, &s) in svd.singular_values.iter().enumerate() {
        if s > rel_cutoff * smax {
            let vi = v_t.row(i).adjoint();
            let ui = u.column(i).adjoint();
            out += (vi * ui).scale(1.0 / s);
        }
    }
    out
}

/// Modified Gram-Schmidt in input order, dropping vectors whose residual
/// falls below `rel_cutoff` times the largest input norm.
pub fn orthonormalize_in_order(vectors: &[CVec], rel_cutoff: f64) -> Vec<CVec> {
    let scale = vectors.iter().map(|v| v.norm()).fold(0.0, f64::max);
    let mut basis: Vec<CVec> = Vec::new();
    if scale == 0.0 {
        return basis;
    }
    for v in vectors {
        let mut r = v.clone();
        // two passes keep the basis orthonormal to machine precision
        for _ in 0..2 {
            for q in &basis {
                let coeff = q.dotc(&r);
                r -= q * coeff;
            }
        }
        let norm = r.norm();
        if norm > rel_cutoff.max(1e-12) * scale {
            basis.push(r / C64::new(norm, 0.0));
        }
    }
    basis
}

pub fn columns_to_matrix(rows: usize, cols: &[CVec]) -> CMat {
    let mut m = CMat::zeros(rows, cols.len());
    for (j, v) in cols.iter().enumerate() {
        m.set_column(j, v);
    }
    m
}
