//! Brute-force checks that share nothing with the bracket pipeline except
//! the eigensolver and SVD: Gram matrices assembled from explicit inner
//! products, DFT fibers on cyclic groups, and duals from a linear system.

use rustfft::FftPlanner;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::frames::OrbitSystem;
use crate::linalg::{self, CMat, CVec, C64, DEFAULT_RANK_CUTOFF};
use crate::repr::HVector;
use crate::vnalg::SeqVector;

#[derive(Debug, Clone, Serialize)]
pub struct GramReport {
    /// Descending.
    pub eigenvalues: Vec<f64>,
    /// Smallest eigenvalue above the rank cutoff (frame lower bound).
    #[serde(rename = "A")]
    pub lower: f64,
    #[serde(rename = "B")]
    pub upper: f64,
    /// Smallest eigenvalue overall (Riesz lower bound), clamped at zero.
    pub riesz_lower: f64,
    pub rank: usize,
}

impl GramReport {
    pub fn from_eigenvalues(mut eigenvalues: Vec<f64>, rel_cutoff: f64) -> Self {
        eigenvalues.sort_by(|a, b| b.total_cmp(a));
        let upper = eigenvalues.first().copied().unwrap_or(0.0).max(0.0);
        let rank = eigenvalues
            .iter()
            .filter(|&&v| v > rel_cutoff * upper && v > 0.0)
            .count();
        let lower = if rank == 0 { 0.0 } else { eigenvalues[rank - 1] };
        let riesz_lower = if rank < eigenvalues.len() {
            0.0
        } else {
            eigenvalues.last().copied().unwrap_or(0.0)
        };
        Self {
            eigenvalues,
            lower,
            upper,
            riesz_lower,
            rank,
        }
    }
}

/// Gram matrix `G[r][c] = <v_c, v_r>` of every orbit vector.
pub fn gram_matrix(system: &OrbitSystem<'_>) -> CMat {
    let vectors: Vec<CVec> = (0..system.len())
        .map(|c| system.synthesis().column(c).into_owned())
        .collect();
    let m = vectors.len();
    let mut g = CMat::zeros(m, m);
    for r in 0..m {
        for c in 0..m {
            let mut acc = C64::new(0.0, 0.0);
            for (x, y) in vectors[c].iter().zip(vectors[r].iter()) {
                acc += x * y.conj();
            }
            g[(r, c)] = acc;
        }
    }
    g
}

pub fn gram_bounds(system: &OrbitSystem<'_>) -> GramReport {
    gram_bounds_with_cutoff(system, DEFAULT_RANK_CUTOFF)
}

pub fn gram_bounds_with_cutoff(system: &OrbitSystem<'_>, rel_cutoff: f64) -> GramReport {
    let (values, _) = linalg::hermitian_eigen(&gram_matrix(system));
    GramReport::from_eigenvalues(values, rel_cutoff)
}

/// `|f^(k)|^2` with `f^(k) = sum_x f(x) e^{-2 pi i k x / n}`, in `k` order.
///
/// These are the eigenvalues of `[f, f]` for the left regular
/// representation of `Z_n`.
pub fn dft_fibers(f: &SeqVector) -> Result<Vec<f64>> {
    if !f.group().is_canonical_cyclic() {
        return Err(Error::NotCyclic);
    }
    let n = f.coeffs().len();
    let mut buf: Vec<C64> = f.coeffs().iter().copied().collect();
    FftPlanner::<f64>::new().plan_fft_forward(n).process(&mut buf);
    Ok(buf.iter().map(|z| z.norm_sqr()).collect())
}

pub fn dft_fiberization_bounds(f: &SeqVector) -> Result<GramReport> {
    Ok(GramReport::from_eigenvalues(dft_fibers(f)?, DEFAULT_RANK_CUTOFF))
}

#[derive(Debug, Clone, PartialEq)]
pub enum Biorthogonal {
    Dual(HVector),
    Singular { rank: usize },
}

/// Solves `<Pi(g) psi, x> = delta_{g,e}` for `x` in the orbit span, i.e.
/// `S* x = delta_e`, by SVD least squares.
pub fn biorthogonal_oracle(system: &OrbitSystem<'_>) -> Result<Biorthogonal> {
    let k = system.generators().len();
    if k != 1 {
        return Err(Error::DimensionMismatch { expected: 1, found: k });
    }
    let s = system.synthesis();
    let n = s.ncols();
    let rank = linalg::numerical_rank(s, DEFAULT_RANK_CUTOFF);
    if rank < n {
        return Ok(Biorthogonal::Singular { rank });
    }
    let e = system.representation().group().identity();
    let mut rhs = CVec::zeros(n);
    rhs[e] = C64::new(1.0, 0.0);
    let x = linalg::pseudo_inverse(&s.adjoint(), DEFAULT_RANK_CUTOFF) * rhs;
    Ok(Biorthogonal::Dual(x))
}
