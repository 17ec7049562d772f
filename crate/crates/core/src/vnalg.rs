//! The right group algebra of a finite group as `n x n` complex matrices.
//!
//! With elements in canonical order, `rho(g)` sends `delta_x` to
//! `delta_{x g^{-1}}` and `lambda(g)` sends `delta_x` to `delta_{g x}`. An
//! operator belongs to the algebra exactly when it commutes with every
//! `lambda(g)`; its Fourier coefficients are `F^(g) = tau(F rho(g))` and
//! `F = sum_g F^(g) rho(g)*`.

use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::linalg::{self, real, CMat, CVec, C64, DEFAULT_RANK_CUTOFF, DEFAULT_TOL};

pub type GroupRef = Arc<FiniteGroup>;

/// An operator on `l2(G)` tied to its group.
#[derive(Debug, Clone)]
pub struct AlgOperator {
    group: GroupRef,
    matrix: CMat,
}

/// A finitely supported sequence on the group, i.e. an element of `l2(G)`.
#[derive(Debug, Clone)]
pub struct SeqVector {
    group: GroupRef,
    coeffs: CVec,
}

/// Eigen-decomposition of a Hermitian operator, eigenvalues descending.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: CMat,
    /// Absolute threshold below which an eigenvalue counts as zero.
    pub cutoff: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RootMode {
    /// Positive square root.
    Sqrt,
    /// Pseudo-inverse of the positive square root.
    PinvSqrt,
    /// Moore-Penrose pseudo-inverse.
    Pinv,
}

fn same_group(a: &GroupRef, b: &GroupRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl SpectralDecomposition {
    pub fn rank(&self) -> usize {
        self.eigenvalues.iter().filter(|l| l.abs() > self.cutoff).count()
    }

    pub fn max(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }

    pub fn min(&self) -> f64 {
        self.eigenvalues.last().copied().unwrap_or(0.0)
    }

    /// Smallest eigenvalue above the cutoff, or 0 when there is none.
    pub fn min_nonzero(&self) -> f64 {
        self.eigenvalues
            .iter()
            .copied()
            .filter(|l| *l > self.cutoff)
            .fold(f64::INFINITY, f64::min)
            .min(self.max().max(0.0))
            .max(0.0)
    }

    pub fn reconstruct(&self) -> CMat {
        linalg::from_spectrum(&self.eigenvalues, &self.eigenvectors, |l| l)
    }

    /// Functional calculus `U diag(f(lambda)) U*`.
    pub fn apply(&self, f: impl Fn(f64) -> f64) -> CMat {
        linalg::from_spectrum(&self.eigenvalues, &self.eigenvectors, f)
    }
}

/// Spectral decomposition of a Hermitian matrix with a relative rank cutoff.
pub fn spectral(matrix: &CMat, rel_cutoff: f64) -> Result<SpectralDecomposition> {
    let scale = linalg::max_abs(matrix).max(1.0);
    let defect = linalg::hermitian_defect(matrix);
    if defect > DEFAULT_TOL * scale {
        return Err(Error::NotHermitian { defect });
    }
    let (eigenvalues, eigenvectors) = linalg::hermitian_eigen(matrix);
    let largest = eigenvalues.iter().map(|l| l.abs()).fold(0.0, f64::max);
    Ok(SpectralDecomposition {
        eigenvalues,
        eigenvectors,
        cutoff: rel_cutoff * largest,
    })
}

impl AlgOperator {
    pub fn new(group: GroupRef, matrix: CMat) -> Result<Self> {
        let n = group.order();
        if matrix.nrows() != n || matrix.ncols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: matrix.nrows().max(matrix.ncols()),
            });
        }
        Ok(Self { group, matrix })
    }

    pub(crate) fn from_parts(group: GroupRef, matrix: CMat) -> Self {
        debug_assert_eq!(matrix.nrows(), group.order());
        Self { group, matrix }
    }

    pub fn identity(group: &GroupRef) -> Self {
        let n = group.order();
        Self::from_parts(group.clone(), CMat::identity(n, n))
    }

    pub fn zero(group: &GroupRef) -> Self {
        let n = group.order();
        Self::from_parts(group.clone(), CMat::zeros(n, n))
    }

    /// Right regular representation matrix `rho(g)`.
    pub fn rho(group: &GroupRef, g: usize) -> Self {
        let n = group.order();
        assert!(g < n, "element {g} out of range");
        let ginv = group.inv(g);
        let mut m = CMat::zeros(n, n);
        for x in 0..n {
            m[(group.mul(x, ginv), x)] = real(1.0);
        }
        Self::from_parts(group.clone(), m)
    }

    /// Left regular representation matrix `lambda(g)`.
    pub fn lambda(group: &GroupRef, g: usize) -> Self {
        let n = group.order();
        assert!(g < n, "element {g} out of range");
        let mut m = CMat::zeros(n, n);
        for x in 0..n {
            m[(group.mul(g, x), x)] = real(1.0);
        }
        Self::from_parts(group.clone(), m)
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn matrix(&self) -> &CMat {
        &self.matrix
    }

    pub fn into_matrix(self) -> CMat {
        self.matrix
    }

    pub fn adjoint(&self) -> Self {
        Self::from_parts(self.group.clone(), self.matrix.adjoint())
    }

    pub fn scale(&self, s: C64) -> Self {
        Self::from_parts(self.group.clone(), &self.matrix * s)
    }

    /// `tau(F) = <F delta_e, delta_e>`.
    pub fn trace_tau(&self) -> C64 {
        let e = self.group.identity();
        self.matrix[(e, e)]
    }

    /// Largest operator norm of `[F, lambda(g)]` over the group.
    pub fn algebra_defect(&self) -> f64 {
        let n = self.group.order();
        let mut worst: f64 = 0.0;
        for g in 0..n {
            // (F lambda(g) - lambda(g) F)[gx][y'] compares F[x][..] shifted
            let mut comm = CMat::zeros(n, n);
            for x in 0..n {
                let gx = self.group.mul(g, x);
                for y in 0..n {
                    let gy = self.group.mul(g, y);
                    comm[(gx, gy)] = self.matrix[(gx, gy)] - self.matrix[(x, y)];
                }
            }
            worst = worst.max(linalg::op_norm(&comm));
        }
        worst
    }

    /// Membership in the algebra: commutes with all left translations.
    pub fn is_in_algebra(&self, tol: f64) -> bool {
        self.algebra_defect() <= tol
    }

    fn check_in_algebra(&self) -> Result<()> {
        let defect = self.algebra_defect();
        if defect > DEFAULT_TOL * linalg::max_abs(&self.matrix).max(1.0) {
            return Err(Error::NotInAlgebra { defect });
        }
        Ok(())
    }

    /// Convolution kernel `F^(g) = tau(F rho(g))`.
    pub fn fourier_coefficients(&self) -> Result<SeqVector> {
        self.check_in_algebra()?;
        Ok(self.fourier_coefficients_unchecked())
    }

    /// Coefficients without the membership check. Off the algebra this is the
    /// orthogonal projection's kernel only up to averaging, so callers must
    /// know the operator is a member.
    pub(crate) fn fourier_coefficients_unchecked(&self) -> SeqVector {
        let n = self.group.order();
        let e = self.group.identity();
        // tau(F rho(g)) = sum_x F[e][x] rho(g)[x][e] with rho(g)[x][e] = 1 iff x = g^{-1}
        let coeffs = CVec::from_iterator(n, (0..n).map(|g| self.matrix[(e, self.group.inv(g))]));
        SeqVector {
            group: self.group.clone(),
            coeffs,
        }
    }

    /// `||F||_p = tau(|F|^p)^{1/p}`; `p = f64::INFINITY` gives the operator norm.
    ///
    /// With `F = U S V*` one has `|F| = V S V*`, so the trace only needs the
    /// `e`-row of `V`.
    pub fn lp_norm(&self, p: f64) -> f64 {
        assert!(p >= 1.0, "p must be in [1, inf]");
        if p.is_infinite() {
            return linalg::op_norm(&self.matrix);
        }
        let svd = self.matrix.clone().svd(false, true);
        let v_t = svd.v_t.expect("right singular vectors requested");
        let e = self.group.identity();
        let t: f64 = svd
            .singular_values
            .iter()
            .enumerate()
            .map(|(i, &s)| v_t[(i, e)].norm_sqr() * s.powf(p))
            .sum();
        t.powf(1.0 / p)
    }

    pub fn spectral(&self, rel_cutoff: f64) -> Result<SpectralDecomposition> {
        spectral(&self.matrix, rel_cutoff)
    }

    /// Support projection `s_F`: projection onto the range of a Hermitian `F`.
    pub fn support_projection(&self, rel_cutoff: f64) -> Result<AlgOperator> {
        let sd = self.spectral(rel_cutoff)?;
        let cut = sd.cutoff;
        let q = sd.apply(|l| if l.abs() > cut { 1.0 } else { 0.0 });
        Ok(Self::from_parts(self.group.clone(), q))
    }

    /// Square roots and pseudo-inverses of a positive semidefinite operator.
    pub fn psd_sqrt(&self, mode: RootMode, rel_cutoff: f64) -> Result<AlgOperator> {
        let sd = self.spectral(rel_cutoff)?;
        check_psd(&sd)?;
        let cut = sd.cutoff;
        let m = sd.apply(|l| {
            if l <= cut {
                return 0.0;
            }
            match mode {
                RootMode::Sqrt => l.sqrt(),
                RootMode::PinvSqrt => 1.0 / l.sqrt(),
                RootMode::Pinv => 1.0 / l,
            }
        });
        Ok(Self::from_parts(self.group.clone(), m))
    }

    /// Operator-norm distance to another operator.
    pub fn distance(&self, other: &AlgOperator) -> f64 {
        linalg::op_norm(&(&self.matrix - &other.matrix))
    }

    /// Largest entry modulus of the difference.
    pub fn max_abs_diff(&self, other: &AlgOperator) -> f64 {
        linalg::max_abs(&(&self.matrix - &other.matrix))
    }
}

fn check_psd(sd: &SpectralDecomposition) -> Result<()> {
    let scale = sd.max().abs().max(1.0);
    let min = sd.min();
    if min < -DEFAULT_TOL * scale {
        return Err(Error::NotPsd { min_eigenvalue: min });
    }
    Ok(())
}

/// Group Fourier transform `F_G f = sum_g f(g) rho(g)*`.
pub fn fourier_transform(f: &SeqVector) -> AlgOperator {
    let group = &f.group;
    let n = group.order();
    let mut m = CMat::zeros(n, n);
    // rho(g)*[x][y] = 1 iff x = y g
    for g in 0..n {
        let c = f.coeffs[g];
        if c == C64::new(0.0, 0.0) {
            continue;
        }
        for y in 0..n {
            m[(group.mul(y, g), y)] += c;
        }
    }
    AlgOperator::from_parts(group.clone(), m)
}

/// `(g * f)(x) = sum_y f(y) g(x y^{-1})`.
pub fn convolve(g: &SeqVector, f: &SeqVector) -> Result<SeqVector> {
    if !same_group(&g.group, &f.group) {
        return Err(Error::GroupMismatch);
    }
    let group = &g.group;
    let n = group.order();
    let mut out = CVec::zeros(n);
    for x in 0..n {
        let mut acc = C64::new(0.0, 0.0);
        for y in 0..n {
            acc += f.coeffs[y] * g.coeffs[group.mul(x, group.inv(y))];
        }
        out[x] = acc;
    }
    Ok(SeqVector {
        group: group.clone(),
        coeffs: out,
    })
}

/// `<F, G>_{2,Omega} = tau(F G* Omega)`.
pub fn weighted_inner(omega: &AlgOperator, f: &AlgOperator, g: &AlgOperator) -> Result<C64> {
    let sd = omega.spectral(DEFAULT_RANK_CUTOFF)?;
    check_psd(&sd)?;
    let prod = AlgOperator::from_parts(f.group.clone(), &f.matrix * g.matrix.adjoint() * &omega.matrix);
    Ok(prod.trace_tau())
}

pub fn weighted_norm(omega: &AlgOperator, f: &AlgOperator) -> Result<f64> {
    Ok(weighted_inner(omega, f, f)?.re.max(0.0).sqrt())
}

impl SeqVector {
    pub fn new(group: GroupRef, coeffs: CVec) -> Result<Self> {
        if coeffs.len() != group.order() {
            return Err(Error::DimensionMismatch {
                expected: group.order(),
                found: coeffs.len(),
            });
        }
        Ok(Self { group, coeffs })
    }

    pub fn zeros(group: &GroupRef) -> Self {
        Self {
            group: group.clone(),
            coeffs: CVec::zeros(group.order()),
        }
    }

    pub fn delta(group: &GroupRef, g: usize) -> Self {
        let mut v = Self::zeros(group);
        v.coeffs[g] = real(1.0);
        v
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn coeffs(&self) -> &CVec {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> CVec {
        self.coeffs
    }

    pub fn norm(&self) -> f64 {
        self.coeffs.norm()
    }

    /// `(lambda(g) f)(x) = f(g^{-1} x)`.
    pub fn translate_left(&self, g: usize) -> SeqVector {
        let n = self.group.order();
        let ginv = self.group.inv(g);
        let coeffs = CVec::from_iterator(n, (0..n).map(|x| self.coeffs[self.group.mul(ginv, x)]));
        SeqVector {
            group: self.group.clone(),
            coeffs,
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&AlgOperator> for &AlgOperator {
            type Output = AlgOperator;
            fn $method(self, rhs: &AlgOperator) -> AlgOperator {
                debug_assert!(same_group(&self.group, &rhs.group));
                AlgOperator::from_parts(self.group.clone(), &self.matrix $op &rhs.matrix)
            }
        }
        impl $trait<AlgOperator> for AlgOperator {
            type Output = AlgOperator;
            fn $method(self, rhs: AlgOperator) -> AlgOperator {
                &self $op &rhs
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);

impl Neg for &AlgOperator {
    type Output = AlgOperator;
    fn neg(self) -> AlgOperator {
        AlgOperator::from_parts(self.group.clone(), -&self.matrix)
    }
}
