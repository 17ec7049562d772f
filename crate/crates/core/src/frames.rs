//! Orthonormal, Riesz and frame certification of orbit systems, Parseval and
//! dual generators, multipliers, and left-invariant subspaces of `l2(G)`.
//!
//! All certificates come from the spectrum of the block bracket Gramian,
//! whose block `(j, i)` is `[phi_i, phi_j]`. It is unitarily similar to the
//! Gram matrix of the orbit vectors, so its extreme eigenvalues are the
//! Riesz and frame bounds.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::helson::{build_helson_map, s_psi_inverse, HelsonMap, PrincipalDecomposition};
use crate::linalg::{self, CMat, CVec, C64, DEFAULT_RANK_CUTOFF};
use crate::repr::{bracket, HVector, Representation};
use crate::sampling::Sampler;
use crate::vnalg::{fourier_transform, AlgOperator, GroupRef, RootMode, SeqVector};

/// Relative gap under which a certified system is called tight.
pub const TIGHT_TOL: f64 = 1e-8;

/// The system `{Pi(g) phi_i}` with its synthesis matrix.
#[derive(Debug, Clone)]
pub struct OrbitSystem<'a> {
    rep: &'a Representation,
    generators: Vec<HVector>,
    synthesis: CMat,
}

impl<'a> OrbitSystem<'a> {
    /// Column `g * k + i` of the synthesis matrix is `Pi(g) phi_i`.
    pub fn new(rep: &'a Representation, generators: Vec<HVector>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::DimensionMismatch { expected: 1, found: 0 });
        }
        for phi in &generators {
            rep.check_vector(phi)?;
            if phi.norm() == 0.0 {
                return Err(Error::ZeroGenerator);
            }
        }
        let n = rep.group().order();
        let k = generators.len();
        let mut synthesis = CMat::zeros(rep.dim(), n * k);
        for g in 0..n {
            for (i, phi) in generators.iter().enumerate() {
                synthesis.set_column(g * k + i, &rep.apply(g, phi));
            }
        }
        Ok(Self {
            rep,
            generators,
            synthesis,
        })
    }

    pub fn representation(&self) -> &'a Representation {
        self.rep
    }

    pub fn generators(&self) -> &[HVector] {
        &self.generators
    }

    pub fn synthesis(&self) -> &CMat {
        &self.synthesis
    }

    pub fn len(&self) -> usize {
        self.synthesis.ncols()
    }

    pub fn is_empty(&self) -> bool {
        self.synthesis.ncols() == 0
    }

    /// The vector `Pi(g) phi_i`.
    pub fn column(&self, g: usize, i: usize) -> CVec {
        self.synthesis.column(g * self.generators.len() + i).into_owned()
    }

    /// Orthogonal projection onto the span of the system.
    pub fn span_projection(&self) -> CMat {
        linalg::span_projection(&self.synthesis, DEFAULT_RANK_CUTOFF)
    }
}

pub fn orbit_system(rep: &Representation, generators: Vec<HVector>) -> Result<OrbitSystem<'_>> {
    OrbitSystem::new(rep, generators)
}

/// Block matrix with block `(j, i)` equal to `[phi_i, phi_j]`. Entry
/// `(j n + x, i n + y)` is the Gram entry of orbit columns `x k + j` and
/// `y k + i`, so the two matrices are permutation similar.
pub fn block_bracket_gramian(rep: &Representation, generators: &[HVector]) -> Result<CMat> {
    let n = rep.group().order();
    let k = generators.len();
    let mut out = CMat::zeros(n * k, n * k);
    for (i, phi_i) in generators.iter().enumerate() {
        for (j, phi_j) in generators.iter().enumerate() {
            let b = bracket(rep, phi_i, phi_j)?;
            out.view_mut((j * n, i * n), (n, n)).copy_from(b.matrix());
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SystemKind {
    Orthonormal,
    Riesz,
    Frame,
    None,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectralBounds {
    #[serde(rename = "A")]
    pub lower: f64,
    #[serde(rename = "B")]
    pub upper: f64,
    pub support_rank: usize,
    pub kind: SystemKind,
    pub tight: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrthonormalityReport {
    pub orthonormal: bool,
    /// `max_{i,j} ||[phi_i, phi_j] - delta_ij I||_inf`
    pub defect: f64,
}

pub fn orthonormality_test(rep: &Representation, generators: &[HVector], tol: f64) -> Result<OrthonormalityReport> {
    let group = rep.group();
    let eye = AlgOperator::identity(group);
    let mut defect: f64 = 0.0;
    for (i, phi_i) in generators.iter().enumerate() {
        for (j, phi_j) in generators.iter().enumerate() {
            let b = bracket(rep, phi_i, phi_j)?;
            let target = if i == j { eye.clone() } else { AlgOperator::zero(group) };
            defect = defect.max(b.distance(&target));
        }
    }
    Ok(OrthonormalityReport {
        orthonormal: defect <= tol,
        defect,
    })
}

/// Eigenvalues of the block bracket Gramian, descending.
pub fn gramian_spectrum(rep: &Representation, generators: &[HVector]) -> Result<Vec<f64>> {
    Ok(linalg::hermitian_eigen(&block_bracket_gramian(rep, generators)?).0)
}

fn classify(values: &[f64], rank: usize) -> SystemKind {
    let full = values.len();
    let max = values.first().copied().unwrap_or(0.0);
    let min = values.last().copied().unwrap_or(0.0);
    if rank == 0 {
        SystemKind::None
    } else if rank < full {
        SystemKind::Frame
    } else if (max - 1.0).abs() <= TIGHT_TOL && (min - 1.0).abs() <= TIGHT_TOL {
        SystemKind::Orthonormal
    } else {
        SystemKind::Riesz
    }
}

fn rank_of(values: &[f64], rel_cutoff: f64) -> usize {
    let max = values.first().copied().unwrap_or(0.0);
    values.iter().filter(|&&v| v > rel_cutoff * max && v > 0.0).count()
}

fn bounds_from_spectrum(values: &[f64], rel_cutoff: f64, on_support: bool) -> SpectralBounds {
    let rank = rank_of(values, rel_cutoff);
    let upper = values.first().copied().unwrap_or(0.0).max(0.0);
    let lower = if on_support {
        if rank == 0 {
            0.0
        } else {
            values[rank - 1]
        }
    } else if rank < values.len() {
        0.0
    } else {
        values.last().copied().unwrap_or(0.0)
    };
    SpectralBounds {
        lower,
        upper,
        support_rank: rank,
        kind: classify(values, rank),
        tight: rank > 0 && upper - lower <= TIGHT_TOL * upper,
    }
}

/// `(min, max)` eigenvalue of the block bracket Gramian.
pub fn riesz_bounds(rep: &Representation, generators: &[HVector]) -> Result<SpectralBounds> {
    riesz_bounds_with_cutoff(rep, generators, DEFAULT_RANK_CUTOFF)
}

pub fn riesz_bounds_with_cutoff(
    rep: &Representation,
    generators: &[HVector],
    rel_cutoff: f64,
) -> Result<SpectralBounds> {
    Ok(bounds_from_spectrum(
        &gramian_spectrum(rep, generators)?,
        rel_cutoff,
        false,
    ))
}

/// `(min nonzero, max)` eigenvalue of the block bracket Gramian.
pub fn frame_bounds(rep: &Representation, generators: &[HVector]) -> Result<SpectralBounds> {
    frame_bounds_with_cutoff(rep, generators, DEFAULT_RANK_CUTOFF)
}

pub fn frame_bounds_with_cutoff(
    rep: &Representation,
    generators: &[HVector],
    rel_cutoff: f64,
) -> Result<SpectralBounds> {
    Ok(bounds_from_spectrum(
        &gramian_spectrum(rep, generators)?,
        rel_cutoff,
        true,
    ))
}

/// Smallest eigenvalue of a Hermitian matrix.
fn min_eig(m: &CMat) -> f64 {
    linalg::hermitian_eigen(m).0.last().copied().unwrap_or(0.0)
}

/// Worst violation of `A [f,f] <= sum_i [f,phi_i]* [f,phi_i] <= B [f,f]`
/// over random `f` in the span, relative to `max(1, ||f||^2)`.
pub fn frame_inequality_defect(
    rep: &Representation,
    generators: &[HVector],
    bounds: &SpectralBounds,
    samples: usize,
    seed: u64,
) -> Result<f64> {
    let system = OrbitSystem::new(rep, generators.to_vec())?;
    let mut s = Sampler::new(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let f = system.synthesis() * s.cvec(system.len());
        let ff = bracket(rep, &f, &f)?;
        let mut sum = CMat::zeros(ff.matrix().nrows(), ff.matrix().ncols());
        for phi in generators {
            let b = bracket(rep, &f, phi)?;
            sum += b.matrix().adjoint() * b.matrix();
        }
        let lower = min_eig(&(&sum - ff.matrix() * C64::from(bounds.lower)));
        let upper = min_eig(&(ff.matrix() * C64::from(bounds.upper) - &sum));
        let scale = f.norm_squared().max(1.0) * bounds.upper.max(1.0);
        worst = worst.max((-lower).max(0.0) / scale).max((-upper).max(0.0) / scale);
    }
    Ok(worst)
}

/// Worst violation of `A sum F_i* F_i <= sum_{i,j} F_j* [phi_i,phi_j] F_i <= B sum F_i* F_i`
/// over random algebra tuples, relative to the size of `sum F_i* F_i`.
pub fn riesz_tuple_defect(
    rep: &Representation,
    generators: &[HVector],
    bounds: &SpectralBounds,
    samples: usize,
    seed: u64,
) -> Result<f64> {
    let group = rep.group().clone();
    let k = generators.len();
    let mut brackets = vec![Vec::with_capacity(k); k];
    for (i, row) in brackets.iter_mut().enumerate() {
        for phi_j in generators {
            row.push(bracket(rep, &generators[i], phi_j)?);
        }
    }
    let mut s = Sampler::new(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let tuple: Vec<AlgOperator> = (0..k).map(|_| s.algebra_element(&group)).collect();
        let mut mass = AlgOperator::zero(&group);
        let mut form = AlgOperator::zero(&group);
        for i in 0..k {
            mass = &mass + &(&tuple[i].adjoint() * &tuple[i]);
            for j in 0..k {
                form = &form + &(&(&tuple[j].adjoint() * &brackets[i][j]) * &tuple[i]);
            }
        }
        let scale = linalg::op_norm(mass.matrix()).max(1.0) * bounds.upper.max(1.0);
        let lower = min_eig(&(form.matrix() - mass.matrix() * C64::from(bounds.lower)));
        let upper = min_eig(&(mass.matrix() * C64::from(bounds.upper) - form.matrix()));
        worst = worst.max((-lower).max(0.0) / scale).max((-upper).max(0.0) / scale);
    }
    Ok(worst)
}

/// `S_psi^{-1}([psi,psi]^{-1/2})`, whose orbit is a Parseval frame for
/// the principal space of `psi`.
pub fn parseval_generator(rep: &Representation, psi: &HVector) -> Result<HVector> {
    rep.check_vector(psi)?;
    if psi.norm() == 0.0 {
        return Err(Error::ZeroGenerator);
    }
    let root = bracket(rep, psi, psi)?.psd_sqrt(RootMode::PinvSqrt, DEFAULT_RANK_CUTOFF)?;
    s_psi_inverse(rep, psi, &root)
}

/// One Parseval generator per principal piece of `span(V)`.
pub fn parseval_family(rep: &Representation, spanning: &[HVector]) -> Result<Vec<HVector>> {
    let dec = crate::helson::decompose_invariant(rep, spanning)?;
    dec.generators.iter().map(|psi| parseval_generator(rep, psi)).collect()
}

/// The canonical dual `S_psi^{-1}([psi,psi]^{-1})`, defined when the bracket
/// is invertible.
pub fn dual_generator(rep: &Representation, psi: &HVector, tol: f64) -> Result<HVector> {
    rep.check_vector(psi)?;
    if psi.norm() == 0.0 {
        return Err(Error::ZeroGenerator);
    }
    let b = bracket(rep, psi, psi)?;
    let sd = b.spectral(DEFAULT_RANK_CUTOFF)?;
    let (max, min) = (sd.max(), sd.min());
    if min <= tol * max {
        return Err(Error::NotMinimal { min_eigenvalue: min });
    }
    let inv = b.psd_sqrt(RootMode::Pinv, DEFAULT_RANK_CUTOFF)?;
    s_psi_inverse(rep, psi, &inv)
}

/// `max_g |<Pi(g) psi, dual> - delta_{g,e}|`.
pub fn biorthogonality_defect(rep: &Representation, psi: &HVector, dual: &HVector) -> f64 {
    let e = rep.group().identity();
    (0..rep.group().order())
        .map(|g| {
            let target = if g == e { 1.0 } else { 0.0 };
            (linalg::inner(&rep.apply(g, psi), dual) - C64::from(target)).norm()
        })
        .fold(0.0, f64::max)
}

#[derive(Debug, Clone)]
pub struct PrincipalMultiplier {
    /// `pinv([psi,psi]) [phi,psi]`, supported on `s_[psi,psi]`.
    pub multiplier: AlgOperator,
    /// `||[phi,psi] - [psi,psi] F||_inf`
    pub bracket_defect: f64,
    /// Fiberwise distance between `T[phi]` and `T[psi] F`.
    pub helson_defect: f64,
}

/// The multiplier `F` with `T[phi] = T[psi] F`, for `phi` in the principal
/// space of `psi`.
pub fn principal_multiplier(
    rep: &Representation,
    psi: &HVector,
    phi: &HVector,
    tol: f64,
) -> Result<PrincipalMultiplier> {
    rep.check_vector(phi)?;
    let system = OrbitSystem::new(rep, vec![psi.clone()])?;
    let basis = linalg::range_basis(system.synthesis(), DEFAULT_RANK_CUTOFF);
    let residual = (phi - &basis * (basis.adjoint() * phi)).norm();
    if residual > tol * phi.norm().max(1.0) {
        return Err(Error::NotInPrincipalSpace { residual });
    }
    let bpp = bracket(rep, psi, psi)?;
    let pinv = bpp.psd_sqrt(RootMode::Pinv, DEFAULT_RANK_CUTOFF)?;
    let multiplier = &pinv * &bracket(rep, phi, psi)?;
    let bracket_defect = bracket(rep, phi, psi)?.max_abs_diff(&(&bpp * &multiplier));

    let dec = PrincipalDecomposition {
        generators: vec![psi.clone()],
        orbit_bases: vec![basis],
        consumed: vec![0],
        span_dim: system.len().min(rep.dim()),
    };
    let map = build_helson_map(rep, dec)?;
    let t_phi = map.transform(phi)?;
    let t_psi = map.transform(psi)?.right_multiply(&multiplier);
    Ok(PrincipalMultiplier {
        multiplier,
        bracket_defect,
        helson_defect: t_phi.max_abs_diff(&t_psi),
    })
}

#[derive(Debug, Clone)]
pub enum Membership {
    /// `phi = sum_j` (coefficients of `F_j`) applied to the orbit of `psi_j`,
    /// i.e. `T[phi] = sum_j T[psi_j] F_j`.
    Member {
        multipliers: Vec<AlgOperator>,
        residual: f64,
    },
    NotMember {
        residual: f64,
    },
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member { .. })
    }

    pub fn residual(&self) -> f64 {
        match self {
            Membership::Member { residual, .. } | Membership::NotMember { residual } => *residual,
        }
    }
}

/// Least-squares membership of `phi` in the invariant space generated by
/// `psis`; the minimal-norm coefficient solution gives the multipliers.
pub fn membership_finitely_generated(
    rep: &Representation,
    psis: &[HVector],
    phi: &HVector,
    tol: f64,
) -> Result<Membership> {
    rep.check_vector(phi)?;
    let system = OrbitSystem::new(rep, psis.to_vec())?;
    let coeffs = linalg::pseudo_inverse(system.synthesis(), DEFAULT_RANK_CUTOFF) * phi;
    let residual = (phi - system.synthesis() * &coeffs).norm();
    if residual > tol * phi.norm().max(1.0) {
        return Ok(Membership::NotMember { residual });
    }
    let group = rep.group().clone();
    let n = group.order();
    let k = psis.len();
    let multipliers = (0..k)
        .map(|i| {
            let c = CVec::from_iterator(n, (0..n).map(|g| coeffs[g * k + i]));
            fourier_transform(&SeqVector::new(group.clone(), c).expect("one coefficient per element"))
        })
        .collect();
    Ok(Membership::Member { multipliers, residual })
}

#[derive(Debug, Clone)]
pub struct LeftInvarianceReport {
    /// `P_V`, an algebra element exactly when `V` is left-invariant.
    pub q: AlgOperator,
    /// Fourier coefficients of `q`, i.e. `q delta_e`.
    pub p: SeqVector,
    /// `max_g ||P_V lambda(g) - lambda(g) P_V||`
    pub commutator_defect: f64,
    pub left_invariant: bool,
    /// `max_v ||F v - q F v||` over a basis of `V`.
    pub forward_inclusion: f64,
    /// `max_g ||q rho(g)* - F(q delta_g)||`.
    pub reverse_inclusion: f64,
    /// `||[p,p] - q||` under the left regular representation.
    pub bracket_defect: f64,
    /// `||[p,p]^2 - [p,p]||`
    pub idempotence_defect: f64,
    /// `||sum_g lambda(g) p p* lambda(g)* - P_V||`
    pub frame_operator_defect: f64,
    pub parseval_ok: bool,
}

/// Structure of a subspace `V` of `l2(G)` under left translation.
pub fn left_invariance_analysis(spanning: &[SeqVector], tol: f64) -> Result<LeftInvarianceReport> {
    let group: GroupRef = spanning
        .first()
        .ok_or(Error::DimensionMismatch { expected: 1, found: 0 })?
        .group()
        .clone();
    if spanning.iter().any(|v| **v.group() != *group) {
        return Err(Error::GroupMismatch);
    }
    let n = group.order();
    let cols: Vec<CVec> = spanning.iter().map(|v| v.coeffs().clone()).collect();
    let basis = linalg::orthonormalize_in_order(&cols, DEFAULT_RANK_CUTOFF);
    let basis_mat = linalg::columns_to_matrix(n, &basis);
    let projection = &basis_mat * basis_mat.adjoint();
    let q = AlgOperator::new(group.clone(), projection.clone())?;
    let commutator_defect = q.algebra_defect();
    let left_invariant = commutator_defect <= tol;
    let p = q.fourier_coefficients_unchecked();

    let mut forward_inclusion: f64 = 0.0;
    for v in &basis {
        let fv = fourier_transform(&SeqVector::new(group.clone(), v.clone())?);
        forward_inclusion = forward_inclusion.max(fv.max_abs_diff(&(&q * &fv)));
    }
    let mut reverse_inclusion: f64 = 0.0;
    for g in 0..n {
        let left = &q * &AlgOperator::rho(&group, g).adjoint();
        let moved = SeqVector::new(group.clone(), &projection * SeqVector::delta(&group, g).coeffs())?;
        reverse_inclusion = reverse_inclusion.max(left.max_abs_diff(&fourier_transform(&moved)));
    }

    let regular = Representation::left_regular(&group);
    let pp = bracket(&regular, p.coeffs(), p.coeffs())?;
    let bracket_defect = pp.max_abs_diff(&q);
    let idempotence_defect = (&pp * &pp).max_abs_diff(&pp);
    let orbit = regular.orbit_matrix(p.coeffs());
    let frame_operator_defect = linalg::max_abs(&(&orbit * orbit.adjoint() - &projection));
    let parseval_ok = bracket_defect <= tol && idempotence_defect <= tol && frame_operator_defect <= tol;
    Ok(LeftInvarianceReport {
        q,
        p,
        commutator_defect,
        left_invariant,
        forward_inclusion,
        reverse_inclusion,
        bracket_defect,
        idempotence_defect,
        frame_operator_defect,
        parseval_ok,
    })
}

/// How the completeness lemma for combs applies to a coefficient pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CombLemma {
    /// Real `a != +-b`: completeness is predicted.
    PredictsComplete,
    /// Real `a = +-b`: no prediction.
    Excluded,
    /// Complex coefficients: reported but not asserted.
    NotAsserted,
}

#[derive(Debug, Clone, Serialize)]
pub struct CombReport {
    pub order: usize,
    pub g1: usize,
    pub g2: usize,
    pub a: [f64; 2],
    pub b: [f64; 2],
    /// `||[f,f] - closed form||_inf`
    pub closed_form_defect: f64,
    pub rank: usize,
    pub complete: bool,
    pub riesz: SpectralBounds,
    pub frame: SpectralBounds,
    /// `((|a|-|b|)^2, (|a|+|b|)^2)`
    pub window: [f64; 2],
    pub within_window: bool,
    pub eigenvalues: Vec<f64>,
    pub lemma: CombLemma,
    /// `false` only if the lemma predicts completeness and the rank disagrees.
    pub lemma_consistent: bool,
}

/// `f = a delta_{g1} + b delta_{g2}` under the left regular representation.
pub fn comb_vector(group: &GroupRef, g1: usize, g2: usize, a: C64, b: C64) -> Result<SeqVector> {
    let n = group.order();
    if g1 >= n || g2 >= n {
        return Err(Error::DegenerateComb(format!("elements must be below {n}")));
    }
    if g1 == g2 {
        return Err(Error::DegenerateComb("the two prongs coincide".into()));
    }
    if a.norm() == 0.0 || b.norm() == 0.0 {
        return Err(Error::DegenerateComb("coefficients must be nonzero".into()));
    }
    let mut coeffs = CVec::zeros(n);
    coeffs[g1] = a;
    coeffs[g2] = b;
    SeqVector::new(group.clone(), coeffs)
}

/// `(|a|^2 + |b|^2) I + a conj(b) rho(g1 g2^{-1})* + conj(a) b rho(g2 g1^{-1})*`.
pub fn comb_bracket_closed_form(group: &GroupRef, g1: usize, g2: usize, a: C64, b: C64) -> AlgOperator {
    let eye = AlgOperator::identity(group);
    let cross1 = AlgOperator::rho(group, group.mul(g1, group.inv(g2))).adjoint();
    let cross2 = AlgOperator::rho(group, group.mul(g2, group.inv(g1))).adjoint();
    &(&eye.scale(C64::from(a.norm_sqr() + b.norm_sqr())) + &cross1.scale(a * b.conj())) + &cross2.scale(a.conj() * b)
}

pub fn comb_analysis(group: &GroupRef, g1: usize, g2: usize, a: C64, b: C64, tol: f64) -> Result<CombReport> {
    let f = comb_vector(group, g1, g2, a, b)?;
    let rep = Representation::left_regular(group);
    let gens = vec![f.coeffs().clone()];
    let ff = bracket(&rep, f.coeffs(), f.coeffs())?;
    let closed_form_defect = ff.max_abs_diff(&comb_bracket_closed_form(group, g1, g2, a, b));
    let rank = linalg::numerical_rank(&rep.orbit_matrix(f.coeffs()), DEFAULT_RANK_CUTOFF);
    let complete = rank == group.order();
    let eigenvalues = linalg::hermitian_eigen(ff.matrix()).0;
    let riesz = bounds_from_spectrum(&eigenvalues, DEFAULT_RANK_CUTOFF, false);
    let frame = frame_bounds(&rep, &gens)?;
    let window = [(a.norm() - b.norm()).powi(2), (a.norm() + b.norm()).powi(2)];
    let slack = tol * window[1].max(1.0);
    let within_window = eigenvalues
        .iter()
        .all(|&v| v >= window[0] - slack && v <= window[1] + slack);
    let is_real = a.im == 0.0 && b.im == 0.0;
    let lemma = if !is_real {
        CombLemma::NotAsserted
    } else if a.re == b.re || a.re == -b.re {
        CombLemma::Excluded
    } else {
        CombLemma::PredictsComplete
    };
    Ok(CombReport {
        order: group.order(),
        g1,
        g2,
        a: [a.re, a.im],
        b: [b.re, b.im],
        closed_form_defect,
        rank,
        complete,
        riesz,
        frame,
        window,
        within_window,
        eigenvalues,
        lemma,
        lemma_consistent: lemma != CombLemma::PredictsComplete || complete,
    })
}
