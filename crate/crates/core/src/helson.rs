//! Helson maps: isometries `T` from the representation space into fields of
//! algebra elements with `T[Pi(g) phi] = T[phi] rho(g)*`.
//!
//! Three constructions are provided: the group Fourier transform for the left
//! regular representation, the periodization map `U_Psi` built from a
//! decomposition into principal invariant pieces, and the Zak transform of a
//! free group action with a tiling set.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, real, CMat, CVec, C64, DEFAULT_RANK_CUTOFF, DEFAULT_TOL};
use crate::repr::{action_representation, bracket, GroupAction, HVector, Representation};
use crate::sampling::Sampler;
use crate::vnalg::{fourier_transform, AlgOperator, GroupRef, RootMode, SeqVector};

#[derive(Debug, Clone)]
pub struct Fiber {
    pub label: String,
    pub weight: f64,
    pub value: AlgOperator,
}

/// A field of algebra elements over a finite weighted index set.
#[derive(Debug, Clone)]
pub struct HelsonImage {
    pub fibers: Vec<Fiber>,
}

impl HelsonImage {
    pub fn norm_squared(&self) -> f64 {
        self.fibers
            .iter()
            .map(|f| f.weight * (f.value.adjoint() * f.value.clone()).trace_tau().re)
            .sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_squared().max(0.0).sqrt()
    }

    /// Pointwise right multiplication `(Psi F)(x) = Psi(x) F`.
    pub fn right_multiply(&self, f: &AlgOperator) -> HelsonImage {
        HelsonImage {
            fibers: self
                .fibers
                .iter()
                .map(|fib| Fiber {
                    label: fib.label.clone(),
                    weight: fib.weight,
                    value: &fib.value * f,
                })
                .collect(),
        }
    }

    /// `sum_x w(x) other(x)* self(x)`, which recovers `[self, other]`.
    pub fn bracket_with(&self, other: &HelsonImage) -> Result<AlgOperator> {
        if self.fibers.len() != other.fibers.len() {
            return Err(Error::FiberMismatch {
                expected: self.fibers.len(),
                found: other.fibers.len(),
            });
        }
        let group = self.fibers[0].value.group().clone();
        let mut acc = AlgOperator::zero(&group);
        for (a, b) in self.fibers.iter().zip(&other.fibers) {
            acc = acc + (b.value.adjoint() * a.value.clone()).scale(real(a.weight));
        }
        Ok(acc)
    }

    /// Largest entry difference over all fibers.
    pub fn max_abs_diff(&self, other: &HelsonImage) -> f64 {
        self.fibers
            .iter()
            .zip(&other.fibers)
            .map(|(a, b)| a.value.max_abs_diff(&b.value))
            .fold(0.0, f64::max)
    }

    /// Coordinates in an orthonormal basis of the image space: each fiber
    /// contributes `sqrt(w)` times its Fourier coefficients.
    pub fn flatten(&self) -> CVec {
        let parts: Vec<CVec> = self
            .fibers
            .iter()
            .map(|f| f.value.fourier_coefficients_unchecked().into_coeffs() * real(f.weight.sqrt()))
            .collect();
        let len = parts.iter().map(|p| p.len()).sum();
        CVec::from_iterator(
            len,
            parts
                .into_iter()
                .flat_map(|p| p.into_iter().copied().collect::<Vec<_>>()),
        )
    }
}

/// Common interface of the Helson map constructions.
pub trait HelsonMap {
    fn representation(&self) -> &Representation;

    fn transform(&self, phi: &HVector) -> Result<HelsonImage>;

    /// Orthogonal projection onto the subspace where the map is an isometry;
    /// `None` means the whole space.
    fn domain_projection(&self) -> Option<&CMat> {
        None
    }
}

fn check_generator(rep: &Representation, psi: &HVector) -> Result<()> {
    rep.check_vector(psi)?;
    if psi.norm() == 0.0 {
        return Err(Error::ZeroGenerator);
    }
    Ok(())
}

/// `S_psi[sum_g f(g) Pi(g) psi] = s_[psi,psi] sum_g f(g) rho(g)*`.
pub fn s_psi_forward(rep: &Representation, psi: &HVector, f: &SeqVector) -> Result<AlgOperator> {
    check_generator(rep, psi)?;
    let support = bracket(rep, psi, psi)?.support_projection(DEFAULT_RANK_CUTOFF)?;
    Ok(&support * &fourier_transform(f))
}

/// Inverse of `S_psi` on `s_[psi,psi] L2`: `sum_g F^(g) Pi(g) psi` with `F`
/// first reduced to `s_[psi,psi] F`.
pub fn s_psi_inverse(rep: &Representation, psi: &HVector, f: &AlgOperator) -> Result<HVector> {
    check_generator(rep, psi)?;
    let support = bracket(rep, psi, psi)?.support_projection(DEFAULT_RANK_CUTOFF)?;
    let reduced = &support * f;
    let coeffs = reduced.fourier_coefficients()?;
    let mut out = CVec::zeros(rep.dim());
    for (g, c) in coeffs.coeffs().iter().enumerate() {
        out += rep.apply(g, psi) * *c;
    }
    Ok(out)
}

/// Generators of pairwise orthogonal principal invariant subspaces whose
/// direct sum is the input span.
#[derive(Debug, Clone)]
pub struct PrincipalDecomposition {
    pub generators: Vec<HVector>,
    /// Orthonormal basis (columns) of each principal space.
    pub orbit_bases: Vec<CMat>,
    /// Index, in the orthonormalized input basis, of the vector each
    /// generator was produced from.
    pub consumed: Vec<usize>,
    /// Dimension of the input span.
    pub span_dim: usize,
}

impl PrincipalDecomposition {
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn orbit_dims(&self) -> Vec<usize> {
        self.orbit_bases.iter().map(|q| q.ncols()).collect()
    }

    pub fn projection(&self, i: usize) -> CMat {
        let q = &self.orbit_bases[i];
        q * q.adjoint()
    }

    /// Largest inner product between basis vectors of different pieces.
    pub fn cross_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.orbit_bases.len() {
            for j in i + 1..self.orbit_bases.len() {
                let block = self.orbit_bases[i].adjoint() * &self.orbit_bases[j];
                worst = worst.max(linalg::max_abs(&block));
            }
        }
        worst
    }
}

/// Greedy decomposition of an invariant span into principal pieces: walk an
/// orthonormal basis of `span(V)` in input order and start a new piece from
/// the residual of the first vector not yet covered.
pub fn decompose_invariant(rep: &Representation, spanning: &[HVector]) -> Result<PrincipalDecomposition> {
    for v in spanning {
        rep.check_vector(v)?;
    }
    let d = rep.dim();
    let basis = linalg::orthonormalize_in_order(spanning, DEFAULT_RANK_CUTOFF);
    let q = linalg::columns_to_matrix(d, &basis);
    let proj = &q * q.adjoint();
    let complement = CMat::identity(d, d) - &proj;
    for g in 0..rep.group().order() {
        let moved = &complement * rep.matrix(g) * &q;
        let defect = linalg::max_abs(&moved);
        if defect > DEFAULT_TOL {
            return Err(Error::NotInvariant { element: g, defect });
        }
    }

    let mut covered = CMat::zeros(d, 0);
    let mut out = PrincipalDecomposition {
        generators: Vec::new(),
        orbit_bases: Vec::new(),
        consumed: Vec::new(),
        span_dim: basis.len(),
    };
    for (idx, e) in basis.iter().enumerate() {
        if covered.ncols() == basis.len() {
            break;
        }
        let residual = e - &covered * (covered.adjoint() * e);
        if residual.norm() <= 1e-9 {
            continue;
        }
        let orbit = range_basis_of_orbit(rep, &residual);
        covered = append_columns(&covered, &orbit);
        out.generators.push(residual);
        out.orbit_bases.push(orbit);
        out.consumed.push(idx);
    }
    Ok(out)
}

fn range_basis_of_orbit(rep: &Representation, psi: &HVector) -> CMat {
    linalg::range_basis(&rep.orbit_matrix(psi), DEFAULT_RANK_CUTOFF)
}

fn append_columns(a: &CMat, b: &CMat) -> CMat {
    let mut out = CMat::zeros(a.nrows(), a.ncols() + b.ncols());
    out.view_mut((0, 0), (a.nrows(), a.ncols())).copy_from(a);
    out.view_mut((0, a.ncols()), (b.nrows(), b.ncols())).copy_from(b);
    out
}

/// The group Fourier transform, a single-fiber Helson map for the left
/// regular representation.
pub struct FourierHelsonMap {
    rep: Representation,
}

impl FourierHelsonMap {
    pub fn new(group: &GroupRef) -> Self {
        Self {
            rep: Representation::left_regular(group),
        }
    }
}

impl HelsonMap for FourierHelsonMap {
    fn representation(&self) -> &Representation {
        &self.rep
    }

    fn transform(&self, phi: &HVector) -> Result<HelsonImage> {
        let f = SeqVector::new(self.rep.group().clone(), phi.clone())?;
        Ok(HelsonImage {
            fibers: vec![Fiber {
                label: "F".into(),
                weight: 1.0,
                value: fourier_transform(&f),
            }],
        })
    }
}

/// `U_Psi(phi) = { [psi_i,psi_i]^{1/2} S_{psi_i}[P_i phi] }_i` with unit
/// weight per generator.
pub struct PeriodizationMap {
    rep: Representation,
    decomposition: PrincipalDecomposition,
    roots: Vec<AlgOperator>,
    supports: Vec<AlgOperator>,
    orbit_pinvs: Vec<CMat>,
    domain: CMat,
}

/// Builds `U_Psi` for a decomposition produced by [`decompose_invariant`].
pub fn build_helson_map(rep: &Representation, decomposition: PrincipalDecomposition) -> Result<PeriodizationMap> {
    let mut roots = Vec::new();
    let mut supports = Vec::new();
    let mut orbit_pinvs = Vec::new();
    let d = rep.dim();
    let mut domain = CMat::zeros(d, d);
    for (i, psi) in decomposition.generators.iter().enumerate() {
        check_generator(rep, psi)?;
        let b = bracket(rep, psi, psi)?;
        roots.push(b.psd_sqrt(RootMode::Sqrt, DEFAULT_RANK_CUTOFF)?);
        supports.push(b.support_projection(DEFAULT_RANK_CUTOFF)?);
        orbit_pinvs.push(linalg::pseudo_inverse(&rep.orbit_matrix(psi), DEFAULT_RANK_CUTOFF));
        domain += decomposition.projection(i);
    }
    Ok(PeriodizationMap {
        rep: rep.clone(),
        decomposition,
        roots,
        supports,
        orbit_pinvs,
        domain,
    })
}

impl PeriodizationMap {
    pub fn decomposition(&self) -> &PrincipalDecomposition {
        &self.decomposition
    }
}

impl HelsonMap for PeriodizationMap {
    fn representation(&self) -> &Representation {
        &self.rep
    }

    fn transform(&self, phi: &HVector) -> Result<HelsonImage> {
        self.rep.check_vector(phi)?;
        let group = self.rep.group().clone();
        let fibers = (0..self.decomposition.len())
            .map(|i| {
                let piece = self.decomposition.projection(i) * phi;
                // coefficients f with piece = sum_g f(g) Pi(g) psi_i
                let coeffs = &self.orbit_pinvs[i] * piece;
                let f = SeqVector::new(group.clone(), coeffs).expect("one coefficient per element");
                let s = &self.supports[i] * &fourier_transform(&f);
                Fiber {
                    label: format!("psi_{i}"),
                    weight: 1.0,
                    value: &self.roots[i] * &s,
                }
            })
            .collect();
        Ok(HelsonImage { fibers })
    }

    fn domain_projection(&self) -> Option<&CMat> {
        Some(&self.domain)
    }
}

/// Transversal `C` of a free action: `{sigma_g(C)}` partitions the points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TilingSet {
    pub points: Vec<usize>,
}

/// Smallest point of each orbit, provided every stabilizer is trivial.
pub fn find_tiling_set(action: &GroupAction) -> Result<TilingSet> {
    let group = action.group();
    for x in 0..action.points() {
        for g in 0..group.order() {
            if g != group.identity() && action.sigma(g, x) == x {
                return Err(Error::NotFree { point: x, element: g });
            }
        }
    }
    Ok(TilingSet {
        points: action.orbits().iter().map(|o| o[0]).collect(),
    })
}

/// The Zak transform `Z[phi](x) = sum_g (Pi(g) phi)(x) rho(g)` on `x in C`,
/// fiber weight `mu(x)`. Input vectors are in flattened coordinates.
pub struct ZakTransform {
    action: GroupAction,
    tiling: TilingSet,
    rep: Representation,
    /// `owner[x] = (g, c)` with `sigma_g(c) = x`.
    owner: Vec<(usize, usize)>,
}

impl ZakTransform {
    pub fn new(action: &GroupAction, tiling: &TilingSet) -> Result<Self> {
        let group = action.group();
        let m = action.points();
        let mut owner = vec![None; m];
        for (ci, &c) in tiling.points.iter().enumerate() {
            if c >= m {
                return Err(Error::InvalidTiling(format!("point {c} out of range")));
            }
            for g in 0..group.order() {
                let x = action.sigma(g, c);
                if owner[x].is_some() {
                    return Err(Error::InvalidTiling(format!("point {x} is covered twice")));
                }
                owner[x] = Some((g, ci));
            }
        }
        let owner = owner
            .into_iter()
            .enumerate()
            .map(|(x, o)| o.ok_or_else(|| Error::InvalidTiling(format!("point {x} is not covered"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            action: action.clone(),
            tiling: tiling.clone(),
            rep: action_representation(action)?,
            owner,
        })
    }

    pub fn tiling(&self) -> &TilingSet {
        &self.tiling
    }

    pub fn action(&self) -> &GroupAction {
        &self.action
    }

    /// Explicit inversion: for `x = sigma_{g^{-1}}(c)`,
    /// `phi(x) = J(g^{-1}, c)^{-1/2} tau(Z(c) rho(g)*)`.
    pub fn inverse(&self, image: &HelsonImage) -> Result<HVector> {
        let k = self.tiling.points.len();
        if image.fibers.len() != k {
            return Err(Error::FiberMismatch {
                expected: k,
                found: image.fibers.len(),
            });
        }
        let group = self.action.group();
        let m = self.action.points();
        let mut phi = CVec::zeros(m);
        for x in 0..m {
            // sigma_h(c) = x, so g = h^{-1} moves x back to c
            let (h, ci) = self.owner[x];
            let g = group.inv(h);
            let c = self.tiling.points[ci];
            let rho_star = AlgOperator::rho(group, g).adjoint();
            let coeff = (&image.fibers[ci].value * &rho_star).trace_tau();
            let value = coeff / self.action.jacobian(group.inv(g), c).sqrt();
            phi[x] = value * self.action.measure(x).sqrt();
        }
        Ok(phi)
    }
}

impl HelsonMap for ZakTransform {
    fn representation(&self) -> &Representation {
        &self.rep
    }

    fn transform(&self, phi: &HVector) -> Result<HelsonImage> {
        self.rep.check_vector(phi)?;
        let group = self.action.group().clone();
        let n = group.order();
        let moved: Vec<CVec> = (0..n).map(|g| self.rep.apply(g, phi)).collect();
        let fibers = self
            .tiling
            .points
            .iter()
            .map(|&c| {
                let mu = self.action.measure(c);
                let mut value = AlgOperator::zero(&group);
                for (g, v) in moved.iter().enumerate() {
                    let coeff: C64 = v[c] / mu.sqrt();
                    value = value + AlgOperator::rho(&group, g).scale(coeff);
                }
                Fiber {
                    label: format!("x{c}"),
                    weight: mu,
                    value,
                }
            })
            .collect();
        Ok(HelsonImage { fibers })
    }
}

pub fn zak_transform(action: &GroupAction, tiling: &TilingSet, phi: &HVector) -> Result<HelsonImage> {
    ZakTransform::new(action, tiling)?.transform(phi)
}

pub fn zak_inverse(action: &GroupAction, tiling: &TilingSet, image: &HelsonImage) -> Result<HVector> {
    ZakTransform::new(action, tiling)?.inverse(image)
}

#[derive(Debug, Clone, Serialize)]
pub struct HelsonReport {
    pub samples: usize,
    pub isometry: f64,
    pub intertwining: f64,
    pub bracket_recovery: f64,
    pub max_defect: f64,
    pub passed: bool,
}

/// Checks isometry, intertwining with every group element, and recovery of
/// the bracket on seeded random vectors from the map's domain.
pub fn verify_helson_axioms(map: &dyn HelsonMap, samples: usize, tol: f64, seed: u64) -> Result<HelsonReport> {
    let rep = map.representation();
    let group = rep.group().clone();
    let n = group.order();
    let rho_stars: Vec<AlgOperator> = (0..n).map(|g| AlgOperator::rho(&group, g).adjoint()).collect();
    let mut rng = Sampler::new(seed);
    let mut r = HelsonReport {
        samples,
        isometry: 0.0,
        intertwining: 0.0,
        bracket_recovery: 0.0,
        max_defect: 0.0,
        passed: true,
    };
    let draw = |rng: &mut Sampler| {
        let v = rng.cvec(rep.dim());
        match map.domain_projection() {
            Some(p) => p * v,
            None => v,
        }
    };
    for _ in 0..samples {
        let phi = draw(&mut rng);
        let psi = draw(&mut rng);
        let t_phi = map.transform(&phi)?;
        let t_psi = map.transform(&psi)?;
        r.isometry = r.isometry.max((t_phi.norm_squared() - phi.norm_squared()).abs());
        for (g, rs) in rho_stars.iter().enumerate() {
            let lhs = map.transform(&rep.apply(g, &phi))?;
            let rhs = t_phi.right_multiply(rs);
            r.intertwining = r.intertwining.max(lhs.max_abs_diff(&rhs));
        }
        let recovered = t_phi.bracket_with(&t_psi)?;
        let direct = bracket(rep, &phi, &psi)?;
        r.bracket_recovery = r.bracket_recovery.max(recovered.max_abs_diff(&direct));
    }
    r.max_defect = r.isometry.max(r.intertwining).max(r.bracket_recovery);
    r.passed = r.max_defect <= tol;
    Ok(r)
}

/// Residual of `T[V] rho(g) ⊆ T[V]` over a basis of `span(V)` and all `g`.
/// Zero (up to rounding) exactly when `span(V)` is invariant.
pub fn multiplicative_invariance_defect(map: &dyn HelsonMap, spanning: &[HVector]) -> Result<f64> {
    let rep = map.representation();
    let group = rep.group().clone();
    let basis = linalg::orthonormalize_in_order(spanning, DEFAULT_RANK_CUTOFF);
    let images = basis.iter().map(|v| map.transform(v)).collect::<Result<Vec<_>>>()?;
    if images.is_empty() {
        return Ok(0.0);
    }
    let flat: Vec<CVec> = images.iter().map(|im| im.flatten()).collect();
    let q = linalg::columns_to_matrix(flat[0].len(), &flat);
    let q = linalg::range_basis(&q, DEFAULT_RANK_CUTOFF);
    let mut worst: f64 = 0.0;
    for im in &images {
        for g in 0..group.order() {
            let moved = im.right_multiply(&AlgOperator::rho(&group, g)).flatten();
            let residual = &moved - &q * (q.adjoint() * &moved);
            worst = worst.max(residual.norm());
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::FiniteGroup;
    use std::sync::Arc;

    fn d3() -> GroupRef {
        Arc::new(FiniteGroup::dihedral(3))
    }

    /// Fixed point, one {e,b}-coset orbit, one free orbit: 10 points.
    fn d3_model() -> (GroupAction, Representation) {
        let g = d3();
        let action = GroupAction::disjoint_union(&[
            GroupAction::trivial(&g, 1),
            GroupAction::on_cosets(&g, &[0, 3]).unwrap(),
            GroupAction::left_translation(&g),
        ])
        .unwrap();
        let rep = action_representation(&action).unwrap();
        (action, rep)
    }

    fn basis_vector(d: usize, i: usize) -> CVec {
        let mut v = CVec::zeros(d);
        v[i] = real(1.0);
        v
    }

    fn standard_basis(d: usize) -> Vec<CVec> {
        (0..d).map(|i| basis_vector(d, i)).collect()
    }

    #[test]
    fn s_psi_examples() {
        let (_, rep) = d3_model();
        let g = rep.group().clone();
        let psi = basis_vector(10, 1);
        let support = bracket(&rep, &psi, &psi).unwrap().support_projection(1e-10).unwrap();
        let at_delta = s_psi_forward(&rep, &psi, &SeqVector::delta(&g, 0)).unwrap();
        assert!(at_delta.max_abs_diff(&support) < 1e-12);

        // orthonormal orbit: S_psi is the Fourier transform itself
        let free = basis_vector(10, 4);
        let mut s = Sampler::new(2);
        let f = s.seq_vector(&g);
        let out = s_psi_forward(&rep, &free, &f).unwrap();
        assert!(out.max_abs_diff(&fourier_transform(&f)) < 1e-12);
        let back = s_psi_inverse(&rep, &free, &AlgOperator::rho(&g, 2).adjoint()).unwrap();
        assert!(linalg::max_abs_vec(&(back - rep.apply(2, &free))) < 1e-12);

        assert_eq!(
            s_psi_forward(&rep, &CVec::zeros(10), &f).unwrap_err(),
            Error::ZeroGenerator
        );
    }

    #[test]
    fn s_psi_round_trip_and_isometry() {
        let (_, rep) = d3_model();
        let g = rep.group().clone();
        let mut s = Sampler::new(17);
        let psi = s.cvec(10);
        let b = bracket(&rep, &psi, &psi).unwrap();
        let support = b.support_projection(1e-10).unwrap();
        let fwd = s_psi_forward(&rep, &psi, &support.fourier_coefficients().unwrap()).unwrap();
        assert!(fwd.max_abs_diff(&support) < 1e-10);

        for _ in 0..10 {
            let f_op = s.algebra_element(&g);
            let v = s_psi_inverse(&rep, &psi, &f_op).unwrap();
            let orbit_coeffs = (&support * &f_op).fourier_coefficients().unwrap();
            let synthesized = rep.orbit_matrix(&psi) * orbit_coeffs.coeffs();
            assert!(linalg::max_abs_vec(&(&v - synthesized)) < 1e-10);
            let again = s_psi_forward(&rep, &psi, &orbit_coeffs).unwrap();
            assert!(again.max_abs_diff(&(&support * &f_op)) < 1e-10);

            // ||S_psi[phi]||_{2,[psi,psi]} = ||phi||
            let f = s.seq_vector(&g);
            let mut phi = CVec::zeros(10);
            for (x, c) in f.coeffs().iter().enumerate() {
                phi += rep.apply(x, &psi) * *c;
            }
            let image = s_psi_forward(&rep, &psi, &f).unwrap();
            let wn = crate::vnalg::weighted_norm(&b, &image).unwrap();
            assert!((wn - phi.norm()).abs() < 1e-10 * phi.norm().max(1.0));
        }
    }

    #[test]
    fn s_psi_is_well_defined() {
        let (_, rep) = d3_model();
        let g = rep.group().clone();
        let mut s = Sampler::new(23);
        // a generator with a nontrivial kernel in its synthesis matrix
        let psi = basis_vector(10, 0) * real(0.7) + basis_vector(10, 2);
        let synth = rep.orbit_matrix(&psi);
        let kernel = CMat::identity(6, 6) - linalg::pseudo_inverse(&synth, 1e-10) * &synth;
        assert!(linalg::max_abs(&kernel) > 0.1);
        for _ in 0..20 {
            let f = s.cvec(6);
            let f2 = &f + &kernel * s.cvec(6);
            assert!(linalg::max_abs_vec(&(&synth * &f - &synth * &f2)) < 1e-12);
            let a = s_psi_forward(&rep, &psi, &SeqVector::new(g.clone(), f).unwrap()).unwrap();
            let b = s_psi_forward(&rep, &psi, &SeqVector::new(g.clone(), f2).unwrap()).unwrap();
            assert!(a.max_abs_diff(&b) < 1e-9);
        }
    }

    #[test]
    fn decomposition_of_d3_model() {
        let (_, rep) = d3_model();
        let dec = decompose_invariant(&rep, &standard_basis(10)).unwrap();
        assert_eq!(dec.orbit_dims(), vec![1, 3, 6]);
        assert_eq!(dec.consumed, vec![0, 1, 4]);
        assert!(dec.cross_defect() < 1e-12);

        let mut s = Sampler::new(3);
        let psi = s.cvec(10);
        let orbit: Vec<CVec> = (0..6).map(|g| rep.apply(g, &psi)).collect();
        let single = decompose_invariant(&rep, &orbit).unwrap();
        assert_eq!(single.len(), 1);
        assert_eq!(single.orbit_dims()[0], single.span_dim);
    }

    #[test]
    fn left_invariant_spaces_are_principal() {
        let g = Arc::new(FiniteGroup::cyclic(4));
        let rep = Representation::left_regular(&g);
        let dec = decompose_invariant(&rep, &standard_basis(4)).unwrap();
        assert_eq!(dec.len(), 1);
        assert_eq!(dec.orbit_dims(), vec![4]);
    }

    #[test]
    fn decomposition_rejects_non_invariant_span() {
        let (_, rep) = d3_model();
        let err = decompose_invariant(&rep, &[basis_vector(10, 1)]).unwrap_err();
        assert!(matches!(err, Error::NotInvariant { .. }));
    }

    #[test]
    fn periodization_map_on_d3_model() {
        let (_, rep) = d3_model();
        let dec = decompose_invariant(&rep, &standard_basis(10)).unwrap();
        let map = build_helson_map(&rep, dec).unwrap();
        let report = verify_helson_axioms(&map, 25, 1e-10, 0).unwrap();
        assert!(report.passed, "{report:?}");

        // generator psi_j maps to [psi_j,psi_j]^{1/2} s on fiber j
        let psi1 = basis_vector(10, 1);
        let img = map.transform(&psi1).unwrap();
        let b = bracket(&rep, &psi1, &psi1).unwrap();
        let expected = &b.psd_sqrt(RootMode::Sqrt, 1e-10).unwrap() * &b.support_projection(1e-10).unwrap();
        assert!(img.fibers[1].value.max_abs_diff(&expected) < 1e-12);
        assert!(linalg::max_abs(img.fibers[0].value.matrix()) < 1e-12);
        assert!(linalg::max_abs(img.fibers[2].value.matrix()) < 1e-12);

        // fiber coefficients 1/sqrt(6), 1/sqrt(2), 1 against the brackets
        let mut s = Sampler::new(6);
        let phi = s.cvec(10);
        let img = map.transform(&phi).unwrap();
        let gens = [0, 1, 4];
        let coeffs = [1.0 / 6f64.sqrt(), 1.0 / 2f64.sqrt(), 1.0];
        for (i, (&gi, &c)) in gens.iter().zip(&coeffs).enumerate() {
            let target = bracket(&rep, &phi, &basis_vector(10, gi)).unwrap().scale(real(c));
            assert!(img.fibers[i].value.max_abs_diff(&target) < 1e-12, "fiber {i}");
        }
    }

    #[test]
    fn fourier_map_is_helson() {
        let g = d3();
        let map = FourierHelsonMap::new(&g);
        let report = verify_helson_axioms(&map, 20, 1e-12, 1).unwrap();
        assert!(report.passed, "{report:?}");
    }

    #[test]
    fn tiling_sets() {
        let g = d3();
        let t = find_tiling_set(&GroupAction::left_translation(&g)).unwrap();
        assert_eq!(t.points, vec![0]);

        let z2 = Arc::new(FiniteGroup::cyclic(2));
        let pairs = GroupAction::unweighted(z2, vec![vec![0, 1, 2, 3], vec![1, 0, 3, 2]]).unwrap();
        assert_eq!(find_tiling_set(&pairs).unwrap().points, vec![0, 2]);

        let natural = GroupAction::on_cosets(&g, &[0, 3]).unwrap();
        assert!(matches!(
            find_tiling_set(&natural),
            Err(Error::NotFree { element: 3, .. })
        ));

        let lt = GroupAction::left_translation(&g);
        let bad = TilingSet { points: vec![0, 1] };
        assert!(matches!(ZakTransform::new(&lt, &bad), Err(Error::InvalidTiling(_))));
    }

    #[test]
    fn zak_examples() {
        let g = d3();
        let lt = GroupAction::left_translation(&g);
        let c = find_tiling_set(&lt).unwrap();
        let zak = ZakTransform::new(&lt, &c).unwrap();

        let mut indicator = CVec::zeros(6);
        indicator[0] = real(1.0);
        let img = zak.transform(&indicator).unwrap();
        assert_eq!(img.fibers.len(), 1);
        assert!(img.fibers[0].value.max_abs_diff(&AlgOperator::identity(&g)) < 1e-15);
        let back = zak.inverse(&img).unwrap();
        assert!(linalg::max_abs_vec(&(back - indicator)) < 1e-15);

        // single fiber sum_g phi(g^{-1} .) rho(g): fiber at e is sum_g phi(g^{-1}) rho(g)
        let mut s = Sampler::new(4);
        let phi = s.cvec(6);
        let img = zak.transform(&phi).unwrap();
        let mut expected = AlgOperator::zero(&g);
        for x in 0..6 {
            expected = expected + AlgOperator::rho(&g, x).scale(phi[g.inv(x)]);
        }
        assert!(img.fibers[0].value.max_abs_diff(&expected) < 1e-14);
        assert!((img.norm_squared() - phi.norm_squared()).abs() < 1e-12);

        let zero = HelsonImage {
            fibers: vec![Fiber {
                label: "x0".into(),
                weight: 1.0,
                value: AlgOperator::zero(&g),
            }],
        };
        assert_eq!(zak.inverse(&zero).unwrap(), CVec::zeros(6));
        let two = HelsonImage {
            fibers: vec![zero.fibers[0].clone(), zero.fibers[0].clone()],
        };
        assert!(matches!(
            zak.inverse(&two),
            Err(Error::FiberMismatch { expected: 1, found: 2 })
        ));
    }

    #[test]
    fn weighted_zak_round_trip() {
        // Z_6 acting freely on 12 points (two regular orbits) with a
        // non-constant Jacobian on the second orbit
        let z6 = Arc::new(FiniteGroup::cyclic(6));
        let n = 6;
        let perms: Vec<Vec<usize>> = (0..n)
            .map(|g| {
                (0..12)
                    .map(|x| if x < 6 { (x + g) % 6 } else { 6 + (x - 6 + g) % 6 })
                    .collect()
            })
            .collect();
        let masses: Vec<f64> = (0..12)
            .map(|x| if x < 6 { 1.0 } else { 1.0 + 0.5 * (x - 6) as f64 })
            .collect();
        let jac: Vec<Vec<f64>> = (0..n)
            .map(|g| (0..12).map(|x| masses[perms[g][x]] / masses[x]).collect())
            .collect();
        let action = GroupAction::new(z6, perms, jac, 1e-12).unwrap();
        let c = find_tiling_set(&action).unwrap();
        assert_eq!(c.points, vec![0, 6]);
        let zak = ZakTransform::new(&action, &c).unwrap();
        let mut s = Sampler::new(12);
        for _ in 0..10 {
            let phi = s.cvec(12);
            let img = zak.transform(&phi).unwrap();
            assert!((img.norm_squared() - phi.norm_squared()).abs() < 1e-10);
            let back = zak.inverse(&img).unwrap();
            assert!(linalg::max_abs_vec(&(back - &phi)) < 1e-10);
        }
        let report = verify_helson_axioms(&zak, 20, 1e-10, 3).unwrap();
        assert!(report.passed, "{report:?}");
    }

    #[test]
    fn multiplicative_invariance() {
        let (_, rep) = d3_model();
        let dec = decompose_invariant(&rep, &standard_basis(10)).unwrap();
        let map = build_helson_map(&rep, dec).unwrap();
        let boundary: Vec<CVec> = (1..4).map(|i| basis_vector(10, i)).collect();
        assert!(multiplicative_invariance_defect(&map, &boundary).unwrap() < 1e-9);
        let lone = vec![basis_vector(10, 1)];
        assert!(multiplicative_invariance_defect(&map, &lone).unwrap() > 0.1);
    }
}
