//! Unitary representations on `C^d`, finite group actions, and the bracket map.
//!
//! The bracket `[phi, psi]` is the algebra element whose Fourier coefficients
//! are the correlations `<phi, Pi(g) psi>`, i.e.
//! `[phi, psi] = sum_g <phi, Pi(g) psi> rho(g)*`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::linalg::{self, real, CMat, CVec, DEFAULT_TOL};
use crate::sampling::Sampler;
use crate::vnalg::{fourier_transform, AlgOperator, GroupRef, SeqVector};

/// Vectors of the representation space.
pub type HVector = CVec;

#[derive(Debug, Clone)]
pub struct Representation {
    group: GroupRef,
    dim: usize,
    matrices: Vec<CMat>,
    unitarity_defect: f64,
    homomorphism_defect: f64,
}

impl Representation {
    /// Validates unitarity and the homomorphism law, recording the worst
    /// defects seen.
    pub fn new(group: GroupRef, matrices: Vec<CMat>, tol: f64) -> Result<Self> {
        let n = group.order();
        if matrices.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: matrices.len(),
            });
        }
        let dim = matrices[0].nrows();
        for m in &matrices {
            if m.nrows() != dim || m.ncols() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: m.nrows().max(m.ncols()),
                });
            }
        }
        let eye = CMat::identity(dim, dim);
        let mut unitarity_defect: f64 = 0.0;
        for (g, m) in matrices.iter().enumerate() {
            let defect = linalg::max_abs(&(m.adjoint() * m - &eye));
            if defect > tol {
                return Err(Error::NotUnitary { element: g, defect });
            }
            unitarity_defect = unitarity_defect.max(defect);
        }
        let mut homomorphism_defect: f64 = 0.0;
        for g1 in 0..n {
            for g2 in 0..n {
                let prod = &matrices[g1] * &matrices[g2];
                let defect = linalg::max_abs(&(prod - &matrices[group.mul(g1, g2)]));
                if defect > tol {
                    return Err(Error::NotHomomorphism {
                        first: g1,
                        second: g2,
                        defect,
                    });
                }
                homomorphism_defect = homomorphism_defect.max(defect);
            }
        }
        Ok(Self {
            group,
            dim,
            matrices,
            unitarity_defect,
            homomorphism_defect,
        })
    }

    pub fn trivial(group: &GroupRef, dim: usize) -> Self {
        let matrices = vec![CMat::identity(dim, dim); group.order()];
        Self::new(group.clone(), matrices, DEFAULT_TOL).expect("trivial representation")
    }

    pub fn left_regular(group: &GroupRef) -> Self {
        let matrices = (0..group.order())
            .map(|g| AlgOperator::lambda(group, g).into_matrix())
            .collect();
        Self::new(group.clone(), matrices, DEFAULT_TOL).expect("left regular representation")
    }

    pub fn right_regular(group: &GroupRef) -> Self {
        let matrices = (0..group.order())
            .map(|g| AlgOperator::rho(group, g).into_matrix())
            .collect();
        Self::new(group.clone(), matrices, DEFAULT_TOL).expect("right regular representation")
    }

    /// `W Pi(g) W*` for a unitary `W`.
    pub fn conjugated(&self, w: &CMat) -> Result<Self> {
        if w.nrows() != self.dim || w.ncols() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: w.nrows(),
            });
        }
        let matrices = self.matrices.iter().map(|m| w * m * w.adjoint()).collect();
        Self::new(self.group.clone(), matrices, 1e-8)
    }

    /// Block-diagonal sum of representations of the same group.
    pub fn direct_sum(parts: &[&Representation]) -> Result<Self> {
        let group = parts
            .first()
            .ok_or(Error::DimensionMismatch { expected: 1, found: 0 })?
            .group
            .clone();
        if parts.iter().any(|p| *p.group != *group) {
            return Err(Error::GroupMismatch);
        }
        let dim: usize = parts.iter().map(|p| p.dim).sum();
        let matrices = (0..group.order())
            .map(|g| {
                let mut m = CMat::zeros(dim, dim);
                let mut off = 0;
                for p in parts {
                    m.view_mut((off, off), (p.dim, p.dim)).copy_from(&p.matrices[g]);
                    off += p.dim;
                }
                m
            })
            .collect();
        Self::new(group, matrices, 1e-8)
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, g: usize) -> &CMat {
        &self.matrices[g]
    }

    pub fn matrices(&self) -> &[CMat] {
        &self.matrices
    }

    pub fn unitarity_defect(&self) -> f64 {
        self.unitarity_defect
    }

    pub fn homomorphism_defect(&self) -> f64 {
        self.homomorphism_defect
    }

    pub fn apply(&self, g: usize, v: &HVector) -> HVector {
        &self.matrices[g] * v
    }

    pub(crate) fn check_vector(&self, v: &HVector) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        Ok(())
    }

    /// Columns `Pi(g) phi` for `g` in canonical order.
    pub fn orbit_matrix(&self, phi: &HVector) -> CMat {
        let n = self.group.order();
        let mut m = CMat::zeros(self.dim, n);
        for g in 0..n {
            m.set_column(g, &self.apply(g, phi));
        }
        m
    }
}

/// A finite action `sigma_g` on `{0, .., m-1}` with a positive Jacobian cocycle.
///
/// The measure is `mu(sigma_g(r)) = J(g, r)` with `mu(r) = 1` on the smallest
/// point `r` of each orbit. Vectors live in flattened coordinates
/// `u(x) = sqrt(mu(x)) phi(x)`, so the induced representation is unitary for
/// the standard inner product.
#[derive(Debug, Clone)]
pub struct GroupAction {
    group: GroupRef,
    perms: Vec<Vec<usize>>,
    jacobian: Vec<Vec<f64>>,
    measure: Vec<f64>,
}

impl GroupAction {
    pub fn new(group: GroupRef, perms: Vec<Vec<usize>>, jacobian: Vec<Vec<f64>>, tol: f64) -> Result<Self> {
        let n = group.order();
        if perms.len() != n || jacobian.len() != n {
            return Err(Error::InvalidAction(format!(
                "expected {n} permutations and Jacobian rows, found {} and {}",
                perms.len(),
                jacobian.len()
            )));
        }
        let m = perms[0].len();
        for (g, p) in perms.iter().enumerate() {
            if p.len() != m || jacobian[g].len() != m {
                return Err(Error::InvalidAction(format!("row for element {g} has wrong length")));
            }
            let mut seen = vec![false; m];
            for &x in p {
                if x >= m || seen[x] {
                    return Err(Error::InvalidAction(format!("sigma_{g} is not a permutation")));
                }
                seen[x] = true;
            }
            if let Some(x) = jacobian[g]
                .iter()
                .position(|&j| j.is_nan() || j <= 0.0 || !j.is_finite())
            {
                return Err(Error::InvalidAction(format!("J({g}, {x}) is not positive")));
            }
        }
        let e = group.identity();
        if perms[e].iter().enumerate().any(|(x, &y)| x != y) {
            return Err(Error::InvalidAction("sigma_e is not the identity".into()));
        }
        for g1 in 0..n {
            for g2 in 0..n {
                let g12 = group.mul(g1, g2);
                for x in 0..m {
                    if perms[g1][perms[g2][x]] != perms[g12][x] {
                        return Err(Error::InvalidAction(format!(
                            "sigma_{g1} o sigma_{g2} != sigma_{g12} at point {x}"
                        )));
                    }
                    let lhs = jacobian[g12][x];
                    let rhs = jacobian[g1][perms[g2][x]] * jacobian[g2][x];
                    if (lhs - rhs).abs() > tol * lhs.max(rhs) {
                        return Err(Error::InvalidAction(format!(
                            "cocycle law fails for ({g1}, {g2}) at point {x}"
                        )));
                    }
                }
            }
        }

        let mut measure = vec![0.0; m];
        for x in 0..m {
            if measure[x] > 0.0 {
                continue;
            }
            // x is the smallest unvisited point, hence the orbit representative
            for g in 0..n {
                let y = perms[g][x];
                let mass = jacobian[g][x];
                if measure[y] == 0.0 {
                    measure[y] = mass;
                } else if (measure[y] - mass).abs() > tol * mass.max(measure[y]) {
                    return Err(Error::InvalidAction(format!(
                        "Jacobian is not trivial on the stabilizer of point {x}"
                    )));
                }
            }
        }
        Ok(Self {
            group,
            perms,
            jacobian,
            measure,
        })
    }

    /// Action with `J = 1`.
    pub fn unweighted(group: GroupRef, perms: Vec<Vec<usize>>) -> Result<Self> {
        let jac = perms.iter().map(|p| vec![1.0; p.len()]).collect();
        Self::new(group, perms, jac, DEFAULT_TOL)
    }

    /// `G` acting on itself by left multiplication.
    pub fn left_translation(group: &GroupRef) -> Self {
        let perms = (0..group.order()).map(|g| group.cayley_row(g).to_vec()).collect();
        Self::unweighted(group.clone(), perms).expect("left translation is an action")
    }

    pub fn trivial(group: &GroupRef, points: usize) -> Self {
        let perms = vec![(0..points).collect(); group.order()];
        Self::unweighted(group.clone(), perms).expect("trivial action")
    }

    /// Left action on the cosets `gH` of a subgroup `H`, cosets numbered in
    /// order of their first element.
    pub fn on_cosets(group: &GroupRef, subgroup: &[usize]) -> Result<Self> {
        let n = group.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut count = 0;
        for g in 0..n {
            if coset_of[g] != usize::MAX {
                continue;
            }
            for &h in subgroup {
                let gh = group.mul(g, h);
                if coset_of[gh] != usize::MAX {
                    return Err(Error::InvalidAction("subgroup elements do not form a subgroup".into()));
                }
                coset_of[gh] = count;
            }
            count += 1;
        }
        if count * subgroup.len() != n {
            return Err(Error::InvalidAction("subgroup does not partition the group".into()));
        }
        let reps: Vec<usize> = (0..count)
            .map(|c| (0..n).find(|&g| coset_of[g] == c).expect("every coset is non-empty"))
            .collect();
        let perms = (0..n)
            .map(|g| reps.iter().map(|&r| coset_of[group.mul(g, r)]).collect())
            .collect();
        Self::unweighted(group.clone(), perms)
    }

    /// Disjoint union of actions of one group, points concatenated in order.
    pub fn disjoint_union(parts: &[GroupAction]) -> Result<Self> {
        let group = parts
            .first()
            .ok_or_else(|| Error::InvalidAction("empty union".into()))?
            .group
            .clone();
        let n = group.order();
        let mut perms = vec![Vec::new(); n];
        let mut jac = vec![Vec::new(); n];
        let mut offset = 0;
        for part in parts {
            if *part.group != *group {
                return Err(Error::GroupMismatch);
            }
            for g in 0..n {
                perms[g].extend(part.perms[g].iter().map(|&x| x + offset));
                jac[g].extend_from_slice(&part.jacobian[g]);
            }
            offset += part.points();
        }
        Self::new(group, perms, jac, DEFAULT_TOL)
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn points(&self) -> usize {
        self.perms[0].len()
    }

    pub fn sigma(&self, g: usize, x: usize) -> usize {
        self.perms[g][x]
    }

    pub fn jacobian(&self, g: usize, x: usize) -> f64 {
        self.jacobian[g][x]
    }

    pub fn measure(&self, x: usize) -> f64 {
        self.measure[x]
    }

    pub fn perms(&self) -> &[Vec<usize>] {
        &self.perms
    }

    pub fn jacobians(&self) -> &[Vec<f64>] {
        &self.jacobian
    }

    /// Orbits, each listed as `sigma_g(r)` over `g` with duplicates removed.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.points()];
        let mut out = Vec::new();
        for x in 0..self.points() {
            if seen[x] {
                continue;
            }
            let mut orbit = Vec::new();
            for g in 0..self.group.order() {
                let y = self.perms[g][x];
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
            out.push(orbit);
        }
        out
    }

    pub fn stabilizer(&self, x: usize) -> Vec<usize> {
        (0..self.group.order()).filter(|&g| self.perms[g][x] == x).collect()
    }

    /// Convert a function on the points to flattened coordinates.
    pub fn flatten(&self, phi: &CVec) -> CVec {
        CVec::from_iterator(
            phi.len(),
            phi.iter().enumerate().map(|(x, v)| v * self.measure[x].sqrt()),
        )
    }

    pub fn unflatten(&self, u: &CVec) -> CVec {
        CVec::from_iterator(u.len(), u.iter().enumerate().map(|(x, v)| v / self.measure[x].sqrt()))
    }
}

/// `Pi(g) phi(x) = J(g^{-1}, x)^{1/2} phi(sigma_{g^{-1}}(x))`, written in
/// flattened coordinates.
pub fn action_representation(action: &GroupAction) -> Result<Representation> {
    let group = action.group.clone();
    let m = action.points();
    let matrices = (0..group.order())
        .map(|g| {
            let ginv = group.inv(g);
            let mut mat = CMat::zeros(m, m);
            for x in 0..m {
                let src = action.sigma(ginv, x);
                let w = action.measure(x) * action.jacobian(ginv, x) / action.measure(src);
                mat[(x, src)] = real(w.sqrt());
            }
            mat
        })
        .collect();
    Representation::new(group, matrices, 1e-8)
        .map_err(|e| Error::InvalidAction(format!("induced representation invalid: {e}")))
}

/// `[phi, psi] = sum_g <phi, Pi(g) psi> rho(g)*`.
pub fn bracket(rep: &Representation, phi: &HVector, psi: &HVector) -> Result<AlgOperator> {
    rep.check_vector(phi)?;
    rep.check_vector(psi)?;
    Ok(fourier_transform(&correlation(rep, phi, psi)))
}

/// The sequence `g -> <phi, Pi(g) psi>`.
pub fn correlation(rep: &Representation, phi: &HVector, psi: &HVector) -> SeqVector {
    let n = rep.group.order();
    let coeffs = CVec::from_iterator(n, (0..n).map(|g| linalg::inner(phi, &rep.apply(g, psi))));
    SeqVector::new(rep.group.clone(), coeffs).expect("one coefficient per element")
}

#[derive(Debug, Clone, Serialize)]
pub struct BracketReport {
    pub samples: usize,
    /// `[psi1, psi2]* = [psi2, psi1]`
    pub adjoint_symmetry: f64,
    /// `[psi1, Pi(g) psi2] = rho(g) [psi1, psi2]`
    pub left_equivariance: f64,
    /// `[Pi(g) psi1, psi2] = [psi1, psi2] rho(g)*`
    pub right_equivariance: f64,
    /// `max(0, -lambda_min([psi, psi]))`
    pub positivity: f64,
    /// `| ||[psi, psi]||_1 - ||psi||^2 |`
    pub trace_norm: f64,
    pub algebra_membership: f64,
    pub max_defect: f64,
    pub passed: bool,
}

/// Checks the adjoint, equivariance, and positivity laws of the bracket on
/// seeded random vectors.
pub fn verify_bracket_properties(rep: &Representation, samples: usize, tol: f64, seed: u64) -> BracketReport {
    let mut rng = Sampler::new(seed);
    let group = rep.group.clone();
    let n = group.order();
    let mut r = BracketReport {
        samples,
        adjoint_symmetry: 0.0,
        left_equivariance: 0.0,
        right_equivariance: 0.0,
        positivity: 0.0,
        trace_norm: 0.0,
        algebra_membership: 0.0,
        max_defect: 0.0,
        passed: true,
    };
    let rhos: Vec<AlgOperator> = (0..n).map(|g| AlgOperator::rho(&group, g)).collect();
    for _ in 0..samples {
        let psi1 = rng.cvec(rep.dim);
        let psi2 = rng.cvec(rep.dim);
        let b12 = bracket(rep, &psi1, &psi2).expect("dimensions match");
        let b21 = bracket(rep, &psi2, &psi1).expect("dimensions match");
        r.adjoint_symmetry = r.adjoint_symmetry.max(b12.adjoint().max_abs_diff(&b21));
        r.algebra_membership = r.algebra_membership.max(b12.algebra_defect());

        let g = rng.index(n);
        let moved2 = rep.apply(g, &psi2);
        let moved1 = rep.apply(g, &psi1);
        let left = bracket(rep, &psi1, &moved2).expect("dimensions match");
        r.left_equivariance = r.left_equivariance.max(left.max_abs_diff(&(&rhos[g] * &b12)));
        let right = bracket(rep, &moved1, &psi2).expect("dimensions match");
        r.right_equivariance = r
            .right_equivariance
            .max(right.max_abs_diff(&(&b12 * &rhos[g].adjoint())));

        let b11 = bracket(rep, &psi1, &psi1).expect("dimensions match");
        let (values, _) = linalg::hermitian_eigen(b11.matrix());
        let min = values.last().copied().unwrap_or(0.0);
        r.positivity = r.positivity.max((-min).max(0.0));
        r.trace_norm = r.trace_norm.max((b11.lp_norm(1.0) - psi1.norm_squared()).abs());
    }
    r.max_defect = [
        r.adjoint_symmetry,
        r.left_equivariance,
        r.right_equivariance,
        r.positivity,
        r.trace_norm,
        r.algebra_membership,
    ]
    .into_iter()
    .fold(0.0, f64::max);
    r.passed = r.max_defect <= tol;
    r
}

/// A random unitary representation: a permutation representation of a
/// random action (regular and coset pieces), conjugated by a random unitary.
pub fn random_representation(group: &GroupRef, max_dim: usize, rng: &mut Sampler) -> Representation {
    let n = group.order();
    let mut parts = Vec::new();
    let mut dim = 0;
    // always include something, then keep adding pieces while they fit
    loop {
        let choice = rng.index(3);
        let piece = match choice {
            0 if n <= max_dim - dim => GroupAction::left_translation(group),
            1 => GroupAction::trivial(group, 1),
            _ => {
                let subgroup = random_cyclic_subgroup(group, rng);
                let act = GroupAction::on_cosets(group, &subgroup).expect("cyclic subgroup");
                if act.points() > max_dim - dim {
                    GroupAction::trivial(group, 1)
                } else {
                    act
                }
            }
        };
        dim += piece.points();
        parts.push(piece);
        if dim >= max_dim || rng.index(3) == 0 {
            break;
        }
    }
    let action = GroupAction::disjoint_union(&parts).expect("same group");
    let base = action_representation(&action).expect("valid action");
    let w = rng.unitary(base.dim());
    base.conjugated(&w).expect("unitary conjugation")
}

fn random_cyclic_subgroup(group: &FiniteGroup, rng: &mut Sampler) -> Vec<usize> {
    let g = rng.index(group.order());
    let mut sub = vec![group.identity()];
    let mut acc = g;
    while acc != group.identity() {
        sub.push(acc);
        acc = group.mul(acc, g);
    }
    sub
}
