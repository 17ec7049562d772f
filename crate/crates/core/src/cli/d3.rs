//! Finite permutation model of the dihedral example.
//!
//! Ten points carry one orbit of each type: a fixed point, a three-point
//! orbit with stabilizer `{e, b}`, and a free orbit of size six. The three
//! basis vectors below have brackets `sum_g rho(g)*`, `I + rho(b)*` and `I`.

use std::sync::Arc;

use crate::groups::FiniteGroup;
use crate::linalg::{real, CVec};
use crate::repr::{action_representation, GroupAction, HVector, Representation};
use crate::vnalg::GroupRef;

/// Index of `b` in the canonical dihedral order `e, a, a^2, b, ab, a^2b`.
pub const REFLECTION: usize = 3;

#[derive(Debug, Clone)]
pub struct D3Model {
    pub group: GroupRef,
    pub action: GroupAction,
    pub rep: Representation,
}

impl D3Model {
    pub fn new() -> Self {
        let group: GroupRef = Arc::new(FiniteGroup::dihedral(3));
        let action = GroupAction::disjoint_union(&[
            GroupAction::trivial(&group, 1),
            GroupAction::on_cosets(&group, &[0, REFLECTION]).expect("{e, b} is a subgroup"),
            GroupAction::left_translation(&group),
        ])
        .expect("all pieces act through the same group");
        let rep = action_representation(&action).expect("permutation actions are unitary");
        Self { group, action, rep }
    }

    pub fn dim(&self) -> usize {
        self.rep.dim()
    }

    /// The fixed point.
    pub fn fixed(&self) -> HVector {
        unit(self.dim(), 0)
    }

    /// The point of the orbit with stabilizer `{e, b}` that `{e, b}` fixes.
    pub fn boundary(&self) -> HVector {
        unit(self.dim(), 1)
    }

    /// The identity point of the free orbit.
    pub fn interior(&self) -> HVector {
        unit(self.dim(), 4)
    }
}

impl Default for D3Model {
    fn default() -> Self {
        Self::new()
    }
}

fn unit(d: usize, i: usize) -> CVec {
    let mut v = CVec::zeros(d);
    v[i] = real(1.0);
    v
}
