//! Analysis configuration documents.
//!
//! ```json
//! {
//!   "group": {"kind": "dihedral", "m": 3},
//!   "representation": {"kind": "d3_model"},
//!   "generators": [[[1, 0], 0, 0, 0, 0, 0, 0, 0, 0, 0]],
//!   "analyses": ["frame_bounds", "parseval"],
//!   "seed": 7
//! }
//! ```

use std::path::Path;
use std::sync::Arc;

use serde::Deserialize;
use serde_json::Value;

use super::d3::D3Model;
use super::json::{decode_matrix, decode_vector, ComplexJson, MatrixJson};
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::linalg::C64;
use crate::repr::{action_representation, GroupAction, HVector, Representation};
use crate::vnalg::GroupRef;

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupSpec {
    Cyclic {
        n: usize,
    },
    Dihedral {
        m: usize,
    },
    Product {
        factors: Vec<GroupSpec>,
    },
    Table {
        cayley: Vec<Vec<usize>>,
        #[serde(default)]
        labels: Option<Vec<String>>,
    },
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Cyclic { n } => {
                if *n == 0 {
                    return Err(Error::NotAGroup("cyclic group needs n >= 1".into()));
                }
                Ok(FiniteGroup::cyclic(*n))
            }
            GroupSpec::Dihedral { m } => {
                if *m < 3 {
                    return Err(Error::NotAGroup("dihedral group needs m >= 3".into()));
                }
                Ok(FiniteGroup::dihedral(*m))
            }
            GroupSpec::Product { factors } => {
                let mut it = factors.iter();
                let first = it
                    .next()
                    .ok_or_else(|| Error::NotAGroup("product needs at least one factor".into()))?
                    .build()?;
                it.try_fold(first, |acc, f| Ok(FiniteGroup::direct_product(&acc, &f.build()?)))
            }
            GroupSpec::Table { cayley, labels } => FiniteGroup::from_cayley_table(cayley.clone(), labels.clone()),
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum TaggedRepresentation {
    LeftRegular,
    RightRegular,
    Trivial {
        dim: usize,
    },
    Action {
        perms: Vec<Vec<usize>>,
        #[serde(default)]
        jacobian: Option<Vec<Vec<f64>>>,
    },
    /// The ten-dimensional dihedral orbit model; needs no group.
    D3Model,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitRepresentation {
    #[serde(default)]
    pub group: Option<GroupSpec>,
    pub dim: usize,
    pub matrices: Vec<MatrixJson>,
}

#[derive(Debug, Clone)]
pub enum RepresentationSpec {
    Tagged(TaggedRepresentation),
    Explicit(ExplicitRepresentation),
}

impl<'de> Deserialize<'de> for RepresentationSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        if v.get("kind").is_some() {
            serde_json::from_value(v).map(RepresentationSpec::Tagged)
        } else {
            serde_json::from_value(v).map(RepresentationSpec::Explicit)
        }
        .map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Analysis {
    Bracket,
    BracketProperties,
    Orthonormality,
    RieszBounds,
    FrameBounds,
    Parseval,
    DualGenerator,
    PrincipalMultiplier,
    Membership,
    Helson,
    Zak,
    LeftInvariance,
    Fiberization,
    Comb,
}

impl Analysis {
    pub fn name(self) -> &'static str {
        match self {
            Analysis::Bracket => "bracket",
            Analysis::BracketProperties => "bracket_properties",
            Analysis::Orthonormality => "orthonormality",
            Analysis::RieszBounds => "riesz_bounds",
            Analysis::FrameBounds => "frame_bounds",
            Analysis::Parseval => "parseval",
            Analysis::DualGenerator => "dual_generator",
            Analysis::PrincipalMultiplier => "principal_multiplier",
            Analysis::Membership => "membership",
            Analysis::Helson => "helson",
            Analysis::Zak => "zak",
            Analysis::LeftInvariance => "left_invariance",
            Analysis::Fiberization => "fiberization",
            Analysis::Comb => "comb",
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CombSpec {
    pub g1: usize,
    pub g2: usize,
    pub a: ComplexJson,
    pub b: ComplexJson,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalysisConfig {
    #[serde(default)]
    pub group: Option<GroupSpec>,
    #[serde(default)]
    pub representation: Option<RepresentationSpec>,
    #[serde(default)]
    pub generators: Vec<Vec<ComplexJson>>,
    /// Target vector for `principal_multiplier` and `membership`.
    #[serde(default)]
    pub vector: Option<Vec<ComplexJson>>,
    #[serde(default)]
    pub comb: Option<CombSpec>,
    pub analyses: Vec<Analysis>,
    #[serde(default)]
    pub tol: Option<f64>,
    #[serde(default)]
    pub rank_cutoff: Option<f64>,
    #[serde(default)]
    pub seed: Option<u64>,
    #[serde(default)]
    pub samples: Option<usize>,
}

/// A configuration with every reference resolved.
#[derive(Debug, Clone)]
pub struct Resolved {
    pub group: GroupRef,
    pub rep: Representation,
    /// Present when the representation came from a group action.
    pub action: Option<GroupAction>,
    pub left_regular: bool,
    pub generators: Vec<HVector>,
    pub vector: Option<HVector>,
    pub comb: Option<(usize, usize, C64, C64)>,
}

impl AnalysisConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::config(path.display().to_string(), e.to_string()))?;
        Self::parse(&text, &path.display().to_string())
    }

    pub fn parse(text: &str, origin: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::config(origin, e.to_string()))
    }

    pub fn resolve(&self, origin: &str) -> Result<Resolved> {
        let err = |m: String| Error::config(origin, m);
        let top_group = self
            .group
            .as_ref()
            .map(|g| g.build())
            .transpose()
            .map_err(|e| err(e.to_string()))?;
        let need_group = || {
            top_group
                .clone()
                .map(Arc::new)
                .ok_or_else(|| err("\"group\" is required for this representation".into()))
        };
        let spec = self
            .representation
            .clone()
            .unwrap_or(RepresentationSpec::Tagged(TaggedRepresentation::LeftRegular));
        let mut action = None;
        let mut left_regular = false;
        let (group, rep) = match spec {
            RepresentationSpec::Tagged(TaggedRepresentation::LeftRegular) => {
                let g = need_group()?;
                left_regular = true;
                let rep = Representation::left_regular(&g);
                (g, rep)
            }
            RepresentationSpec::Tagged(TaggedRepresentation::RightRegular) => {
                let g = need_group()?;
                let rep = Representation::right_regular(&g);
                (g, rep)
            }
            RepresentationSpec::Tagged(TaggedRepresentation::Trivial { dim }) => {
                let g = need_group()?;
                if dim == 0 {
                    return Err(err("trivial representation needs dim >= 1".into()));
                }
                let rep = Representation::trivial(&g, dim);
                (g, rep)
            }
            RepresentationSpec::Tagged(TaggedRepresentation::Action { perms, jacobian }) => {
                let g = need_group()?;
                let a = match jacobian {
                    Some(j) => GroupAction::new(g.clone(), perms, j, 1e-9),
                    None => GroupAction::unweighted(g.clone(), perms),
                }
                .map_err(|e| err(e.to_string()))?;
                let rep = action_representation(&a).map_err(|e| err(e.to_string()))?;
                action = Some(a);
                (g, rep)
            }
            RepresentationSpec::Tagged(TaggedRepresentation::D3Model) => {
                let m = D3Model::new();
                if let Some(g) = &top_group {
                    if *g != *m.group {
                        return Err(err("d3_model acts through the dihedral group of order 6".into()));
                    }
                }
                action = Some(m.action.clone());
                (m.group.clone(), m.rep)
            }
            RepresentationSpec::Explicit(ex) => {
                let g = match &ex.group {
                    Some(spec) => Arc::new(spec.build().map_err(|e| err(e.to_string()))?),
                    None => need_group()?,
                };
                let matrices = ex
                    .matrices
                    .iter()
                    .map(decode_matrix)
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(err)?;
                if matrices.iter().any(|m| m.nrows() != ex.dim || m.ncols() != ex.dim) {
                    return Err(err(format!("every matrix must be {0}x{0}", ex.dim)));
                }
                let rep = Representation::new(g.clone(), matrices, 1e-9).map_err(|e| err(e.to_string()))?;
                (g, rep)
            }
        };
        let d = rep.dim();
        let check = |v: &[ComplexJson], what: &str| {
            if v.len() != d {
                Err(err(format!(
                    "{what} has length {}, representation dimension is {d}",
                    v.len()
                )))
            } else {
                Ok(decode_vector(v))
            }
        };
        let generators = self
            .generators
            .iter()
            .enumerate()
            .map(|(i, v)| check(v, &format!("generator {i}")))
            .collect::<Result<Vec<_>>>()?;
        let vector = self.vector.as_deref().map(|v| check(v, "vector")).transpose()?;
        let comb = self.comb.as_ref().map(|c| (c.g1, c.g2, C64::from(c.a), C64::from(c.b)));
        Ok(Resolved {
            group,
            rep,
            action,
            left_regular,
            generators,
            vector,
            comb,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_specs() {
        let g: GroupSpec =
            serde_json::from_str(r#"{"kind":"product","factors":[{"kind":"cyclic","n":2},{"kind":"dihedral","m":3}]}"#)
                .unwrap();
        assert_eq!(g.build().unwrap().order(), 12);
        let t: GroupSpec = serde_json::from_str(r#"{"kind":"table","cayley":[[0,1],[1,1]]}"#).unwrap();
        assert!(matches!(t.build(), Err(Error::NotAGroup(_))));
        assert!(serde_json::from_str::<GroupSpec>(r#"{"kind":"free","n":2}"#).is_err());
    }

    #[test]
    fn resolves_and_checks_lengths() {
        let cfg = AnalysisConfig::parse(
            r#"{"group":{"kind":"cyclic","n":3},"generators":[[1,0,[0,1]]],"analyses":["frame_bounds"]}"#,
            "inline",
        )
        .unwrap();
        let r = cfg.resolve("inline").unwrap();
        assert!(r.left_regular);
        assert_eq!(r.generators[0][2], C64::new(0.0, 1.0));

        let bad = AnalysisConfig::parse(
            r#"{"group":{"kind":"cyclic","n":3},"generators":[[1,0]],"analyses":["frame_bounds"]}"#,
            "inline",
        )
        .unwrap();
        assert!(matches!(bad.resolve("inline"), Err(Error::Config { .. })));
        assert!(AnalysisConfig::parse(r#"{"analyses":["nonsense"]}"#, "inline").is_err());
    }

    #[test]
    fn explicit_and_action_representations() {
        let cfg = AnalysisConfig::parse(
            r#"{"representation":{"group":{"kind":"cyclic","n":2},"dim":1,"matrices":[[[1]],[[-1]]]},"analyses":[]}"#,
            "inline",
        )
        .unwrap();
        assert_eq!(cfg.resolve("inline").unwrap().rep.dim(), 1);

        let cfg = AnalysisConfig::parse(
            r#"{"group":{"kind":"cyclic","n":2},"representation":{"kind":"action","perms":[[0,1,2,3],[1,0,3,2]]},"analyses":[]}"#,
            "inline",
        )
        .unwrap();
        let r = cfg.resolve("inline").unwrap();
        assert_eq!(r.rep.dim(), 4);
        assert!(r.action.is_some());

        let not_hom = AnalysisConfig::parse(
            r#"{"representation":{"group":{"kind":"cyclic","n":2},"dim":1,"matrices":[[[-1]],[[1]]]},"analyses":[]}"#,
            "inline",
        )
        .unwrap();
        assert!(not_hom.resolve("inline").is_err());
    }
}
