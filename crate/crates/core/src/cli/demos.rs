//! Built-in worked examples.

use std::sync::Arc;

use serde_json::json;

use super::analyze::{bounds_report, comb_report, fiberization_report, parseval_report};
use super::d3::{D3Model, REFLECTION};
use super::report::{Document, Report};
use super::Settings;
use crate::error::{Error, Result};
use crate::frames::{orthonormality_test, SystemKind};
use crate::groups::FiniteGroup;
use crate::helson::{build_helson_map, decompose_invariant, verify_helson_axioms, HelsonMap};
use crate::linalg::{self, real, CMat, CVec, C64};
use crate::repr::bracket;
use crate::sampling::Sampler;
use crate::vnalg::{AlgOperator, GroupRef};

/// Every demo constant must hold to this accuracy.
const DEMO_TOL: f64 = 1e-9;
const BRACKET_TOL: f64 = 1e-10;

pub fn demo_dihedral(s: &Settings) -> Result<Document> {
    let m = D3Model::new();
    let g = &m.group;
    let all_rho_star = (0..6).fold(AlgOperator::zero(g), |acc, x| &acc + &AlgOperator::rho(g, x).adjoint());
    let cases = [
        ("fixed", m.fixed(), all_rho_star, 6.0),
        (
            "boundary",
            m.boundary(),
            &AlgOperator::identity(g) + &AlgOperator::rho(g, REFLECTION).adjoint(),
            2.0,
        ),
        ("interior", m.interior(), AlgOperator::identity(g), 1.0),
    ];
    let mut reports = Vec::new();
    for (name, psi, expected, constant) in cases {
        let gens = [psi.clone()];
        let mut r = bounds_report(name, &m.rep, &gens, s, true)?;
        r.analysis = name.to_string();
        let b = bracket(&m.rep, &psi, &psi)?;
        r.check("bracket_expected", b.max_abs_diff(&expected), BRACKET_TOL);
        r.check(
            "constant_lower",
            (r.lower.unwrap_or(f64::NAN) - constant).abs(),
            DEMO_TOL,
        );
        r.check(
            "constant_upper",
            (r.upper.unwrap_or(f64::NAN) - constant).abs(),
            DEMO_TOL,
        );
        if r.tight != Some(true) {
            r.fail();
        }
        if name == "interior" {
            let o = orthonormality_test(&m.rep, &gens, DEMO_TOL)?;
            r.check("orthonormality", o.defect, DEMO_TOL);
            if r.kind != serde_name(SystemKind::Orthonormal) {
                r.fail();
            }
        }
        r.details = json!({ "expected_constant": constant, "oracle": r.details["oracle"].clone() });
        reports.push(r);
    }

    let basis: Vec<CVec> = (0..m.dim())
        .map(|i| CMat::identity(m.dim(), m.dim()).column(i).into_owned())
        .collect();
    let mut parseval = parseval_report(&m.rep, &basis, s)?;
    if let Some(list) = parseval.details["generators"].as_array() {
        if list.len() != 3 {
            parseval.fail();
        }
    }
    reports.push(parseval);

    reports.push(periodization_report(&m, &basis, s)?);
    Ok(Document::new("demo d3", s.seed, s.tol, s.rank_cutoff, reports))
}

fn serde_name(kind: SystemKind) -> String {
    serde_json::to_value(kind)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

/// `U_Psi` built from the standard basis: fiber `i` of `U_Psi[phi]` equals
/// `c_i [phi, psi_i]` with `c = 1/sqrt(6), 1/sqrt(2), 1`.
fn periodization_report(m: &D3Model, basis: &[CVec], s: &Settings) -> Result<Report> {
    let dec = decompose_invariant(&m.rep, basis)?;
    let generators = dec.generators.clone();
    let dims = dec.orbit_dims();
    let map = build_helson_map(&m.rep, dec)?;
    let h = verify_helson_axioms(&map, s.samples, DEMO_TOL, s.seed)?;
    let mut r = Report::new("periodization", "helson");
    r.check("isometry", h.isometry, DEMO_TOL);
    r.check("intertwining", h.intertwining, DEMO_TOL);
    r.check("bracket_recovery", h.bracket_recovery, DEMO_TOL);
    if dims != [1, 3, 6] {
        r.fail();
    }

    let coefficients = [1.0 / 6f64.sqrt(), 1.0 / 2f64.sqrt(), 1.0];
    let mut rng = Sampler::new(s.seed);
    let mut worst: f64 = 0.0;
    for _ in 0..s.samples.max(1) {
        let phi = rng.cvec(m.dim());
        let image = map.transform(&phi)?;
        for (i, (psi, c)) in generators.iter().zip(coefficients).enumerate() {
            let target = bracket(&m.rep, &phi, psi)?.scale(real(c));
            worst = worst.max(image.fibers[i].value.max_abs_diff(&target));
        }
    }
    r.check("fiber_coefficients", worst, DEMO_TOL);
    r.details = json!({
        "orbit_dims": dims,
        "coefficients": coefficients,
        "generator_points": generators
            .iter()
            .map(|v| v.iter().position(|z| z.norm() > 0.5))
            .collect::<Vec<_>>(),
    });
    Ok(r)
}

pub fn demo_comb(n: usize, g1: usize, g2: usize, a: C64, b: C64, s: &Settings) -> Result<Document> {
    if n == 0 {
        return Err(Error::DegenerateComb("n must be positive".into()));
    }
    let group: GroupRef = Arc::new(FiniteGroup::cyclic(n));
    let report = comb_report(&group, g1, g2, a, b, s)?;
    Ok(Document::new("demo comb", s.seed, s.tol, s.rank_cutoff, vec![report]))
}

#[derive(Debug, Clone)]
pub enum FiberInput {
    Values(Vec<C64>),
    /// Seeded random vector.
    Random,
}

impl FiberInput {
    /// `random`, or comma-separated entries `re` or `re:im`.
    pub fn parse(text: &str) -> std::result::Result<Self, String> {
        let text = text.trim();
        if text.eq_ignore_ascii_case("random") {
            return Ok(FiberInput::Random);
        }
        text.split(',')
            .map(|part| {
                let part = part.trim();
                let (re, im) = part.split_once(':').unwrap_or((part, "0"));
                let re: f64 = re.trim().parse().map_err(|_| format!("bad number {part:?}"))?;
                let im: f64 = im.trim().parse().map_err(|_| format!("bad number {part:?}"))?;
                Ok(C64::new(re, im))
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(FiberInput::Values)
    }
}

pub fn demo_fiberization(n: usize, f: &FiberInput, s: &Settings) -> Result<Document> {
    if n == 0 {
        return Err(Error::NotCyclic);
    }
    let group: GroupRef = Arc::new(FiniteGroup::cyclic(n));
    let v = match f {
        FiberInput::Values(values) => {
            if values.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: values.len(),
                });
            }
            CVec::from_vec(values.clone())
        }
        FiberInput::Random => Sampler::new(s.seed).cvec(n),
    };
    if linalg::max_abs_vec(&v) == 0.0 {
        return Err(Error::ZeroGenerator);
    }
    let mut report = fiberization_report(&group, std::slice::from_ref(&v))?;
    report.details["input"] = json!(super::json::encode_vector(&v));
    Ok(Document::new(
        "demo fiberization",
        s.seed,
        s.tol,
        s.rank_cutoff,
        vec![report],
    ))
}
