use serde_json::json;

use super::config::{Analysis, AnalysisConfig, Resolved};
use super::json::{encode_helson_image, encode_matrix, encode_vector};
use super::report::{Document, Report};
use super::{Overrides, Settings, ORACLE_TOL};
use crate::error::{Error, Result};
use crate::frames::{
    self, biorthogonality_defect, comb_analysis, dual_generator, frame_bounds_with_cutoff, frame_inequality_defect,
    left_invariance_analysis, membership_finitely_generated, orthonormality_test, parseval_family,
    principal_multiplier, riesz_bounds_with_cutoff, riesz_tuple_defect, CombLemma, Membership, OrbitSystem,
};
use crate::helson::{
    build_helson_map, decompose_invariant, find_tiling_set, multiplicative_invariance_defect, verify_helson_axioms,
    HelsonMap, ZakTransform,
};
use crate::linalg::{self, CMat, CVec, C64};
use crate::oracle::{biorthogonal_oracle, dft_fibers, gram_bounds_with_cutoff, gram_matrix, Biorthogonal};
use crate::repr::{bracket, verify_bracket_properties, HVector, Representation};
use crate::sampling::Sampler;
use crate::vnalg::{GroupRef, SeqVector};

/// Loads a config file and runs every requested analysis in order.
pub fn run_analyze(path: &std::path::Path, overrides: &Overrides) -> Result<Document> {
    let cfg = AnalysisConfig::load(path)?;
    run_config(&cfg, &path.display().to_string(), overrides)
}

pub fn run_config(cfg: &AnalysisConfig, origin: &str, overrides: &Overrides) -> Result<Document> {
    let settings = Settings::resolve(overrides, cfg.tol, cfg.rank_cutoff, cfg.seed, cfg.samples);
    let resolved = cfg.resolve(origin)?;
    let reports = cfg
        .analyses
        .iter()
        .map(|&a| run_one(a, &resolved, &settings).unwrap_or_else(|e| Report::failed(a.name(), &e)))
        .collect();
    Ok(Document::new(
        "analyze",
        settings.seed,
        settings.tol,
        settings.rank_cutoff,
        reports,
    ))
}

fn run_one(analysis: Analysis, r: &Resolved, s: &Settings) -> Result<Report> {
    let name = analysis.name();
    let gens = &r.generators;
    let needs_generators = || {
        if gens.is_empty() {
            Err(Error::config(
                "generators",
                format!("{name} needs at least one generator"),
            ))
        } else {
            Ok(())
        }
    };
    match analysis {
        Analysis::Bracket => {
            needs_generators()?;
            bracket_report(&r.rep, gens, s)
        }
        Analysis::BracketProperties => Ok(bracket_properties_report(&r.rep, s)),
        Analysis::Orthonormality => {
            needs_generators()?;
            orthonormality_report(&r.rep, gens, s)
        }
        Analysis::RieszBounds => {
            needs_generators()?;
            bounds_report(name, &r.rep, gens, s, false)
        }
        Analysis::FrameBounds => {
            needs_generators()?;
            bounds_report(name, &r.rep, gens, s, true)
        }
        Analysis::Parseval => {
            needs_generators()?;
            parseval_report(&r.rep, gens, s)
        }
        Analysis::DualGenerator => {
            needs_generators()?;
            Ok(dual_report(&r.rep, gens, s))
        }
        Analysis::PrincipalMultiplier => {
            needs_generators()?;
            let phi = target_vector(r, name)?;
            multiplier_report(&r.rep, &gens[0], phi, s)
        }
        Analysis::Membership => {
            needs_generators()?;
            let phi = target_vector(r, name)?;
            membership_report(&r.rep, gens, phi, s)
        }
        Analysis::Helson => helson_report(&r.rep, gens, s),
        Analysis::Zak => {
            let action = r
                .action
                .as_ref()
                .ok_or_else(|| Error::config("representation", "zak needs an action representation"))?;
            zak_report(action, gens, s)
        }
        Analysis::LeftInvariance => {
            needs_generators()?;
            if !r.left_regular {
                return Err(Error::config(
                    "representation",
                    "left_invariance needs the left regular representation",
                ));
            }
            left_invariance_report(&r.group, gens, s)
        }
        Analysis::Fiberization => {
            needs_generators()?;
            if !r.left_regular {
                return Err(Error::config(
                    "representation",
                    "fiberization needs the left regular representation",
                ));
            }
            fiberization_report(&r.group, gens)
        }
        Analysis::Comb => {
            let (g1, g2, a, b) = r
                .comb
                .ok_or_else(|| Error::config("comb", "comb needs a \"comb\" section"))?;
            comb_report(&r.group, g1, g2, a, b, s)
        }
    }
}

fn target_vector<'a>(r: &'a Resolved, name: &str) -> Result<&'a HVector> {
    r.vector
        .as_ref()
        .ok_or_else(|| Error::config("vector", format!("{name} needs \"vector\"")))
}

fn scale_tol(tol: f64, scale: f64) -> f64 {
    tol * scale.max(1.0)
}

pub(crate) fn bracket_report(rep: &Representation, gens: &[HVector], s: &Settings) -> Result<Report> {
    let mut report = Report::new("bracket", "bracket");
    let mut entries = Vec::new();
    let mut membership: f64 = 0.0;
    let mut hermitian: f64 = 0.0;
    for (i, phi_i) in gens.iter().enumerate() {
        for (j, phi_j) in gens.iter().enumerate() {
            let b = bracket(rep, phi_i, phi_j)?;
            membership = membership.max(b.algebra_defect());
            if i == j {
                hermitian = hermitian.max(linalg::hermitian_defect(b.matrix()));
            }
            entries.push(json!({"i": i, "j": j, "matrix": encode_matrix(b.matrix())}));
        }
    }
    report.check("algebra_membership", membership, s.tol);
    report.check("hermitian", hermitian, s.tol);
    report.details = json!({ "brackets": entries });
    Ok(report)
}

fn bracket_properties_report(rep: &Representation, s: &Settings) -> Report {
    let b = verify_bracket_properties(rep, s.samples, s.tol, s.seed);
    let mut report = Report::new("bracket_properties", "bracket_properties");
    report.check("adjoint_symmetry", b.adjoint_symmetry, s.tol);
    report.check("left_equivariance", b.left_equivariance, s.tol);
    report.check("right_equivariance", b.right_equivariance, s.tol);
    report.check("positivity", b.positivity, s.tol);
    report.check("trace_norm", b.trace_norm, s.tol);
    report.check("algebra_membership", b.algebra_membership, s.tol);
    report.details = json!({ "samples": b.samples });
    report
}

fn orthonormality_report(rep: &Representation, gens: &[HVector], s: &Settings) -> Result<Report> {
    let o = orthonormality_test(rep, gens, s.tol)?;
    let kind = if o.orthonormal {
        "orthonormal"
    } else {
        "not_orthonormal"
    };
    let mut report = Report::new("orthonormality", kind);
    report.defect("bracket_identity", o.defect);
    let sys = OrbitSystem::new(rep, gens.to_vec())?;
    let g = gram_matrix(&sys);
    let gram_defect = linalg::max_abs(&(&g - CMat::identity(g.nrows(), g.ncols())));
    report.defect("gram_identity", gram_defect);
    report.oracle((gram_defect <= s.tol) == o.orthonormal);
    Ok(report)
}

pub(crate) fn bounds_report(
    name: &str,
    rep: &Representation,
    gens: &[HVector],
    s: &Settings,
    frame: bool,
) -> Result<Report> {
    let bounds = if frame {
        frame_bounds_with_cutoff(rep, gens, s.rank_cutoff)?
    } else {
        riesz_bounds_with_cutoff(rep, gens, s.rank_cutoff)?
    };
    let mut report = Report::new(name, "").with_bounds(&bounds);
    let sys = OrbitSystem::new(rep, gens.to_vec())?;
    let oracle = gram_bounds_with_cutoff(&sys, s.rank_cutoff);
    let oracle_lower = if frame { oracle.lower } else { oracle.riesz_lower };
    let slack = scale_tol(ORACLE_TOL, bounds.upper);
    report.oracle(
        (oracle_lower - bounds.lower).abs() <= slack
            && (oracle.upper - bounds.upper).abs() <= slack
            && oracle.rank == bounds.support_rank,
    );
    report.defect("oracle_lower", (oracle_lower - bounds.lower).abs());
    report.defect("oracle_upper", (oracle.upper - bounds.upper).abs());
    if frame {
        let d = frame_inequality_defect(rep, gens, &bounds, s.samples, s.seed)?;
        report.check("frame_inequality", d, ORACLE_TOL);
    } else {
        let d = riesz_tuple_defect(rep, gens, &bounds, s.samples, s.seed)?;
        report.check("riesz_tuple_inequality", d, ORACLE_TOL);
    }
    report.details = json!({ "oracle": oracle });
    Ok(report)
}

fn orbit_vectors(rep: &Representation, gens: &[HVector]) -> Vec<HVector> {
    let mut out = Vec::new();
    for phi in gens {
        for g in 0..rep.group().order() {
            out.push(rep.apply(g, phi));
        }
    }
    out
}

pub(crate) fn parseval_report(rep: &Representation, gens: &[HVector], s: &Settings) -> Result<Report> {
    let family = parseval_family(rep, &orbit_vectors(rep, gens))?;
    let bounds = frame_bounds_with_cutoff(rep, &family, s.rank_cutoff)?;
    let mut report = Report::new("parseval", "").with_bounds(&bounds);
    let new_sys = OrbitSystem::new(rep, family.clone())?;
    let oracle = gram_bounds_with_cutoff(&new_sys, s.rank_cutoff);
    report.oracle((oracle.lower - 1.0).abs() <= ORACLE_TOL && (oracle.upper - 1.0).abs() <= ORACLE_TOL);
    report.defect("oracle_lower", (oracle.lower - 1.0).abs());
    report.defect("oracle_upper", (oracle.upper - 1.0).abs());
    let old_sys = OrbitSystem::new(rep, gens.to_vec())?;
    let span = linalg::max_abs(&(new_sys.span_projection() - old_sys.span_projection()));
    report.check("span_projection", span, s.tol);
    let frame_op = new_sys.synthesis() * new_sys.synthesis().adjoint();
    report.check(
        "frame_operator",
        linalg::max_abs(&(frame_op - new_sys.span_projection())),
        s.tol,
    );
    report.details = json!({
        "generators": family.iter().map(encode_vector).collect::<Vec<_>>(),
    });
    Ok(report)
}

pub(crate) fn dual_report(rep: &Representation, gens: &[HVector], s: &Settings) -> Report {
    let mut report = Report::new("dual_generator", "minimal");
    let mut duals = Vec::new();
    for psi in gens {
        let oracle = OrbitSystem::new(rep, vec![psi.clone()]).and_then(|sys| biorthogonal_oracle(&sys));
        match dual_generator(rep, psi, s.tol) {
            Ok(dual) => {
                let defect = biorthogonality_defect(rep, psi, &dual);
                let prev = report.defects.get("biorthogonality").copied().unwrap_or(0.0);
                report.check("biorthogonality", prev.max(defect), s.tol);
                match oracle {
                    Ok(Biorthogonal::Dual(x)) => {
                        let diff = linalg::max_abs_vec(&(&x - &dual));
                        let prev = report.defects.get("oracle_dual").copied().unwrap_or(0.0);
                        report.defect("oracle_dual", prev.max(diff));
                        report.oracle(diff <= scale_tol(ORACLE_TOL, dual.norm()));
                    }
                    _ => report.oracle(false),
                }
                duals.push(encode_vector(&dual));
            }
            Err(e) => {
                let mut failed = Report::failed("dual_generator", &e);
                failed.oracle_agreement = Some(matches!(oracle, Ok(Biorthogonal::Singular { .. })));
                return failed;
            }
        }
    }
    report.details = json!({ "duals": duals });
    report
}

fn multiplier_report(rep: &Representation, psi: &HVector, phi: &HVector, s: &Settings) -> Result<Report> {
    let m = principal_multiplier(rep, psi, phi, s.tol)?;
    let mut report = Report::new("principal_multiplier", "member");
    report.check("bracket_identity", m.bracket_defect, scale_tol(s.tol, phi.norm()));
    report.check("helson_identity", m.helson_defect, scale_tol(s.tol, phi.norm()));
    report.details = json!({ "multiplier": encode_matrix(m.multiplier.matrix()) });
    Ok(report)
}

fn membership_report(rep: &Representation, gens: &[HVector], phi: &HVector, s: &Settings) -> Result<Report> {
    let m = membership_finitely_generated(rep, gens, phi, s.tol)?;
    let mut report = Report::new("membership", if m.is_member() { "member" } else { "not_member" });
    report.defect("residual", m.residual());
    if let Membership::Member { multipliers, .. } = &m {
        let mut rebuilt = CVec::zeros(rep.dim());
        for (psi, f) in gens.iter().zip(multipliers) {
            let c = f.fourier_coefficients()?;
            rebuilt += rep.orbit_matrix(psi) * c.coeffs();
        }
        report.check("reconstruction", (rebuilt - phi).norm(), scale_tol(s.tol, phi.norm()));
        report.details = json!({
            "multipliers": multipliers.iter().map(|f| encode_matrix(f.matrix())).collect::<Vec<_>>(),
        });
    }
    Ok(report)
}

fn helson_report(rep: &Representation, gens: &[HVector], s: &Settings) -> Result<Report> {
    let spanning = if gens.is_empty() {
        (0..rep.dim())
            .map(|i| CMat::identity(rep.dim(), rep.dim()).column(i).into_owned())
            .collect()
    } else {
        orbit_vectors(rep, gens)
    };
    let dec = decompose_invariant(rep, &spanning)?;
    let dims = dec.orbit_dims();
    let map = build_helson_map(rep, dec)?;
    let h = verify_helson_axioms(&map, s.samples, s.tol, s.seed)?;
    let mut report = Report::new("helson", "periodization");
    report.check("isometry", h.isometry, s.tol);
    report.check("intertwining", h.intertwining, s.tol);
    report.check("bracket_recovery", h.bracket_recovery, s.tol);
    report.check(
        "multiplicative_invariance",
        multiplicative_invariance_defect(&map, &spanning)?,
        s.tol,
    );
    report.details = json!({
        "orbit_dims": dims,
        "generators": map.decomposition().generators.iter().map(encode_vector).collect::<Vec<_>>(),
    });
    Ok(report)
}

fn zak_report(action: &crate::repr::GroupAction, gens: &[HVector], s: &Settings) -> Result<Report> {
    let tiling = find_tiling_set(action)?;
    let zak = ZakTransform::new(action, &tiling)?;
    let h = verify_helson_axioms(&zak, s.samples, s.tol, s.seed)?;
    let mut report = Report::new("zak", "zak");
    report.check("isometry", h.isometry, s.tol);
    report.check("intertwining", h.intertwining, s.tol);
    report.check("bracket_recovery", h.bracket_recovery, s.tol);
    let mut rng = Sampler::new(s.seed);
    let mut round_trip: f64 = 0.0;
    for _ in 0..s.samples {
        let u = rng.cvec(action.points());
        let back = zak.inverse(&zak.transform(&u)?)?;
        round_trip = round_trip.max(linalg::max_abs_vec(&(back - u)));
    }
    report.check("round_trip", round_trip, s.tol);
    let images = gens
        .iter()
        .map(|g| zak.transform(g).map(|im| encode_helson_image(&im)))
        .collect::<Result<Vec<_>>>()?;
    report.details = json!({ "tiling": tiling.points, "images": images });
    Ok(report)
}

fn left_invariance_report(group: &GroupRef, gens: &[HVector], s: &Settings) -> Result<Report> {
    let v = gens
        .iter()
        .map(|g| SeqVector::new(group.clone(), g.clone()))
        .collect::<Result<Vec<_>>>()?;
    let l = left_invariance_analysis(&v, s.tol)?;
    let kind = if l.left_invariant {
        "left_invariant"
    } else {
        "not_left_invariant"
    };
    let mut report = Report::new("left_invariance", kind);
    report.defect("commutator", l.commutator_defect);
    if l.left_invariant {
        report.check("forward_inclusion", l.forward_inclusion, s.tol);
        report.check("reverse_inclusion", l.reverse_inclusion, s.tol);
        report.check("bracket", l.bracket_defect, s.tol);
        report.check("idempotence", l.idempotence_defect, s.tol);
        report.check("frame_operator", l.frame_operator_defect, s.tol);
    }
    report.details = json!({
        "parseval": l.parseval_ok,
        "q": encode_matrix(l.q.matrix()),
        "p": encode_vector(l.p.coeffs()),
    });
    Ok(report)
}

/// Bracket spectrum against DFT fibers for each generator on `Z_n`.
pub(crate) fn fiberization_report(group: &GroupRef, gens: &[HVector]) -> Result<Report> {
    let rep = Representation::left_regular(group);
    let mut report = Report::new("fiberization", "fiberization");
    let mut rows = Vec::new();
    let mut worst: f64 = 0.0;
    for f in gens {
        let fibers = dft_fibers(&SeqVector::new(group.clone(), f.clone())?)?;
        let mut sorted = fibers.clone();
        sorted.sort_by(|a, b| b.total_cmp(a));
        let spectrum = linalg::hermitian_eigen(bracket(&rep, f, f)?.matrix()).0;
        let scale = sorted.first().copied().unwrap_or(0.0).max(1.0);
        let d = sorted
            .iter()
            .zip(&spectrum)
            .map(|(x, y)| (x - y).abs() / scale)
            .fold(0.0, f64::max);
        worst = worst.max(d);
        rows.push(json!({ "fibers": fibers, "bracket_spectrum": spectrum, "discrepancy": d }));
    }
    report.defect("discrepancy", worst);
    report.oracle(worst <= ORACLE_TOL);
    report.details = json!({ "generators": rows });
    Ok(report)
}

pub(crate) fn comb_report(group: &GroupRef, g1: usize, g2: usize, a: C64, b: C64, s: &Settings) -> Result<Report> {
    let c = comb_analysis(group, g1, g2, a, b, s.tol)?;
    let bounds = if c.complete { &c.riesz } else { &c.frame };
    let mut report = Report::new("comb", "").with_bounds(bounds);
    report.check("closed_form", c.closed_form_defect, s.tol);
    if !c.within_window {
        report.fail();
    }
    if !c.lemma_consistent {
        report.fail();
    }

    let f = frames::comb_vector(group, g1, g2, a, b)?;
    let rep = Representation::left_regular(group);
    let sys = OrbitSystem::new(&rep, vec![f.coeffs().clone()])?;
    let gram = gram_bounds_with_cutoff(&sys, s.rank_cutoff);
    let gram_gap = gram
        .eigenvalues
        .iter()
        .zip(&c.eigenvalues)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max);
    report.defect("oracle_gram", gram_gap);
    report.oracle(gram_gap <= scale_tol(ORACLE_TOL, c.riesz.upper) && gram.rank == c.rank);
    let mut fibers = None;
    if group.is_canonical_cyclic() {
        let mut values = dft_fibers(&f)?;
        let in_k_order = values.clone();
        values.sort_by(|x, y| y.total_cmp(x));
        let gap = values
            .iter()
            .zip(&c.eigenvalues)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max);
        report.defect("oracle_dft", gap);
        report.oracle(gap <= scale_tol(ORACLE_TOL, c.riesz.upper));
        fibers = Some(in_k_order);
    }
    let note = match c.lemma {
        CombLemma::PredictsComplete => "real a != +-b: completeness predicted and checked by rank",
        CombLemma::Excluded => "real a = +-b: no completeness prediction",
        CombLemma::NotAsserted => "complex coefficients: completeness decided by rank only",
    };
    report.details = json!({
        "analysis": c,
        "dft_fibers": fibers,
        "lemma_note": note,
    });
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(text: &str) -> Document {
        let cfg = AnalysisConfig::parse(text, "inline").unwrap();
        run_config(&cfg, "inline", &Overrides::default()).unwrap()
    }

    #[test]
    fn d3_fixed_vector_frame_bounds() {
        let doc = run(
            r#"{"representation":{"kind":"d3_model"},"generators":[[1,0,0,0,0,0,0,0,0,0]],"analyses":["frame_bounds","riesz_bounds","orthonormality","parseval"]}"#,
        );
        let r = &doc.reports[0];
        assert_eq!(r.kind, "frame");
        assert!((r.lower.unwrap() - 6.0).abs() < 1e-10 && (r.upper.unwrap() - 6.0).abs() < 1e-10);
        assert_eq!(r.tight, Some(true));
        assert_eq!(r.oracle_agreement, Some(true));
        assert_eq!(doc.reports[1].lower, Some(0.0));
        assert_eq!(doc.reports[2].kind, "not_orthonormal");
        assert_eq!(doc.reports[2].oracle_agreement, Some(true));
        assert!(doc.reports[3].passed);
        assert_eq!(doc.status().code(), 0);
    }

    #[test]
    fn singular_dual_is_a_certification_failure() {
        let doc = run(r#"{"group":{"kind":"cyclic","n":2},"generators":[[1,1]],"analyses":["dual_generator"]}"#);
        assert_eq!(doc.status().code(), 2);
        assert_eq!(doc.reports[0].oracle_agreement, Some(true));
        assert!(doc.reports[0].error.as_deref().unwrap().contains("not minimal"));
    }

    #[test]
    fn every_analysis_runs() {
        let doc = run(r#"{
            "group":{"kind":"cyclic","n":6},
            "generators":[[3,0,1,0,0,0],[0,1,0,0,0,[0,1]]],
            "vector":[1,2,3,4,5,6],
            "comb":{"g1":0,"g2":2,"a":3,"b":1},
            "analyses":["bracket","bracket_properties","orthonormality","riesz_bounds","frame_bounds","parseval",
                        "dual_generator","principal_multiplier","membership","helson","left_invariance",
                        "fiberization","comb"],
            "samples":5
        }"#);
        for r in &doc.reports {
            assert!(r.passed, "{}: {:?}", r.analysis, r);
        }
        let comb = doc.reports.last().unwrap();
        assert!((comb.lower.unwrap() - 7.0).abs() < 1e-9 && (comb.upper.unwrap() - 16.0).abs() < 1e-9);
    }

    #[test]
    fn zak_needs_an_action() {
        let doc = run(r#"{"group":{"kind":"cyclic","n":3},"analyses":["zak"]}"#);
        assert_eq!(doc.status().code(), 1);
        let doc = run(
            r#"{"group":{"kind":"cyclic","n":2},"representation":{"kind":"action","perms":[[0,1,2,3],[1,0,3,2]]},"generators":[[1,0,0,0]],"analyses":["zak"]}"#,
        );
        assert!(doc.reports[0].passed, "{:?}", doc.reports[0]);
    }
}
