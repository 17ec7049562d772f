//! End-to-end acceptance checks. Runs as a plain binary (no libtest harness)
//! so that every criterion prints exactly one PASS/FAIL line.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use orbitframe::cli::{demo_dihedral, Settings};
use orbitframe::frames::{
    biorthogonality_defect, block_bracket_gramian, comb_analysis, dual_generator, left_invariance_analysis,
    orbit_system, parseval_generator, riesz_bounds,
};
use orbitframe::helson::{
    build_helson_map, decompose_invariant, find_tiling_set, verify_helson_axioms, FourierHelsonMap, HelsonMap,
    ZakTransform,
};
use orbitframe::linalg::{self, real, CMat, CVec, C64};
use orbitframe::oracle::{biorthogonal_oracle, dft_fibers, gram_bounds, gram_matrix, Biorthogonal};
use orbitframe::repr::{random_representation, verify_bracket_properties};
use orbitframe::sampling::Sampler;
use orbitframe::{
    action_representation, bracket, Error, FiniteGroup, GroupAction, GroupRef, Representation, SeqVector,
};

const CONSTANT_TOL: f64 = 1e-9;
const BRACKET_ENTRY_TOL: f64 = 1e-10;
const D3_BUDGET: Duration = Duration::from_secs(1);
const COMB_TOL: f64 = 1e-9;
const SPECTRUM_TOL: f64 = 1e-8;
const SPECTRUM_BUDGET: Duration = Duration::from_secs(60);
const AXIOM_TOL: f64 = 1e-9;
const ZAK_ROUND_TRIP_TOL: f64 = 1e-10;
const PARSEVAL_BOUND_TOL: f64 = 1e-8;
const SPAN_TOL: f64 = 1e-9;
const MINIMAL_THRESHOLD: f64 = 1e-8;
const BIORTHOGONAL_TOL: f64 = 1e-9;
const DUAL_ORACLE_TOL: f64 = 1e-8;
const INVARIANCE_TOL: f64 = 1e-9;
const CONTROL_GAP: f64 = 0.1;
const FIBER_TOL: f64 = 1e-10;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cyclic(n: usize) -> GroupRef {
    Arc::new(FiniteGroup::cyclic(n))
}

/// Cyclic, dihedral, and product groups of order at most 24.
fn group_zoo() -> Vec<GroupRef> {
    let mut out: Vec<GroupRef> = (1..=24).map(cyclic).collect();
    out.extend((3..=12).map(|m| Arc::new(FiniteGroup::dihedral(m)) as GroupRef));
    let z2 = FiniteGroup::cyclic(2);
    let z3 = FiniteGroup::cyclic(3);
    let z4 = FiniteGroup::cyclic(4);
    let d3 = FiniteGroup::dihedral(3);
    let klein = FiniteGroup::direct_product(&z2, &z2);
    out.push(Arc::new(klein.clone()));
    out.push(Arc::new(FiniteGroup::direct_product(&klein, &z2)));
    out.push(Arc::new(FiniteGroup::direct_product(&z3, &z3)));
    out.push(Arc::new(FiniteGroup::direct_product(&z4, &z2)));
    out.push(Arc::new(FiniteGroup::direct_product(&d3, &z2)));
    out.push(Arc::new(FiniteGroup::direct_product(&d3, &z4)));
    out.push(Arc::new(FiniteGroup::direct_product(&klein, &z3)));
    out
}

fn sorted_desc(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(|a, b| b.total_cmp(a));
    v
}

fn max_spectrum_gap(a: &[f64], b: &[f64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

fn dihedral_constants() -> Outcome {
    let start = Instant::now();
    let doc = demo_dihedral(&Settings::default()).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    for (name, constant) in [("fixed", 6.0), ("boundary", 2.0), ("interior", 1.0)] {
        let r = doc
            .reports
            .iter()
            .find(|r| r.analysis == name)
            .ok_or_else(|| format!("missing {name} report"))?;
        let (a, b) = (r.lower.unwrap_or(f64::NAN), r.upper.unwrap_or(f64::NAN));
        ensure(
            (a - constant).abs() <= CONSTANT_TOL && (b - constant).abs() <= CONSTANT_TOL,
            || format!("{name}: bounds ({a}, {b}), expected {constant}"),
        )?;
        let defect = r.defects.get("bracket_expected").copied().unwrap_or(f64::NAN);
        ensure(defect <= BRACKET_ENTRY_TOL, || {
            format!("{name}: bracket defect {defect:e}")
        })?;
        ensure(r.passed, || format!("{name}: report failed"))?;
    }
    let interior = &doc.reports[2];
    ensure(interior.kind == "orthonormal", || {
        format!("interior kind {}", interior.kind)
    })?;
    ensure(doc.passed, || "demo document failed".into())?;
    ensure(elapsed < D3_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!("frame constants 6, 2, 1 certified in {elapsed:.2?}"))
}

fn comb_bounds() -> Outcome {
    for n in [2, 12] {
        let r = comb_analysis(&cyclic(n), 0, 1, real(2.0), real(1.0), COMB_TOL).map_err(|e| e.to_string())?;
        let (a, b) = (r.riesz.lower, r.riesz.upper);
        ensure((a - 1.0).abs() <= COMB_TOL && (b - 9.0).abs() <= COMB_TOL, || {
            format!("Z_{n}: Riesz bounds ({a}, {b}), expected (1, 9)")
        })?;
    }
    let mut rng = Sampler::new(2);
    let mut trials = 0;
    while trials < 50 {
        let n = 2 + rng.index(23);
        let g1 = rng.index(n);
        let g2 = (g1 + 1 + rng.index(n - 1)) % n;
        let a = rng.uniform(-3.0, 3.0);
        let b = rng.uniform(-3.0, 3.0);
        if (a.abs() - b.abs()).abs() < 1e-3 {
            continue;
        }
        trials += 1;
        let group = cyclic(n);
        let (lo, hi) = ((a.abs() - b.abs()).powi(2), (a.abs() + b.abs()).powi(2));
        let f = SeqVector::new(group.clone(), {
            let mut v = CVec::zeros(n);
            v[g1] += real(a);
            v[g2] += real(b);
            v
        })
        .map_err(|e| e.to_string())?;
        let rep = Representation::left_regular(&group);
        let br = bracket(&rep, f.coeffs(), f.coeffs()).map_err(|e| e.to_string())?;
        let (values, _) = linalg::hermitian_eigen(br.matrix());
        let scale = hi.max(1.0);
        ensure(
            values
                .iter()
                .all(|&x| x >= lo - COMB_TOL * scale && x <= hi + COMB_TOL * scale),
            || format!("Z_{n} ({g1},{g2}) a={a} b={b}: eigenvalues {values:?} outside [{lo}, {hi}]"),
        )?;
        let report = comb_analysis(&group, g1, g2, real(a), real(b), COMB_TOL).map_err(|e| e.to_string())?;
        ensure(report.within_window, || format!("Z_{n}: comb report outside window"))?;
    }
    Ok("(1, 9) on Z_2 and Z_12; 50 random combs inside their windows".into())
}

fn spectral_equivalence() -> Outcome {
    let start = Instant::now();
    let zoo = group_zoo();
    let mut rng = Sampler::new(3);
    let mut worst: f64 = 0.0;
    let configs = 200;
    for _ in 0..configs {
        let group = zoo[rng.index(zoo.len())].clone();
        let rep = random_representation(&group, 16, &mut rng);
        let k = 1 + rng.index(3);
        let gens: Vec<CVec> = (0..k).map(|_| rng.cvec(rep.dim())).collect();
        let system = orbit_system(&rep, gens.clone()).map_err(|e| e.to_string())?;
        let (gram, _) = linalg::hermitian_eigen(&gram_matrix(&system));
        let block = block_bracket_gramian(&rep, &gens).map_err(|e| e.to_string())?;
        let (blocks, _) = linalg::hermitian_eigen(&block);
        let gap = max_spectrum_gap(&sorted_desc(gram), &sorted_desc(blocks));
        worst = worst.max(gap);
        ensure(gap <= SPECTRUM_TOL, || {
            format!(
                "order {} dim {} k {k}: spectra differ by {gap:e}",
                group.order(),
                rep.dim()
            )
        })?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < SPECTRUM_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!("{configs} configurations, max gap {worst:.1e}, {elapsed:.2?}"))
}

fn representation_matrix(rng: &mut Sampler) -> Vec<(String, Representation)> {
    let mut reps = Vec::new();
    let groups: Vec<GroupRef> = vec![
        cyclic(7),
        Arc::new(FiniteGroup::dihedral(3)),
        Arc::new(FiniteGroup::dihedral(4)),
        Arc::new(FiniteGroup::direct_product(
            &FiniteGroup::cyclic(2),
            &FiniteGroup::cyclic(6),
        )),
    ];
    for g in &groups {
        let n = g.order();
        reps.push((format!("left regular |G|={n}"), Representation::left_regular(g)));
        reps.push((format!("right regular |G|={n}"), Representation::right_regular(g)));
        let action = GroupAction::disjoint_union(&[
            GroupAction::trivial(g, 1),
            GroupAction::on_cosets(g, &[g.identity()]).expect("trivial subgroup"),
            GroupAction::left_translation(g),
        ])
        .expect("same group");
        reps.push((
            format!("action |G|={n}"),
            action_representation(&action).expect("valid action"),
        ));
        reps.push((format!("random unitary |G|={n}"), random_representation(g, 16, rng)));
    }
    reps
}

fn bracket_axioms() -> Outcome {
    let mut rng = Sampler::new(4);
    let reps = representation_matrix(&mut rng);
    let mut worst: f64 = 0.0;
    for (i, (name, rep)) in reps.iter().enumerate() {
        let r = verify_bracket_properties(rep, 100, AXIOM_TOL, 40 + i as u64);
        worst = worst.max(r.max_defect);
        ensure(r.passed, || format!("{name}: max defect {:e}", r.max_defect))?;
    }
    Ok(format!(
        "{} representations x 100 samples, max defect {worst:.1e}",
        reps.len()
    ))
}

fn helson_axioms() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut check = |label: &str, map: &dyn HelsonMap, seed: u64| -> Result<(), String> {
        let r = verify_helson_axioms(map, 100, AXIOM_TOL, seed).map_err(|e| e.to_string())?;
        worst = worst.max(r.max_defect);
        ensure(r.passed, || {
            format!(
                "{label}: isometry {:e} intertwining {:e} bracket {:e}",
                r.isometry, r.intertwining, r.bracket_recovery
            )
        })
    };

    let groups: Vec<GroupRef> = vec![
        cyclic(6),
        Arc::new(FiniteGroup::dihedral(3)),
        Arc::new(FiniteGroup::dihedral(5)),
    ];
    let mut rng = Sampler::new(5);
    for (i, g) in groups.iter().enumerate() {
        check("fourier", &FourierHelsonMap::new(g), 50 + i as u64)?;

        let rep = random_representation(g, 16, &mut rng);
        let seeds: Vec<CVec> = (0..2).map(|_| rng.cvec(rep.dim())).collect();
        let spanning: Vec<CVec> = seeds
            .iter()
            .flat_map(|v| (0..g.order()).map(|x| rep.apply(x, v)).collect::<Vec<_>>())
            .collect();
        let dec = decompose_invariant(&rep, &spanning).map_err(|e| e.to_string())?;
        let map = build_helson_map(&rep, dec).map_err(|e| e.to_string())?;
        check("periodization", &map, 60 + i as u64)?;

        let action = GroupAction::disjoint_union(&[GroupAction::left_translation(g), GroupAction::left_translation(g)])
            .map_err(|e| e.to_string())?;
        let tiling = find_tiling_set(&action).map_err(|e| e.to_string())?;
        let zak = ZakTransform::new(&action, &tiling).map_err(|e| e.to_string())?;
        check("zak", &zak, 70 + i as u64)?;
        for _ in 0..20 {
            let phi = rng.cvec(action.points());
            let back = zak
                .inverse(&zak.transform(&phi).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            let err = linalg::max_abs_vec(&(&back - &phi));
            ensure(err <= ZAK_ROUND_TRIP_TOL, || format!("zak round trip {err:e}"))?;
        }
    }
    Ok(format!("fourier, periodization and zak maps, max defect {worst:.1e}"))
}

fn parseval_synthesis() -> Outcome {
    let zoo = group_zoo();
    let mut rng = Sampler::new(6);
    let (mut bound_gap, mut span_gap): (f64, f64) = (0.0, 0.0);
    for _ in 0..50 {
        let group = zoo[1 + rng.index(zoo.len() - 1)].clone();
        let rep = random_representation(&group, 16, &mut rng);
        let psi = rng.cvec(rep.dim());
        let p = parseval_generator(&rep, &psi).map_err(|e| e.to_string())?;
        let original = orbit_system(&rep, vec![psi]).map_err(|e| e.to_string())?;
        let parseval = orbit_system(&rep, vec![p]).map_err(|e| e.to_string())?;
        let g = gram_bounds(&parseval);
        let gap = (g.lower - 1.0).abs().max((g.upper - 1.0).abs());
        bound_gap = bound_gap.max(gap);
        ensure(gap <= PARSEVAL_BOUND_TOL, || {
            format!("gram bounds ({}, {})", g.lower, g.upper)
        })?;
        let d = linalg::max_abs(&(original.span_projection() - parseval.span_projection()));
        span_gap = span_gap.max(d);
        ensure(d <= SPAN_TOL, || format!("span projections differ by {d:e}"))?;
    }
    Ok(format!(
        "50 generators, bound gap {bound_gap:.1e}, span gap {span_gap:.1e}"
    ))
}

fn duality() -> Outcome {
    let zoo = group_zoo();
    let mut rng = Sampler::new(7);
    let (mut minimal, mut singular) = (0, 0);
    for trial in 0..60 {
        let group = zoo[1 + rng.index(zoo.len() - 1)].clone();
        let rep = match trial % 3 {
            // regular plus extra pieces: generic vectors are minimal
            0 => {
                let extra = random_representation(&group, 8, &mut rng);
                Representation::direct_sum(&[&Representation::left_regular(&group), &extra])
                    .map_err(|e| e.to_string())?
            }
            1 => Representation::left_regular(&group),
            _ => random_representation(&group, 16, &mut rng),
        };
        let psi = rng.cvec(rep.dim());
        let b = bracket(&rep, &psi, &psi).map_err(|e| e.to_string())?;
        let (values, _) = linalg::hermitian_eigen(b.matrix());
        let min = values.last().copied().unwrap_or(0.0);
        let system = orbit_system(&rep, vec![psi.clone()]).map_err(|e| e.to_string())?;
        let oracle = biorthogonal_oracle(&system).map_err(|e| e.to_string())?;
        if min > MINIMAL_THRESHOLD {
            minimal += 1;
            let dual = dual_generator(&rep, &psi, 1e-12).map_err(|e| e.to_string())?;
            let d = biorthogonality_defect(&rep, &psi, &dual);
            ensure(d <= BIORTHOGONAL_TOL, || format!("biorthogonality defect {d:e}"))?;
            let Biorthogonal::Dual(x) = oracle else {
                return Err(format!("oracle says singular with min eigenvalue {min:e}"));
            };
            let gap = linalg::max_abs_vec(&(&dual - &x));
            ensure(gap <= DUAL_ORACLE_TOL, || {
                format!("dual differs from oracle by {gap:e}")
            })?;
        } else {
            singular += 1;
            let result = dual_generator(&rep, &psi, MINIMAL_THRESHOLD);
            ensure(matches!(result, Err(Error::NotMinimal { .. })), || {
                format!("expected NotMinimal, got {result:?}")
            })?;
            ensure(matches!(oracle, Biorthogonal::Singular { .. }), || {
                "oracle found a dual".into()
            })?;
        }
    }
    ensure(minimal > 0 && singular > 0, || {
        format!("{minimal} minimal, {singular} singular")
    })?;
    Ok(format!(
        "{minimal} minimal orbits matched the oracle, {singular} singular orbits rejected"
    ))
}

/// A random projection in the right group algebra, of rank between 1 and n-1.
fn random_algebra_projection(group: &GroupRef, rng: &mut Sampler) -> CMat {
    loop {
        let h = rng.hermitian_algebra_element(group);
        let (values, vectors) = linalg::hermitian_eigen(h.matrix());
        let q = linalg::from_spectrum(&values, &vectors, |x| if x > 0.0 { 1.0 } else { 0.0 });
        let rank = values.iter().filter(|&&x| x > 0.0).count();
        if rank > 0 && rank < group.order() {
            return q;
        }
    }
}

fn left_invariant_structure() -> Outcome {
    let zoo: Vec<GroupRef> = group_zoo().into_iter().filter(|g| g.order() >= 3).collect();
    let mut rng = Sampler::new(8);
    let mut worst: f64 = 0.0;
    let mut weakest_control = f64::INFINITY;
    for _ in 0..20 {
        let group = zoo[rng.index(zoo.len())].clone();
        let n = group.order();
        let q0 = random_algebra_projection(&group, &mut rng);
        let k = 1 + rng.index(2);
        let mut spanning = Vec::new();
        for _ in 0..k {
            let f = SeqVector::new(group.clone(), &q0 * rng.cvec(n)).map_err(|e| e.to_string())?;
            spanning.extend((0..n).map(|g| f.translate_left(g)));
        }
        let r = left_invariance_analysis(&spanning, INVARIANCE_TOL).map_err(|e| e.to_string())?;
        let defects = [
            r.commutator_defect,
            r.forward_inclusion,
            r.reverse_inclusion,
            r.bracket_defect,
            r.idempotence_defect,
            r.frame_operator_defect,
        ];
        let m = defects.iter().copied().fold(0.0, f64::max);
        worst = worst.max(m);
        ensure(r.left_invariant && r.parseval_ok && m <= INVARIANCE_TOL, || {
            format!("order {n}: defects {defects:?}")
        })?;

        let dim = 1 + rng.index(n - 1);
        let control: Vec<SeqVector> = (0..dim.min(n / 2).max(1)).map(|_| rng.seq_vector(&group)).collect();
        let c = left_invariance_analysis(&control, INVARIANCE_TOL).map_err(|e| e.to_string())?;
        weakest_control = weakest_control.min(c.commutator_defect);
        ensure(c.commutator_defect >= CONTROL_GAP, || {
            format!("order {n}: control commutator defect only {:e}", c.commutator_defect)
        })?;
    }
    Ok(format!(
        "20 invariant subspaces, max defect {worst:.1e}; controls fail by >= {weakest_control:.2}"
    ))
}

fn abelian_oracle() -> Outcome {
    let mut rng = Sampler::new(9);
    let mut worst: f64 = 0.0;
    for n in 2..=24 {
        let group = cyclic(n);
        let rep = Representation::left_regular(&group);
        for _ in 0..50 {
            let f = rng.seq_vector(&group);
            let fibers = dft_fibers(&f).map_err(|e| e.to_string())?;
            let b = bracket(&rep, f.coeffs(), f.coeffs()).map_err(|e| e.to_string())?;
            let (values, _) = linalg::hermitian_eigen(b.matrix());
            let gap = max_spectrum_gap(&sorted_desc(fibers), &sorted_desc(values));
            worst = worst.max(gap);
            ensure(gap <= FIBER_TOL, || {
                format!("Z_{n}: fibers differ from spectrum by {gap:e}")
            })?;
        }
    }
    // sanity: the Riesz bounds of a comb are the extreme fibers
    let f = CVec::from_vec(vec![
        real(3.0),
        C64::new(0.0, 0.0),
        real(1.0),
        C64::new(0.0, 0.0),
        C64::new(0.0, 0.0),
        C64::new(0.0, 0.0),
    ]);
    let rb = riesz_bounds(&Representation::left_regular(&cyclic(6)), &[f]).map_err(|e| e.to_string())?;
    ensure(
        (rb.lower - 7.0).abs() <= FIBER_TOL && (rb.upper - 16.0).abs() <= FIBER_TOL,
        || format!("comb on Z_6: ({}, {})", rb.lower, rb.upper),
    )?;
    Ok(format!("Z_2..Z_24 x 50 vectors, max gap {worst:.1e}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("dihedral constants", dihedral_constants),
        ("comb bounds", comb_bounds),
        ("gram / block bracket spectra", spectral_equivalence),
        ("bracket axioms", bracket_axioms),
        ("helson axioms", helson_axioms),
        ("parseval synthesis", parseval_synthesis),
        ("duality", duality),
        ("left-invariant structure", left_invariant_structure),
        ("abelian oracle", abelian_oracle),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {}. {name}: {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL {}. {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
