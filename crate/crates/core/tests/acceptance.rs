//! Acceptance gate: one PASS/FAIL line per criterion.

mod common;

use std::io::Write;
use std::sync::Arc;

use homquiver::coxeter::{build_weyl_group, cross_validate, segment_correspondence, WeylType};
use homquiver::homology::{default_cap, ext_dim, global_dim, minimal_resolution, simple_pds, Pd};
use homquiver::liecoh::{self, LieModule};
use homquiver::pathalg::PathAlgebra;
use homquiver::presets::{quiver_preset, sl2_principal, sl3_singular, sl3_singular_monomial, LieKind};
use homquiver::random::random_lie_module;
use homquiver::repcat::{indecomposable_projective, loewy_series, simple};
use homquiver::serre::{comparison_map, extension_fullness, guichardet, initial_segments, serre_subcategory, Fullness};

type Outcome = Result<(), String>;
type Named<F> = (&'static str, F);

fn check(cond: bool, what: impl Into<String>) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn pds(a: &Arc<PathAlgebra>) -> Result<Vec<usize>, String> {
    simple_pds(a, default_cap(a))
        .map_err(err)?
        .into_iter()
        .map(|p| p.and_then(Pd::finite).ok_or_else(|| "infinite or missing pd".to_string()))
        .collect()
}

fn ext(a: &Arc<PathAlgebra>, i: usize, j: usize, d: usize) -> Result<usize, String> {
    ext_dim(&simple(a, i), &simple(a, j), d).map_err(err)
}

fn criterion_1() -> Outcome {
    let a = Arc::new(sl2_principal());
    check(pds(&a)? == vec![1, 2], "pd of simples")?;
    check(global_dim(&a, default_cap(&a)).map_err(err)? == Pd::Finite(2), "gl.dim")?;
    let segs = initial_segments(&a, default_cap(&a)).map_err(err)?;
    check(segs == vec![vec![], vec![0], vec![0, 1]], format!("initial segments {segs:?}"))?;
    let r = extension_fullness(&a, &[0], 4).map_err(err)?;
    check(r.verdict == Fullness::ExtensionFull && r.certified, "{L1} extension full")?;
    check(guichardet(&a, 4).map_err(err)?.is_guichardet, "Guichardet verdict")
}

fn criterion_2() -> Outcome {
    let a = Arc::new(sl3_singular());
    let dims: Vec<Vec<usize>> = (0..3).map(|v| a.projective_dims(v)).collect();
    check(dims == vec![vec![3, 2, 1], vec![2, 2, 1], vec![1, 1, 1]], format!("projective dims {dims:?}"))?;
    let layers = loewy_series(&indecomposable_projective(&a, 1));
    let expected = vec![vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 0], vec![1, 0, 0]];
    check(layers == expected, format!("Loewy layers of P2 {layers:?}"))?;
    check(pds(&a)? == vec![1, 2, 2], "pd of simples")?;
    check(global_dim(&a, default_cap(&a)).map_err(err)? == Pd::Finite(2), "gl.dim")?;
    let res = minimal_resolution(&simple(&a, 2), default_cap(&a)).map_err(err)?;
    check(
        res.multiplicities() == vec![vec![0, 0, 1], vec![0, 1, 0], vec![0, 0, 1]],
        "resolution of L3",
    )?;
    check(ext(&a, 2, 2, 2)? == 1, "dim Ext^2(L3, L3)")?;
    check(ext(&a, 0, 2, 1)? == 0 && ext(&a, 2, 0, 1)? == 0, "Ext^1 between L1 and L3")?;
    check(initial_segments(&a, default_cap(&a)).map_err(err)?.contains(&vec![2]), "{L3} initial")?;
    let sub = serre_subcategory(&a, &[2]).map_err(err)?;
    let l3 = simple(sub.quotient(), 2);
    let phi = comparison_map(&sub, &l3, &l3, 2).map_err(err)?;
    check(!phi.surjective, format!("φ^2 on (L3, L3) {phi:?}"))?;
    check(!guichardet(&a, 4).map_err(err)?.is_guichardet, "Guichardet verdict")
}

fn criterion_3() -> Outcome {
    let a = Arc::new(sl3_singular_monomial());
    let res = minimal_resolution(&simple(&a, 2), default_cap(&a)).map_err(err)?;
    check(
        res.multiplicities() == vec![vec![0, 0, 1], vec![0, 1, 0], vec![0, 0, 1]],
        "resolution of L3",
    )?;
    check(initial_segments(&a, default_cap(&a)).map_err(err)?.contains(&vec![0, 2]), "{L1, L3} initial")?;
    for i in [0, 2] {
        for j in [0, 2] {
            check(ext(&a, i, j, 1)? == 0, format!("Ext^1(L{}, L{}) vanishes", i + 1, j + 1))?;
        }
    }
    let r = extension_fullness(&a, &[0, 2], 4).map_err(err)?;
    let degree = r.first_failure.as_ref().map(|c| c.degree);
    check(r.verdict == Fullness::NotExtensionFull && degree == Some(2), format!("first failure at {degree:?}"))?;
    check(!guichardet(&a, 4).map_err(err)?.is_guichardet, "Guichardet verdict")
}

fn criterion_4() -> Outcome {
    let a2 = build_weyl_group(WeylType::A(2)).map_err(err)?;
    check(a2.thm777_eval(&[0]).map_err(err)? == (1, 2, 2), "A2 with {s1}")?;
    let a1 = build_weyl_group(WeylType::A(1)).map_err(err)?;
    check(a1.thm777_eval(&[]).map_err(err)? == (1, 2, 2), "A1 with no generators")?;
    let (dim_g, dim_h) = a1.lie_dims();
    check(dim_g - dim_h == 2, "dim g - dim h for sl2")?;
    for name in ["sl3_singular", "sl2_principal"] {
        let p = quiver_preset(name).map_err(err)?;
        let a = Arc::new(p.algebra());
        let ann = p.annotations.coxeter.clone().ok_or("missing annotation")?;
        let cv = cross_validate(&a, &ann, default_cap(&a)).map_err(err)?;
        check(cv.matches, format!("{name}: {cv:?}"))?;
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    let p = quiver_preset("sl2_principal").map_err(err)?;
    let a = Arc::new(p.algebra());
    let w = build_weyl_group(WeylType::A(1)).map_err(err)?;
    check(w.coideals().map_err(err)?.len() == 3, "three coideals")?;
    let ev = p.annotations.coxeter.and_then(|c| c.element_vertices).ok_or("missing vertices")?;
    let sc = segment_correspondence(&a, &w, &ev, default_cap(&a)).map_err(err)?;
    check(sc.bijective, format!("correspondence {sc:?}"))?;
    for (name, formula, computed) in &sc.pd_checks {
        check(Pd::Finite(*formula) == *computed, format!("pd L({name})"))?;
    }
    let pd_of = |n: &str| sc.pd_checks.iter().find(|c| c.0 == n).map(|c| c.1);
    check(pd_of("e") == Some(2) && pd_of("s1") == Some(1), "pd values for e and w0")
}

fn criterion_6() -> Outcome {
    let a = Arc::new(sl2_principal());
    let w = build_weyl_group(WeylType::A(1)).map_err(err)?;
    let ev = quiver_preset("sl2_principal")
        .map_err(err)?
        .annotations
        .coxeter
        .and_then(|c| c.element_vertices)
        .ok_or("missing vertices")?;
    for coideal in w.coideals().map_err(err)? {
        let mut s: Vec<usize> = coideal.iter().map(|&x| ev[x]).collect();
        s.sort_unstable();
        if s.is_empty() {
            continue;
        }
        let r = extension_fullness(&a, &s, 4).map_err(err)?;
        check(
            r.verdict == Fullness::ExtensionFull && r.certified && r.checked_up_to >= 4,
            format!("coideal {s:?}: {:?}", r.verdict),
        )?;
        // certified vanishing: both global dimensions are finite and at most the checked range
        let gl = [r.gl_dim_ambient, r.gl_dim_sub];
        check(
            gl.iter().all(|g| matches!(g, Some(Pd::Finite(n)) if *n <= r.checked_up_to)),
            "vanishing beyond the checked range",
        )?;
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    let a2 = build_weyl_group(WeylType::A(2)).map_err(err)?;
    let f = a2.oinf_formulas(a2.identity(), None);
    check(f.pd_simple == 8 && f.gl_dim == 8 && f.min_pd == 2, format!("A2, w = e: {f:?}"))?;
    let a1 = build_weyl_group(WeylType::A(1)).map_err(err)?;
    let f = a1.oinf_formulas(a1.longest(), None);
    check(f.pd_verma == 2 && f.gl_dim == 3 && f.min_pd == 1, format!("A1, w = w0: {f:?}"))
}

fn criterion_8() -> Outcome {
    for n in 1..=5 {
        let g = liecoh::abelian(n);
        let dims = liecoh::cohomology_dims(&g, &LieModule::trivial(&g, 1));
        let binom: Vec<usize> = (0..=n).map(|d| (0..d).fold(1, |acc, i| acc * (n - i) / (i + 1))).collect();
        check(dims == binom, format!("abelian {n}: {dims:?}"))?;
    }
    let sl2 = liecoh::sl2();
    check(liecoh::ce_cohomology(&sl2, &LieModule::trivial(&sl2, 1), 3).map_err(err)?.dim == 1, "H^3(sl2)")?;
    let gg = liecoh::sl2_plus_sl2();
    check(liecoh::ce_cohomology(&gg, &LieModule::trivial(&gg, 1), 6).map_err(err)?.dim >= 1, "H^6(sl2+sl2)")?;
    let mut rng = common::rng(0x8);
    for kind in LieKind::all() {
        let g = kind.algebra();
        for case in 0..20 {
            let v = random_lie_module(kind, &mut rng, 4);
            let r = liecoh::top_degree_check(&g, &v);
            check(r.passes, format!("top degree, {} case {case}: {r:?}", kind.name()))?;
        }
        if kind.unimodular() {
            for v in [LieModule::trivial(&g, 1), LieModule::adjoint(&g), LieModule::adjoint(&g).dual()] {
                let r = liecoh::poincare_check(&g, &v);
                check(r.passes && !r.skipped, format!("Poincaré duality, {}", kind.name()))?;
            }
        }
    }
    Ok(())
}

fn criterion_9() -> Outcome {
    let suites: [Named<fn(u64) -> common::Suite>; 6] = [
        ("resolution invariants", common::resolution_invariants),
        ("multiplicities vs Ext", common::multiplicities_match_ext),
        ("Ext additivity", common::ext_additivity),
        ("pd inequalities", common::pd_inequalities),
        ("low-degree comparison", common::low_degree_comparison),
        ("deterministic reports", common::deterministic_reports),
    ];
    for (i, (name, suite)) in suites.iter().enumerate() {
        let cases = suite(0x5eed + i as u64).map_err(|e| format!("{name}: {e}"))?;
        check(cases >= 100, format!("{name}: only {cases} cases"))?;
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [Named<fn() -> Outcome>; 9] = [
        ("sl2 preset", criterion_1),
        ("three-vertex preset", criterion_2),
        ("monomial three-vertex preset", criterion_3),
        ("closed-form cross-validation", criterion_4),
        ("coideals and initial segments", criterion_5),
        ("coideal Serre subcategories are extension full", criterion_6),
        ("formula evaluators", criterion_7),
        ("Lie algebra cohomology", criterion_8),
        ("property suites", criterion_9),
    ];
    let mut failures = Vec::new();
    for (k, (name, f)) in criteria.iter().enumerate() {
        let line = match f() {
            Ok(()) => format!("criterion {}: PASS  {name}\n", k + 1),
            Err(e) => {
                failures.push(k + 1);
                format!("criterion {}: FAIL  {name}: {e}\n", k + 1)
            }
        };
        // written past the harness capture so the gate shows in plain `cargo test` logs
        std::io::stdout().write_all(line.as_bytes()).unwrap();
    }
    assert!(failures.is_empty(), "failing criteria: {failures:?}");
}
