//! Seeded randomized suites shared by the acceptance gate and the property tests.
#![allow(dead_code)]

use std::sync::Arc;

use homquiver::cli::run_command;
use homquiver::homology::{default_cap, les_dimension_check, minimal_resolution};
use homquiver::pathalg::PathAlgebra;
use homquiver::presets::{sl2_principal, sl3_singular, sl3_singular_monomial};
use homquiver::random::random_representation;
use homquiver::repcat::{direct_sum, quotient_rep, radical_power, simple, submodule_rep};
use homquiver::serre::{serre_subcategory, Comparator};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const CASES: usize = 100;

pub fn algebras() -> Vec<Arc<PathAlgebra>> {
    vec![
        Arc::new(sl2_principal()),
        Arc::new(sl3_singular_monomial()),
        Arc::new(sl3_singular()),
    ]
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `Ok(cases)` or the first failing case.
pub type Suite = Result<usize, String>;

pub fn resolution_invariants(seed: u64) -> Suite {
    let algs = algebras();
    let mut rng = rng(seed);
    for case in 0..CASES {
        let a = algs.choose(&mut rng).unwrap();
        let m = random_representation(a, &mut rng);
        let res = minimal_resolution(&m, default_cap(a)).map_err(|e| format!("case {case}: {e}"))?;
        if !res.verify() {
            return Err(format!("case {case}: resolution of {:?} fails verification", m.dims()));
        }
    }
    Ok(CASES)
}

/// Minimality makes every Hom-complex differential into a simple vanish.
pub fn multiplicities_match_ext(seed: u64) -> Suite {
    let algs = algebras();
    let mut rng = rng(seed);
    for case in 0..CASES {
        let a = algs.choose(&mut rng).unwrap();
        let m = random_representation(a, &mut rng);
        let res = minimal_resolution(&m, default_cap(a)).map_err(|e| e.to_string())?;
        let mult = res.multiplicities();
        for j in a.simples() {
            let lj = simple(a, j);
            for (d, row) in mult.iter().enumerate() {
                let e = res.ext_dim(&lj, d).map_err(|e| e.to_string())?;
                if e != row[j] {
                    return Err(format!("case {case}: Ext^{d}(M, L{j}) = {e} but multiplicity {}", row[j]));
                }
            }
        }
    }
    Ok(CASES)
}

pub fn ext_additivity(seed: u64) -> Suite {
    let algs = algebras();
    let mut rng = rng(seed);
    for case in 0..CASES {
        let a = algs.choose(&mut rng).unwrap();
        let m = random_representation(a, &mut rng);
        let n = random_representation(a, &mut rng);
        let k = random_representation(a, &mut rng);
        let s = direct_sum(&m, &n).module;
        let cap = default_cap(a).max(4);
        let (rm, rn, rs) = (
            minimal_resolution(&m, cap).map_err(|e| e.to_string())?,
            minimal_resolution(&n, cap).map_err(|e| e.to_string())?,
            minimal_resolution(&s, cap).map_err(|e| e.to_string())?,
        );
        let rk = minimal_resolution(&k, cap).map_err(|e| e.to_string())?;
        for d in 0..=3 {
            let lhs = rs.ext_dim(&k, d).map_err(|e| e.to_string())?;
            let rhs = rm.ext_dim(&k, d).map_err(|e| e.to_string())? + rn.ext_dim(&k, d).map_err(|e| e.to_string())?;
            if lhs != rhs {
                return Err(format!("case {case}: first argument, degree {d}: {lhs} != {rhs}"));
            }
            let lhs = rk.ext_dim(&s, d).map_err(|e| e.to_string())?;
            let rhs = rk.ext_dim(&m, d).map_err(|e| e.to_string())? + rk.ext_dim(&n, d).map_err(|e| e.to_string())?;
            if lhs != rhs {
                return Err(format!("case {case}: second argument, degree {d}: {lhs} != {rhs}"));
            }
        }
    }
    Ok(CASES)
}

/// `0 -> rad^k M -> M -> M / rad^k M -> 0`.
pub fn pd_inequalities(seed: u64) -> Suite {
    let algs = algebras();
    let mut rng = rng(seed);
    for case in 0..CASES {
        let a = algs.choose(&mut rng).unwrap();
        let m = random_representation(a, &mut rng);
        let k = rng.gen_range(1..=3);
        let sub = radical_power(&m, k);
        let (x, f) = submodule_rep(&m, &sub);
        let (z, g) = quotient_rep(&m, &sub);
        let test = simple(a, *a.simples().choose(&mut rng).unwrap());
        let r = les_dimension_check((&x, &f), &m, (&z, &g), &test, 3).map_err(|e| format!("case {case}: {e}"))?;
        if r.pd1 != Some(true) || r.pd2 != Some(true) || !r.passes() {
            return Err(format!("case {case}: {r:?}"));
        }
    }
    Ok(CASES)
}

pub fn low_degree_comparison(seed: u64) -> Suite {
    let algs = algebras();
    let mut rng = rng(seed);
    for case in 0..CASES {
        let a = algs.choose(&mut rng).unwrap();
        let mut s: Vec<usize> = a.simples().into_iter().filter(|_| rng.gen_bool(0.5)).collect();
        if s.is_empty() {
            s.push(*a.simples().choose(&mut rng).unwrap());
        }
        let sub = serre_subcategory(a, &s).map_err(|e| e.to_string())?;
        let m = random_representation(sub.quotient(), &mut rng);
        let n = random_representation(sub.quotient(), &mut rng);
        let comp = Comparator::new(&sub, &m, 1).map_err(|e| format!("case {case}: {e}"))?;
        for d in 0..=1 {
            let c = comp.compare(&n, d).map_err(|e| e.to_string())?;
            if !c.is_iso() {
                return Err(format!("case {case}: φ^{d} for {s:?} is not an isomorphism: {c:?}"));
            }
        }
    }
    Ok(CASES)
}

const COMMANDS: &[&[&str]] = &[
    &["basis", "sl3_singular"],
    &["projectives", "sl2_principal"],
    &["pd", "sl3_singular_monomial"],
    &["gldim", "sl3_singular"],
    &["resolve", "sl3_singular", "L3"],
    &["ext", "sl3_singular", "L3", "L3", "--max", "3"],
    &["ext-quiver", "sl2_principal"],
    &["initial-segments", "sl3_singular"],
    &["serre", "sl3_singular", "--simples", "L1,L3", "--check-fullness"],
    &["coxeter", "--type", "A2", "--parabolic", "s1", "--eval", "thm777"],
    &["coxeter", "--type", "G2", "--eval", "coideals"],
    &["liecoh", "--preset", "heisenberg", "--module", "adjoint"],
    &["preset", "sl2_principal", "--self-test"],
    &["cross-validate", "sl2_principal"],
];

pub fn deterministic_reports(seed: u64) -> Suite {
    let mut rng = rng(seed);
    for case in 0..CASES {
        let cmd = COMMANDS.choose(&mut rng).unwrap();
        let mut argv = vec!["homquiver"];
        if rng.gen_bool(0.5) {
            argv.push("--json");
        }
        argv.extend_from_slice(cmd);
        let first = run_command(argv.clone()).to_json();
        let second = run_command(argv.clone()).to_json();
        if first != second {
            return Err(format!("case {case}: {argv:?} differs between runs"));
        }
    }
    Ok(CASES)
}
