//! Bundled example algebras with the values they are known to have.

use std::sync::Arc;

use serde::Serialize;

use crate::coxeter::cross_validate;
use crate::error::{Error, Result};
use crate::format::{parse_algebra, AlgebraDescription};
use crate::homology::{default_cap, global_dim, minimal_resolution, simple_pds, Pd};
use crate::liecoh::{self, LieAlgebra, LieModule};
use crate::pathalg::{PathAlgebra, DEFAULT_CAP};
use crate::repcat::simple;
use crate::serre::{guichardet, initial_segments};

pub const SL2_PRINCIPAL: &str = include_str!("../presets/sl2_principal.quiver");
pub const SL3_SINGULAR_MONOMIAL: &str = include_str!("../presets/sl3_singular_monomial.quiver");
pub const SL3_SINGULAR: &str = include_str!("../presets/sl3_singular.quiver");

pub const QUIVER_PRESETS: [&str; 3] = ["sl2_principal", "sl3_singular_monomial", "sl3_singular"];
pub const LIE_PRESETS: [&str; 5] = ["abelian_n", "sl2_lie", "borel_sl2", "heisenberg", "g_plus_g_sl2"];

/// Coxeter data attached to a block: Weyl group type, parabolic generators of the singular
/// stabilizer, and which vertices carry distinguished simples.
#[derive(Clone, Debug, PartialEq)]
pub struct CoxeterAnnotation {
    pub weyl_type: String,
    pub parabolic: Vec<usize>,
    /// vertex of the simple Verma module
    pub simple_verma: usize,
    /// vertices one of which is the dominant simple
    pub dominant_candidates: Vec<usize>,
    /// for regular blocks: vertex of `L(w·0)` for each group element in BFS order
    pub element_vertices: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuiverAnnotations {
    pub projective_dims: Option<Vec<Vec<usize>>>,
    pub pd: Vec<usize>,
    pub gl_dim: usize,
    /// (simple, multiplicity vectors of the minimal resolution)
    pub resolutions: Vec<(usize, Vec<Vec<usize>>)>,
    pub initial_segments: Option<Vec<Vec<usize>>>,
    pub guichardet: bool,
    pub coxeter: Option<CoxeterAnnotation>,
}

#[derive(Clone, Debug)]
pub struct QuiverPreset {
    pub name: &'static str,
    pub text: &'static str,
    pub annotations: QuiverAnnotations,
}

impl QuiverPreset {
    pub fn description(&self) -> AlgebraDescription {
        parse_algebra(self.text).expect("bundled presets parse")
    }

    pub fn algebra(&self) -> PathAlgebra {
        self.description().build(DEFAULT_CAP).expect("bundled presets are finite-dimensional")
    }
}

pub fn quiver_preset(name: &str) -> Result<QuiverPreset> {
    let name = name.trim_end_matches(".quiver");
    let p = match name {
        "sl2_principal" => QuiverPreset {
            name: "sl2_principal",
            text: SL2_PRINCIPAL,
            annotations: QuiverAnnotations {
                projective_dims: Some(vec![vec![2, 1], vec![1, 1]]),
                pd: vec![1, 2],
                gl_dim: 2,
                resolutions: vec![(0, vec![vec![1, 0], vec![0, 1]])],
                initial_segments: Some(vec![vec![], vec![0], vec![0, 1]]),
                guichardet: true,
                coxeter: Some(CoxeterAnnotation {
                    weyl_type: "A1".into(),
                    parabolic: vec![],
                    simple_verma: 0,
                    dominant_candidates: vec![1],
                    // BFS order of A1 is [e, s1]; L(e·0) is dominant, L(s1·0) the simple Verma
                    element_vertices: Some(vec![1, 0]),
                }),
            },
        },
        "sl3_singular_monomial" => QuiverPreset {
            name: "sl3_singular_monomial",
            text: SL3_SINGULAR_MONOMIAL,
            annotations: QuiverAnnotations {
                projective_dims: None,
                pd: vec![1, 2, 2],
                gl_dim: 2,
                resolutions: vec![(2, vec![vec![0, 0, 1], vec![0, 1, 0], vec![0, 0, 1]])],
                initial_segments: None,
                guichardet: false,
                coxeter: None,
            },
        },
        "sl3_singular" => QuiverPreset {
            name: "sl3_singular",
            text: SL3_SINGULAR,
            annotations: QuiverAnnotations {
                projective_dims: Some(vec![vec![3, 2, 1], vec![2, 2, 1], vec![1, 1, 1]]),
                pd: vec![1, 2, 2],
                gl_dim: 2,
                resolutions: vec![(2, vec![vec![0, 0, 1], vec![0, 1, 0], vec![0, 0, 1]])],
                initial_segments: Some(vec![
                    vec![],
                    vec![0],
                    vec![2],
                    vec![0, 1],
                    vec![0, 2],
                    vec![0, 1, 2],
                ]),
                guichardet: false,
                coxeter: Some(CoxeterAnnotation {
                    weyl_type: "A2".into(),
                    parabolic: vec![0],
                    simple_verma: 0,
                    dominant_candidates: vec![1, 2],
                    element_vertices: None,
                }),
            },
        },
        _ => return Err(Error::UnknownPreset(name.to_string())),
    };
    Ok(p)
}

pub fn sl2_principal() -> PathAlgebra {
    quiver_preset("sl2_principal").unwrap().algebra()
}

pub fn sl3_singular_monomial() -> PathAlgebra {
    quiver_preset("sl3_singular_monomial").unwrap().algebra()
}

pub fn sl3_singular() -> PathAlgebra {
    quiver_preset("sl3_singular").unwrap().algebra()
}

/// The bundled Lie algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LieKind {
    Abelian(usize),
    Sl2,
    BorelSl2,
    Heisenberg,
    GPlusGSl2,
}

impl LieKind {
    /// `abelian_n` defaults to `n = 2`; `abelian_<k>` picks `n = k`.
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "abelian_n" | "abelian" => Ok(LieKind::Abelian(2)),
            "sl2_lie" | "sl2" => Ok(LieKind::Sl2),
            "borel_sl2" | "borel" => Ok(LieKind::BorelSl2),
            "heisenberg" => Ok(LieKind::Heisenberg),
            "g_plus_g_sl2" | "sl2+sl2" => Ok(LieKind::GPlusGSl2),
            _ => match name.strip_prefix("abelian_").and_then(|k| k.parse().ok()) {
                Some(n) if (1..=8).contains(&n) => Ok(LieKind::Abelian(n)),
                _ => Err(Error::UnknownPreset(name.to_string())),
            },
        }
    }

    pub fn all() -> [LieKind; 5] {
        [
            LieKind::Abelian(3),
            LieKind::Sl2,
            LieKind::BorelSl2,
            LieKind::Heisenberg,
            LieKind::GPlusGSl2,
        ]
    }

    pub fn name(self) -> String {
        match self {
            LieKind::Abelian(n) => format!("abelian_{n}"),
            LieKind::Sl2 => "sl2_lie".into(),
            LieKind::BorelSl2 => "borel_sl2".into(),
            LieKind::Heisenberg => "heisenberg".into(),
            LieKind::GPlusGSl2 => "g_plus_g_sl2".into(),
        }
    }

    pub fn algebra(self) -> LieAlgebra {
        match self {
            LieKind::Abelian(n) => liecoh::abelian(n),
            LieKind::Sl2 => liecoh::sl2(),
            LieKind::BorelSl2 => liecoh::borel_sl2(),
            LieKind::Heisenberg => liecoh::heisenberg(),
            LieKind::GPlusGSl2 => liecoh::sl2_plus_sl2(),
        }
    }

    /// Trivial-coefficient cohomology dimensions, degree by degree.
    pub fn expected_trivial_cohomology(self) -> Vec<usize> {
        match self {
            LieKind::Abelian(n) => (0..=n).map(|d| binomial(n, d)).collect(),
            LieKind::Sl2 => vec![1, 0, 0, 1],
            LieKind::BorelSl2 => vec![1, 1, 0],
            LieKind::Heisenberg => vec![1, 2, 2, 1],
            // Künneth: (1,0,0,1) ⊗ (1,0,0,1)
            LieKind::GPlusGSl2 => vec![1, 0, 0, 2, 0, 0, 1],
        }
    }

    pub fn unimodular(self) -> bool {
        self != LieKind::BorelSl2
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelfTest {
    pub preset: String,
    pub checks: Vec<(String, bool)>,
}

impl SelfTest {
    pub fn passes(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

/// Recompute every annotation of a preset with the engine.
pub fn self_test(name: &str) -> Result<SelfTest> {
    let mut checks = Vec::new();
    if let Ok(kind) = LieKind::parse(name) {
        let g = kind.algebra();
        let triv = LieModule::trivial(&g, 1);
        checks.push((
            "trivial cohomology".to_string(),
            liecoh::cohomology_dims(&g, &triv) == kind.expected_trivial_cohomology(),
        ));
        checks.push(("unimodular".to_string(), g.is_unimodular() == kind.unimodular()));
        checks.push(("jacobi".to_string(), g.satisfies_jacobi()));
        return Ok(SelfTest {
            preset: kind.name(),
            checks,
        });
    }
    let preset = quiver_preset(name)?;
    let ann = &preset.annotations;
    let desc = preset.description();
    checks.push((
        "text round-trip".to_string(),
        parse_algebra(&desc.to_text()).as_ref() == Ok(&desc),
    ));
    let a = Arc::new(preset.algebra());
    checks.push(("associativity".to_string(), a.check_associativity()));
    if let Some(dims) = &ann.projective_dims {
        let computed: Vec<Vec<usize>> = (0..a.num_vertices()).map(|v| a.projective_dims(v)).collect();
        checks.push(("projective dimension vectors".to_string(), &computed == dims));
    }
    let cap = default_cap(&a);
    let pds: Vec<Option<Pd>> = simple_pds(&a, cap)?;
    let expected: Vec<Option<Pd>> = ann.pd.iter().map(|&p| Some(Pd::Finite(p))).collect();
    checks.push(("pd of simples".to_string(), pds == expected));
    checks.push((
        "global dimension".to_string(),
        global_dim(&a, cap)? == Pd::Finite(ann.gl_dim),
    ));
    for (v, mult) in &ann.resolutions {
        let res = minimal_resolution(&simple(&a, *v), cap)?;
        checks.push((format!("resolution of simple {}", v + 1), &res.multiplicities() == mult));
    }
    if let Some(segs) = &ann.initial_segments {
        checks.push(("initial segments".to_string(), &initial_segments(&a, cap)? == segs));
    }
    checks.push((
        "guichardet verdict".to_string(),
        guichardet(&a, ann.gl_dim)?.is_guichardet == ann.guichardet,
    ));
    if let Some(cox) = &ann.coxeter {
        checks.push(("closed-form cross-validation".to_string(), cross_validate(&a, cox, cap)?.matches));
    }
    Ok(SelfTest {
        preset: preset.name.to_string(),
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_preset_passes_its_self_test() {
        for name in QUIVER_PRESETS.iter().chain(LIE_PRESETS.iter()) {
            let t = self_test(name).unwrap();
            assert!(t.passes(), "{t:?}");
        }
        assert!(matches!(self_test("nope"), Err(Error::UnknownPreset(_))));
        assert_eq!(LieKind::parse("abelian_1").unwrap().algebra().dim(), 1);
    }
}
