//! Serre subcategories generated by sets of simples, comparison maps on Ext, extension
//! fullness, initial segments and the Guichardet property.
//!
//! The subcategory of modules with composition factors in `S` is the module category of
//! `Â = A / (AeA)^N`, where `e` sums the idempotents outside `S` and `N` is where the powers of
//! `AeA` stabilize.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homology::{ext_quiver, global_dim, minimal_resolution, simple_pds, Pd, ProjResolution};
use crate::linalg::{HighPivotEchelon, Matrix, Q};
use crate::pathalg::{Element, PathAlgebra};
use crate::repcat::{simple, Representation};

#[derive(Clone, Debug)]
pub struct SerreSubcat {
    ambient: Arc<PathAlgebra>,
    simples: Vec<usize>,
    exponent: usize,
    /// `dim (AeA)^k` for `k = 1..=exponent + 1`
    power_dims: Vec<usize>,
    quotient: Arc<PathAlgebra>,
}

pub fn serre_subcategory(algebra: &Arc<PathAlgebra>, simples: &[usize]) -> Result<SerreSubcat> {
    let n = algebra.num_vertices();
    let mut s: Vec<usize> = simples.to_vec();
    s.sort_unstable();
    s.dedup();
    if let Some(&v) = s.iter().find(|&&v| v >= n) {
        return Err(Error::InvalidArgument(format!("vertex index {v} out of range")));
    }
    let dim = algebra.dim();
    let mut e = Element::zero(dim);
    for v in (0..n).filter(|v| !s.contains(v)) {
        for (x, y) in e.0.iter_mut().zip(algebra.idempotent(v).0) {
            *x += y;
        }
    }
    let ideal = algebra.two_sided_ideal(&[e]);
    let gens: Vec<Element> = ideal.basis_vectors().into_iter().map(Element).collect();

    let mut power = gens.clone();
    let mut power_dims = vec![power.len()];
    loop {
        let mut next = HighPivotEchelon::new(dim);
        for x in &power {
            for y in &gens {
                next.insert(algebra.multiply(x, y).0);
            }
        }
        let next_dim = next.rows().len();
        power_dims.push(next_dim);
        if next_dim == power.len() {
            break;
        }
        power = next.basis_vectors().into_iter().map(Element).collect();
    }
    let exponent = power_dims.len() - 1;
    let quotient = Arc::new(algebra.quotient(&power));
    Ok(SerreSubcat {
        ambient: algebra.clone(),
        simples: s,
        exponent,
        power_dims,
        quotient,
    })
}

impl SerreSubcat {
    pub fn ambient(&self) -> &Arc<PathAlgebra> {
        &self.ambient
    }

    pub fn simples(&self) -> &[usize] {
        &self.simples
    }

    /// Least `N` with `(AeA)^N = (AeA)^{N+1}`.
    pub fn exponent(&self) -> usize {
        self.exponent
    }

    pub fn power_dims(&self) -> &[usize] {
        &self.power_dims
    }

    /// `Â = A / (AeA)^N`.
    pub fn quotient(&self) -> &Arc<PathAlgebra> {
        &self.quotient
    }

    /// View an `A`-module with composition factors in `S` as an `Â`-module.
    pub fn inflate(&self, m: &Representation) -> Result<Representation> {
        m.over(self.quotient.clone())
    }

    /// View an `Â`-module as an `A`-module.
    pub fn restrict(&self, m: &Representation) -> Result<Representation> {
        m.over(self.ambient.clone())
    }
}

/// One evaluation of `φ^d : Ext^d_Â(M, N) -> Ext^d_A(M, N)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeComparison {
    pub degree: usize,
    /// simple indices when comparing simples
    pub pair: Option<(usize, usize)>,
    pub dim_sub: usize,
    pub dim_ambient: usize,
    pub rank: usize,
    pub injective: bool,
    pub surjective: bool,
}

impl DegreeComparison {
    pub fn is_iso(&self) -> bool {
        self.injective && self.surjective
    }
}

/// Resolutions of `M` over `A` and `Â` with a lift of `id_M` between them.
pub struct Comparator {
    ambient_res: ProjResolution,
    sub_res: ProjResolution,
    /// `lifts[k][g]`: image in `Q_k` of generator `g` of `P_k`
    lifts: Vec<Vec<Vec<Q>>>,
}

impl Comparator {
    /// `m` must be a module over `Â`; degrees up to `max_degree` become comparable.
    pub fn new(sub: &SerreSubcat, m: &Representation, max_degree: usize) -> Result<Self> {
        let mb = sub.inflate(m)?;
        let ma = sub.restrict(m)?;
        let ambient_res = minimal_resolution(&ma, max_degree + 1)?;
        let sub_res = minimal_resolution(&mb, max_degree + 1)?;
        let top = max_degree.min(ambient_res.top_degree());
        let mut lifts: Vec<Vec<Vec<Q>>> = Vec::with_capacity(top + 1);
        for k in 0..=top {
            let p = &ambient_res.terms()[k];
            let q_term = sub_res.terms().get(k);
            let prev = (k > 0).then(|| Self::lift_map(&ambient_res, &sub_res, &lifts, k - 1));
            let mut row = Vec::with_capacity(p.generators().len());
            for (g, &v) in p.generators().iter().enumerate() {
                let x = &ambient_res.generator_images(k)[g];
                // image of ∂x under the previous lift
                let target = match &prev {
                    None => x.clone(),
                    Some(f) => f.block(v).mul_vec(x),
                };
                let y = match q_term {
                    Some(q) if q.module().dims()[v] > 0 => sub_res
                        .differential(k)
                        .block(v)
                        .solve(&target)
                        .ok_or_else(|| Error::NotExact("comparison lift has no solution".into()))?,
                    Some(q) => vec![Q::default(); q.module().dims()[v]],
                    None => Vec::new(),
                };
                row.push(y);
            }
            lifts.push(row);
        }
        Ok(Comparator {
            ambient_res,
            sub_res,
            lifts,
        })
    }

    fn lift_map(
        ambient_res: &ProjResolution,
        sub_res: &ProjResolution,
        lifts: &[Vec<Vec<Q>>],
        k: usize,
    ) -> crate::repcat::ModuleMap {
        let p = &ambient_res.terms()[k];
        match sub_res.terms().get(k) {
            Some(q) => p.map_from_images(q.module(), &lifts[k]),
            None => {
                let zero = Representation::zero(sub_res.module().algebra().clone());
                crate::repcat::ModuleMap::new(
                    p.module()
                        .dims()
                        .iter()
                        .zip(zero.dims())
                        .map(|(&s, &t)| Matrix::zeros(t, s))
                        .collect(),
                )
            }
        }
    }

    pub fn ambient_resolution(&self) -> &ProjResolution {
        &self.ambient_res
    }

    pub fn sub_resolution(&self) -> &ProjResolution {
        &self.sub_res
    }

    pub fn compare(&self, n: &Representation, d: usize) -> Result<DegreeComparison> {
        let dim_sub = self.sub_res.ext_dim(n, d)?;
        let dim_ambient = self.ambient_res.ext_dim(n, d)?;
        let rank = if dim_sub == 0 || dim_ambient == 0 {
            0
        } else {
            self.phi_rank(n, d)
        };
        Ok(DegreeComparison {
            degree: d,
            pair: None,
            dim_sub,
            dim_ambient,
            rank,
            injective: rank == dim_sub,
            surjective: rank == dim_ambient,
        })
    }

    /// `rank φ^d = rank [F·Z_Q | B_P] - rank B_P`.
    fn phi_rank(&self, n: &Representation, d: usize) -> usize {
        let p = &self.ambient_res.terms()[d];
        let q = &self.sub_res.terms()[d];
        let f = q.precompose_matrix(p.generators(), &self.lifts[d], n);
        let z = match self.sub_res.coboundary(n, d) {
            Some(m) => m.nullspace(),
            None => Matrix::identity(q.hom_dim(n)),
        };
        let cycles = f.mul(&z);
        let boundaries = match d {
            0 => Matrix::zeros(p.hom_dim(n), 0),
            _ => self.ambient_res.coboundary(n, d - 1).expect("term exists"),
        };
        let b = boundaries.rank();
        boundaries.hcat(&cycles).rank() - b
    }
}

/// `φ^d` on one pair of `Â`-modules.
pub fn comparison_map(
    sub: &SerreSubcat,
    m: &Representation,
    n: &Representation,
    d: usize,
) -> Result<DegreeComparison> {
    Comparator::new(sub, m, d)?.compare(n, d)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Fullness {
    ExtensionFull,
    NotExtensionFull,
    /// every checked degree is an isomorphism but the tail is not certified
    NoFailureUpToCap,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub simples: Vec<usize>,
    pub exponent: usize,
    pub gl_dim_ambient: Option<Pd>,
    pub gl_dim_sub: Option<Pd>,
    pub checked_up_to: usize,
    pub entries: Vec<DegreeComparison>,
    pub verdict: Fullness,
    pub certified: bool,
    pub first_failure: Option<DegreeComparison>,
}

fn gl_dim_or_none(a: &Arc<PathAlgebra>, cap: usize) -> Result<Option<Pd>> {
    match global_dim(a, cap) {
        Ok(p) => Ok(Some(p)),
        Err(Error::Undetermined { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Check `φ^d` on all pairs of simples in `S`.
///
/// With both global dimensions finite, degrees up to `max(gl.dim A, gl.dim Â, cap)` are checked
/// and both Ext groups vanish beyond, so the verdict is certified. A periodic (infinite) `Â`
/// against finite `gl.dim A` forces a failure right above `gl.dim A`.
pub fn extension_fullness(algebra: &Arc<PathAlgebra>, simples: &[usize], cap: usize) -> Result<ComparisonReport> {
    let sub = serre_subcategory(algebra, simples)?;
    let gl_a = gl_dim_or_none(algebra, cap.max(crate::homology::default_cap(algebra)))?;
    let gl_b = gl_dim_or_none(sub.quotient(), cap.max(crate::homology::default_cap(sub.quotient())))?;
    let max_degree = match (gl_a, gl_b) {
        (Some(Pd::Finite(a)), Some(Pd::Finite(b))) => cap.max(a).max(b),
        (Some(Pd::Finite(a)), Some(Pd::Infinite)) => cap.max(a + 1),
        _ => cap,
    };
    let mut entries = Vec::new();
    for &i in sub.simples() {
        let li = simple(sub.quotient(), i);
        let comp = Comparator::new(&sub, &li, max_degree)?;
        for &j in sub.simples() {
            let lj = simple(sub.quotient(), j);
            for d in 0..=max_degree {
                let mut c = comp.compare(&lj, d)?;
                c.pair = Some((i, j));
                entries.push(c);
            }
        }
    }
    let first_failure = entries
        .iter()
        .filter(|c| !c.is_iso())
        .min_by_key(|c| (c.degree, c.pair))
        .cloned();
    let (verdict, certified) = match (&first_failure, gl_a, gl_b) {
        (Some(_), _, _) => (Fullness::NotExtensionFull, true),
        (None, Some(Pd::Finite(_)), Some(Pd::Finite(_))) => (Fullness::ExtensionFull, true),
        _ => (Fullness::NoFailureUpToCap, false),
    };
    entries.sort_by_key(|c| (c.degree, c.pair));
    Ok(ComparisonReport {
        simples: sub.simples().to_vec(),
        exponent: sub.exponent(),
        gl_dim_ambient: gl_a,
        gl_dim_sub: gl_b,
        checked_up_to: max_degree,
        entries,
        verdict,
        certified,
        first_failure,
    })
}

/// Subsets of simples closed under: `L ∈ S`, `pd L' = pd L - 1`, `Ext¹(L, L') ≠ 0` imply
/// `L' ∈ S`. Sorted by size, then lexicographically.
pub fn initial_segments(algebra: &Arc<PathAlgebra>, cap: usize) -> Result<Vec<Vec<usize>>> {
    let pds = simple_pds(algebra, cap)?;
    let vertices = algebra.simples();
    let pd: Vec<usize> = vertices
        .iter()
        .map(|&v| match pds[v] {
            Some(Pd::Finite(n)) => Ok(n),
            _ => Err(Error::InfiniteGlobalDimension),
        })
        .collect::<Result<_>>()?;
    let ext = ext_quiver(algebra, 1)?;
    let k = vertices.len();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << k) {
        let inside = |a: usize| mask >> a & 1 == 1;
        let closed = (0..k).filter(|&a| inside(a)).all(|a| {
            (0..k).all(|b| inside(b) || pd[b] + 1 != pd[a] || ext.entries[1][a][b] == 0)
        });
        if closed {
            out.push((0..k).filter(|&a| inside(a)).map(|a| vertices[a]).collect::<Vec<_>>());
        }
    }
    out.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GuichardetReport {
    pub gl_dim: Pd,
    pub segments: Vec<ComparisonReport>,
    pub is_guichardet: bool,
    /// every segment verdict is certified
    pub certified: bool,
    /// first segment that is not extension full
    pub failing_segment: Option<Vec<usize>>,
}

pub fn guichardet(algebra: &Arc<PathAlgebra>, cap: usize) -> Result<GuichardetReport> {
    let gl = global_dim(algebra, cap.max(crate::homology::default_cap(algebra)))?;
    if gl == Pd::Infinite {
        return Err(Error::InfiniteGlobalDimension);
    }
    let segments = initial_segments(algebra, cap.max(crate::homology::default_cap(algebra)))?
        .iter()
        .map(|s| extension_fullness(algebra, s, cap))
        .collect::<Result<Vec<_>>>()?;
    let failing_segment = segments
        .iter()
        .find(|r| r.verdict == Fullness::NotExtensionFull)
        .map(|r| r.simples.clone());
    let is_guichardet = segments.iter().all(|r| r.verdict == Fullness::ExtensionFull);
    let certified = segments.iter().all(|r| r.certified);
    Ok(GuichardetReport {
        gl_dim: gl,
        segments,
        is_guichardet,
        certified,
        failing_segment,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets::{sl2_principal, sl3_singular, sl3_singular_monomial};

    #[test]
    fn quotient_dimensions() {
        let a = Arc::new(sl2_principal());
        let s = serre_subcategory(&a, &[0]).unwrap();
        assert_eq!(s.quotient().dim(), 1);
        assert_eq!(s.quotient().simples(), vec![0]);
        assert_eq!(s.exponent(), 1);
        let b = Arc::new(sl3_singular());
        assert_eq!(serre_subcategory(&b, &[2]).unwrap().quotient().dim(), 1);
        assert_eq!(serre_subcategory(&b, &[0, 1, 2]).unwrap().quotient().dim(), 14);
        assert_eq!(serre_subcategory(&b, &[]).unwrap().quotient().dim(), 0);
    }

    #[test]
    fn segments() {
        let a = Arc::new(sl2_principal());
        assert_eq!(initial_segments(&a, 10).unwrap(), vec![vec![], vec![0], vec![0, 1]]);
        let b = Arc::new(sl3_singular());
        assert_eq!(
            initial_segments(&b, 10).unwrap(),
            vec![vec![], vec![0], vec![2], vec![0, 1], vec![0, 2], vec![0, 1, 2]]
        );
        let c = Arc::new(sl3_singular_monomial());
        assert!(initial_segments(&c, 10).unwrap().contains(&vec![0, 2]));
    }

    #[test]
    fn phi_on_l3() {
        let b = Arc::new(sl3_singular());
        let s = serre_subcategory(&b, &[2]).unwrap();
        let l3 = simple(s.quotient(), 2);
        let c = comparison_map(&s, &l3, &l3, 2).unwrap();
        assert_eq!((c.dim_sub, c.dim_ambient, c.rank), (0, 1, 0));
        assert!(!c.surjective);
        for d in 0..2 {
            assert!(comparison_map(&s, &l3, &l3, d).unwrap().is_iso());
        }
    }

    #[test]
    fn fullness_verdicts() {
        let a = Arc::new(sl2_principal());
        let r = extension_fullness(&a, &[0], 4).unwrap();
        assert_eq!(r.verdict, Fullness::ExtensionFull);
        assert!(r.certified);
        let c = Arc::new(sl3_singular_monomial());
        let r = extension_fullness(&c, &[0, 2], 4).unwrap();
        assert_eq!(r.verdict, Fullness::NotExtensionFull);
        assert_eq!(r.first_failure.unwrap().degree, 2);
    }

    #[test]
    fn guichardet_verdicts() {
        assert!(guichardet(&Arc::new(sl2_principal()), 4).unwrap().is_guichardet);
        let g = guichardet(&Arc::new(sl3_singular()), 4).unwrap();
        assert!(!g.is_guichardet);
        assert_eq!(g.failing_segment, Some(vec![2]));
        assert!(!guichardet(&Arc::new(sl3_singular_monomial()), 4).unwrap().is_guichardet);
    }
}
