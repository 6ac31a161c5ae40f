//! Finite-dimensional representations of a [`PathAlgebra`].
//!
//! A representation assigns a vector space `M_v` to each vertex and a matrix
//! `M_a : M_{s(a)} -> M_{t(a)}` to each arrow. Paths act covariantly: traversing `a` then `b`
//! acts by `M_b M_a`. The indecomposable projective at `v` is spanned by the normal-form paths
//! starting at `v`, with arrows acting by extending paths at their end.

use std::sync::Arc;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{complement_columns, q, HighPivotEchelon, Matrix, Q};
use crate::pathalg::{Path, PathAlgebra, PathCombination};

#[derive(Clone, Debug)]
pub struct Representation {
    algebra: Arc<PathAlgebra>,
    dims: Vec<usize>,
    action: Vec<Matrix>,
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        self.dims == other.dims && self.action == other.action
    }
}

impl Representation {
    /// Build and validate: arrow matrices must have the right shapes and every generator of the
    /// defining ideal must act by zero.
    pub fn new(algebra: Arc<PathAlgebra>, dims: Vec<usize>, action: Vec<Matrix>) -> Result<Self> {
        let rep = Self::new_unchecked(algebra, dims, action)?;
        for g in rep.algebra.ideal_generators() {
            if !rep.combination_matrix(&g).is_zero() {
                return Err(Error::InvalidRepresentation(
                    "a relation does not act by zero".into(),
                ));
            }
        }
        Ok(rep)
    }

    fn new_unchecked(algebra: Arc<PathAlgebra>, dims: Vec<usize>, action: Vec<Matrix>) -> Result<Self> {
        let quiver = algebra.quiver();
        if dims.len() != quiver.num_vertices() {
            return Err(Error::InvalidRepresentation(format!(
                "expected {} vertex dimensions, got {}",
                quiver.num_vertices(),
                dims.len()
            )));
        }
        if action.len() != quiver.num_arrows() {
            return Err(Error::InvalidRepresentation(format!(
                "expected {} arrow matrices, got {}",
                quiver.num_arrows(),
                action.len()
            )));
        }
        for (a, m) in quiver.arrows().iter().zip(&action) {
            if m.shape() != (dims[a.target], dims[a.source]) {
                return Err(Error::InvalidRepresentation(format!(
                    "arrow `{}` has shape {:?}, expected {:?}",
                    a.name,
                    m.shape(),
                    (dims[a.target], dims[a.source])
                )));
            }
        }
        Ok(Representation {
            algebra,
            dims,
            action,
        })
    }

    pub fn zero(algebra: Arc<PathAlgebra>) -> Self {
        let n = algebra.num_vertices();
        let action = algebra
            .quiver()
            .arrows()
            .iter()
            .map(|_| Matrix::zeros(0, 0))
            .collect();
        Representation {
            algebra,
            dims: vec![0; n],
            action,
        }
    }

    pub fn algebra(&self) -> &Arc<PathAlgebra> {
        &self.algebra
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn action(&self, arrow: usize) -> &Matrix {
        &self.action[arrow]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }

    /// Matrix by which a path acts, `M_{t(p)} x M_{s(p)}`.
    pub fn path_matrix(&self, p: &Path) -> Matrix {
        let mut m = Matrix::identity(self.dims[p.source]);
        for &a in &p.arrows {
            m = self.action[a].mul(&m);
        }
        m
    }

    pub fn combination_matrix(&self, c: &PathCombination) -> Matrix {
        let Some((_, first)) = c.terms.first() else {
            return Matrix::zeros(0, 0);
        };
        let mut acc = Matrix::zeros(self.dims[first.target], self.dims[first.source]);
        for (coef, p) in &c.terms {
            acc.add_scaled(&self.path_matrix(p), coef);
        }
        acc
    }

    /// The same data viewed over another algebra on the same quiver (e.g. restriction along a
    /// quotient map). Validated against the new algebra's relations.
    pub fn over(&self, algebra: Arc<PathAlgebra>) -> Result<Self> {
        if algebra.quiver() != self.algebra.quiver() {
            return Err(Error::InvalidArgument("algebras have different quivers".into()));
        }
        Representation::new(algebra, self.dims.clone(), self.action.clone())
    }
}

/// A morphism of representations: one matrix per vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleMap {
    blocks: Vec<Matrix>,
}

impl ModuleMap {
    pub fn new(blocks: Vec<Matrix>) -> Self {
        ModuleMap { blocks }
    }

    pub fn zero(source: &Representation, target: &Representation) -> Self {
        ModuleMap {
            blocks: source
                .dims
                .iter()
                .zip(&target.dims)
                .map(|(&s, &t)| Matrix::zeros(t, s))
                .collect(),
        }
    }

    pub fn identity(m: &Representation) -> Self {
        ModuleMap {
            blocks: m.dims.iter().map(|&d| Matrix::identity(d)).collect(),
        }
    }

    pub fn blocks(&self) -> &[Matrix] {
        &self.blocks
    }

    pub fn block(&self, v: usize) -> &Matrix {
        &self.blocks[v]
    }

    /// Checked construction: shapes match and every arrow square commutes.
    pub fn checked(blocks: Vec<Matrix>, source: &Representation, target: &Representation) -> Result<Self> {
        let f = ModuleMap { blocks };
        if f.blocks.len() != source.dims.len() {
            return Err(Error::InvalidMap("wrong number of vertex blocks".into()));
        }
        for (v, b) in f.blocks.iter().enumerate() {
            if b.shape() != (target.dims[v], source.dims[v]) {
                return Err(Error::InvalidMap(format!("block {v} has wrong shape")));
            }
        }
        if !f.is_homomorphism(source, target) {
            return Err(Error::InvalidMap("map does not intertwine the arrow actions".into()));
        }
        Ok(f)
    }

    pub fn is_homomorphism(&self, source: &Representation, target: &Representation) -> bool {
        source.algebra.quiver().arrows().iter().enumerate().all(|(k, a)| {
            target.action[k].mul(&self.blocks[a.source]) == self.blocks[a.target].mul(&source.action[k])
        })
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ModuleMap) -> ModuleMap {
        ModuleMap {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(f, g)| f.mul(g))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.blocks.iter().map(Matrix::rank).collect()
    }

    pub fn is_injective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.rows())
    }

    pub fn kernel(&self) -> Submodule {
        Submodule {
            basis: self.blocks.iter().map(Matrix::nullspace).collect(),
        }
    }

    pub fn image(&self) -> Submodule {
        Submodule {
            basis: self.blocks.iter().map(Matrix::column_basis).collect(),
        }
    }

    pub fn linear_combination(maps: &[ModuleMap], coeffs: &[Q]) -> ModuleMap {
        let mut blocks: Vec<Matrix> = maps[0]
            .blocks
            .iter()
            .map(|b| Matrix::zeros(b.rows(), b.cols()))
            .collect();
        for (m, c) in maps.iter().zip(coeffs) {
            for (acc, b) in blocks.iter_mut().zip(&m.blocks) {
                acc.add_scaled(b, c);
            }
        }
        ModuleMap { blocks }
    }
}

/// A subspace per vertex, given by basis columns in the ambient coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct Submodule {
    pub basis: Vec<Matrix>,
}

impl Submodule {
    pub fn dims(&self) -> Vec<usize> {
        self.basis.iter().map(Matrix::cols).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.iter().all(|b| b.cols() == 0)
    }

    pub fn whole(m: &Representation) -> Self {
        Submodule {
            basis: m.dims.iter().map(|&d| Matrix::identity(d)).collect(),
        }
    }

    pub fn zero(m: &Representation) -> Self {
        Submodule {
            basis: m.dims.iter().map(|&d| Matrix::zeros(d, 0)).collect(),
        }
    }
}

/// Span of arrow images of `sub` inside `ambient`: the radical of the submodule.
pub fn radical_of(ambient: &Representation, sub: &Submodule) -> Submodule {
    let quiver = ambient.algebra.quiver();
    let mut cols: Vec<Vec<Vec<Q>>> = vec![Vec::new(); ambient.dims.len()];
    for (k, a) in quiver.arrows().iter().enumerate() {
        let img = ambient.action[k].mul(&sub.basis[a.source]);
        cols[a.target].extend(img.columns());
    }
    Submodule {
        basis: cols
            .into_iter()
            .zip(&ambient.dims)
            .map(|(c, &d)| Matrix::from_columns(d, &c).column_basis())
            .collect(),
    }
}

/// Generators of `sub` modulo its radical: vectors whose images span the top of `sub`.
pub fn top_generators(ambient: &Representation, sub: &Submodule) -> Vec<(usize, Vec<Q>)> {
    let rad = radical_of(ambient, sub);
    let mut out = Vec::new();
    for (v, (r, s)) in rad.basis.iter().zip(&sub.basis).enumerate() {
        for c in complement_columns(r, s) {
            out.push((v, s.column(c)));
        }
    }
    out
}

/// Smallest submodule containing the given vectors.
pub fn generated_submodule(m: &Representation, gens: &[(usize, Vec<Q>)]) -> Submodule {
    let quiver = m.algebra.quiver();
    let mut echelons: Vec<HighPivotEchelon> = m.dims.iter().map(|&d| HighPivotEchelon::new(d)).collect();
    let mut accepted: Vec<Vec<Vec<Q>>> = vec![Vec::new(); m.dims.len()];
    let mut work: Vec<(usize, Vec<Q>)> = gens.to_vec();
    while let Some((v, x)) = work.pop() {
        if echelons[v].insert(x.clone()) {
            for (k, a) in quiver.arrows().iter().enumerate() {
                if a.source == v {
                    work.push((a.target, m.action[k].mul_vec(&x)));
                }
            }
            accepted[v].push(x);
        }
    }
    Submodule {
        basis: accepted
            .into_iter()
            .zip(&m.dims)
            .map(|(c, &d)| Matrix::from_columns(d, &c))
            .collect(),
    }
}

/// The representation on a submodule together with its inclusion.
pub fn submodule_rep(m: &Representation, sub: &Submodule) -> (Representation, ModuleMap) {
    let quiver = m.algebra.quiver();
    let action = quiver
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let img = m.action[k].mul(&sub.basis[a.source]);
            sub.basis[a.target]
                .solve_matrix(&img)
                .expect("subspace is closed under the arrow action")
        })
        .collect();
    let rep = Representation::new_unchecked(m.algebra.clone(), sub.dims(), action)
        .expect("shapes are consistent");
    (rep, ModuleMap::new(sub.basis.clone()))
}

/// The quotient representation `M / sub` together with the projection.
pub fn quotient_rep(m: &Representation, sub: &Submodule) -> (Representation, ModuleMap) {
    let quiver = m.algebra.quiver();
    let mut lifts = Vec::new();
    let mut projections = Vec::new();
    for (v, b) in sub.basis.iter().enumerate() {
        let d = m.dims[v];
        let ident = Matrix::identity(d);
        let comp = complement_columns(b, &ident);
        let c = ident.select_columns(&comp);
        let full = b.hcat(&c);
        let inv = full.solve_matrix(&Matrix::identity(d)).expect("full basis is invertible");
        let rows: Vec<usize> = (b.cols()..d).collect();
        projections.push(inv.select_rows(&rows));
        lifts.push(c);
    }
    let action = quiver
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| projections[a.target].mul(&m.action[k]).mul(&lifts[a.source]))
        .collect();
    let dims = lifts.iter().map(Matrix::cols).collect();
    let rep = Representation::new_unchecked(m.algebra.clone(), dims, action).expect("shapes");
    (rep, ModuleMap::new(projections))
}

pub struct DirectSum {
    pub module: Representation,
    pub inclusions: [ModuleMap; 2],
    pub projections: [ModuleMap; 2],
}

pub fn direct_sum(m: &Representation, n: &Representation) -> DirectSum {
    let quiver = m.algebra.quiver();
    let dims: Vec<usize> = m.dims.iter().zip(&n.dims).map(|(a, b)| a + b).collect();
    let action = quiver
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let mut x = Matrix::zeros(dims[a.target], dims[a.source]);
            x.set_block(0, 0, &m.action[k]);
            x.set_block(m.dims[a.target], m.dims[a.source], &n.action[k]);
            x
        })
        .collect();
    let module = Representation::new_unchecked(m.algebra.clone(), dims.clone(), action).expect("shapes");
    let mut inc = [Vec::new(), Vec::new()];
    let mut proj = [Vec::new(), Vec::new()];
    for v in 0..dims.len() {
        let (dm, dn) = (m.dims[v], n.dims[v]);
        let mut i1 = Matrix::zeros(dims[v], dm);
        i1.set_block(0, 0, &Matrix::identity(dm));
        let mut i2 = Matrix::zeros(dims[v], dn);
        i2.set_block(dm, 0, &Matrix::identity(dn));
        proj[0].push(i1.transpose());
        proj[1].push(i2.transpose());
        inc[0].push(i1);
        inc[1].push(i2);
    }
    let [i1, i2] = inc;
    let [p1, p2] = proj;
    DirectSum {
        module,
        inclusions: [ModuleMap::new(i1), ModuleMap::new(i2)],
        projections: [ModuleMap::new(p1), ModuleMap::new(p2)],
    }
}

/// The simple module at vertex `v`.
pub fn simple(algebra: &Arc<PathAlgebra>, v: usize) -> Representation {
    let mut dims = vec![0; algebra.num_vertices()];
    dims[v] = 1;
    let action = algebra
        .quiver()
        .arrows()
        .iter()
        .map(|a| Matrix::zeros(dims[a.target], dims[a.source]))
        .collect();
    Representation::new(algebra.clone(), dims, action).expect("simple modules satisfy every relation")
}

/// A direct sum of indecomposable projectives, one summand per generator, with the basis of
/// each summand indexed by normal-form paths.
#[derive(Clone, Debug)]
pub struct ProjectiveSum {
    generators: Vec<usize>,
    module: Representation,
    /// per vertex: (generator, algebra basis index) labelling each coordinate
    labels: Vec<Vec<(usize, usize)>>,
}

impl ProjectiveSum {
    pub fn new(algebra: &Arc<PathAlgebra>, generators: Vec<usize>) -> Self {
        let n = algebra.num_vertices();
        let mut labels: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (g, &v) in generators.iter().enumerate() {
            for (b, p) in algebra.basis().iter().enumerate() {
                if p.source == v {
                    labels[p.target].push((g, b));
                }
            }
        }
        let position = |w: usize, g: usize, b: usize| labels[w].iter().position(|&l| l == (g, b));
        let dims: Vec<usize> = labels.iter().map(Vec::len).collect();
        let quiver = algebra.quiver();
        let mut action = Vec::with_capacity(quiver.num_arrows());
        for (k, a) in quiver.arrows().iter().enumerate() {
            let mut m = Matrix::zeros(dims[a.target], dims[a.source]);
            let step = Path {
                source: a.source,
                target: a.target,
                arrows: vec![k],
            };
            for (col, &(g, b)) in labels[a.source].iter().enumerate() {
                for (j, c) in algebra.concat_reduce(&algebra.basis()[b], &step) {
                    let row = position(a.target, g, j).expect("normal form starts at the generator");
                    m[(row, col)] += c;
                }
            }
            action.push(m);
        }
        let module = Representation::new_unchecked(algebra.clone(), dims, action).expect("shapes");
        ProjectiveSum {
            generators,
            module,
            labels,
        }
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn module(&self) -> &Representation {
        &self.module
    }

    pub fn labels(&self, v: usize) -> &[(usize, usize)] {
        &self.labels[v]
    }

    /// Multiplicity of each indecomposable projective.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.module.dims.len()];
        for &v in &self.generators {
            m[v] += 1;
        }
        m
    }

    /// Coordinates of generator `g` (its trivial path) at its vertex.
    pub fn generator_vector(&self, g: usize) -> Vec<Q> {
        let v = self.generators[g];
        let alg = &self.module.algebra;
        let b = alg.basis_index(&Path::trivial(v)).expect("idempotent survives");
        let mut x = vec![Q::zero(); self.module.dims[v]];
        let pos = self.labels[v].iter().position(|&l| l == (g, b)).unwrap();
        x[pos] = Q::one();
        x
    }

    /// The module map sending generator `g` to `images[g]` (a vector of `target` at the
    /// generator's vertex).
    pub fn map_from_images(&self, target: &Representation, images: &[Vec<Q>]) -> ModuleMap {
        assert_eq!(images.len(), self.generators.len());
        let alg = &self.module.algebra;
        let blocks = self
            .labels
            .iter()
            .enumerate()
            .map(|(w, labels)| {
                let mut m = Matrix::zeros(target.dims[w], labels.len());
                for (col, &(g, b)) in labels.iter().enumerate() {
                    let x = target.path_matrix(&alg.basis()[b]).mul_vec(&images[g]);
                    for (r, val) in x.into_iter().enumerate() {
                        m[(r, col)] = val;
                    }
                }
                m
            })
            .collect();
        ModuleMap::new(blocks)
    }

    /// Size of `Hom(self, n)` in generator coordinates, `Σ_g dim n_{v_g}`.
    pub fn hom_dim(&self, n: &Representation) -> usize {
        self.generators.iter().map(|&v| n.dims[v]).sum()
    }

    /// Matrix of `Hom(self, N) -> Hom(S, N)`, `φ ↦ φ ∘ f`, where `S` is a sum of projectives with
    /// generators at `source_gens` and `f` sends generator `g` of `S` to `images[g]`
    /// (coordinates in `self` at that vertex). Both Hom spaces use generator coordinates.
    pub fn precompose_matrix(&self, source_gens: &[usize], images: &[Vec<Q>], n: &Representation) -> Matrix {
        let alg = &self.module.algebra;
        let col_off: Vec<usize> = offsets(self.generators.iter().map(|&v| n.dims[v]));
        let row_off: Vec<usize> = offsets(source_gens.iter().map(|&v| n.dims[v]));
        let rows = source_gens.iter().map(|&v| n.dims[v]).sum();
        let cols = self.hom_dim(n);
        let mut out = Matrix::zeros(rows, cols);
        for (g, (&v, x)) in source_gens.iter().zip(images).enumerate() {
            for (pos, c) in x.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (h, b) = self.labels[v][pos];
                let block = n.path_matrix(&alg.basis()[b]).scale(c);
                for r in 0..block.rows() {
                    for k in 0..block.cols() {
                        if !block[(r, k)].is_zero() {
                            out[(row_off[g] + r, col_off[h] + k)] += &block[(r, k)];
                        }
                    }
                }
            }
        }
        out
    }
}

fn offsets(sizes: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut acc = 0;
    sizes
        .map(|s| {
            let o = acc;
            acc += s;
            o
        })
        .collect()
}

/// The indecomposable projective at `v`: paths starting at `v`.
pub fn indecomposable_projective(algebra: &Arc<PathAlgebra>, v: usize) -> Representation {
    ProjectiveSum::new(algebra, vec![v]).module
}

pub fn radical(m: &Representation) -> (Representation, ModuleMap) {
    submodule_rep(m, &radical_of(m, &Submodule::whole(m)))
}

pub fn top(m: &Representation) -> (Representation, ModuleMap) {
    quotient_rep(m, &radical_of(m, &Submodule::whole(m)))
}

/// Socle: vectors killed by every arrow (sum of simple submodules).
pub fn socle(m: &Representation) -> (Representation, ModuleMap) {
    let quiver = m.algebra.quiver();
    let basis = (0..m.dims.len())
        .map(|v| {
            let outgoing: Vec<&Matrix> = quiver
                .arrows()
                .iter()
                .enumerate()
                .filter(|(_, a)| a.source == v)
                .map(|(k, _)| &m.action[k])
                .collect();
            let mut stacked = Matrix::zeros(0, m.dims[v]);
            for x in outgoing {
                stacked = stacked.vcat(x);
            }
            stacked.nullspace()
        })
        .collect();
    submodule_rep(m, &Submodule { basis })
}

/// Radical computed as the intersection of all maximal submodules, i.e. of the kernels of all
/// maps to simple modules. Slower than [`radical`]; exposed to audit it.
pub fn radical_by_maximal_submodules(m: &Representation) -> Submodule {
    let alg = m.algebra.clone();
    let mut stacks: Vec<Matrix> = m.dims.iter().map(|&d| Matrix::zeros(0, d)).collect();
    for v in alg.simples() {
        let l = simple(&alg, v);
        for f in hom_space(m, &l).basis {
            stacks[v] = stacks[v].vcat(f.block(v));
        }
    }
    Submodule {
        basis: stacks.iter().map(Matrix::nullspace).collect(),
    }
}

/// `rad^k M` as a submodule of `M`.
pub fn radical_power(m: &Representation, k: usize) -> Submodule {
    let mut sub = Submodule::whole(m);
    for _ in 0..k {
        sub = radical_of(m, &sub);
    }
    sub
}

/// Radical layers, top first; each layer is the multiplicity vector of the simples in it.
pub fn loewy_series(m: &Representation) -> Vec<Vec<usize>> {
    let mut layers = Vec::new();
    let mut cur = Submodule::whole(m);
    while !cur.is_zero() {
        let next = radical_of(m, &cur);
        layers.push(
            cur.dims()
                .iter()
                .zip(next.dims())
                .map(|(a, b)| a - b)
                .collect(),
        );
        cur = next;
    }
    layers
}

#[derive(Clone, Debug)]
pub struct HomSpace {
    pub dim: usize,
    pub basis: Vec<ModuleMap>,
}

/// Solve the intertwiner system `N_a f_{s(a)} = f_{t(a)} M_a` exactly.
pub fn hom_space(m: &Representation, n: &Representation) -> HomSpace {
    let quiver = m.algebra.quiver();
    let nv = m.dims.len();
    let mut off = vec![0; nv + 1];
    for v in 0..nv {
        off[v + 1] = off[v] + n.dims[v] * m.dims[v];
    }
    let unknowns = off[nv];
    let var = |v: usize, r: usize, c: usize| off[v] + r * m.dims[v] + c;
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for (k, a) in quiver.arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        for r in 0..n.dims[t] {
            for c in 0..m.dims[s] {
                let mut eq = vec![Q::zero(); unknowns];
                for x in 0..n.dims[s] {
                    let coef = &n.action[k][(r, x)];
                    if !coef.is_zero() {
                        eq[var(s, x, c)] += coef;
                    }
                }
                for x in 0..m.dims[t] {
                    let coef = &m.action[k][(x, c)];
                    if !coef.is_zero() {
                        eq[var(t, r, x)] -= coef;
                    }
                }
                if eq.iter().any(|e| !e.is_zero()) {
                    rows.push(eq);
                }
            }
        }
    }
    let sys = if rows.is_empty() {
        Matrix::zeros(0, unknowns)
    } else {
        Matrix::from_rows(rows)
    };
    let ns = sys.nullspace();
    let basis = (0..ns.cols())
        .map(|k| {
            let blocks = (0..nv)
                .map(|v| {
                    let mut b = Matrix::zeros(n.dims[v], m.dims[v]);
                    for r in 0..n.dims[v] {
                        for c in 0..m.dims[v] {
                            b[(r, c)] = ns[(var(v, r, c), k)].clone();
                        }
                    }
                    b
                })
                .collect();
            ModuleMap::new(blocks)
        })
        .collect();
    HomSpace {
        dim: ns.cols(),
        basis,
    }
}

#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    pub projective: ProjectiveSum,
    pub surjection: ModuleMap,
}

/// Projective cover: one summand `P_v` per basis vector of `top(M)` at `v`.
pub fn projective_cover(m: &Representation) -> Result<ProjectiveCover> {
    if m.is_zero() {
        return Err(Error::ZeroModule);
    }
    let gens = top_generators(m, &Submodule::whole(m));
    let projective = ProjectiveSum::new(m.algebra(), gens.iter().map(|(v, _)| *v).collect());
    let images: Vec<Vec<Q>> = gens.into_iter().map(|(_, x)| x).collect();
    let surjection = projective.map_from_images(m, &images);
    Ok(ProjectiveCover {
        projective,
        surjection,
    })
}

const ISO_TRIALS: usize = 6;
const ISO_SEED: u64 = 0x150_6e0;

/// An explicit isomorphism `M -> N`, if one is found.
///
/// A random rational combination of a Hom basis is invertible with high probability whenever
/// some element is (the determinant is a nonzero polynomial of degree `dim M`); sample points
/// are drawn from a range far larger than that degree. A returned map is always a verified
/// isomorphism.
pub fn find_isomorphism(m: &Representation, n: &Representation) -> Option<ModuleMap> {
    if m.dims != n.dims {
        return None;
    }
    if m.is_zero() {
        return Some(ModuleMap::identity(m));
    }
    let hom = hom_space(m, n);
    if hom.dim == 0 {
        return None;
    }
    // cheap necessary condition
    if hom_space(m, m).dim != hom.dim || hom_space(n, m).dim != hom.dim {
        return None;
    }
    let range = (1000 * m.total_dim()) as i64;
    let mut rng = ChaCha8Rng::seed_from_u64(ISO_SEED);
    for _ in 0..ISO_TRIALS {
        let coeffs: Vec<Q> = (0..hom.dim).map(|_| q(rng.gen_range(-range..=range))).collect();
        let f = ModuleMap::linear_combination(&hom.basis, &coeffs);
        if f.blocks.iter().all(|b| b.rank() == b.rows()) {
            return Some(f);
        }
    }
    None
}

pub fn is_isomorphic(m: &Representation, n: &Representation) -> bool {
    find_isomorphism(m, n).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets::{sl2_principal, sl3_singular, sl3_singular_monomial};

    #[test]
    fn projective_dimension_vectors() {
        let a = Arc::new(sl3_singular());
        let dims: Vec<Vec<usize>> = (0..3).map(|v| a.projective_dims(v)).collect();
        assert_eq!(dims, vec![vec![3, 2, 1], vec![2, 2, 1], vec![1, 1, 1]]);
        assert_eq!(a.dim(), 14);
        let b = Arc::new(sl2_principal());
        assert_eq!(indecomposable_projective(&b, 0).dims(), &[2, 1]);
        assert_eq!(indecomposable_projective(&b, 1).dims(), &[1, 1]);
    }

    #[test]
    fn loewy_layers_of_sl3_projectives() {
        let a = Arc::new(sl3_singular());
        let p2 = indecomposable_projective(&a, 1);
        assert_eq!(
            loewy_series(&p2),
            vec![vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]
        );
        let p3 = indecomposable_projective(&a, 2);
        assert_eq!(loewy_series(&p3), vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
        let l = simple(&a, 0);
        assert_eq!(loewy_series(&l).len(), 1);
    }

    #[test]
    fn radical_socle_top() {
        let a = Arc::new(sl3_singular());
        let p3 = indecomposable_projective(&a, 2);
        assert_eq!(radical(&p3).0.dims(), &[1, 1, 0]);
        for v in 0..3 {
            let p = indecomposable_projective(&a, v);
            let (t, _) = top(&p);
            assert!(is_isomorphic(&t, &simple(&a, v)));
            assert_eq!(radical_by_maximal_submodules(&p), radical_of(&p, &Submodule::whole(&p)));
        }
        let b = Arc::new(sl2_principal());
        let (soc, inc) = socle(&indecomposable_projective(&b, 0));
        assert!(is_isomorphic(&soc, &simple(&b, 0)));
        assert!(inc.is_homomorphism(&soc, &indecomposable_projective(&b, 0)));
    }

    #[test]
    fn hom_dimensions() {
        let a = Arc::new(sl3_singular());
        for i in 0..3 {
            let p = indecomposable_projective(&a, i);
            for j in 0..3 {
                assert_eq!(hom_space(&p, &simple(&a, j)).dim, usize::from(i == j));
            }
        }
        let p1 = indecomposable_projective(&a, 0);
        assert_eq!(hom_space(&p1, &p1).dim, 3);
        let b = Arc::new(sl2_principal());
        let hom = hom_space(&indecomposable_projective(&b, 1), &indecomposable_projective(&b, 0));
        assert_eq!(hom.dim, 1);
        for f in &hom.basis {
            assert!(f.is_homomorphism(&indecomposable_projective(&b, 1), &indecomposable_projective(&b, 0)));
        }
    }

    #[test]
    fn projective_covers() {
        let a = Arc::new(sl3_singular());
        let p3 = indecomposable_projective(&a, 2);
        let (rad, _) = radical(&p3);
        let cover = projective_cover(&rad).unwrap();
        assert_eq!(cover.projective.multiplicities(), vec![0, 1, 0]);
        assert!(cover.surjection.is_surjective());
        let m = Arc::new(sl3_singular_monomial());
        let (rad2, _) = radical(&indecomposable_projective(&m, 1));
        assert_eq!(projective_cover(&rad2).unwrap().projective.multiplicities(), vec![1, 0, 1]);
        assert_eq!(projective_cover(&Representation::zero(a.clone())).unwrap_err(), Error::ZeroModule);
    }

    #[test]
    fn isomorphism_tests() {
        let b = Arc::new(sl2_principal());
        let (rad, _) = radical(&indecomposable_projective(&b, 0));
        let p2 = indecomposable_projective(&b, 1);
        let f = find_isomorphism(&rad, &p2).expect("rad P1 is P2");
        assert!(f.is_homomorphism(&rad, &p2));
        assert!(!is_isomorphic(&simple(&b, 0), &simple(&b, 1)));
        assert!(is_isomorphic(&p2, &p2));
    }

    #[test]
    fn invalid_representation_is_rejected() {
        let b = Arc::new(sl2_principal());
        // 1-dim at each vertex, a and b both act by 1: b-then-a is nonzero
        let bad = Representation::new(
            b.clone(),
            vec![1, 1],
            vec![Matrix::identity(1), Matrix::identity(1)],
        );
        assert!(matches!(bad, Err(Error::InvalidRepresentation(_))));
        let shape = Representation::new(b, vec![1, 1], vec![Matrix::zeros(2, 1), Matrix::zeros(1, 1)]);
        assert!(shape.is_err());
    }
}
