//! Finite-dimensional quotients of path algebras.
//!
//! Paths are stored in traversal order (first arrow traversed first) independently of how
//! products are written. The [`Convention`] only governs how a written product `x*y` is read and
//! what [`PathAlgebra::multiply`] means.
//!
//! The relation ideal is saturated inside the span of paths of length `<= c` for increasing
//! `c`, closing under left and right multiplication by arrows and reducing against an echelon
//! basis that pivots on the largest path in (length, lex) order. The algebra is accepted once
//! some length `L <= c` has every path of that length as a pivot, i.e. reducible to shorter
//! normal forms.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{format_q, HighPivotEchelon, Q};

pub const DEFAULT_CAP: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// Build a quiver from vertex names and `(arrow, source, target)` triples.
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S, S)]) -> Result<Self> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(Error::MalformedQuiver(format!("duplicate vertex `{v}`")));
            }
        }
        let lookup = |name: &str| {
            vertices
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| Error::MalformedQuiver(format!("undeclared vertex `{name}`")))
        };
        let mut out = Vec::with_capacity(arrows.len());
        for (name, s, t) in arrows {
            let name = name.as_ref().to_string();
            if out.iter().any(|a: &Arrow| a.name == name) {
                return Err(Error::MalformedQuiver(format!("duplicate arrow `{name}`")));
            }
            out.push(Arrow {
                source: lookup(s.as_ref())?,
                target: lookup(t.as_ref())?,
                name,
            });
        }
        Ok(Quiver {
            vertices,
            arrows: out,
        })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Number of arrows `i -> j`, as a matrix indexed `[i][j]`.
    pub fn arrow_counts(&self) -> Vec<Vec<usize>> {
        let n = self.num_vertices();
        let mut m = vec![vec![0; n]; n];
        for a in &self.arrows {
            m[a.source][a.target] += 1;
        }
        m
    }

    /// Path from a sequence of arrows in traversal order.
    pub fn path(&self, arrows: &[usize]) -> Result<Path> {
        let Some(&first) = arrows.first() else {
            return Err(Error::MalformedRelation("empty arrow sequence".into()));
        };
        for w in arrows.windows(2) {
            let (x, y) = (&self.arrows[w[0]], &self.arrows[w[1]]);
            if x.target != y.source {
                return Err(Error::MalformedRelation(format!(
                    "arrows `{}` and `{}` are not composable",
                    x.name, y.name
                )));
            }
        }
        Ok(Path {
            source: self.arrows[first].source,
            target: self.arrows[*arrows.last().unwrap()].target,
            arrows: arrows.to_vec(),
        })
    }

    /// All paths of length at most `max_len`, sorted by [`Path`]'s order.
    pub fn paths_up_to(&self, max_len: usize) -> Vec<Path> {
        let mut all: Vec<Path> = (0..self.num_vertices()).map(Path::trivial).collect();
        let mut frontier = all.clone();
        for _ in 0..max_len {
            let mut next = Vec::new();
            for p in &frontier {
                for (k, a) in self.arrows.iter().enumerate() {
                    if a.source == p.target {
                        next.push(p.then_arrow(k, a.target));
                    }
                }
            }
            all.extend(next.iter().cloned());
            frontier = next;
        }
        all.sort();
        all
    }

    /// Render a path as a written product under the given convention.
    pub fn write_path(&self, p: &Path, convention: Convention) -> String {
        if p.arrows.is_empty() {
            return format!("e{}", self.vertices[p.source]);
        }
        let names: Vec<&str> = p.arrows.iter().map(|&a| self.arrows[a].name.as_str()).collect();
        match convention {
            Convention::RightToLeft => names.iter().rev().copied().collect::<Vec<_>>().join("*"),
            Convention::LeftToRight => names.join("*"),
        }
    }
}

/// A path in traversal order. Trivial paths carry their vertex in `source == target`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn then_arrow(&self, arrow: usize, target: usize) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.push(arrow);
        Path {
            source: self.source,
            target,
            arrows,
        }
    }

    /// `self` followed by `other`, if composable.
    pub fn then(&self, other: &Path) -> Option<Path> {
        if self.target != other.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path {
            source: self.source,
            target: other.target,
            arrows,
        })
    }

    fn split_at(&self, k: usize, quiver: &Quiver) -> (Path, Path) {
        debug_assert!(k > 0 && k < self.len());
        let mid = quiver.arrows[self.arrows[k - 1]].target;
        (
            Path {
                source: self.source,
                target: mid,
                arrows: self.arrows[..k].to_vec(),
            },
            Path {
                source: mid,
                target: self.target,
                arrows: self.arrows[k..].to_vec(),
            },
        )
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.arrows.len(), &self.arrows, self.source).cmp(&(
            other.arrows.len(),
            &other.arrows,
            other.source,
        ))
    }
}

/// How a written product `x*y` is read.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum Convention {
    /// `x*y` traverses `y` first, then `x`.
    #[default]
    RightToLeft,
    /// `x*y` traverses `x` first, then `y`.
    LeftToRight,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Convention::RightToLeft => write!(f, "right-to-left"),
            Convention::LeftToRight => write!(f, "left-to-right"),
        }
    }
}

/// A formal rational combination of parallel paths (an element of the path algebra `kQ`).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PathCombination {
    pub terms: Vec<(Q, Path)>,
}

impl PathCombination {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|(c, _)| c.is_zero())
    }

    fn endpoints(&self) -> Option<(usize, usize)> {
        self.terms.first().map(|(_, p)| (p.source, p.target))
    }
}

/// A relation `lhs = rhs` between combinations of parallel paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    lhs: PathCombination,
    rhs: PathCombination,
}

impl Relation {
    pub fn new(lhs: PathCombination, rhs: PathCombination) -> Result<Self> {
        let ends: Vec<(usize, usize)> = lhs
            .terms
            .iter()
            .chain(&rhs.terms)
            .map(|(_, p)| (p.source, p.target))
            .collect();
        if ends.is_empty() {
            return Err(Error::MalformedRelation("relation `0 = 0` is empty".into()));
        }
        if ends.iter().any(|e| *e != ends[0]) {
            return Err(Error::MalformedRelation(
                "terms do not share source and target".into(),
            ));
        }
        if lhs.terms.iter().chain(&rhs.terms).any(|(_, p)| p.is_empty()) {
            return Err(Error::MalformedRelation(
                "relation terms must have positive length".into(),
            ));
        }
        Ok(Relation { lhs, rhs })
    }

    /// Relation between written products of arrows, e.g. `a*b = d*c` as
    /// `from_words(q, &[(1, ["a","b"])], &[(1, ["d","c"])], conv)`.
    pub fn from_words(
        quiver: &Quiver,
        lhs: &[(Q, Vec<&str>)],
        rhs: &[(Q, Vec<&str>)],
        convention: Convention,
    ) -> Result<Self> {
        let side = |terms: &[(Q, Vec<&str>)]| -> Result<PathCombination> {
            let mut out = Vec::new();
            for (c, word) in terms {
                let mut idx = Vec::with_capacity(word.len());
                for w in word {
                    idx.push(quiver.arrow_index(w).ok_or_else(|| {
                        Error::MalformedRelation(format!("undeclared arrow `{w}`"))
                    })?);
                }
                if convention == Convention::RightToLeft {
                    idx.reverse();
                }
                out.push((c.clone(), quiver.path(&idx)?));
            }
            Ok(PathCombination { terms: out })
        };
        Relation::new(side(lhs)?, side(rhs)?)
    }

    pub fn lhs(&self) -> &PathCombination {
        &self.lhs
    }

    pub fn rhs(&self) -> &PathCombination {
        &self.rhs
    }

    /// `lhs - rhs` as a single combination.
    pub fn difference(&self) -> PathCombination {
        let mut terms = self.lhs.terms.clone();
        terms.extend(self.rhs.terms.iter().map(|(c, p)| (-c.clone(), p.clone())));
        PathCombination { terms }
    }

    pub fn endpoints(&self) -> (usize, usize) {
        self.lhs
            .endpoints()
            .or_else(|| self.rhs.endpoints())
            .expect("relation has at least one term")
    }

    pub fn write(&self, quiver: &Quiver, convention: Convention) -> String {
        format!(
            "{} = {}",
            write_combination(&self.lhs, quiver, convention),
            write_combination(&self.rhs, quiver, convention)
        )
    }
}

fn write_combination(c: &PathCombination, quiver: &Quiver, convention: Convention) -> String {
    if c.terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (coef, p)) in c.terms.iter().enumerate() {
        let word = quiver.write_path(p, convention);
        let neg = coef < &Q::zero();
        let abs = if neg { -coef.clone() } else { coef.clone() };
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !abs.is_one() {
            out.push_str(&format_q(&abs));
            out.push('*');
        }
        out.push_str(&word);
    }
    out
}

/// An element of a [`PathAlgebra`], as coordinates in its basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element(pub Vec<Q>);

impl Element {
    pub fn zero(dim: usize) -> Self {
        Element(vec![Q::zero(); dim])
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[i] = Q::one();
        v
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.0
    }

    fn axpy(&mut self, s: &Q, other: &[(usize, Q)]) {
        for (k, x) in other {
            self.0[*k] += s * x;
        }
    }
}

/// A finite-dimensional quotient `kQ / I` with a normal-form basis of paths.
#[derive(Clone, Debug)]
pub struct PathAlgebra {
    quiver: Arc<Quiver>,
    convention: Convention,
    relations: Vec<Relation>,
    /// Extra ideal generators (quotients by two-sided ideals of an existing algebra).
    extra_ideal: Vec<PathCombination>,
    basis: Vec<Path>,
    index: HashMap<Path, usize>,
    /// Normal form of every path of length `<= table_len`; absent paths reduce to zero.
    table: HashMap<Path, Vec<(usize, Q)>>,
    table_len: usize,
    /// Paths longer than `table_len` are reduced by splitting off a prefix of this length.
    split_len: usize,
    saturation_length: usize,
    mult: Vec<Vec<Vec<(usize, Q)>>>,
}

impl PathAlgebra {
    /// Saturate the relation ideal and build the normal-form basis and multiplication table.
    pub fn build(
        quiver: Quiver,
        relations: Vec<Relation>,
        convention: Convention,
        cap: usize,
    ) -> Result<Self> {
        if cap < 1 {
            return Err(Error::InvalidArgument("cap must be at least 1".into()));
        }
        let quiver = Arc::new(quiver);
        for r in &relations {
            for (_, p) in r.lhs.terms.iter().chain(&r.rhs.terms) {
                if p.arrows.iter().any(|&a| a >= quiver.num_arrows()) {
                    return Err(Error::MalformedRelation("unknown arrow index".into()));
                }
            }
        }
        let generators: Vec<PathCombination> = relations.iter().map(Relation::difference).collect();
        for c in 1..=cap {
            let paths = quiver.paths_up_to(c);
            let index: HashMap<Path, usize> =
                paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
            let echelon = saturate(&quiver, &paths, &index, &generators, c);
            let Some(sat) = (1..=c).find(|&len| {
                paths
                    .iter()
                    .enumerate()
                    .filter(|(_, p)| p.len() == len)
                    .all(|(i, _)| echelon.is_pivot(i))
            }) else {
                continue;
            };

            let basis_old: Vec<usize> = (0..paths.len()).filter(|&i| !echelon.is_pivot(i)).collect();
            let new_index: HashMap<usize, usize> =
                basis_old.iter().enumerate().map(|(k, &i)| (i, k)).collect();
            let mut table: HashMap<Path, Vec<(usize, Q)>> = HashMap::new();
            for &i in &basis_old {
                table.insert(paths[i].clone(), vec![(new_index[&i], Q::one())]);
            }
            for (p, row) in echelon.rows() {
                let nf: Vec<(usize, Q)> = row
                    .iter()
                    .filter(|(k, _)| k != p)
                    .map(|(k, x)| (new_index[k], -x.clone()))
                    .collect();
                if !nf.is_empty() {
                    table.insert(paths[*p].clone(), nf);
                }
            }
            let basis: Vec<Path> = basis_old.iter().map(|&i| paths[i].clone()).collect();
            return Ok(Self::assemble(
                quiver,
                convention,
                relations,
                Vec::new(),
                basis,
                table,
                c,
                sat,
            ));
        }
        Err(Error::NotFiniteDimensional { cap })
    }

    #[allow(clippy::too_many_arguments)]
    fn assemble(
        quiver: Arc<Quiver>,
        convention: Convention,
        relations: Vec<Relation>,
        extra_ideal: Vec<PathCombination>,
        basis: Vec<Path>,
        table: HashMap<Path, Vec<(usize, Q)>>,
        table_len: usize,
        split_len: usize,
    ) -> Self {
        let index: HashMap<Path, usize> =
            basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let saturation_length = (1..)
            .find(|&len| basis.iter().all(|p| p.len() != len))
            .expect("finite basis");
        let mut alg = PathAlgebra {
            quiver,
            convention,
            relations,
            extra_ideal,
            basis,
            index,
            table,
            table_len,
            split_len,
            saturation_length,
            mult: Vec::new(),
        };
        let n = alg.basis.len();
        let mut mult = vec![vec![Vec::new(); n]; n];
        for (i, row) in mult.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = alg.basis_product(i, j);
            }
        }
        alg.mult = mult;
        alg
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn quiver_arc(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn basis_index(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn saturation_length(&self) -> usize {
        self.saturation_length
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver.num_vertices()
    }

    /// Vertices whose idempotent is nonzero, i.e. the simple modules of the algebra.
    pub fn simples(&self) -> Vec<usize> {
        (0..self.num_vertices())
            .filter(|&v| self.index.contains_key(&Path::trivial(v)))
            .collect()
    }

    /// All generators of the defining ideal of `kQ`: relation differences and extra generators.
    pub fn ideal_generators(&self) -> Vec<PathCombination> {
        let mut out: Vec<PathCombination> = self.relations.iter().map(Relation::difference).collect();
        out.extend(self.extra_ideal.iter().cloned());
        out
    }

    /// Normal form of an arbitrary path, as sparse basis coordinates.
    pub fn reduce_path(&self, p: &Path) -> Vec<(usize, Q)> {
        if p.len() <= self.table_len {
            return self.table.get(p).cloned().unwrap_or_default();
        }
        let (prefix, suffix) = p.split_at(self.split_len, &self.quiver);
        let mut acc: HashMap<usize, Q> = HashMap::new();
        for (k, c) in self.reduce_path(&prefix) {
            let joined = self.basis[k].then(&suffix).expect("composable split");
            for (j, d) in self.reduce_path(&joined) {
                *acc.entry(j).or_insert_with(Q::zero) += &c * d;
            }
        }
        let mut out: Vec<(usize, Q)> = acc.into_iter().filter(|(_, x)| !x.is_zero()).collect();
        out.sort_by_key(|(k, _)| *k);
        out
    }

    pub fn reduce_combination(&self, c: &PathCombination) -> Element {
        let mut e = Element::zero(self.dim());
        for (coef, p) in &c.terms {
            e.axpy(coef, &self.reduce_path(p));
        }
        e
    }

    fn basis_product(&self, i: usize, j: usize) -> Vec<(usize, Q)> {
        let (x, y) = (&self.basis[i], &self.basis[j]);
        let joined = match self.convention {
            Convention::RightToLeft => y.then(x),
            Convention::LeftToRight => x.then(y),
        };
        joined.map(|p| self.reduce_path(&p)).unwrap_or_default()
    }

    /// Product of basis elements `b_i · b_j` in normal form.
    pub fn basis_mult(&self, i: usize, j: usize) -> &[(usize, Q)] {
        &self.mult[i][j]
    }

    /// Bilinear product `x · y` under the algebra's convention.
    pub fn multiply(&self, x: &Element, y: &Element) -> Element {
        let mut out = Element::zero(self.dim());
        for (i, a) in x.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.0.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out.axpy(&(a * b), &self.mult[i][j]);
            }
        }
        out
    }

    /// Traverse `path` first, then `after`, and reduce.
    pub fn concat_reduce(&self, path: &Path, after: &Path) -> Vec<(usize, Q)> {
        path.then(after).map(|p| self.reduce_path(&p)).unwrap_or_default()
    }

    pub fn idempotent(&self, v: usize) -> Element {
        match self.index.get(&Path::trivial(v)) {
            Some(&i) => Element::basis(self.dim(), i),
            None => Element::zero(self.dim()),
        }
    }

    pub fn element_of_path(&self, p: &Path) -> Element {
        let mut e = Element::zero(self.dim());
        e.axpy(&Q::one(), &self.reduce_path(p));
        e
    }

    /// Element given by a written product of arrow names, read under the algebra's convention.
    pub fn element_of_word(&self, word: &[&str]) -> Result<Element> {
        let mut idx = Vec::new();
        for w in word {
            idx.push(self.quiver.arrow_index(w).ok_or_else(|| {
                Error::InvalidArgument(format!("undeclared arrow `{w}`"))
            })?);
        }
        if self.convention == Convention::RightToLeft {
            idx.reverse();
        }
        match self.quiver.path(&idx) {
            Ok(p) => Ok(self.element_of_path(&p)),
            // non-composable words are zero in the algebra
            Err(_) => Ok(Element::zero(self.dim())),
        }
    }

    /// Basis indices of paths from `source` to `target`.
    pub fn paths_between(&self, source: usize, target: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| self.basis[i].source == source && self.basis[i].target == target)
            .collect()
    }

    /// Dimension vector of the indecomposable projective at `v` (paths starting at `v`).
    pub fn projective_dims(&self, v: usize) -> Vec<usize> {
        let mut dims = vec![0; self.num_vertices()];
        for p in &self.basis {
            if p.source == v {
                dims[p.target] += 1;
            }
        }
        dims
    }

    /// Exhaustive associativity check on all basis triples.
    pub fn check_associativity(&self) -> bool {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ij = self.multiply(&Element::basis(n, i), &Element::basis(n, j));
                for k in 0..n {
                    let bk = Element::basis(n, k);
                    let jk = self.multiply(&Element::basis(n, j), &bk);
                    if self.multiply(&ij, &bk) != self.multiply(&Element::basis(n, i), &jk) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Two-sided ideal generated by `generators`, as a reduced echelon basis.
    pub fn two_sided_ideal(&self, generators: &[Element]) -> HighPivotEchelon {
        let n = self.dim();
        let mut echelon = HighPivotEchelon::new(n);
        let mut work: Vec<Element> = generators.to_vec();
        let units: Vec<Element> = (0..n)
            .filter(|&i| self.basis[i].len() <= 1)
            .map(|i| Element::basis(n, i))
            .collect();
        while let Some(x) = work.pop() {
            if echelon.insert(x.0.clone()) {
                for u in &units {
                    work.push(self.multiply(u, &x));
                    work.push(self.multiply(&x, u));
                }
            }
        }
        echelon
    }

    /// Quotient by the two-sided ideal generated by `generators`.
    pub fn quotient(&self, generators: &[Element]) -> PathAlgebra {
        let ideal = self.two_sided_ideal(generators);
        let n = self.dim();
        let keep: Vec<usize> = (0..n).filter(|&i| !ideal.is_pivot(i)).collect();
        let new_index: HashMap<usize, usize> =
            keep.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let mut table = HashMap::new();
        for (p, nf) in &self.table {
            let mut v = vec![Q::zero(); n];
            for (k, x) in nf {
                v[*k] = x.clone();
            }
            ideal.reduce(&mut v);
            let sparse: Vec<(usize, Q)> = v
                .into_iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(k, x)| (new_index[&k], x))
                .collect();
            if !sparse.is_empty() {
                table.insert(p.clone(), sparse);
            }
        }
        let mut extra = self.extra_ideal.clone();
        for v in ideal.basis_vectors() {
            extra.push(PathCombination {
                terms: v
                    .into_iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(k, x)| (x, self.basis[k].clone()))
                    .collect(),
            });
        }
        let basis = keep.iter().map(|&i| self.basis[i].clone()).collect();
        PathAlgebra::assemble(
            self.quiver.clone(),
            self.convention,
            self.relations.clone(),
            extra,
            basis,
            table,
            self.table_len,
            self.split_len,
        )
    }

    pub fn write_path(&self, p: &Path) -> String {
        self.quiver.write_path(p, self.convention)
    }

    /// Text description in the algebra file format.
    pub fn description(&self) -> String {
        let mut s = String::new();
        s.push_str("vertices: ");
        s.push_str(&self.quiver.vertices().join(" "));
        s.push('\n');
        for a in self.quiver.arrows() {
            s.push_str(&format!(
                "arrow {}: {} -> {}\n",
                a.name,
                self.quiver.vertices()[a.source],
                self.quiver.vertices()[a.target]
            ));
        }
        for r in &self.relations {
            s.push_str(&format!("relation: {}\n", r.write(&self.quiver, self.convention)));
        }
        s.push_str(&format!("composition: {}\n", self.convention));
        s
    }
}

/// Closure of the generators' span under left/right multiplication by arrows in the span of
/// paths of length `<= c` (longer terms are dropped).
fn saturate(
    quiver: &Quiver,
    paths: &[Path],
    index: &HashMap<Path, usize>,
    generators: &[PathCombination],
    c: usize,
) -> HighPivotEchelon {
    let n = paths.len();
    let mut echelon = HighPivotEchelon::new(n);
    let to_vec = |terms: &[(Q, Path)]| -> Vec<Q> {
        let mut v = vec![Q::zero(); n];
        for (coef, p) in terms {
            if let Some(&i) = index.get(p) {
                v[i] += coef;
            }
        }
        v
    };
    let mut work: Vec<Vec<Q>> = generators.iter().map(|g| to_vec(&g.terms)).collect();
    while let Some(v) = work.pop() {
        if !echelon.insert(v.clone()) {
            continue;
        }
        for (k, a) in quiver.arrows().iter().enumerate() {
            let mut after = Vec::new();
            let mut before = Vec::new();
            for (i, coef) in v.iter().enumerate() {
                if coef.is_zero() || paths[i].len() >= c {
                    continue;
                }
                let p = &paths[i];
                if p.target == a.source {
                    after.push((coef.clone(), p.then_arrow(k, a.target)));
                }
                if a.target == p.source {
                    let mut arrows = vec![k];
                    arrows.extend_from_slice(&p.arrows);
                    before.push((
                        coef.clone(),
                        Path {
                            source: a.source,
                            target: p.target,
                            arrows,
                        },
                    ));
                }
            }
            for side in [after, before] {
                if !side.is_empty() {
                    work.push(to_vec(&side));
                }
            }
        }
    }
    echelon
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    fn sl2() -> PathAlgebra {
        let quiver = Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]).unwrap();
        let rel = Relation::from_words(
            &quiver,
            &[(q(1), vec!["a", "b"])],
            &[],
            Convention::RightToLeft,
        )
        .unwrap();
        PathAlgebra::build(quiver, vec![rel], Convention::RightToLeft, DEFAULT_CAP).unwrap()
    }

    /// Brute-force oracle: enumerate paths, mark those containing the monomial `b then a` as
    /// zero; for a monomial relation the normal forms are exactly the surviving paths.
    #[test]
    fn sl2_dimension_matches_enumeration() {
        let alg = sl2();
        let quiver = alg.quiver();
        let b_then_a = vec![1usize, 0usize];
        let surviving = quiver
            .paths_up_to(6)
            .into_iter()
            .filter(|p| !p.arrows.windows(2).any(|w| w == b_then_a.as_slice()))
            .count();
        assert_eq!(surviving, 5);
        assert_eq!(alg.dim(), 5);
        assert_eq!(alg.saturation_length(), 3);
        assert!(alg.check_associativity());
    }

    #[test]
    fn idempotents_are_orthogonal_and_sum_to_one() {
        let alg = sl2();
        let (e1, e2) = (alg.idempotent(0), alg.idempotent(1));
        assert_eq!(alg.multiply(&e1, &e1), e1);
        assert!(alg.multiply(&e1, &e2).is_zero());
        let one = Element(e1.0.iter().zip(&e2.0).map(|(a, b)| a + b).collect());
        for i in 0..alg.dim() {
            let b = Element::basis(alg.dim(), i);
            assert_eq!(alg.multiply(&one, &b), b);
            assert_eq!(alg.multiply(&b, &one), b);
        }
    }

    #[test]
    fn relation_product_vanishes() {
        let alg = sl2();
        let a = alg.element_of_word(&["a"]).unwrap();
        let b = alg.element_of_word(&["b"]).unwrap();
        assert!(alg.multiply(&a, &b).is_zero());
        assert!(!alg.multiply(&b, &a).is_zero());
    }

    #[test]
    fn no_arrow_quiver_is_semisimple() {
        let quiver = Quiver::new(&["x", "y", "z"], &[]).unwrap();
        let alg = PathAlgebra::build(quiver, vec![], Convention::RightToLeft, 1).unwrap();
        assert_eq!(alg.dim(), 3);
        assert_eq!(alg.saturation_length(), 1);
    }

    #[test]
    fn free_loop_is_not_finite_dimensional() {
        let quiver = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
        let err = PathAlgebra::build(quiver, vec![], Convention::RightToLeft, 6).unwrap_err();
        assert_eq!(err, Error::NotFiniteDimensional { cap: 6 });
    }

    #[test]
    fn malformed_relations_are_rejected() {
        let quiver = Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]).unwrap();
        // a then a is not composable
        assert!(matches!(
            Relation::from_words(&quiver, &[(q(1), vec!["a", "a"])], &[], Convention::RightToLeft),
            Err(Error::MalformedRelation(_))
        ));
        // a*b is a loop at 2, b*a a loop at 1
        assert!(matches!(
            Relation::from_words(
                &quiver,
                &[(q(1), vec!["a", "b"])],
                &[(q(1), vec!["b", "a"])],
                Convention::RightToLeft
            ),
            Err(Error::MalformedRelation(_))
        ));
        assert!(Quiver::new(&["1", "1"], &[]).is_err());
        assert!(Quiver::new(&["1"], &[("a", "1", "9")]).is_err());
    }

    #[test]
    fn larger_cap_gives_same_basis() {
        let a = sl2();
        let quiver = a.quiver().clone();
        let rel = a.relations().to_vec();
        let b = PathAlgebra::build(quiver, rel, Convention::RightToLeft, 40).unwrap();
        assert_eq!(a.basis(), b.basis());
    }

    #[test]
    fn inhomogeneous_relation_reduces_long_paths() {
        // loop x with x^3 = x^2 ... together with x^2 = 0 forces x^2 = 0 only
        let quiver = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
        let r1 = Relation::from_words(
            &quiver,
            &[(q(1), vec!["x", "x", "x"])],
            &[(q(2), vec!["x", "x"])],
            Convention::RightToLeft,
        )
        .unwrap();
        let r2 = Relation::from_words(&quiver, &[(q(1), vec!["x", "x", "x"])], &[], Convention::RightToLeft)
            .unwrap();
        let alg = PathAlgebra::build(quiver, vec![r1, r2], Convention::RightToLeft, 8).unwrap();
        assert_eq!(alg.dim(), 2);
        assert!(alg.check_associativity());
    }
}
