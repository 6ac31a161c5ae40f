//! Small finite Weyl groups: lengths, Bruhat order, coideals, the a-function, and closed-form
//! homological predictions checked against the quiver engine.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homology::{global_dim, proj_dim_with_cap, Pd};
use crate::pathalg::PathAlgebra;
use crate::presets::CoxeterAnnotation;
use crate::repcat::simple;
use crate::serre::initial_segments;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WeylType {
    /// `A_n`, `1 <= n <= 5`, as permutations of `n + 1` letters
    A(usize),
    A1xA1,
    B2,
    G2,
}

impl WeylType {
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_uppercase().replace(['_', ' '], "");
        match t.as_str() {
            "A1XA1" | "A1A1" | "A1*A1" => Ok(WeylType::A1xA1),
            "B2" | "C2" => Ok(WeylType::B2),
            "G2" => Ok(WeylType::G2),
            _ => match t.strip_prefix('A').and_then(|n| n.parse::<usize>().ok()) {
                Some(n) if (1..=5).contains(&n) => Ok(WeylType::A(n)),
                _ => Err(Error::UnsupportedType(s.to_string())),
            },
        }
    }

    pub fn rank(self) -> usize {
        match self {
            WeylType::A(n) => n,
            _ => 2,
        }
    }

    /// `(dim g, dim h)` of the complex semisimple Lie algebra of this type.
    pub fn lie_dims(self) -> (usize, usize) {
        match self {
            WeylType::A(n) => (n * n + 2 * n, n),
            WeylType::A1xA1 => (6, 2),
            WeylType::B2 => (10, 2),
            WeylType::G2 => (14, 2),
        }
    }

    fn dihedral_order(self) -> Option<usize> {
        match self {
            WeylType::A1xA1 => Some(2),
            WeylType::B2 => Some(4),
            WeylType::G2 => Some(6),
            WeylType::A(_) => None,
        }
    }
}

impl fmt::Display for WeylType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeylType::A(n) => write!(f, "A{n}"),
            WeylType::A1xA1 => write!(f, "A1xA1"),
            WeylType::B2 => write!(f, "B2"),
            WeylType::G2 => write!(f, "G2"),
        }
    }
}

/// Raw element data: one-line permutation (type A) or `[k, r]` for `rot^k ref^r` (dihedral).
type Raw = Vec<usize>;

#[derive(Clone, Debug)]
pub struct CoxeterGroup {
    weyl_type: WeylType,
    elements: Vec<Raw>,
    lengths: Vec<usize>,
    words: Vec<Vec<usize>>,
    /// `right[w][s] = w·s`
    right: Vec<Vec<usize>>,
    longest: usize,
    bruhat: Vec<Vec<bool>>,
}

fn generator(t: WeylType, s: usize) -> Raw {
    match t {
        WeylType::A(n) => {
            let mut p: Raw = (0..=n).collect();
            p.swap(s, s + 1);
            p
        }
        _ => vec![s, 1],
    }
}

fn raw_mul(t: WeylType, x: &Raw, y: &Raw) -> Raw {
    match t.dihedral_order() {
        None => y.iter().map(|&i| x[i]).collect(),
        Some(m) => {
            let k = if x[1] == 1 { x[0] + m - y[0] } else { x[0] + y[0] };
            vec![k % m, x[1] ^ y[1]]
        }
    }
}

pub fn build_weyl_group(t: WeylType) -> Result<CoxeterGroup> {
    if let WeylType::A(n) = t {
        if !(1..=5).contains(&n) {
            return Err(Error::UnsupportedType(t.to_string()));
        }
    }
    let rank = t.rank();
    let gens: Vec<Raw> = (0..rank).map(|s| generator(t, s)).collect();
    let identity: Raw = match t {
        WeylType::A(n) => (0..=n).collect(),
        _ => vec![0, 0],
    };
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<Raw, usize> = HashMap::from([(identity, 0)]);
    let mut lengths = vec![0];
    let mut words: Vec<Vec<usize>> = vec![vec![]];
    let mut right: Vec<Vec<usize>> = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(w) = queue.pop_front() {
        let mut row = Vec::with_capacity(rank);
        for (s, g) in gens.iter().enumerate() {
            let x = raw_mul(t, &elements[w], g);
            let j = match index.get(&x) {
                Some(&j) => j,
                None => {
                    let j = elements.len();
                    index.insert(x.clone(), j);
                    elements.push(x);
                    lengths.push(lengths[w] + 1);
                    let mut word = words[w].clone();
                    word.push(s);
                    words.push(word);
                    queue.push_back(j);
                    j
                }
            };
            row.push(j);
        }
        right.push(row);
    }
    let longest = (0..elements.len()).max_by_key(|&i| lengths[i]).unwrap();
    let mut g = CoxeterGroup {
        weyl_type: t,
        elements,
        lengths,
        words,
        right,
        longest,
        bruhat: Vec::new(),
    };
    let n = g.order();
    g.bruhat = (0..n)
        .map(|u| {
            (0..n)
                .map(|w| match t {
                    WeylType::A(_) => g.rank_matrix_leq(u, w),
                    _ => g.subword_leq(u, w),
                })
                .collect()
        })
        .collect();
    Ok(g)
}

impl CoxeterGroup {
    pub fn weyl_type(&self) -> WeylType {
        self.weyl_type
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn rank(&self) -> usize {
        self.weyl_type.rank()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn longest(&self) -> usize {
        self.longest
    }

    pub fn length(&self, w: usize) -> usize {
        self.lengths[w]
    }

    pub fn reduced_word(&self, w: usize) -> &[usize] {
        &self.words[w]
    }

    pub fn num_positive_roots(&self) -> usize {
        self.lengths[self.longest]
    }

    pub fn lie_dims(&self) -> (usize, usize) {
        self.weyl_type.lie_dims()
    }

    /// Generator `s_{i+1}` as an element index.
    pub fn simple_reflection(&self, i: usize) -> usize {
        self.right[0][i]
    }

    pub fn multiply(&self, x: usize, y: usize) -> usize {
        self.words[y].iter().fold(x, |acc, &s| self.right[acc][s])
    }

    pub fn inverse(&self, w: usize) -> usize {
        self.words[w].iter().rev().fold(0, |acc, &s| self.right[acc][s])
    }

    pub fn bruhat_leq(&self, u: usize, w: usize) -> bool {
        self.bruhat[u][w]
    }

    /// Element as a word `s1s2…`, or `e`.
    pub fn name(&self, w: usize) -> String {
        if w == 0 {
            return "e".into();
        }
        self.words[w].iter().map(|s| format!("s{}", s + 1)).collect()
    }

    /// Parse `e`, `w0`, or a product of generators such as `s1s2` or `s1 s2`.
    pub fn parse_element(&self, s: &str) -> Result<usize> {
        let t = s.trim();
        match t {
            "e" | "" | "1" => return Ok(0),
            "w0" => return Ok(self.longest),
            _ => {}
        }
        let mut w = 0;
        for part in t.split(|c: char| c == 's' || c == '*' || c.is_whitespace()).filter(|p| !p.is_empty()) {
            let i: usize = part
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad group element `{s}`")))?;
            if i == 0 || i > self.rank() {
                return Err(Error::InvalidArgument(format!("no generator s{i} in {}", self.weyl_type)));
            }
            w = self.right[w][i - 1];
        }
        Ok(w)
    }

    /// `u <= w` iff for all `i, j`: `#{a <= i : u(a) >= j} <= #{a <= i : w(a) >= j}`.
    fn rank_matrix_leq(&self, u: usize, w: usize) -> bool {
        let (pu, pw) = (&self.elements[u], &self.elements[w]);
        let n = pu.len();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let cu = pu[..=i].iter().filter(|&&x| x >= j).count();
                let cw = pw[..=i].iter().filter(|&&x| x >= j).count();
                cu <= cw
            })
        })
    }

    /// `u <= w` iff `u` is the product of a subword of a reduced word of `w`.
    pub fn subword_leq(&self, u: usize, w: usize) -> bool {
        let word = &self.words[w];
        let mut reachable = vec![false; self.order()];
        reachable[0] = true;
        for &s in word {
            let current: Vec<usize> = (0..self.order()).filter(|&x| reachable[x]).collect();
            for x in current {
                reachable[self.right[x][s]] = true;
            }
        }
        reachable[u]
    }

    /// Longest element of the parabolic subgroup generated by `j` (0-based generator indices).
    pub fn parabolic_longest(&self, j: &[usize]) -> Result<usize> {
        if let Some(&s) = j.iter().find(|&&s| s >= self.rank()) {
            return Err(Error::InvalidArgument(format!("no generator s{} in {}", s + 1, self.weyl_type)));
        }
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        let mut best = 0;
        while let Some(w) = queue.pop_front() {
            if self.lengths[w] > self.lengths[best] {
                best = w;
            }
            for &s in j {
                let x = self.right[w][s];
                if !seen[x] {
                    seen[x] = true;
                    queue.push_back(x);
                }
            }
        }
        Ok(best)
    }

    /// Lusztig's a-function.
    pub fn a_function(&self, w: usize) -> usize {
        match self.weyl_type.dihedral_order() {
            Some(m) => {
                if w == 0 {
                    0
                } else if w == self.longest {
                    m
                } else {
                    1
                }
            }
            None => {
                let shape = rsk_shape(&self.elements[w]);
                shape.iter().enumerate().map(|(i, &l)| i * l).sum()
            }
        }
    }

    /// All Bruhat coideals (up-closed subsets), as sorted element lists.
    pub fn coideals(&self) -> Result<Vec<Vec<usize>>> {
        const MAX_ORDER: usize = 24;
        if self.order() > MAX_ORDER {
            return Err(Error::InvalidArgument(format!(
                "coideal enumeration is limited to groups of order at most {MAX_ORDER}"
            )));
        }
        let n = self.order();
        let mut out = Vec::new();
        // coideals are in bijection with antichains (their minimal elements)
        let mut stack: Vec<(usize, Vec<usize>)> = vec![(0, vec![])];
        while let Some((start, anti)) = stack.pop() {
            let up: Vec<usize> = (0..n)
                .filter(|&w| anti.iter().any(|&a| self.bruhat[a][w]))
                .collect();
            out.push(up);
            for x in start..n {
                if anti.iter().all(|&a| !self.bruhat[a][x] && !self.bruhat[x][a]) {
                    let mut next = anti.clone();
                    next.push(x);
                    stack.push((x + 1, next));
                }
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    /// `(a(w0·w0^J), 2a, 2a)`: pd of the simple Verma module, global dimension of the block, and
    /// pd of the dominant simple, for the singular block with stabilizer `⟨J⟩`.
    pub fn thm777_eval(&self, j: &[usize]) -> Result<(usize, usize, usize)> {
        let w0j = self.parabolic_longest(j)?;
        let a = self.a_function(self.multiply(self.longest, w0j));
        Ok((a, 2 * a, 2 * a))
    }

    /// pd of the simple `L(w·0)` in the regular block: `2 l(w0) - l(w)`.
    pub fn regular_pd_simple(&self, w: usize) -> usize {
        2 * self.lengths[self.longest] - self.lengths[w]
    }

    pub fn oinf_formulas(&self, w: usize, base_pd: Option<usize>) -> OinfFormulas {
        let (g, h) = self.lie_dims();
        OinfFormulas {
            pd_simple: g - self.lengths[w],
            pd_verma: h + self.lengths[w],
            shifted_pd: base_pd.map(|p| h + p),
            gl_dim: g,
            min_pd: h,
        }
    }
}

/// Row lengths of the Robinson–Schensted insertion tableau of a one-line permutation.
pub fn rsk_shape(perm: &[usize]) -> Vec<usize> {
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for &x in perm {
        let mut x = x;
        let mut r = 0;
        loop {
            if r == rows.len() {
                rows.push(vec![x]);
                break;
            }
            match rows[r].iter().position(|&y| y > x) {
                Some(p) => {
                    x = std::mem::replace(&mut rows[r][p], x);
                    r += 1;
                }
                None => {
                    rows[r].push(x);
                    break;
                }
            }
        }
    }
    rows.iter().map(Vec::len).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OinfFormulas {
    /// `dim g - l(w)`
    pub pd_simple: usize,
    /// `dim h + l(w)`
    pub pd_verma: usize,
    /// `dim h + base_pd`
    pub shifted_pd: Option<usize>,
    /// `dim g`
    pub gl_dim: usize,
    /// `dim h`
    pub min_pd: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossValidation {
    pub weyl_type: String,
    pub parabolic: Vec<usize>,
    pub predicted: (usize, usize, usize),
    /// pd of the simple Verma vertex, gl.dim, pd of each dominant candidate
    pub computed_simple_verma: Pd,
    pub computed_gl_dim: Pd,
    pub computed_dominant: Vec<(usize, Pd)>,
    pub matches: bool,
}

/// Compare the closed-form prediction with the engine on an annotated algebra.
pub fn cross_validate(algebra: &Arc<PathAlgebra>, ann: &CoxeterAnnotation, cap: usize) -> Result<CrossValidation> {
    let w = build_weyl_group(WeylType::parse(&ann.weyl_type)?)?;
    let predicted = w.thm777_eval(&ann.parabolic)?;
    let pd = |v: usize| proj_dim_with_cap(&simple(algebra, v), cap);
    let sv = pd(ann.simple_verma)?;
    let gl = global_dim(algebra, cap)?;
    let dom = ann
        .dominant_candidates
        .iter()
        .map(|&v| Ok((v, pd(v)?)))
        .collect::<Result<Vec<_>>>()?;
    let matches = sv == Pd::Finite(predicted.0)
        && gl == Pd::Finite(predicted.1)
        && dom.iter().all(|(_, p)| *p == Pd::Finite(predicted.2));
    Ok(CrossValidation {
        weyl_type: w.weyl_type().to_string(),
        parabolic: ann.parabolic.clone(),
        predicted,
        computed_simple_verma: sv,
        computed_gl_dim: gl,
        computed_dominant: dom,
        matches,
    })
}

/// Coideals of `W` pushed to vertex sets against the initial segments of a regular block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegmentCorrespondence {
    pub coideal_images: Vec<Vec<usize>>,
    pub initial_segments: Vec<Vec<usize>>,
    /// `(element name, 2 l(w0) - l(w), computed pd)`
    pub pd_checks: Vec<(String, usize, Pd)>,
    pub bijective: bool,
}

pub fn segment_correspondence(
    algebra: &Arc<PathAlgebra>,
    group: &CoxeterGroup,
    element_vertices: &[usize],
    cap: usize,
) -> Result<SegmentCorrespondence> {
    if element_vertices.len() != group.order() {
        return Err(Error::InvalidArgument("one vertex per group element is required".into()));
    }
    let mut images: Vec<Vec<usize>> = group
        .coideals()?
        .into_iter()
        .map(|c| {
            let mut v: Vec<usize> = c.iter().map(|&w| element_vertices[w]).collect();
            v.sort_unstable();
            v
        })
        .collect();
    images.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let segments = initial_segments(algebra, cap)?;
    let mut pd_checks = Vec::new();
    for w in 0..group.order() {
        let computed = proj_dim_with_cap(&simple(algebra, element_vertices[w]), cap)?;
        pd_checks.push((group.name(w), group.regular_pd_simple(w), computed));
    }
    let mut dedup = images.clone();
    dedup.dedup();
    let bijective = dedup.len() == images.len() && images == segments;
    Ok(SegmentCorrespondence {
        coideal_images: images,
        initial_segments: segments,
        pd_checks,
        bijective,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_longest() {
        for (t, order, l) in [
            (WeylType::A(1), 2, 1),
            (WeylType::A(2), 6, 3),
            (WeylType::A(3), 24, 6),
            (WeylType::B2, 8, 4),
            (WeylType::G2, 12, 6),
            (WeylType::A1xA1, 4, 2),
        ] {
            let w = build_weyl_group(t).unwrap();
            assert_eq!((w.order(), w.num_positive_roots()), (order, l), "{t}");
        }
        assert!(build_weyl_group(WeylType::A(6)).is_err());
        assert!(WeylType::parse("E8").is_err());
    }

    #[test]
    fn bruhat_criteria_agree() {
        for n in 1..=3 {
            let w = build_weyl_group(WeylType::A(n)).unwrap();
            for u in 0..w.order() {
                for v in 0..w.order() {
                    assert_eq!(w.bruhat_leq(u, v), w.subword_leq(u, v));
                }
                assert!(w.bruhat_leq(0, u) && w.bruhat_leq(u, w.longest()));
            }
        }
    }

    #[test]
    fn a_function_values() {
        let w = build_weyl_group(WeylType::A(2)).unwrap();
        assert_eq!(w.a_function(w.longest()), 3);
        assert_eq!(w.a_function(0), 0);
        assert_eq!(w.a_function(w.parse_element("s1s2").unwrap()), 1);
        let g = build_weyl_group(WeylType::G2).unwrap();
        assert_eq!(g.a_function(g.longest()), 6);
        assert_eq!(g.a_function(g.parse_element("s1s2s1").unwrap()), 1);
    }

    #[test]
    fn thm777_values() {
        let a2 = build_weyl_group(WeylType::A(2)).unwrap();
        assert_eq!(a2.thm777_eval(&[0]).unwrap(), (1, 2, 2));
        assert_eq!(a2.thm777_eval(&[0, 1]).unwrap(), (0, 0, 0));
        let a1 = build_weyl_group(WeylType::A(1)).unwrap();
        assert_eq!(a1.thm777_eval(&[]).unwrap(), (1, 2, 2));
    }

    #[test]
    fn coideal_counts() {
        assert_eq!(build_weyl_group(WeylType::A(1)).unwrap().coideals().unwrap().len(), 3);
        assert_eq!(build_weyl_group(WeylType::A(2)).unwrap().coideals().unwrap().len(), 9);
    }

    #[test]
    fn formulas() {
        let a2 = build_weyl_group(WeylType::A(2)).unwrap();
        let f = a2.oinf_formulas(0, Some(0));
        assert_eq!((f.pd_simple, f.pd_verma, f.gl_dim, f.min_pd, f.shifted_pd), (8, 2, 8, 2, Some(2)));
        assert_eq!(a2.regular_pd_simple(a2.longest()), 3);
        let a1 = build_weyl_group(WeylType::A(1)).unwrap();
        let f = a1.oinf_formulas(a1.longest(), None);
        assert_eq!((f.pd_simple, f.pd_verma, f.gl_dim), (2, 2, 3));
    }
}
