//! Seeded random generators of modules for property testing.

use std::sync::Arc;

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::linalg::{q, q_frac, Matrix, Q};
use crate::liecoh::LieModule;
use crate::pathalg::PathAlgebra;
use crate::presets::LieKind;
use crate::repcat::{generated_submodule, quotient_rep, submodule_rep, ProjectiveSum, Representation};

/// A rational with small numerator and denominator.
pub fn small_rational<R: Rng>(rng: &mut R) -> Q {
    q_frac(rng.gen_range(-3..=3), rng.gen_range(1..=2))
}

pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> Matrix {
    let mut m = Matrix::zeros(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            m[(r, c)] = small_rational(rng);
        }
    }
    m
}

pub fn random_invertible<R: Rng>(rng: &mut R, n: usize) -> Matrix {
    loop {
        let m = random_matrix(rng, n, n);
        if !m.determinant().is_zero() {
            return m;
        }
    }
}

fn random_vector<R: Rng>(rng: &mut R, n: usize) -> Vec<Q> {
    (0..n).map(|_| q(rng.gen_range(-2..=2))).collect()
}

/// A nonzero module: a small sum of projectives, cut down by a random submodule (kept either as
/// the submodule or as the quotient).
pub fn random_representation<R: Rng>(algebra: &Arc<PathAlgebra>, rng: &mut R) -> Representation {
    let live = algebra.simples();
    loop {
        let k = rng.gen_range(1..=2);
        let gens: Vec<usize> = (0..k).map(|_| *live.choose(rng).unwrap()).collect();
        let p = ProjectiveSum::new(algebra, gens).module().clone();
        let vecs: Vec<(usize, Vec<Q>)> = (0..rng.gen_range(0..=2))
            .filter_map(|_| {
                let v = *live.choose(rng).unwrap();
                (p.dims()[v] > 0).then(|| (v, random_vector(rng, p.dims()[v])))
            })
            .collect();
        let sub = generated_submodule(&p, &vecs);
        let m = if rng.gen_bool(0.5) {
            quotient_rep(&p, &sub).0
        } else {
            submodule_rep(&p, &sub).0
        };
        if !m.is_zero() {
            return m;
        }
    }
}

fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let mut m = Matrix::zeros(a.rows() * b.rows(), a.cols() * b.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            if !a[(i, j)].is_zero() {
                m.set_block(i * b.rows(), j * b.cols(), &b.scale(&a[(i, j)]));
            }
        }
    }
    m
}

/// Irreducible `sl2`-module of dimension `d`, basis order `e, h, f`.
pub fn sl2_irrep(d: usize) -> [Matrix; 3] {
    let mut e = Matrix::zeros(d, d);
    let mut h = Matrix::zeros(d, d);
    let mut f = Matrix::zeros(d, d);
    for k in 0..d {
        h[(k, k)] = q(d as i64 - 1 - 2 * k as i64);
        if k + 1 < d {
            f[(k + 1, k)] = q(1);
        }
        if k > 0 {
            e[(k - 1, k)] = q((k * (d - k)) as i64);
        }
    }
    [e, h, f]
}

fn block_sum(blocks: &[Vec<Matrix>]) -> Vec<Matrix> {
    let n = blocks[0].len();
    let dim: usize = blocks.iter().map(|b| b[0].rows()).sum();
    (0..n)
        .map(|i| {
            let mut m = Matrix::zeros(dim, dim);
            let mut off = 0;
            for b in blocks {
                m.set_block(off, off, &b[i]);
                off += b[i].rows();
            }
            m
        })
        .collect()
}

fn partition<R: Rng>(rng: &mut R, total: usize) -> Vec<usize> {
    let mut parts = Vec::new();
    let mut left = total;
    while left > 0 {
        let p = rng.gen_range(1..=left);
        parts.push(p);
        left -= p;
    }
    parts
}

/// A random module of dimension `1..=max_dim` over the given preset algebra, conjugated by a
/// random invertible matrix so that no structure is visible in the basis.
pub fn random_lie_module<R: Rng>(kind: LieKind, rng: &mut R, max_dim: usize) -> LieModule {
    let g = kind.algebra();
    let dim = rng.gen_range(1..=max_dim.max(1));
    let action: Vec<Matrix> = match kind {
        LieKind::Abelian(n) => {
            let x = random_matrix(rng, dim, dim);
            let x2 = x.mul(&x);
            (0..n)
                .map(|_| {
                    let mut m = Matrix::identity(dim).scale(&small_rational(rng));
                    m.add_scaled(&x, &small_rational(rng));
                    m.add_scaled(&x2, &small_rational(rng));
                    m
                })
                .collect()
        }
        LieKind::Sl2 => {
            let blocks: Vec<Vec<Matrix>> = partition(rng, dim).into_iter().map(|d| sl2_irrep(d).to_vec()).collect();
            block_sum(&blocks)
        }
        LieKind::BorelSl2 => {
            let base = small_rational(rng);
            let weights: Vec<Q> = (0..dim).map(|_| &base + q(2 * rng.gen_range(0..3))).collect();
            let mut h = Matrix::zeros(dim, dim);
            let mut e = Matrix::zeros(dim, dim);
            for a in 0..dim {
                h[(a, a)] = weights[a].clone();
                for b in 0..dim {
                    if weights[a] == &weights[b] + q(2) {
                        e[(a, b)] = small_rational(rng);
                    }
                }
            }
            vec![h, e]
        }
        LieKind::Heisenberg => {
            let mut blocks = Vec::new();
            let mut left = dim;
            while left > 0 {
                if left >= 3 && rng.gen_bool(0.6) {
                    let (a, b) = (q(rng.gen_range(1..=3)), q(rng.gen_range(1..=3)));
                    let mut x = Matrix::zeros(3, 3);
                    let mut y = Matrix::zeros(3, 3);
                    let mut z = Matrix::zeros(3, 3);
                    x[(0, 1)] = a.clone();
                    y[(1, 2)] = b.clone();
                    z[(0, 2)] = a * b;
                    blocks.push(vec![x, y, z]);
                    left -= 3;
                } else if left >= 2 && rng.gen_bool(0.5) {
                    // commuting pair with a shared nilpotent part; z acts by zero
                    let mut n = Matrix::zeros(2, 2);
                    n[(0, 1)] = q(1);
                    let mut x = Matrix::identity(2).scale(&small_rational(rng));
                    x.add_scaled(&n, &small_rational(rng));
                    let mut y = Matrix::identity(2).scale(&small_rational(rng));
                    y.add_scaled(&n, &small_rational(rng));
                    blocks.push(vec![x, y, Matrix::zeros(2, 2)]);
                    left -= 2;
                } else {
                    let x = Matrix::identity(1).scale(&small_rational(rng));
                    let y = Matrix::identity(1).scale(&small_rational(rng));
                    blocks.push(vec![x, y, Matrix::zeros(1, 1)]);
                    left -= 1;
                }
            }
            block_sum(&blocks)
        }
        LieKind::GPlusGSl2 => {
            let options: Vec<(usize, usize)> = (1..=4)
                .flat_map(|a| (1..=4).map(move |b| (a, b)))
                .filter(|(a, b)| a * b <= dim)
                .collect();
            let mut blocks = Vec::new();
            let mut left = dim;
            while left > 0 {
                let fits: Vec<&(usize, usize)> = options.iter().filter(|(a, b)| a * b <= left).collect();
                let &&(a, b) = fits.choose(rng).unwrap();
                let (ra, rb) = (sl2_irrep(a), sl2_irrep(b));
                let (ia, ib) = (Matrix::identity(a), Matrix::identity(b));
                let mut block: Vec<Matrix> = ra.iter().map(|m| kron(m, &ib)).collect();
                block.extend(rb.iter().map(|m| kron(&ia, m)));
                blocks.push(block);
                left -= a * b;
            }
            block_sum(&blocks)
        }
    };
    let p = random_invertible(rng, dim);
    LieModule::new(&g, action)
        .and_then(|m| m.conjugate(&p))
        .expect("constructed modules satisfy the bracket relations")
}
