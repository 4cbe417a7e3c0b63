//! Shared helpers for the integration tests: a dense Z₂ rank oracle that
//! shares no code with the sparse reduction, and seeded random inputs.
#![allow(dead_code)]

use cyclerad::complex::{EmbeddedComplex, PointCloud, SimplexRef};
use cyclerad::filtration::Filtration;
use cyclerad::z2linalg::ChainVector;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rank over Z₂ of the matrix with the given sparse columns, by dense
/// Gaussian elimination on bit rows.
pub fn dense_rank(n_rows: usize, columns: &[Vec<usize>]) -> usize {
    let words = columns.len().div_ceil(64).max(1);
    let mut rows = vec![vec![0u64; words]; n_rows];
    for (j, col) in columns.iter().enumerate() {
        for &i in col {
            rows[i][j / 64] ^= 1 << (j % 64);
        }
    }
    let mut rank = 0;
    for j in 0..columns.len() {
        let bit = |r: &Vec<u64>| r[j / 64] >> (j % 64) & 1 == 1;
        let Some(pivot) = (rank..n_rows).find(|&r| bit(&rows[r])) else { continue };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && bit(row) {
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Whether `v` lies in the span of `columns`.
pub fn dense_in_span(n_rows: usize, columns: &[Vec<usize>], v: &[usize]) -> bool {
    let mut with = columns.to_vec();
    with.push(v.to_vec());
    dense_rank(n_rows, &with) == dense_rank(n_rows, columns)
}

/// Boundary columns of the `p`-simplices accepted by `keep`, over all
/// `(p-1)`-simplices of the complex.
pub fn boundary_columns(complex: &EmbeddedComplex, p: usize, keep: impl Fn(SimplexRef) -> bool) -> Vec<Vec<usize>> {
    if p == 0 || p > complex.max_dim() {
        return Vec::new();
    }
    (0..complex.n_simplices(p))
        .map(|pos| SimplexRef::new(p, pos))
        .filter(|&s| keep(s))
        .map(|s| {
            let vs = complex.simplex(s);
            let mut col: Vec<usize> = (0..vs.len())
                .map(|k| {
                    let mut face = vs.to_vec();
                    face.remove(k);
                    complex.index_of(&face).unwrap().pos
                })
                .collect();
            col.sort_unstable();
            col
        })
        .collect()
}

/// `β_p` of the prefix `K_i` of a filtration.
pub fn dense_betti(f: &Filtration, p: usize, i: usize) -> usize {
    let complex = f.complex();
    let inside = |s: SimplexRef| f.index_of(s) <= i;
    let n_p = (0..complex.n_simplices(p)).filter(|&pos| inside(SimplexRef::new(p, pos))).count();
    let rows_p = if p == 0 { 0 } else { complex.n_simplices(p - 1) };
    let rank_p = dense_rank(rows_p, &boundary_columns(complex, p, inside));
    let rank_p1 = dense_rank(complex.n_simplices(p), &boundary_columns(complex, p + 1, inside));
    n_p - rank_p - rank_p1
}

/// Whether `z` bounds in the prefix `K_i`.
pub fn bounds_in_prefix(f: &Filtration, p: usize, i: usize, z: &ChainVector) -> bool {
    let complex = f.complex();
    let cols = boundary_columns(complex, p + 1, |s| f.index_of(s) <= i);
    dense_in_span(complex.n_simplices(p), &cols, z.support())
}

/// Whether `a + b` bounds in the whole complex.
pub fn homologous(complex: &EmbeddedComplex, p: usize, a: &ChainVector, b: &ChainVector) -> bool {
    let cols = boundary_columns(complex, p + 1, |_| true);
    dense_in_span(complex.n_simplices(p), &cols, a.sum(b).support())
}

pub fn random_cloud(rng: &mut impl Rng, n: usize) -> PointCloud {
    let points = (0..n).map(|_| vec![rng.gen::<f64>(), rng.gen::<f64>()]).collect();
    PointCloud::from_points(points).unwrap()
}

/// Random planar-coordinate complex: each edge kept with `edge_p`, each
/// triangle over kept edges with `tri_p`.
pub fn random_complex(rng: &mut impl Rng, n: usize, edge_p: f64, tri_p: f64) -> EmbeddedComplex {
    let cloud = random_cloud(rng, n);
    let mut edges = std::collections::HashSet::new();
    let mut simplices = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(edge_p) {
                edges.insert((a, b));
                simplices.push(vec![a, b]);
            }
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if edges.contains(&(a, b)) && edges.contains(&(a, c)) && edges.contains(&(b, c)) && rng.gen_bool(tri_p) {
                    simplices.push(vec![a, b, c]);
                }
            }
        }
    }
    EmbeddedComplex::from_simplices(cloud, simplices).unwrap()
}

/// Random complex with at most `max_simplices` simplices.
pub fn random_small_complex(rng: &mut impl Rng, max_vertices: usize, max_simplices: usize) -> EmbeddedComplex {
    loop {
        let n = rng.gen_range(3..=max_vertices);
        let (edge_p, tri_p) = (rng.gen_range(0.3..0.8), rng.gen_range(0.2..0.7));
        let k = random_complex(rng, n, edge_p, tri_p);
        if k.len() <= max_simplices {
            return k;
        }
    }
}

/// Random monotone filtration with small integer values, so that ties are
/// common.
pub fn random_filtration(rng: &mut impl Rng, complex: EmbeddedComplex) -> Filtration {
    let mut values: Vec<Vec<f64>> = Vec::new();
    for p in 0..=complex.max_dim() {
        let vals = (0..complex.n_simplices(p))
            .map(|pos| {
                let own = rng.gen_range(0..6) as f64;
                if p == 0 {
                    own
                } else {
                    complex.facets(SimplexRef::new(p, pos)).iter().map(|&f| values[p - 1][f]).fold(own, f64::max)
                }
            })
            .collect();
        values.push(vals);
    }
    Filtration::from_values(complex, |s| values[s.dim][s.pos]).unwrap()
}

/// A cycle formed from a random combination of a cycle-space basis, or
/// `None` when `Z_p` is trivial.
pub fn random_cycle(rng: &mut impl Rng, complex: &EmbeddedComplex, p: usize) -> Option<ChainVector> {
    let basis = cycle_space_basis(complex, p);
    if basis.is_empty() {
        return None;
    }
    loop {
        let mut z = ChainVector::zero(complex.n_simplices(p));
        for b in &basis {
            if rng.gen_bool(0.5) {
                z.add_assign(b);
            }
        }
        if !z.is_zero() {
            return Some(z);
        }
    }
}

/// Spanning set of `Z_p(K)`: a homology basis followed by every boundary.
pub fn cycle_space_basis(complex: &EmbeddedComplex, p: usize) -> Vec<ChainVector> {
    let n = complex.n_simplices(p);
    let mut basis: Vec<ChainVector> = cyclerad::oracle::homology_basis(complex, p);
    for col in boundary_columns(complex, p + 1, |_| true) {
        basis.push(ChainVector::new(n, col).unwrap());
    }
    basis
}

pub fn shuffled<T: Clone>(rng: &mut impl Rng, items: &[T]) -> Vec<T> {
    let mut v = items.to_vec();
    v.shuffle(rng);
    v
}

pub fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs()).max(1.0)
}
