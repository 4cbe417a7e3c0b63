//! Embedded simplicial complexes and chain bookkeeping.
//!
//! Simplices are stored per dimension in lexicographic order of their sorted
//! vertex tuples. That `(dimension, lexicographic)` order is the canonical
//! basis for every chain vector and boundary matrix in the crate, so moving
//! a chain between a subcomplex and its parent is a pure re-indexing.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::z2linalg::{ChainVector, Z2Matrix};

/// Relative tolerance for "on the sphere" membership tests.
pub const GEOMETRIC_TOLERANCE: f64 = 1e-9;

/// Points in ℝ^d.
#[derive(Clone, Debug, PartialEq)]
pub struct PointCloud {
    dim: usize,
    points: Vec<Vec<f64>>,
}

impl PointCloud {
    /// Builds a cloud in ambient dimension `dim`. Rejects ragged rows,
    /// non-finite coordinates and duplicate points.
    pub fn new(dim: usize, points: Vec<Vec<f64>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidPoints("ambient dimension must be at least 1".into()));
        }
        for (i, p) in points.iter().enumerate() {
            if p.len() != dim {
                return Err(Error::InvalidPoints(format!(
                    "point {i} has {} coordinates, expected {dim}",
                    p.len()
                )));
            }
            if p.iter().any(|x| !x.is_finite()) {
                return Err(Error::InvalidPoints(format!("point {i} has a non-finite coordinate")));
            }
        }
        let mut order: Vec<usize> = (0..points.len()).collect();
        order.sort_by(|&a, &b| lex_cmp(&points[a], &points[b]));
        for w in order.windows(2) {
            if points[w[0]] == points[w[1]] {
                return Err(Error::InvalidPoints(format!(
                    "duplicate points {} and {}",
                    w[0].min(w[1]),
                    w[0].max(w[1])
                )));
            }
        }
        Ok(Self { dim, points })
    }

    /// Infers the ambient dimension from the first point.
    pub fn from_points(points: Vec<Vec<f64>>) -> Result<Self> {
        let dim = points
            .first()
            .map(Vec::len)
            .ok_or_else(|| Error::InvalidPoints("empty point cloud".into()))?;
        Self::new(dim, points)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.points[i]
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    /// Absolute tolerance scaled by the largest coordinate magnitude.
    pub fn tolerance(&self) -> f64 {
        let scale = self
            .points
            .iter()
            .flatten()
            .fold(1.0_f64, |m, x| m.max(x.abs()));
        GEOMETRIC_TOLERANCE * scale
    }
}

fn lex_cmp(a: &[f64], b: &[f64]) -> std::cmp::Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.total_cmp(y))
        .find(|o| o.is_ne())
        .unwrap_or(std::cmp::Ordering::Equal)
}

pub fn distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

/// A simplex addressed by dimension and position in the canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct SimplexRef {
    pub dim: usize,
    pub pos: usize,
}

impl SimplexRef {
    pub fn new(dim: usize, pos: usize) -> Self {
        Self { dim, pos }
    }
}

/// A simplicial complex with vertices in ℝ^d.
///
/// Every point of the cloud is a vertex.
#[derive(Clone, Debug)]
pub struct EmbeddedComplex {
    cloud: PointCloud,
    simplices: Vec<Vec<Vec<usize>>>,
    lookup: Vec<HashMap<Vec<usize>, usize>>,
    facets: Vec<Vec<Vec<usize>>>,
    offsets: Vec<usize>,
}

impl EmbeddedComplex {
    /// Builds the closure of `simplices` under taking faces.
    pub fn from_simplices<I>(cloud: PointCloud, simplices: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<usize>>,
    {
        let n = cloud.len();
        let mut by_dim: Vec<BTreeSet<Vec<usize>>> = vec![(0..n).map(|v| vec![v]).collect()];
        for mut s in simplices {
            if s.is_empty() {
                return Err(Error::InvalidComplex("empty simplex".into()));
            }
            s.sort_unstable();
            if s.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidComplex(format!("repeated vertex in simplex {s:?}")));
            }
            if let Some(&v) = s.iter().find(|&&v| v >= n) {
                return Err(Error::InvalidComplex(format!("vertex {v} out of range ({n} points)")));
            }
            if s.len() > 20 {
                return Err(Error::InvalidComplex(format!("simplex of dimension {} too large", s.len() - 1)));
            }
            insert_closure(&mut by_dim, s);
        }
        Ok(Self::from_sorted_sets(cloud, by_dim))
    }

    fn from_sorted_sets(cloud: PointCloud, by_dim: Vec<BTreeSet<Vec<usize>>>) -> Self {
        let mut by_dim = by_dim;
        while by_dim.len() > 1 && by_dim.last().is_some_and(BTreeSet::is_empty) {
            by_dim.pop();
        }
        let simplices: Vec<Vec<Vec<usize>>> = by_dim.into_iter().map(|s| s.into_iter().collect()).collect();
        let lookup: Vec<HashMap<Vec<usize>, usize>> = simplices
            .iter()
            .map(|list| list.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
            .collect();
        let mut facets = vec![vec![Vec::new(); simplices[0].len()]];
        for p in 1..simplices.len() {
            let f = simplices[p]
                .iter()
                .map(|s| {
                    let mut fs: Vec<usize> = facet_tuples(s).map(|t| lookup[p - 1][&t]).collect();
                    fs.sort_unstable();
                    fs
                })
                .collect();
            facets.push(f);
        }
        let mut offsets = Vec::with_capacity(simplices.len() + 1);
        let mut acc = 0;
        for list in &simplices {
            offsets.push(acc);
            acc += list.len();
        }
        offsets.push(acc);
        Self { cloud, simplices, lookup, facets, offsets }
    }

    pub fn cloud(&self) -> &PointCloud {
        &self.cloud
    }

    pub fn n_vertices(&self) -> usize {
        self.cloud.len()
    }

    /// Highest simplex dimension present (0 for a bare point set).
    pub fn max_dim(&self) -> usize {
        self.simplices.len() - 1
    }

    /// Number of `p`-simplices; zero above the top dimension.
    pub fn n_simplices(&self, p: usize) -> usize {
        self.simplices.get(p).map_or(0, Vec::len)
    }

    /// Total number of simplices `N`.
    pub fn len(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn simplex(&self, s: SimplexRef) -> &[usize] {
        &self.simplices[s.dim][s.pos]
    }

    pub fn simplices(&self, p: usize) -> &[Vec<usize>] {
        self.simplices.get(p).map_or(&[], Vec::as_slice)
    }

    /// Looks up a simplex by its vertex tuple (any order).
    pub fn index_of(&self, vertices: &[usize]) -> Option<SimplexRef> {
        if vertices.is_empty() {
            return None;
        }
        let mut key = vertices.to_vec();
        key.sort_unstable();
        let dim = key.len() - 1;
        self.lookup.get(dim)?.get(&key).map(|&pos| SimplexRef { dim, pos })
    }

    /// Canonical positions of the codimension-one faces, sorted.
    pub fn facets(&self, s: SimplexRef) -> &[usize] {
        &self.facets[s.dim][s.pos]
    }

    /// Position in the global `(dimension, lexicographic)` order.
    pub fn global_index(&self, s: SimplexRef) -> usize {
        self.offsets[s.dim] + s.pos
    }

    pub fn simplex_at(&self, global: usize) -> SimplexRef {
        let dim = self.offsets.partition_point(|&o| o <= global) - 1;
        SimplexRef { dim, pos: global - self.offsets[dim] }
    }

    /// All simplices in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = SimplexRef> + '_ {
        self.simplices
            .iter()
            .enumerate()
            .flat_map(|(dim, list)| (0..list.len()).map(move |pos| SimplexRef { dim, pos }))
    }

    fn check_boundary_dim(&self, p: usize) -> Result<()> {
        if p == 0 || p > self.max_dim() + 1 {
            return Err(Error::DimensionOutOfRange { p, max: self.max_dim() });
        }
        Ok(())
    }

    /// The `p`-th boundary matrix: rows are `(p−1)`-simplices, columns
    /// `p`-simplices, both in canonical order.
    pub fn boundary_matrix(&self, p: usize) -> Result<Z2Matrix> {
        self.check_boundary_dim(p)?;
        Ok(self.boundary_matrix_unchecked(p))
    }

    pub(crate) fn boundary_matrix_unchecked(&self, p: usize) -> Z2Matrix {
        let rows = self.n_simplices(p - 1);
        let cols = self.facets.get(p).cloned().unwrap_or_default();
        Z2Matrix::from_columns_unchecked(rows, cols)
    }

    /// Boundary group generators `B_p(K)`: the columns of `∂_{p+1}`.
    pub fn boundaries(&self, p: usize) -> Z2Matrix {
        self.boundary_matrix_unchecked(p + 1)
    }

    /// Boundary of a `p`-chain.
    pub fn boundary(&self, p: usize, chain: &ChainVector) -> Result<ChainVector> {
        if chain.ambient_size() != self.n_simplices(p) {
            return Err(Error::DimensionMismatch { expected: self.n_simplices(p), found: chain.ambient_size() });
        }
        if p == 0 {
            return Ok(ChainVector::zero(0));
        }
        let rows = self.n_simplices(p - 1);
        let mut acc: Vec<usize> = Vec::new();
        for &j in chain.support() {
            acc = crate::z2linalg::add_columns(&acc, &self.facets[p][j]);
        }
        Ok(ChainVector::from_sorted_unchecked(rows, acc))
    }

    pub fn is_cycle(&self, p: usize, chain: &ChainVector) -> Result<bool> {
        Ok(self.boundary(p, chain)?.is_zero())
    }

    /// Builds a `p`-chain from vertex tuples.
    pub fn chain_from_simplices(&self, p: usize, simplices: &[Vec<usize>]) -> Result<ChainVector> {
        let mut idx = Vec::with_capacity(simplices.len());
        for s in simplices {
            if s.len() != p + 1 {
                return Err(Error::InvalidComplex(format!("simplex {s:?} is not {p}-dimensional")));
            }
            let r = self
                .index_of(s)
                .ok_or_else(|| Error::InvalidComplex(format!("simplex {s:?} not in complex")))?;
            idx.push(r.pos);
        }
        ChainVector::from_indices(self.n_simplices(p), idx)
    }

    /// Vertex tuples of the simplices in a `p`-chain.
    pub fn chain_simplices(&self, p: usize, chain: &ChainVector) -> Vec<Vec<usize>> {
        chain.support().iter().map(|&i| self.simplices[p][i].clone()).collect()
    }

    /// Sorted distinct vertices touched by a `p`-chain.
    pub fn chain_vertices(&self, p: usize, chain: &ChainVector) -> Vec<usize> {
        let set: BTreeSet<usize> = chain
            .support()
            .iter()
            .flat_map(|&i| self.simplices[p][i].iter().copied())
            .collect();
        set.into_iter().collect()
    }

    /// Euclidean length of the edge at canonical position `pos`.
    pub fn edge_length(&self, pos: usize) -> f64 {
        let e = &self.simplices[1][pos];
        distance(self.cloud.point(e[0]), self.cloud.point(e[1]))
    }

    /// The subcomplex induced by a vertex set.
    pub fn induced_subcomplex(&self, vertices: &[usize]) -> SubcomplexView<'_> {
        let mut keep = vec![false; self.n_vertices()];
        for &v in vertices {
            if v < keep.len() {
                keep[v] = true;
            }
        }
        let members = self
            .simplices
            .iter()
            .map(|list| list.iter().map(|s| s.iter().all(|&v| keep[v])).collect())
            .collect();
        SubcomplexView::from_members_unchecked(self, members)
    }

    /// The subcomplex induced by all vertices within `radius` of `center`,
    /// points on the sphere included.
    pub fn ball_induced_subcomplex(&self, center: &[f64], radius: f64) -> SubcomplexView<'_> {
        let tol = self.cloud.tolerance();
        let inside: Vec<usize> = (0..self.n_vertices())
            .filter(|&v| distance(self.cloud.point(v), center) <= radius + tol)
            .collect();
        self.induced_subcomplex(&inside)
    }

    /// The whole complex as a view.
    pub fn full_view(&self) -> SubcomplexView<'_> {
        let members = self.simplices.iter().map(|l| vec![true; l.len()]).collect();
        SubcomplexView::from_members_unchecked(self, members)
    }
}

fn facet_tuples(s: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    (0..s.len()).map(move |skip| {
        s.iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, &v)| v)
            .collect()
    })
}

fn insert_closure(by_dim: &mut Vec<BTreeSet<Vec<usize>>>, s: Vec<usize>) {
    let dim = s.len() - 1;
    while by_dim.len() <= dim {
        by_dim.push(BTreeSet::new());
    }
    if dim == 0 || by_dim[dim].contains(&s) {
        by_dim[dim].insert(s);
        return;
    }
    for f in facet_tuples(&s) {
        insert_closure(by_dim, f);
    }
    by_dim[dim].insert(s);
}

/// A face-closed subset of a complex, as membership flags over the parent.
///
/// Chains on the view are expressed in view-local coordinates: the rank of a
/// member simplex among the members of its dimension, in canonical order.
#[derive(Clone, Debug)]
pub struct SubcomplexView<'a> {
    parent: &'a EmbeddedComplex,
    members: Vec<Vec<bool>>,
    local: Vec<Vec<usize>>,
}

impl<'a> SubcomplexView<'a> {
    /// Validates face closure of the member flags.
    pub fn from_members(parent: &'a EmbeddedComplex, members: Vec<Vec<bool>>) -> Result<Self> {
        if members.len() != parent.simplices.len()
            || members.iter().zip(&parent.simplices).any(|(m, s)| m.len() != s.len())
        {
            return Err(Error::InvalidComplex("membership flags do not match the complex".into()));
        }
        for p in 1..members.len() {
            for (pos, &m) in members[p].iter().enumerate() {
                if m && parent.facets[p][pos].iter().any(|&f| !members[p - 1][f]) {
                    return Err(Error::InvalidComplex(format!(
                        "subcomplex not closed under faces at {:?}",
                        parent.simplices[p][pos]
                    )));
                }
            }
        }
        Ok(Self::from_members_unchecked(parent, members))
    }

    pub(crate) fn from_members_unchecked(parent: &'a EmbeddedComplex, members: Vec<Vec<bool>>) -> Self {
        let local = members
            .iter()
            .map(|m| m.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect())
            .collect();
        Self { parent, members, local }
    }

    pub fn parent(&self) -> &'a EmbeddedComplex {
        self.parent
    }

    pub fn contains(&self, s: SimplexRef) -> bool {
        self.members.get(s.dim).is_some_and(|m| m[s.pos])
    }

    /// Canonical positions of the member `p`-simplices, ascending.
    pub fn members(&self, p: usize) -> &[usize] {
        self.local.get(p).map_or(&[], Vec::as_slice)
    }

    pub fn n_simplices(&self, p: usize) -> usize {
        self.members(p).len()
    }

    pub fn len(&self) -> usize {
        self.local.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn vertices(&self) -> &[usize] {
        self.members(0)
    }

    /// Member simplices in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = SimplexRef> + '_ {
        self.local
            .iter()
            .enumerate()
            .flat_map(|(dim, l)| l.iter().map(move |&pos| SimplexRef { dim, pos }))
    }

    /// Pads a view-local `p`-chain with zeros to the parent's basis.
    pub fn extend(&self, p: usize, chain: &ChainVector) -> Result<ChainVector> {
        let members = self.members(p);
        if chain.ambient_size() != members.len() {
            return Err(Error::DimensionMismatch { expected: members.len(), found: chain.ambient_size() });
        }
        let support = chain.support().iter().map(|&i| members[i]).collect();
        Ok(ChainVector::from_sorted_unchecked(self.parent.n_simplices(p), support))
    }

    /// Restricts a parent `p`-chain to view-local coordinates.
    pub fn contract(&self, p: usize, chain: &ChainVector) -> Result<ChainVector> {
        if chain.ambient_size() != self.parent.n_simplices(p) {
            return Err(Error::DimensionMismatch {
                expected: self.parent.n_simplices(p),
                found: chain.ambient_size(),
            });
        }
        let members = self.members(p);
        let support = chain
            .support()
            .iter()
            .map(|pos| members.binary_search(pos).map_err(|_| Error::OutsideSubcomplex))
            .collect::<Result<Vec<_>>>()?;
        Ok(ChainVector::from_sorted_unchecked(members.len(), support))
    }

    /// Whether a parent `p`-chain is supported on the view.
    pub fn supports(&self, p: usize, chain: &ChainVector) -> bool {
        chain
            .support()
            .iter()
            .all(|&pos| self.members.get(p).is_some_and(|m| m[pos]))
    }

    /// `B_p` of the view, with rows and columns in parent coordinates
    /// restricted to members (rows: all parent `p`-simplices).
    pub fn boundaries_extended(&self, p: usize) -> Z2Matrix {
        let rows = self.parent.n_simplices(p);
        let cols = self
            .members(p + 1)
            .iter()
            .map(|&pos| self.parent.facets[p + 1][pos].clone())
            .collect();
        Z2Matrix::from_columns_unchecked(rows, cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cloud(points: &[&[f64]]) -> PointCloud {
        PointCloud::from_points(points.iter().map(|p| p.to_vec()).collect()).unwrap()
    }

    fn triangle(filled: bool) -> EmbeddedComplex {
        let c = cloud(&[&[0.0, 0.0], &[1.0, 0.0], &[0.5, 0.8]]);
        let s = if filled { vec![vec![0, 1, 2]] } else { vec![vec![0, 1], vec![0, 2], vec![1, 2]] };
        EmbeddedComplex::from_simplices(c, s).unwrap()
    }

    #[test]
    fn rejects_bad_clouds() {
        assert!(PointCloud::from_points(vec![]).is_err());
        assert!(PointCloud::from_points(vec![vec![0.0, 1.0], vec![0.0]]).is_err());
        assert!(PointCloud::from_points(vec![vec![0.0, 1.0], vec![0.0, 1.0]]).is_err());
        assert!(PointCloud::from_points(vec![vec![f64::NAN]]).is_err());
    }

    #[test]
    fn closure_and_canonical_order() {
        let k = triangle(true);
        assert_eq!(k.simplices(1), &[vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(k.len(), 7);
        assert_eq!(k.global_index(SimplexRef::new(2, 0)), 6);
        assert_eq!(k.simplex_at(4), SimplexRef::new(1, 1));
        assert_eq!(k.index_of(&[2, 0]), Some(SimplexRef::new(1, 1)));
    }

    #[test]
    fn boundary_matrix_examples() {
        let c = cloud(&[&[0.0], &[1.0]]);
        let k = EmbeddedComplex::from_simplices(c, vec![vec![0, 1]]).unwrap();
        assert_eq!(k.boundary_matrix(1).unwrap().column(0), &[0, 1]);

        let filled = triangle(true);
        let d2 = filled.boundary_matrix(2).unwrap();
        assert_eq!(d2.n_cols(), 1);
        assert_eq!(d2.column(0), &[0, 1, 2]);

        let hollow = triangle(false);
        let d2 = hollow.boundary_matrix(2).unwrap();
        assert_eq!((d2.n_rows(), d2.n_cols()), (3, 0));
        assert!(hollow.boundary_matrix(0).is_err());
        assert!(hollow.boundary_matrix(3).is_err());
    }

    #[test]
    fn boundary_of_boundary_vanishes() {
        let c = cloud(&[&[0.0, 0.0, 0.0], &[1.0, 0.0, 0.0], &[0.0, 1.0, 0.0], &[0.0, 0.0, 1.0]]);
        let k = EmbeddedComplex::from_simplices(c, vec![vec![0, 1, 2, 3]]).unwrap();
        for p in 1..k.max_dim() {
            let prod = k.boundary_matrix(p).unwrap().mul(&k.boundary_matrix(p + 1).unwrap()).unwrap();
            assert!(prod.is_zero(), "p = {p}");
        }
    }

    #[test]
    fn induced_subcomplex_examples() {
        let k = triangle(false);
        assert_eq!(k.induced_subcomplex(&[0, 1, 2]).len(), k.len());
        assert!(k.induced_subcomplex(&[]).is_empty());
        let v = k.induced_subcomplex(&[0, 1]);
        assert_eq!(v.vertices(), &[0, 1]);
        assert_eq!(v.members(1), &[0]);
        assert_eq!(v.len(), 3);
    }

    #[test]
    fn ball_induced_examples() {
        let c = cloud(&[&[0.0, 0.0], &[1.0, 0.0], &[1.0, 1.0], &[0.0, 1.0]]);
        let k = EmbeddedComplex::from_simplices(c, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]).unwrap();
        let v = k.ball_induced_subcomplex(&[0.0, 0.0], 0.0);
        assert_eq!((v.vertices(), v.n_simplices(1)), (&[0][..], 0));
        assert_eq!(k.ball_induced_subcomplex(&[0.0, 0.0], 2.0).len(), k.len());
        let v = k.ball_induced_subcomplex(&[0.0, 0.0], 1.0);
        assert_eq!(v.vertices(), &[0, 1, 3]);
        let edges: Vec<_> = v.members(1).iter().map(|&e| k.simplices(1)[e].clone()).collect();
        assert_eq!(edges, vec![vec![0, 1], vec![0, 3]]);
    }

    #[test]
    fn extend_contract() {
        let filled = triangle(true);
        let view = filled.induced_subcomplex(&[0, 2]);
        let zero = ChainVector::zero(view.n_simplices(1));
        assert!(view.extend(1, &zero).unwrap().is_zero());
        let e = ChainVector::new(1, vec![0]).unwrap();
        let ext = view.extend(1, &e).unwrap();
        assert_eq!(ext.support(), &[1]);
        assert_eq!(view.contract(1, &ext).unwrap(), e);
        let outside = ChainVector::new(3, vec![0]).unwrap();
        assert!(matches!(view.contract(1, &outside), Err(Error::OutsideSubcomplex)));
    }

    #[test]
    fn hollow_cycle_extends_with_identical_support() {
        let hollow = triangle(false);
        let filled = triangle(true);
        let cycle = hollow.chain_from_simplices(1, &[vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap();
        let view = filled.induced_subcomplex(&[0, 1, 2]);
        let members = filled.boundary_matrix(1).unwrap();
        assert_eq!(members.n_cols(), 3);
        // the hollow triangle is the 1-skeleton of the filled one
        let skeleton_view = SubcomplexView::from_members(
            &filled,
            vec![vec![true; 3], vec![true; 3], vec![false]],
        )
        .unwrap();
        let local = ChainVector::new(3, cycle.support().to_vec()).unwrap();
        assert_eq!(skeleton_view.extend(1, &local).unwrap().support(), cycle.support());
        assert!(view.supports(1, &cycle));
    }

    #[test]
    fn from_members_rejects_open_sets() {
        let k = triangle(true);
        let bad = vec![vec![true, true, false], vec![false, true, false], vec![false]];
        assert!(SubcomplexView::from_members(&k, bad).is_err());
    }
}
