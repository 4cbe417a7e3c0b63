//! Simplexwise filtrations, the distance-to-site order, and persistence.
//!
//! All algorithmic logic works with filtration indices. Values are carried
//! along for reporting only. Ties in every ordering are broken by
//! `(dimension, lexicographic vertex tuple)`.

use serde::Serialize;

use crate::complex::{distance, EmbeddedComplex, PointCloud, SimplexRef, SubcomplexView};
use crate::error::{Error, Result};
use crate::radius::simplex_radius;
use crate::z2linalg::{ChainVector, Reducer, Z2Matrix};

/// A simplexwise filtration: an order on all simplices of a complex in which
/// every simplex follows its faces, with non-decreasing values.
#[derive(Clone, Debug)]
pub struct Filtration {
    complex: EmbeddedComplex,
    order: Vec<SimplexRef>,
    values: Vec<f64>,
    index: Vec<Vec<usize>>,
}

impl Filtration {
    pub fn new(complex: EmbeddedComplex, order: Vec<SimplexRef>, values: Vec<f64>) -> Result<Self> {
        if order.len() != complex.len() || values.len() != order.len() {
            return Err(Error::InvalidFiltration(format!(
                "order has {} entries and {} values for {} simplices",
                order.len(),
                values.len(),
                complex.len()
            )));
        }
        let mut index: Vec<Vec<usize>> =
            (0..=complex.max_dim()).map(|p| vec![usize::MAX; complex.n_simplices(p)]).collect();
        for (i, s) in order.iter().enumerate() {
            let slot = index
                .get_mut(s.dim)
                .and_then(|l| l.get_mut(s.pos))
                .ok_or_else(|| Error::InvalidFiltration(format!("unknown simplex {s:?}")))?;
            if *slot != usize::MAX {
                return Err(Error::InvalidFiltration(format!(
                    "simplex {:?} appears twice",
                    complex.simplex(*s)
                )));
            }
            *slot = i;
        }
        for (i, s) in order.iter().enumerate() {
            if s.dim > 0 && complex.facets(*s).iter().any(|&f| index[s.dim - 1][f] > i) {
                return Err(Error::InvalidFiltration(format!(
                    "simplex {:?} precedes one of its faces",
                    complex.simplex(*s)
                )));
            }
        }
        if let Some(i) = values.windows(2).position(|w| w[0].is_nan() || w[1].is_nan() || w[0] > w[1]) {
            return Err(Error::InvalidFiltration(format!(
                "values decrease at index {}: {} > {}",
                i + 1,
                values[i],
                values[i + 1]
            )));
        }
        Ok(Self { complex, order, values, index })
    }

    /// Orders simplices by `(value, dimension, lexicographic)`.
    pub fn from_values(complex: EmbeddedComplex, value: impl Fn(SimplexRef) -> f64) -> Result<Self> {
        let mut keyed: Vec<(f64, SimplexRef)> = complex.iter().map(|s| (value(s), s)).collect();
        keyed.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        let (values, order) = keyed.into_iter().unzip();
        Self::new(complex, order, values)
    }

    pub fn complex(&self) -> &EmbeddedComplex {
        &self.complex
    }

    pub fn order(&self) -> &[SimplexRef] {
        &self.order
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Filtration index of a simplex.
    pub fn index_of(&self, s: SimplexRef) -> usize {
        self.index[s.dim][s.pos]
    }

    pub fn simplex_at(&self, i: usize) -> SimplexRef {
        self.order[i]
    }

    pub fn value_at(&self, i: usize) -> f64 {
        self.values[i]
    }

    /// `K_i`: the simplices with filtration index at most `i`.
    pub fn prefix(&self, i: usize) -> SubcomplexView<'_> {
        let members = self
            .index
            .iter()
            .map(|l| l.iter().map(|&j| j <= i).collect())
            .collect();
        SubcomplexView::from_members(&self.complex, members).expect("filtration prefixes are face-closed")
    }
}

/// Vietoris–Rips filtration up to `max_scale` and simplex dimension `max_dim`.
pub fn rips_filtration(cloud: PointCloud, max_scale: f64, max_dim: usize) -> Result<Filtration> {
    if cloud.is_empty() {
        return Err(Error::InvalidPoints("empty point cloud".into()));
    }
    if max_scale.is_nan() || max_scale <= 0.0 || max_dim == 0 {
        return Err(Error::InvalidFiltration("rips needs max_scale > 0 and max_dim >= 1".into()));
    }
    let n = cloud.len();
    let mut neighbors: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, list) in neighbors.iter_mut().enumerate() {
        list.extend((i + 1..n).filter(|&j| distance(cloud.point(i), cloud.point(j)) <= max_scale));
    }
    let mut cliques = Vec::new();
    for v in 0..n {
        let mut current = vec![v];
        expand_cliques(&neighbors, &mut current, &neighbors[v], max_dim + 1, &mut cliques);
    }
    let complex = EmbeddedComplex::from_simplices(cloud, cliques)?;
    let diam = |s: SimplexRef| {
        let vs = complex.simplex(s);
        let mut d = 0.0_f64;
        for (a, &u) in vs.iter().enumerate() {
            for &w in &vs[a + 1..] {
                d = d.max(distance(complex.cloud().point(u), complex.cloud().point(w)));
            }
        }
        d
    };
    let values: Vec<Vec<f64>> = (0..=complex.max_dim())
        .map(|p| (0..complex.n_simplices(p)).map(|pos| diam(SimplexRef::new(p, pos))).collect())
        .collect();
    Filtration::from_values(complex, |s| values[s.dim][s.pos])
}

fn expand_cliques(
    neighbors: &[Vec<usize>],
    current: &mut Vec<usize>,
    candidates: &[usize],
    max_size: usize,
    out: &mut Vec<Vec<usize>>,
) {
    if current.len() > 1 {
        out.push(current.clone());
    }
    if current.len() == max_size {
        return;
    }
    for (i, &c) in candidates.iter().enumerate() {
        let next: Vec<usize> = candidates[i + 1..]
            .iter()
            .copied()
            .filter(|w| neighbors[c].binary_search(w).is_ok())
            .collect();
        current.push(c);
        expand_cliques(neighbors, current, &next, max_size, out);
        current.pop();
    }
}

/// Lower-star filtration of a vertex function: a simplex enters at the
/// largest value among its vertices.
pub fn lower_star_filtration(complex: EmbeddedComplex, f: &[f64]) -> Result<Filtration> {
    if f.len() != complex.n_vertices() {
        return Err(Error::DimensionMismatch { expected: complex.n_vertices(), found: f.len() });
    }
    if f.iter().any(|x| !x.is_finite()) {
        return Err(Error::InvalidFiltration("non-finite vertex value".into()));
    }
    let values: Vec<Vec<f64>> = (0..=complex.max_dim())
        .map(|p| {
            complex
                .simplices(p)
                .iter()
                .map(|s| s.iter().map(|&v| f[v]).fold(f64::NEG_INFINITY, f64::max))
                .collect()
        })
        .collect();
    Filtration::from_values(complex, |s| values[s.dim][s.pos])
}

/// The order `≺_v` on a (sub)complex: by distance `r_v(σ)` of the farthest
/// vertex from the site, faces before cofaces, then `(dimension, lexicographic)`.
#[derive(Clone, Debug)]
pub struct SiteOrdering {
    pub site: Vec<f64>,
    pub order: Vec<SimplexRef>,
    pub r_values: Vec<f64>,
}

pub fn site_ordering(view: &SubcomplexView<'_>, site: &[f64]) -> SiteOrdering {
    let complex = view.parent();
    let vertex_dist: Vec<f64> = (0..complex.n_vertices())
        .map(|v| distance(complex.cloud().point(v), site))
        .collect();
    let mut keyed: Vec<(f64, SimplexRef)> = view
        .iter()
        .map(|s| {
            let r = complex.simplex(s).iter().map(|&v| vertex_dist[v]).fold(0.0, f64::max);
            (r, s)
        })
        .collect();
    keyed.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    debug_assert!(keyed
        .iter()
        .all(|(r, s)| *r == simplex_radius(complex, *s, site)));
    let (r_values, order) = keyed.into_iter().unzip();
    SiteOrdering { site: site.to_vec(), order, r_values }
}

/// Death of an interval.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub enum Death {
    Finite { index: usize, value: f64, destroyer: SimplexRef },
    Infinite,
}

impl Death {
    pub fn index(&self) -> Option<usize> {
        match self {
            Death::Finite { index, .. } => Some(*index),
            Death::Infinite => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Death::Finite { .. })
    }
}

/// One bar `[b, d)` of a `dim`-barcode, in filtration indices.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Interval {
    pub dim: usize,
    pub birth: usize,
    pub birth_value: f64,
    pub creator: SimplexRef,
    pub death: Death,
}

impl Interval {
    /// Whether the class is alive in `K_i`.
    pub fn alive_at(&self, i: usize) -> bool {
        self.birth <= i && self.death.index().is_none_or(|d| i < d)
    }

    /// Value persistence, infinite for essential bars.
    pub fn persistence(&self) -> f64 {
        match self.death {
            Death::Finite { value, .. } => value - self.birth_value,
            Death::Infinite => f64::INFINITY,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Barcode {
    pub intervals: Vec<Interval>,
}

impl Barcode {
    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Number of bars alive in `K_i`.
    pub fn betti_at(&self, i: usize) -> usize {
        self.intervals.iter().filter(|iv| iv.alive_at(i)).count()
    }

    /// Number of essential bars, i.e. the Betti number of the whole complex.
    pub fn betti(&self) -> usize {
        self.intervals.iter().filter(|iv| !iv.death.is_finite()).count()
    }

    /// Bars whose birth and death values differ, as `(birth, death)` value
    /// pairs with `None` for infinity.
    pub fn value_bars(&self) -> Vec<(f64, Option<f64>)> {
        self.intervals
            .iter()
            .filter(|iv| iv.persistence() > 0.0)
            .map(|iv| match iv.death {
                Death::Finite { value, .. } => (iv.birth_value, Some(value)),
                Death::Infinite => (iv.birth_value, None),
            })
            .collect()
    }

    pub fn find(&self, birth: usize) -> Option<&Interval> {
        self.intervals.iter().find(|iv| iv.birth == birth)
    }
}

/// A positive `p`-simplex of an ordered reduction.
#[derive(Clone, Debug)]
pub(crate) struct Creator {
    /// Position in the order.
    pub index: usize,
    pub simplex: SimplexRef,
    /// Basis-change column at the creator, in canonical coordinates.
    pub cycle: ChainVector,
    pub death: Option<Destroyer>,
}

#[derive(Clone, Debug)]
pub(crate) struct Destroyer {
    pub index: usize,
    pub simplex: SimplexRef,
    /// Reduced boundary column of the destroyer, in canonical coordinates.
    pub reduced: ChainVector,
}

/// Standard reduction of the `p` and `p+1` columns of a simplexwise order
/// over (a subcomplex of) `complex`. Creators are returned in order.
pub(crate) fn reduce_order(complex: &EmbeddedComplex, order: &[SimplexRef], p: usize) -> Vec<Creator> {
    let n_p = complex.n_simplices(p);
    let mut rank_p = vec![usize::MAX; n_p];
    let mut p_simplices: Vec<(usize, SimplexRef)> = Vec::new();
    let mut rank_lower = vec![usize::MAX; if p > 0 { complex.n_simplices(p - 1) } else { 0 }];
    let mut n_lower = 0;
    let mut upper: Vec<(usize, SimplexRef)> = Vec::new();
    for (i, &s) in order.iter().enumerate() {
        if s.dim == p {
            rank_p[s.pos] = p_simplices.len();
            p_simplices.push((i, s));
        } else if p > 0 && s.dim == p - 1 {
            rank_lower[s.pos] = n_lower;
            n_lower += 1;
        } else if s.dim == p + 1 {
            upper.push((i, s));
        }
    }
    let to_canonical = |local: &[usize]| -> ChainVector {
        let mut support: Vec<usize> = local.iter().map(|&k| p_simplices[k].1.pos).collect();
        support.sort_unstable();
        ChainVector::from_sorted_unchecked(n_p, support)
    };

    let mut creators: Vec<Creator> = Vec::new();
    let mut creator_of_rank = vec![usize::MAX; p_simplices.len()];
    if p == 0 {
        for (k, &(index, simplex)) in p_simplices.iter().enumerate() {
            creator_of_rank[k] = creators.len();
            creators.push(Creator { index, simplex, cycle: to_canonical(&[k]), death: None });
        }
    } else {
        let mut reducer = Reducer::new(n_lower, true);
        for (k, &(index, simplex)) in p_simplices.iter().enumerate() {
            let mut col: Vec<usize> = complex.facets(simplex).iter().map(|&f| rank_lower[f]).collect();
            col.sort_unstable();
            if reducer.push(&col).is_none() {
                let v = reducer.basis_change_column(k).expect("tracked");
                creator_of_rank[k] = creators.len();
                creators.push(Creator { index, simplex, cycle: to_canonical(v), death: None });
            }
        }
    }

    let mut reducer = Reducer::new(p_simplices.len(), false);
    for (index, simplex) in upper {
        let mut col: Vec<usize> = complex.facets(simplex).iter().map(|&f| rank_p[f]).collect();
        col.sort_unstable();
        let j = reducer.n_cols();
        if let Some(l) = reducer.push(&col) {
            let c = creator_of_rank[l];
            debug_assert!(c != usize::MAX, "low of a reduced column must be a positive simplex");
            creators[c].death = Some(Destroyer { index, simplex, reduced: to_canonical(reducer.reduced_column(j)) });
        }
    }
    creators
}

/// Essential `p`-cycles of an order, sorted by their last simplex.
#[derive(Clone, Debug)]
pub struct EssentialCycles {
    pub cycles: Vec<ChainVector>,
    /// Order index of each cycle's last simplex `κ(ζ)`.
    pub kappa: Vec<usize>,
}

impl EssentialCycles {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }
}

pub(crate) fn essential_cycles(complex: &EmbeddedComplex, order: &[SimplexRef], p: usize) -> EssentialCycles {
    let (kappa, cycles) = reduce_order(complex, order, p)
        .into_iter()
        .filter(|c| c.death.is_none())
        .map(|c| (c.index, c.cycle))
        .unzip();
    EssentialCycles { cycles, kappa }
}

impl SiteOrdering {
    /// Essential `p`-cycles of `D_v`, ordered by `≺_v`.
    pub fn essential_cycles(&self, complex: &EmbeddedComplex, p: usize) -> EssentialCycles {
        essential_cycles(complex, &self.order, p)
    }
}

/// Barcode of `H_p` with cycle data.
#[derive(Clone, Debug)]
pub struct Persistence {
    pub barcode: Barcode,
    /// Essential cycles as columns over canonical `p`-simplices, ordered by creator.
    pub essential_cycles: Z2Matrix,
    /// One representative per interval, parallel to `barcode.intervals`.
    pub representatives: Vec<ChainVector>,
}

/// Persistent homology of `H_p` along a filtration.
///
/// Finite bars are represented by the reduced boundary column of their
/// destroyer; essential bars by the basis-change column of their creator.
pub fn compute_persistence(f: &Filtration, p: usize) -> Persistence {
    let complex = f.complex();
    let creators = reduce_order(complex, f.order(), p);
    let mut intervals = Vec::with_capacity(creators.len());
    let mut representatives = Vec::with_capacity(creators.len());
    let mut essential = Z2Matrix::new(complex.n_simplices(p));
    for c in creators {
        let death = match &c.death {
            Some(d) => Death::Finite { index: d.index, value: f.value_at(d.index), destroyer: d.simplex },
            None => Death::Infinite,
        };
        intervals.push(Interval { dim: p, birth: c.index, birth_value: f.value_at(c.index), creator: c.simplex, death });
        match c.death {
            Some(d) => representatives.push(d.reduced),
            None => {
                essential.push_chain(&c.cycle);
                representatives.push(c.cycle);
            }
        }
    }
    Persistence { barcode: Barcode { intervals }, essential_cycles: essential, representatives }
}
