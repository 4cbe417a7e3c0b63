//! Exhaustive reference computations for small inputs.
//!
//! Two independent routes to the exact optimal homologous cycle are provided:
//! scanning circumspheres of vertex subsets in order of radius, and
//! enumerating every cycle of the class. Both refuse to run beyond an
//! [`OracleBudget`].

use std::collections::HashSet;

use serde::Serialize;

use crate::complex::{distance, EmbeddedComplex, SubcomplexView};
use crate::error::{Error, Result};
use crate::filtration::{Death, Filtration, Interval};
use crate::optimize::check_cycle;
use crate::radius::{circumsphere, r_exact, r_v, SphereCertificate};
use crate::z2linalg::{solve_by_reduction, ChainVector, Reducer, Solution, Z2Matrix};

/// Caps on exhaustive enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OracleBudget {
    pub max_vertices: usize,
    pub max_simplices: usize,
    /// Largest dimension of a Z₂ space whose elements are enumerated.
    pub max_cycle_space_dim: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        Self { max_vertices: 12, max_simplices: 400, max_cycle_space_dim: 20 }
    }
}

impl OracleBudget {
    pub fn with_max_vertices(max_vertices: usize) -> Self {
        Self { max_vertices, ..Self::default() }
    }

    fn check_complex(&self, complex: &EmbeddedComplex) -> Result<()> {
        if complex.n_vertices() > self.max_vertices {
            return Err(Error::BudgetExceeded(format!(
                "{} vertices (limit {})",
                complex.n_vertices(),
                self.max_vertices
            )));
        }
        if complex.len() > self.max_simplices {
            return Err(Error::BudgetExceeded(format!(
                "{} simplices (limit {})",
                complex.len(),
                self.max_simplices
            )));
        }
        Ok(())
    }

    fn check_space(&self, what: &str, dim: usize) -> Result<()> {
        if dim > self.max_cycle_space_dim {
            return Err(Error::BudgetExceeded(format!(
                "{what} has dimension {dim} (limit {})",
                self.max_cycle_space_dim
            )));
        }
        Ok(())
    }
}

/// Exact optimum for a class: the smallest sphere whose induced complex
/// carries a homologous cycle.
#[derive(Clone, Debug)]
pub struct ExactOptimum {
    pub radius: f64,
    pub cycle: ChainVector,
    pub sphere: SphereCertificate,
}

/// Non-zero reduced columns: a basis of the column span.
fn span_basis(m: &Z2Matrix) -> Vec<Vec<usize>> {
    let mut r = Reducer::new(m.n_rows(), false);
    let mut out = Vec::new();
    for (j, c) in m.columns().iter().enumerate() {
        if r.push(c).is_some() {
            out.push(r.reduced_column(j).to_vec());
        }
    }
    out
}

/// Basis of `Z_p` of a view, extended to the parent's `p`-simplices.
fn cycle_basis(view: &SubcomplexView<'_>, p: usize) -> Vec<ChainVector> {
    let parent = view.parent();
    let members = view.members(p);
    let n = parent.n_simplices(p);
    if p == 0 {
        return members.iter().map(|&pos| ChainVector::from_sorted_unchecked(n, vec![pos])).collect();
    }
    let lower = view.members(p - 1);
    let mut r = Reducer::new(lower.len(), true);
    let mut out = Vec::new();
    for (k, &pos) in members.iter().enumerate() {
        let col: Vec<usize> = parent
            .facets(crate::complex::SimplexRef::new(p, pos))
            .iter()
            .map(|f| lower.binary_search(f).expect("face-closed view"))
            .collect();
        if r.push(&col).is_none() {
            let v = r.basis_change_column(k).unwrap();
            let support = v.iter().map(|&l| members[l]).collect();
            out.push(ChainVector::from_sorted_unchecked(n, support));
        }
    }
    out
}

/// Sum of `basis[i]` over the set bits of `mask`.
fn combination(n: usize, basis: &[Vec<usize>], mask: u64) -> ChainVector {
    let mut acc = ChainVector::zero(n);
    for (i, b) in basis.iter().enumerate() {
        if mask & (1 << i) != 0 {
            acc.add_assign(&ChainVector::from_sorted_unchecked(n, b.clone()));
        }
    }
    acc
}

/// Candidate spheres: circumspheres of every affinely independent subset of
/// at most `d + 1` vertices, sorted by radius.
fn candidate_spheres(complex: &EmbeddedComplex) -> Vec<SphereCertificate> {
    let n = complex.n_vertices();
    let d = complex.cloud().dim();
    let mut spheres = Vec::new();
    let mut subset = Vec::new();
    fn rec(
        complex: &EmbeddedComplex,
        start: usize,
        max: usize,
        subset: &mut Vec<usize>,
        out: &mut Vec<SphereCertificate>,
    ) {
        if !subset.is_empty() {
            let pts: Vec<&[f64]> = subset.iter().map(|&v| complex.cloud().point(v)).collect();
            if let Some(mut c) = circumsphere(&pts) {
                c.support = subset.clone();
                out.push(c);
            } else {
                // dependent subsets add nothing beyond their subsets
                return;
            }
        }
        if subset.len() == max {
            return;
        }
        for v in start..complex.n_vertices() {
            subset.push(v);
            rec(complex, v + 1, max, subset, out);
            subset.pop();
        }
    }
    rec(complex, 0, (d + 1).min(n), &mut subset, &mut spheres);
    spheres.sort_by(|a, b| a.radius.total_cmp(&b.radius).then(a.support.cmp(&b.support)));
    spheres
}

/// Exact optimal homologous cycle by scanning candidate spheres.
pub fn exact_optimal_homologous_cycle(
    complex: &EmbeddedComplex,
    p: usize,
    zeta: &ChainVector,
    budget: &OracleBudget,
) -> Result<ExactOptimum> {
    budget.check_complex(complex)?;
    check_cycle(complex, p, zeta)?;
    let n = complex.n_simplices(p);
    let boundaries = complex.boundaries(p);
    if solve_by_reduction(&boundaries, zeta)?.is_feasible() {
        let center = complex.cloud().point(0).to_vec();
        return Ok(ExactOptimum {
            radius: 0.0,
            cycle: ChainVector::zero(n),
            sphere: SphereCertificate { center, radius: 0.0, support: Vec::new() },
        });
    }
    let tol = complex.cloud().tolerance();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    for sphere in candidate_spheres(complex) {
        let inside: Vec<usize> = (0..complex.n_vertices())
            .filter(|&v| distance(complex.cloud().point(v), &sphere.center) <= sphere.radius + tol)
            .collect();
        if !seen.insert(inside.clone()) {
            continue;
        }
        let view = complex.induced_subcomplex(&inside);
        let cycles = cycle_basis(&view, p);
        if cycles.is_empty() {
            continue;
        }
        let system = Z2Matrix::from_chains(n, &cycles).hstack(&boundaries)?;
        if let Solution::Feasible(sel) = solve_by_reduction(&system, zeta)? {
            let mut cycle = ChainVector::zero(n);
            for &j in sel.iter().filter(|&&j| j < cycles.len()) {
                cycle.add_assign(&cycles[j]);
            }
            return Ok(ExactOptimum { radius: sphere.radius, cycle, sphere });
        }
    }
    Err(Error::Internal("no candidate sphere carries the class".into()))
}

/// Every cycle homologous to `zeta`: `zeta + span(B_p)`.
pub fn enumerate_class(
    complex: &EmbeddedComplex,
    p: usize,
    zeta: &ChainVector,
    budget: &OracleBudget,
) -> Result<Vec<ChainVector>> {
    check_cycle(complex, p, zeta)?;
    let basis = span_basis(&complex.boundaries(p));
    budget.check_space("B_p", basis.len())?;
    let n = complex.n_simplices(p);
    Ok((0..1u64 << basis.len())
        .map(|mask| zeta.sum(&combination(n, &basis, mask)))
        .collect())
}

/// Weight used to compare cycles in the basis oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Measure {
    /// Smallest enclosing sphere of the cycle's vertices.
    Exact,
    /// Minimum over all vertices `v` of `r_v`.
    Sites,
}

fn weigh(complex: &EmbeddedComplex, p: usize, cycle: &ChainVector, measure: Measure) -> f64 {
    if cycle.is_zero() {
        return 0.0;
    }
    match measure {
        Measure::Exact => r_exact(p, cycle, complex).expect("non-empty").radius,
        Measure::Sites => (0..complex.n_vertices())
            .map(|v| r_v(complex.cloud().point(v), p, cycle, complex).expect("non-empty"))
            .fold(f64::INFINITY, f64::min),
    }
}

/// A non-zero homology class with its minimal weight.
#[derive(Clone, Debug)]
pub struct ClassWeight {
    /// Coordinates in the oracle's homology basis.
    pub mask: u64,
    pub weight: f64,
    pub best_cycle: ChainVector,
}

/// All homology bases with their weights.
#[derive(Clone, Debug)]
pub struct ExactBasis {
    pub betti: usize,
    pub classes: Vec<ClassWeight>,
    /// Each basis as indices into `classes`, with its total weight.
    pub bases: Vec<(Vec<usize>, f64)>,
    pub optimum: f64,
}

impl ExactBasis {
    /// Sorted class weights of the lightest basis.
    pub fn optimal_weights(&self) -> Vec<f64> {
        let Some((b, _)) = self.bases.iter().min_by(|a, b| a.1.total_cmp(&b.1)) else {
            return Vec::new();
        };
        let mut w: Vec<f64> = b.iter().map(|&i| self.classes[i].weight).collect();
        w.sort_by(f64::total_cmp);
        w
    }
}

/// Homology basis of `H_p(K)` as cycles: cycles independent modulo boundaries.
pub fn homology_basis(complex: &EmbeddedComplex, p: usize) -> Vec<ChainVector> {
    let mut span = Reducer::new(complex.n_simplices(p), false);
    for c in complex.boundaries(p).columns() {
        span.push(c);
    }
    cycle_basis(&complex.full_view(), p)
        .into_iter()
        .filter(|z| span.push(z.support()).is_some())
        .collect()
}

fn independent(masks: &[u64]) -> bool {
    let mut pivots: Vec<u64> = Vec::new();
    for &m in masks {
        let mut x = m;
        for &p in &pivots {
            x = x.min(x ^ p);
        }
        if x == 0 {
            return false;
        }
        pivots.push(x);
        pivots.sort_unstable_by(|a, b| b.cmp(a));
    }
    true
}

/// Enumerates every homology basis of `H_p(K)` with class weights taken as the
/// minimum of `measure` over each class.
pub fn exact_min_basis(
    complex: &EmbeddedComplex,
    p: usize,
    measure: Measure,
    budget: &OracleBudget,
) -> Result<ExactBasis> {
    budget.check_complex(complex)?;
    let hom = homology_basis(complex, p);
    let betti = hom.len();
    let bnd = span_basis(&complex.boundaries(p));
    budget.check_space("H_p ⊕ B_p", betti + bnd.len())?;
    if betti > 5 {
        return Err(Error::BudgetExceeded(format!("betti number {betti} (limit 5)")));
    }
    let n = complex.n_simplices(p);
    let hom_cols: Vec<Vec<usize>> = hom.iter().map(|c| c.support().to_vec()).collect();
    let mut classes = Vec::new();
    for mask in 1..(1u64 << betti) {
        let rep = combination(n, &hom_cols, mask);
        let mut best: Option<(f64, ChainVector)> = None;
        for bmask in 0..(1u64 << bnd.len()) {
            let cycle = rep.sum(&combination(n, &bnd, bmask));
            let w = weigh(complex, p, &cycle, measure);
            if best.as_ref().is_none_or(|(bw, _)| w < *bw) {
                best = Some((w, cycle));
            }
        }
        let (weight, best_cycle) = best.unwrap();
        classes.push(ClassWeight { mask, weight, best_cycle });
    }
    let mut bases = Vec::new();
    let mut chosen = Vec::new();
    fn rec(
        classes: &[ClassWeight],
        start: usize,
        betti: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<(Vec<usize>, f64)>,
    ) {
        if chosen.len() == betti {
            let masks: Vec<u64> = chosen.iter().map(|&i| classes[i].mask).collect();
            if independent(&masks) {
                let w = chosen.iter().map(|&i| classes[i].weight).sum();
                out.push((chosen.clone(), w));
            }
            return;
        }
        for i in start..classes.len() {
            chosen.push(i);
            rec(classes, i + 1, betti, chosen, out);
            chosen.pop();
        }
    }
    rec(&classes, 0, betti, &mut chosen, &mut bases);
    let optimum = bases.iter().map(|b| b.1).fold(if betti == 0 { 0.0 } else { f64::INFINITY }, f64::min);
    Ok(ExactBasis { betti, classes, bases, optimum })
}

/// Reference optimum over the full representative set of a bar.
#[derive(Clone, Debug)]
pub struct ExactPersistentRep {
    pub n_representatives: usize,
    /// Minimum of `r_P` (all vertices as sites) over representatives.
    pub r_sites: f64,
    pub cycle_sites: ChainVector,
    /// Minimum of the exact radius over representatives.
    pub r_exact: f64,
    pub cycle_exact: ChainVector,
}

/// Whether `cycle` represents `interval`: it lies in `K_b`, contains the
/// creator, and (for a finite bar) bounds in `K_d` but not in `K_{d−1}`.
pub fn is_representative(filtration: &Filtration, interval: &Interval, cycle: &ChainVector) -> bool {
    let complex = filtration.complex();
    let p = interval.dim;
    if !complex.is_cycle(p, cycle).unwrap_or(false) || !cycle.contains(interval.creator.pos) {
        return false;
    }
    if !filtration.prefix(interval.birth).supports(p, cycle) {
        return false;
    }
    match interval.death {
        Death::Infinite => true,
        Death::Finite { index, .. } => {
            let before = filtration.prefix(index - 1).boundaries_extended(p);
            let at = filtration.prefix(index).boundaries_extended(p);
            let bounds = |m: &Z2Matrix| solve_by_reduction(m, cycle).map(|s| s.is_feasible()).unwrap_or(false);
            !bounds(&before) && bounds(&at)
        }
    }
}

/// Scans every cycle of `K_b` and keeps those that represent the bar.
pub fn exact_min_persistent_rep(
    filtration: &Filtration,
    interval: &Interval,
    budget: &OracleBudget,
) -> Result<ExactPersistentRep> {
    let complex = filtration.complex();
    budget.check_complex(complex)?;
    let p = interval.dim;
    let n = complex.n_simplices(p);
    let k_b = filtration.prefix(interval.birth);
    let z: Vec<Vec<usize>> = cycle_basis(&k_b, p).into_iter().map(|c| c.into_support()).collect();
    budget.check_space("Z_p(K_b)", z.len())?;
    let reducer_for = |i: usize| {
        let mut r = Reducer::new(n, false);
        for c in filtration.prefix(i).boundaries_extended(p).columns() {
            r.push(c);
        }
        r
    };
    let bounds = match interval.death {
        Death::Finite { index, .. } => Some((reducer_for(index - 1), reducer_for(index))),
        Death::Infinite => None,
    };
    let mut count = 0;
    let mut best_sites: Option<(f64, ChainVector)> = None;
    let mut best_exact: Option<(f64, ChainVector)> = None;
    for mask in 1..(1u64 << z.len()) {
        let cycle = combination(n, &z, mask);
        if !cycle.contains(interval.creator.pos) {
            continue;
        }
        if let Some((before, at)) = &bounds {
            if before.contains(cycle.support()) || !at.contains(cycle.support()) {
                continue;
            }
        }
        count += 1;
        let ws = weigh(complex, p, &cycle, Measure::Sites);
        let we = weigh(complex, p, &cycle, Measure::Exact);
        if best_sites.as_ref().is_none_or(|(b, _)| ws < *b) {
            best_sites = Some((ws, cycle.clone()));
        }
        if best_exact.as_ref().is_none_or(|(b, _)| we < *b) {
            best_exact = Some((we, cycle));
        }
    }
    let ((r_sites, cycle_sites), (r_exact, cycle_exact)) = best_sites
        .zip(best_exact)
        .ok_or_else(|| Error::InvalidInterval("no representative exists".into()))?;
    Ok(ExactPersistentRep { n_representatives: count, r_sites, cycle_sites, r_exact, cycle_exact })
}
