//! Path-swapping post-process for 1-cycles.
//!
//! Replaces an arc of the cycle by a shorter edge path between its endpoints
//! when the two are homologous. Paths are restricted to the vertices inside
//! the result's `r_v` ball around its site, so `r_v` never grows.

use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::complex::{distance, EmbeddedComplex};
use crate::error::{Error, Result};
use crate::radius::r_v_or_zero;
use crate::z2linalg::{canonicalize, ChainVector, Reducer};

use super::{OptimalCycleResult, Shortening};

const MAX_ITERATIONS: usize = 50;

/// Closed walk through one connected component of a 1-cycle.
struct Circuit {
    vertices: Vec<usize>,
    edges: Vec<usize>,
}

struct BallGraph<'a> {
    complex: &'a EmbeddedComplex,
    adjacency: Vec<Vec<usize>>,
    trees: HashMap<usize, Vec<Option<usize>>>,
}

impl<'a> BallGraph<'a> {
    fn new(complex: &'a EmbeddedComplex, center: &[f64], radius: f64) -> Self {
        let inside: Vec<bool> = (0..complex.n_vertices())
            .map(|v| distance(complex.cloud().point(v), center) <= radius)
            .collect();
        let mut adjacency = vec![Vec::new(); complex.n_vertices()];
        for e in complex.simplices(1) {
            if inside[e[0]] && inside[e[1]] {
                adjacency[e[0]].push(e[1]);
                adjacency[e[1]].push(e[0]);
            }
        }
        for a in &mut adjacency {
            a.sort_unstable();
        }
        Self { complex, adjacency, trees: HashMap::new() }
    }

    /// Fewest-edge path from `from` to `to` as canonical edge positions.
    fn shortest_path(&mut self, from: usize, to: usize) -> Option<Vec<usize>> {
        let adjacency = &self.adjacency;
        let parent = self.trees.entry(from).or_insert_with(|| {
            let mut parent = vec![None; adjacency.len()];
            parent[from] = Some(from);
            let mut queue = VecDeque::from([from]);
            while let Some(u) = queue.pop_front() {
                for &w in &adjacency[u] {
                    if parent[w].is_none() {
                        parent[w] = Some(u);
                        queue.push_back(w);
                    }
                }
            }
            parent
        });
        parent[to]?;
        let mut edges = Vec::new();
        let mut cur = to;
        while cur != from {
            let prev = parent[cur].unwrap();
            edges.push(self.complex.index_of(&[prev, cur]).expect("graph edge").pos);
            cur = prev;
        }
        Some(edges)
    }
}

fn circuits(complex: &EmbeddedComplex, cycle: &ChainVector) -> Vec<Circuit> {
    let mut incident: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for &e in cycle.support() {
        let s = &complex.simplices(1)[e];
        incident.entry(s[0]).or_default().push((s[1], e));
        incident.entry(s[1]).or_default().push((s[0], e));
    }
    for list in incident.values_mut() {
        list.sort_unstable();
    }
    let mut used: HashMap<usize, bool> = cycle.support().iter().map(|&e| (e, false)).collect();
    let mut next_slot: HashMap<usize, usize> = HashMap::new();
    let mut out = Vec::new();
    let starts: Vec<usize> = incident.keys().copied().collect();
    for start in starts {
        let has_unused = incident[&start].iter().any(|(_, e)| !used[e]);
        if !has_unused {
            continue;
        }
        // Hierholzer
        let mut stack: Vec<(usize, Option<usize>)> = vec![(start, None)];
        let mut walk: Vec<(usize, Option<usize>)> = Vec::new();
        while let Some(&(u, via)) = stack.last() {
            let slot = next_slot.entry(u).or_insert(0);
            let list = &incident[&u];
            while *slot < list.len() && used[&list[*slot].1] {
                *slot += 1;
            }
            if *slot < list.len() {
                let (w, e) = list[*slot];
                used.insert(e, true);
                stack.push((w, Some(e)));
            } else {
                walk.push((u, via));
                stack.pop();
            }
        }
        walk.reverse();
        let vertices = walk.iter().map(|&(v, _)| v).collect::<Vec<_>>();
        let edges = walk.iter().filter_map(|&(_, e)| e).collect::<Vec<_>>();
        out.push(Circuit { vertices: vertices[..vertices.len() - 1].to_vec(), edges });
    }
    out
}

/// Shortens a 1-cycle by homologous path swaps until no swap applies or the
/// iteration cap is reached.
///
/// Candidate arcs are all sub-walks of at least two edges, tried longest first;
/// the first swap that strictly reduces the edge count and whose difference
/// with the original arc bounds in the complex is applied.
pub fn shorten_cycle(result: &OptimalCycleResult, complex: &EmbeddedComplex) -> Result<OptimalCycleResult> {
    if result.dim != 1 {
        return Err(Error::Unsupported("1-cycles for shortening".into()));
    }
    let edges_before = result.cycle.weight();
    let mut out = result.clone();
    if result.cycle.is_zero() {
        out.shortening = Some(Shortening { edges_before, edges_after: 0, iterations: 0 });
        return Ok(out);
    }
    let n_edges = complex.n_simplices(1);
    let mut boundaries = Reducer::new(n_edges, false);
    for col in complex.boundaries(1).columns() {
        boundaries.push(col);
    }
    let center = complex.cloud().point(result.site);
    let mut graph = BallGraph::new(complex, center, result.r_v);

    let mut cycle = result.cycle.clone();
    let mut iterations = 0;
    while iterations < MAX_ITERATIONS {
        let Some(next) = improve_once(complex, &cycle, &mut graph, &boundaries) else { break };
        cycle = next;
        iterations += 1;
    }
    let r = r_v_or_zero(center, 1, &cycle, complex);
    let mut shortened = OptimalCycleResult::new(complex, 1, cycle, result.site, r, result.context.clone());
    shortened.shortening = Some(Shortening { edges_before, edges_after: shortened.cycle.weight(), iterations });
    Ok(shortened)
}

fn improve_once(
    complex: &EmbeddedComplex,
    cycle: &ChainVector,
    graph: &mut BallGraph<'_>,
    boundaries: &Reducer,
) -> Option<ChainVector> {
    let walks = circuits(complex, cycle);
    let mut candidates: Vec<(usize, usize, usize)> = Vec::new();
    for (w, c) in walks.iter().enumerate() {
        let len = c.edges.len();
        for arc in 2..len {
            for start in 0..len {
                candidates.push((arc, w, start));
            }
        }
    }
    candidates.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
    for (arc, w, start) in candidates {
        let c = &walks[w];
        let len = c.edges.len();
        let from = c.vertices[start];
        let to = c.vertices[(start + arc) % len];
        if from == to {
            continue;
        }
        let Some(path) = graph.shortest_path(from, to) else { continue };
        if path.len() >= arc {
            continue;
        }
        let arc_edges: Vec<usize> = (0..arc).map(|k| c.edges[(start + k) % len]).collect();
        let mut diff = arc_edges;
        diff.extend(path);
        let diff = canonicalize(diff);
        if diff.is_empty() || !boundaries.contains(&diff) {
            continue;
        }
        let swapped = cycle.sum(&ChainVector::from_sorted_unchecked(complex.n_simplices(1), diff));
        if swapped.weight() < cycle.weight() {
            return Some(swapped);
        }
    }
    None
}
