use crate::error::{Error, Result};
use crate::exec::{self, argmin_by_key};
use crate::filtration::{compute_persistence, site_ordering, Death, Filtration, Interval};
use crate::radius::r_v_or_zero;
use crate::z2linalg::{solve_with, ChainVector, Reducer, Solution};

use super::{Context, OptimalCycleResult, Options};

/// The per-site search for a minimal representative of one bar.
///
/// Holds the essential cycles `Y` of `D_v(K_b)` after the creator has been
/// eliminated from all but the first cycle containing it, and the reduced
/// boundary matrix of `K_d`.
pub struct PersistentSiteSearch<'f> {
    filtration: &'f Filtration,
    interval: Interval,
    site: usize,
    /// `Y_α`: the first essential cycle containing the creator.
    anchor: ChainVector,
    /// `Y'`: the remaining essential cycles, none containing the creator, in `≺_v` order.
    others: Vec<ChainVector>,
    boundaries: Option<Reducer>,
}

impl<'f> PersistentSiteSearch<'f> {
    pub fn new(filtration: &'f Filtration, interval: &Interval, site: usize) -> Result<Self> {
        let complex = filtration.complex();
        let p = interval.dim;
        let creator = interval.creator;
        let k_b = filtration.prefix(interval.birth);
        let ordering = site_ordering(&k_b, complex.cloud().point(site));
        let mut cycles = ordering.essential_cycles(complex, p).cycles;
        let alpha = cycles
            .iter()
            .position(|c| c.contains(creator.pos))
            .ok_or_else(|| Error::Internal("creator simplex absent from every essential cycle".into()))?;
        let anchor = cycles[alpha].clone();
        for (k, c) in cycles.iter_mut().enumerate() {
            if k != alpha && c.contains(creator.pos) {
                c.add_assign(&anchor);
            }
        }
        cycles.remove(alpha);

        let boundaries = match interval.death {
            Death::Finite { index, .. } => {
                let k_d = filtration.prefix(index);
                let mut r = Reducer::new(complex.n_simplices(p), true);
                for col in k_d.boundaries_extended(p).columns() {
                    r.push(col);
                }
                Some(r)
            }
            Death::Infinite => None,
        };
        Ok(Self { filtration, interval: *interval, site, anchor, others: cycles, boundaries })
    }

    /// Number of candidate cycles in `Y'`.
    pub fn n_candidates(&self) -> usize {
        self.others.len()
    }

    /// Solves `[∂_d | Y'_{≤i}]·x = Y_α`, returning the selected `Y'` indices.
    ///
    /// For an essential bar there is no `∂_d`; only `i = 0` with the empty
    /// selection is accepted, since any cycle of `K_b` through the creator
    /// represents the bar.
    pub fn solve_prefix(&self, i: usize) -> Option<Vec<usize>> {
        let Some(base) = &self.boundaries else {
            return (i == 0).then(Vec::new);
        };
        let n_d = base.n_cols();
        let mut reducer = base.clone();
        for c in &self.others[..i] {
            reducer.push(c.support());
        }
        match solve_with(&mut reducer, self.anchor.support()) {
            Solution::Feasible(sel) => Some(sel.into_iter().filter(|&j| j >= n_d).map(|j| j - n_d).collect()),
            Solution::Infeasible => None,
        }
    }

    /// Smallest feasible prefix length, found by binary search.
    pub fn smallest_prefix(&self) -> Result<usize> {
        if self.boundaries.is_none() {
            return Ok(0);
        }
        let m = self.others.len();
        if self.solve_prefix(m).is_none() {
            return Err(Error::Internal("bar has no representative through its creator".into()));
        }
        let (mut lo, mut hi) = (0, m);
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            if self.solve_prefix(mid).is_some() {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        Ok(lo)
    }

    /// The minimal-`r_v` representative and its radius.
    pub fn solve(&self) -> Result<(ChainVector, f64)> {
        let i = self.smallest_prefix()?;
        let selection = self.solve_prefix(i).expect("smallest prefix is feasible");
        let mut cycle = self.anchor.clone();
        for j in selection {
            cycle.add_assign(&self.others[j]);
        }
        let complex = self.filtration.complex();
        let r = r_v_or_zero(complex.cloud().point(self.site), self.interval.dim, &cycle, complex);
        Ok((cycle, r))
    }
}

/// Minimal-`r_v` representative of a bar for one site.
pub fn opt_pers_cycle_site(filtration: &Filtration, interval: &Interval, site: usize) -> Result<OptimalCycleResult> {
    let complex = filtration.complex();
    if site >= complex.n_vertices() {
        return Err(Error::IndexOutOfRange { index: site, bound: complex.n_vertices() });
    }
    let (cycle, r) = PersistentSiteSearch::new(filtration, interval, site)?.solve()?;
    Ok(OptimalCycleResult::new(complex, interval.dim, cycle, site, r, Context::Persistent { interval: *interval }))
}

fn check_interval(filtration: &Filtration, interval: &Interval) -> Result<()> {
    let barcode = compute_persistence(filtration, interval.dim).barcode;
    match barcode.find(interval.birth) {
        Some(found) if found.death.index() == interval.death.index() && found.creator == interval.creator => Ok(()),
        _ => Err(Error::InvalidInterval(format!(
            "[{}, {:?}) in dimension {}",
            interval.birth,
            interval.death.index(),
            interval.dim
        ))),
    }
}

fn best_over_sites(filtration: &Filtration, interval: &Interval, options: &Options) -> Result<OptimalCycleResult> {
    let complex = filtration.complex();
    let sites = options.site_list(complex)?;
    let per_site: Vec<(ChainVector, f64)> = exec::map(options.execution, &sites, |&v| {
        PersistentSiteSearch::new(filtration, interval, v)?.solve()
    })
    .into_iter()
    .collect::<Result<_>>()?;
    let best = argmin_by_key(&per_site, |(_, r)| *r).expect("non-empty site list");
    let (cycle, r) = per_site.into_iter().nth(best).unwrap();
    Ok(OptimalCycleResult::new(
        complex,
        interval.dim,
        cycle,
        sites[best],
        r,
        Context::Persistent { interval: *interval },
    ))
}

/// Minimal-`r_P` representative of a bar of `H_p` along the filtration.
pub fn opt_pers_hom_rep(filtration: &Filtration, interval: &Interval, options: &Options) -> Result<OptimalCycleResult> {
    check_interval(filtration, interval)?;
    best_over_sites(filtration, interval, options)
}

/// Minimal representatives for several bars of one filtration. Bars run in
/// parallel; the sites of each bar are scanned sequentially.
pub fn opt_pers_hom_reps(
    filtration: &Filtration,
    intervals: &[Interval],
    options: &Options,
) -> Result<Vec<OptimalCycleResult>> {
    let mut barcodes = std::collections::HashMap::new();
    for iv in intervals {
        let barcode = barcodes.entry(iv.dim).or_insert_with(|| compute_persistence(filtration, iv.dim).barcode);
        if barcode.find(iv.birth) != Some(iv) {
            return Err(Error::InvalidInterval(format!("[{}, {:?}) in dimension {}", iv.birth, iv.death.index(), iv.dim)));
        }
    }
    let inner = Options { sites: options.sites.clone(), execution: crate::exec::Execution::Sequential };
    exec::map(options.execution, intervals, |iv| best_over_sites(filtration, iv, &inner))
        .into_iter()
        .collect()
}

/// One minimal representative per bar of `H_p`; together they form a
/// minimum persistent basis under `r_P`.
pub fn opt_persistent_basis(filtration: &Filtration, p: usize, options: &Options) -> Result<Vec<OptimalCycleResult>> {
    let barcode = compute_persistence(filtration, p).barcode;
    let inner = Options { sites: options.sites.clone(), execution: crate::exec::Execution::Sequential };
    exec::map(options.execution, &barcode.intervals, |iv| best_over_sites(filtration, iv, &inner))
        .into_iter()
        .collect()
}
