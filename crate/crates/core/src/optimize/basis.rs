use serde::Serialize;

use crate::complex::EmbeddedComplex;
use crate::error::{Error, Result};
use crate::exec;
use crate::filtration::site_ordering;
use crate::z2linalg::{ChainVector, Reducer};

use super::{Context, OptimalCycleResult, Options};

/// A homology basis with its summed `r_v` weight.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HomologyBasisResult {
    #[serde(skip)]
    pub cycles: Vec<OptimalCycleResult>,
    pub total_weight: f64,
}

struct Candidate {
    r: f64,
    site_rank: usize,
    within_site: usize,
    cycle: ChainVector,
}

/// Minimum `p`-homology basis with respect to `r_P`.
///
/// Pools the essential cycles of `D_v(K)` over all sites, sorts them by
/// `(r_v, site, ≺_v)` and greedily keeps every cycle whose class is
/// independent of `B_p(K)` and the cycles kept so far.
pub fn opt_homology_basis(complex: &EmbeddedComplex, p: usize, options: &Options) -> Result<HomologyBasisResult> {
    if p == 0 {
        return Err(Error::Unsupported("p > 0 for a homology basis".into()));
    }
    let sites = options.site_list(complex)?;
    let per_site = exec::map(options.execution, &sites, |&v| {
        let ordering = site_ordering(&complex.full_view(), complex.cloud().point(v));
        let essential = ordering.essential_cycles(complex, p);
        essential
            .cycles
            .into_iter()
            .zip(essential.kappa)
            .map(|(cycle, k)| (ordering.r_values[k], cycle))
            .collect::<Vec<_>>()
    });
    let betti = per_site[0].len();
    let mut pool: Vec<Candidate> = per_site
        .into_iter()
        .enumerate()
        .flat_map(|(site_rank, list)| {
            list.into_iter()
                .enumerate()
                .map(move |(within_site, (r, cycle))| Candidate { r, site_rank, within_site, cycle })
        })
        .collect();
    pool.sort_by(|a, b| {
        a.r.total_cmp(&b.r)
            .then(a.site_rank.cmp(&b.site_rank))
            .then(a.within_site.cmp(&b.within_site))
    });

    let mut span = Reducer::new(complex.n_simplices(p), false);
    for col in complex.boundaries(p).columns() {
        span.push(col);
    }
    let mut cycles = Vec::with_capacity(betti);
    for cand in pool {
        if cycles.len() == betti {
            break;
        }
        if span.push(cand.cycle.support()).is_some() {
            let rank = cycles.len();
            cycles.push(OptimalCycleResult::new(
                complex,
                p,
                cand.cycle,
                sites[cand.site_rank],
                cand.r,
                Context::Basis { rank },
            ));
        }
    }
    if cycles.len() != betti {
        return Err(Error::Internal(format!("admitted {} of {betti} basis cycles", cycles.len())));
    }
    let total_weight = cycles.iter().map(|c| c.r_v).sum();
    Ok(HomologyBasisResult { cycles, total_weight })
}
