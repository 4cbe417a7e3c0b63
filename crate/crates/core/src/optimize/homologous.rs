use crate::complex::EmbeddedComplex;
use crate::error::{Error, Result};
use crate::exec::{self, argmin_by_key};
use crate::filtration::site_ordering;
use crate::radius::r_v_or_zero;
use crate::z2linalg::{solve_by_reduction, ChainVector, Solution, Z2Matrix};

use super::{check_cycle, Context, OptimalCycleResult, Options};

/// Minimizes `r_v` over the class of `zeta` for one fixed site.
///
/// The essential cycles of `D_v(K)`, sorted by `≺_v`, together with `B_p(K)`
/// span `Z_p(K)`. Writing `zeta` in that basis and keeping only the essential
/// part gives a homologous cycle whose last simplex is as early as possible,
/// which minimizes `r_v`. A trivial class yields the empty cycle.
pub fn optimal_hom_cycle_for_site(
    complex: &EmbeddedComplex,
    p: usize,
    zeta: &ChainVector,
    site: usize,
) -> Result<OptimalCycleResult> {
    check_cycle(complex, p, zeta)?;
    if site >= complex.n_vertices() {
        return Err(Error::IndexOutOfRange { index: site, bound: complex.n_vertices() });
    }
    let (cycle, r) = for_site(complex, p, zeta, site)?;
    Ok(OptimalCycleResult::new(complex, p, cycle, site, r, Context::Localize))
}

fn for_site(complex: &EmbeddedComplex, p: usize, zeta: &ChainVector, site: usize) -> Result<(ChainVector, f64)> {
    let point = complex.cloud().point(site);
    let ordering = site_ordering(&complex.full_view(), point);
    let essential = ordering.essential_cycles(complex, p);
    let m = essential.len();
    let system = Z2Matrix::from_chains(complex.n_simplices(p), &essential.cycles).hstack(&complex.boundaries(p))?;
    let selected = match solve_by_reduction(&system, zeta)? {
        Solution::Feasible(s) => s,
        Solution::Infeasible => {
            return Err(Error::Internal("essential cycles and boundaries do not span the cycle space".into()))
        }
    };
    let mut cycle = ChainVector::zero(complex.n_simplices(p));
    let mut last = None;
    for &j in selected.iter().filter(|&&j| j < m) {
        cycle.add_assign(&essential.cycles[j]);
        last = Some(j);
    }
    let r = last.map_or(0.0, |j| ordering.r_values[essential.kappa[j]]);
    debug_assert_eq!(r, r_v_or_zero(point, p, &cycle, complex));
    Ok((cycle, r))
}

/// Minimizes `r_P` over the class of `zeta`: the per-site optimum, minimized
/// over all sites. Ties go to the earliest site in the site list.
pub fn opt_homologous_cycle(
    complex: &EmbeddedComplex,
    p: usize,
    zeta: &ChainVector,
    options: &Options,
) -> Result<OptimalCycleResult> {
    check_cycle(complex, p, zeta)?;
    let sites = options.site_list(complex)?;
    let per_site: Vec<(ChainVector, f64)> = exec::map(options.execution, &sites, |&v| for_site(complex, p, zeta, v))
        .into_iter()
        .collect::<Result<_>>()?;
    let best = argmin_by_key(&per_site, |(_, r)| *r).expect("non-empty site list");
    let (cycle, r) = per_site.into_iter().nth(best).unwrap();
    Ok(OptimalCycleResult::new(complex, p, cycle, sites[best], r, Context::Localize))
}
