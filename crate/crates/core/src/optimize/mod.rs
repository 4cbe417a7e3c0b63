//! Site-restricted optimization of homology cycles under the ℓ₂-radius.
//!
//! Each algorithm solves the problem exactly for a fixed center `v` (using the
//! order `≺_v`) and then takes the minimum over a set of sites, by default all
//! vertices of the complex. Restricting centers to the vertices is a
//! 2-approximation of the unrestricted radius.

mod basis;
mod homologous;
mod persistent;
mod shorten;

use serde::Serialize;

pub use basis::{opt_homology_basis, HomologyBasisResult};
pub use homologous::{opt_homologous_cycle, optimal_hom_cycle_for_site};
pub use persistent::{
    opt_pers_cycle_site, opt_pers_hom_rep, opt_pers_hom_reps, opt_persistent_basis, PersistentSiteSearch,
};
pub use shorten::shorten_cycle;

use crate::complex::EmbeddedComplex;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::filtration::Interval;
use crate::radius::{r_exact, SphereCertificate};
use crate::z2linalg::ChainVector;

/// Which sites to try and how to schedule the per-site work.
#[derive(Clone, Debug, Default)]
pub struct Options {
    /// Vertex indices used as centers; `None` means every vertex.
    pub sites: Option<Vec<usize>>,
    pub execution: Execution,
}

impl Options {
    pub fn sequential() -> Self {
        Self { sites: None, execution: Execution::Sequential }
    }

    pub fn with_sites(mut self, sites: Vec<usize>) -> Self {
        self.sites = Some(sites);
        self
    }

    pub(crate) fn site_list(&self, complex: &EmbeddedComplex) -> Result<Vec<usize>> {
        let sites = match &self.sites {
            Some(s) => s.clone(),
            None => (0..complex.n_vertices()).collect(),
        };
        if sites.is_empty() {
            return Err(Error::InvalidPoints("no sites to optimize over".into()));
        }
        if let Some(&v) = sites.iter().find(|&&v| v >= complex.n_vertices()) {
            return Err(Error::IndexOutOfRange { index: v, bound: complex.n_vertices() });
        }
        Ok(sites)
    }
}

/// Evenly spaced subsample of `ceil(fraction · n)` vertices (at least one).
pub fn subsample_sites(n_vertices: usize, fraction: f64) -> Vec<usize> {
    if n_vertices == 0 {
        return Vec::new();
    }
    let k = ((fraction.clamp(0.0, 1.0) * n_vertices as f64).ceil() as usize).clamp(1, n_vertices);
    (0..k).map(|i| i * n_vertices / k).collect()
}

/// The problem a result answers.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "problem", rename_all = "snake_case")]
pub enum Context {
    Localize,
    Basis { rank: usize },
    Persistent { interval: Interval },
}

/// Edge counts recorded by [`shorten_cycle`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Shortening {
    pub edges_before: usize,
    pub edges_after: usize,
    pub iterations: usize,
}

/// An optimized cycle with its achieving site and radii.
#[derive(Clone, Debug, PartialEq)]
pub struct OptimalCycleResult {
    pub dim: usize,
    /// Chain over the canonical `dim`-simplices of the ambient complex.
    pub cycle: ChainVector,
    /// Vertex index of the center that achieved `r_v`.
    pub site: usize,
    pub r_v: f64,
    /// Radius of the smallest sphere enclosing the cycle's vertices.
    pub r_exact: f64,
    pub certificate: SphereCertificate,
    pub context: Context,
    pub shortening: Option<Shortening>,
}

impl OptimalCycleResult {
    /// Fills in the exact radius and certificate for a cycle found at `site`.
    pub fn new(
        complex: &EmbeddedComplex,
        dim: usize,
        cycle: ChainVector,
        site: usize,
        r_v: f64,
        context: Context,
    ) -> Self {
        let certificate = if cycle.is_zero() {
            SphereCertificate {
                center: complex.cloud().point(site).to_vec(),
                radius: 0.0,
                support: Vec::new(),
            }
        } else {
            r_exact(dim, &cycle, complex).expect("non-empty cycle")
        };
        Self { dim, cycle, site, r_v, r_exact: certificate.radius, certificate, context, shortening: None }
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_zero()
    }
}

pub(crate) fn check_cycle(complex: &EmbeddedComplex, p: usize, zeta: &ChainVector) -> Result<()> {
    if zeta.ambient_size() != complex.n_simplices(p) {
        return Err(Error::DimensionMismatch { expected: complex.n_simplices(p), found: zeta.ambient_size() });
    }
    if !complex.is_cycle(p, zeta)? {
        return Err(Error::NotACycle);
    }
    Ok(())
}
