//! JSON report written by the command-line tool.

use serde::Serialize;

use crate::complex::EmbeddedComplex;
use crate::filtration::{Death, Interval};
use crate::optimize::{Context, OptimalCycleResult};

/// A filtration index or value that may be infinite, serialized as `"inf"`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Bound<T> {
    Finite(T),
    Infinite(&'static str),
}

impl<T> Bound<T> {
    fn inf() -> Self {
        Bound::Infinite("inf")
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IntervalRecord {
    pub birth_index: usize,
    pub birth_value: f64,
    pub death_index: Bound<usize>,
    pub death_value: Bound<f64>,
    pub creator: Vec<usize>,
    pub destroyer: Option<Vec<usize>>,
}

impl IntervalRecord {
    pub fn new(complex: &EmbeddedComplex, iv: &Interval) -> Self {
        let (death_index, death_value, destroyer) = match iv.death {
            Death::Finite { index, value, destroyer } => {
                (Bound::Finite(index), Bound::Finite(value), Some(complex.simplex(destroyer).to_vec()))
            }
            Death::Infinite => (Bound::inf(), Bound::inf(), None),
        };
        Self {
            birth_index: iv.birth,
            birth_value: iv.birth_value,
            death_index,
            death_value,
            creator: complex.simplex(iv.creator).to_vec(),
            destroyer,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SphereRecord {
    pub center: Vec<f64>,
    pub radius: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResultRecord {
    pub problem: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub interval: Option<IntervalRecord>,
    pub dim: usize,
    pub site: usize,
    pub site_point: Vec<f64>,
    pub r_v: f64,
    pub r_exact: f64,
    pub sphere: SphereRecord,
    /// Simplices as sorted vertex tuples.
    pub cycle: Vec<Vec<usize>>,
    /// Present for 1-cycles; equal when no shortening ran.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edges_before: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edges_after: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub obj: Option<String>,
}

impl ResultRecord {
    pub fn new(complex: &EmbeddedComplex, r: &OptimalCycleResult) -> Self {
        let (problem, rank, interval) = match &r.context {
            Context::Localize => ("localize", None, None),
            Context::Basis { rank } => ("basis", Some(*rank), None),
            Context::Persistent { interval } => ("persistent", None, Some(IntervalRecord::new(complex, interval))),
        };
        let (edges_before, edges_after) = match (r.dim, r.shortening) {
            (1, Some(s)) => (Some(s.edges_before), Some(s.edges_after)),
            (1, None) => (Some(r.cycle.weight()), Some(r.cycle.weight())),
            _ => (None, None),
        };
        Self {
            problem,
            rank,
            interval,
            dim: r.dim,
            site: r.site,
            site_point: complex.cloud().point(r.site).to_vec(),
            r_v: r.r_v,
            r_exact: r.r_exact,
            sphere: SphereRecord { center: r.certificate.center.clone(), radius: r.certificate.radius },
            cycle: complex.chain_simplices(r.dim, &r.cycle),
            edges_before,
            edges_after,
            obj: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SiteSummary {
    pub count: usize,
    pub fraction: f64,
    /// False when a subsample of the vertices was used, which voids the
    /// factor-two bound.
    pub two_approximation: bool,
}

/// One comparison between the algorithm and the exhaustive oracle.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub label: String,
    pub algorithm: f64,
    pub oracle: f64,
    pub ratio: f64,
    pub lower: f64,
    pub upper: f64,
    pub passed: bool,
}

impl Check {
    /// Passes when `lower ≤ algorithm / oracle ≤ upper` up to a relative
    /// tolerance of 1e-9. Two zeros compare as ratio 1.
    pub fn ratio(label: impl Into<String>, algorithm: f64, oracle: f64, lower: f64, upper: f64) -> Self {
        let tol = 1e-9 * algorithm.abs().max(oracle.abs()).max(1.0);
        let ratio = if oracle == 0.0 {
            if algorithm.abs() <= tol { 1.0 } else { f64::INFINITY }
        } else {
            algorithm / oracle
        };
        let passed = algorithm >= lower * oracle - tol && algorithm <= upper * oracle + tol;
        Self { label: label.into(), algorithm, oracle, ratio, lower, upper, passed }
    }

    pub fn holds(label: impl Into<String>, ok: bool) -> Self {
        let v = if ok { 1.0 } else { 0.0 };
        Self { label: label.into(), algorithm: v, oracle: 1.0, ratio: v, lower: 1.0, upper: 1.0, passed: ok }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verification {
    pub mode: &'static str,
    pub budget: usize,
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl Verification {
    pub fn new(mode: &'static str, budget: usize, checks: Vec<Check>) -> Self {
        let passed = checks.iter().all(|c| c.passed);
        Self { mode, budget, checks, passed }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub problem: &'static str,
    pub p: usize,
    pub sites: SiteSummary,
    pub results: Vec<ResultRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub total_weight: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<Verification>,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinite_bounds_serialize_as_inf() {
        let v = serde_json::to_value(Bound::<usize>::inf()).unwrap();
        assert_eq!(v, serde_json::json!("inf"));
        assert_eq!(serde_json::to_value(Bound::Finite(3usize)).unwrap(), serde_json::json!(3));
    }

    #[test]
    fn ratio_checks() {
        assert!(Check::ratio("x", 2.0, 1.0, 1.0, 2.0).passed);
        assert!(!Check::ratio("x", 2.1, 1.0, 1.0, 2.0).passed);
        assert!(!Check::ratio("x", 0.9, 1.0, 1.0, 2.0).passed);
        let zero = Check::ratio("x", 0.0, 0.0, 1.0, 2.0);
        assert!(zero.passed);
        assert_eq!(zero.ratio, 1.0);
    }
}
