//! The ℓ₂-radius measure.
//!
//! `r_v` measures a chain from a fixed center `v`: the largest distance from
//! `v` to a vertex of the chain. `r_exact` is the radius of the smallest
//! Euclidean sphere enclosing all vertices of the chain.

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::complex::{distance, EmbeddedComplex, SimplexRef};
use crate::error::{Error, Result};
use crate::z2linalg::ChainVector;

/// An enclosing sphere with the input points that determine it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SphereCertificate {
    pub center: Vec<f64>,
    pub radius: f64,
    /// Indices (into the caller's point list) of points on the sphere.
    pub support: Vec<usize>,
}

impl SphereCertificate {
    /// Checks enclosure of every point and that support points lie on the sphere.
    pub fn certifies(&self, points: &[&[f64]], tol: f64) -> bool {
        let enclosed = points.iter().all(|p| distance(p, &self.center) <= self.radius + tol);
        let on_sphere = self
            .support
            .iter()
            .all(|&i| (distance(points[i], &self.center) - self.radius).abs() <= tol);
        enclosed && on_sphere
    }

    fn point(center: &[f64]) -> Self {
        Self { center: center.to_vec(), radius: 0.0, support: Vec::new() }
    }
}

/// Largest distance from `site` to a vertex of `s`.
pub fn simplex_radius(complex: &EmbeddedComplex, s: SimplexRef, site: &[f64]) -> f64 {
    complex
        .simplex(s)
        .iter()
        .map(|&v| distance(complex.cloud().point(v), site))
        .fold(0.0, f64::max)
}

/// `r_v` of a `p`-chain: the maximum of [`simplex_radius`] over its support.
pub fn r_v(site: &[f64], p: usize, chain: &ChainVector, complex: &EmbeddedComplex) -> Result<f64> {
    if chain.is_zero() {
        return Err(Error::EmptyChain);
    }
    Ok(chain
        .support()
        .iter()
        .map(|&pos| simplex_radius(complex, SimplexRef::new(p, pos), site))
        .fold(0.0, f64::max))
}

/// `r_v` with the zero chain mapped to radius 0.
pub(crate) fn r_v_or_zero(site: &[f64], p: usize, chain: &ChainVector, complex: &EmbeddedComplex) -> f64 {
    r_v(site, p, chain, complex).unwrap_or(0.0)
}

/// `min_{v ∈ sites} r_v(chain)` and the first minimizing site.
pub fn r_sites(
    sites: &[usize],
    p: usize,
    chain: &ChainVector,
    complex: &EmbeddedComplex,
) -> Result<(f64, usize)> {
    let mut best: Option<(f64, usize)> = None;
    for &v in sites {
        let r = r_v(complex.cloud().point(v), p, chain, complex)?;
        if best.is_none_or(|(b, _)| r < b) {
            best = Some((r, v));
        }
    }
    best.ok_or_else(|| Error::InvalidPoints("empty site set".into()))
}

/// Smallest sphere enclosing the vertices of a `p`-chain.
pub fn r_exact(p: usize, chain: &ChainVector, complex: &EmbeddedComplex) -> Result<SphereCertificate> {
    if chain.is_zero() {
        return Err(Error::EmptyChain);
    }
    let vertices = complex.chain_vertices(p, chain);
    let pts: Vec<&[f64]> = vertices.iter().map(|&v| complex.cloud().point(v)).collect();
    let mut cert = min_enclosing_sphere(&pts);
    cert.support = cert.support.iter().map(|&i| vertices[i]).collect();
    Ok(cert)
}

/// Circumsphere of affinely independent points, centered in their affine hull.
///
/// Returns `None` when the points are affinely dependent.
pub fn circumsphere(points: &[&[f64]]) -> Option<SphereCertificate> {
    let k = points.len();
    if k == 0 {
        return None;
    }
    let origin = points[0];
    if k == 1 {
        return Some(SphereCertificate { center: origin.to_vec(), radius: 0.0, support: vec![0] });
    }
    let d = origin.len();
    if k - 1 > d {
        return None;
    }
    let diffs = DMatrix::from_fn(d, k - 1, |r, c| points[c + 1][r] - origin[r]);
    let sv = diffs.clone().svd(false, false).singular_values;
    let max = sv.iter().copied().fold(0.0, f64::max);
    let min = sv.iter().copied().fold(f64::INFINITY, f64::min);
    if max == 0.0 || min <= 1e-10 * max {
        return None;
    }
    let gram = diffs.transpose() * &diffs * 2.0;
    let rhs = DVector::from_fn(k - 1, |i, _| diffs.column(i).norm_squared());
    let lambda = gram.cholesky()?.solve(&rhs);
    let offset = &diffs * lambda;
    let center: Vec<f64> = (0..d).map(|r| origin[r] + offset[r]).collect();
    let radius = points.iter().map(|p| distance(p, &center)).fold(0.0, f64::max);
    Some(SphereCertificate { center, radius, support: (0..k).collect() })
}

/// Exact minimum enclosing sphere (move-to-front Welzl). Deterministic for a
/// given input order.
///
/// # Panics
/// If `points` is empty.
pub fn min_enclosing_sphere(points: &[&[f64]]) -> SphereCertificate {
    assert!(!points.is_empty(), "min_enclosing_sphere of no points");
    let dim = points[0].len();
    let scale = points.iter().flat_map(|p| p.iter()).fold(1.0_f64, |m, x| m.max(x.abs()));
    let tol = 1e-12 * scale;
    let mut order: Vec<usize> = (0..points.len()).collect();
    let mut support = Vec::new();
    let n = order.len();
    let mut ball = mtf(points, &mut order, n, &mut support, dim, tol);
    ball.support.sort_unstable();
    ball
}

fn ball_of(points: &[&[f64]], support: &[usize]) -> Option<SphereCertificate> {
    let pts: Vec<&[f64]> = support.iter().map(|&i| points[i]).collect();
    if pts.is_empty() {
        return None;
    }
    let ball = circumsphere(&pts).unwrap_or_else(|| brute_force_ball(&pts));
    Some(SphereCertificate {
        center: ball.center,
        radius: ball.radius,
        support: ball.support.iter().map(|&i| support[i]).collect(),
    })
}

fn mtf(
    points: &[&[f64]],
    order: &mut Vec<usize>,
    end: usize,
    support: &mut Vec<usize>,
    dim: usize,
    tol: f64,
) -> SphereCertificate {
    let mut ball = ball_of(points, support);
    if support.len() == dim + 1 {
        return ball.expect("non-empty support");
    }
    for i in 0..end {
        let idx = order[i];
        let outside = ball
            .as_ref()
            .is_none_or(|b| distance(points[idx], &b.center) > b.radius + tol);
        if outside {
            support.push(idx);
            ball = Some(mtf(points, order, i, support, dim, tol));
            support.pop();
            order.remove(i);
            order.insert(0, idx);
        }
    }
    ball.unwrap_or_else(|| SphereCertificate::point(points[order[0]]))
}

/// Smallest enclosing sphere of a handful of points by subset enumeration.
/// Used only for degenerate supports.
fn brute_force_ball(pts: &[&[f64]]) -> SphereCertificate {
    let n = pts.len();
    let mut best: Option<SphereCertificate> = None;
    for mask in 1u32..(1 << n) {
        let idx: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let sub: Vec<&[f64]> = idx.iter().map(|&i| pts[i]).collect();
        let Some(c) = circumsphere(&sub) else { continue };
        let tol = 1e-9 * (1.0 + c.radius);
        if pts.iter().all(|p| distance(p, &c.center) <= c.radius + tol)
            && best.as_ref().is_none_or(|b| c.radius < b.radius)
        {
            best = Some(SphereCertificate { support: idx, ..c });
        }
    }
    best.expect("some subset sphere encloses all points")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::PointCloud;

    fn pts(v: &[&[f64]]) -> Vec<Vec<f64>> {
        v.iter().map(|p| p.to_vec()).collect()
    }

    fn refs(v: &[Vec<f64>]) -> Vec<&[f64]> {
        v.iter().map(Vec::as_slice).collect()
    }

    fn equilateral() -> EmbeddedComplex {
        let h = 3f64.sqrt() / 2.0;
        let cloud = PointCloud::from_points(pts(&[&[0.0, 0.0], &[1.0, 0.0], &[0.5, h]])).unwrap();
        EmbeddedComplex::from_simplices(cloud, vec![vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap()
    }

    #[test]
    fn r_v_examples() {
        let k = equilateral();
        let v0 = ChainVector::new(3, vec![0]).unwrap();
        assert_eq!(r_v(&[0.0, 0.0], 0, &v0, &k).unwrap(), 0.0);

        let cloud = PointCloud::from_points(pts(&[&[1.0, 0.0], &[2.0, 0.0]])).unwrap();
        let edge = EmbeddedComplex::from_simplices(cloud, vec![vec![0, 1]]).unwrap();
        let e = ChainVector::new(1, vec![0]).unwrap();
        assert_eq!(r_v(&[0.0, 0.0], 1, &e, &edge).unwrap(), 2.0);

        let cycle = ChainVector::new(3, vec![0, 1, 2]).unwrap();
        let centroid = [0.5, 3f64.sqrt() / 6.0];
        let r = r_v(&centroid, 1, &cycle, &k).unwrap();
        assert!((r - 1.0 / 3f64.sqrt()).abs() < 1e-12);
        assert!(matches!(r_v(&centroid, 1, &ChainVector::zero(3), &k), Err(Error::EmptyChain)));
    }

    #[test]
    fn min_enclosing_sphere_examples() {
        let one = pts(&[&[3.0, 4.0]]);
        assert_eq!(min_enclosing_sphere(&refs(&one)).radius, 0.0);

        let two = pts(&[&[0.0, 0.0], &[2.0, 0.0]]);
        let b = min_enclosing_sphere(&refs(&two));
        assert!((b.radius - 1.0).abs() < 1e-12);
        assert!((b.center[0] - 1.0).abs() < 1e-12 && b.center[1].abs() < 1e-12);

        let square = pts(&[&[0.0, 0.0], &[1.0, 0.0], &[1.0, 1.0], &[0.0, 1.0]]);
        let b = min_enclosing_sphere(&refs(&square));
        assert!((b.radius - 2f64.sqrt() / 2.0).abs() < 1e-12);
        assert!((b.center[0] - 0.5).abs() < 1e-12 && (b.center[1] - 0.5).abs() < 1e-12);
        assert!(b.certifies(&refs(&square), 1e-9));
    }

    #[test]
    fn collinear_and_obtuse_inputs() {
        let line = pts(&[&[0.0, 0.0], &[1.0, 0.0], &[3.0, 0.0], &[2.0, 0.0]]);
        let b = min_enclosing_sphere(&refs(&line));
        assert!((b.radius - 1.5).abs() < 1e-12);
        let obtuse = pts(&[&[0.0, 0.0], &[4.0, 0.0], &[2.0, 0.5]]);
        let b = min_enclosing_sphere(&refs(&obtuse));
        assert!((b.radius - 2.0).abs() < 1e-12);
        assert_eq!(b.support, vec![0, 1]);
    }

    #[test]
    fn circumsphere_rejects_dependent_points() {
        let line = pts(&[&[0.0, 0.0], &[1.0, 0.0], &[2.0, 0.0]]);
        assert!(circumsphere(&refs(&line)).is_none());
        let tet = pts(&[&[0.0, 0.0, 0.0], &[1.0, 0.0, 0.0], &[0.0, 1.0, 0.0], &[0.0, 0.0, 1.0]]);
        let c = circumsphere(&refs(&tet)).unwrap();
        assert!((c.radius - 3f64.sqrt() / 2.0).abs() < 1e-12);
    }

    #[test]
    fn r_exact_examples() {
        let cloud = PointCloud::from_points(pts(&[&[0.0, 0.0], &[2.0, 0.0]])).unwrap();
        let edge = EmbeddedComplex::from_simplices(cloud, vec![vec![0, 1]]).unwrap();
        let e = ChainVector::new(1, vec![0]).unwrap();
        assert!((r_exact(1, &e, &edge).unwrap().radius - 1.0).abs() < 1e-12);

        let k = equilateral();
        let cycle = ChainVector::new(3, vec![0, 1, 2]).unwrap();
        let cert = r_exact(1, &cycle, &k).unwrap();
        assert!((cert.radius - 1.0 / 3f64.sqrt()).abs() < 1e-12);
        assert_eq!(cert.support, vec![0, 1, 2]);

        let sq = PointCloud::from_points(pts(&[&[0.0, 0.0], &[1.0, 0.0], &[1.0, 1.0], &[0.0, 1.0]])).unwrap();
        let sq = EmbeddedComplex::from_simplices(sq, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]).unwrap();
        let cycle = ChainVector::new(4, vec![0, 1, 2, 3]).unwrap();
        assert!((r_exact(1, &cycle, &sq).unwrap().radius - 2f64.sqrt() / 2.0).abs() < 1e-12);
    }
}
