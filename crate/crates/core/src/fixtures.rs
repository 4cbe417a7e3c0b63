//! Small hand-built complexes with known answers, used by tests and benches.

use std::collections::HashMap;
use std::f64::consts::{FRAC_PI_2, PI, TAU};

use crate::complex::{EmbeddedComplex, PointCloud};
use crate::filtration::Filtration;
use crate::z2linalg::ChainVector;

/// A complex together with a cycle of interest.
#[derive(Clone, Debug)]
pub struct CycleFixture {
    pub name: String,
    pub complex: EmbeddedComplex,
    pub p: usize,
    pub cycle: ChainVector,
}

fn complex(points: Vec<Vec<f64>>, simplices: Vec<Vec<usize>>) -> EmbeddedComplex {
    EmbeddedComplex::from_simplices(PointCloud::from_points(points).unwrap(), simplices).unwrap()
}

fn loop_chain(complex: &EmbeddedComplex, vertices: &[usize]) -> ChainVector {
    let edges: Vec<Vec<usize>> = (0..vertices.len())
        .map(|k| vec![vertices[k], vertices[(k + 1) % vertices.len()]])
        .collect();
    complex.chain_from_simplices(1, &edges).unwrap()
}

fn polar(r: f64, angle: f64) -> Vec<f64> {
    vec![r * angle.cos(), r * angle.sin()]
}

/// Unit equilateral triangle without its 2-simplex.
pub fn hollow_triangle() -> CycleFixture {
    let h = 3f64.sqrt() / 2.0;
    let k = complex(vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![0.5, h]], vec![vec![0, 1], vec![1, 2], vec![0, 2]]);
    let cycle = loop_chain(&k, &[0, 1, 2]);
    CycleFixture { name: "hollow-triangle".into(), complex: k, p: 1, cycle }
}

/// Two hollow equilateral triangles of sides 1 and 2 sharing vertex 0.
/// The given cycle is the sum of both loops.
pub fn figure_eight() -> CycleFixture {
    let h = 3f64.sqrt() / 2.0;
    let points = vec![
        vec![0.0, 0.0],
        vec![-1.0, 0.0],
        vec![-0.5, h],
        vec![2.0, 0.0],
        vec![1.0, 2.0 * h],
    ];
    let loops = [[0, 1, 2], [0, 3, 4]];
    let edges = loops.iter().flat_map(|l| (0..3).map(move |k| vec![l[k], l[(k + 1) % 3]])).collect();
    let k = complex(points, edges);
    let mut cycle = loop_chain(&k, &loops[0]);
    cycle.add_assign(&loop_chain(&k, &loops[1]));
    CycleFixture { name: "figure-eight".into(), complex: k, p: 1, cycle }
}

/// Triangulated ring between two concentric regular `n`-gons of radii
/// `inner` and `outer`. Inner vertices are `0..n`, outer `n..2n`; with
/// `center`, an isolated vertex at the origin is appended. The cycle is the
/// outer boundary.
pub fn polygon_annulus(n: usize, inner: f64, outer: f64, center: bool) -> CycleFixture {
    assert!(n >= 3);
    let angle = |k: usize| FRAC_PI_2 / 2.0 + TAU * k as f64 / n as f64;
    let mut points: Vec<Vec<f64>> = (0..n).map(|k| polar(inner, angle(k))).collect();
    points.extend((0..n).map(|k| polar(outer, angle(k))));
    if center {
        points.push(vec![0.0, 0.0]);
    }
    let mut triangles = Vec::new();
    for k in 0..n {
        let k1 = (k + 1) % n;
        triangles.push(vec![k, n + k, n + k1]);
        triangles.push(vec![k, k1, n + k1]);
    }
    let k = complex(points, triangles);
    let outer_loop: Vec<usize> = (n..2 * n).collect();
    let cycle = loop_chain(&k, &outer_loop);
    let name = format!("annulus-{n}{}", if center { "-centered" } else { "" });
    CycleFixture { name, complex: k, p: 1, cycle }
}

/// Square annulus: inner square of side 1, outer of side 4. The optimal loop
/// is the inner square, with exact radius `√2/2`. Without the center vertex,
/// the best vertex-centered ball has radius `√2`.
pub fn annulus(center: bool) -> CycleFixture {
    polygon_annulus(4, 2f64.sqrt() / 2.0, 2.0 * 2f64.sqrt(), center)
}

/// Inner loop of a [`polygon_annulus`].
pub fn annulus_inner_loop(fixture: &CycleFixture, n: usize) -> ChainVector {
    loop_chain(&fixture.complex, &(0..n).collect::<Vec<_>>())
}

/// Zig-zag loop `i0, o1, i1, o2, …` of a [`polygon_annulus`]: `2n` edges,
/// homologous to the `n`-edge inner loop.
pub fn annulus_zigzag(fixture: &CycleFixture, n: usize) -> ChainVector {
    let walk: Vec<usize> = (0..n).flat_map(|k| [k, n + (k + 1) % n]).collect();
    loop_chain(&fixture.complex, &walk)
}

/// Regular `n`-gon of radius 1 with a spike vertex outside every side at
/// radius `1 + height`, each spike filled in with a triangle. The cycle
/// detours through the spikes selected by the bits of `mask`.
pub fn spiked_loop(n: usize, height: f64, mask: u64) -> CycleFixture {
    assert!(n >= 3);
    let angle = |k: f64| TAU * k / n as f64;
    let mut points: Vec<Vec<f64>> = (0..n).map(|k| polar(1.0, angle(k as f64))).collect();
    points.extend((0..n).map(|k| polar(1.0 + height, angle(k as f64 + 0.5))));
    let triangles: Vec<Vec<usize>> = (0..n).map(|k| vec![k, (k + 1) % n, n + k]).collect();
    let k = complex(points, triangles);
    let mut walk = Vec::new();
    for i in 0..n {
        walk.push(i);
        if mask & (1 << i) != 0 {
            walk.push(n + i);
        }
    }
    let cycle = loop_chain(&k, &walk);
    CycleFixture { name: format!("spiked-{n}-{mask:b}"), complex: k, p: 1, cycle }
}

/// Twenty shortening inputs: zig-zag loops on annuli and detouring loops on
/// spiked polygons.
pub fn shortening_fixtures() -> Vec<CycleFixture> {
    let mut out = Vec::new();
    for n in 3..13 {
        let mut f = polygon_annulus(n, 1.0, 1.5 + 0.1 * n as f64, n % 2 == 0);
        f.cycle = annulus_zigzag(&f, n);
        f.name = format!("{}-zigzag", f.name);
        out.push(f);
    }
    for n in 3..13 {
        let mask = (0x5a5 >> (n % 4)) & ((1u64 << n) - 1);
        out.push(spiked_loop(n, 0.2 + 0.05 * n as f64, mask | 1));
    }
    out
}

/// Two nested triangles whose 1-barcode is `{[2,3), [1,4)}`: the inner loop
/// appears at time 1, the outer at 2, the ring between them fills in at 3
/// (merging the two classes) and the inner triangle is filled at 4.
pub fn nested_triangles() -> Filtration {
    let angle = |k: usize| FRAC_PI_2 + 2.0 * PI * k as f64 / 3.0;
    let mut points: Vec<Vec<f64>> = (0..3).map(|k| polar(1.0, angle(k))).collect();
    points.extend((0..3).map(|k| polar(3.0, angle(k))));
    let (a, b, c, aa, bb, cc) = (0, 1, 2, 3, 4, 5);
    let timed: Vec<(f64, Vec<usize>)> = vec![
        (0.0, vec![a, b]),
        (0.0, vec![b, c]),
        (0.0, vec![aa, bb]),
        (0.0, vec![bb, cc]),
        (0.0, vec![a, aa]),
        (1.0, vec![c, a]),
        (2.0, vec![cc, aa]),
        (3.0, vec![a, bb]),
        (3.0, vec![b, bb]),
        (3.0, vec![b, cc]),
        (3.0, vec![c, cc]),
        (3.0, vec![c, aa]),
        (3.0, vec![a, aa, bb]),
        (3.0, vec![a, b, bb]),
        (3.0, vec![b, bb, cc]),
        (3.0, vec![b, c, cc]),
        (3.0, vec![c, cc, aa]),
        (3.0, vec![c, a, aa]),
        (4.0, vec![a, b, c]),
    ];
    let k = complex(points, timed.iter().map(|(_, s)| s.clone()).collect());
    let time: HashMap<Vec<usize>, f64> = timed
        .into_iter()
        .map(|(t, mut s)| {
            s.sort_unstable();
            (s, t)
        })
        .collect();
    let vertices = k.clone();
    Filtration::from_values(k, |s| {
        let simplex = vertices.simplex(s);
        if s.dim == 0 {
            0.0
        } else {
            time[simplex]
        }
    })
    .unwrap()
}

/// `n` points on a circle of radius 1 with a small deterministic radial wobble.
pub fn circle_cloud(n: usize) -> PointCloud {
    let points = (0..n)
        .map(|k| {
            let t = TAU * k as f64 / n as f64;
            polar(1.0 + 0.05 * (5.0 * t).sin(), t)
        })
        .collect();
    PointCloud::from_points(points).unwrap()
}
