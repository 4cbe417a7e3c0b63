mod common;

use common::*;
use cyclerad::complex::EmbeddedComplex;
use cyclerad::exec::Execution;
use cyclerad::filtration::{compute_persistence, site_ordering};
use cyclerad::optimize::{opt_homologous_cycle, opt_homology_basis, opt_persistent_basis, Options};
use cyclerad::radius::{min_enclosing_sphere, r_exact, r_v};
use cyclerad::z2linalg::{solve_by_reduction, standard_reduction, ChainVector, Solution, Z2Matrix};
use proptest::prelude::*;

fn complex_from_seed(seed: u64, max_vertices: usize) -> EmbeddedComplex {
    random_small_complex(&mut rng(seed), max_vertices, 40)
}

fn sparse_matrix() -> impl Strategy<Value = Z2Matrix> {
    (1usize..12, 0usize..12).prop_flat_map(|(rows, cols)| {
        proptest::collection::vec(proptest::collection::btree_set(0..rows, 0..=rows), cols)
            .prop_map(move |cs| Z2Matrix::from_columns(rows, cs.into_iter().map(|c| c.into_iter().collect()).collect()).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn boundary_of_boundary_vanishes(seed in any::<u64>()) {
        let k = complex_from_seed(seed, 9);
        for p in 1..k.max_dim() {
            let product = k.boundary_matrix(p).unwrap().mul(&k.boundary_matrix(p + 1).unwrap()).unwrap();
            prop_assert!(product.is_zero());
        }
    }

    #[test]
    fn reduction_factors_the_matrix(m in sparse_matrix()) {
        let r = standard_reduction(&m);
        let v = &r.basis_change;
        prop_assert_eq!(m.mul(v).unwrap(), r.reduced.clone());
        for (j, col) in v.columns().iter().enumerate() {
            prop_assert_eq!(col.last().copied(), Some(j));
        }
        let lows: Vec<usize> = r.reduced.columns().iter().filter_map(|c| c.last().copied()).collect();
        let mut distinct = lows.clone();
        distinct.sort_unstable();
        distinct.dedup();
        prop_assert_eq!(distinct.len(), lows.len());
        prop_assert_eq!(lows.len(), dense_rank(m.n_rows(), m.columns()));
    }

    #[test]
    fn solutions_satisfy_the_system(m in sparse_matrix(), bits in proptest::collection::btree_set(0usize..12, 0..6)) {
        let b: Vec<usize> = bits.into_iter().filter(|&i| i < m.n_rows()).collect();
        let b = ChainVector::new(m.n_rows(), b).unwrap();
        match solve_by_reduction(&m, &b).unwrap() {
            Solution::Feasible(x) => {
                let x = ChainVector::new(m.n_cols(), x).unwrap();
                prop_assert_eq!(m.apply(&x), b);
            }
            Solution::Infeasible => prop_assert!(!dense_in_span(m.n_rows(), m.columns(), b.support())),
        }
    }

    #[test]
    fn induced_subcomplexes_are_closed(seed in any::<u64>(), mask in any::<u16>()) {
        let k = complex_from_seed(seed, 10);
        let vertices: Vec<usize> = (0..k.n_vertices()).filter(|v| mask & (1 << v) != 0).collect();
        let view = k.induced_subcomplex(&vertices);
        for s in view.iter() {
            let vs = k.simplex(s);
            prop_assert!(vs.iter().all(|v| vertices.contains(v)));
            if s.dim > 0 {
                for &f in k.facets(s) {
                    prop_assert!(view.contains(cyclerad::SimplexRef::new(s.dim - 1, f)));
                }
            }
        }
        let expected = k.iter().filter(|&s| k.simplex(s).iter().all(|v| vertices.contains(v))).count();
        prop_assert_eq!(view.len(), expected);
    }

    #[test]
    fn enclosing_sphere_is_tight(seed in any::<u64>(), n in 1usize..9) {
        let cloud = random_cloud(&mut rng(seed), n);
        let pts: Vec<&[f64]> = cloud.points().iter().map(Vec::as_slice).collect();
        let ball = min_enclosing_sphere(&pts);
        prop_assert!(ball.certifies(&pts, 1e-9));
        // no vertex-centered ball is smaller, and no vertex-centered ball
        // needs more than twice the radius
        let from_vertex = pts.iter().map(|c| pts.iter().map(|q| cyclerad::complex::distance(c, q)).fold(0.0, f64::max)).fold(f64::INFINITY, f64::min);
        prop_assert!(ball.radius <= from_vertex + 1e-12);
        prop_assert!(from_vertex <= 2.0 * ball.radius + 1e-12);
    }

    #[test]
    fn site_order_is_monotone(seed in any::<u64>(), site in 0usize..10) {
        let k = complex_from_seed(seed, 10);
        let site = site % k.n_vertices();
        let o = site_ordering(&k.full_view(), k.cloud().point(site));
        prop_assert_eq!(o.order.len(), k.len());
        let mut seen = std::collections::HashSet::new();
        for (i, &s) in o.order.iter().enumerate() {
            if s.dim > 0 {
                for &f in k.facets(s) {
                    prop_assert!(seen.contains(&cyclerad::SimplexRef::new(s.dim - 1, f)));
                }
            }
            seen.insert(s);
            if i > 0 {
                prop_assert!(o.r_values[i - 1] <= o.r_values[i]);
            }
        }
    }

    #[test]
    fn optimized_cycles_are_homologous_and_bounded(seed in any::<u64>()) {
        let mut r = rng(seed);
        let k = random_small_complex(&mut r, 10, 40);
        if let Some(z) = random_cycle(&mut r, &k, 1) {
            let out = opt_homologous_cycle(&k, 1, &z, &Options::default()).unwrap();
            prop_assert!(homologous(&k, 1, &z, &out.cycle));
            if !out.cycle.is_zero() {
                let rv = r_v(k.cloud().point(out.site), 1, &out.cycle, &k).unwrap();
                prop_assert_eq!(rv, out.r_v);
                prop_assert!(r_exact(1, &out.cycle, &k).unwrap().radius <= rv + 1e-12);
                // the input's own r_P bounds the optimum
                let input = (0..k.n_vertices()).map(|v| r_v(k.cloud().point(v), 1, &z, &k).unwrap()).fold(f64::INFINITY, f64::min);
                prop_assert!(out.r_v <= input);
            }
        }
    }

    #[test]
    fn execution_modes_agree(seed in any::<u64>()) {
        let mut r = rng(seed);
        let k = random_small_complex(&mut r, 10, 40);
        let seq = Options { sites: None, execution: Execution::Sequential };
        let par = Options { sites: None, execution: Execution::Parallel };
        if let Some(z) = random_cycle(&mut r, &k, 1) {
            prop_assert_eq!(opt_homologous_cycle(&k, 1, &z, &seq).unwrap(), opt_homologous_cycle(&k, 1, &z, &par).unwrap());
        }
        prop_assert_eq!(opt_homology_basis(&k, 1, &seq).unwrap(), opt_homology_basis(&k, 1, &par).unwrap());
        let f = random_filtration(&mut r, k);
        prop_assert_eq!(opt_persistent_basis(&f, 1, &seq).unwrap(), opt_persistent_basis(&f, 1, &par).unwrap());
    }

    #[test]
    fn shuffled_site_lists_find_the_same_radius(seed in any::<u64>()) {
        let mut r = rng(seed);
        let k = random_small_complex(&mut r, 10, 40);
        if let Some(z) = random_cycle(&mut r, &k, 1) {
            let all: Vec<usize> = (0..k.n_vertices()).collect();
            let a = opt_homologous_cycle(&k, 1, &z, &Options::default()).unwrap();
            let b = opt_homologous_cycle(&k, 1, &z, &Options::default().with_sites(shuffled(&mut r, &all))).unwrap();
            prop_assert_eq!(a.r_v, b.r_v);
        }
    }

    #[test]
    fn every_bar_gets_a_representative(seed in any::<u64>()) {
        let mut r = rng(seed);
        let k = random_small_complex(&mut r, 9, 35);
        let f = random_filtration(&mut r, k);
        let bars = compute_persistence(&f, 1).barcode;
        let reps = opt_persistent_basis(&f, 1, &Options::default()).unwrap();
        prop_assert_eq!(reps.len(), bars.len());
        for (iv, rep) in bars.intervals.iter().zip(&reps) {
            prop_assert!(rep.cycle.contains(iv.creator.pos));
            if let Some(d) = iv.death.index() {
                prop_assert!(bounds_in_prefix(&f, 1, d, &rep.cycle));
                prop_assert!(!bounds_in_prefix(&f, 1, d - 1, &rep.cycle));
            }
        }
    }
}
