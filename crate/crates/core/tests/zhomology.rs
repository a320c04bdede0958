mod common;

use common::*;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::Rng;
use stonework::cap::Cap;
use stonework::interval::{circle_graph, circle_tower, interval_graph, interval_tower, restrict_graph_map};
use stonework::profinite::{RelGraph, RelGraphTower};
use stonework::zhomology::*;

fn cap() -> Cap {
    Cap::default()
}

fn m(rows: &[Vec<i64>]) -> IntMatrix {
    IntMatrix::from_rows(rows).unwrap()
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn cycle(n: usize) -> RelGraph {
    let pairs = (0..n).flat_map(|i| [(i, i), (i, (i + 1) % n), ((i + 1) % n, i)]);
    RelGraph::new(n, pairs).unwrap()
}

fn path(n: usize) -> RelGraph {
    let pairs = (0..n).flat_map(|i| [(i, i)].into_iter().chain((i + 1 < n).then_some([(i, i + 1), (i + 1, i)]).into_iter().flatten()));
    RelGraph::new(n, pairs).unwrap()
}

/// `h1` rank from rational ranks, valid when the groups are free.
fn h1_rank_oracle(c: &ChainComplexZ) -> usize {
    let (_, c1, _) = c.dims();
    c1 - rank_q(&matrix_rows(&c.d1)) - rank_q(&matrix_rows(&c.d0))
}

#[test]
fn snf_examples() {
    let s = snf(&IntMatrix::identity(3));
    assert_eq!(s.d, IntMatrix::identity(3));
    let z = IntMatrix::zeros(2, 3);
    let s = snf(&z);
    assert!(s.d.is_zero());
    assert_eq!(s.rank, 0);
    let s = snf(&m(&[vec![2, 4], vec![6, 8]]));
    assert_eq!(s.diagonal(), ints(&[2, 4]));
    assert_eq!(invariant_factors(&m(&[vec![2, 4], vec![6, 8]])), ints(&[2, 4]));
}

#[test]
fn homology_examples() {
    let zero = ChainComplexZ::new(None, IntMatrix::zeros(2, 2), IntMatrix::zeros(0, 2), [
        vec!["a".into(), "b".into()],
        vec!["p".into(), "q".into()],
        vec![],
    ])
    .unwrap();
    let h = homology(&zero);
    assert_eq!((h.h0.clone(), h.h1.clone()), (AbInvariants::free(2), AbInvariants::free(2)));
    assert_eq!(h.exact, vec![false, false]);

    let h = homology(&graph_cech_complex(&cycle(4)));
    assert_eq!(h.h1, AbInvariants::free(1));
    let h = homology(&graph_cech_complex(&path(5)));
    assert!(h.h1.is_zero());
    assert_eq!(h.exact, vec![true, true, true]);
}

#[test]
fn torsion_is_reported() {
    let d0 = m(&[vec![2]]);
    let c = ChainComplexZ::new(None, d0, IntMatrix::zeros(0, 1), [vec!["v".into()], vec!["e".into()], vec![]]).unwrap();
    let h = homology(&c);
    assert_eq!(h.h1, AbInvariants { rank: 0, torsion: ints(&[2]) });
    assert_eq!(h.h1.to_string(), "ℤ/2");
    assert_eq!(h.warnings.len(), 1);
}

#[test]
fn complex_invariant_is_checked() {
    let d0 = m(&[vec![1]]);
    let d1 = m(&[vec![1]]);
    let err = ChainComplexZ::new(None, d0, d1, [vec!["v".into()], vec!["e".into()], vec!["t".into()]]).unwrap_err();
    assert!(matches!(err, HomologyError::InvariantViolated(_)));
}

#[test]
fn cech_examples() {
    for coefficients in [Coefficients::TrivialZ, Coefficients::FiberPowers] {
        let cov = FiniteCover { fibers: vec![2], coefficients };
        let c = cech_complex(&cov).unwrap();
        let scale = if coefficients == Coefficients::TrivialZ { 1 } else { 2 };
        assert_eq!(c.dims(), (2 * scale, 4 * scale, 8 * scale));
        assert!(homology(&c).h1.is_zero());
        assert_eq!(h1_rank_oracle(&c), 0);
    }
}

#[test]
fn graph_cech_examples() {
    let c = graph_cech_complex(&interval_graph(2, cap()).unwrap());
    assert_eq!(c.dim_list(), vec![1, 4, 10, 22]);
    let h = homology(&graph_cech_complex(&interval_graph(1, cap()).unwrap()));
    assert_eq!(h.exact, vec![true, true, true]);
    let h = homology(&graph_cech_complex(&RelGraph::discrete(5)));
    assert_eq!(h.h0, AbInvariants::free(5));
}

#[test]
fn interval_and_circle_examples() {
    for n in [1, 3, 6] {
        let r = interval_cohomology(n, cap()).unwrap();
        assert_eq!((r.h0.clone(), r.h1.clone()), (AbInvariants::free(1), AbInvariants::free(0)), "level {n}");
        assert!(r.fully_exact());
    }
    for (n, h1) in [(1, 0), (2, 1), (3, 1)] {
        let r = circle_cohomology(n, cap()).unwrap();
        assert_eq!((r.h0.rank, r.h1.clone()), (1, AbInvariants::free(h1)), "level {n}");
    }
    assert!(matches!(interval_cohomology(21, cap()), Err(HomologyError::CapExceeded(_))));
}

#[test]
fn interval_complex_is_exact_up_to_level_8() {
    for n in 0..=8 {
        let c = graph_cech_complex(&interval_graph(n, cap()).unwrap());
        let (c0, c1, _) = c.dims();
        let (r0, r1) = (rank_mod_p(&c.d0), rank_mod_p(&c.d1));
        assert_eq!(r0, c0 - 1, "level {n}");
        assert_eq!(r1, c1 - r0, "level {n}");
    }
}

#[test]
fn induced_maps() {
    let g = circle_graph(3, cap()).unwrap();
    let id: Vec<usize> = (0..8).collect();
    let f = induced_cochain_map(&g, &g, &id).unwrap();
    let c = graph_cech_complex(&g);
    let (c0, c1, c2) = c.dims();
    assert_eq!((f.f0.clone(), f.f1.clone(), f.f2.clone()), (IntMatrix::identity(c0), IntMatrix::identity(c1), IntMatrix::identity(c2)));

    for graph in [interval_graph, circle_graph] {
        let (lo, hi) = (graph(2, cap()).unwrap(), graph(3, cap()).unwrap());
        let phi = restrict_graph_map(2, cap()).unwrap();
        let f = induced_cochain_map(&lo, &hi, &phi).unwrap();
        let (a, b) = (graph_cech_complex(&lo), graph_cech_complex(&hi));
        assert_eq!(b.d0.mul(&f.f0).unwrap(), f.f1.mul(&a.d0).unwrap());
        assert_eq!(b.d1.mul(&f.f1).unwrap(), f.f2.mul(&a.d1).unwrap());
        assert_eq!(f.f0.mul(a.aug.as_ref().unwrap()).unwrap(), *b.aug.as_ref().unwrap());
    }
    let bad = [0, 3];
    let err = induced_cochain_map(&path(4), &path(2), &bad).unwrap_err();
    assert_eq!(err, HomologyError::RelationNotPreserved);
}

#[test]
fn induced_maps_compose() {
    let t = interval_tower(4, cap()).unwrap();
    let f = |n: usize| induced_cochain_map(t.level(n), t.level(n + 1), t.transition(n)).unwrap();
    let two = f(2).then(&f(3)).unwrap();
    let phi: Vec<usize> = t.transition(3).iter().map(|&v| t.transition(2)[v]).collect();
    assert_eq!(two, induced_cochain_map(t.level(2), t.level(4), &phi).unwrap());
}

#[test]
fn stabilization_examples() {
    let r = stabilization_report(&interval_tower(6, cap()).unwrap(), 6).unwrap();
    assert!(r.levels.iter().all(|l| l.h0 == AbInvariants::free(1) && l.h1.is_zero()));
    assert!(r.h0_iso.iter().chain(&r.h1_iso).all(|b| *b));
    let r = stabilization_report(&circle_tower(6, cap()).unwrap(), 6).unwrap();
    assert!(r.levels[2..].iter().all(|l| l.h1 == AbInvariants::free(1)));
    assert!(r.h0_iso.iter().all(|b| *b));
    assert!(r.h1_iso[2..].iter().all(|b| *b));
    let point = RelGraphTower::new(vec![RelGraph::discrete(1); 4], vec![vec![0]; 3]).unwrap();
    let r = stabilization_report(&point, 3).unwrap();
    assert!(r.h0_iso.iter().chain(&r.h1_iso).all(|b| *b));
    assert!(stabilization_report(&point, 4).is_err());
}

#[test]
fn matrix_dump_round_trip() {
    let a = m(&[vec![1, -2, 3], vec![0, 40, -5]]);
    assert_eq!(a.dump(), "2 3\n1 -2 3\n0 40 -5\n");
    assert_eq!(IntMatrix::parse_dump(&a.dump()).unwrap(), a);
}

fn matrix(max: usize) -> impl Strategy<Value = IntMatrix> {
    (0..=max, 0..=max, any::<u64>()).prop_map(|(r, c, seed)| {
        let mut g = rng(seed);
        let sparse = g.gen_bool(0.5);
        let rows: Vec<Vec<i64>> = (0..r)
            .map(|_| (0..c).map(|_| if sparse && g.gen_bool(0.6) { 0 } else { g.gen_range(-9..=9) }).collect())
            .collect();
        IntMatrix::from_fn(r, c, |i, j| BigInt::from(rows[i][j]))
    })
}

proptest! {
    #[test]
    fn snf_is_a_smith_form(a in matrix(8)) {
        let s = snf(&a);
        let (u, v) = (s.u.clone().unwrap(), s.v.clone().unwrap());
        prop_assert!(is_unimodular(&u) && is_unimodular(&v));
        prop_assert_eq!(u.mul(&a).unwrap().mul(&v).unwrap(), s.d.clone());
        prop_assert_eq!(u.mul(s.u_inv.as_ref().unwrap()).unwrap(), IntMatrix::identity(a.rows()));
        prop_assert_eq!(v.mul(s.v_inv.as_ref().unwrap()).unwrap(), IntMatrix::identity(a.cols()));
        let diag = s.diagonal();
        prop_assert_eq!(diag.len(), rank_q(&matrix_rows(&a)));
        prop_assert!(diag.iter().all(|x| *x > BigInt::zero()));
        prop_assert!(diag.windows(2).all(|p| p[1].is_multiple_of(&p[0])));
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                prop_assert!(i == j || s.d.get(i, j).is_zero());
            }
        }
        if a.rows() == a.cols() && diag.len() == a.rows() {
            let prod: BigInt = diag.iter().product();
            prop_assert_eq!(prod, num_traits::Signed::abs(&det(&matrix_rows(&a))));
        }
    }

    #[test]
    fn kernel_basis_spans_the_kernel(a in matrix(7)) {
        let k = kernel_basis(&a);
        prop_assert_eq!(k.cols(), a.cols() - rank_q(&matrix_rows(&a)));
        prop_assert!(a.mul(&k).unwrap().is_zero());
        prop_assert_eq!(rank_q(&matrix_rows(&k)), k.cols());
    }

    #[test]
    fn covers_are_exact_in_degree_one(fibers in prop::collection::vec(1usize..=4, 1..=4), powers in any::<bool>()) {
        let coefficients = if powers { Coefficients::FiberPowers } else { Coefficients::TrivialZ };
        let c = cech_complex(&FiniteCover { fibers, coefficients }).unwrap();
        let h = homology(&c);
        prop_assert!(h.h1.is_zero());
        prop_assert_eq!(h1_rank_oracle(&c), 0);
        prop_assert!(c.d1.mul(&c.d0).unwrap().is_zero());
    }

    #[test]
    fn graph_h1_is_the_cycle_rank_for_triangle_free_graphs(n in 4usize..9) {
        let h = homology(&graph_cech_complex(&cycle(n)));
        prop_assert_eq!(h.h0.rank, 1);
        prop_assert_eq!(h.h1, AbInvariants::free(1));
    }

    #[test]
    fn graph_complexes_match_rational_ranks(n in 1usize..7, seed in any::<u64>()) {
        let mut r = rng(seed);
        let mut pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, i)).collect();
        for _ in 0..n {
            let (a, b) = (r.gen_range(0..n), r.gen_range(0..n));
            pairs.extend([(a, b), (b, a)]);
        }
        let g = RelGraph::new(n, pairs).unwrap();
        let c = graph_cech_complex(&g);
        let h = homology(&c);
        prop_assert_eq!(h.h0.rank, c.dims().0 - rank_q(&matrix_rows(&c.d0)));
        prop_assert_eq!(h.h1.rank, h1_rank_oracle(&c));
        let aug = c.aug.as_ref().unwrap();
        prop_assert!((0..aug.rows()).all(|i| aug.get(i, 0).is_one()));
    }
}
