mod common;

use std::collections::BTreeSet;

use common::*;
use proptest::prelude::*;
use rand::Rng;
use stonework::boolalg::{llpo_split, Term};
use stonework::cap::Cap;
use stonework::interval::{interval_tower, restrict_graph_map};
use stonework::profinite::*;

fn cap() -> Cap {
    Cap::default()
}

fn full(d: &SeqDiagram) -> Vec<Vec<bool>> {
    (0..d.levels()).map(|n| vec![true; d.level_size(n)]).collect()
}

fn finite(gens: &[&str], rels: Vec<Term>) -> CountablePresentation {
    CountablePresentation {
        gens: GeneratorSupply::Finite(gens.iter().map(|g| g.to_string()).collect()),
        explicit: rels,
        family: RelationFamily::None,
    }
}

#[test]
fn cantor_tower() {
    let t = truncation_tower(&CountablePresentation::cantor(), 3, cap()).unwrap();
    let d = spectrum_tower(&t);
    assert_eq!(d.sizes(), vec![2, 4, 8]);
    for n in 1..d.levels() {
        for x in 0..d.level_size(n) {
            let label = d.label(n, x);
            assert_eq!(d.label(n - 1, d.transition(n - 1)[x]), &label[..label.len() - 1]);
        }
    }
}

#[test]
fn trivial_and_single_level_towers() {
    let t = truncation_tower(&finite(&[], vec![Term::One]), 2, cap()).unwrap();
    assert_eq!(spectrum_tower(&t).sizes(), vec![0, 0]);
    let t = truncation_tower(&CountablePresentation::cantor(), 1, cap()).unwrap();
    let d = spectrum_tower(&t);
    assert_eq!(d.levels(), 1);
    assert_eq!(d.labels(0), ["0", "1"]);
}

#[test]
fn binfty_tower_matches_enumeration() {
    let p = CountablePresentation::binfty();
    let t = truncation_tower(&p, 6, cap()).unwrap();
    let d = spectrum_tower(&t);
    for n in 0..6 {
        let level = p.truncation(n).unwrap();
        let k = level.gens().len();
        assert_eq!(d.level_size(n), brute_points(level.gens(), level.rels()).len(), "level {n}");
        if level.rels().len() == k * (k - 1) / 2 {
            assert_eq!(d.level_size(n), k + 1, "level {n}");
        }
    }
    assert_eq!(&d.sizes()[..3], [3, 5, 4]);
}

#[test]
fn spectrum_tower_reverses_arrows() {
    let t = truncation_tower(&CountablePresentation::binfty(), 5, cap()).unwrap();
    let d = spectrum_tower(&t);
    for n in 0..t.connecting.len() {
        let lower = &t.levels[n];
        let upper = &t.levels[n + 1];
        for x in 0..upper.len() {
            let y = d.transition(n)[x];
            for (g, name) in lower.source().gens().iter().enumerate() {
                let h = upper.source().gen_index(name).unwrap();
                assert_eq!(lower.value(y, g), upper.value(x, h));
            }
        }
    }
}

#[test]
fn chains() {
    let d = spectrum_tower(&truncation_tower(&CountablePresentation::cantor(), 3, cap()).unwrap());
    let cs = points_at_depth(&d, 2).unwrap();
    assert_eq!(cs.len(), 8);
    assert!(cs.iter().all(|c| c.len() == 3 && c[0] == c[1] / 2 && c[1] == c[2] / 2));
    let e = SeqDiagram::new(vec![vec!["a".into()], vec![]], vec![vec![]]).unwrap();
    assert!(points_at_depth(&e, 1).unwrap().is_empty());
    let b = spectrum_tower(&truncation_tower(&CountablePresentation::binfty(), 4, cap()).unwrap());
    for depth in 0..4 {
        assert_eq!(points_at_depth(&b, depth).unwrap().len(), b.level_size(depth));
    }
    assert!(matches!(points_at_depth(&d, 3), Err(ProfiniteError::DepthOutOfRange { .. })));
}

#[test]
fn emptiness_examples() {
    let t = truncation_tower(&CountablePresentation::cantor(), 3, cap()).unwrap();
    let d = spectrum_tower(&t);
    let zero = generator_constraint(&t, "g0", false);
    let one = generator_constraint(&t, "g0", true);
    assert_eq!(constraint_witness(&d, &[zero, one]).unwrap(), Some(0));
    assert_eq!(constraint_witness(&d, &[]).unwrap(), None);
    let c = closed_from_decidables(&d, &full(&d)).unwrap();
    assert_eq!(emptiness_witness(&c), None);

    let t = truncation_tower(&CountablePresentation::binfty(), 4, cap()).unwrap();
    let d = spectrum_tower(&t);
    let both = [generator_constraint(&t, "g0", true), generator_constraint(&t, "g1", true)];
    let first = (0..t.levels.len()).find(|&n| t.levels[n].source().gen_index("g1").is_some()).unwrap();
    assert_eq!(constraint_witness(&d, &both).unwrap(), Some(first));
}

#[test]
fn closed_tower_examples() {
    let d = SeqDiagram::cantor(2);
    let c = closed_from_decidables(&d, &full(&d)).unwrap();
    assert_eq!(c.as_diagram(), d);
    let mut s = full(&d);
    s[2] = vec![true, false, false, false];
    let c = closed_from_decidables(&d, &s).unwrap();
    assert_eq!((c.selected(0), c.selected(1)), (&[true][..], &[true, false][..]));
    s[2] = vec![false; 4];
    let c = closed_from_decidables(&d, &s).unwrap();
    assert!((0..3).all(|n| c.selected_count(n) == 0));
}

#[test]
fn levelwise_factor_of_llpo() {
    let f = llpo_tower(3, cap()).unwrap();
    let fac = levelwise_factor(&f);
    for n in 0..3 {
        assert_eq!(fac.epi.level(n), f.level(n));
        assert_eq!(fac.mono.level(n), (0..f.dst().level_size(n)).collect::<Vec<_>>());
        assert_eq!(f.is_surjective(n), llpo_split(n + 1, cap()).unwrap().surjective);
    }
    assert_eq!(fac.mono, LevelwiseMap::identity(f.dst()));
}

#[test]
fn noncommuting_square_is_reported() {
    let d = SeqDiagram::cantor(2);
    let maps = vec![vec![0], vec![0, 1], vec![2, 1, 0, 3]];
    assert_eq!(LevelwiseMap::new(d.clone(), d, maps).unwrap_err(), ProfiniteError::SquareNotCommuting { level: 2 });
}

#[test]
fn component_examples() {
    let t = interval_tower(2, cap()).unwrap();
    assert_eq!(connected_component(t.level(2), 0), BTreeSet::from([0, 1, 2, 3]));
    assert_eq!(connected_component(&RelGraph::discrete(4), 2), BTreeSet::from([2]));
    let g = RelGraph::new(4, [(0, 0), (0, 1), (1, 0), (1, 1), (2, 2), (2, 3), (3, 2), (3, 3)]).unwrap();
    assert_eq!(connected_component(&g, 0), BTreeSet::from([0, 1]));
}

#[test]
fn total_disconnection() {
    let eq = RelGraphTower::new(
        (0..4).map(|n| RelGraph::discrete(1 << n)).collect(),
        (0..3).map(|n| restrict_graph_map(n, cap()).unwrap()).collect(),
    )
    .unwrap();
    assert!(is_totally_disconnected(&eq, 3).unwrap());
    let t = interval_tower(4, cap()).unwrap();
    assert!(is_totally_disconnected(&t, 0).unwrap());
    assert!((1..=4).all(|d| !is_totally_disconnected(&t, d).unwrap()));
    let b = spectrum_tower(&truncation_tower(&CountablePresentation::binfty(), 3, cap()).unwrap());
    let bt = RelGraphTower::new(
        (0..3).map(|n| RelGraph::discrete(b.level_size(n))).collect(),
        (1..3).map(|n| b.transition(n - 1).to_vec()).collect(),
    )
    .unwrap();
    assert!(is_totally_disconnected(&bt, 2).unwrap());
}

#[test]
fn bounded_maps() {
    assert_eq!(bound_levelwise_nat_map(&[5, 2, 7, 0]).k, 8);
    assert_eq!(bound_levelwise_nat_map(&[0, 0]).k, 1);
    assert_eq!(bound_levelwise_nat_map(&[]).k, 0);
}

#[test]
fn invalid_graphs_are_rejected() {
    assert_eq!(RelGraph::new(2, [(0, 0)]).unwrap_err(), ProfiniteError::NotReflexive(1));
    assert_eq!(RelGraph::new(2, [(0, 0), (1, 1), (0, 1)]).unwrap_err(), ProfiniteError::NotSymmetric(0, 1));
}

/// A random diagram with surjective-or-not transitions.
fn random_diagram(seed: u64) -> SeqDiagram {
    let mut r = rng(seed);
    let levels = r.gen_range(1..5);
    let mut sizes = vec![r.gen_range(1..4)];
    for _ in 1..levels {
        let s = if sizes[sizes.len() - 1] == 0 { 0 } else { r.gen_range(0..6) };
        sizes.push(s);
    }
    let labels = sizes.iter().map(|&s| (0..s).map(|i| i.to_string()).collect()).collect();
    let transitions = (1..levels).map(|n| (0..sizes[n]).map(|_| r.gen_range(0..sizes[n - 1])).collect()).collect();
    SeqDiagram::new(labels, transitions).unwrap()
}

fn random_subsets(d: &SeqDiagram, seed: u64) -> Vec<Vec<bool>> {
    let mut r = rng(seed);
    (0..d.levels()).map(|n| (0..d.level_size(n)).map(|_| r.gen_bool(0.7)).collect()).collect()
}

proptest! {
    #[test]
    fn saturation_shrinks_and_is_idempotent(seed in any::<u64>()) {
        let d = random_diagram(seed);
        let s = random_subsets(&d, seed ^ 1);
        let c = closed_from_decidables(&d, &s).unwrap();
        for n in 0..d.levels() {
            prop_assert!(c.selected(n).iter().zip(&s[n]).all(|(a, b)| !a || *b));
        }
        let sel: Vec<Vec<bool>> = (0..d.levels()).map(|n| c.selected(n).to_vec()).collect();
        let again = closed_from_decidables(&d, &sel).unwrap();
        prop_assert_eq!(again, c);
    }

    #[test]
    fn nonempty_top_gives_chains(seed in any::<u64>()) {
        let d = random_diagram(seed);
        let c = closed_from_decidables(&d, &random_subsets(&d, seed ^ 2)).unwrap();
        let top = d.levels() - 1;
        let chains = points_at_depth(&c.as_diagram(), top).unwrap();
        prop_assert_eq!(chains.len(), c.selected_count(top));
        match emptiness_witness(&c) {
            Some(_) => prop_assert!(chains.is_empty()),
            None => prop_assert!(!chains.is_empty()),
        }
    }

    #[test]
    fn components_are_symmetric_and_saturated(n in 1usize..10, seed in any::<u64>()) {
        let mut r = rng(seed);
        let mut pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, i)).collect();
        for _ in 0..n {
            let (a, b) = (r.gen_range(0..n), r.gen_range(0..n));
            pairs.push((a, b));
            pairs.push((b, a));
        }
        let g = RelGraph::new(n, pairs).unwrap();
        for u in 0..n {
            let q = connected_component(&g, u);
            for &v in &q {
                prop_assert!(connected_component(&g, v).contains(&u));
                prop_assert!(g.neighbours(v).iter().all(|w| q.contains(w)));
            }
        }
    }

    #[test]
    fn factorization_composes(seed in any::<u64>()) {
        let d = random_diagram(seed);
        let mut r = rng(seed ^ 3);
        // maps into the one-point-per-level quotient along level-0 classes
        let target_sizes: Vec<usize> = (0..d.levels()).map(|n| d.level_size(n).max(1)).collect();
        let src_top: Vec<usize> = (0..d.level_size(0)).map(|_| r.gen_range(0..target_sizes[0])).collect();
        let dst = SeqDiagram::new(
            (0..d.levels()).map(|_| (0..target_sizes[0]).map(|i| i.to_string()).collect()).collect(),
            (1..d.levels()).map(|_| (0..target_sizes[0]).collect()).collect(),
        ).unwrap();
        let mut maps = vec![src_top];
        for n in 1..d.levels() {
            let prev = maps[n - 1].clone();
            maps.push((0..d.level_size(n)).map(|x| prev[d.transition(n - 1)[x]]).collect());
        }
        let f = LevelwiseMap::new(d.clone(), dst, maps).unwrap();
        let fac = levelwise_factor(&f);
        for n in 0..d.levels() {
            prop_assert!(fac.epi.is_surjective(n) && fac.mono.is_injective(n));
            let composite: Vec<usize> = fac.epi.level(n).iter().map(|&m| fac.mono.level(n)[m]).collect();
            prop_assert_eq!(&composite[..], f.level(n));
        }
    }
}
