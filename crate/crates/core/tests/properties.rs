use proptest::prelude::*;
use std::sync::OnceLock;
use ybe::complexes::{cycle_set_complex, AlphaBeta, BoundaryModel};
use ybe::extensions::{
    all_2cocycles, coboundary, extend, extensions_equivalent, is_2cocycle, is_star_2cocycle, section_cocycle,
    star_coboundary, Cochain2,
};
use ybe::fixtures;
use ybe::guitar::{guitar, guitar_inverse};
use ybe::homology::{homology_all, is_divisibility_chain, smith_normal_form, FiniteAbelianGroup, IntMatrix};
use ybe::io::{parse_document, to_json, Document};
use ybe::multipermutation::{canonical_form, enumerate_cycle_sets, find_isomorphism, EnumerationConfig};
use ybe::structures::{BraidedSet, CycleSet, LeftModule, RightModule};

fn library() -> &'static Vec<CycleSet> {
    static L: OnceLock<Vec<CycleSet>> = OnceLock::new();
    L.get_or_init(|| {
        (1..=4)
            .flat_map(|n| enumerate_cycle_sets(EnumerationConfig { up_to_iso: true, ..EnumerationConfig::new(n) }).unwrap())
            .collect()
    })
}

fn small() -> Vec<CycleSet> {
    library().iter().filter(|c| c.size() <= 3).cloned().collect()
}

fn cocycles(idx: usize, k: u64) -> &'static Vec<Cochain2> {
    static C: OnceLock<Vec<Vec<Vec<Cochain2>>>> = OnceLock::new();
    let all = C.get_or_init(|| {
        small()
            .iter()
            .map(|c| (2..=3).map(|k| all_2cocycles(c, &FiniteAbelianGroup::cyclic(k)).unwrap()).collect())
            .collect()
    });
    &all[idx][(k - 2) as usize]
}

/// A cycle set from the library with a random relabeling.
fn relabeled() -> impl Strategy<Value = (CycleSet, CycleSet)> {
    (0..library().len()).prop_flat_map(|i| {
        let c = library()[i].clone();
        let n = c.size();
        Just((0..n).collect::<Vec<usize>>()).prop_shuffle().prop_map(move |p| (c.clone(), c.relabel(&p)))
    })
}

fn is_iso(a: &CycleSet, b: &CycleSet, p: &[usize]) -> bool {
    let n = a.size();
    (0..n).all(|x| (0..n).all(|y| p[a.op(x, y)] == b.op(p[x], p[y])))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_is_relabeling_invariant((c, d) in relabeled()) {
        prop_assert_eq!(canonical_form(&c).unwrap(), canonical_form(&d).unwrap());
        let p = find_isomorphism(&c, &d).expect("relabelings are isomorphic");
        prop_assert!(is_iso(&c, &d, &p));
    }

    #[test]
    fn homology_is_relabeling_invariant((c, d) in relabeled()) {
        let deg = if c.size() == 4 { 2 } else { 3 };
        prop_assert_eq!(
            homology_all(&cycle_set_complex(&c, deg)).unwrap(),
            homology_all(&cycle_set_complex(&d, deg)).unwrap()
        );
    }

    #[test]
    fn boundary_squares_to_zero(fx in 0usize..16, alpha in -3i64..=3, beta in -3i64..=3, adjoint: bool) {
        let all = fixtures::all();
        let b = &all[fx % all.len()].braided;
        let (m, n) = if adjoint {
            (RightModule::adjoint(b), LeftModule::adjoint(b))
        } else {
            (RightModule::trivial(b.size()), LeftModule::trivial(b.size()))
        };
        let model = BoundaryModel::birack(b, &m, &n).unwrap();
        prop_assert!(model.chain_complex(3, AlphaBeta::new(alpha, beta)).is_complex());
    }

    #[test]
    fn guitar_round_trips(fx in 0usize..16, xs in proptest::collection::vec(0usize..3, 0..6)) {
        let all = fixtures::all();
        let b = &all[fx % all.len()].braided;
        let xs: Vec<usize> = xs.into_iter().map(|x| x % b.size()).collect();
        prop_assert_eq!(guitar_inverse(b, &guitar(b, &xs)).unwrap(), xs);
    }

    #[test]
    fn coboundaries_are_cocycles(i in 0usize..8, k in 2u64..=4, gamma in proptest::collection::vec(0usize..4, 3)) {
        let c = &small()[i % small().len()];
        let a = FiniteAbelianGroup::cyclic(k);
        let g: Vec<usize> = gamma.iter().take(c.size()).map(|v| v % a.order()).collect();
        prop_assert!(is_2cocycle(c, &coboundary(c, &a, &g)).unwrap());
        let b = BraidedSet::from_cycle_set(c);
        prop_assert!(is_star_2cocycle(&b, &star_coboundary(&b, &a, &g).unwrap()).unwrap());
    }

    #[test]
    fn section_cocycles_are_cohomologous(i in 0usize..8, k in 2u64..=3, pick: usize, shift in proptest::collection::vec(0usize..3, 3)) {
        let c = &small()[i % small().len()];
        let cs = cocycles(i % small().len(), k);
        let f = &cs[pick % cs.len()];
        let e = extend(c, f).unwrap();
        let n = c.size();
        let s: Vec<usize> = (0..n).map(|x| e.element(shift[x] % k as usize, x)).collect();
        let g = section_cocycle(&e, &s).unwrap();
        prop_assert!(extensions_equivalent(c, f, &g).unwrap());
    }

    #[test]
    fn json_round_trips((_, d) in relabeled(), i in 0usize..8, pick: usize) {
        let doc = Document::Cycle(d);
        prop_assert_eq!(parse_document(&to_json(&doc)).unwrap(), doc);
        let cs = cocycles(i % small().len(), 3);
        let f = Document::Cochain(cs[pick % cs.len()].clone());
        prop_assert_eq!(parse_document(&to_json(&f)).unwrap(), f);
    }

    #[test]
    fn smith_form_certifies(rows in proptest::collection::vec(proptest::collection::vec(-6i64..=6, 4), 1..5)) {
        let a = IntMatrix::from_rows(rows);
        let snf = smith_normal_form(&a);
        prop_assert!(snf.verify(&a));
        prop_assert!(is_divisibility_chain(&snf.diagonal));
    }
}
