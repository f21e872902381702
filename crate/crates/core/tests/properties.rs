use proptest::prelude::*;
use serre_core::homology::reduced_betti_all;
use serre_core::monomial::{complex_of_ideal, stanley_reisner_ideal};
use serre_core::report::InvariantBlock;
use serre_core::serre::serre_profile;
use serre_core::verify::{run_property, CorpusSpec, Fields, Grid, Property};
use serre_core::{parse_facets, write_facets, Criterion, Face, PrimeField, SimplicialComplex};

const F2: PrimeField = PrimeField::gf2();

fn complex() -> impl Strategy<Value = SimplicialComplex> {
    (1usize..=7).prop_flat_map(|n| {
        prop::collection::vec(1u64..(1 << n), 1..=5)
            .prop_map(move |bits| SimplicialComplex::from_facets(bits.into_iter().map(Face::from_bits), n).unwrap())
    })
}

fn pure_complex() -> impl Strategy<Value = SimplicialComplex> {
    (2usize..=7).prop_flat_map(|n| {
        (1..=n).prop_flat_map(move |k| {
            let all = Face::full(n).subsets_of_size(k);
            prop::sample::subsequence(all.clone(), 1..=all.len().min(8))
                .prop_map(move |facets| SimplicialComplex::from_facets(facets, n).unwrap())
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn alexander_dual_is_an_involution(c in complex()) {
        prop_assert_eq!(c.alexander_dual().alexander_dual(), c);
    }

    #[test]
    fn links_compose(c in complex(), pick in any::<prop::sample::Index>(), split in any::<u64>()) {
        let faces = c.all_faces();
        let rho = faces[pick.index(faces.len())];
        let sigma = Face::from_bits(rho.bits() & split);
        let tau = rho.difference(sigma);
        let nested = c.link(sigma).unwrap().link(tau).unwrap();
        prop_assert_eq!(nested, c.link(rho).unwrap());
    }

    #[test]
    fn skeleton_is_idempotent_and_nested(c in complex(), i in -1isize..6, k in 0isize..3) {
        let s = c.skeleton(i);
        prop_assert_eq!(s.skeleton(i), s.clone());
        prop_assert_eq!(c.skeleton(i + k).skeleton(i), s.clone());
        prop_assert!(s.all_faces().iter().all(|f| c.is_face(*f) && f.len() as isize <= i + 1));
    }

    #[test]
    fn skeleton_of_pure_complex_is_pure(c in pure_complex(), i in 0isize..6) {
        let s = c.skeleton(i);
        prop_assert!(s.is_pure());
        prop_assert_eq!(s.dim().unwrap(), i.min(c.dim().unwrap()));
    }

    #[test]
    fn facet_graph_grows_with_j(c in complex(), j in 0usize..5) {
        let small = c.facet_graph(j).unwrap();
        let big = c.facet_graph(j + 1).unwrap();
        prop_assert!(small.edges.iter().all(|e| big.edges.contains(e)));
        prop_assert!(!small.is_connected() || big.is_connected());
    }

    #[test]
    fn cones_are_acyclic(c in complex()) {
        let cone = c.cone(c.n()).unwrap();
        prop_assert!(reduced_betti_all(&cone, F2).is_zero());
        prop_assert!(reduced_betti_all(&cone, PrimeField::large()).is_zero());
    }

    #[test]
    fn stanley_reisner_dictionary_round_trips(c in complex()) {
        prop_assert_eq!(complex_of_ideal(&stanley_reisner_ideal(&c)), c);
    }

    #[test]
    fn facet_format_round_trips(c in complex()) {
        let text = write_facets(&c);
        let back = parse_facets(&text).unwrap();
        prop_assert_eq!(&back, &c);
        prop_assert_eq!(write_facets(&back), text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn profile_is_monotone(c in complex()) {
        let p = serre_profile(&c, F2, &[Criterion::Definition]).unwrap();
        let d = p.krull_dim;
        for ell in 1..=d {
            for j in 0..=d {
                if p.get(ell, j) == Some(true) {
                    if j < d {
                        prop_assert_eq!(p.get(ell, j + 1), Some(true));
                    }
                    if ell > 1 {
                        prop_assert_eq!(p.get(ell - 1, j), Some(true));
                    }
                }
            }
        }
    }

    #[test]
    fn reports_are_deterministic(c in complex()) {
        let a = serde_json::to_string(&InvariantBlock::compute(&c, F2).unwrap()).unwrap();
        let b = serde_json::to_string(&InvariantBlock::compute(&c, F2).unwrap()).unwrap();
        prop_assert_eq!(a, b);
        let p = serre_profile(&c, F2, &Criterion::ALL).unwrap();
        let q = serre_profile(&c, F2, &Criterion::ALL).unwrap();
        prop_assert_eq!(p, q);
    }
}

#[test]
fn seeded_corpora_and_suites_are_reproducible() {
    let spec = CorpusSpec::random_pure(4, 6, 40, 7);
    let a = spec.generate().unwrap();
    assert_eq!(a, spec.generate().unwrap());
    let grid = Grid::default();
    let first = run_property(Property::ReisnerEquivalence, &a, &grid, Fields::default());
    let second = run_property(Property::ReisnerEquivalence, &a, &grid, Fields::default());
    assert_eq!(first, second);
    assert!(first.passed());
}
