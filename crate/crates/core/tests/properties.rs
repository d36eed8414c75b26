mod common;

use std::collections::BTreeSet;

use common::{brute_force_longest_words, random_longest_word, random_sphere, rs, w};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use subword_core::complexes::{
    are_isomorphic, edge_subdivide, euler_characteristic, find_subdivision_sequence, subword_complex, ComplexJson,
    SearchBudget, SimplicialComplex, SubdivisionCertificate, Vertex,
};
use subword_core::coxeter::{
    coxeter_elements, demazure_product, element_of_word, is_reduced, longest_element, reduced_words, sorting_word,
    GroupElement, RootSystem, Word, DEFAULT_WORD_CAP,
};
use subword_core::labeling::{
    lr_labeling, quiver_of, rank2_subsystems, stable_set_with,
};
use subword_core::theorems::{cluster_complex, cw_complex, verify_theorem1};

const SMALL: [&str; 6] = ["A2", "B2", "G2", "A3", "B3", "H3"];
const RANK4: [&str; 5] = ["A4", "B4", "D4", "F4", "H4"];

fn words_of_wo(rs: &RootSystem) -> Vec<Word> {
    reduced_words(rs, &longest_element(rs), DEFAULT_WORD_CAP).unwrap()
}

fn coxeter_words(rs: &RootSystem) -> Vec<Word> {
    coxeter_elements(rs).into_iter().map(|(_, c)| c).collect()
}

#[test]
fn braid_closure_matches_brute_force() {
    for t in ["A2", "B2", "A3", "A1xA1"] {
        let rs = match t {
            "A1xA1" => {
                let spec = subword_core::coxeter::CoxeterSpec::from_matrix(vec![vec![1, 2], vec![2, 1]]).unwrap();
                subword_core::coxeter::build_root_system(spec).unwrap()
            }
            t => rs(t),
        };
        let braid: BTreeSet<Word> = words_of_wo(&rs).into_iter().collect();
        assert_eq!(braid, brute_force_longest_words(&rs), "{t}");
    }
}

#[test]
fn reduced_word_counts() {
    for (t, n) in [("A1", 1), ("A2", 2), ("B2", 2), ("G2", 2), ("A3", 16), ("B3", 42), ("H3", 286)] {
        assert_eq!(words_of_wo(&rs(t)).len(), n, "{t}");
    }
    assert_eq!(words_of_wo(&rs("A4")).len(), 768);
}

#[test]
fn longest_element_is_an_involution() {
    for t in SMALL.iter().chain(&RANK4).chain(&["E6", "I2(9)"]) {
        let rs = rs(t);
        let w0 = longest_element(&rs);
        assert!(w0.compose(&w0).is_identity(), "{t}");
        assert_eq!(w0.length(&rs), rs.positive_count());
    }
}

#[test]
fn sorting_words_are_reduced_longest_words() {
    for t in SMALL.iter().chain(&RANK4) {
        let rs = rs(t);
        let w0 = longest_element(&rs);
        for c in coxeter_words(&rs) {
            let s = sorting_word(&rs, &c, &w0).unwrap();
            assert!(is_reduced(&rs, &s).unwrap(), "{t} c={c}");
            assert_eq!(element_of_word(&rs, &s).unwrap(), w0, "{t} c={c}");
        }
    }
}

#[test]
fn coxeter_element_count_is_two_to_the_edges() {
    for t in SMALL.iter().chain(&RANK4).chain(&["A1", "E6"]) {
        let rs = rs(t);
        let edges = rs.spec().edges().len();
        assert_eq!(coxeter_elements(&rs).len(), 1 << edges, "{t}");
    }
}

#[test]
fn lr_is_a_bijection_onto_almost_positive_roots() {
    for t in ["A2", "B2", "G2", "A3", "B3"] {
        let rs = rs(t);
        let expected: BTreeSet<usize> =
            rs.positive_roots().chain((0..rs.rank()).map(|i| rs.negate(rs.simple(i)))).collect();
        for c in coxeter_words(&rs) {
            for wo in words_of_wo(&rs) {
                let lr = lr_labeling(&rs, &c, &wo).unwrap();
                let image: BTreeSet<usize> = (1..=(c.len() + wo.len()) as u32).map(|p| lr.label(p)).collect();
                assert_eq!(image, expected, "{t} c={c} wo={wo}");
            }
        }
    }
}

#[test]
fn lr_bijection_sampled_rank4() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for t in RANK4 {
        let rs = rs(t);
        let cs = coxeter_words(&rs);
        for k in 0..10 {
            let wo = random_longest_word(&rs, &mut rng);
            let c = &cs[k % cs.len()];
            let lr = lr_labeling(&rs, c, &wo).unwrap();
            let image: BTreeSet<usize> = (1..=(c.len() + wo.len()) as u32).map(|p| lr.label(p)).collect();
            assert_eq!(image.len(), rs.rank() + rs.positive_count(), "{t}");
        }
    }
}

#[test]
fn sorting_word_makes_everything_stable() {
    for t in SMALL.iter().chain(&RANK4) {
        let rs = rs(t);
        let subs = rank2_subsystems(&rs);
        let w0 = longest_element(&rs);
        for c in coxeter_words(&rs) {
            let s = stable_set_with(&rs, &subs, &c, &sorting_word(&rs, &c, &w0).unwrap()).unwrap();
            assert_eq!(s.roots.len(), rs.positive_count(), "{t} c={c}");
        }
    }
}

#[test]
fn quiver_constant_on_words_of_an_element() {
    for t in SMALL.iter().chain(&RANK4) {
        let rs = rs(t);
        for (e, _) in coxeter_elements(&rs) {
            let words = reduced_words(&rs, &e, DEFAULT_WORD_CAP).unwrap();
            let arrows: BTreeSet<_> = words.iter().map(|c| quiver_of(&rs, c).unwrap().arrows).collect();
            assert_eq!(arrows.len(), 1, "{t}");
        }
    }
}

#[test]
fn spherical_complexes_have_sphere_euler_characteristic() {
    for t in ["A2", "B2", "G2", "A3", "B3"] {
        let rs = rs(t);
        let n = rs.rank() as i64;
        let target = 1 + if n % 2 == 1 { 1 } else { -1 };
        for c in coxeter_words(&rs) {
            for wo in words_of_wo(&rs) {
                let k = cw_complex(&rs, &c, &wo).unwrap().complex;
                assert_eq!(euler_characteristic(&k), target, "{t} c={c} wo={wo}");
                // no cone points
                for v in k.vertices() {
                    assert!(k.facets().iter().any(|f| !f.contains(v)), "{t}: {v} is a cone point");
                }
                assert_eq!(k.facets().iter().map(Vec::len).collect::<BTreeSet<_>>(), BTreeSet::from([rs.rank()]));
            }
        }
    }
}

#[test]
fn cluster_facets_count_independent_of_element() {
    for t in ["A2", "B2", "G2", "A3", "B3", "H3", "I2(8)", "A4", "B4", "D4", "F4"] {
        let rs = rs(t);
        let counts: BTreeSet<usize> =
            coxeter_words(&rs).iter().map(|c| cluster_complex(&rs, c).unwrap().complex.facet_count()).collect();
        assert_eq!(counts.len(), 1, "{t}");
        assert_eq!(*counts.first().unwrap() as u128, subword_core::theorems::catalan_count(&rs), "{t}");
    }
}

#[test]
fn erased_diagram_isomorphism_rank4_sampled() {
    for t in ["A4", "B4", "D4"] {
        let rs = rs(t);
        let cs = coxeter_words(&rs);
        for (i, c) in cs.iter().enumerate().step_by(3) {
            let c2 = &cs[(i * 5 + 1) % cs.len()];
            let r = verify_theorem1(&rs, c, c2).unwrap();
            assert!(r.holds(), "{}", r.summary());
        }
    }
}

#[test]
fn demazure_product_saturates_at_longest_element() {
    let a3 = rs("A3");
    let w0 = longest_element(&a3);
    let q = w("1 2 3 1 2 3 1 2 3");
    assert_eq!(demazure_product(&a3, &q).unwrap(), w0);
    assert_eq!(demazure_product(&a3, &w("1 1 1")).unwrap(), GroupElement::simple_reflection(&a3, 0));
}

fn cycle(n: u32) -> SimplicialComplex {
    SimplicialComplex::from_facets((1..=n).map(|i| vec![i, i % n + 1]))
}

#[test]
fn subdivision_examples() {
    let out = find_subdivision_sequence(&cycle(4), &cycle(5), SearchBudget::nodes(1000));
    let cert = out.certificate().expect("found");
    assert_eq!(cert.len(), 1);
    cert.verify(&cycle(4), &cycle(5)).unwrap();
    let out = find_subdivision_sequence(&cycle(5), &cycle(5), SearchBudget::nodes(10));
    assert!(out.certificate().unwrap().is_empty());
    let a2 = rs("A2");
    let k = subword_complex(&a2, &w("1 2 1 2 1"), &longest_element(&a2)).unwrap().complex;
    assert!(are_isomorphic(&k, &cycle(5)).is_some());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn edge_subdivision_adds_one_vertex_and_keeps_purity(seed in any::<u64>(), n in 2usize..5, steps in 0usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = random_sphere(&mut rng, n, steps);
        let edges = common::edges(&k);
        let e = edges[(seed as usize) % edges.len()];
        let fresh = k.vertices().iter().max().unwrap() + 1;
        let next = edge_subdivide(&k, e, fresh).unwrap();
        prop_assert_eq!(next.vertex_count(), k.vertex_count() + 1);
        prop_assert!(next.is_pure());
        prop_assert_eq!(next.dimension(), k.dimension());
        prop_assert_eq!(euler_characteristic(&next), euler_characteristic(&k));
        prop_assert!(edge_subdivide(&k, e, *k.vertices().iter().next().unwrap()).is_err());
    }

    #[test]
    fn isomorphism_reflexive_and_symmetric(seed in any::<u64>(), n in 2usize..5, steps in 0usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = random_sphere(&mut rng, n, steps);
        // a fixed-point-free relabelling
        let verts: Vec<Vertex> = k.vertices().iter().copied().collect();
        let map = verts.iter().enumerate().map(|(i, &v)| (v, verts[(i + 1 + seed as usize % 3) % verts.len()] + 100)).collect();
        let other = k.relabel(&map);
        let id = are_isomorphic(&k, &k);
        prop_assert!(id.is_some());
        let fwd = are_isomorphic(&k, &other);
        let back = are_isomorphic(&other, &k);
        prop_assert_eq!(fwd.is_some(), back.is_some());
        prop_assert!(fwd.is_some());
        prop_assert_eq!(k.relabel(&fwd.unwrap()), other.clone());
        prop_assert_eq!(other.relabel(&back.unwrap()), k);
    }

    #[test]
    fn certificates_replay_and_roundtrip(seed in any::<u64>(), n in 2usize..4, steps in 0usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let src = subword_core::complexes::cross_polytope_boundary(n);
        let dst = random_sphere(&mut rng, n, steps);
        let out = find_subdivision_sequence(&src, &dst, SearchBudget::nodes(50_000));
        let cert = out.certificate().expect("built by subdivision");
        prop_assert_eq!(cert.len(), dst.vertex_count() - src.vertex_count());
        prop_assert!(cert.verify(&src, &dst).is_ok());
        let json = serde_json::to_string(cert).unwrap();
        let back: SubdivisionCertificate = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&back, cert);
        prop_assert!(back.verify(&src, &dst).is_ok());
    }

    #[test]
    fn complex_json_roundtrip(seed in any::<u64>(), n in 1usize..5, steps in 0usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = random_sphere(&mut rng, n, steps);
        let json: ComplexJson = serde_json::from_str(&serde_json::to_string(&k.to_json()).unwrap()).unwrap();
        prop_assert_eq!(SimplicialComplex::from_json(&json).unwrap(), k.clone());
        let direct: SimplicialComplex = serde_json::from_str(&serde_json::to_string(&k).unwrap()).unwrap();
        prop_assert_eq!(direct, k);
    }

    #[test]
    fn word_length_changes_by_one(t in prop::sample::select(vec!["A3", "B3", "H3", "D4", "F4"]), letters in prop::collection::vec(0usize..3, 0..20), extra in 0usize..3) {
        let rs = rs(t);
        let word = Word::new(letters);
        let e = element_of_word(&rs, &word).unwrap();
        let mut f = e.clone();
        f.mul_simple_right(&rs, extra);
        let (a, b) = (e.length(&rs) as i64, f.length(&rs) as i64);
        prop_assert_eq!((a - b).abs(), 1);
        if is_reduced(&rs, &word).unwrap() {
            prop_assert_eq!(a as usize, word.len());
            prop_assert_eq!(demazure_product(&rs, &word).unwrap(), e);
        }
    }

    #[test]
    fn random_longest_words_are_reduced(seed in any::<u64>(), t in prop::sample::select(vec!["A4", "B4", "D4", "F4", "H4"])) {
        let rs = rs(t);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let wo = random_longest_word(&rs, &mut rng);
        prop_assert_eq!(wo.len(), rs.positive_count());
        prop_assert!(is_reduced(&rs, &wo).unwrap());
        prop_assert_eq!(element_of_word(&rs, &wo).unwrap(), longest_element(&rs));
    }
}

#[test]
fn stable_sets_agree_across_words_of_an_element() {
    for t in ["A3", "B3", "H3"] {
        let rs = rs(t);
        let subs = rank2_subsystems(&rs);
        for (e, _) in coxeter_elements(&rs) {
            let cs = reduced_words(&rs, &e, DEFAULT_WORD_CAP).unwrap();
            for wo in words_of_wo(&rs) {
                let sets: BTreeSet<_> = cs.iter().map(|c| stable_set_with(&rs, &subs, c, &wo).unwrap().roots).collect();
                assert_eq!(sets.len(), 1, "{t} wo={wo}");
            }
        }
    }
}
