#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use subword_core::complexes::{cross_polytope_boundary, edge_subdivide, SimplicialComplex, Vertex};
use subword_core::coxeter::{
    build_root_system, element_of_word, longest_element, GroupElement, RootSystem, Word,
};

pub fn rs(t: &str) -> RootSystem {
    build_root_system(t.parse().expect("type")).expect("root system")
}

pub fn w(s: &str) -> Word {
    s.parse().expect("word")
}

/// A reduced word of `w_o` built by appending uniformly chosen ascents.
pub fn random_longest_word<R: Rng>(rs: &RootSystem, rng: &mut R) -> Word {
    let mut e = GroupElement::identity(rs);
    let mut letters = Vec::new();
    loop {
        let ascents: Vec<usize> = (0..rs.rank()).filter(|&i| e.right_ascent(rs, i)).collect();
        let Some(&i) = ascents.choose(rng) else { return Word::new(letters) };
        e.mul_simple_right(rs, i);
        letters.push(i);
    }
}

/// Every word of length `ℓ(w_o)` whose product is `w_o`, by enumerating all
/// `n^N` candidates.
pub fn brute_force_longest_words(rs: &RootSystem) -> BTreeSet<Word> {
    let n = rs.rank();
    let len = rs.positive_count();
    let w0 = longest_element(rs);
    let total = n.pow(len as u32);
    (0..total)
        .map(|mut code| {
            let mut letters = vec![0; len];
            for slot in letters.iter_mut().rev() {
                *slot = code % n;
                code /= n;
            }
            Word::new(letters)
        })
        .filter(|word| element_of_word(rs, word).unwrap() == w0)
        .collect()
}

/// A sphere obtained from a cross-polytope boundary by random edge
/// subdivisions, with occasional vertex relabelling.
pub fn random_sphere<R: Rng>(rng: &mut R, n: usize, steps: usize) -> SimplicialComplex {
    let mut k = cross_polytope_boundary(n);
    for _ in 0..steps {
        if n < 2 {
            break;
        }
        let edges = edges(&k);
        let &(a, b) = edges.choose(rng).expect("an edge");
        let fresh = k.vertices().iter().max().unwrap() + 1 + rng.gen_range(0..3);
        k = edge_subdivide(&k, (a, b), fresh).unwrap();
    }
    k
}

pub fn edges(k: &SimplicialComplex) -> Vec<(Vertex, Vertex)> {
    let mut out = BTreeSet::new();
    for f in k.facets() {
        for (i, &a) in f.iter().enumerate() {
            for &b in &f[i + 1..] {
                out.insert((a, b));
            }
        }
    }
    out.into_iter().collect()
}
