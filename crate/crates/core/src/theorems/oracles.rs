//! Models that do not go through subword complexes at all.

use std::collections::{BTreeMap, BTreeSet};

use crate::complexes::{maximal_cliques, SimplicialComplex, Vertex};
use crate::coxeter::RootSystem;

/// Diagonals of a convex `(n+3)`-gon, numbered from 1 in lexicographic order
/// of their endpoints.
pub fn polygon_diagonals(n: usize) -> Vec<(usize, usize)> {
    let p = n + 3;
    (0..p)
        .flat_map(|i| (i + 2..p).map(move |j| (i, j)))
        .filter(|&(i, j)| !(i == 0 && j == p - 1))
        .collect()
}

fn crossing((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// Complex of pairwise noncrossing diagonals; facets are triangulations.
pub fn type_a_oracle(n: usize) -> SimplicialComplex {
    assert!((1..=5).contains(&n), "type A oracle supports 1 <= n <= 5");
    let diagonals = polygon_diagonals(n);
    let ids = 1..=diagonals.len() as Vertex;
    let mut adj: BTreeMap<Vertex, BTreeSet<Vertex>> = ids.clone().map(|v| (v, BTreeSet::new())).collect();
    for (x, &d) in diagonals.iter().enumerate() {
        for (y, &e) in diagonals.iter().enumerate() {
            if x != y && !crossing(d, e) {
                adj.get_mut(&(x as Vertex + 1)).expect("id").insert(y as Vertex + 1);
            }
        }
    }
    SimplicialComplex::from_facets(maximal_cliques(&adj))
}

/// `∏ (d_i + h) / d_i` per irreducible component, multiplied together.
pub fn catalan_count(rs: &RootSystem) -> u128 {
    rs.spec()
        .components()
        .iter()
        .map(|c| {
            let h = c.family.coxeter_number() as u128;
            let (num, den) = c
                .family
                .degrees()
                .iter()
                .fold((1u128, 1u128), |(num, den), &d| (num * (d as u128 + h), den * d as u128));
            num / den
        })
        .product()
}
