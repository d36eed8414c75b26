use serde::Serialize;

use super::simplicial::{SimplicialComplex, Vertex};
use crate::coxeter::{demazure_product, GroupElement, RootSystem, Word};
use crate::error::Result;

/// `Δ(Q; π)` with vertices the 1-based positions of `Q` that lie in some facet.
#[derive(Clone, Debug, Serialize)]
pub struct SubwordComplex {
    pub word: Word,
    #[serde(skip)]
    pub target: GroupElement,
    pub complex: SimplicialComplex,
}

impl SubwordComplex {
    /// Positions (1-based) occurring in no facet.
    pub fn unused_positions(&self) -> Vec<Vertex> {
        (1..=self.word.len() as Vertex).filter(|p| !self.complex.vertices().contains(p)).collect()
    }
}

/// Facets are complements of position sets spelling a reduced word for
/// `pi`. The search walks positions left to right carrying
/// `x = π^{-1}·(chosen prefix)`: a letter `s` may be taken iff `x(α_s) < 0`,
/// which keeps the chosen subword reduced and inside `π`.
pub fn subword_complex(rs: &RootSystem, q: &Word, pi: &GroupElement) -> Result<SubwordComplex> {
    q.check_rank(rs.rank())?;
    let target_len = pi.length(rs);
    let mut facets = Vec::new();
    if target_len <= q.len() {
        let mut chosen = vec![false; q.len()];
        search(rs, q.letters(), 0, pi.inverse(), target_len, &mut chosen, &mut facets);
    }
    let complex = if facets.is_empty() {
        SimplicialComplex::void()
    } else {
        facets.sort();
        SimplicialComplex::from_sorted_unchecked(facets)
    };
    Ok(SubwordComplex { word: q.clone(), target: pi.clone(), complex })
}

fn search(
    rs: &RootSystem,
    letters: &[usize],
    pos: usize,
    x: GroupElement,
    remaining: usize,
    chosen: &mut [bool],
    out: &mut Vec<Vec<Vertex>>,
) {
    if remaining == 0 {
        out.push((0..letters.len()).filter(|&p| !chosen[p]).map(|p| p as Vertex + 1).collect());
        return;
    }
    if letters.len() - pos < remaining {
        return;
    }
    let s = letters[pos];
    if !x.right_ascent(rs, s) {
        let mut y = x.clone();
        y.mul_simple_right(rs, s);
        chosen[pos] = true;
        search(rs, letters, pos + 1, y, remaining - 1, chosen, out);
        chosen[pos] = false;
    }
    if letters.len() - pos > remaining {
        search(rs, letters, pos + 1, x, remaining, chosen, out);
    }
}

/// Spherical iff the Demazure product of `q` is `pi`.
pub fn is_spherical(rs: &RootSystem, q: &Word, pi: &GroupElement) -> Result<bool> {
    Ok(demazure_product(rs, q)? == *pi)
}
