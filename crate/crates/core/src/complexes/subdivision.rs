//! Edge-subdivision certificates and the search that produces them.
//!
//! The search runs backwards from the target: it repeatedly undoes an edge
//! subdivision (contracts a vertex `v` whose star is `{a, b} * L` with `ab`
//! a non-edge) until the vertex count of the source is reached, then tests
//! isomorphism with the source. Every sequence of forward subdivisions is
//! visited this way, so an exhausted search is a proof of non-existence.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::iso::are_isomorphic;
use super::simplicial::{edge_subdivide, f_vector, SimplicialComplex, Vertex};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdivisionStep {
    /// Digest of the complex the step is applied to.
    pub snapshot: String,
    pub edge: (Vertex, Vertex),
    pub new_vertex: Vertex,
}

/// Replayable witness that `dst` arises from `src` by edge subdivisions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdivisionCertificate {
    pub steps: Vec<SubdivisionStep>,
    /// From the replayed complex's vertices to the target's.
    pub final_iso: BTreeMap<Vertex, Vertex>,
}

impl SubdivisionCertificate {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Applies the steps to `src`, checking each snapshot digest.
    pub fn replay(&self, src: &SimplicialComplex) -> Result<SimplicialComplex> {
        let mut k = src.clone();
        for (i, step) in self.steps.iter().enumerate() {
            if k.snapshot_hash() != step.snapshot {
                return Err(Error::BadCertificate(format!("snapshot mismatch before step {}", i + 1)));
            }
            k = edge_subdivide(&k, step.edge, step.new_vertex)?;
        }
        Ok(k)
    }

    /// Replays and relabels; succeeds iff the result is exactly `dst`.
    pub fn verify(&self, src: &SimplicialComplex, dst: &SimplicialComplex) -> Result<()> {
        let k = self.replay(src)?;
        if self.final_iso.len() != k.vertex_count() || !k.vertices().iter().all(|v| self.final_iso.contains_key(v)) {
            return Err(Error::BadCertificate("final map does not cover the replayed vertices".into()));
        }
        let image: BTreeSet<Vertex> = self.final_iso.values().copied().collect();
        if image.len() != self.final_iso.len() {
            return Err(Error::BadCertificate("final map is not injective".into()));
        }
        if k.relabel(&self.final_iso) != *dst {
            return Err(Error::BadCertificate("replayed complex differs from target".into()));
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct StepJson {
    snapshot: String,
    edge: [String; 2],
    new_vertex: String,
}

#[derive(Serialize, Deserialize)]
struct CertificateJson {
    steps: Vec<StepJson>,
    final_iso: BTreeMap<String, String>,
}

impl Serialize for SubdivisionCertificate {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        CertificateJson {
            steps: self
                .steps
                .iter()
                .map(|s| StepJson {
                    snapshot: s.snapshot.clone(),
                    edge: [s.edge.0.to_string(), s.edge.1.to_string()],
                    new_vertex: s.new_vertex.to_string(),
                })
                .collect(),
            final_iso: self.final_iso.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SubdivisionCertificate {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let json = CertificateJson::deserialize(deserializer)?;
        let id = |s: &str| s.parse::<Vertex>().map_err(|_| D::Error::custom(format!("vertex id `{s}` is not numeric")));
        let steps = json
            .steps
            .iter()
            .map(|s| {
                Ok(SubdivisionStep {
                    snapshot: s.snapshot.clone(),
                    edge: (id(&s.edge[0])?, id(&s.edge[1])?),
                    new_vertex: id(&s.new_vertex)?,
                })
            })
            .collect::<std::result::Result<_, D::Error>>()?;
        let final_iso = json
            .final_iso
            .iter()
            .map(|(a, b)| Ok((id(a)?, id(b)?)))
            .collect::<std::result::Result<_, D::Error>>()?;
        Ok(SubdivisionCertificate { steps, final_iso })
    }
}

/// Node and wall-clock limits for the search.
#[derive(Clone, Copy, Debug)]
pub struct SearchBudget {
    pub nodes: usize,
    pub deadline: Option<Instant>,
}

impl SearchBudget {
    pub fn nodes(nodes: usize) -> Self {
        SearchBudget { nodes, deadline: None }
    }
}

#[derive(Clone, Debug)]
pub enum SearchOutcome {
    Found(SubdivisionCertificate),
    /// The search space was exhausted: no sequence exists.
    Impossible,
    /// The budget ran out first.
    Unknown { explored: usize },
}

impl SearchOutcome {
    pub fn certificate(&self) -> Option<&SubdivisionCertificate> {
        match self {
            SearchOutcome::Found(c) => Some(c),
            _ => None,
        }
    }
}

/// An undone subdivision: `v` was the new vertex on edge `{a, b}`.
#[derive(Clone, Copy, Debug)]
struct Contraction {
    v: Vertex,
    a: Vertex,
    b: Vertex,
}

fn contractions(k: &SimplicialComplex) -> Vec<(Contraction, SimplicialComplex)> {
    let adj = k.adjacency();
    let mut out = Vec::new();
    for &v in k.vertices() {
        let star: Vec<&Vec<Vertex>> = k.star(v).collect();
        let link: Vec<Vertex> = adj[&v].iter().copied().collect();
        for (x, &a) in link.iter().enumerate() {
            for &b in &link[x + 1..] {
                if adj[&a].contains(&b) {
                    continue;
                }
                let mut side_a = BTreeSet::new();
                let mut side_b = BTreeSet::new();
                let split = star.iter().all(|f| {
                    let has_a = f.binary_search(&a).is_ok();
                    let has_b = f.binary_search(&b).is_ok();
                    let rest: Vec<Vertex> = f.iter().copied().filter(|&u| u != v && u != a && u != b).collect();
                    match (has_a, has_b) {
                        (true, false) => side_a.insert(rest),
                        (false, true) => side_b.insert(rest),
                        _ => return false,
                    };
                    true
                });
                if !split || side_a.is_empty() || side_a != side_b {
                    continue;
                }
                let mut facets: Vec<Vec<Vertex>> =
                    k.facets().iter().filter(|f| f.binary_search(&v).is_err()).cloned().collect();
                for g in side_a {
                    let mut f = g;
                    f.push(a);
                    f.push(b);
                    f.sort_unstable();
                    facets.push(f);
                }
                let shrunk = SimplicialComplex::from_facets(facets);
                if edge_subdivide(&shrunk, (a, b), v).as_ref() == Ok(k) {
                    out.push((Contraction { v, a, b }, shrunk));
                }
            }
        }
    }
    out
}

struct Search<'a> {
    src: &'a SimplicialComplex,
    src_f: Vec<usize>,
    seen: HashSet<Vec<Vec<Vertex>>>,
    budget: SearchBudget,
    explored: usize,
    exhausted_budget: bool,
}

impl Search<'_> {
    fn dominates(&self, k: &SimplicialComplex) -> bool {
        let f = f_vector(k);
        f.len() == self.src_f.len() && f.iter().zip(&self.src_f).all(|(a, b)| a >= b)
    }

    fn out_of_budget(&mut self) -> bool {
        if self.explored >= self.budget.nodes || self.budget.deadline.is_some_and(|d| Instant::now() >= d) {
            self.exhausted_budget = true;
        }
        self.exhausted_budget
    }

    fn dfs(
        &mut self,
        k: &SimplicialComplex,
        depth_left: usize,
        path: &mut Vec<Contraction>,
    ) -> Option<(SimplicialComplex, BTreeMap<Vertex, Vertex>)> {
        if depth_left == 0 {
            return are_isomorphic(self.src, k).map(|iso| (k.clone(), iso));
        }
        for (step, shrunk) in contractions(k) {
            if self.out_of_budget() {
                return None;
            }
            self.explored += 1;
            if shrunk.facet_count() < self.src.facet_count() || !self.dominates(&shrunk) {
                continue;
            }
            if !self.seen.insert(shrunk.facets().to_vec()) {
                continue;
            }
            path.push(step);
            if let Some(found) = self.dfs(&shrunk, depth_left - 1, path) {
                return Some(found);
            }
            path.pop();
        }
        None
    }
}

/// Looks for a sequence of `f_0(dst) - f_0(src)` edge subdivisions turning
/// `src` into a complex isomorphic to `dst`.
pub fn find_subdivision_sequence(src: &SimplicialComplex, dst: &SimplicialComplex, budget: SearchBudget) -> SearchOutcome {
    if dst.vertex_count() < src.vertex_count() {
        return SearchOutcome::Impossible;
    }
    let depth = dst.vertex_count() - src.vertex_count();
    let mut search = Search {
        src,
        src_f: f_vector(src),
        seen: HashSet::new(),
        budget,
        explored: 0,
        exhausted_budget: false,
    };
    if depth > 0 && !search.dominates(dst) {
        return SearchOutcome::Impossible;
    }
    let mut path = Vec::new();
    match search.dfs(dst, depth, &mut path) {
        Some((base, iso)) => SearchOutcome::Found(assemble(src, dst, &base, &iso, &path)),
        None if search.exhausted_budget => SearchOutcome::Unknown { explored: search.explored },
        None => SearchOutcome::Impossible,
    }
}

/// Rewrites a backward contraction path ending at `base ≅ src` as forward
/// steps on `src`'s own labels, with fresh ids for the new vertices.
fn assemble(
    src: &SimplicialComplex,
    dst: &SimplicialComplex,
    base: &SimplicialComplex,
    iso: &BTreeMap<Vertex, Vertex>,
    path: &[Contraction],
) -> SubdivisionCertificate {
    // label: dst/base ids -> certificate ids
    let mut label: BTreeMap<Vertex, Vertex> = iso.iter().map(|(&s, &b)| (b, s)).collect();
    debug_assert_eq!(label.len(), base.vertex_count());
    let mut next = src.vertices().iter().next_back().map_or(1, |m| m + 1);
    let mut k = src.clone();
    let mut steps = Vec::with_capacity(path.len());
    for c in path.iter().rev() {
        let (a, b) = (label[&c.a], label[&c.b]);
        let step = SubdivisionStep { snapshot: k.snapshot_hash(), edge: (a.min(b), a.max(b)), new_vertex: next };
        k = edge_subdivide(&k, step.edge, next).expect("contraction path replays forward");
        label.insert(c.v, next);
        next += 1;
        steps.push(step);
    }
    let final_iso = label.into_iter().map(|(d, cert)| (cert, d)).collect();
    let cert = SubdivisionCertificate { steps, final_iso };
    cert.verify(src, dst).expect("assembled certificate replays onto the target");
    cert
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::simplicial::cross_polytope_boundary;

    fn cycle(n: u32) -> SimplicialComplex {
        SimplicialComplex::from_facets((1..=n).map(|i| vec![i, i % n + 1]))
    }

    #[test]
    fn square_to_pentagon() {
        let out = find_subdivision_sequence(&cycle(4), &cycle(5), SearchBudget::nodes(1000));
        let cert = out.certificate().expect("found");
        assert_eq!(cert.len(), 1);
        cert.verify(&cycle(4), &cycle(5)).unwrap();
    }

    #[test]
    fn identity_sequence() {
        let k = cross_polytope_boundary(3);
        let cert = find_subdivision_sequence(&k, &k, SearchBudget::nodes(10)).certificate().cloned().unwrap();
        assert!(cert.is_empty());
        cert.verify(&k, &k).unwrap();
    }

    #[test]
    fn impossible_and_unknown() {
        let tri = SimplicialComplex::from_facets(vec![vec![1, 2, 3]]);
        assert!(matches!(find_subdivision_sequence(&tri, &cycle(4), SearchBudget::nodes(100)), SearchOutcome::Impossible));
        assert!(matches!(find_subdivision_sequence(&cycle(5), &cycle(4), SearchBudget::nodes(100)), SearchOutcome::Impossible));
        // subdividing a circle never opens it into a path
        let path = SimplicialComplex::from_facets(vec![vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 5]]);
        assert!(matches!(find_subdivision_sequence(&cycle(4), &path, SearchBudget::nodes(1000)), SearchOutcome::Impossible));
        let long = find_subdivision_sequence(&cycle(4), &cycle(9), SearchBudget::nodes(1));
        assert!(matches!(long, SearchOutcome::Unknown { .. }));
    }

    #[test]
    fn tampered_certificate_rejected() {
        let mut cert = find_subdivision_sequence(&cycle(4), &cycle(6), SearchBudget::nodes(1000)).certificate().cloned().unwrap();
        assert_eq!(cert.len(), 2);
        let json = serde_json::to_string(&cert).unwrap();
        let back: SubdivisionCertificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cert);
        cert.steps[1].snapshot = "00".into();
        assert!(cert.verify(&cycle(4), &cycle(6)).is_err());
    }
}
