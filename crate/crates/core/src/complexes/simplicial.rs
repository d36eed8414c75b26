use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

pub type Vertex = u32;

/// A simplicial complex given by its inclusion-maximal faces.
///
/// Facets are kept sorted (each facet ascending, the list lexicographic) so
/// equality is equality of facet sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertices: BTreeSet<Vertex>,
    facets: Vec<Vec<Vertex>>,
}

impl SimplicialComplex {
    /// The void complex with no faces at all.
    pub fn void() -> Self {
        SimplicialComplex { vertices: BTreeSet::new(), facets: Vec::new() }
    }

    /// Normalises an arbitrary face list: duplicates and non-maximal faces
    /// are dropped.
    pub fn from_facets<I, F>(facets: I) -> Self
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = Vertex>,
    {
        let mut set: BTreeSet<Vec<Vertex>> = BTreeSet::new();
        for f in facets {
            let mut f: Vec<Vertex> = f.into_iter().collect();
            f.sort_unstable();
            f.dedup();
            set.insert(f);
        }
        let mut by_size: Vec<Vec<Vertex>> = set.into_iter().collect();
        by_size.sort_by_key(|f| std::cmp::Reverse(f.len()));
        let mut kept: Vec<Vec<Vertex>> = Vec::with_capacity(by_size.len());
        for f in by_size {
            if !kept.iter().any(|g| g.len() > f.len() && is_subset(&f, g)) {
                kept.push(f);
            }
        }
        kept.sort();
        let vertices = kept.iter().flatten().copied().collect();
        SimplicialComplex { vertices, facets: kept }
    }

    pub(crate) fn from_sorted_unchecked(facets: Vec<Vec<Vertex>>) -> Self {
        let vertices = facets.iter().flatten().copied().collect();
        SimplicialComplex { vertices, facets }
    }

    pub fn vertices(&self) -> &BTreeSet<Vertex> {
        &self.vertices
    }

    pub fn facets(&self) -> &[Vec<Vertex>] {
        &self.facets
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    /// Pure iff all facets have the same size.
    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Number of vertices of the largest facet minus one; `None` if void.
    pub fn dimension(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    /// Whether `face` (sorted) lies in some facet.
    pub fn contains_face(&self, face: &[Vertex]) -> bool {
        self.facets.iter().any(|f| is_subset(face, f))
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        a != b && self.contains_face(&[a.min(b), a.max(b)])
    }

    /// All nonempty faces.
    pub fn faces(&self) -> BTreeSet<Vec<Vertex>> {
        let mut out = BTreeSet::new();
        for f in &self.facets {
            let k = f.len();
            for mask in 1u64..(1u64 << k) {
                out.insert((0..k).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect());
            }
        }
        out
    }

    /// 1-skeleton adjacency.
    pub fn adjacency(&self) -> BTreeMap<Vertex, BTreeSet<Vertex>> {
        let mut adj: BTreeMap<Vertex, BTreeSet<Vertex>> = self.vertices.iter().map(|&v| (v, BTreeSet::new())).collect();
        for f in &self.facets {
            for &a in f {
                for &b in f {
                    if a != b {
                        adj.get_mut(&a).expect("vertex").insert(b);
                    }
                }
            }
        }
        adj
    }

    /// Facets containing `v`.
    pub fn star(&self, v: Vertex) -> impl Iterator<Item = &Vec<Vertex>> {
        self.facets.iter().filter(move |f| f.binary_search(&v).is_ok())
    }

    /// Deterministic digest of the facet set.
    pub fn snapshot_hash(&self) -> String {
        let mut text = String::new();
        for f in &self.facets {
            for v in f {
                let _ = write!(text, "{v},");
            }
            text.push(';');
        }
        let digest = Sha256::digest(text.as_bytes());
        digest[..8].iter().map(|b| format!("{b:02x}")).collect()
    }

    /// Renames vertices; the map must be injective on the vertex set.
    pub fn relabel(&self, map: &BTreeMap<Vertex, Vertex>) -> SimplicialComplex {
        SimplicialComplex::from_facets(self.facets.iter().map(|f| f.iter().map(|v| map[v]).collect::<Vec<_>>()))
    }

    pub fn to_json(&self) -> ComplexJson {
        ComplexJson {
            vertices: self.vertices.iter().map(|v| v.to_string()).collect(),
            facets: self.facets.iter().map(|f| f.iter().map(|v| v.to_string()).collect()).collect(),
        }
    }

    pub fn from_json(json: &ComplexJson) -> Result<Self> {
        let parse = |s: &String| s.parse::<Vertex>().map_err(|_| Error::BadComplex(format!("vertex id `{s}` is not numeric")));
        let facets = json
            .facets
            .iter()
            .map(|f| f.iter().map(parse).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let k = SimplicialComplex::from_facets(facets);
        if k.facet_count() != json.facets.len() {
            return Err(Error::BadComplex("facet list is not inclusion-minimal".into()));
        }
        let listed = json.vertices.iter().map(parse).collect::<Result<BTreeSet<_>>>()?;
        if listed != k.vertices {
            return Err(Error::BadComplex("vertex list differs from the union of facets".into()));
        }
        Ok(k)
    }
}

/// JSON shape `{"vertices":[...],"facets":[[...],...]}` with string ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<String>>,
}

impl Serialize for SimplicialComplex {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SimplicialComplex {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let json = ComplexJson::deserialize(deserializer)?;
        SimplicialComplex::from_json(&json).map_err(serde::de::Error::custom)
    }
}

pub(crate) fn is_subset(a: &[Vertex], b: &[Vertex]) -> bool {
    // both sorted
    let mut it = b.iter();
    a.iter().all(|x| it.by_ref().any(|y| y == x))
}

/// `(f_0, f_1, …)`; the empty face is not counted.
pub fn f_vector(k: &SimplicialComplex) -> Vec<usize> {
    let mut f = vec![0; k.dimension().map_or(0, |d| (d + 1) as usize)];
    for face in k.faces() {
        f[face.len() - 1] += 1;
    }
    f
}

/// Alternating sum of the f-vector.
pub fn euler_characteristic(k: &SimplicialComplex) -> i64 {
    f_vector(k).iter().enumerate().map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) }).sum()
}

/// Maximal cliques of a graph (Bron–Kerbosch with pivoting).
pub(crate) fn maximal_cliques(adj: &BTreeMap<Vertex, BTreeSet<Vertex>>) -> Vec<Vec<Vertex>> {
    fn rec(
        adj: &BTreeMap<Vertex, BTreeSet<Vertex>>,
        r: &mut Vec<Vertex>,
        mut p: BTreeSet<Vertex>,
        mut x: BTreeSet<Vertex>,
        out: &mut Vec<Vec<Vertex>>,
    ) {
        if p.is_empty() && x.is_empty() {
            let mut c = r.clone();
            c.sort_unstable();
            out.push(c);
            return;
        }
        let pivot = *p.union(&x).max_by_key(|u| adj[u].intersection(&p).count()).expect("nonempty");
        let candidates: Vec<Vertex> = p.difference(&adj[&pivot]).copied().collect();
        for v in candidates {
            r.push(v);
            rec(adj, r, p.intersection(&adj[&v]).copied().collect(), x.intersection(&adj[&v]).copied().collect(), out);
            r.pop();
            p.remove(&v);
            x.insert(v);
        }
    }
    let mut out = Vec::new();
    rec(adj, &mut Vec::new(), adj.keys().copied().collect(), BTreeSet::new(), &mut out);
    out
}

/// Flag iff the complex is the clique complex of its 1-skeleton, i.e. its
/// facets are exactly the maximal cliques.
pub fn is_flag(k: &SimplicialComplex) -> bool {
    if k.facets.is_empty() {
        return true;
    }
    let mut cliques = maximal_cliques(&k.adjacency());
    cliques.sort();
    cliques == k.facets
}

/// Stellar subdivision of the edge `{a, b}` with a new vertex.
pub fn edge_subdivide(k: &SimplicialComplex, e: (Vertex, Vertex), v_new: Vertex) -> Result<SimplicialComplex> {
    let (a, b) = (e.0.min(e.1), e.0.max(e.1));
    if !k.has_edge(a, b) {
        return Err(Error::NotAFace(a, b));
    }
    if k.vertices.contains(&v_new) {
        return Err(Error::VertexExists(v_new));
    }
    let mut facets: Vec<Vec<Vertex>> = Vec::with_capacity(k.facets.len() + 4);
    for f in &k.facets {
        let has_a = f.binary_search(&a).is_ok();
        let has_b = f.binary_search(&b).is_ok();
        if has_a && has_b {
            for drop in [a, b] {
                let mut g: Vec<Vertex> = f.iter().copied().filter(|&x| x != drop).collect();
                g.push(v_new);
                g.sort_unstable();
                facets.push(g);
            }
        } else {
            facets.push(f.clone());
        }
    }
    facets.sort();
    Ok(SimplicialComplex::from_sorted_unchecked(facets))
}

/// Boundary of the `n`-dimensional cross-polytope: vertices `i` and `n + i`
/// form antipodal pairs, facets are all transversals.
pub fn cross_polytope_boundary(n: usize) -> SimplicialComplex {
    assert!(n >= 1, "cross-polytope needs n >= 1");
    let facets = (0u64..1 << n).map(|mask| {
        (0..n as Vertex)
            .map(|i| if mask >> i & 1 == 0 { i + 1 } else { n as Vertex + i + 1 })
            .collect::<Vec<_>>()
    });
    SimplicialComplex::from_facets(facets)
}
