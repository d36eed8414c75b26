//! Isomorphism of simplicial complexes by colour refinement followed by
//! invariant-ordered backtracking.

use std::collections::{BTreeMap, HashMap, HashSet};

use super::simplicial::{SimplicialComplex, Vertex};

struct Indexed {
    verts: Vec<Vertex>,
    facets: Vec<Vec<usize>>,
    incident: Vec<Vec<usize>>,
    adj: Vec<Vec<bool>>,
}

impl Indexed {
    fn new(k: &SimplicialComplex) -> Self {
        let verts: Vec<Vertex> = k.vertices().iter().copied().collect();
        let pos: HashMap<Vertex, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let facets: Vec<Vec<usize>> = k.facets().iter().map(|f| f.iter().map(|v| pos[v]).collect()).collect();
        let mut incident = vec![Vec::new(); verts.len()];
        let mut adj = vec![vec![false; verts.len()]; verts.len()];
        for (fi, f) in facets.iter().enumerate() {
            for &a in f {
                incident[a].push(fi);
                for &b in f {
                    if a != b {
                        adj[a][b] = true;
                    }
                }
            }
        }
        Indexed { verts, facets, incident, adj }
    }

    fn degree(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&e| e).count()
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct Signature {
    base: usize,
    neighbours: Vec<usize>,
    facets: Vec<Vec<usize>>,
}

fn refine(g: &[&Indexed; 2]) -> Option<[Vec<usize>; 2]> {
    let mut intern: HashMap<(usize, usize), usize> = HashMap::new();
    let mut colors: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
    for (side, k) in g.iter().enumerate() {
        colors[side] = (0..k.verts.len())
            .map(|v| {
                let key = (k.incident[v].len(), k.degree(v));
                let next = intern.len();
                *intern.entry(key).or_insert(next)
            })
            .collect();
    }
    let mut classes = intern.len();
    loop {
        if histogram(&colors[0]) != histogram(&colors[1]) {
            return None;
        }
        let mut intern: HashMap<Signature, usize> = HashMap::new();
        let mut next: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
        for (side, k) in g.iter().enumerate() {
            let c = &colors[side];
            next[side] = (0..k.verts.len())
                .map(|v| {
                    let mut neighbours: Vec<usize> = (0..k.verts.len()).filter(|&u| k.adj[v][u]).map(|u| c[u]).collect();
                    neighbours.sort_unstable();
                    let mut facets: Vec<Vec<usize>> = k.incident[v]
                        .iter()
                        .map(|&f| {
                            let mut fc: Vec<usize> = k.facets[f].iter().map(|&u| c[u]).collect();
                            fc.sort_unstable();
                            fc
                        })
                        .collect();
                    facets.sort();
                    let sig = Signature { base: c[v], neighbours, facets };
                    let id = intern.len();
                    *intern.entry(sig).or_insert(id)
                })
                .collect();
        }
        colors = next;
        if intern.len() == classes {
            if histogram(&colors[0]) != histogram(&colors[1]) {
                return None;
            }
            return Some(colors);
        }
        classes = intern.len();
    }
}

fn histogram(c: &[usize]) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for &x in c {
        *h.entry(x).or_insert(0) += 1;
    }
    h
}

/// A vertex bijection carrying the facets of `k1` onto those of `k2`.
pub fn are_isomorphic(k1: &SimplicialComplex, k2: &SimplicialComplex) -> Option<BTreeMap<Vertex, Vertex>> {
    if k1.vertex_count() != k2.vertex_count() || k1.facet_count() != k2.facet_count() {
        return None;
    }
    let mut sizes1: Vec<usize> = k1.facets().iter().map(Vec::len).collect();
    let mut sizes2: Vec<usize> = k2.facets().iter().map(Vec::len).collect();
    sizes1.sort_unstable();
    sizes2.sort_unstable();
    if sizes1 != sizes2 {
        return None;
    }
    let a = Indexed::new(k1);
    let b = Indexed::new(k2);
    let n = a.verts.len();
    if n == 0 {
        return Some(BTreeMap::new());
    }
    let [ca, cb] = refine(&[&a, &b])?;
    let class_size = histogram(&ca);

    // placement order: most already-placed neighbours, then rarest colour
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = order.iter().filter(|&&u: &&usize| a.adj[v][u]).count();
                (links, std::cmp::Reverse(class_size[&ca[v]]), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex");
        placed[v] = true;
        order.push(v);
    }
    let mut step_of = vec![0; n];
    for (s, &v) in order.iter().enumerate() {
        step_of[v] = s;
    }
    // facets of k1 completed at each step
    let mut completes: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (fi, f) in a.facets.iter().enumerate() {
        let last = f.iter().map(|&v| step_of[v]).max().expect("nonempty facet");
        completes[last].push(fi);
    }
    let targets: HashSet<Vec<usize>> = b.facets.iter().cloned().collect();

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if !backtrack(0, &order, &a, &b, &ca, &cb, &completes, &targets, &mut map, &mut used) {
        return None;
    }
    Some((0..n).map(|v| (a.verts[v], b.verts[map[v]])).collect())
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    step: usize,
    order: &[usize],
    a: &Indexed,
    b: &Indexed,
    ca: &[usize],
    cb: &[usize],
    completes: &[Vec<usize>],
    targets: &HashSet<Vec<usize>>,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if step == order.len() {
        return true;
    }
    let v = order[step];
    for w in 0..b.verts.len() {
        if used[w] || cb[w] != ca[v] {
            continue;
        }
        let consistent = order[..step].iter().all(|&u| a.adj[v][u] == b.adj[w][map[u]]);
        if !consistent {
            continue;
        }
        map[v] = w;
        let facets_ok = completes[step].iter().all(|&fi| {
            let mut img: Vec<usize> = a.facets[fi].iter().map(|&u| map[u]).collect();
            img.sort_unstable();
            targets.contains(&img)
        });
        if facets_ok {
            used[w] = true;
            if backtrack(step + 1, order, a, b, ca, cb, completes, targets, map, used) {
                return true;
            }
            used[w] = false;
        }
        map[v] = usize::MAX;
    }
    false
}
