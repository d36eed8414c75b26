//! Root labelings of the letters of `c·w_o`, reflection orders, rank-2
//! subsystems, stable roots and quiver erasure.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::coxeter::{
    element_of_word, longest_element, require_coxeter_word, require_longest_word, sorting_word,
    CoxeterSpec, GroupElement, RootId, RootSystem, Word,
};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Map from the `n + N` letter positions of `c·w_o` to almost positive roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LrLabeling {
    pub word: Word,
    /// `labels[k]` is the root of position `k + 1`.
    pub labels: Vec<RootId>,
}

impl LrLabeling {
    /// Root carried by a 1-based position.
    pub fn label(&self, position: u32) -> RootId {
        self.labels[position as usize - 1]
    }

    /// 1-based position carrying `root`.
    pub fn position_of(&self, root: RootId) -> Option<u32> {
        self.labels.iter().position(|&r| r == root).map(|k| k as u32 + 1)
    }
}

pub fn lr_labeling(rs: &RootSystem, c: &Word, wo: &Word) -> Result<LrLabeling> {
    require_coxeter_word(rs, c)?;
    require_longest_word(rs, wo)?;
    let mut labels: Vec<RootId> = c.letters().iter().map(|&l| rs.negate(rs.simple(l))).collect();
    labels.extend(inversion_sequence(rs, wo));
    Ok(LrLabeling { word: c.concat(wo), labels })
}

/// `(w_1…w_{j-1})(α_{w_j})` for each letter of a word.
fn inversion_sequence(rs: &RootSystem, w: &Word) -> Vec<RootId> {
    let mut prefix = GroupElement::identity(rs);
    w.letters()
        .iter()
        .map(|&l| {
            let r = prefix.apply(rs.simple(l));
            prefix.mul_simple_right(rs, l);
            r
        })
        .collect()
}

/// Total order on the positive roots induced by a reduced word of `w_o`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReflectionOrder {
    pub order: Vec<RootId>,
    rank: Vec<usize>,
}

impl ReflectionOrder {
    /// Builds an order from an explicit list of all positive roots.
    pub fn from_list(rs: &RootSystem, order: Vec<RootId>) -> Result<Self> {
        let n = rs.positive_count();
        let mut rank = vec![usize::MAX; n];
        for (k, &r) in order.iter().enumerate() {
            if !rs.is_positive(r) || rank[r] != usize::MAX {
                return Err(Error::BadWord(format!("order is not a permutation of the positive roots at {k}")));
            }
            rank[r] = k;
        }
        if order.len() != n {
            return Err(Error::BadWord("order does not list every positive root".into()));
        }
        Ok(ReflectionOrder { order, rank })
    }

    /// `a <_w b`.
    pub fn precedes(&self, a: RootId, b: RootId) -> bool {
        self.rank[a] < self.rank[b]
    }

    pub fn rank_of(&self, r: RootId) -> usize {
        self.rank[r]
    }
}

pub fn reflection_order(rs: &RootSystem, wo: &Word) -> Result<ReflectionOrder> {
    require_longest_word(rs, wo)?;
    ReflectionOrder::from_list(rs, inversion_sequence(rs, wo))
}

/// Positive roots of `Φ` lying in one 2-dimensional plane.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rank2Subsystem {
    /// Members sorted along the cone, from `generators.0` to `generators.1`.
    pub members: Vec<RootId>,
    pub generators: (RootId, RootId),
    pub is_commutative: bool,
}

impl Rank2Subsystem {
    pub fn contains(&self, r: RootId) -> bool {
        self.members.contains(&r)
    }

    /// Members other than the canonical generators.
    pub fn interior(&self) -> &[RootId] {
        &self.members[1..self.members.len() - 1]
    }
}

fn det2(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> Scalar {
    a * d - b * c
}

fn det3(r: [&[Scalar]; 3], i: usize, j: usize, k: usize) -> Scalar {
    r[0][i] * det2(r[1][j], r[1][k], r[2][j], r[2][k]) - r[0][j] * det2(r[1][i], r[1][k], r[2][i], r[2][k])
        + r[0][k] * det2(r[1][i], r[1][j], r[2][i], r[2][j])
}

fn in_span(p: &[Scalar], q: &[Scalar], r: &[Scalar]) -> bool {
    let n = p.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if !det3([p, q, r], i, j, k).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

/// All maximal sets of positive roots in a common 2-dimensional span.
pub fn rank2_subsystems(rs: &RootSystem) -> Vec<Rank2Subsystem> {
    if rs.is_dihedral_model() {
        let mut members: Vec<RootId> = rs.positive_roots().collect();
        members.sort_by_key(|&r| rs.dihedral_angle(r));
        let generators = (members[0], *members.last().expect("two simple roots"));
        return vec![Rank2Subsystem { is_commutative: members.len() == 2, members, generators }];
    }
    let coords = |r: RootId| &rs.coords(r).expect("linear realization").coords[..];
    let pos: Vec<RootId> = rs.positive_roots().collect();
    let mut covered: HashSet<(RootId, RootId)> = HashSet::new();
    let mut out = Vec::new();
    for (a, &p) in pos.iter().enumerate() {
        for &q in &pos[a + 1..] {
            if covered.contains(&(p, q)) {
                continue;
            }
            let mut members: Vec<RootId> =
                pos.iter().copied().filter(|&r| in_span(coords(p), coords(q), coords(r))).collect();
            for (x, &u) in members.iter().enumerate() {
                for &v in &members[x + 1..] {
                    covered.insert((u.min(v), u.max(v)));
                }
            }
            // project onto two coordinates where the plane is nondegenerate
            let n = rs.rank();
            let (i, j) = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !det2(coords(p)[i], coords(p)[j], coords(q)[i], coords(q)[j]).is_zero())
                .expect("distinct positive roots are independent");
            members.sort_by(|&u, &v| {
                if u == v {
                    return std::cmp::Ordering::Equal;
                }
                let d = det2(coords(u)[i], coords(u)[j], coords(v)[i], coords(v)[j]);
                d.signum().reverse()
            });
            let generators = (members[0], *members.last().expect("nonempty"));
            out.push(Rank2Subsystem { is_commutative: members.len() == 2, members, generators });
        }
    }
    out
}

/// Each rank-2 subsystem lists its roots in one of the two cone orders.
pub fn is_valid_reflection_order(rs: &RootSystem, ord: &ReflectionOrder) -> bool {
    is_valid_reflection_order_with(&rank2_subsystems(rs), ord)
}

pub fn is_valid_reflection_order_with(subsystems: &[Rank2Subsystem], ord: &ReflectionOrder) -> bool {
    subsystems.iter().filter(|s| !s.is_commutative).all(|s| {
        let ranks: Vec<usize> = s.members.iter().map(|&r| ord.rank_of(r)).collect();
        ranks.windows(2).all(|w| w[0] < w[1]) || ranks.windows(2).all(|w| w[0] > w[1])
    })
}

/// The `(c, w_o)`-stable positive roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StableSet {
    pub roots: BTreeSet<RootId>,
    pub c: Word,
    pub wo: Word,
}

pub fn stable_set(rs: &RootSystem, c: &Word, wo: &Word) -> Result<StableSet> {
    stable_set_with(rs, &rank2_subsystems(rs), c, wo)
}

pub fn stable_set_with(rs: &RootSystem, subsystems: &[Rank2Subsystem], c: &Word, wo: &Word) -> Result<StableSet> {
    require_coxeter_word(rs, c)?;
    let by_c = reflection_order(rs, &sorting_word(rs, c, &longest_element(rs))?)?;
    let by_wo = reflection_order(rs, wo)?;
    let mut unstable = BTreeSet::new();
    for s in subsystems.iter().filter(|s| !s.is_commutative) {
        let (a, b) = s.generators;
        if by_c.precedes(a, b) != by_wo.precedes(a, b) {
            unstable.extend(s.interior().iter().copied());
        }
    }
    let roots = rs.positive_roots().filter(|r| !unstable.contains(r)).collect();
    Ok(StableSet { roots, c: c.clone(), wo: wo.clone() })
}

/// Orientation of the Coxeter diagram determined by a Coxeter element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverOrientation {
    pub spec: CoxeterSpec,
    /// The Coxeter-element word this quiver was read from.
    pub word: Word,
    /// Arrows `(from, to, m)` over every diagram edge.
    pub arrows: Vec<(usize, usize, usize)>,
}

impl QuiverOrientation {
    fn direction(&self, i: usize, j: usize) -> Option<(usize, usize)> {
        self.arrows
            .iter()
            .find(|&&(a, b, _)| (a, b) == (i, j) || (a, b) == (j, i))
            .map(|&(a, b, _)| (a, b))
    }
}

/// Orients `{i, j}` as `i → j` iff `i` comes first in `c`.
pub fn quiver_of(rs: &RootSystem, c: &Word) -> Result<QuiverOrientation> {
    require_coxeter_word(rs, c)?;
    let mut place = vec![0; rs.rank()];
    for (k, &l) in c.letters().iter().enumerate() {
        place[l] = k;
    }
    let arrows = rs
        .spec()
        .edges()
        .into_iter()
        .map(|(i, j, m)| if place[i] < place[j] { (i, j, m) } else { (j, i, m) })
        .collect();
    Ok(QuiverOrientation { spec: rs.spec().clone(), word: c.clone(), arrows })
}

/// Drops every diagram edge on which the quivers disagree. Returns the
/// resulting Coxeter system and the first quiver's word read in it.
pub fn erase_disagreements(q: &QuiverOrientation, q2: &QuiverOrientation) -> Result<(CoxeterSpec, Word)> {
    if q.spec.matrix() != q2.spec.matrix() {
        return Err(Error::SpecMismatch);
    }
    let mut matrix = q.spec.matrix().to_vec();
    for &(a, b, _) in &q.arrows {
        if q2.direction(a, b) != Some((a, b)) {
            matrix[a][b] = 2;
            matrix[b][a] = 2;
        }
    }
    if matrix == q.spec.matrix() {
        return Ok((q.spec.clone(), q.word.clone()));
    }
    Ok((CoxeterSpec::from_matrix(matrix)?, q.word.clone()))
}

/// Convenience: the element of a Coxeter-element word, validated.
pub fn coxeter_element_of(rs: &RootSystem, c: &Word) -> Result<GroupElement> {
    require_coxeter_word(rs, c)?;
    element_of_word(rs, c)
}
