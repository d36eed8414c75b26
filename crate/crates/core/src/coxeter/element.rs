use serde::{Deserialize, Serialize};

use super::roots::{RootId, RootSystem};

/// A group element, stored as the permutation it induces on the root list.
///
/// Elements act on the left; `perm[r]` is the index of `w(root r)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    perm: Vec<RootId>,
}

impl GroupElement {
    pub fn identity(rs: &RootSystem) -> Self {
        GroupElement { perm: (0..rs.root_count()).collect() }
    }

    pub fn simple_reflection(rs: &RootSystem, i: usize) -> Self {
        GroupElement { perm: rs.reflection_table(i).to_vec() }
    }

    pub fn perm(&self) -> &[RootId] {
        &self.perm
    }

    /// `w(r)`.
    pub fn apply(&self, r: RootId) -> RootId {
        self.perm[r]
    }

    /// `self · other`, i.e. apply `other` first.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        GroupElement { perm: other.perm.iter().map(|&r| self.perm[r]).collect() }
    }

    /// `self · s_i` in place.
    pub fn mul_simple_right(&mut self, rs: &RootSystem, i: usize) {
        let table = rs.reflection_table(i);
        self.perm = table.iter().map(|&r| self.perm[r]).collect();
    }

    /// `s_i · self` in place.
    pub fn mul_simple_left(&mut self, rs: &RootSystem, i: usize) {
        let table = rs.reflection_table(i);
        for r in self.perm.iter_mut() {
            *r = table[*r];
        }
    }

    pub fn inverse(&self) -> GroupElement {
        let mut perm = vec![0; self.perm.len()];
        for (r, &img) in self.perm.iter().enumerate() {
            perm[img] = r;
        }
        GroupElement { perm }
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, rs: &RootSystem) -> usize {
        rs.positive_roots().filter(|&r| !rs.is_positive(self.perm[r])).count()
    }

    /// `ℓ(w·s_i) > ℓ(w)`, equivalently `w(α_i) > 0`.
    pub fn right_ascent(&self, rs: &RootSystem, i: usize) -> bool {
        rs.is_positive(self.perm[rs.simple(i)])
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &r)| i == r)
    }
}
