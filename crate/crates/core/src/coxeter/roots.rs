//! Root systems realised either by exact coordinates in the simple-root
//! basis or, for `I2(m)` with `m >= 7`, by the dihedral angle model.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::spec::CoxeterSpec;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Index into [`RootSystem::roots`]. Positive roots occupy `0..N` with the
/// simple roots first; root `k + N` is the negative of root `k`.
pub type RootId = usize;

/// A root in the simple-root basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root {
    pub coords: Vec<Scalar>,
}

impl Root {
    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|c| !c.is_negative()) && self.coords.iter().any(|c| c.is_positive())
    }

    pub fn negate(&self) -> Root {
        Root { coords: self.coords.iter().map(|&c| -c).collect() }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

#[derive(Clone, Debug)]
enum Realization {
    Linear { cartan: Vec<Vec<Scalar>>, roots: Vec<Root> },
    /// Root `k` is the unit vector at angle `kπ/m`.
    Dihedral { m: usize },
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    spec: CoxeterSpec,
    positive_count: usize,
    // reflections[i][r] = index of s_i(root r)
    reflections: Vec<Vec<RootId>>,
    realization: Realization,
}

impl RootSystem {
    pub fn new(spec: CoxeterSpec) -> Result<Self> {
        if spec.is_large_dihedral() {
            return Ok(Self::dihedral(spec));
        }
        let n = spec.rank();
        let cartan = cartan_matrix(&spec)?;
        let reflect = |i: usize, v: &Root| -> Root {
            let mut pairing = Scalar::ZERO;
            for j in 0..n {
                pairing += cartan[i][j] * v.coords[j];
            }
            let mut out = v.clone();
            out.coords[i] -= pairing;
            out
        };

        let mut positives: Vec<Root> = (0..n)
            .map(|i| {
                let mut coords = vec![Scalar::ZERO; n];
                coords[i] = Scalar::ONE;
                Root { coords }
            })
            .collect();
        let mut index: HashMap<Root, RootId> =
            positives.iter().cloned().enumerate().map(|(k, r)| (r, k)).collect();
        let expected = spec.positive_roots();
        let mut k = 0;
        while k < positives.len() {
            for i in 0..n {
                if k == i {
                    continue;
                }
                let image = reflect(i, &positives[k]);
                if !image.is_positive() {
                    return Err(Error::NotFinite(format!("mixed-sign root {image}")));
                }
                if !index.contains_key(&image) {
                    if positives.len() >= expected {
                        return Err(Error::NotFinite("root closure exceeds expected size".into()));
                    }
                    index.insert(image.clone(), positives.len());
                    positives.push(image);
                }
            }
            k += 1;
        }
        let count = positives.len();
        if count != expected {
            return Err(Error::NotFinite(format!("found {count} positive roots, expected {expected}")));
        }
        let mut roots = positives.clone();
        for (k, r) in positives.iter().enumerate() {
            let neg = r.negate();
            index.insert(neg.clone(), k + count);
            roots.push(neg);
        }
        let reflections = (0..n)
            .map(|i| {
                roots
                    .iter()
                    .map(|r| {
                        *index
                            .get(&reflect(i, r))
                            .expect("root system is closed under simple reflections")
                    })
                    .collect()
            })
            .collect();
        Ok(RootSystem {
            spec,
            positive_count: count,
            reflections,
            realization: Realization::Linear { cartan, roots },
        })
    }

    fn dihedral(spec: CoxeterSpec) -> Self {
        let m = spec.m(0, 1);
        let total = 2 * m;
        // simple roots at angles 0 and (m-1)π/m; positives are k in 0..m.
        // Stored ids put the simple roots first: id 0 ↔ k=0, id 1 ↔ k=m-1.
        let to_angle = |id: RootId| -> usize {
            let (base, neg) = if id >= m { (id - m, true) } else { (id, false) };
            let k = match base {
                0 => 0,
                1 => m - 1,
                b => b - 1,
            };
            if neg {
                k + m
            } else {
                k
            }
        };
        let from_angle = |k: usize| -> RootId {
            let (base, neg) = if k >= m { (k - m, true) } else { (k, false) };
            let id = match base {
                0 => 0,
                b if b == m - 1 => 1,
                b => b + 1,
            };
            if neg {
                id + m
            } else {
                id
            }
        };
        let s1 = |k: usize| (total + m - k) % total;
        let s2 = |k: usize| (2 * total + m - 2 - k) % total;
        let reflections = vec![
            (0..total).map(|id| from_angle(s1(to_angle(id)))).collect(),
            (0..total).map(|id| from_angle(s2(to_angle(id)))).collect(),
        ];
        RootSystem { spec, positive_count: m, reflections, realization: Realization::Dihedral { m } }
    }

    pub fn spec(&self) -> &CoxeterSpec {
        &self.spec
    }

    pub fn rank(&self) -> usize {
        self.spec.rank()
    }

    /// `N`, the number of positive roots.
    pub fn positive_count(&self) -> usize {
        self.positive_count
    }

    pub fn root_count(&self) -> usize {
        2 * self.positive_count
    }

    pub fn is_positive(&self, r: RootId) -> bool {
        r < self.positive_count
    }

    pub fn negate(&self, r: RootId) -> RootId {
        if r < self.positive_count {
            r + self.positive_count
        } else {
            r - self.positive_count
        }
    }

    /// The simple root of generator `i` (0-based).
    pub fn simple(&self, i: usize) -> RootId {
        i
    }

    pub fn reflect(&self, i: usize, r: RootId) -> RootId {
        self.reflections[i][r]
    }

    pub fn reflection_table(&self, i: usize) -> &[RootId] {
        &self.reflections[i]
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = RootId> {
        0..self.positive_count
    }

    /// `None` for the dihedral model.
    pub fn coords(&self, r: RootId) -> Option<&Root> {
        match &self.realization {
            Realization::Linear { roots, .. } => Some(&roots[r]),
            Realization::Dihedral { .. } => None,
        }
    }

    pub fn cartan(&self) -> Option<&[Vec<Scalar>]> {
        match &self.realization {
            Realization::Linear { cartan, .. } => Some(cartan),
            Realization::Dihedral { .. } => None,
        }
    }

    pub fn is_dihedral_model(&self) -> bool {
        matches!(self.realization, Realization::Dihedral { .. })
    }

    /// Position of a positive root along the angle from `α_1` to `α_2` in
    /// the dihedral model.
    pub(crate) fn dihedral_angle(&self, r: RootId) -> Option<usize> {
        match self.realization {
            Realization::Dihedral { m } => Some(match r % m {
                0 => 0,
                1 => m - 1,
                b => b - 1,
            }),
            Realization::Linear { .. } => None,
        }
    }

    /// Looks a root up by its coordinates.
    pub fn find(&self, root: &Root) -> Option<RootId> {
        match &self.realization {
            Realization::Linear { roots, .. } => roots.iter().position(|r| r == root),
            Realization::Dihedral { .. } => None,
        }
    }

    /// Text form: coordinate vector, or `angle:k/m` in the dihedral model.
    pub fn display(&self, r: RootId) -> String {
        match &self.realization {
            Realization::Linear { roots, .. } => roots[r].to_string(),
            Realization::Dihedral { m } => {
                let k = self.dihedral_angle(r).expect("dihedral");
                let k = if self.is_positive(r) { k } else { k + m };
                format!("angle:{k}/{m}")
            }
        }
    }

    pub fn display_json(&self, r: RootId) -> serde_json::Value {
        match self.coords(r) {
            Some(root) => serde_json::to_value(root).expect("roots serialize"),
            None => serde_json::Value::String(self.display(r)),
        }
    }
}

/// Cartan-type matrix with `s_i(α_j) = α_j - A[i][j]·α_i`.
///
/// For `m = 4` and `m = 6` edges `{i, j}` with `i < j` the long entry sits in
/// row `i`, so `α_i` is the short root.
fn cartan_matrix(spec: &CoxeterSpec) -> Result<Vec<Vec<Scalar>>> {
    let n = spec.rank();
    let mut a = vec![vec![Scalar::ZERO; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = Scalar::from_int(2);
    }
    for (i, j, m) in spec.edges() {
        let (ij, ji) = match m {
            3 => (Scalar::from_int(-1), Scalar::from_int(-1)),
            4 => (Scalar::from_int(-2), Scalar::from_int(-1)),
            5 => (-Scalar::PHI, -Scalar::PHI),
            6 => (Scalar::from_int(-3), Scalar::from_int(-1)),
            m => return Err(Error::NotFinite(format!("no exact coordinates for label {m}"))),
        };
        a[i][j] = ij;
        a[j][i] = ji;
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap()).unwrap()
    }

    fn coords(rs: &RootSystem) -> Vec<String> {
        rs.positive_roots().map(|r| rs.display(r)).collect()
    }

    #[test]
    fn small_systems() {
        assert_eq!(rs("A1").root_count(), 2);
        let a2 = rs("A2");
        assert_eq!(a2.root_count(), 6);
        assert_eq!(coords(&a2), vec!["[1,0]", "[0,1]", "[1,1]"]);
        let b2 = rs("B2");
        assert_eq!(b2.root_count(), 8);
        let mut b2c = coords(&b2);
        b2c.sort();
        assert_eq!(b2c, vec!["[0,1]", "[1,0]", "[1,1]", "[2,1]"]);
    }

    #[test]
    fn sizes_match_classification() {
        for (s, n) in [("A4", 10), ("B3", 9), ("D4", 12), ("F4", 24), ("G2", 6), ("H3", 15), ("H4", 60), ("E6", 36), ("E7", 63), ("E8", 120), ("I2(5)", 5), ("I2(9)", 9)] {
            assert_eq!(rs(s).positive_count(), n, "{s}");
        }
    }

    #[test]
    fn simple_reflection_negates_only_its_root() {
        for s in ["A3", "B3", "H3", "G2", "F4", "I2(7)", "I2(5)"] {
            let r = rs(s);
            for i in 0..r.rank() {
                assert_eq!(r.reflect(i, r.simple(i)), r.negate(r.simple(i)));
                for p in r.positive_roots().filter(|&p| p != r.simple(i)) {
                    assert!(r.is_positive(r.reflect(i, p)), "{s}: s{i} on {p}");
                }
                for x in 0..r.root_count() {
                    assert_eq!(r.reflect(i, r.reflect(i, x)), x);
                    assert_eq!(r.reflect(i, r.negate(x)), r.negate(r.reflect(i, x)));
                }
            }
        }
    }

    #[test]
    fn golden_coordinates_in_h3() {
        let h3 = rs("H3");
        let has_phi = h3.positive_roots().any(|r| h3.coords(r).unwrap().coords.iter().any(|c| !c.is_integer()));
        assert!(has_phi);
        for r in 0..h3.root_count() {
            let root = h3.coords(r).unwrap();
            assert_eq!(root.is_positive(), h3.is_positive(r));
        }
    }

    #[test]
    fn dihedral_display() {
        let r = rs("I2(7)");
        assert_eq!(r.root_count(), 14);
        assert_eq!(r.display(0), "angle:0/7");
        assert_eq!(r.display(1), "angle:6/7");
        assert_eq!(r.display(r.negate(0)), "angle:7/7");
    }
}
