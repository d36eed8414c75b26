//! Coxeter matrices, type strings and the classification of finite types.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An irreducible finite Coxeter type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    G2,
    H(usize),
    I2(usize),
}

impl Family {
    pub fn rank(self) -> usize {
        match self {
            Family::A(n) | Family::B(n) | Family::D(n) | Family::E(n) | Family::H(n) => n,
            Family::F4 => 4,
            Family::G2 | Family::I2(_) => 2,
        }
    }

    /// Fundamental degrees of the invariant polynomials.
    pub fn degrees(self) -> Vec<u64> {
        match self {
            Family::A(n) => (2..=n as u64 + 1).collect(),
            Family::B(n) => (1..=n as u64).map(|i| 2 * i).collect(),
            Family::D(n) => {
                let mut d: Vec<u64> = (1..n as u64).map(|i| 2 * i).collect();
                d.push(n as u64);
                d.sort_unstable();
                d
            }
            Family::E(6) => vec![2, 5, 6, 8, 9, 12],
            Family::E(7) => vec![2, 6, 8, 10, 12, 14, 18],
            Family::E(8) => vec![2, 8, 12, 14, 18, 20, 24, 30],
            Family::E(_) => unreachable!("E_n only exists for n = 6, 7, 8"),
            Family::F4 => vec![2, 6, 8, 12],
            Family::G2 => vec![2, 6],
            Family::H(3) => vec![2, 6, 10],
            Family::H(4) => vec![2, 12, 20, 30],
            Family::H(_) => unreachable!("H_n only exists for n = 3, 4"),
            Family::I2(m) => vec![2, m as u64],
        }
    }

    /// The Coxeter number, i.e. the largest degree.
    pub fn coxeter_number(self) -> u64 {
        *self.degrees().last().expect("nonempty degrees")
    }

    /// Number of positive roots (half the product of rank and Coxeter number).
    pub fn positive_roots(self) -> usize {
        (self.rank() as u64 * self.coxeter_number() / 2) as usize
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A(n) => write!(f, "A{n}"),
            Family::B(n) => write!(f, "B{n}"),
            Family::D(n) => write!(f, "D{n}"),
            Family::E(n) => write!(f, "E{n}"),
            Family::F4 => write!(f, "F4"),
            Family::G2 => write!(f, "G2"),
            Family::H(n) => write!(f, "H{n}"),
            Family::I2(m) => write!(f, "I2({m})"),
        }
    }
}

/// One connected component of the Coxeter diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    /// Generators (0-based) in this component.
    pub generators: Vec<usize>,
    pub family: Family,
}

/// A validated finite Coxeter system given by its Coxeter matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoxeterSpec {
    matrix: Vec<Vec<usize>>,
    /// Set when the spec came from a type string.
    family: Option<Family>,
    components: Vec<Component>,
}

impl CoxeterSpec {
    /// Validates an explicit Coxeter matrix and classifies its components.
    pub fn from_matrix(matrix: Vec<Vec<usize>>) -> Result<Self> {
        let n = matrix.len();
        if n == 0 {
            return Err(Error::MalformedMatrix("rank must be positive".into()));
        }
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedMatrix(format!("row {} has length {}", i + 1, row.len())));
            }
            if row[i] != 1 {
                return Err(Error::MalformedMatrix(format!("m[{0}][{0}] must be 1", i + 1)));
            }
            for j in 0..n {
                if i != j && (row[j] < 2 || row[j] != matrix[j][i]) {
                    return Err(Error::MalformedMatrix(format!(
                        "m[{}][{}] must be symmetric and >= 2",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        let components = classify(&matrix)?;
        Ok(CoxeterSpec { matrix, family: None, components })
    }

    pub fn from_family(family: Family) -> Result<Self> {
        let n = family.rank();
        let mut m = vec![vec![2; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        let mut edge = |i: usize, j: usize, label: usize| {
            m[i - 1][j - 1] = label;
            m[j - 1][i - 1] = label;
        };
        match family {
            Family::A(n) => (1..n).for_each(|i| edge(i, i + 1, 3)),
            Family::B(n) => {
                (1..n - 1).for_each(|i| edge(i, i + 1, 3));
                edge(n - 1, n, 4);
            }
            Family::D(n) => {
                (1..n - 2).for_each(|i| edge(i, i + 1, 3));
                edge(n - 2, n - 1, 3);
                edge(n - 2, n, 3);
            }
            Family::E(n) => {
                edge(1, 3, 3);
                edge(2, 4, 3);
                (3..n).for_each(|i| edge(i, i + 1, 3));
            }
            Family::F4 => {
                edge(1, 2, 3);
                edge(2, 3, 4);
                edge(3, 4, 3);
            }
            Family::G2 => edge(1, 2, 6),
            Family::H(n) => {
                edge(1, 2, 5);
                (2..n).for_each(|i| edge(i, i + 1, 3));
            }
            Family::I2(m) => edge(1, 2, m),
        }
        let mut spec = CoxeterSpec::from_matrix(m)?;
        spec.family = Some(family);
        Ok(spec)
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<usize>] {
        &self.matrix
    }

    /// `m_ij` for 0-based generators.
    pub fn m(&self, i: usize, j: usize) -> usize {
        self.matrix[i][j]
    }

    pub fn family(&self) -> Option<Family> {
        self.family
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// Diagram edges `(i, j, m_ij)` with `i < j` and `m_ij >= 3`.
    pub fn edges(&self) -> Vec<(usize, usize, usize)> {
        let n = self.rank();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.matrix[i][j] >= 3 {
                    out.push((i, j, self.matrix[i][j]));
                }
            }
        }
        out
    }

    /// Rank 2 with `m >= 7`: handled by the coordinate-free dihedral model.
    pub fn is_large_dihedral(&self) -> bool {
        self.rank() == 2 && self.matrix[0][1] >= 7
    }

    /// Total number of positive roots.
    pub fn positive_roots(&self) -> usize {
        self.components.iter().map(|c| c.family.positive_roots()).sum()
    }

    /// Short human-readable name, e.g. `A3` or `A2xA1`.
    pub fn name(&self) -> String {
        if let Some(f) = self.family {
            return f.to_string();
        }
        self.components
            .iter()
            .map(|c| c.family.to_string())
            .collect::<Vec<_>>()
            .join("x")
    }
}

impl FromStr for CoxeterSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let family = parse_family(s.trim()).ok_or_else(|| Error::BadType(s.to_string()))?;
        CoxeterSpec::from_family(family)
    }
}

impl fmt::Display for CoxeterSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn parse_family(s: &str) -> Option<Family> {
    if let Some(rest) = s.strip_prefix("I2(") {
        let m: usize = rest.strip_suffix(')')?.parse().ok()?;
        return (m >= 2).then_some(Family::I2(m));
    }
    let mut chars = s.chars();
    let head = chars.next()?;
    let n: usize = chars.as_str().parse().ok()?;
    match (head, n) {
        ('A', n) if n >= 1 => Some(Family::A(n)),
        ('B', n) if n >= 2 => Some(Family::B(n)),
        ('D', n) if n >= 4 => Some(Family::D(n)),
        ('E', 6..=8) => Some(Family::E(n)),
        ('F', 4) => Some(Family::F4),
        ('G', 2) => Some(Family::G2),
        ('H', 3 | 4) => Some(Family::H(n)),
        _ => None,
    }
}

fn classify(matrix: &[Vec<usize>]) -> Result<Vec<Component>> {
    let n = matrix.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let v = comp[k];
            for w in 0..n {
                if !seen[w] && matrix[v][w] >= 3 {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        let family = classify_component(matrix, &comp)?;
        out.push(Component { generators: comp, family });
    }
    Ok(out)
}

fn classify_component(matrix: &[Vec<usize>], comp: &[usize]) -> Result<Family> {
    let k = comp.len();
    let not_finite = |why: &str| Error::NotFinite(format!("component {:?}: {why}", comp.iter().map(|v| v + 1).collect::<Vec<_>>()));
    let mut edges = Vec::new();
    for (a, &i) in comp.iter().enumerate() {
        for &j in &comp[a + 1..] {
            if matrix[i][j] >= 3 {
                edges.push((i, j, matrix[i][j]));
            }
        }
    }
    if edges.len() != k - 1 {
        return Err(not_finite("diagram has a cycle"));
    }
    match k {
        1 => return Ok(Family::A(1)),
        2 => {
            return Ok(match edges[0].2 {
                3 => Family::A(2),
                4 => Family::B(2),
                6 => Family::G2,
                m => Family::I2(m),
            })
        }
        _ => {}
    }
    let degree = |v: usize| edges.iter().filter(|e| e.0 == v || e.1 == v).count();
    let heavy: Vec<_> = edges.iter().filter(|e| e.2 != 3).collect();
    if heavy.iter().any(|e| e.2 > 5) {
        return Err(not_finite("label > 5 in rank >= 3"));
    }
    if heavy.len() > 1 {
        return Err(not_finite("more than one edge label > 3"));
    }
    let branch: Vec<usize> = comp.iter().copied().filter(|&v| degree(v) >= 3).collect();
    if let Some(e) = heavy.first() {
        if !branch.is_empty() {
            return Err(not_finite("branched diagram with label > 3"));
        }
        let at_end = degree(e.0) == 1 || degree(e.1) == 1;
        return match (e.2, at_end, k) {
            (4, true, _) => Ok(Family::B(k)),
            (4, false, 4) => Ok(Family::F4),
            (5, true, 3 | 4) => Ok(Family::H(k)),
            _ => Err(not_finite("no finite family matches")),
        };
    }
    match branch.as_slice() {
        [] => Ok(Family::A(k)),
        [b] if degree(*b) == 3 => {
            let mut legs: Vec<usize> = edges
                .iter()
                .filter_map(|e| match (e.0 == *b, e.1 == *b) {
                    (true, _) => Some(e.1),
                    (_, true) => Some(e.0),
                    _ => None,
                })
                .map(|first| leg_length(&edges, *b, first))
                .collect();
            legs.sort_unstable();
            match legs.as_slice() {
                [1, 1, _] => Ok(Family::D(k)),
                [1, 2, 2] => Ok(Family::E(6)),
                [1, 2, 3] => Ok(Family::E(7)),
                [1, 2, 4] => Ok(Family::E(8)),
                _ => Err(not_finite("branch legs do not match D or E")),
            }
        }
        _ => Err(not_finite("more than one branch vertex or degree > 3")),
    }
}

fn leg_length(edges: &[(usize, usize, usize)], from: usize, first: usize) -> usize {
    let (mut prev, mut cur, mut len) = (from, first, 1);
    loop {
        let next = edges.iter().find_map(|e| {
            if e.0 == cur && e.1 != prev {
                Some(e.1)
            } else if e.1 == cur && e.0 != prev {
                Some(e.0)
            } else {
                None
            }
        });
        match next {
            Some(nx) => {
                prev = cur;
                cur = nx;
                len += 1;
            }
            None => return len,
        }
    }
}
