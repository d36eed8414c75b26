//! Executable checks of the cluster-complex, stable-root and
//! 2-truncated-cube statements about `Δ(c·w_o; w_o)`.

mod oracles;
mod report;

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use serde_json::json;

pub use oracles::{catalan_count, polygon_diagonals, type_a_oracle};
pub use report::{Claim, VerificationReport, Verdict, Witness};

use crate::complexes::{
    are_isomorphic, cross_polytope_boundary, find_subdivision_sequence, is_flag, subword_complex, SearchBudget,
    SearchOutcome, SimplicialComplex, SubwordComplex,
};
use crate::coxeter::{
    longest_element, require_coxeter_word, require_longest_word, sorting_word, RootId, RootSystem, Word,
};
use crate::error::Result;
use crate::labeling::{erase_disagreements, lr_labeling, quiver_of, rank2_subsystems, stable_set_with};

/// Default node budget for subdivision searches.
pub const DEFAULT_BUDGET: usize = 200_000;

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub budget: usize,
    /// Wall-clock limit per claim; searches cut short report `unknown`.
    pub time_limit: Option<Duration>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { budget: DEFAULT_BUDGET, time_limit: None }
    }
}

impl VerifyOptions {
    fn search_budget(&self, start: Instant) -> SearchBudget {
        SearchBudget { nodes: self.budget, deadline: self.time_limit.map(|t| start + t) }
    }
}

/// `Δ(c·wo; w_o)` after validating both words.
pub fn cw_complex(rs: &RootSystem, c: &Word, wo: &Word) -> Result<SubwordComplex> {
    require_coxeter_word(rs, c)?;
    require_longest_word(rs, wo)?;
    subword_complex(rs, &c.concat(wo), &longest_element(rs))
}

/// The `c`-cluster complex, taken to be `Δ(c·w_o(c); w_o)`.
pub fn cluster_complex(rs: &RootSystem, c: &Word) -> Result<SubwordComplex> {
    let wo = sorting_word(rs, c, &longest_element(rs))?;
    cw_complex(rs, c, &wo)
}

/// Lexicographically first reduced word of the Coxeter element `c`: the
/// smallest linear extension of its quiver.
pub fn canonical_coxeter_word(rs: &RootSystem, c: &Word) -> Result<Word> {
    let q = quiver_of(rs, c)?;
    let n = rs.rank();
    let mut indegree = vec![0; n];
    for &(_, to, _) in &q.arrows {
        indegree[to] += 1;
    }
    let mut done = vec![false; n];
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let next = (0..n).find(|&v| !done[v] && indegree[v] == 0).expect("quiver is acyclic");
        done[next] = true;
        out.push(next);
        for &(from, to, _) in &q.arrows {
            if from == next {
                indegree[to] -= 1;
            }
        }
    }
    Ok(Word::new(out))
}

fn inputs(rs: &RootSystem, pairs: &[(&str, &Word)]) -> Result<BTreeMap<String, String>> {
    let mut m: BTreeMap<String, String> = pairs.iter().map(|(k, w)| (k.to_string(), w.to_string())).collect();
    if let Some((_, c)) = pairs.iter().find(|(k, _)| *k == "c") {
        m.insert("c_element".into(), canonical_coxeter_word(rs, c)?.to_string());
    }
    Ok(m)
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

fn facets_json(k: &SimplicialComplex) -> serde_json::Value {
    serde_json::to_value(k).expect("complexes serialize")
}

/// `Δ(c·w_o(c'); w_o)` against the `c`-cluster complex of the Coxeter
/// system obtained by erasing the edges where the quivers of `c` and `c'`
/// disagree.
pub fn verify_theorem1(rs: &RootSystem, c: &Word, c2: &Word) -> Result<VerificationReport> {
    let start = Instant::now();
    let wo2 = sorting_word(rs, c2, &longest_element(rs))?;
    let k1 = cw_complex(rs, c, &wo2)?;
    let (spec, word) = erase_disagreements(&quiver_of(rs, c)?, &quiver_of(rs, c2)?)?;
    let erased = RootSystem::new(spec)?;
    let k2 = cluster_complex(&erased, &word)?;
    let mut inputs = inputs(rs, &[("c", c), ("c2", c2)])?;
    inputs.insert("erased_type".into(), erased.spec().name());
    let (verdict, witness) = match are_isomorphic(&k1.complex, &k2.complex) {
        Some(map) => (Verdict::Holds, Witness::Isomorphism { map }),
        None => (
            Verdict::Fails,
            Witness::Counterexample {
                reason: "complexes are not isomorphic".into(),
                data: json!({ "subword_complex": facets_json(&k1.complex), "cluster_complex": facets_json(&k2.complex) }),
            },
        ),
    };
    Ok(VerificationReport {
        claim: Claim::Theorem1,
        type_name: rs.spec().name(),
        inputs,
        verdict,
        witness,
        elapsed_ms: elapsed_ms(start),
    })
}

/// Root labels of the vertices of `Δ(c·wo; w_o)` against `−Π ∪ Stab(c, wo)`.
pub fn verify_theorem2i(rs: &RootSystem, c: &Word, wo: &Word) -> Result<VerificationReport> {
    let start = Instant::now();
    let k = cw_complex(rs, c, wo)?;
    let lr = lr_labeling(rs, c, wo)?;
    let stab = stable_set_with(rs, &rank2_subsystems(rs), c, wo)?;
    let labels: BTreeSet<RootId> = k.complex.vertices().iter().map(|&v| lr.label(v)).collect();
    let mut expected: BTreeSet<RootId> = (0..rs.rank()).map(|i| rs.negate(rs.simple(i))).collect();
    expected.extend(stab.roots.iter().copied());
    let (verdict, witness) = if labels == expected && labels.len() == k.complex.vertex_count() {
        let positions = k.complex.vertices().iter().map(|&v| (v, rs.display(lr.label(v)))).collect();
        (Verdict::Holds, Witness::Labels { positions })
    } else {
        let show = |s: &mut dyn Iterator<Item = &RootId>| s.map(|&r| rs.display(r)).collect::<Vec<_>>();
        (
            Verdict::Fails,
            Witness::Counterexample {
                reason: "vertex labels differ from negative simple and stable roots".into(),
                data: json!({
                    "labels_not_expected": show(&mut labels.difference(&expected)),
                    "expected_not_labels": show(&mut expected.difference(&labels)),
                    "unused_positions": k.unused_positions(),
                }),
            },
        )
    };
    Ok(VerificationReport {
        claim: Claim::Theorem2i,
        type_name: rs.spec().name(),
        inputs: inputs(rs, &[("c", c), ("wo", wo)])?,
        verdict,
        witness,
        elapsed_ms: elapsed_ms(start),
    })
}

fn search_verdict(
    outcome: SearchOutcome,
    flag: Option<bool>,
    data: serde_json::Value,
) -> (Verdict, Witness) {
    match outcome {
        SearchOutcome::Found(certificate) => {
            let depth = certificate.len();
            (Verdict::Holds, Witness::Certificate { certificate, depth, flag })
        }
        SearchOutcome::Impossible => (
            Verdict::Fails,
            Witness::Counterexample { reason: "exhaustive search found no subdivision sequence".into(), data },
        ),
        SearchOutcome::Unknown { explored } => (
            Verdict::Unknown,
            Witness::Counterexample { reason: format!("search budget exhausted after {explored} nodes"), data },
        ),
    }
}

/// When `Stab(c, wo) ⊆ Stab(c, wo2)`, searches for edge subdivisions
/// turning `Δ(c·wo; w_o)` into `Δ(c·wo2; w_o)`.
pub fn verify_theorem2ii(
    rs: &RootSystem,
    c: &Word,
    wo: &Word,
    wo2: &Word,
    opts: VerifyOptions,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let subsystems = rank2_subsystems(rs);
    let s1 = stable_set_with(rs, &subsystems, c, wo)?;
    let s2 = stable_set_with(rs, &subsystems, c, wo2)?;
    let inputs = inputs(rs, &[("c", c), ("wo", wo), ("wo2", wo2)])?;
    let report = |verdict, witness| VerificationReport {
        claim: Claim::Theorem2ii,
        type_name: rs.spec().name(),
        inputs: inputs.clone(),
        verdict,
        witness,
        elapsed_ms: elapsed_ms(start),
    };
    if !s1.roots.is_subset(&s2.roots) {
        return Ok(report(Verdict::NotApplicable, Witness::None));
    }
    let src = cw_complex(rs, c, wo)?;
    let dst = cw_complex(rs, c, wo2)?;
    let expected = s2.roots.len() - s1.roots.len();
    let data = json!({ "source": facets_json(&src.complex), "target": facets_json(&dst.complex) });
    if dst.complex.vertex_count() != src.complex.vertex_count() + expected {
        return Ok(report(
            Verdict::Fails,
            Witness::Counterexample { reason: format!("vertex counts differ by other than {expected}"), data },
        ));
    }
    let outcome = find_subdivision_sequence(&src.complex, &dst.complex, opts.search_budget(start));
    let (verdict, witness) = search_verdict(outcome, None, data);
    Ok(report(verdict, witness))
}

/// Flagness of `Δ(c·wo; w_o)` plus a subdivision sequence from the boundary
/// of the cross-polytope (dual to the cube).
pub fn verify_corollary1(rs: &RootSystem, c: &Word, wo: &Word, opts: VerifyOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    let k = cw_complex(rs, c, wo)?;
    let flag = is_flag(&k.complex);
    let data = json!({ "complex": facets_json(&k.complex), "flag": flag });
    let (verdict, witness) = if !flag {
        (Verdict::Fails, Witness::Counterexample { reason: "complex is not flag".into(), data })
    } else {
        let cube = cross_polytope_boundary(rs.rank());
        search_verdict(find_subdivision_sequence(&cube, &k.complex, opts.search_budget(start)), Some(flag), data)
    };
    Ok(VerificationReport {
        claim: Claim::Corollary1,
        type_name: rs.spec().name(),
        inputs: inputs(rs, &[("c", c), ("wo", wo)])?,
        verdict,
        witness,
        elapsed_ms: elapsed_ms(start),
    })
}
