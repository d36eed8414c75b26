//! Exhaustive drivers over all Coxeter elements and reduced words of `w_o`.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::coxeter::{
    coxeter_elements, longest_element, reduced_words_bounded, reverse_word, sorting_word,
    RootId, RootSystem, Word, DEFAULT_WORD_CAP,
};
use crate::error::Result;
use crate::labeling::{rank2_subsystems, stable_set_with};
use crate::par::{map_jobs, Execution};
use crate::theorems::{
    verify_corollary1, verify_theorem1, verify_theorem2i, verify_theorem2ii, Claim, VerificationReport, Verdict,
    VerifyOptions,
};

#[derive(Clone, Debug)]
pub struct ScanConfig {
    pub claims: Vec<Claim>,
    /// Cap on reduced words of `w_o`; past it the scan runs on a prefix.
    pub cap: usize,
    pub options: VerifyOptions,
    pub execution: Execution,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            claims: Claim::ALL.to_vec(),
            cap: DEFAULT_WORD_CAP,
            options: VerifyOptions::default(),
            execution: Execution::default(),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictCounts {
    pub holds: usize,
    pub fails: usize,
    pub unknown: usize,
    pub not_applicable: usize,
}

impl VerdictCounts {
    fn add(&mut self, v: Verdict) {
        match v {
            Verdict::Holds => self.holds += 1,
            Verdict::Fails => self.fails += 1,
            Verdict::Unknown => self.unknown += 1,
            Verdict::NotApplicable => self.not_applicable += 1,
        }
    }
}

/// Where `Stab(c, w_o(c_rev))` sits among all `Stab(c, wo)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RevStabStat {
    pub c: String,
    pub rev_size: usize,
    pub min_size: usize,
    /// No scanned `Stab(c, wo)` is strictly smaller under inclusion.
    pub minimal: bool,
    /// Contained in every scanned `Stab(c, wo)`.
    pub least: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScanReport {
    #[serde(rename = "type")]
    pub type_name: String,
    pub coxeter_elements: usize,
    pub reduced_words: usize,
    /// False when the reduced-word cap cut the enumeration short.
    pub words_complete: bool,
    pub counts: BTreeMap<Claim, VerdictCounts>,
    pub rev_stab: Vec<RevStabStat>,
    pub reports: Vec<VerificationReport>,
    pub elapsed_ms: f64,
}

impl ScanReport {
    /// `Fails` if anything fails, else `Unknown` if anything is unknown.
    pub fn overall(&self) -> Verdict {
        let total = self.counts.values().fold(VerdictCounts::default(), |a, c| VerdictCounts {
            holds: a.holds + c.holds,
            fails: a.fails + c.fails,
            unknown: a.unknown + c.unknown,
            not_applicable: a.not_applicable + c.not_applicable,
        });
        if total.fails > 0 {
            Verdict::Fails
        } else if total.unknown > 0 {
            Verdict::Unknown
        } else {
            Verdict::Holds
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerificationReport> {
        self.reports.iter().filter(|r| r.verdict == Verdict::Fails)
    }

    pub fn unknowns(&self) -> impl Iterator<Item = &VerificationReport> {
        self.reports.iter().filter(|r| r.verdict == Verdict::Unknown)
    }
}

enum Job {
    Pair(Word, Word),
    Single(Word, Word),
    Chain(Word, Word, Word),
}

/// Runs the selected claims over every Coxeter element (one word each) and
/// every reduced word of `w_o` up to the cap.
///
/// The inclusion claim is checked on the pairs `(wo, w_o(c))` and
/// `(w_o(c_rev), wo)` for each `wo`, which covers the bottom and top of
/// every chain through the scanned words.
pub fn run_scan(rs: &RootSystem, cfg: &ScanConfig) -> Result<ScanReport> {
    let start = Instant::now();
    let w0 = longest_element(rs);
    let elements: Vec<Word> = coxeter_elements(rs).into_iter().map(|(_, w)| w).collect();
    let (words, words_complete) = reduced_words_bounded(rs, &w0, cfg.cap.max(1));
    let claims: BTreeSet<Claim> = cfg.claims.iter().copied().collect();

    let mut jobs: Vec<(Claim, Job)> = Vec::new();
    for &claim in &claims {
        for c in &elements {
            match claim {
                Claim::Theorem1 => {
                    jobs.extend(elements.iter().map(|c2| (claim, Job::Pair(c.clone(), c2.clone()))));
                }
                Claim::Theorem2i | Claim::Corollary1 => {
                    jobs.extend(words.iter().map(|wo| (claim, Job::Single(c.clone(), wo.clone()))));
                }
                Claim::Theorem2ii => {
                    let top = sorting_word(rs, c, &w0)?;
                    let bottom = sorting_word(rs, &reverse_word(c), &w0)?;
                    for wo in &words {
                        jobs.push((claim, Job::Chain(c.clone(), wo.clone(), top.clone())));
                        if wo != &bottom {
                            jobs.push((claim, Job::Chain(c.clone(), bottom.clone(), wo.clone())));
                        }
                    }
                }
            }
        }
    }

    let opts = cfg.options;
    let results = map_jobs(cfg.execution, &jobs, |(claim, job)| match (claim, job) {
        (Claim::Theorem1, Job::Pair(c, c2)) => verify_theorem1(rs, c, c2),
        (Claim::Theorem2i, Job::Single(c, wo)) => verify_theorem2i(rs, c, wo),
        (Claim::Corollary1, Job::Single(c, wo)) => verify_corollary1(rs, c, wo, opts),
        (Claim::Theorem2ii, Job::Chain(c, wo, wo2)) => verify_theorem2ii(rs, c, wo, wo2, opts),
        _ => unreachable!("job shape matches claim"),
    });
    let reports: Vec<VerificationReport> = results.into_iter().collect::<Result<_>>()?;

    let mut counts: BTreeMap<Claim, VerdictCounts> = claims.iter().map(|&c| (c, VerdictCounts::default())).collect();
    for r in &reports {
        counts.get_mut(&r.claim).expect("claim scheduled").add(r.verdict);
    }
    let rev_stab = rev_stab_stats(rs, &elements, &words, cfg.execution)?;
    Ok(ScanReport {
        type_name: rs.spec().name(),
        coxeter_elements: elements.len(),
        reduced_words: words.len(),
        words_complete,
        counts,
        rev_stab,
        reports,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

fn rev_stab_stats(rs: &RootSystem, elements: &[Word], words: &[Word], exec: Execution) -> Result<Vec<RevStabStat>> {
    let subsystems = rank2_subsystems(rs);
    let w0 = longest_element(rs);
    elements
        .iter()
        .map(|c| {
            let rev = stable_set_with(rs, &subsystems, c, &sorting_word(rs, &reverse_word(c), &w0)?)?.roots;
            let all: Vec<BTreeSet<RootId>> = map_jobs(exec, words, |wo| stable_set_with(rs, &subsystems, c, wo))
                .into_iter()
                .map(|s| s.map(|s| s.roots))
                .collect::<Result<_>>()?;
            Ok(RevStabStat {
                c: c.to_string(),
                rev_size: rev.len(),
                min_size: all.iter().map(BTreeSet::len).min().unwrap_or(rev.len()),
                minimal: !all.iter().any(|s| s.len() < rev.len() && s.is_subset(&rev)),
                least: all.iter().all(|s| rev.is_subset(s)),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::build_root_system;

    fn rs(s: &str) -> RootSystem {
        build_root_system(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn a2_all_claims() {
        let r = run_scan(&rs("A2"), &ScanConfig::default()).unwrap();
        assert_eq!((r.coxeter_elements, r.reduced_words), (2, 2));
        assert!(r.words_complete);
        assert_eq!(r.overall(), Verdict::Holds);
        assert_eq!(r.counts[&Claim::Theorem1].holds, 4);
        assert_eq!(r.counts[&Claim::Theorem2i].holds, 4);
        assert_eq!(r.counts[&Claim::Corollary1].holds, 4);
        assert!(r.rev_stab.iter().all(|s| s.least && s.rev_size == 2));
    }

    #[test]
    fn a1_trivial() {
        let r = run_scan(&rs("A1"), &ScanConfig::default()).unwrap();
        assert_eq!(r.overall(), Verdict::Holds);
        assert_eq!(r.reports.len(), 4);
    }

    #[test]
    fn sequential_matches_parallel() {
        let b2 = rs("B2");
        let mut cfg = ScanConfig { execution: Execution::Sequential, ..ScanConfig::default() };
        let seq = run_scan(&b2, &cfg).unwrap();
        cfg.execution = Execution::Parallel;
        let par = run_scan(&b2, &cfg).unwrap();
        let strip = |r: &ScanReport| {
            r.reports.iter().map(|x| (x.claim, x.inputs.clone(), x.verdict, x.witness.clone())).collect::<Vec<_>>()
        };
        assert_eq!(strip(&seq), strip(&par));
        assert_eq!(seq.counts, par.counts);
    }

    #[test]
    fn capped_scan() {
        let cfg = ScanConfig { claims: vec![Claim::Theorem2i], cap: 3, ..ScanConfig::default() };
        let r = run_scan(&rs("A3"), &cfg).unwrap();
        assert!(!r.words_complete);
        assert_eq!(r.reduced_words, 3);
        assert_eq!(r.reports.len(), 4 * 3);
    }
}
