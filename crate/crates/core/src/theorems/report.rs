use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::complexes::{SubdivisionCertificate, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Claim {
    #[serde(rename = "thm1")]
    Theorem1,
    #[serde(rename = "thm2i")]
    Theorem2i,
    #[serde(rename = "thm2ii")]
    Theorem2ii,
    #[serde(rename = "cor1")]
    Corollary1,
}

impl Claim {
    pub const ALL: [Claim; 4] = [Claim::Theorem1, Claim::Theorem2i, Claim::Theorem2ii, Claim::Corollary1];

    pub fn id(self) -> &'static str {
        match self {
            Claim::Theorem1 => "thm1",
            Claim::Theorem2i => "thm2i",
            Claim::Theorem2ii => "thm2ii",
            Claim::Corollary1 => "cor1",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Claim::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| format!("unknown claim `{s}` (expected thm1, thm2i, thm2ii or cor1)"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails,
    /// Search budget or time limit ran out.
    Unknown,
    /// Hypothesis of the claim is not met by the inputs.
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::Unknown => "unknown",
            Verdict::NotApplicable => "not-applicable",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    None,
    /// Vertex bijection between the two complexes being compared.
    Isomorphism { map: BTreeMap<Vertex, Vertex> },
    /// Position of each vertex and the root it carries.
    Labels { positions: BTreeMap<Vertex, String> },
    Certificate {
        certificate: SubdivisionCertificate,
        depth: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        flag: Option<bool>,
    },
    Counterexample { reason: String, data: serde_json::Value },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: Claim,
    #[serde(rename = "type")]
    pub type_name: String,
    pub inputs: BTreeMap<String, String>,
    pub verdict: Verdict,
    pub witness: Witness,
    pub elapsed_ms: f64,
}

impl VerificationReport {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    /// One-line summary for text output.
    pub fn summary(&self) -> String {
        let inputs: Vec<String> = self.inputs.iter().map(|(k, v)| format!("{k}=\"{v}\"")).collect();
        let extra = match &self.witness {
            Witness::Certificate { depth, flag, .. } => match flag {
                Some(f) => format!(" depth={depth} flag={f}"),
                None => format!(" depth={depth}"),
            },
            Witness::Counterexample { reason, .. } => format!(" reason: {reason}"),
            Witness::Isomorphism { map } => format!(" iso on {} vertices", map.len()),
            Witness::Labels { positions } => format!(" {} vertices labelled", positions.len()),
            Witness::None => String::new(),
        };
        format!("{} {} {} -> {}{}", self.claim, self.type_name, inputs.join(" "), self.verdict, extra)
    }
}
