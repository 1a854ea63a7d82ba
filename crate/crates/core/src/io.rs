//! JSON interchange format for constructed pairs and families.
//!
//! ```json
//! {
//!   "format": "czcss-sequences/1",
//!   "kind": "czcss",
//!   "q": 4,
//!   "length": 18,
//!   "params": { "q": 4, "m": 5, "n": 2, "pi": [1, 0, 2], "c": 0, "c_prime": 0, "c_1": 0 },
//!   "claimed": { "K": 8, "M": 8, "N": 18, "Z": 5 },
//!   "sets": [ { "label": "S(0,0)", "sequences": [[0, 0, 0, 0, 2, ...], ...] }, ... ]
//! }
//! ```
//!
//! Phases are residues in `0..q`; complex values never appear in files.
//! `kind` decides how `verify` interprets the sets: `gcp` files hold the
//! Golay pair followed by its mate, `czcp`/`czcp_mate` files hold one pair,
//! `czcss` files hold the whole family.

use serde::{Deserialize, Serialize};

use crate::constructions::{ClaimedShape, CodeFamily, CodeSet, ConstructionParams, SequencePair};
use crate::error::{Error, Result};
use crate::gbf::PhaseSequence;

pub const FORMAT_TAG: &str = "czcss-sequences/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum FileKind {
    Gcp,
    Czcp,
    CzcpMate,
    Czcss,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetEntry {
    pub label: String,
    pub sequences: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceFile {
    pub format: String,
    pub kind: FileKind,
    pub q: u32,
    pub length: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<ConstructionParams>,
    pub claimed: ClaimedShape,
    pub sets: Vec<SetEntry>,
}

fn entry(set: &CodeSet) -> SetEntry {
    SetEntry {
        label: set.label.clone(),
        sequences: set.sequences.iter().map(|s| s.phases().to_vec()).collect(),
    }
}

impl SequenceFile {
    pub fn from_family(kind: FileKind, family: &CodeFamily, params: Option<ConstructionParams>) -> Self {
        Self {
            format: FORMAT_TAG.to_string(),
            kind,
            q: family.q(),
            length: family.seq_len(),
            params,
            claimed: family.claimed,
            sets: family.sets.iter().map(entry).collect(),
        }
    }

    /// A file holding the given pairs, one set per pair.
    pub fn from_pairs(
        kind: FileKind,
        pairs: &[(&str, &SequencePair)],
        params: Option<ConstructionParams>,
    ) -> Result<Self> {
        let sets = pairs
            .iter()
            .map(|(label, p)| CodeSet::new(*label, vec![p.first.clone(), p.second.clone()]))
            .collect::<Result<Vec<_>>>()?;
        let zcz = pairs.first().map_or(0, |(_, p)| p.claimed_z);
        Ok(Self::from_family(kind, &CodeFamily::new(sets, zcz)?, params))
    }

    /// Validates shapes and phase ranges and rebuilds the family.
    pub fn to_family(&self) -> Result<CodeFamily> {
        if self.format != FORMAT_TAG {
            return Err(Error::InvalidParameter(format!(
                "unsupported format '{}', expected '{FORMAT_TAG}'",
                self.format
            )));
        }
        let mut sets = Vec::with_capacity(self.sets.len());
        for s in &self.sets {
            let seqs = s
                .sequences
                .iter()
                .map(|p| {
                    if p.len() != self.length {
                        return Err(Error::ShapeMismatch(format!(
                            "sequence of length {} in set '{}', header says {}",
                            p.len(),
                            s.label,
                            self.length
                        )));
                    }
                    PhaseSequence::new(self.q, p.clone())
                })
                .collect::<Result<Vec<_>>>()?;
            sets.push(CodeSet::new(s.label.clone(), seqs)?);
        }
        let family = CodeFamily::new(sets, self.claimed.zcz)?;
        Ok(family)
    }

    /// The pair stored as set `index`.
    pub fn pair(&self, index: usize) -> Result<SequencePair> {
        let family = self.to_family()?;
        let set = family
            .sets
            .get(index)
            .ok_or_else(|| Error::ShapeMismatch(format!("file has no set {index}")))?;
        if set.sequences.len() != 2 {
            return Err(Error::ShapeMismatch(format!(
                "set '{}' holds {} sequences, not a pair",
                set.label,
                set.sequences.len()
            )));
        }
        SequencePair::new(set.sequences[0].clone(), set.sequences[1].clone(), self.claimed.zcz)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidParameter(format!("bad sequence file: {e}")))
    }

    /// Space-separated phase rows, one sequence per line, each set headed by
    /// its label.
    pub fn to_rows(&self) -> String {
        let mut out = String::new();
        for s in &self.sets {
            out.push_str(&format!("# {}\n", s.label));
            for p in &s.sequences {
                let row: Vec<String> = p.iter().map(|v| v.to_string()).collect();
                out.push_str(&row.join(" "));
                out.push('\n');
            }
        }
        out
    }
}
