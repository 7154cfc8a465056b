//! Parameters `(β, γ)` for which extremal codes were already known, per
//! enumerator family.
//!
//! The shipped documents (`data/registry/*.json`) are transcriptions of the
//! published lists. Entries tagged `recent` were reported shortly before the
//! constructions in this crate; [`RegistryLayer::Baseline`] leaves them out.
//! Ellipses in the published lists were expanded by the step of the preceding
//! terms, and entries that depend on that reading carry `low_confidence`.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::enumerator::{EnumeratorId, Family};
use crate::error::{Error, Result};

const SHIPPED: [&str; 4] = [
    include_str!("../../data/registry/w58.json"),
    include_str!("../../data/registry/w64.json"),
    include_str!("../../data/registry/w66.json"),
    include_str!("../../data/registry/w68.json"),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Prior,
    Recent,
    User,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegistryEntry {
    pub beta: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<i64>,
    pub source: Source,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub low_confidence: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct RegistryDocument {
    format: String,
    version: u32,
    length: usize,
    families: BTreeMap<String, Vec<RegistryEntry>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegistryLayer {
    /// Everything except `recent` entries.
    Baseline,
    /// All entries.
    Updated,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Novelty {
    Known,
    New,
}

/// Append-only store of known parameters.
#[derive(Clone, Debug, Default)]
pub struct KnownParamsRegistry {
    families: BTreeMap<Family, Vec<RegistryEntry>>,
}

impl KnownParamsRegistry {
    /// The registry transcribed from the published lists.
    pub fn shipped() -> Self {
        let mut reg = KnownParamsRegistry::default();
        for doc in SHIPPED {
            reg.load_document(doc).expect("shipped registry parses");
        }
        reg
    }

    pub fn load_document(&mut self, text: &str) -> Result<()> {
        let doc: RegistryDocument = serde_json::from_str(text)?;
        if doc.format != "selfdual-registry" || doc.version != 1 {
            return Err(Error::Parse(format!(
                "unsupported registry document {} v{}",
                doc.format, doc.version
            )));
        }
        for (tag, entries) in doc.families {
            let family: Family = tag.parse()?;
            if family.length() != doc.length {
                return Err(Error::Parse(format!("{family} listed under length {}", doc.length)));
            }
            let slot = self.families.entry(family).or_default();
            for e in entries {
                if family.has_gamma() != e.gamma.is_some() {
                    return Err(Error::Parse(format!("{family} entry β={} has the wrong shape", e.beta)));
                }
                slot.push(e);
            }
        }
        Ok(())
    }

    pub fn load_file(&mut self, path: &Path) -> Result<()> {
        self.load_document(&std::fs::read_to_string(path)?)
    }

    /// Appends a user-discovered parameter set.
    pub fn add(&mut self, id: &EnumeratorId) {
        self.families.entry(id.family).or_default().push(RegistryEntry {
            beta: id.beta,
            gamma: id.gamma,
            source: Source::User,
            low_confidence: false,
        });
    }

    pub fn entries(&self, family: Family) -> Option<&[RegistryEntry]> {
        self.families.get(&family).map(Vec::as_slice)
    }

    pub fn check(&self, id: &EnumeratorId) -> Result<Novelty> {
        self.check_layer(id, RegistryLayer::Updated)
    }

    pub fn check_layer(&self, id: &EnumeratorId, layer: RegistryLayer) -> Result<Novelty> {
        let entries = self
            .families
            .get(&id.family)
            .ok_or_else(|| Error::UnknownFamily(id.family.to_string()))?;
        let known = entries.iter().any(|e| {
            e.beta == id.beta
                && e.gamma == id.gamma
                && (layer == RegistryLayer::Updated || e.source != Source::Recent)
        });
        Ok(if known { Novelty::Known } else { Novelty::New })
    }

    /// One JSON document per length, entries sorted by `(γ, β)`.
    pub fn to_documents(&self) -> BTreeMap<usize, String> {
        let mut by_len: BTreeMap<usize, BTreeMap<String, Vec<RegistryEntry>>> = BTreeMap::new();
        for (family, entries) in &self.families {
            let mut es = entries.clone();
            es.sort_by_key(|e| (e.gamma, e.beta, e.source));
            es.dedup_by(|a, b| a.beta == b.beta && a.gamma == b.gamma);
            by_len
                .entry(family.length())
                .or_default()
                .insert(family.tag().to_string(), es);
        }
        by_len
            .into_iter()
            .map(|(length, families)| {
                let doc = RegistryDocument {
                    format: "selfdual-registry".into(),
                    version: 1,
                    length,
                    families,
                };
                (length, serde_json::to_string_pretty(&doc).expect("serializable"))
            })
            .collect()
    }
}
