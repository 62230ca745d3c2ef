//! The JSON presentation file format.
//!
//! ```json
//! {
//!   "n": 3,
//!   "indecomposables": ["a", "b", "c"],
//!   "suspension": {"a": "a", "b": "b", "c": "c"},
//!   "angles": [[{"a": 1}, {"b": 1}, {"c": 1}]],
//!   "tensor": {"unit": {"a": 1}, "table": {"a|b": {"c": 1}}}
//! }
//! ```
//!
//! Objects are `{name: multiplicity}` maps; omitted names have multiplicity
//! zero. Table keys join two names with `|`, smaller name first; missing
//! pairs tensor to zero.

use std::collections::BTreeMap;
use std::path::Path;

use angk0::category::{validate_presentation, ObjectVec, Presentation, PresentationData};
use angk0::cluster::EmbeddingData;
use angk0::tensor::TensorPresentation;
use angk0::validation::Violation;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::CliError;

pub type ObjectLiteral = BTreeMap<String, u64>;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationFile {
    pub n: usize,
    pub indecomposables: Vec<String>,
    pub suspension: BTreeMap<String, String>,
    pub angles: Vec<Vec<ObjectLiteral>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tensor: Option<TensorBlock>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorBlock {
    pub unit: ObjectLiteral,
    pub table: BTreeMap<String, ObjectLiteral>,
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

pub fn parse_json<T: for<'de> Deserialize<'de>>(path: &Path, text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

pub fn load(path: &Path) -> Result<PresentationFile, CliError> {
    parse_json(path, &read_text(path)?)
}

impl PresentationFile {
    /// Canonical serialization: maps sorted by key, no whitespace.
    pub fn canonical_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    pub fn digest(&self) -> String {
        hex_digest(self.canonical_json().as_bytes())
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.indecomposables.iter().position(|x| x == name)
    }

    /// Converts an object literal, collecting unknown names and zero entries.
    pub fn object(&self, lit: &ObjectLiteral, context: &str, bad: &mut Vec<Violation>) -> ObjectVec {
        let mut v = vec![0u64; self.indecomposables.len()];
        for (name, &m) in lit {
            match self.index_of(name) {
                Some(i) if m > 0 => v[i] = m,
                Some(_) => bad.push(Violation::new("multiplicity-positive", format!("{context}: {name} has multiplicity 0"))),
                None => bad.push(Violation::new("unknown-name", format!("{context}: {name}"))),
            }
        }
        ObjectVec::new(v)
    }

    /// Structural checks that come before the category-level ones.
    fn to_data(&self, bad: &mut Vec<Violation>) -> PresentationData {
        let r = self.indecomposables.len();
        let mut suspension = vec![usize::MAX; r];
        for (from, to) in &self.suspension {
            match (self.index_of(from), self.index_of(to)) {
                (Some(i), Some(j)) => suspension[i] = j,
                (None, _) => bad.push(Violation::new("unknown-name", format!("suspension key {from}"))),
                (_, None) => bad.push(Violation::new("unknown-name", format!("suspension value {to}"))),
            }
        }
        for (i, name) in self.indecomposables.iter().enumerate() {
            if suspension[i] == usize::MAX {
                bad.push(Violation::new("suspension-total", format!("no suspension given for {name}")));
                suspension[i] = i;
            }
        }
        let angles = self
            .angles
            .iter()
            .enumerate()
            .map(|(k, a)| {
                a.iter()
                    .enumerate()
                    .map(|(i, lit)| self.object(lit, &format!("angle {k} vertex {}", i + 1), bad))
                    .collect()
            })
            .collect();
        PresentationData {
            n: self.n,
            names: self.indecomposables.clone(),
            suspension,
            angles,
        }
    }

    /// All violations of the presentation part; empty means valid.
    pub fn presentation_violations(&self) -> Vec<Violation> {
        let mut bad = Vec::new();
        let data = self.to_data(&mut bad);
        bad.extend(validate_presentation(&data).violations);
        bad
    }

    pub fn presentation(&self) -> Result<Presentation, CliError> {
        let mut bad = Vec::new();
        let data = self.to_data(&mut bad);
        if !bad.is_empty() {
            return Err(CliError::validation("invalid presentation", bad));
        }
        Ok(Presentation::new(data)?)
    }

    /// `Ok(None)` without a tensor block. Only shapes and names are checked
    /// here; the axioms are left to `validate_tensor`.
    pub fn tensor(&self, base: &Presentation) -> Result<Option<TensorPresentation>, CliError> {
        let Some(block) = &self.tensor else { return Ok(None) };
        let r = base.rank();
        let mut bad = Vec::new();
        let unit = self.object(&block.unit, "tensor unit", &mut bad);
        let mut table = vec![vec![ObjectVec::zero(r); r]; r];
        for (key, lit) in &block.table {
            let parts: Vec<&str> = key.split('|').collect();
            let [a, b] = parts[..] else {
                bad.push(Violation::new("table-key", format!("{key:?} is not of the form \"a|b\"")));
                continue;
            };
            if a > b {
                bad.push(Violation::new("table-key", format!("{key:?}: smaller name must come first")));
                continue;
            }
            let (Some(i), Some(j)) = (self.index_of(a), self.index_of(b)) else {
                bad.push(Violation::new("unknown-name", format!("table key {key:?}")));
                continue;
            };
            let v = self.object(lit, &format!("table {key}"), &mut bad);
            table[i][j] = v.clone();
            table[j][i] = v;
        }
        if !bad.is_empty() {
            return Err(CliError::validation("invalid tensor block", bad));
        }
        Ok(Some(TensorPresentation::new(base.clone(), table, unit)?))
    }

    pub fn from_presentation(p: &Presentation, tensor: Option<&TensorPresentation>) -> Self {
        let names = p.names();
        let lit = |v: &ObjectVec| -> ObjectLiteral {
            v.multiplicities()
                .iter()
                .enumerate()
                .filter(|(_, &m)| m > 0)
                .map(|(i, &m)| (names[i].clone(), m))
                .collect()
        };
        let tensor = tensor.map(|t| {
            let mut table = BTreeMap::new();
            for i in 0..p.rank() {
                for j in 0..p.rank() {
                    let (a, b) = (&names[i], &names[j]);
                    if a <= b && !t.entry(i, j).is_zero() {
                        table.insert(format!("{a}|{b}"), lit(t.entry(i, j)));
                    }
                }
            }
            TensorBlock {
                unit: lit(t.unit()),
                table,
            }
        });
        PresentationFile {
            n: p.n(),
            indecomposables: names.to_vec(),
            suspension: (0..p.rank())
                .map(|i| (names[i].clone(), names[p.suspension().apply_index(i, 1)].clone()))
                .collect(),
            angles: p.angles().iter().map(|a| a.vertices().iter().map(lit).collect()).collect(),
            tensor,
        }
    }
}

pub fn hex_digest(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

/// Builds embedding data from two presentation files and a `{c: t}` map.
pub fn embedding(t: &PresentationFile, c: &PresentationFile, map: &BTreeMap<String, String>) -> Result<EmbeddingData, CliError> {
    let tp = t.presentation()?;
    let cp = c.presentation()?;
    let mut bad = Vec::new();
    let mut iota = vec![usize::MAX; cp.rank()];
    for (x, y) in map {
        match (c.index_of(x), t.index_of(y)) {
            (Some(i), Some(j)) => iota[i] = j,
            (None, _) => bad.push(Violation::new("unknown-name", format!("map key {x} is not in C"))),
            (_, None) => bad.push(Violation::new("unknown-name", format!("map value {y} is not in T"))),
        }
    }
    for (i, name) in c.indecomposables.iter().enumerate() {
        if iota[i] == usize::MAX {
            bad.push(Violation::new("map-total", format!("{name} is not mapped")));
        }
    }
    if !bad.is_empty() {
        return Err(CliError::validation("invalid map", bad));
    }
    Ok(EmbeddingData { t: tp, c: cp, iota })
}

#[cfg(test)]
mod tests {
    use super::*;

    const G1: &str = r#"{"n": 3, "indecomposables": ["a", "b", "c"],
        "suspension": {"a": "a", "b": "b", "c": "c"},
        "angles": [[{"a": 1}, {"b": 1}, {"c": 1}]]}"#;

    #[test]
    fn round_trip() {
        let f: PresentationFile = serde_json::from_str(G1).unwrap();
        let p = f.presentation().unwrap();
        let back = PresentationFile::from_presentation(&p, None);
        assert_eq!(back, f);
        let again: PresentationFile = serde_json::from_str(&back.canonical_json()).unwrap();
        assert_eq!(again, f);
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let text = G1.replace("\"n\": 3", "\"n\": 3, \"m\": 1");
        assert!(serde_json::from_str::<PresentationFile>(&text).is_err());
    }

    #[test]
    fn violations_name_the_problem() {
        let text = G1.replace("{\"c\": 1}]", "{\"d\": 1}]");
        let f: PresentationFile = serde_json::from_str(&text).unwrap();
        let v = f.presentation_violations();
        assert_eq!(v[0].rule, "unknown-name");
        let text = G1.replace("\"n\": 3", "\"n\": 2");
        let f: PresentationFile = serde_json::from_str(&text).unwrap();
        assert!(f.presentation_violations().iter().any(|v| v.rule == "n-bound"));
    }

    #[test]
    fn table_keys_are_ordered() {
        let text = G1.replace("]]}", "]], \"tensor\": {\"unit\": {\"a\": 1}, \"table\": {\"b|a\": {}}}}");
        let f: PresentationFile = serde_json::from_str(&text).unwrap();
        let p = f.presentation().unwrap();
        let Err(CliError::Validation { violations, .. }) = f.tensor(&p) else { panic!() };
        assert_eq!(violations[0].rule, "table-key");
    }

    #[test]
    fn digest_ignores_whitespace() {
        let a: PresentationFile = serde_json::from_str(G1).unwrap();
        let b: PresentationFile = serde_json::from_str(&G1.replace(' ', "")).unwrap();
        assert_eq!(a.digest(), b.digest());
        assert_eq!(a.digest().len(), 64);
    }
}
