//! Catalog files: one system per line, `name <TAB> σ(A) [<TAB> τ]`, where τ
//! is written `L=..,R=..,l=..,r=..,S=..,s=..`. Blank lines and lines
//! starting with `#` are ignored.

use foldbound::words::PRODUCTION_KEYS;
use foldbound::{BoundarySystem, DirLetter, FoldingSystem};

use crate::error::CliError;

pub const BUNDLED_CATALOG: &str = include_str!("../data/catalog.tsv");

#[derive(Debug, Clone)]
pub struct SystemRecord {
    pub name: String,
    pub sigma: FoldingSystem,
    pub expected: Option<BoundarySystem>,
}

/// Parses `L=..,R=..,l=..,r=..,S=..,s=..`; keys may come in any order but
/// each must appear exactly once.
pub fn parse_tau(text: &str) -> Result<BoundarySystem, String> {
    let mut words: [Option<&str>; 6] = [None; 6];
    for entry in text.split(',') {
        let (key, word) = entry
            .trim()
            .split_once('=')
            .ok_or_else(|| format!("expected KEY=WORD, found {entry:?}"))?;
        let slot = PRODUCTION_KEYS
            .iter()
            .position(|&(d, p)| DirLetter::finished(d, p).to_char().to_string() == key)
            .ok_or_else(|| format!("unknown key {key:?}"))?;
        if words[slot].replace(word).is_some() {
            return Err(format!("key {key} given twice"));
        }
    }
    let missing: Vec<char> = PRODUCTION_KEYS
        .iter()
        .zip(&words)
        .filter(|(_, w)| w.is_none())
        .map(|(&(d, p), _)| DirLetter::finished(d, p).to_char())
        .collect();
    if !missing.is_empty() {
        return Err(format!("missing keys {missing:?}"));
    }
    BoundarySystem::parse(words.map(|w| w.unwrap())).map_err(|e| e.to_string())
}

pub fn parse_catalog(text: &str) -> Result<Vec<SystemRecord>, CliError> {
    let mut records = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let err = |message: String| CliError::Catalog {
            line: line_no,
            message,
        };
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').map(str::trim).collect();
        if !(2..=3).contains(&fields.len()) {
            return Err(err(format!(
                "expected 2 or 3 tab-separated fields, found {}",
                fields.len()
            )));
        }
        let sigma = FoldingSystem::parse(fields[1]).map_err(|e| err(e.to_string()))?;
        let expected = match fields.get(2) {
            Some(t) => Some(parse_tau(t).map_err(err)?),
            None => None,
        };
        records.push(SystemRecord {
            name: fields[0].to_string(),
            sigma,
            expected,
        });
    }
    Ok(records)
}
