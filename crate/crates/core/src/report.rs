//! Stable structured text records: ordered `key = value` blocks used for
//! deviation reports, generator sidecars and pipeline configs. Field order
//! is fixed by the writer, so identical content means identical bytes.

use crate::{Error, Result};
use std::fmt::Write as _;

/// An ordered list of key/value pairs with deterministic text form.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Record {
    fields: Vec<(String, String)>,
}

impl Record {
    pub fn new() -> Self {
        Record { fields: Vec::new() }
    }

    pub fn push(&mut self, key: &str, value: impl std::fmt::Display) -> &mut Self {
        self.fields.push((key.to_string(), value.to_string()));
        self
    }

    /// f64 via shortest round-trip formatting; parses back to the same bits.
    pub fn push_f64(&mut self, key: &str, value: f64) -> &mut Self {
        self.push(key, value)
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn require(&self, key: &str) -> Result<&str> {
        self.get(key)
            .ok_or_else(|| Error::Parse(format!("missing key '{key}'")))
    }

    pub fn require_f64(&self, key: &str) -> Result<f64> {
        self.require(key)?
            .parse()
            .map_err(|e| Error::Parse(format!("{key}: {e}")))
    }

    pub fn require_u64(&self, key: &str) -> Result<u64> {
        self.require(key)?
            .parse()
            .map_err(|e| Error::Parse(format!("{key}: {e}")))
    }

    pub fn require_usize(&self, key: &str) -> Result<usize> {
        self.require(key)?
            .parse()
            .map_err(|e| Error::Parse(format!("{key}: {e}")))
    }

    pub fn fields(&self) -> &[(String, String)] {
        &self.fields
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.fields {
            let _ = writeln!(out, "{k} = {v}");
        }
        out
    }

    pub fn parse(text: &str) -> Result<Record> {
        Ok(Record {
            fields: parse_flat_kv(text)?,
        })
    }
}

/// Parses `key = value` lines; '#' starts a comment, blank lines ignored.
pub fn parse_flat_kv(text: &str) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| {
            Error::Parse(format!("line {}: expected 'key = value'", lineno + 1))
        })?;
        out.push((k.trim().to_string(), v.trim().to_string()));
    }
    Ok(out)
}
