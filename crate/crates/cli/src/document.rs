//! System documents: a name, the six structural constants and an optional
//! description, stored as a JSON object.
//!
//! ```json
//! {"name": "complex", "constants": {"a11": 1, "a12": 0, "a22": -1, "b11": 0, "b12": 1, "b22": 0}}
//! ```

use std::fmt;

use hns_core::StructuralConstants;
use serde::de::{MapAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize};
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
#[error("{key}: {reason}")]
pub struct ParseError {
    pub key: String,
    pub reason: String,
}

impl ParseError {
    fn new(key: impl Into<String>, reason: impl Into<String>) -> Self {
        Self { key: key.into(), reason: reason.into() }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SystemDocument {
    pub name: String,
    pub constants: StructuralConstants,
    pub description: Option<String>,
}

impl SystemDocument {
    pub fn new(name: impl Into<String>, constants: StructuralConstants) -> Self {
        Self { name: name.into(), constants, description: None }
    }

    pub fn with_description(mut self, description: impl Into<String>) -> Self {
        self.description = Some(description.into());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&DocumentOut::from(self)).expect("document serializes")
    }
}

/// Every `key: value` pair of a JSON object, duplicates included.
struct Entries(Vec<(String, Value)>);

impl<'de> Deserialize<'de> for Entries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct EntriesVisitor;

        impl<'de> Visitor<'de> for EntriesVisitor {
            type Value = Entries;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an object of structural constants")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<Entries, A::Error> {
                let mut entries = Vec::new();
                while let Some(entry) = map.next_entry::<String, Value>()? {
                    entries.push(entry);
                }
                Ok(Entries(entries))
            }
        }

        deserializer.deserialize_map(EntriesVisitor)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    name: Option<Value>,
    constants: Option<Entries>,
    description: Option<String>,
}

pub fn parse_system(text: &[u8]) -> Result<SystemDocument, ParseError> {
    let raw: RawDocument = serde_json::from_slice(text).map_err(|e| ParseError::new("document", e.to_string()))?;

    let name = match raw.name {
        None => return Err(ParseError::new("name", "missing")),
        Some(Value::String(s)) if s.trim().is_empty() => return Err(ParseError::new("name", "empty")),
        Some(Value::String(s)) => s,
        Some(_) => return Err(ParseError::new("name", "not a string")),
    };
    let entries = raw.constants.ok_or_else(|| ParseError::new("constants", "missing"))?.0;

    let mut values: [Option<f64>; 6] = [None; 6];
    for (key, value) in entries {
        let slot = StructuralConstants::NAMES
            .iter()
            .position(|n| *n == key)
            .ok_or_else(|| ParseError::new(&key, "unknown key"))?;
        if values[slot].is_some() {
            return Err(ParseError::new(key, "duplicate"));
        }
        let number = value.as_f64().filter(|v| v.is_finite()).ok_or_else(|| ParseError::new(&key, "not a number"))?;
        values[slot] = Some(number);
    }
    let mut constants = [0.0; 6];
    for (i, value) in values.iter().enumerate() {
        constants[i] = value.ok_or_else(|| ParseError::new(StructuralConstants::NAMES[i], "missing"))?;
    }
    let constants =
        StructuralConstants::from_array(constants).map_err(|e| ParseError::new("constants", e.to_string()))?;

    Ok(SystemDocument { name, constants, description: raw.description })
}

#[derive(Serialize)]
struct ConstantsOut {
    a11: f64,
    a12: f64,
    a22: f64,
    b11: f64,
    b12: f64,
    b22: f64,
}

#[derive(Serialize)]
struct DocumentOut<'a> {
    name: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    description: Option<&'a str>,
    constants: ConstantsOut,
}

impl<'a> From<&'a SystemDocument> for DocumentOut<'a> {
    fn from(doc: &'a SystemDocument) -> Self {
        let c = doc.constants;
        DocumentOut {
            name: &doc.name,
            description: doc.description.as_deref(),
            constants: ConstantsOut { a11: c.a11, a12: c.a12, a22: c.a22, b11: c.b11, b12: c.b12, b22: c.b22 },
        }
    }
}
