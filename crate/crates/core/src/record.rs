//! Line-delimited `key=value` records.
//!
//! One record per line, fields separated by single spaces. Values escape
//! `%`, space, tab, CR and LF as `%XX`; keys are plain identifiers.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecordError {
    #[error("field {0:?} has no `=`")]
    MissingEquals(String),
    #[error("bad escape in {0:?}")]
    BadEscape(String),
    #[error("empty key in {0:?}")]
    EmptyKey(String),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Record {
    fields: Vec<(String, String)>,
}

impl Record {
    pub fn new() -> Self {
        Record::default()
    }

    pub fn push(&mut self, key: &str, value: impl fmt::Display) -> &mut Self {
        debug_assert!(!key.is_empty() && !key.contains(['=', ' ']));
        self.fields.push((key.to_string(), value.to_string()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn fields(&self) -> &[(String, String)] {
        &self.fields
    }
}

impl fmt::Display for Record {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.fields.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{k}={}", escape(v))?;
        }
        Ok(())
    }
}

pub fn escape(value: &str) -> String {
    let mut out = String::with_capacity(value.len());
    for c in value.chars() {
        match c {
            '%' => out.push_str("%25"),
            ' ' => out.push_str("%20"),
            '\t' => out.push_str("%09"),
            '\n' => out.push_str("%0A"),
            '\r' => out.push_str("%0D"),
            c => out.push(c),
        }
    }
    out
}

pub fn unescape(value: &str) -> Result<String, RecordError> {
    let bad = || RecordError::BadEscape(value.to_string());
    let bytes = value.as_bytes();
    let mut out = Vec::with_capacity(bytes.len());
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'%' {
            let hex = value.get(i + 1..i + 3).ok_or_else(bad)?;
            out.push(u8::from_str_radix(hex, 16).map_err(|_| bad())?);
            i += 3;
        } else {
            out.push(bytes[i]);
            i += 1;
        }
    }
    String::from_utf8(out).map_err(|_| bad())
}

pub fn parse_record(line: &str) -> Result<Record, RecordError> {
    let mut rec = Record::new();
    for field in line.split(' ').filter(|f| !f.is_empty()) {
        let (k, v) = field.split_once('=').ok_or_else(|| RecordError::MissingEquals(field.to_string()))?;
        if k.is_empty() {
            return Err(RecordError::EmptyKey(field.to_string()));
        }
        rec.fields.push((k.to_string(), unescape(v)?));
    }
    Ok(rec)
}

pub fn parse_records(text: &str) -> Result<Vec<Record>, RecordError> {
    text.lines().filter(|l| !l.trim().is_empty()).map(parse_record).collect()
}
