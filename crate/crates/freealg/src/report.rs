//! Structured pass/fail reports for the verification commands.
//!
//! A report collects named checks, each pairing a computed value with the
//! value it must equal and a one-line statement of the identity being
//! tested. The report passes exactly when every computed value matches.

use std::fmt;
use std::time::Instant;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Serialize for Status {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// String map that keeps insertion order, for stable text and JSON output.
#[derive(Clone, Debug, Default)]
struct Fields(Vec<(String, String)>);

impl Fields {
    fn insert(&mut self, key: &str, value: String) {
        match self.0.iter_mut().find(|(k, _)| k == key) {
            Some(slot) => slot.1 = value,
            None => self.0.push((key.to_owned(), value)),
        }
    }

    fn get(&self, key: &str) -> Option<&str> {
        self.0
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.0.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }
}

impl Serialize for Fields {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (key, value) in &self.0 {
            map.serialize_entry(key, value)?;
        }
        map.end()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    claim: String,
    params: Fields,
    computed: Fields,
    expected: Fields,
    citation: Fields,
    status: Status,
    millis: u128,
}

impl VerificationReport {
    pub fn claim(&self) -> &str {
        &self.claim
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn millis(&self) -> u128 {
        self.millis
    }

    pub fn param(&self, key: &str) -> Option<&str> {
        self.params.get(key)
    }

    pub fn computed(&self, key: &str) -> Option<&str> {
        self.computed.get(key)
    }

    pub fn expected(&self, key: &str) -> Option<&str> {
        self.expected.get(key)
    }

    pub fn citation(&self, key: &str) -> Option<&str> {
        self.citation.get(key)
    }

    pub fn check_keys(&self) -> impl Iterator<Item = &str> {
        self.computed.0.iter().map(|(k, _)| k.as_str())
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.claim)?;
        if !self.params.0.is_empty() {
            let joined: Vec<String> = self
                .params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            write!(f, " ({})", joined.join(", "))?;
        }
        writeln!(f)?;
        for (key, value) in self.computed.iter() {
            let expected = self.expected.get(key).unwrap_or("");
            if value == expected {
                writeln!(f, "  ok    {key} = {value}")?;
            } else {
                writeln!(f, "  FAIL  {key}: computed {value}, expected {expected}")?;
            }
        }
        let verdict = match self.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
        };
        write!(f, "  {verdict} ({} ms)", self.millis)
    }
}

pub struct ReportBuilder {
    claim: String,
    params: Fields,
    computed: Fields,
    expected: Fields,
    citation: Fields,
    started: Instant,
}

impl ReportBuilder {
    pub fn new(claim: &str) -> Self {
        ReportBuilder {
            claim: claim.to_owned(),
            params: Fields::default(),
            computed: Fields::default(),
            expected: Fields::default(),
            citation: Fields::default(),
            started: Instant::now(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl fmt::Display) -> &mut Self {
        self.params.insert(key, value.to_string());
        self
    }

    /// Records one named check; `citation` states the identity in words.
    pub fn check(
        &mut self,
        key: &str,
        citation: &str,
        computed: impl fmt::Display,
        expected: impl fmt::Display,
    ) -> &mut Self {
        self.computed.insert(key, computed.to_string());
        self.expected.insert(key, expected.to_string());
        self.citation.insert(key, citation.to_owned());
        self
    }

    pub fn check_true(&mut self, key: &str, citation: &str, computed: bool) -> &mut Self {
        self.check(key, citation, computed, true)
    }

    pub fn finish(self) -> VerificationReport {
        let status = if self
            .computed
            .iter()
            .all(|(key, value)| self.expected.get(key) == Some(value))
        {
            Status::Pass
        } else {
            Status::Fail
        };
        VerificationReport {
            claim: self.claim,
            params: self.params,
            computed: self.computed,
            expected: self.expected,
            citation: self.citation,
            status,
            millis: self.started.elapsed().as_millis(),
        }
    }
}
