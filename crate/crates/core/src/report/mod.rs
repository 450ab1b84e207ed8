//! Check records, JSON reports and the suite runner behind the CLI.

pub mod config;
pub mod emit;
pub mod run;

use crate::error::Error;
use crate::scalar::rat::{to_text, Rat};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: &str = "1.0";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
    /// Outcome recorded without a verdict.
    Info,
}

/// The first nonzero coefficient of a discrepancy.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub location: String,
    pub value: String,
}

impl Witness {
    pub fn new(location: impl Into<String>, value: impl Into<String>) -> Self {
        Witness { location: location.into(), value: value.into() }
    }

    pub fn rat(location: impl Into<String>, value: &Rat) -> Self {
        Witness::new(location, to_text(value))
    }
}

/// What a check expects of its discrepancy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expect {
    /// Passes when the discrepancy vanishes.
    Zero,
    /// Negative control: passes when a nonzero witness is found.
    Nonzero,
    /// Outcome is reported only.
    Probe,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub anchor: String,
    pub params: BTreeMap<String, String>,
    pub expect: Expect,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub message: Option<String>,
}

impl CheckRecord {
    pub fn new(name: impl Into<String>, anchor: impl Into<String>) -> Self {
        CheckRecord {
            name: name.into(),
            anchor: anchor.into(),
            params: BTreeMap::new(),
            expect: Expect::Zero,
            status: Status::Error,
            witness: None,
            message: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn expect(mut self, e: Expect) -> Self {
        self.expect = e;
        self
    }

    /// Record the discrepancy search: `Ok(None)` means no discrepancy.
    pub fn outcome(mut self, r: Result<Option<Witness>, Error>) -> Self {
        match r {
            Ok(w) => {
                let found = w.is_some();
                self.witness = w;
                self.status = match (self.expect, found) {
                    (Expect::Zero, false) | (Expect::Nonzero, true) => Status::Pass,
                    (Expect::Zero, true) | (Expect::Nonzero, false) => Status::Fail,
                    (Expect::Probe, _) => Status::Info,
                };
                if self.expect == Expect::Nonzero && !found {
                    self.message = Some("no nonzero witness within the truncation".into());
                }
            }
            Err(e) => {
                self.status = Status::Error;
                self.message = Some(e.to_string());
            }
        }
        self
    }

    pub fn passed(&self) -> bool {
        matches!(self.status, Status::Pass | Status::Info)
    }
}

/// Serde adapter for `Vec<Rat>` as a list of `"p/q"` strings.
pub mod rat_vec {
    use crate::scalar::rat::{from_text, to_text, Rat};
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rat], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(to_text))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rat>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter().map(|t| from_text(t).ok_or_else(|| D::Error::custom(format!("bad rational {t:?}")))).collect()
    }
}

pub use config::{LevelSel, RunConfig, Suite};
pub use emit::{emit_series, Emitted, Target};
pub use run::{run_suite, GroupTime, Report, Summary};
