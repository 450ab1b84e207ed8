//! Run configuration, read from flags or a JSON file and echoed into reports.

use crate::context::{AlgebraContext, Kind};
use crate::error::{Error, Result};
use crate::scalar::rat::{from_text, to_text, Rat};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::path::Path;

/// Which group of checks to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Rmatrix,
    Fseries,
    Brauer,
    Engine,
    Center,
    /// Expected-failure sweeps at a non-critical level.
    CenterNegative,
    Classical,
    /// Every suite except `center-negative`.
    All,
}

impl Suite {
    pub fn parse(s: &str) -> Result<Suite> {
        serde_json::from_value(serde_json::Value::String(s.to_string())).map_err(|_| Error::Config(format!("unknown suite {s:?}")))
    }
}

/// The level `c`: critical, or an explicit rational.
#[derive(Clone, Debug, PartialEq)]
pub enum LevelSel {
    Crit,
    Value(Rat),
}

impl LevelSel {
    pub fn parse(s: &str) -> Result<LevelSel> {
        if s == "crit" {
            return Ok(LevelSel::Crit);
        }
        from_text(s).map(LevelSel::Value).ok_or_else(|| Error::Config(format!("level must be crit or p/q, got {s:?}")))
    }

    pub fn text(&self) -> String {
        match self {
            LevelSel::Crit => "crit".into(),
            LevelSel::Value(r) => to_text(r),
        }
    }

    pub fn resolve(&self, ctx: &AlgebraContext) -> Rat {
        match self {
            LevelSel::Crit => ctx.critical_level(),
            LevelSel::Value(r) => r.clone(),
        }
    }
}

impl Serialize for LevelSel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.text())
    }
}

impl<'de> Deserialize<'de> for LevelSel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        LevelSel::parse(&s).map_err(serde::de::Error::custom)
    }
}

fn default_k() -> usize {
    2
}
fn default_d() -> u32 {
    3
}
fn default_u() -> u32 {
    2
}
fn default_m() -> usize {
    8
}
fn default_level() -> LevelSel {
    LevelSel::Crit
}
fn default_suite() -> Suite {
    Suite::All
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub algebra: Kind,
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(default = "default_level")]
    pub level: LevelSel,
    /// `h`-adic order `K`.
    #[serde(default = "default_k")]
    pub hord: usize,
    /// Degree cap `D` of module words.
    #[serde(default = "default_d")]
    pub deg: u32,
    /// Highest power `U` of the spectral parameter.
    #[serde(default = "default_u")]
    pub udeg: u32,
    /// Order `M` of the normalization series.
    #[serde(default = "default_m")]
    pub forder: usize,
    #[serde(default = "default_suite")]
    pub suite: Suite,
    /// Fusion order of emitted symmetrizers and series.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out: Option<String>,
    #[serde(default)]
    pub seed: u64,
}

impl RunConfig {
    pub fn new(algebra: Kind, n: usize, suite: Suite) -> Self {
        RunConfig {
            algebra,
            n,
            level: default_level(),
            hord: default_k(),
            deg: default_d(),
            udeg: default_u(),
            forder: default_m(),
            suite,
            m: None,
            out: None,
            seed: 0,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(format!("bad config: {e}")))
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// Check the configuration and build the algebra context with the level set.
    pub fn validate(&self) -> Result<AlgebraContext> {
        let ctx = AlgebraContext::new(self.algebra, self.n)?;
        let bounded = |name: &str, v: usize, lo: usize, hi: usize| {
            if v < lo || v > hi {
                Err(Error::Config(format!("{name} must lie in {lo}..={hi}, got {v}")))
            } else {
                Ok(())
            }
        };
        bounded("N", self.n, 2, 12)?;
        bounded("hord", self.hord, 1, 8)?;
        bounded("deg", self.deg as usize, 1, 8)?;
        bounded("udeg", self.udeg as usize, 0, 8)?;
        bounded("forder", self.forder, 1, 64)?;
        if let Some(m) = self.m {
            bounded("m", m, 0, crate::brauer::max_m(&ctx))?;
        }
        let level = self.level.resolve(&ctx);
        Ok(ctx.with_level(level))
    }
}
