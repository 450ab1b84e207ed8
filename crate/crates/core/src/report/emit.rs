//! Exact series written as versioned JSON: the normalization series,
//! symmetrizers, `𝕋ₘ⁺(u)`, `Φₘ(u)` and the Segal-Sugawara vectors.

use super::config::RunConfig;
use super::SCHEMA_VERSION;
use crate::brauer::symmetrizer;
use crate::center::{build_phi, build_t_plus, CentralSeries, ShiftOrder};
use crate::classical::{ClassicalElem, ClassicalModule, LieBasis};
use crate::engine::VacuumModule;
use crate::error::{Error, Result};
use crate::scalar::rat::to_text;
use crate::tensor::FSeries;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Target {
    #[serde(rename = "fseries")]
    Fseries,
    #[serde(rename = "symmetrizer")]
    Symmetrizer,
    #[serde(rename = "Tplus")]
    Tplus,
    #[serde(rename = "Phi")]
    Phi,
    #[serde(rename = "segal-sugawara")]
    SegalSugawara,
}

impl Target {
    pub fn parse(s: &str) -> Result<Target> {
        serde_json::from_value(serde_json::Value::String(s.to_string())).map_err(|_| {
            Error::Config(format!("unknown emit target {s:?}, expected fseries, symmetrizer, Tplus, Phi or segal-sugawara"))
        })
    }
}

/// One entry of an operator on `(C^N)^{⊗m}`, indices from 1.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixEntry {
    pub row: Vec<u8>,
    pub col: Vec<u8>,
    pub value: String,
}

/// A word `t^{(-s_1)}_{i_1 j_1} ... 1` as `[s, i, j]` triples with its
/// coefficients of `h^0, h^1, ...`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuantumTerm {
    pub word: Vec<[u32; 3]>,
    pub h: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PowerBlock {
    pub u: u32,
    pub terms: Vec<QuantumTerm>,
}

/// `f_a(r)` with `r < 0`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassicalMode {
    pub gen: String,
    pub mode: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassicalTerm {
    pub word: Vec<ClassicalMode>,
    pub coeff: String,
}

/// `φ_{m,k}` as a combination of PBW monomials.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Component {
    pub k: usize,
    pub terms: Vec<ClassicalTerm>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum EmitData {
    Series { coefficients: Vec<String> },
    Matrix { entries: Vec<MatrixEntry> },
    Family { powers: Vec<PowerBlock> },
    Classical { components: Vec<Component> },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Emitted {
    pub schema_version: String,
    pub target: Target,
    pub algebra: String,
    pub params: BTreeMap<String, String>,
    pub data: EmitData,
}

impl Emitted {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("emitted series serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(format!("bad series file: {e}")))
    }
}

fn family(series: &CentralSeries) -> EmitData {
    let powers = series
        .coeffs
        .iter()
        .enumerate()
        .map(|(u, x)| PowerBlock {
            u: u as u32,
            terms: x
                .iter()
                .map(|(w, c)| QuantumTerm {
                    word: w.iter().map(|g| [g.s, g.i as u32 + 1, g.j as u32 + 1]).collect(),
                    h: c.coeffs().iter().map(to_text).collect(),
                })
                .collect(),
        })
        .collect();
    EmitData::Family { powers }
}

fn classical_terms(lie: &LieBasis, e: &ClassicalElem) -> Vec<ClassicalTerm> {
    e.iter()
        .map(|(w, c)| ClassicalTerm {
            word: w.iter().map(|x| ClassicalMode { gen: lie.name(x.a), mode: -(x.r as i64) }).collect(),
            coeff: to_text(c),
        })
        .collect()
}

/// Compute `target` under `cfg`. The fusion order comes from `cfg.m`, with
/// defaults `2` (symmetrizer, `Φ`, Segal-Sugawara) and `1` (`𝕋⁺`).
pub fn emit_series(cfg: &RunConfig, target: Target) -> Result<Emitted> {
    let ctx = cfg.validate()?;
    let mut params = BTreeMap::new();
    params.insert("N".to_string(), ctx.n.to_string());
    let data = match target {
        Target::Fseries => {
            let f = FSeries::compute(&ctx.kappa(), cfg.forder);
            params.insert("M".into(), cfg.forder.to_string());
            params.insert("kappa".into(), to_text(&ctx.kappa()));
            EmitData::Series { coefficients: f.coeffs.iter().map(to_text).collect() }
        }
        Target::Symmetrizer => {
            let m = cfg.m.unwrap_or(2);
            params.insert("m".into(), m.to_string());
            let s = symmetrizer(&ctx, m)?;
            let entries = s
                .entries()
                .iter()
                .map(|((r, c), v)| MatrixEntry {
                    row: r.iter().map(|x| x + 1).collect(),
                    col: c.iter().map(|x| x + 1).collect(),
                    value: to_text(v),
                })
                .collect();
            EmitData::Matrix { entries }
        }
        Target::Tplus | Target::Phi => {
            let m = cfg.m.unwrap_or(if target == Target::Tplus { 1 } else { 2 });
            for (k, v) in [("m", m.to_string()), ("level", to_text(&ctx.level)), ("K", cfg.hord.to_string())] {
                params.insert(k.into(), v);
            }
            params.insert("D".into(), cfg.deg.to_string());
            params.insert("U".into(), cfg.udeg.to_string());
            let module = VacuumModule::new(&ctx, ctx.level.clone(), cfg.hord, cfg.deg)?;
            let series = if target == Target::Tplus {
                build_t_plus(&module, m, ShiftOrder::Fusion, cfg.udeg)?
            } else {
                build_phi(&module, m, cfg.udeg)?
            };
            params.insert("offsets".into(), format!("{:?}", series.offsets));
            family(&series)
        }
        Target::SegalSugawara => {
            let m = cfg.m.unwrap_or(2);
            params.insert("m".into(), m.to_string());
            let cm = ClassicalModule::new(LieBasis::new(&ctx), ctx.critical_level());
            let phi = cm.segal_sugawara(m)?;
            let components = phi.iter().enumerate().map(|(k, e)| Component { k, terms: classical_terms(&cm.lie, e) }).collect();
            EmitData::Classical { components }
        }
    };
    Ok(Emitted { schema_version: SCHEMA_VERSION.into(), target, algebra: ctx.label(), params, data })
}
