//! The suite runner: check groups run in parallel, the report is assembled
//! in a fixed order.

use super::config::{RunConfig, Suite};
use super::{CheckRecord, Status, SCHEMA_VERSION};
use crate::brauer::brauer_checks;
use crate::center::{center_checks, negative_checks, CenterTrunc};
use crate::classical::checks::classical_checks;
use crate::context::AlgebraContext;
use crate::engine::checks::engine_checks;
use crate::error::{Error, Result};
use crate::scalar::rat::Rat;
use crate::tensor::checks::{fseries_checks, pq_checks, rbar_checks, rmatrix_checks};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::time::{Duration, Instant};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
    pub info: usize,
}

/// A versioned, deterministic run report. Timings are kept out of it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: String,
    pub generator: String,
    pub config: RunConfig,
    pub summary: Summary,
    pub checks: Vec<CheckRecord>,
}

impl Report {
    /// `0` when every check passes, `2` if any check errored, `1` otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.summary.errors > 0 {
            2
        } else if self.summary.failed > 0 {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(format!("bad report: {e}")))
    }
}

/// Wall-clock time of one check group.
#[derive(Clone, Debug)]
pub struct GroupTime {
    pub group: &'static str,
    pub elapsed: Duration,
}

type Group = (&'static str, Box<dyn Fn() -> Vec<CheckRecord> + Send + Sync>);

fn groups(cfg: &RunConfig, ctx: &AlgebraContext, level: &Rat) -> Vec<Group> {
    let trunc = CenterTrunc { k: cfg.hord, d: cfg.deg, u: cfg.udeg };
    let (k, d, m, seed) = (cfg.hord, cfg.deg, cfg.forder, cfg.seed);
    let c = ctx.clone();
    let lv = level.clone();
    let mut out: Vec<Group> = Vec::new();
    let wants = |s: Suite| cfg.suite == s || (cfg.suite == Suite::All && s != Suite::CenterNegative);
    if wants(Suite::Rmatrix) {
        let (c1, c2, c3) = (c.clone(), c.clone(), c.clone());
        out.push(("pq", Box::new(move || pq_checks(&c1))));
        out.push(("rmatrix", Box::new(move || rmatrix_checks(&c2))));
        out.push(("rbar", Box::new(move || rbar_checks(&c3, k, m))));
    }
    if wants(Suite::Fseries) {
        let c1 = c.clone();
        out.push(("fseries", Box::new(move || fseries_checks(&c1, m))));
    }
    if wants(Suite::Brauer) {
        let c1 = c.clone();
        out.push(("brauer", Box::new(move || brauer_checks(&c1, 3))));
    }
    if wants(Suite::Classical) {
        let c1 = c.clone();
        out.push(("classical", Box::new(move || classical_checks(&c1, d, seed))));
    }
    if wants(Suite::Engine) {
        let (c1, l1) = (c.clone(), lv.clone());
        out.push(("engine", Box::new(move || engine_checks(&c1, &l1, k, d, seed))));
    }
    if wants(Suite::Center) {
        let (c1, l1) = (c.clone(), lv.clone());
        out.push(("center", Box::new(move || center_checks(&c1, &l1, trunc))));
    }
    if wants(Suite::CenterNegative) {
        out.push(("center-negative", Box::new(move || negative_checks(&c, &lv, trunc))));
    }
    out
}

/// Run the selected suite. Configuration errors are returned as `Err`;
/// failures inside checks are recorded in the report.
pub fn run_suite(cfg: &RunConfig) -> Result<(Report, Vec<GroupTime>)> {
    let ctx = cfg.validate()?;
    let level = ctx.level.clone();
    if cfg.suite == Suite::CenterNegative && level == ctx.critical_level() {
        return Err(Error::Config("center-negative needs a level other than the critical one".into()));
    }
    let results: Vec<(Vec<CheckRecord>, GroupTime)> = groups(cfg, &ctx, &level)
        .into_par_iter()
        .map(|(group, run)| {
            let t = Instant::now();
            let recs = run();
            (recs, GroupTime { group, elapsed: t.elapsed() })
        })
        .collect();
    let mut checks = Vec::new();
    let mut times = Vec::new();
    for (r, t) in results {
        checks.extend(r);
        times.push(t);
    }
    let mut summary = Summary { total: checks.len(), ..Summary::default() };
    for c in &checks {
        match c.status {
            Status::Pass => summary.passed += 1,
            Status::Fail => summary.failed += 1,
            Status::Error => summary.errors += 1,
            Status::Info => summary.info += 1,
        }
    }
    let report = Report {
        schema_version: SCHEMA_VERSION.into(),
        generator: format!("bcd-yangian {}", env!("CARGO_PKG_VERSION")),
        config: cfg.clone(),
        summary,
        checks,
    };
    Ok((report, times))
}
