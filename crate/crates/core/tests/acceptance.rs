//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
//! gating criterion fails. Runs without the libtest harness so the lines are
//! always printed.

use bcd_yangian::brauer::brauer_checks;
use bcd_yangian::center::{center_checks, CenterTrunc};
use bcd_yangian::classical::checks::{classical_checks, jacobi_witness};
use bcd_yangian::classical::LieBasis;
use bcd_yangian::engine::checks::oracle_witness;
use bcd_yangian::report::{run_suite, CheckRecord, LevelSel, RunConfig, Status, Suite};
use bcd_yangian::tensor::checks::{fseries_checks, rbar_checks, rmatrix_checks};
use bcd_yangian::{AlgebraContext, Kind};
use rayon::prelude::*;
use std::time::Instant;

struct Outcome {
    pass: bool,
    detail: String,
    notes: Vec<String>,
}

type Criterion = (u32, &'static str, fn() -> Outcome);

fn ctx(kind: Kind, n: usize) -> AlgebraContext {
    AlgebraContext::new(kind, n).expect("valid algebra")
}

fn o(n: usize) -> AlgebraContext {
    ctx(Kind::Orthogonal, n)
}

fn sp(n: usize) -> AlgebraContext {
    ctx(Kind::Symplectic, n)
}

/// Passes when every record passes; the first failure is quoted.
fn all_pass(recs: &[CheckRecord]) -> Outcome {
    let bad: Vec<&CheckRecord> = recs.iter().filter(|r| !r.passed()).collect();
    let detail = match bad.first() {
        None if recs.is_empty() => "no checks ran".to_string(),
        None => format!("checks: {}", recs.len()),
        Some(r) => format!(
            "{} failing, first: {} [{}] {}",
            bad.len(),
            r.name,
            r.params.get("algebra").cloned().unwrap_or_default(),
            r.witness.as_ref().map(|w| format!("{} = {}", w.location, w.value)).or_else(|| r.message.clone()).unwrap_or_default()
        ),
    };
    Outcome { pass: bad.is_empty() && !recs.is_empty(), detail, notes: vec![] }
}

fn named(recs: Vec<CheckRecord>, pred: impl Fn(&str) -> bool) -> Vec<CheckRecord> {
    recs.into_iter().filter(|r| pred(&r.name)).collect()
}

fn center(c: &AlgebraContext, k: usize, d: u32) -> Vec<CheckRecord> {
    center_checks(c, &c.critical_level(), CenterTrunc { k, d, u: 2 })
}

fn rmatrix() -> Outcome {
    all_pass(&[o(3), o(4), o(5), sp(4)].iter().flat_map(rmatrix_checks).collect::<Vec<_>>())
}

fn fseries() -> Outcome {
    all_pass(&[o(3), o(4), o(5), sp(4)].iter().flat_map(|c| fseries_checks(c, 12)).collect::<Vec<_>>())
}

fn rbar() -> Outcome {
    let recs: Vec<CheckRecord> = [o(3), o(4), o(5), sp(4)].par_iter().flat_map_iter(|c| rbar_checks(c, 6, 6)).collect();
    all_pass(&recs)
}

fn brauer_grid(pred: fn(&str) -> bool) -> Outcome {
    let recs: Vec<CheckRecord> = [(o(3), 3), (o(4), 3), (sp(4), 2)].par_iter().flat_map_iter(|(c, m)| named(brauer_checks(c, *m), pred)).collect();
    all_pass(&recs)
}

fn fusion() -> Outcome {
    brauer_grid(|n| n != "trace reduction")
}

fn trace_reduction() -> Outcome {
    brauer_grid(|n| n == "trace reduction")
}

fn oracle() -> Outcome {
    let mut recs = Vec::new();
    for c in [o(3), sp(4)] {
        recs.push(
            CheckRecord::new("h^0 normal forms of words of at most 3 modes, degree <= 4", "PBW filtration")
                .param("algebra", c.label())
                .outcome(oracle_witness(&c, 3, 4)),
        );
        recs.push(CheckRecord::new("Jacobi identity", "Lie algebra").param("algebra", c.label()).outcome(Ok(jacobi_witness(&LieBasis::new(&c)))));
    }
    all_pass(&recs)
}

fn centrality() -> Outcome {
    let o3 = center(&o(3), 2, 3);
    let sp4 = center(&sp(4), 2, 3);
    let mut recs = named(o3.clone(), |n| n == "T+_1 central" || n == "T+_2 central");
    recs.extend(named(sp4.clone(), |n| n == "T+_1 central"));
    let mut out = all_pass(&recs);
    let controls: Vec<CheckRecord> = o3.into_iter().chain(sp4).filter(|r| r.name.starts_with("T+_") && r.name.contains("not central")).collect();
    let seen = controls.iter().filter(|r| r.passed()).count();
    out.notes.push(format!("negative control at level 0 (K = 3): {seen} of {} sweeps show a witness", controls.len()));
    out.pass &= seen == controls.len() && !controls.is_empty();
    out
}

fn classical_limit() -> Outcome {
    let gating: Vec<CheckRecord> = [o(3), sp(4)]
        .par_iter()
        .flat_map_iter(|c| {
            let crit = c.critical_level();
            let mut v = named(center(c, 3, 2), |n| n == "classical limit of Phi_20 is phi_22");
            v.extend(named(classical_checks(&c.clone().with_level(crit), 3, 1), |n| n.starts_with("phi_22 singular")));
            v
        })
        .collect();
    let mut out = all_pass(&gating);
    let o5 = o(5);
    let extended = named(center(&o5, 3, 2), |n| n == "classical limit of Phi_20 is phi_22");
    let ok = extended.iter().all(|r| r.passed()) && !extended.is_empty();
    out.notes.push(format!("o5 (non-gating): {}", if ok { "pass" } else { "fail" }));
    out
}

fn alternative_form() -> Outcome {
    all_pass(&named(center(&o(3), 3, 3), |n| n == "ascending = descending T+_2"))
}

fn divisibility() -> Outcome {
    all_pass(&named(center(&o(3), 3, 3), |n| n == "sum b_k T+_k divisible by h^2"))
}

fn braiding() -> Outcome {
    let recs = center(&o(3), 2, 2);
    let mut out = all_pass(&named(recs.clone(), |n| n == "braiding fixes T+_1 (x) T+_1"));
    let control = named(recs, |n| n.starts_with("braiding with shifted crossing"));
    out.notes.push(format!("shifted-crossing control (K = 5): {}", if control.iter().all(|r| r.passed()) { "witness found" } else { "no witness" }));
    out.pass &= !control.is_empty() && control.iter().all(|r| r.passed());
    out
}

fn completed() -> Outcome {
    let recs = center(&o(3), 2, 2);
    let mut out = all_pass(&named(recs.clone(), |n| n == "T_1 central in completed double Yangian (unitary)"));
    for r in &recs {
        if r.name == "T_1 central in completed double Yangian (extended)" {
            let w = r.witness.as_ref().map(|w| format!("{} = {}", w.location, w.value)).unwrap_or_else(|| "no witness".into());
            out.notes.push(format!("extended presentation (not gating): {w}"));
        }
        if r.name.starts_with("T_1 not central") {
            out.notes.push(format!("level 0 control (K = 3): {}", if r.passed() { "witness found" } else { "no witness" }));
            out.pass &= r.passed();
        }
    }
    out
}

fn determinism() -> Outcome {
    let mut recs = Vec::new();
    for (kind, n, suite) in [(Kind::Orthogonal, 3, Suite::Center), (Kind::Orthogonal, 3, Suite::All), (Kind::Symplectic, 4, Suite::All)] {
        let mut cfg = RunConfig::new(kind, n, suite);
        cfg.level = LevelSel::Crit;
        let runs: Vec<String> = (0..3).map(|_| run_suite(&cfg).map(|(r, _)| r.to_json()).unwrap_or_default()).collect();
        let same = !runs[0].is_empty() && runs.iter().all(|r| r == &runs[0]);
        let mut rec = CheckRecord::new("identical reports", "determinism").param("algebra", format!("{}{n} {suite:?}", kind.tag()));
        rec.status = if same { Status::Pass } else { Status::Fail };
        recs.push(rec);
    }
    let mut cfg = RunConfig::new(Kind::Orthogonal, 3, Suite::Center);
    cfg.hord = 2;
    cfg.deg = 3;
    cfg.udeg = 2;
    let code = run_suite(&cfg).map(|(r, _)| r.exit_code()).unwrap_or(2);
    let mut out = all_pass(&recs);
    out.notes.push(format!("o3 center suite at K = 2, D = 3, U = 2 exits {code}"));
    out.pass &= code == 0;
    out
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        (1, "R-matrix identities", rmatrix),
        (2, "normalization series", fseries),
        (3, "crossing symmetry and unitarity of Rbar mod h^6", rbar),
        (4, "fusion procedure gives the symmetrizer", fusion),
        (5, "trace reduction of symmetrizers", trace_reduction),
        (6, "engine at h^0 equals the classical oracle", oracle),
        (7, "centrality of T+_m at the critical level", centrality),
        (8, "classical limit of Phi_20 and singularity of phi_22", classical_limit),
        (9, "ascending and descending T+_2 agree", alternative_form),
        (10, "divisibility of sum b_k T+_k", divisibility),
        (11, "braiding fixed point", braiding),
        (12, "completed double Yangian spot check", completed),
        (13, "deterministic reports", determinism),
    ];
    let results: Vec<(Outcome, f64)> = criteria
        .par_iter()
        .map(|(_, _, f)| {
            let t = Instant::now();
            let out = f();
            (out, t.elapsed().as_secs_f64())
        })
        .collect();
    let mut failed = 0;
    for ((n, name, _), (out, secs)) in criteria.iter().zip(&results) {
        println!("criterion {n:>2}: {} {name} ({}, {secs:.1} s)", if out.pass { "PASS" } else { "FAIL" }, out.detail);
        for note in &out.notes {
            println!("              {note}");
        }
        failed += usize::from(!out.pass);
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
