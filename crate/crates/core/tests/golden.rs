//! Emitted series are compared byte for byte with the stored golden files.
//! Set `BCDY_BLESS=1` to rewrite them after an intended change.

use bcd_yangian::report::{emit_series, Emitted, RunConfig, Suite, Target};
use bcd_yangian::Kind;
use std::path::PathBuf;

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("golden").join(name)
}

fn config(kind: Kind, n: usize, m: Option<usize>) -> RunConfig {
    let mut c = RunConfig::new(kind, n, Suite::All);
    c.m = m;
    c
}

fn check(file: &str, cfg: &RunConfig, target: Target) {
    let emitted = emit_series(cfg, target).unwrap();
    let text = emitted.to_json();
    let path = golden(file);
    if std::env::var_os("BCDY_BLESS").is_some() {
        std::fs::write(&path, &text).unwrap();
    }
    let stored = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text, stored, "{file} differs from the emitted series");
    assert_eq!(Emitted::from_json(&stored).unwrap(), emitted, "{file} does not round-trip");
}

#[test]
fn fseries_o3_order_8() {
    let mut cfg = config(Kind::Orthogonal, 3, None);
    cfg.forder = 8;
    check("fseries_o3_M8.json", &cfg, Target::Fseries);
}

#[test]
fn symmetrizers_o3() {
    for m in 1..=2 {
        check(&format!("symmetrizer_o3_m{m}.json"), &config(Kind::Orthogonal, 3, Some(m)), Target::Symmetrizer);
    }
}

#[test]
fn symmetrizer_sp4() {
    check("symmetrizer_sp4_m2.json", &config(Kind::Symplectic, 4, Some(2)), Target::Symmetrizer);
}

#[test]
fn segal_sugawara_o3() {
    check("segal_sugawara_o3_m2.json", &config(Kind::Orthogonal, 3, Some(2)), Target::SegalSugawara);
}

#[test]
fn quantum_families_round_trip() {
    let mut cfg = config(Kind::Orthogonal, 3, Some(2));
    cfg.hord = 3;
    for target in [Target::Tplus, Target::Phi] {
        let e = emit_series(&cfg, target).unwrap();
        assert_eq!(Emitted::from_json(&e.to_json()).unwrap(), e);
    }
    let mut vac = config(Kind::Orthogonal, 3, Some(0));
    vac.udeg = 0;
    let t0 = emit_series(&vac, Target::Tplus).unwrap();
    let json = serde_json::to_value(&t0.data).unwrap();
    assert_eq!(json["powers"][0]["terms"][0]["word"], serde_json::json!([]));
}
