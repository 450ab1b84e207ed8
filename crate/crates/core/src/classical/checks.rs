//! Report checks for the classical oracle.

use super::lie::comb_add;
use super::{Comb, ClassicalModule, LieBasis, Mode};
use crate::center::segal_sugawara_central_witness;
use crate::context::AlgebraContext;
use crate::report::{CheckRecord, Expect, Witness};
use crate::scalar::rat::{int, to_text, Rat};
use rand::{Rng, SeedableRng};

fn rec(ctx: &AlgebraContext, name: &str, anchor: &str) -> CheckRecord {
    CheckRecord::new(name, anchor).param("algebra", ctx.label())
}

fn comb_witness(c: &Comb, lie: &LieBasis, label: &str) -> Option<Witness> {
    c.iter().next().map(|(a, v)| Witness::new(format!("{label}: {}", lie.name(*a)), to_text(v)))
}

/// Antisymmetry and the Jacobi identity over all basis triples.
pub fn jacobi_witness(lie: &LieBasis) -> Option<Witness> {
    let d = lie.dim();
    for x in 0..d {
        for y in 0..d {
            let mut s = lie.bracket(x, y).clone();
            for (k, v) in lie.bracket(y, x) {
                comb_add(&mut s, *k, v.clone());
            }
            if let Some(w) = comb_witness(&s, lie, &format!("[{0},{1}] + [{1},{0}]", lie.name(x), lie.name(y))) {
                return Some(w);
            }
            for z in 0..d {
                let mut acc = Comb::new();
                for (p, q, r) in [(x, y, z), (y, z, x), (z, x, y)] {
                    for (c, v) in lie.bracket(q, r) {
                        for (e, w) in lie.bracket(p, *c) {
                            comb_add(&mut acc, *e, v * w);
                        }
                    }
                }
                let label = format!("Jacobi({}, {}, {})", lie.name(x), lie.name(y), lie.name(z));
                if let Some(w) = comb_witness(&acc, lie, &label) {
                    return Some(w);
                }
            }
        }
    }
    None
}

/// Symmetry and invariance of the trace form.
pub fn form_witness(lie: &LieBasis) -> Option<Witness> {
    let d = lie.dim();
    for x in 0..d {
        for y in 0..d {
            if lie.form(x, y) != lie.form(y, x) {
                return Some(Witness::rat(format!("({}, {}) asymmetric", lie.name(x), lie.name(y)), &(lie.form(x, y) - lie.form(y, x))));
            }
            for z in 0..d {
                let l: Rat = lie.bracket(x, y).iter().map(|(c, v)| v * lie.form(*c, z)).sum();
                let r: Rat = lie.bracket(y, z).iter().map(|(c, v)| v * lie.form(x, *c)).sum();
                if l != r {
                    return Some(Witness::rat(format!("([{0},{1}],{2}) - ({0},[{1},{2}])", lie.name(x), lie.name(y), lie.name(z)), &(l - r)));
                }
            }
        }
    }
    None
}

/// Deterministic and randomly ordered straightening agree on sampled words.
pub fn straightening_witness(cm: &ClassicalModule, samples: usize, seed: u64) -> Option<Witness> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let d = cm.lie.dim();
    for _ in 0..samples {
        let len = rng.gen_range(2..=4);
        let word: Vec<Mode> = (0..len).map(|_| Mode { r: rng.gen_range(1..=2), a: rng.gen_range(0..d) }).collect();
        let a = cm.normal_form(&word);
        let mut diff = cm.normal_form_random(&word, &mut rng);
        super::vacuum::elem_axpy(&mut diff, &int(-1), &a);
        if let Some((w, c)) = diff.iter().next() {
            let label = format!("{} -> {}", super::vacuum::word_text(&cm.lie, &word), super::vacuum::word_text(&cm.lie, w));
            return Some(Witness::rat(label, c));
        }
    }
    None
}

/// Lie algebra axioms, straightening and the Segal-Sugawara vector `φ_{2,2}`.
pub fn classical_checks(ctx: &AlgebraContext, r_max: u32, seed: u64) -> Vec<CheckRecord> {
    let lie = LieBasis::new(ctx);
    let cm = ClassicalModule::new(lie.clone(), int(0));
    let mut out = vec![
        rec(ctx, "antisymmetry and Jacobi", "g_N is a Lie algebra").outcome(Ok(jacobi_witness(&lie))),
        rec(ctx, "invariant form", "(x, y) = tr xy is symmetric and invariant").outcome(Ok(form_witness(&lie))),
        rec(ctx, "straightening order independent", "PBW normal form in V_c(g_N)")
            .param("seed", seed)
            .outcome(Ok(straightening_witness(&cm, 40, seed))),
    ];
    let crit = ctx.critical_level();
    out.push(
        rec(ctx, "phi_22 singular at critical level", "φ_{2,2} lies in the Feigin-Frenkel center")
            .param("level", to_text(&crit))
            .param("r_max", r_max)
            .outcome(segal_sugawara_central_witness(ctx, 2, &crit, r_max)),
    );
    out.push(
        rec(ctx, "phi_22 not singular at level 0", "φ_{2,2} lies in the Feigin-Frenkel center")
            .param("level", "0")
            .param("r_max", r_max)
            .expect(Expect::Nonzero)
            .outcome(segal_sugawara_central_witness(ctx, 2, &int(0), r_max)),
    );
    out
}
