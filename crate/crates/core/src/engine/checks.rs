//! Report checks for the reordering engine against the classical oracle.

use super::{degree, elem_axpy, elem_sub, to_classical, to_classical_gen, word_text, Ann, Elem, Gen, VacuumModule, Word};
use crate::classical::vacuum::{elem_axpy as c_axpy, word_text as c_word};
use crate::classical::{ClassicalElem, ClassicalModule, LieBasis, Mode};
use crate::context::AlgebraContext;
use crate::center::elem_witness;
use crate::error::Result;
use crate::report::{CheckRecord, Expect, Witness};
use crate::scalar::rat::{int, to_text, Rat};
use rand::{Rng, SeedableRng};
use std::collections::BTreeMap;

fn rec(ctx: &AlgebraContext, name: &str, anchor: &str) -> CheckRecord {
    CheckRecord::new(name, anchor).param("algebra", ctx.label())
}

/// Every creation mode `t^{(-s)}_{ij}` with `s <= s_max`.
pub fn generators(n: usize, s_max: u32) -> Vec<Gen> {
    let mut out = Vec::new();
    for s in 1..=s_max {
        for i in 0..n {
            for j in 0..n {
                out.push(Gen::new(s, i, j));
            }
        }
    }
    out
}

/// All words of at most `len` creation modes and total degree at most `d`.
pub fn all_words(n: usize, len: usize, d: u32) -> Vec<Word> {
    let g = generators(n, d);
    let mut out: Vec<Word> = vec![vec![]];
    let mut frontier = out.clone();
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &frontier {
            for x in &g {
                if degree(w) + x.s <= d {
                    let mut v = w.clone();
                    v.push(*x);
                    next.push(v);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn classical_diff(a: &ClassicalElem, b: &ClassicalElem, lie: &LieBasis, label: &str) -> Option<Witness> {
    let mut d = a.clone();
    c_axpy(&mut d, &int(-1), b);
    d.iter().next().map(|(w, c)| Witness::new(format!("{label}: {}", c_word(lie, w)), to_text(c)))
}

fn single(w: &Word) -> BTreeMap<Word, Rat> {
    BTreeMap::from([(w.clone(), int(1))])
}

/// `h^0` normal forms of all words of at most `len` modes and degree at most
/// `d` agree with the classical PBW normal form.
pub fn oracle_witness(ctx: &AlgebraContext, len: usize, d: u32) -> Result<Option<Witness>> {
    let m = VacuumModule::new(ctx, int(0), 1, d)?;
    let cm = ClassicalModule::new(LieBasis::new(ctx), int(0));
    for w in all_words(ctx.n, len, d) {
        let got = to_classical(&cm, &VacuumModule::h_part(&m.normal_form(&w), 0));
        let want = to_classical(&cm, &single(&w));
        if let Some(x) = classical_diff(&got, &want, &cm.lie, &word_text(&w)) {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// The `h^0` part of `[t^{(-r)}, t^{(-s)}]` is the loop-algebra bracket.
pub fn bracket_witness(ctx: &AlgebraContext, s_max: u32) -> Result<Option<Witness>> {
    let m = VacuumModule::new(ctx, int(0), 2, 2 * s_max)?;
    let cm = ClassicalModule::new(LieBasis::new(ctx), int(0));
    let gens = generators(ctx.n, s_max);
    for &x in &gens {
        for &y in &gens {
            let br = m.bracket(x, y);
            let label = format!("[{}, {}]", word_text(&[x]), word_text(&[y]));
            let mut got = ClassicalElem::new();
            for (c, g) in &br.linear {
                if let Some((a, k)) = to_classical_gen(&cm.lie, *g) {
                    c_axpy(&mut got, &(c.coeff(0) * &k), &BTreeMap::from([(vec![a], int(1))]));
                }
            }
            if let Some((c, _, _)) = br.quadratic.iter().find(|(c, _, _)| !num::Zero::is_zero(c.coeff(0))) {
                return Ok(Some(Witness::new(format!("{label}: quadratic term at h^0"), to_text(c.coeff(0)))));
            }
            let mut want = ClassicalElem::new();
            if let (Some((a, ca)), Some((b, cb))) = (to_classical_gen(&cm.lie, x), to_classical_gen(&cm.lie, y)) {
                for (e, k) in cm.lie.bracket(a.a, b.a) {
                    c_axpy(&mut want, &(k * &ca * &cb), &BTreeMap::from([(vec![Mode { r: x.s + y.s, a: *e }], int(1))]));
                }
            }
            if let Some(x) = classical_diff(&got, &want, &cm.lie, &label) {
                return Ok(Some(x));
            }
        }
    }
    Ok(None)
}

/// The `h^0` action of `t^{(r)}_{ij}` on sorted words is that of `f_ij(r-1)`,
/// compared in degrees the truncation keeps exact.
pub fn action_witness(ctx: &AlgebraContext, level: &Rat, d: u32) -> Result<Option<Witness>> {
    let m = VacuumModule::new(ctx, level.clone(), 2, d)?;
    let cm = ClassicalModule::new(LieBasis::new(ctx), level.clone());
    let sorted = all_words(ctx.n, 2, d - 1).into_iter().filter(|w| w.windows(2).all(|p| p[0] <= p[1]));
    let cap = |e: ClassicalElem, r: u32| -> ClassicalElem {
        e.into_iter().filter(|(w, _)| w.iter().map(|x| x.r).sum::<u32>() + r <= d).collect()
    };
    for w in sorted {
        let src = to_classical(&cm, &single(&w));
        for r in 1..=d - degree(&w).min(d - 1) {
            for i in 0..ctx.n {
                for j in 0..ctx.n {
                    let Some((a, ca)) = cm.lie.express(i, j) else { continue };
                    let got = to_classical(&cm, &VacuumModule::h_part(&m.act(Ann::new(r, i, j), &w), 0));
                    let mut want = ClassicalElem::new();
                    for (cw, cc) in &src {
                        c_axpy(&mut want, &(cc * &ca), &cm.act(a, r - 1, cw));
                    }
                    let label = format!("t({r})_{}{} on {}", i + 1, j + 1, word_text(&w));
                    if let Some(x) = classical_diff(&cap(got, r), &cap(want, r), &cm.lie, &label) {
                        return Ok(Some(x));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// `(xy)z = x(yz)` for sampled triples of creation modes of degree at most 2.
pub fn associativity_witness(module: &VacuumModule, samples: usize, seed: u64) -> Option<Witness> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let gens: Vec<Gen> = generators(module.ctx.n, 2.min(module.d)).into_iter().filter(|g| module.is_kept(*g)).collect();
    for _ in 0..samples {
        let w: Word = (0..3).map(|_| gens[rng.gen_range(0..gens.len())]).collect();
        let right = module.normal_form(&w);
        let mut left = Elem::new();
        for (v, c) in module.normal_form(&w[..2]) {
            let mut v = v.clone();
            v.push(w[2]);
            elem_axpy(&mut left, &c, &module.normal_form(&v));
        }
        if let Some(x) = elem_witness(&elem_sub(&left, &right), &format!("({}) {} - {}", word_text(&w[..2]), word_text(&w[2..]), word_text(&w))) {
            return Some(x);
        }
    }
    None
}

/// Oracle comparisons at `h^0` and associativity of the straightening.
pub fn engine_checks(ctx: &AlgebraContext, level: &Rat, k: usize, d: u32, seed: u64) -> Vec<CheckRecord> {
    let lvl = to_text(level);
    let mut out = vec![
        rec(ctx, "h^0 normal forms match classical oracle", "PBW filtration: gr Y⁺ = U(t⁻¹g_N[t⁻¹])")
            .param("D", d)
            .param("modes", 3)
            .outcome(oracle_witness(ctx, 3, d)),
        rec(ctx, "h^0 bracket is the loop bracket", "RTT relation for T⁺ reduces to g_N[t⁻¹]").param("s_max", 2).outcome(bracket_witness(ctx, 2)),
        rec(ctx, "h^0 action is the affine action", "mixed relation reduces to the affine algebra at level c")
            .param("level", &lvl)
            .param("D", d.min(4))
            .outcome(action_witness(ctx, level, d.min(4))),
    ];
    for unitary in [true, false] {
        let name = if unitary { "straightening associative (unitary)" } else { "straightening associative (extended)" };
        let r = rec(ctx, name, "creation modes form an associative algebra").param("K", k).param("D", d.min(4)).param("level", &lvl).param("seed", seed);
        let r = if unitary { r } else { r.expect(Expect::Probe) };
        out.push(r.outcome((|| {
            let m = VacuumModule::new(ctx, level.clone(), k, d.min(4))?;
            let m = if unitary { m.unitary() } else { m };
            Ok(associativity_witness(&m, 30, seed))
        })()));
    }
    out
}
