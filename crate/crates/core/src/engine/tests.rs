use super::*;
use crate::engine::module::elem_axpy;
use crate::classical::vacuum::elem_axpy as c_axpy;
use crate::classical::{ClassicalElem, ClassicalModule, LieBasis, Mode};
use crate::context::AlgebraContext;
use crate::scalar::rat::{int, rat, Rat};
use std::collections::BTreeMap;

fn contexts() -> Vec<AlgebraContext> {
    vec![AlgebraContext::orthogonal(3).unwrap(), AlgebraContext::symplectic(4).unwrap()]
}

fn gens(ctx: &AlgebraContext, smax: u32) -> Vec<Gen> {
    let mut out = Vec::new();
    for s in 1..=smax {
        for i in 0..ctx.n {
            for j in 0..ctx.n {
                out.push(Gen::new(s, i, j));
            }
        }
    }
    out
}

fn classical_of_gen(cm: &ClassicalModule, g: Gen) -> ClassicalElem {
    match to_classical_gen(&cm.lie, g) {
        Some((m, c)) => BTreeMap::from([(vec![m], c)]),
        None => ClassicalElem::new(),
    }
}

#[test]
fn bracket_reduces_to_loop_algebra() {
    for ctx in contexts() {
        let m = VacuumModule::new(&ctx, int(0), 2, 6).unwrap();
        let cm = ClassicalModule::new(LieBasis::new(&ctx), int(0));
        for x in gens(&ctx, 2) {
            for y in gens(&ctx, 2) {
                let br = m.bracket(x, y);
                let mut got = ClassicalElem::new();
                for (c, g) in &br.linear {
                    c_axpy(&mut got, c.coeff(0), &classical_of_gen(&cm, *g));
                }
                for (c, _, _) in &br.quadratic {
                    assert_eq!(c.coeff(0), &int(0));
                }
                let mut want = ClassicalElem::new();
                if let (Some((a, ca)), Some((b, cb))) = (to_classical_gen(&cm.lie, x), to_classical_gen(&cm.lie, y)) {
                    for (e, k) in cm.lie.bracket(a.a, b.a) {
                        c_axpy(&mut want, &(k * &ca * &cb), &BTreeMap::from([(vec![Mode { r: x.s + y.s, a: *e }], int(1))]));
                    }
                }
                assert_eq!(got, want, "{} {:?} {:?}", ctx.label(), x, y);
            }
        }
    }
}

fn words(ctx: &AlgebraContext, max_len: usize, max_deg: u32) -> Vec<Word> {
    let g = gens(ctx, max_deg);
    let mut out: Vec<Word> = vec![vec![]];
    let mut frontier: Vec<Word> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for x in &g {
                let mut v = w.clone();
                v.push(*x);
                if degree(&v) <= max_deg {
                    next.push(v);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

#[test]
fn normal_forms_reduce_to_classical() {
    for ctx in contexts() {
        let m = VacuumModule::new(&ctx, int(0), 2, 4).unwrap();
        let cm = ClassicalModule::new(LieBasis::new(&ctx), int(0));
        let all = words(&ctx, 3, 4);
        let step = if ctx.n > 3 { 7 } else { 1 };
        for w in all.iter().step_by(step) {
            let e = m.normal_form(w);
            let got = to_classical(&cm, &VacuumModule::h_part(&e, 0));
            let want = to_classical(&cm, &BTreeMap::from([(w.clone(), int(1))]));
            assert_eq!(got, want, "{} {:?}", ctx.label(), w);
        }
    }
}

#[test]
fn action_reduces_to_affine_action() {
    for ctx in contexts() {
        for level in [int(0), rat(3, 2), ctx.critical_level()] {
            let m = VacuumModule::new(&ctx, level.clone(), 2, 4).unwrap();
            let cm = ClassicalModule::new(LieBasis::new(&ctx), level.clone());
            let sorted: Vec<Word> = words(&ctx, 2, 3).into_iter().filter(|w| w.windows(2).all(|p| p[0] <= p[1])).collect();
            for w in sorted.iter().step_by(3) {
                for r in 1..=3u32 {
                    for i in 0..ctx.n {
                        for j in 0..ctx.n {
                            let Some((a, ca)) = cm.lie.express(i, j) else { continue };
                            let got = to_classical(&cm, &VacuumModule::h_part(&m.act(Ann::new(r, i, j), w), 0));
                            let mut want = ClassicalElem::new();
                            let src = to_classical(&cm, &BTreeMap::from([(w.clone(), int(1))]));
                            for (cw, cc) in &src {
                                c_axpy(&mut want, &(cc * &ca), &cm.act(a, r - 1, cw));
                            }
                            // compare only in degrees the truncation keeps exact
                            let cap = |e: &ClassicalElem| -> ClassicalElem {
                                e.iter().filter(|(w, _)| w.iter().map(|x| x.r).sum::<u32>() + r <= 4).map(|(a, b)| (a.clone(), b.clone())).collect()
                            };
                            assert_eq!(cap(&got), cap(&want), "{} c={} r={r} ({i},{j}) {:?}", ctx.label(), level, w);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn central_term_leading_order() {
    for ctx in contexts() {
        let c = rat(5, 3);
        let m = VacuumModule::new(&ctx, c.clone(), 2, 6).unwrap();
        for s in 1..=3u32 {
            for (i, k, j, l) in [(0, 0, ctx.n - 1, ctx.n - 1), (0, 1, 1, 0), (0, ctx.n - 1, 0, ctx.n - 1)] {
                let p = m.passage(Ann::new(s + 1, i, j), Gen::new(s, k, l));
                let got = p.scalar.map(|x| x.coeff(0).clone()).unwrap_or_default();
                let lie = LieBasis::new(&ctx);
                let want = int(ctx.sigma() * s as i64 * lie.pq(i, k, j, l)) * &c;
                assert_eq!(got, want, "{} s={s} ({i},{k},{j},{l})", ctx.label());
            }
        }
    }
}

fn random_normal_form(m: &VacuumModule, w: &[Gen], seed: u64) -> Elem {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut e: Elem = elem_cap(&BTreeMap::from([(w.to_vec(), m.one())]), m.d);
    loop {
        let Some(w) = e.keys().find(|w| w.windows(2).any(|p| p[0] > p[1])).cloned() else {
            return e;
        };
        let c = e.remove(&w).unwrap();
        let bad: Vec<usize> = (0..w.len() - 1).filter(|&p| w[p] > w[p + 1]).collect();
        let p = bad[rng.gen_range(0..bad.len())];
        let mut swapped = w.clone();
        swapped.swap(p, p + 1);
        elem_add(&mut e, swapped, c.clone());
        let br = m.bracket(w[p], w[p + 1]);
        let splice = |mid: &[Gen]| -> Word {
            let mut v = w[..p].to_vec();
            v.extend_from_slice(mid);
            v.extend_from_slice(&w[p + 2..]);
            v
        };
        for (k, g) in &br.linear {
            let v = splice(&[*g]);
            if degree(&v) <= m.d {
                elem_add(&mut e, v, c.mul(k));
            }
        }
        for (k, a, b) in &br.quadratic {
            let v = splice(&[*a, *b]);
            if degree(&v) <= m.d {
                elem_add(&mut e, v, c.mul(k));
            }
        }
    }
}

#[test]
fn straightening_is_confluent() {
    for ctx in contexts() {
        let m = VacuumModule::new(&ctx, int(0), 2, 4).unwrap();
        let g = gens(&ctx, 2);
        for (t, seed) in (0..12u64).enumerate() {
            let w: Word = (0..3).map(|q| g[(seed as usize * 7 + q * 5 + t) % g.len()]).rev().collect();
            let w: Word = w.into_iter().filter(|x| x.s <= 2).collect();
            let a = m.normal_form(&w);
            let b = random_normal_form(&m, &w, seed);
            let cm = ClassicalModule::new(LieBasis::new(&ctx), int(0));
            let d = elem_sub(&a, &b);
            assert!(VacuumModule::h_part(&d, 0).is_empty(), "{} {:?} raw h^0", ctx.label(), w);
            for l in 0..2 {
                assert!(to_classical(&cm, &VacuumModule::h_part(&d, l)).is_empty(), "{} {:?} h^{l}", ctx.label(), w);
            }
            let gl = VacuumModule::new(&ctx, int(0), 3, 5).unwrap().drop_q();
            assert_eq!(gl.normal_form(&w), random_normal_form(&gl, &w, seed), "gl control {:?}", w);
        }
    }
}

#[test]
fn annihilation_kills_vacuum_and_lowers_degree() {
    let ctx = AlgebraContext::orthogonal(3).unwrap();
    for k in 1..=3 {
        let m = VacuumModule::new(&ctx, Rat::from_integer(1.into()), k, 6).unwrap();
        assert!(m.act(Ann::new(1, 0, 0), &[]).is_empty());
        let w = vec![Gen::new(1, 0, 1), Gen::new(2, 1, 2)];
        for r in 1..=6 {
            for (v, c) in m.act(Ann::new(r, 0, 2), &w) {
                let l = c.valuation().unwrap() as u32;
                assert!(degree(&v) + r <= degree(&w) + 1 + l, "K={k} r={r} {:?} h^{l}", v);
            }
        }
    }
}

#[test]
fn translation_reduces_to_classical_derivation() {
    for ctx in contexts() {
        let m = VacuumModule::new(&ctx, ctx.critical_level(), 2, 4).unwrap();
        let cm = ClassicalModule::new(LieBasis::new(&ctx), ctx.critical_level());
        assert!(apply_d(&m, &m.vacuum()).unwrap().is_empty());
        for w in words(&ctx, 2, 3).iter().step_by(5) {
            let x = elem_cap(&m.normal_form(w), m.d - 1);
            let got = to_classical(&cm, &VacuumModule::h_part(&apply_d(&m, &x).unwrap(), 0));
            // D f(-r_1)...f(-r_k) 1 computed on the classical side
            let mut want = ClassicalElem::new();
            for (cw, cc) in to_classical(&cm, &VacuumModule::h_part(&x, 0)) {
                for k in 0..cw.len() {
                    let mut v = cw.clone();
                    v[k].r += 1;
                    c_axpy(&mut want, &(&cc * int(cw[k].r as i64)), &cm.normal_form(&v));
                }
            }
            assert_eq!(got, want, "{} {:?}", ctx.label(), w);
        }
        let big = vec![Gen::new(4, 0, 1)];
        assert!(apply_d(&m, &m.word(big)).is_err());
    }
}

#[test]
fn shift_substitution() {
    let ctx = AlgebraContext::orthogonal(3).unwrap();
    let m = VacuumModule::new(&ctx, int(0), 3, 4).unwrap();
    let x = m.word(vec![Gen::new(1, 0, 1)]);
    let fam: UFamily = vec![Elem::new(), x.clone()];
    assert_eq!(substitute_shift(&fam, &int(0)), fam);
    let shifted = substitute_shift(&fam, &int(-1));
    assert_eq!(shifted[1], x);
    let want: Elem = x.iter().map(|(w, c)| (w.clone(), c.mul_h(1).neg())).collect();
    assert_eq!(shifted[0], want);
    let constant: UFamily = vec![x.clone()];
    assert_eq!(substitute_shift(&constant, &rat(7, 2)), constant);
}

#[test]
fn trivial_relations_are_commutative() {
    let ctx = AlgebraContext::orthogonal(3).unwrap();
    let m = VacuumModule::trivial(&ctx, 3, 4);
    for x in gens(&ctx, 2) {
        for y in gens(&ctx, 2) {
            let b = m.bracket(x, y);
            assert!(b.linear.is_empty() && b.quadratic.is_empty());
        }
    }
    let w = vec![Gen::new(2, 1, 1), Gen::new(1, 0, 2)];
    let mut sorted = w.clone();
    sorted.sort();
    assert_eq!(m.normal_form(&w), m.word(sorted));
    assert!(m.act(Ann::new(1, 0, 0), &[Gen::new(1, 0, 0)]).is_empty());
}

#[test]
fn rewriting_respects_filtration() {
    for ctx in contexts() {
        let m = VacuumModule::new(&ctx, int(0), 3, 6).unwrap();
        for x in gens(&ctx, 2) {
            for y in gens(&ctx, 2) {
                let b = m.bracket(x, y);
                let d = x.s + y.s;
                for (_, g) in &b.linear {
                    assert!(g.s >= d);
                }
                for (c, p, q) in &b.quadratic {
                    assert!(p.s + q.s >= d);
                    assert!(c.coeff(0) == &int(0));
                }
            }
        }
    }
}

fn reassociated(m: &VacuumModule, w: &[Gen]) -> Elem {
    let (head, tail) = w.split_at(2);
    let mut out = Elem::new();
    for (v, c) in m.normal_form(head) {
        let mut v = v.clone();
        v.extend_from_slice(tail);
        elem_axpy(&mut out, &c, &m.normal_form(&v));
    }
    out
}

#[test]
fn unitary_straightening_is_associative() {
    for ctx in contexts() {
        for level in [int(0), ctx.critical_level()] {
            let m = VacuumModule::new(&ctx, level, 3, 4).unwrap().unitary();
            let g = gens(&ctx, 2);
            for t in 0..40usize {
                let w: Word = (0..3).map(|q| g[(t * 11 + q * 7 + t / 3) % g.len()]).collect();
                let a = m.normal_form(&w);
                assert!(a.keys().all(|v| v.iter().all(|x| m.is_kept(*x))));
                assert_eq!(a, reassociated(&m, &w), "{} {:?}", ctx.label(), w);
            }
        }
    }
}
