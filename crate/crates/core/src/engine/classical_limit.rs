//! Reduction modulo `h`: `t^{(-s)}_{ij} ↦ f_ij(-s)` and `t^{(r)}_{ij} ↦ f_ij(r-1)`.

use super::module::Word;
use super::rules::Gen;
use crate::classical::{ClassicalElem, ClassicalModule, LieBasis, Mode};
use crate::classical::vacuum::elem_axpy;
use crate::scalar::rat::Rat;
use std::collections::BTreeMap;

/// The classical mode of a creation generator, or `None` if it vanishes.
pub fn to_classical_gen(lie: &LieBasis, g: Gen) -> Option<(Mode, Rat)> {
    lie.express(g.i as usize, g.j as usize).map(|(a, c)| (Mode { r: g.s, a }, c))
}

/// Image of an exact combination of engine words in the classical module.
pub fn to_classical(cm: &ClassicalModule, e: &BTreeMap<Word, Rat>) -> ClassicalElem {
    let mut out = ClassicalElem::new();
    'words: for (w, c) in e {
        let mut modes = Vec::with_capacity(w.len());
        let mut coef = c.clone();
        for g in w {
            let Some((m, s)) = to_classical_gen(&cm.lie, *g) else { continue 'words };
            modes.push(m);
            coef *= s;
        }
        elem_axpy(&mut out, &coef, &cm.normal_form(&modes));
    }
    out
}
