//! Sparse operators on labelled tensor legs of `(C^N)^{⊗m}`.

use crate::error::{Error, Result};
use crate::scalar::rat::Rat;
use crate::scalar::ring::Ring;
use std::collections::BTreeMap;

/// Zero-based multi-index, one entry per leg.
pub type Index = Vec<u8>;

/// A matrix on the legs `legs`, each of dimension `n`, stored as a sparse
/// table `(row, col) -> entry`. Missing entries are zero.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorOp<C: Ring> {
    legs: Vec<String>,
    n: usize,
    proto: C,
    entries: BTreeMap<(Index, Index), C>,
}

impl<C: Ring> TensorOp<C> {
    /// The zero operator; `proto` is any element of the coefficient ring.
    pub fn zero(legs: &[&str], n: usize, proto: &C) -> Self {
        let legs: Vec<String> = legs.iter().map(|s| s.to_string()).collect();
        for (i, l) in legs.iter().enumerate() {
            assert!(!legs[..i].contains(l), "duplicate leg {l}");
        }
        TensorOp { legs, n, proto: proto.zero_like(), entries: BTreeMap::new() }
    }

    pub fn identity(legs: &[&str], n: usize, proto: &C) -> Self {
        let mut op = Self::zero(legs, n, proto);
        let one = proto.one_like();
        for idx in all_indices(n, op.legs.len()) {
            op.entries.insert((idx.clone(), idx), one.clone());
        }
        op
    }

    pub fn legs(&self) -> &[String] {
        &self.legs
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn proto(&self) -> &C {
        &self.proto
    }

    pub fn entries(&self) -> &BTreeMap<(Index, Index), C> {
        &self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, row: &[u8], col: &[u8]) -> C {
        self.entries.get(&(row.to_vec(), col.to_vec())).cloned().unwrap_or_else(|| self.proto.clone())
    }

    /// Add `c` to the entry at `(row, col)`.
    pub fn add_entry(&mut self, row: Index, col: Index, c: C) {
        assert_eq!(row.len(), self.legs.len());
        assert_eq!(col.len(), self.legs.len());
        if c.is_zero() {
            return;
        }
        let key = (row, col);
        let v = match self.entries.remove(&key) {
            Some(old) => old.add(&c),
            None => c,
        };
        if !v.is_zero() {
            self.entries.insert(key, v);
        }
    }

    fn leg_pos(&self, leg: &str) -> Result<usize> {
        self.legs.iter().position(|l| l == leg).ok_or_else(|| Error::Config(format!("unknown leg {leg}")))
    }

    fn same_shape(&self, o: &Self) -> Result<()> {
        if self.legs != o.legs || self.n != o.n {
            return Err(Error::Config(format!("leg mismatch: {:?} vs {:?}", self.legs, o.legs)));
        }
        Ok(())
    }

    pub fn map<D: Ring>(&self, proto: &D, f: impl Fn(&C) -> D) -> TensorOp<D> {
        let mut out = TensorOp { legs: self.legs.clone(), n: self.n, proto: proto.zero_like(), entries: BTreeMap::new() };
        for ((r, c), v) in &self.entries {
            out.add_entry(r.clone(), c.clone(), f(v));
        }
        out
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.same_shape(o)?;
        let mut out = self.clone();
        for ((r, c), v) in &o.entries {
            out.add_entry(r.clone(), c.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(&self.proto, |v| v.neg())
    }

    pub fn scale(&self, r: &Rat) -> Self {
        self.map(&self.proto, |v| v.scale(r))
    }

    pub fn scale_by(&self, c: &C) -> Self {
        self.map(&self.proto, |v| c.mul(v))
    }

    /// Matrix product `self * o` on identical legs.
    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.same_shape(o)?;
        let mut rows: BTreeMap<&Index, Vec<(&Index, &C)>> = BTreeMap::new();
        for ((r, c), v) in &o.entries {
            rows.entry(r).or_default().push((c, v));
        }
        let mut acc: BTreeMap<(Index, Index), C> = BTreeMap::new();
        for ((r, k), a) in &self.entries {
            if let Some(row) = rows.get(k) {
                for (c, b) in row {
                    let t = a.mul(b);
                    let key = (r.clone(), (*c).clone());
                    match acc.get_mut(&key) {
                        Some(slot) => *slot = slot.add(&t),
                        None => {
                            acc.insert(key, t);
                        }
                    }
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Ok(TensorOp { legs: self.legs.clone(), n: self.n, proto: self.proto.clone(), entries: acc })
    }

    /// Product of a list of operators, left to right.
    pub fn product(ops: &[Self]) -> Result<Self> {
        let mut it = ops.iter();
        let mut acc = it.next().ok_or_else(|| Error::Internal("empty product".into()))?.clone();
        for op in it {
            acc = acc.mul(op)?;
        }
        Ok(acc)
    }

    /// Lift to the leg list `legs`, which must contain every current leg;
    /// the operator acts as the identity on the new legs.
    pub fn embed(&self, legs: &[&str]) -> Result<Self> {
        let pos: Vec<usize> = self
            .legs
            .iter()
            .map(|l| legs.iter().position(|x| x == l).ok_or_else(|| Error::Config(format!("leg {l} missing from target"))))
            .collect::<Result<_>>()?;
        let fresh: Vec<usize> = (0..legs.len()).filter(|i| !pos.contains(i)).collect();
        let mut out = TensorOp::zero(legs, self.n, &self.proto);
        for extra in all_indices(self.n, fresh.len()) {
            for ((r, c), v) in &self.entries {
                let mut row = vec![0u8; legs.len()];
                let mut col = vec![0u8; legs.len()];
                for (k, &p) in pos.iter().enumerate() {
                    row[p] = r[k];
                    col[p] = c[k];
                }
                for (k, &p) in fresh.iter().enumerate() {
                    row[p] = extra[k];
                    col[p] = extra[k];
                }
                out.entries.insert((row, col), v.clone());
            }
        }
        Ok(out)
    }

    /// Permute the leg order without changing the operator.
    pub fn reorder(&self, legs: &[&str]) -> Result<Self> {
        if legs.len() != self.legs.len() {
            return Err(Error::Config("reorder needs the same legs".into()));
        }
        self.embed(legs)
    }

    /// Ordinary transposition in one leg.
    pub fn transpose(&self, leg: &str) -> Result<Self> {
        let p = self.leg_pos(leg)?;
        let mut out = TensorOp::zero(&self.leg_refs(), self.n, &self.proto);
        for ((r, c), v) in &self.entries {
            let (mut r2, mut c2) = (r.clone(), c.clone());
            std::mem::swap(&mut r2[p], &mut c2[p]);
            out.entries.insert((r2, c2), v.clone());
        }
        Ok(out)
    }

    /// `A' = (ε_i ε_j a_{j'i'})` in one leg; `eps` and `prime` are zero-based.
    pub fn prime_transpose(&self, leg: &str, eps: &dyn Fn(usize) -> i64, prime: &dyn Fn(usize) -> usize) -> Result<Self> {
        let p = self.leg_pos(leg)?;
        let mut out = TensorOp::zero(&self.leg_refs(), self.n, &self.proto);
        for ((r, c), v) in &self.entries {
            // old entry (j', i') lands at (i, j)
            let (jp, ip) = (r[p] as usize, c[p] as usize);
            let (i, j) = (prime(ip), prime(jp));
            let (mut r2, mut c2) = (r.clone(), c.clone());
            r2[p] = i as u8;
            c2[p] = j as u8;
            let s = eps(i) * eps(j);
            let v = if s < 0 { v.neg() } else { v.clone() };
            out.entries.insert((r2, c2), v);
        }
        Ok(out)
    }

    /// Trace over the listed legs.
    pub fn partial_trace(&self, legs: &[&str]) -> Result<Self> {
        let traced: Vec<usize> = legs.iter().map(|l| self.leg_pos(l)).collect::<Result<_>>()?;
        let keep: Vec<usize> = (0..self.legs.len()).filter(|i| !traced.contains(i)).collect();
        let keep_names: Vec<&str> = keep.iter().map(|&i| self.legs[i].as_str()).collect();
        let mut out = TensorOp::zero(&keep_names, self.n, &self.proto);
        for ((r, c), v) in &self.entries {
            if traced.iter().all(|&t| r[t] == c[t]) {
                let r2: Index = keep.iter().map(|&i| r[i]).collect();
                let c2: Index = keep.iter().map(|&i| c[i]).collect();
                out.add_entry(r2, c2, v.clone());
            }
        }
        Ok(out)
    }

    /// Full trace as a scalar.
    pub fn trace(&self) -> C {
        let mut acc = self.proto.clone();
        for ((r, c), v) in &self.entries {
            if r == c {
                acc = acc.add(v);
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.entries.values().all(|v| v.is_zero())
    }

    /// First entry (in index order) where the two operators differ.
    pub fn first_difference(&self, o: &Self) -> Result<Option<(Index, Index, C)>> {
        let d = self.sub(o)?;
        Ok(d.entries.into_iter().find(|(_, v)| !v.is_zero()).map(|((r, c), v)| (r, c, v)))
    }

    fn leg_refs(&self) -> Vec<&str> {
        self.legs.iter().map(|s| s.as_str()).collect()
    }
}

/// All multi-indices in `[0, n)^m` in lexicographic order.
pub fn all_indices(n: usize, m: usize) -> Vec<Index> {
    let mut out = vec![Vec::new()];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..n as u8).map(move |i| {
                    let mut q = p.clone();
                    q.push(i);
                    q
                })
            })
            .collect();
    }
    out
}
