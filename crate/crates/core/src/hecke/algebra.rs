//! `H_n(q)` in the `T_w` basis.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::coeff::Ring;
use crate::error::{Error, Result};
use crate::symgroup::{Composition, Perm, SymGroup};

/// Sparse element `Σ c_w T_w`; keys are indices into the [`SymGroup`] table.
#[derive(Clone, PartialEq, Debug)]
pub struct HeckeElement<E> {
    n: usize,
    terms: BTreeMap<u32, E>,
}

impl<E: Clone> HeckeElement<E> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<u32, E> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff_index(&self, k: u32) -> Option<&E> {
        self.terms.get(&k)
    }
}

/// The algebra over a fixed coefficient ring.
#[derive(Clone, Debug)]
pub struct Hecke<R: Ring> {
    ring: R,
    group: Arc<SymGroup>,
}

pub type Elem<R> = HeckeElement<<R as Ring>::Elem>;

impl<R: Ring> Hecke<R> {
    pub fn new(ring: R, n: usize) -> Self {
        Hecke { ring, group: SymGroup::get(n) }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn group(&self) -> &Arc<SymGroup> {
        &self.group
    }

    pub fn n(&self) -> usize {
        self.group.n()
    }

    pub fn dim(&self) -> usize {
        self.group.order()
    }

    pub fn zero(&self) -> Elem<R> {
        HeckeElement { n: self.n(), terms: BTreeMap::new() }
    }

    pub fn one(&self) -> Elem<R> {
        self.t_index(self.group.identity())
    }

    pub fn t_index(&self, k: u32) -> Elem<R> {
        HeckeElement { n: self.n(), terms: BTreeMap::from([(k, self.ring.one())]) }
    }

    pub fn t(&self, w: &Perm) -> Result<Elem<R>> {
        self.check_perm(w)?;
        Ok(self.t_index(self.group.index(w)))
    }

    /// The generator `T_i`, `1 ≤ i < n`.
    pub fn t_gen(&self, i: usize) -> Elem<R> {
        assert!(i >= 1 && i < self.n(), "generator index out of range");
        self.t_index(self.group.left_s(self.group.identity(), i))
    }

    fn check_perm(&self, w: &Perm) -> Result<()> {
        if w.n() != self.n() {
            return Err(Error::InvalidInput(format!("permutation {w} is not in S_{}", self.n())));
        }
        Ok(())
    }

    fn check(&self, x: &Elem<R>) -> Result<()> {
        if x.n != self.n() {
            return Err(Error::InvalidInput(format!("element of H_{} used in H_{}", x.n, self.n())));
        }
        Ok(())
    }

    /// Builds an element from `(w, c)` pairs, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (Perm, R::Elem)>>(&self, it: I) -> Result<Elem<R>> {
        let mut acc = Dense::new(self);
        for (w, c) in it {
            self.check_perm(&w)?;
            acc.add(self.group.index(&w), &c);
        }
        Ok(acc.finish())
    }

    /// `(w, c)` pairs in table order.
    pub fn terms_of<'a>(&'a self, x: &'a Elem<R>) -> impl Iterator<Item = (&'a Perm, &'a R::Elem)> + 'a {
        x.terms.iter().map(|(&k, c)| (self.group.perm(k), c))
    }

    pub fn coeff(&self, x: &Elem<R>, w: &Perm) -> R::Elem {
        x.terms.get(&self.group.index(w)).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn add(&self, x: &Elem<R>, y: &Elem<R>) -> Elem<R> {
        let mut out = x.clone();
        for (&k, c) in &y.terms {
            add_term(&self.ring, &mut out.terms, k, c);
        }
        out
    }

    pub fn sub(&self, x: &Elem<R>, y: &Elem<R>) -> Elem<R> {
        self.add(x, &self.neg(y))
    }

    pub fn neg(&self, x: &Elem<R>) -> Elem<R> {
        self.map_coeffs(x, |c| self.ring.neg(c))
    }

    pub fn scale(&self, c: &R::Elem, x: &Elem<R>) -> Elem<R> {
        self.map_coeffs(x, |y| self.ring.mul(c, y))
    }

    fn map_coeffs(&self, x: &Elem<R>, f: impl Fn(&R::Elem) -> R::Elem) -> Elem<R> {
        let terms = x.terms.iter().map(|(&k, c)| (k, f(c))).filter(|(_, c)| !self.ring.is_zero(c)).collect();
        HeckeElement { n: x.n, terms }
    }

    /// `T_i · x`.
    pub fn left_gen(&self, i: usize, x: &Elem<R>) -> Elem<R> {
        let mut acc = Dense::new(self);
        self.left_gen_into(i, x.terms.iter().map(|(&k, c)| (k, c)), &mut acc);
        acc.finish()
    }

    /// `x · T_i`.
    pub fn right_gen(&self, x: &Elem<R>, i: usize) -> Elem<R> {
        let mut acc = Dense::new(self);
        self.right_gen_into(x.terms.iter().map(|(&k, c)| (k, c)), i, &mut acc);
        acc.finish()
    }

    fn left_gen_into<'a>(&self, i: usize, x: impl Iterator<Item = (u32, &'a R::Elem)>, acc: &mut Dense<R>) {
        let g = &self.group;
        let r = &self.ring;
        let q = r.q();
        let qm1 = r.sub(&q, &r.one());
        for (k, c) in x {
            let s = g.left_s(k, i);
            if g.length(s) > g.length(k) {
                acc.add(s, c);
            } else {
                acc.add(s, &r.mul(&q, c));
                acc.add(k, &r.mul(&qm1, c));
            }
        }
    }

    fn right_gen_into<'a>(&self, x: impl Iterator<Item = (u32, &'a R::Elem)>, i: usize, acc: &mut Dense<R>) {
        let g = &self.group;
        let r = &self.ring;
        let q = r.q();
        let qm1 = r.sub(&q, &r.one());
        for (k, c) in x {
            let s = g.right_s(k, i);
            if g.length(s) > g.length(k) {
                acc.add(s, c);
            } else {
                acc.add(s, &r.mul(&q, c));
                acc.add(k, &r.mul(&qm1, c));
            }
        }
    }

    /// `T_w · x`, applying the letters of a reduced word right to left.
    pub fn left_t(&self, w: u32, x: &Elem<R>) -> Elem<R> {
        let word = self.group.perm(w).reduced_word();
        word.iter().rev().fold(x.clone(), |acc, &i| self.left_gen(i, &acc))
    }

    /// `x · T_w`.
    pub fn right_t(&self, x: &Elem<R>, w: u32) -> Elem<R> {
        let word = self.group.perm(w).reduced_word();
        word.iter().fold(x.clone(), |acc, &i| self.right_gen(&acc, i))
    }

    pub fn mul(&self, x: &Elem<R>, y: &Elem<R>) -> Result<Elem<R>> {
        self.check(x)?;
        self.check(y)?;
        let r = &self.ring;
        let mut acc = Dense::new(self);
        if x.len() <= y.len() {
            for (&w, c) in &x.terms {
                let t = self.left_t(w, y);
                for (&k, d) in &t.terms {
                    acc.add(k, &r.mul(c, d));
                }
            }
        } else {
            for (&w, c) in &y.terms {
                let t = self.right_t(x, w);
                for (&k, d) in &t.terms {
                    acc.add(k, &r.mul(d, c));
                }
            }
        }
        Ok(acc.finish())
    }

    pub fn mul_all(&self, xs: &[Elem<R>]) -> Result<Elem<R>> {
        xs.iter().try_fold(self.one(), |acc, x| self.mul(&acc, x))
    }

    /// `T_w⁻¹ = T_{i_k}⁻¹ ⋯ T_{i_1}⁻¹` with `T_i⁻¹ = q⁻¹T_i − (1 − q⁻¹)`.
    pub fn t_inverse(&self, w: &Perm) -> Result<Elem<R>> {
        self.check_perm(w)?;
        let r = &self.ring;
        let qi = r.q_inv();
        let c0 = r.neg(&r.sub(&r.one(), &qi));
        let mut acc = self.one();
        for &i in &w.reduced_word() {
            // acc ← T_i⁻¹ · acc
            let t = self.left_gen(i, &acc);
            acc = self.add(&self.scale(&qi, &t), &self.scale(&c0, &acc));
        }
        Ok(acc)
    }

    /// The anti-involution `T_w ↦ T_{w⁻¹}`.
    pub fn star(&self, x: &Elem<R>) -> Elem<R> {
        let terms = x.terms.iter().map(|(&k, c)| (self.group.inverse(k), c.clone())).collect();
        HeckeElement { n: x.n, terms }
    }

    /// `m_λ = Σ_{w ∈ S_λ} T_w`.
    pub fn m(&self, lambda: &Composition) -> Result<Elem<R>> {
        if lambda.size() != self.n() {
            return Err(Error::InvalidInput(format!("{lambda} is not a composition of {}", self.n())));
        }
        let terms = self.group.young_subgroup(lambda).into_iter().map(|k| (k, self.ring.one())).collect();
        Ok(HeckeElement { n: self.n(), terms })
    }

    /// Maps coefficients through a ring homomorphism.
    pub fn convert<S: Ring>(&self, target: &Hecke<S>, x: &Elem<R>, f: impl Fn(&R::Elem) -> S::Elem) -> Elem<S> {
        let terms = x.terms.iter().map(|(&k, c)| (k, f(c))).filter(|(_, c)| !target.ring.is_zero(c)).collect();
        HeckeElement { n: x.n, terms }
    }

    pub fn equal(&self, x: &Elem<R>, y: &Elem<R>) -> bool {
        self.sub(x, y).is_zero()
    }

    pub fn render(&self, x: &Elem<R>) -> String {
        if x.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self.terms_of(x).map(|(w, c)| format!("({}) * T{}", self.ring.render(c), w)).collect();
        parts.join(" + ")
    }

    pub fn to_json(&self, x: &Elem<R>) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms_of(x).map(|(w, c)| serde_json::json!({"perm": w.one_line(), "coeff": self.ring.to_json(c)})).collect(),
        )
    }

    /// Builds `Σ c_k T_k` from a dense accumulator helper.
    pub(crate) fn dense(&self) -> Dense<R> {
        Dense::new(self)
    }

    pub(crate) fn right_gen_acc<'a>(&self, x: impl Iterator<Item = (u32, &'a R::Elem)>, i: usize, acc: &mut Dense<R>) {
        self.right_gen_into(x, i, acc)
    }
}

fn add_term<R: Ring>(ring: &R, terms: &mut BTreeMap<u32, R::Elem>, k: u32, c: &R::Elem) {
    if ring.is_zero(c) {
        return;
    }
    match terms.get_mut(&k) {
        Some(v) => {
            *v = ring.add(v, c);
            if ring.is_zero(v) {
                terms.remove(&k);
            }
        }
        None => {
            terms.insert(k, c.clone());
        }
    }
}

/// Dense accumulator over the whole group, used inside products.
pub(crate) struct Dense<R: Ring> {
    ring: R,
    n: usize,
    vals: Vec<Option<R::Elem>>,
    touched: Vec<u32>,
}

impl<R: Ring> Dense<R> {
    fn new(h: &Hecke<R>) -> Self {
        Dense { ring: h.ring.clone(), n: h.n(), vals: vec![None; h.dim()], touched: Vec::new() }
    }

    pub(crate) fn add(&mut self, k: u32, c: &R::Elem) {
        match &mut self.vals[k as usize] {
            Some(v) => *v = self.ring.add(v, c),
            slot @ None => {
                *slot = Some(c.clone());
                self.touched.push(k);
            }
        }
    }

    pub(crate) fn finish(mut self) -> HeckeElement<R::Elem> {
        let mut terms = BTreeMap::new();
        for k in self.touched {
            if let Some(v) = self.vals[k as usize].take() {
                if !self.ring.is_zero(&v) {
                    terms.insert(k, v);
                }
            }
        }
        HeckeElement { n: self.n, terms }
    }
}

impl<E: fmt::Display + Clone> fmt::Display for HeckeElement<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let g = SymGroup::get(self.n);
        let parts: Vec<String> = self.terms.iter().map(|(&k, c)| format!("({c}) * T[{}]", g.perm(k))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{IntegerLaurent, Laurent};

    fn h(n: usize) -> Hecke<IntegerLaurent> {
        Hecke::new(IntegerLaurent, n)
    }

    #[test]
    fn quadratic_relation() {
        let h = h(2);
        let t = h.t_gen(1);
        let tt = h.mul(&t, &t).unwrap();
        let q = Laurent::q();
        let expected = h.add(&h.scale(&q.sub(&Laurent::one()), &t), &h.scale(&q, &h.one()));
        assert_eq!(tt, expected);
    }

    #[test]
    fn braid_relation_and_inverse() {
        let h = h(3);
        let (t1, t2) = (h.t_gen(1), h.t_gen(2));
        let lhs = h.mul_all(&[t1.clone(), t2.clone(), t1.clone()]).unwrap();
        let rhs = h.mul_all(&[t2.clone(), t1.clone(), t2.clone()]).unwrap();
        assert_eq!(lhs, rhs);
        for w in h.group().perms().to_vec() {
            let x = h.mul(&h.t(&w).unwrap(), &h.t_inverse(&w).unwrap()).unwrap();
            assert_eq!(x, h.one());
        }
    }

    #[test]
    fn parabolic_generator_absorbs_its_subgroup() {
        let h = h(4);
        let l = Composition::new(vec![2, 2]);
        let m = h.m(&l).unwrap();
        let q = Laurent::q();
        for i in l.young_generators() {
            assert_eq!(h.left_gen(i, &m), h.scale(&q, &m));
            assert_eq!(h.right_gen(&m, i), h.scale(&q, &m));
        }
        assert_eq!(h.star(&m), m);
    }
}
