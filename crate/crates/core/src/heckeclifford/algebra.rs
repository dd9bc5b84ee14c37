//! `H^c_n(a; q)` in the normal form `Σ coef · c^p T_w`.
//!
//! Left multiplication by `T_i` uses
//! `T_i c^p T_w = s_i(c^p) T_iT_w + (q−1)·corr_i(c^p) T_w`, which follows from
//! `T_ic_i = c_{i+1}T_i` and `T_ic_{i+1} = c_iT_i + (q−1)(c_{i+1} − c_i)`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::clifford::{clifford_product, correction, indices, join, swap_adjacent, CliffordWord};
use crate::coeff::{even_ratio_power_poly, Laurent, Ring};
use crate::error::{Error, Result};
use crate::symgroup::{Composition, Perm, SymGroup};

/// Sparse element; keys are `(Clifford mask, index of w)`.
#[derive(Clone, PartialEq, Debug)]
pub struct HCElement<E> {
    n: usize,
    terms: BTreeMap<(u32, u32), E>,
}

impl<E: Clone> HCElement<E> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), E> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(0|1)` for homogeneous nonzero elements, `Some(0)` for zero.
    pub fn parity(&self) -> Option<u8> {
        let mut it = self.terms.keys().map(|&(m, _)| (m.count_ones() % 2) as u8);
        let first = it.next().unwrap_or(0);
        it.all(|p| p == first).then_some(first)
    }
}

pub type HCElem<R> = HCElement<<R as Ring>::Elem>;

/// The superalgebra over a fixed coefficient ring.
#[derive(Clone, Debug)]
pub struct HeckeClifford<R: Ring> {
    ring: R,
    group: Arc<SymGroup>,
}

impl<R: Ring> HeckeClifford<R> {
    pub fn new(ring: R, n: usize) -> Self {
        assert!(n < 32, "Clifford masks hold at most 31 generators");
        HeckeClifford { ring, group: SymGroup::get(n) }
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

    /// `2ⁿ·n!`.
    pub fn dim(&self) -> usize {
        (1usize << self.n()) * self.group.order()
    }

    pub fn zero(&self) -> HCElem<R> {
        HCElement { n: self.n(), terms: BTreeMap::new() }
    }

    pub fn one(&self) -> HCElem<R> {
        self.basis_element(0, self.group.identity())
    }

    /// `c^p T_w` for a mask and a group index.
    pub fn basis_element(&self, mask: u32, w: u32) -> HCElem<R> {
        HCElement { n: self.n(), terms: BTreeMap::from([((mask, w), self.ring.one())]) }
    }

    pub fn term(&self, word: &CliffordWord, w: &Perm, c: R::Elem) -> Result<HCElem<R>> {
        self.check_word(word)?;
        self.check_perm(w)?;
        let mut acc = self.dense();
        acc.add(word.mask(), self.group.index(w), &c);
        Ok(acc.finish())
    }

    /// The generator `c_i`, `1 ≤ i ≤ n`.
    pub fn c(&self, i: usize) -> HCElem<R> {
        assert!(i >= 1 && i <= self.n(), "Clifford index out of range");
        self.basis_element(1 << (i - 1), self.group.identity())
    }

    pub fn clifford(&self, word: &CliffordWord) -> Result<HCElem<R>> {
        self.check_word(word)?;
        Ok(self.basis_element(word.mask(), self.group.identity()))
    }

    /// The generator `T_i`, `1 ≤ i < n`.
    pub fn t_gen(&self, i: usize) -> HCElem<R> {
        assert!(i >= 1 && i < self.n(), "generator index out of range");
        self.basis_element(0, self.group.left_s(self.group.identity(), i))
    }

    pub fn t(&self, w: &Perm) -> Result<HCElem<R>> {
        self.check_perm(w)?;
        Ok(self.basis_element(0, self.group.index(w)))
    }

    fn check_perm(&self, w: &Perm) -> Result<()> {
        if w.n() != self.n() {
            return Err(Error::InvalidInput(format!("permutation {w} is not in S_{}", self.n())));
        }
        Ok(())
    }

    fn check_word(&self, p: &CliffordWord) -> Result<()> {
        if p.n() != self.n() {
            return Err(Error::InvalidInput(format!("Clifford word {p} is not in C_{}", self.n())));
        }
        Ok(())
    }

    fn check(&self, x: &HCElem<R>) -> Result<()> {
        if x.n != self.n() {
            return Err(Error::InvalidInput(format!("element of H^c_{} used in H^c_{}", x.n, self.n())));
        }
        Ok(())
    }

    /// Builds an element from `(c^p, w, coef)` triples, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (CliffordWord, Perm, R::Elem)>>(&self, it: I) -> Result<HCElem<R>> {
        let mut acc = self.dense();
        for (p, w, c) in it {
            self.check_word(&p)?;
            self.check_perm(&w)?;
            acc.add(p.mask(), self.group.index(&w), &c);
        }
        Ok(acc.finish())
    }

    pub fn terms_of<'a>(&'a self, x: &'a HCElem<R>) -> impl Iterator<Item = (CliffordWord, &'a Perm, &'a R::Elem)> + 'a {
        x.terms.iter().map(move |(&(m, w), c)| (CliffordWord::from_mask(self.n(), m), self.group.perm(w), c))
    }

    pub fn coeff(&self, x: &HCElem<R>, p: &CliffordWord, w: &Perm) -> R::Elem {
        x.terms.get(&(p.mask(), self.group.index(w))).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn add(&self, x: &HCElem<R>, y: &HCElem<R>) -> HCElem<R> {
        let mut acc = self.dense();
        acc.add_elem(x);
        acc.add_elem(y);
        acc.finish()
    }

    pub fn sub(&self, x: &HCElem<R>, y: &HCElem<R>) -> HCElem<R> {
        self.add(x, &self.neg(y))
    }

    pub fn neg(&self, x: &HCElem<R>) -> HCElem<R> {
        self.map_coeffs(x, |c| self.ring.neg(c))
    }

    pub fn scale(&self, c: &R::Elem, x: &HCElem<R>) -> HCElem<R> {
        self.map_coeffs(x, |y| self.ring.mul(c, y))
    }

    fn map_coeffs(&self, x: &HCElem<R>, f: impl Fn(&R::Elem) -> R::Elem) -> HCElem<R> {
        let terms = x.terms.iter().map(|(&k, c)| (k, f(c))).filter(|(_, c)| !self.ring.is_zero(c)).collect();
        HCElement { n: x.n, terms }
    }

    pub fn equal(&self, x: &HCElem<R>, y: &HCElem<R>) -> bool {
        self.sub(x, y).is_zero()
    }

    /// `c^p · x`.
    pub fn left_clifford(&self, p: u32, x: &HCElem<R>) -> HCElem<R> {
        let mut acc = self.dense();
        let r = &self.ring;
        for (&(m, w), c) in &x.terms {
            let pr = clifford_product(p, m);
            let mut v = r.mul(c, &r.pow(&r.a(), pr.squares.count_ones()));
            if pr.negative {
                v = r.neg(&v);
            }
            acc.add(pr.result, w, &v);
        }
        acc.finish()
    }

    /// `T_i · x`.
    pub fn left_gen(&self, i: usize, x: &HCElem<R>) -> HCElem<R> {
        let mut acc = self.dense();
        self.left_gen_into(i, x, &mut acc);
        acc.finish()
    }

    fn left_gen_into(&self, i: usize, x: &HCElem<R>, acc: &mut Dense<R>) {
        let g = &self.group;
        let r = &self.ring;
        let q = r.q();
        let qm1 = r.sub(&q, &r.one());
        let a = r.a();
        for (&(m, w), c) in &x.terms {
            let (neg, m2) = swap_adjacent(m, i);
            let c2 = if neg { r.neg(c) } else { c.clone() };
            let s = g.left_s(w, i);
            if g.length(s) > g.length(w) {
                acc.add(m2, s, &c2);
            } else {
                acc.add(m2, s, &r.mul(&q, &c2));
                acc.add(m2, w, &r.mul(&qm1, &c2));
            }
            let (corr, k) = correction(m, i);
            for t in &corr[..k] {
                let mut v = r.mul(&qm1, c);
                if t.a_power > 0 {
                    v = r.mul(&v, &a);
                }
                if t.negative {
                    v = r.neg(&v);
                }
                acc.add(t.mask, w, &v);
            }
        }
    }

    /// `x · T_i`.
    pub fn right_gen(&self, x: &HCElem<R>, i: usize) -> HCElem<R> {
        let g = &self.group;
        let r = &self.ring;
        let q = r.q();
        let qm1 = r.sub(&q, &r.one());
        let mut acc = self.dense();
        for (&(m, w), c) in &x.terms {
            let s = g.right_s(w, i);
            if g.length(s) > g.length(w) {
                acc.add(m, s, c);
            } else {
                acc.add(m, s, &r.mul(&q, c));
                acc.add(m, w, &r.mul(&qm1, c));
            }
        }
        acc.finish()
    }

    /// `T_w · x`, applying a reduced word right to left.
    pub fn left_t(&self, w: u32, x: &HCElem<R>) -> HCElem<R> {
        let word = self.group.perm(w).reduced_word();
        word.iter().rev().fold(x.clone(), |acc, &i| self.left_gen(i, &acc))
    }

    pub fn mul(&self, x: &HCElem<R>, y: &HCElem<R>) -> Result<HCElem<R>> {
        self.check(x)?;
        self.check(y)?;
        let r = &self.ring;
        let mut by_w: BTreeMap<u32, Vec<(u32, &R::Elem)>> = BTreeMap::new();
        for (&(m, w), c) in &x.terms {
            by_w.entry(w).or_default().push((m, c));
        }
        let mut acc = self.dense();
        for (w, cl) in by_w {
            let z = self.left_t(w, y);
            for (m, c) in cl {
                for (&(m2, w2), d) in &z.terms {
                    let pr = clifford_product(m, m2);
                    let mut v = r.mul(&r.mul(c, d), &r.pow(&r.a(), pr.squares.count_ones()));
                    if pr.negative {
                        v = r.neg(&v);
                    }
                    acc.add(pr.result, w2, &v);
                }
            }
        }
        Ok(acc.finish())
    }

    pub fn mul_all(&self, xs: &[HCElem<R>]) -> Result<HCElem<R>> {
        xs.iter().try_fold(self.one(), |acc, x| self.mul(&acc, x))
    }

    /// `x · y` for homogeneous operands, rejecting mixed parity.
    pub fn mul_graded(&self, x: &HCElem<R>, y: &HCElem<R>) -> Result<(HCElem<R>, u8)> {
        let (Some(px), Some(py)) = (x.parity(), y.parity()) else {
            return Err(Error::InvalidInput("graded product of an inhomogeneous element".into()));
        };
        Ok((self.mul(x, y)?, (px + py) % 2))
    }

    /// The supercommutator `xy − (−1)^{|x||y|} yx`.
    pub fn supercommutator(&self, x: &HCElem<R>, y: &HCElem<R>) -> Result<HCElem<R>> {
        let (xy, _) = self.mul_graded(x, y)?;
        let yx = self.mul(y, x)?;
        let odd = x.parity() == Some(1) && y.parity() == Some(1);
        Ok(if odd { self.add(&xy, &yx) } else { self.sub(&xy, &yx) })
    }

    /// `m_λ = Σ_{w ∈ S_λ} T_w`.
    pub fn m(&self, lambda: &Composition) -> Result<HCElem<R>> {
        if lambda.size() != self.n() {
            return Err(Error::InvalidInput(format!("{lambda} is not a composition of {}", self.n())));
        }
        let terms = self.group.young_subgroup(lambda).into_iter().map(|k| ((0, k), self.ring.one())).collect();
        Ok(HCElement { n: self.n(), terms })
    }

    /// `γ^L_{λ;i} = Σ_k q^{k−1} c_{b+k}` over the `i`-th block (1-based);
    /// zero for an empty part.
    pub fn gamma_left(&self, lambda: &Composition, i: usize) -> Result<HCElem<R>> {
        self.gamma(lambda, i, false)
    }

    /// `γ^R_{λ;i} = Σ_k q^{λ_i−k} c_{b+k}`.
    pub fn gamma_right(&self, lambda: &Composition, i: usize) -> Result<HCElem<R>> {
        self.gamma(lambda, i, true)
    }

    fn gamma(&self, lambda: &Composition, i: usize, reversed: bool) -> Result<HCElem<R>> {
        if lambda.size() != self.n() || i == 0 || i > lambda.len() {
            return Err(Error::InvalidInput(format!("no part {i} in {lambda} for H^c_{}", self.n())));
        }
        let (start, end) = lambda.blocks()[i - 1];
        let len = lambda.part(i - 1);
        let mut acc = self.dense();
        for (k, j) in (start..=end).enumerate().take(len) {
            let e = if reversed { len - 1 - k } else { k };
            acc.add(1 << (j - 1), self.group.identity(), &self.ring.q_pow(e as i32));
        }
        Ok(acc.finish())
    }

    /// Rewrites `x` in the other normal form `Σ coef · T_w c^p`; keys are
    /// `(index of w, mask)`. Peels off a longest term at a time, using that
    /// `T_w c^{w⁻¹(p)} = ±c^p T_w + (shorter terms)`.
    pub fn to_t_first(&self, x: &HCElem<R>) -> Result<BTreeMap<(u32, u32), R::Elem>> {
        self.check(x)?;
        let g = &self.group;
        let r = &self.ring;
        let mut rest = x.clone();
        let mut out = BTreeMap::new();
        while let Some((&(m, w), c)) = rest.terms.iter().max_by_key(|(&(m, w), _)| (g.length(w), m, w)) {
            let c = c.clone();
            let winv = g.perm(w).inverse();
            let pre = indices(m).iter().fold(0u32, |acc, &j| acc | 1 << (winv.apply(j) - 1));
            let lead = self.mul(&self.basis_element(0, w), &self.basis_element(pre, g.identity()))?;
            let eps = lead.terms.get(&(m, w)).cloned().ok_or_else(|| Error::Invariant("missing leading term".into()))?;
            let f = r.div_exact(&c, &eps).ok_or_else(|| Error::Invariant("leading coefficient not a unit".into()))?;
            rest = self.sub(&rest, &self.scale(&f, &lead));
            out.insert((w, pre), f);
        }
        Ok(out)
    }

    /// Inverse of [`Self::to_t_first`].
    pub fn from_t_first(&self, x: &BTreeMap<(u32, u32), R::Elem>) -> Result<HCElem<R>> {
        let mut acc = self.zero();
        for (&(w, m), c) in x {
            let y = self.mul(&self.basis_element(0, w), &self.basis_element(m, self.group.identity()))?;
            acc = self.add(&acc, &self.scale(c, &y));
        }
        Ok(acc)
    }

    /// Maps coefficients through a ring homomorphism.
    pub fn convert<S: Ring>(&self, target: &HeckeClifford<S>, x: &HCElem<R>, f: impl Fn(&R::Elem) -> S::Elem) -> HCElem<S> {
        let terms = x.terms.iter().map(|(&k, c)| (k, f(c))).filter(|(_, c)| !target.ring.is_zero(c)).collect();
        HCElement { n: x.n, terms }
    }

    pub fn render(&self, x: &HCElem<R>) -> String {
        if x.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms_of(x)
            .map(|(p, w, c)| {
                let c = self.ring.render(c);
                if p.is_empty() {
                    format!("({c}) * T{w}")
                } else {
                    format!("({c}) * {p} T{w}")
                }
            })
            .collect();
        parts.join(" + ")
    }

    pub fn to_json(&self, x: &HCElem<R>) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms_of(x)
                .map(|(p, w, c)| serde_json::json!({"clifford": p.indices(), "perm": w.one_line(), "coeff": self.ring.to_json(c)}))
                .collect(),
        )
    }

    pub(crate) fn dense(&self) -> Dense<R> {
        Dense::new(self)
    }
}

/// `m_n c^P m_n` in closed form: `(a(q−1)/[2])^s [n]! m_n` for `|P| = 2s`,
/// `(a(q−1)/[2])^s [n−1]! γ^L_n m_n` for `|P| = 2s+1`.
pub fn gamma_lemma_scalar(n: usize, r: usize) -> (Laurent, bool) {
    let s = (r / 2) as u32;
    if r % 2 == 0 {
        (even_ratio_power_poly(n as u32, s), false)
    } else {
        (even_ratio_power_poly(n as u32 - 1, s), true)
    }
}

/// Checks the closed form of `m_n c_{i_1}⋯c_{i_r} m_n` and the intertwining
/// `γ^L_n m_n = m_n γ^R_n` by multiplying out.
pub fn gamma_lemma_check<R: Ring>(hc: &HeckeClifford<R>, idx: &[usize]) -> Result<bool> {
    let n = hc.n();
    let word = CliffordWord::new(n, idx)?;
    let one_row = Composition::new(vec![n]);
    let m = hc.m(&one_row)?;
    let lhs = hc.mul_all(&[m.clone(), hc.clifford(&word)?, m.clone()])?;
    let (scalar, odd) = gamma_lemma_scalar(n, word.len());
    let scalar = hc.ring().from_laurent(&scalar);
    let gl_m = hc.mul(&hc.gamma_left(&one_row, 1)?, &m)?;
    let rhs = if odd { hc.scale(&scalar, &gl_m) } else { hc.scale(&scalar, &m) };
    let intertwines = hc.equal(&gl_m, &hc.mul(&m, &hc.gamma_right(&one_row, 1)?)?);
    Ok(hc.equal(&lhs, &rhs) && intertwines)
}

/// `γ^L_{λ;i} m_λ = m_λ γ^R_{λ;i}` for every part `i`.
pub fn gamma_realization_holds<R: Ring>(hc: &HeckeClifford<R>, lambda: &Composition) -> Result<bool> {
    let m = hc.m(lambda)?;
    for i in 1..=lambda.len() {
        let left = hc.mul(&hc.gamma_left(lambda, i)?, &m)?;
        let right = hc.mul(&m, &hc.gamma_right(lambda, i)?)?;
        if !hc.equal(&left, &right) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// At `q = 1`, checks that `s_i ↦ s_i`, `c_i ↦ c_i` extends to a super
/// anti-homomorphism `W_n(a) → W_n(−a)`: `φ(xy) = (−1)^{|x||y|} φ(y)φ(x)`.
/// `src` and `dst` must be specializations with `q = 1` and opposite `a`.
pub struct AntiHomomorphism<R: Ring> {
    src: HeckeClifford<R>,
    dst: HeckeClifford<R>,
}

impl<R: Ring> AntiHomomorphism<R> {
    pub fn new(src: R, dst: R, n: usize) -> Result<Self> {
        let ok = src.is_one(&src.q()) && dst.is_one(&dst.q()) && src.neg(&src.a()) == dst.a();
        if !ok {
            return Err(Error::InvalidRing("need q = 1 on both sides and opposite values of a".into()));
        }
        Ok(AntiHomomorphism { src: HeckeClifford::new(src, n), dst: HeckeClifford::new(dst, n) })
    }

    pub fn source(&self) -> &HeckeClifford<R> {
        &self.src
    }

    /// `φ(c^p w) = w⁻¹ c^p`: reversing `c^p` costs `(−1)^{r(r−1)/2}` twice.
    pub fn apply(&self, x: &HCElem<R>) -> Result<HCElem<R>> {
        let g = self.src.group();
        let mut acc = self.dst.zero();
        for (&(m, w), c) in &x.terms {
            let y = self.dst.mul(&self.dst.basis_element(0, g.inverse(w)), &self.dst.basis_element(m, g.identity()))?;
            acc = self.dst.add(&acc, &self.dst.scale(c, &y));
        }
        Ok(acc)
    }

    pub fn holds_on(&self, x: &HCElem<R>, y: &HCElem<R>) -> Result<bool> {
        let (xy, _) = self.src.mul_graded(x, y)?;
        let lhs = self.apply(&xy)?;
        let mut rhs = self.dst.mul(&self.apply(y)?, &self.apply(x)?)?;
        if x.parity() == Some(1) && y.parity() == Some(1) {
            rhs = self.dst.neg(&rhs);
        }
        Ok(self.dst.equal(&lhs, &rhs))
    }
}

/// Dense accumulator over all `2ⁿ·n!` basis elements.
pub(crate) struct Dense<R: Ring> {
    ring: R,
    n: usize,
    order: usize,
    vals: Vec<Option<R::Elem>>,
    touched: Vec<usize>,
}

impl<R: Ring> Dense<R> {
    fn new(h: &HeckeClifford<R>) -> Self {
        Dense { ring: h.ring.clone(), n: h.n(), order: h.group.order(), vals: vec![None; h.dim()], touched: Vec::new() }
    }

    pub(crate) fn add(&mut self, m: u32, w: u32, c: &R::Elem) {
        if self.ring.is_zero(c) {
            return;
        }
        let k = m as usize * self.order + w as usize;
        match &mut self.vals[k] {
            Some(v) => *v = self.ring.add(v, c),
            slot @ None => {
                *slot = Some(c.clone());
                self.touched.push(k);
            }
        }
    }

    fn add_elem(&mut self, x: &HCElement<R::Elem>) {
        for (&(m, w), c) in &x.terms {
            self.add(m, w, c);
        }
    }

    pub(crate) fn finish(mut self) -> HCElement<R::Elem> {
        let mut terms = BTreeMap::new();
        for k in self.touched {
            if let Some(v) = self.vals[k].take() {
                if !self.ring.is_zero(&v) {
                    terms.insert(((k / self.order) as u32, (k % self.order) as u32), v);
                }
            }
        }
        HCElement { n: self.n, terms }
    }
}

impl<E: fmt::Display + Clone> fmt::Display for HCElement<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let g = SymGroup::get(self.n);
        let parts: Vec<String> =
            self.terms
                .iter()
                .map(|(&(m, w), c)| {
                    if m == 0 {
                        format!("({c}) * T[{}]", g.perm(w))
                    } else {
                        format!("({c}) * c[{}] T[{}]", join(&indices(m)), g.perm(w))
                    }
                })
                .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{FiniteField, IntegerLaurent, RationalSpecialization};
    use num_rational::BigRational;

    fn hc(n: usize) -> HeckeClifford<IntegerLaurent> {
        HeckeClifford::new(IntegerLaurent, n)
    }

    #[test]
    fn defining_relations() {
        let h = hc(3);
        let a = Laurent::a();
        let (c1, c2, c3) = (h.c(1), h.c(2), h.c(3));
        let (t1, t2) = (h.t_gen(1), h.t_gen(2));
        assert_eq!(h.mul(&c1, &c1).unwrap(), h.scale(&a, &h.one()));
        assert_eq!(h.mul(&c1, &c2).unwrap(), h.neg(&h.mul(&c2, &c1).unwrap()));
        assert_eq!(h.mul(&t1, &c1).unwrap(), h.mul(&c2, &t1).unwrap());
        assert_eq!(h.mul(&t1, &c3).unwrap(), h.mul(&c3, &t1).unwrap());
        let q = Laurent::q();
        let qm1 = q.sub(&Laurent::one());
        let rhs = h.add(&h.mul(&c1, &t1).unwrap(), &h.scale(&qm1, &h.sub(&c2, &c1)));
        assert_eq!(h.mul(&t1, &c2).unwrap(), rhs);
        let tt = h.mul(&t1, &t1).unwrap();
        assert_eq!(tt, h.add(&h.scale(&qm1, &t1), &h.scale(&q, &h.one())));
        let braid = |x: &HCElem<IntegerLaurent>, y: &HCElem<IntegerLaurent>| h.mul_all(&[x.clone(), y.clone(), x.clone()]).unwrap();
        assert_eq!(braid(&t1, &t2), braid(&t2, &t1));
    }

    #[test]
    fn associativity_on_basis_triples() {
        let h = hc(3);
        let basis: Vec<_> = (0..8u32).flat_map(|m| (0..6u32).map(move |w| (m, w))).collect();
        let pick = [0, 7, 13, 22, 31, 40, 47];
        for &i in &pick {
            for &j in &pick {
                for &k in &pick {
                    let (x, y, z) = (
                        h.basis_element(basis[i].0, basis[i].1),
                        h.basis_element(basis[j].0, basis[j].1),
                        h.basis_element(basis[k].0, basis[k].1),
                    );
                    let l = h.mul(&h.mul(&x, &y).unwrap(), &z).unwrap();
                    let r = h.mul(&x, &h.mul(&y, &z).unwrap()).unwrap();
                    assert_eq!(l, r);
                }
            }
        }
    }

    #[test]
    fn normal_forms_round_trip() {
        let h = hc(3);
        for m in 0..8u32 {
            for w in 0..6u32 {
                let x = h.basis_element(m, w);
                let tf = h.to_t_first(&x).unwrap();
                assert_eq!(h.from_t_first(&tf).unwrap(), x);
            }
        }
        assert_eq!(h.dim(), 48);
    }

    #[test]
    fn gamma_lemma_small() {
        let h = hc(3);
        for mask in 0..8u32 {
            assert!(gamma_lemma_check(&h, &indices(mask)).unwrap(), "{mask:b}");
        }
        let (s, odd) = gamma_lemma_scalar(2, 2);
        assert!(!odd);
        assert_eq!(s, Laurent::a().mul(&Laurent::q().sub(&Laurent::one())));
    }

    #[test]
    fn gamma_realization_up_to_five() {
        for n in 1..=5 {
            let h = HeckeClifford::new(IntegerLaurent, n);
            for lambda in crate::symgroup::compositions(n) {
                assert!(gamma_realization_holds(&h, &lambda).unwrap(), "{lambda}");
            }
        }
    }

    #[test]
    fn anti_homomorphism_at_q_one() {
        let r = |x: i64| BigRational::from_integer(x.into());
        let phi = AntiHomomorphism::new(RationalSpecialization::new(r(1), r(3)), RationalSpecialization::new(r(1), r(-3)), 3).unwrap();
        let h = phi.source().clone();
        let gens = [h.c(1), h.c(2), h.c(3), h.t_gen(1), h.t_gen(2)];
        for x in &gens {
            for y in &gens {
                assert!(phi.holds_on(x, y).unwrap());
            }
        }
        let mixed = h.add(&h.c(1), &h.t_gen(1));
        assert!(phi.holds_on(&mixed, &h.c(2)).is_err());
        assert!(AntiHomomorphism::new(FiniteField::new(5, 2, 1), FiniteField::new(5, 2, 4), 2).is_err());
    }
}
