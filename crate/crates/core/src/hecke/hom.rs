//! Hom spaces `M_{λ;μ} = m_μH_n ∩ H_nm_λ` in the double-coset basis `m_S`,
//! and the composition product `∘`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::algebra::{Elem, Hecke, HeckeElement};
use crate::coeff::Ring;
use crate::error::{Error, Result};
use crate::symgroup::{Composition, SymGroup};
use crate::tableau::{row_semistandard, Tableau};

/// Index data for `M_{λ;μ}`: the tableaux `Tab_{λ;μ}`, the minimal double
/// coset representatives `d(S_↓)`, and the double coset of every `w ∈ S_n`.
#[derive(Debug)]
pub struct HomBasis {
    lambda: Composition,
    mu: Composition,
    tableaux: Vec<Tableau>,
    reps: Vec<u32>,
    coset_of: Vec<u32>,
    index: HashMap<Tableau, usize>,
}

impl HomBasis {
    /// Shared basis for `(λ, μ)`.
    pub fn get(lambda: &Composition, mu: &Composition) -> Result<Arc<HomBasis>> {
        type Cache = Mutex<HashMap<(Composition, Composition), Arc<HomBasis>>>;
        static CACHE: OnceLock<Cache> = OnceLock::new();
        if lambda.size() != mu.size() {
            return Err(Error::InvalidInput(format!("{lambda} and {mu} have different sizes")));
        }
        let key = (lambda.clone(), mu.clone());
        let cache = CACHE.get_or_init(Default::default);
        if let Some(b) = cache.lock().unwrap().get(&key) {
            return Ok(b.clone());
        }
        let b = Arc::new(Self::build(lambda, mu));
        Ok(cache.lock().unwrap().entry(key).or_insert(b).clone())
    }

    fn build(lambda: &Composition, mu: &Composition) -> Self {
        let group = SymGroup::get(lambda.size());
        let tableaux = row_semistandard(lambda, mu);
        let index: HashMap<Tableau, usize> = tableaux.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
        let reps = tableaux.iter().map(|t| group.index(&t.down(mu).perm())).collect();
        let blocks = mu.block_of();
        let coset_of = group.perms().iter().map(|w| index[&Tableau::from_perm(w, lambda).restrict(&blocks)] as u32).collect();
        HomBasis { lambda: lambda.clone(), mu: mu.clone(), tableaux, reps, coset_of, index }
    }

    pub fn lambda(&self) -> &Composition {
        &self.lambda
    }

    pub fn mu(&self) -> &Composition {
        &self.mu
    }

    pub fn n(&self) -> usize {
        self.lambda.size()
    }

    pub fn len(&self) -> usize {
        self.tableaux.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tableaux.is_empty()
    }

    pub fn tableaux(&self) -> &[Tableau] {
        &self.tableaux
    }

    pub fn tableau(&self, i: usize) -> &Tableau {
        &self.tableaux[i]
    }

    pub fn position(&self, t: &Tableau) -> Option<usize> {
        self.index.get(t).copied()
    }

    /// Group index of `d(S_↓)` for the `i`-th tableau.
    pub fn rep(&self, i: usize) -> u32 {
        self.reps[i]
    }

    pub fn reps(&self) -> &[u32] {
        &self.reps
    }

    /// Basis index of the double coset `S_μ w S_λ`.
    pub fn coset_of(&self, w: u32) -> usize {
        self.coset_of[w as usize] as usize
    }

    /// `ℓ(S^↑)`, the length of the longest element of the double coset.
    pub fn top_length(&self, i: usize) -> usize {
        self.tableaux[i].up(&self.mu).length()
    }

    /// Column priority used for echelon forms: longest double cosets first,
    /// ties broken by reading word.
    pub fn pivot_order(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.len()).collect();
        let tops: Vec<usize> = (0..self.len()).map(|i| self.top_length(i)).collect();
        idx.sort_by(|&i, &j| tops[j].cmp(&tops[i]).then_with(|| self.tableaux[i].reading_word().cmp(&self.tableaux[j].reading_word())));
        idx
    }

    /// `Σ_S c_S m_S` as an element of `H_n`.
    pub fn embed<R: Ring>(&self, h: &Hecke<R>, coeffs: &[R::Elem]) -> Elem<R> {
        let mut acc = h.dense();
        for (k, &c) in self.coset_of.iter().enumerate() {
            let v = &coeffs[c as usize];
            if !h.ring().is_zero(v) {
                acc.add(k as u32, v);
            }
        }
        acc.finish()
    }

    /// Coordinates of `x ∈ M_{λ;μ}`; fails if `x` is not constant on each
    /// double coset.
    pub fn extract<R: Ring>(&self, h: &Hecke<R>, x: &Elem<R>) -> Result<Vec<R::Elem>> {
        let coeffs = self.extract_unchecked(h, x);
        let back = self.embed(h, &coeffs);
        if !h.equal(&back, x) {
            return Err(Error::Invariant(format!("element is not in M_{{{};{}}}", self.lambda, self.mu)));
        }
        Ok(coeffs)
    }

    /// Coordinates read off at the representatives only.
    pub fn extract_unchecked<R: Ring>(&self, h: &Hecke<R>, x: &Elem<R>) -> Vec<R::Elem> {
        self.reps.iter().map(|&k| x.coeff_index(k).cloned().unwrap_or_else(|| h.ring().zero())).collect()
    }
}

/// An element of `M_{λ;μ}` in the basis `{m_S}`.
#[derive(Clone, Debug)]
pub struct HomElement<E> {
    basis: Arc<HomBasis>,
    coeffs: Vec<E>,
}

impl<E: PartialEq> PartialEq for HomElement<E> {
    fn eq(&self, other: &Self) -> bool {
        self.basis.lambda == other.basis.lambda && self.basis.mu == other.basis.mu && self.coeffs == other.coeffs
    }
}

impl<E: Clone> HomElement<E> {
    pub fn new(basis: Arc<HomBasis>, coeffs: Vec<E>) -> Result<Self> {
        if coeffs.len() != basis.len() {
            return Err(Error::InvalidInput("coefficient vector does not match the basis".into()));
        }
        Ok(HomElement { basis, coeffs })
    }

    pub fn basis(&self) -> &Arc<HomBasis> {
        &self.basis
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn lambda(&self) -> &Composition {
        &self.basis.lambda
    }

    pub fn mu(&self) -> &Composition {
        &self.basis.mu
    }
}

/// Hom-space arithmetic on top of a Hecke algebra.
#[derive(Clone, Debug)]
pub struct HomSpaces<R: Ring> {
    h: Hecke<R>,
}

pub type HomElem<R> = HomElement<<R as Ring>::Elem>;

impl<R: Ring> HomSpaces<R> {
    pub fn new(ring: R, n: usize) -> Self {
        HomSpaces { h: Hecke::new(ring, n) }
    }

    pub fn hecke(&self) -> &Hecke<R> {
        &self.h
    }

    pub fn ring(&self) -> &R {
        self.h.ring()
    }

    fn basis(&self, lambda: &Composition, mu: &Composition) -> Result<Arc<HomBasis>> {
        if lambda.size() != self.h.n() {
            return Err(Error::InvalidInput(format!("{lambda} is not a composition of {}", self.h.n())));
        }
        HomBasis::get(lambda, mu)
    }

    pub fn zero(&self, lambda: &Composition, mu: &Composition) -> Result<HomElem<R>> {
        let b = self.basis(lambda, mu)?;
        let coeffs = vec![self.ring().zero(); b.len()];
        Ok(HomElement { basis: b, coeffs })
    }

    /// The basis element `m_S` for `S ∈ Tab_{λ;μ}`; `μ` is needed because
    /// trailing zero parts are invisible in the tableau.
    pub fn m_s(&self, s: &Tableau, mu: &Composition) -> Result<HomElem<R>> {
        let b = self.basis(&s.shape(), mu)?;
        let i = b.position(s).ok_or_else(|| Error::InvalidInput(format!("{s} is not a row-semistandard tableau of weight {mu}")))?;
        Ok(self.unit_vector(b, i))
    }

    pub fn unit_vector(&self, basis: Arc<HomBasis>, i: usize) -> HomElem<R> {
        let mut coeffs = vec![self.ring().zero(); basis.len()];
        coeffs[i] = self.ring().one();
        HomElement { basis, coeffs }
    }

    /// `m_ρ` as an element of `M_{λ;μ}` (requires `S_λ, S_μ ⊆ S_ρ`).
    pub fn m_in(&self, rho: &Composition, lambda: &Composition, mu: &Composition) -> Result<HomElem<R>> {
        let m = self.h.m(rho)?;
        self.from_hecke(lambda, mu, &m)
    }

    pub fn from_hecke(&self, lambda: &Composition, mu: &Composition, x: &Elem<R>) -> Result<HomElem<R>> {
        let b = self.basis(lambda, mu)?;
        let coeffs = b.extract(&self.h, x)?;
        Ok(HomElement { basis: b, coeffs })
    }

    pub fn to_hecke(&self, x: &HomElem<R>) -> Elem<R> {
        x.basis.embed(&self.h, &x.coeffs)
    }

    pub fn add(&self, x: &HomElem<R>, y: &HomElem<R>) -> Result<HomElem<R>> {
        same_space(x, y)?;
        let r = self.ring();
        Ok(HomElement { basis: x.basis.clone(), coeffs: x.coeffs.iter().zip(&y.coeffs).map(|(a, b)| r.add(a, b)).collect() })
    }

    pub fn scale(&self, c: &R::Elem, x: &HomElem<R>) -> HomElem<R> {
        let r = self.ring();
        HomElement { basis: x.basis.clone(), coeffs: x.coeffs.iter().map(|a| r.mul(c, a)).collect() }
    }

    /// `(m_S)* = m_{S*}`.
    pub fn star(&self, x: &HomElem<R>) -> Result<HomElem<R>> {
        let b = self.basis(x.mu(), x.lambda())?;
        let cols = x.mu().len();
        let mut coeffs = vec![self.ring().zero(); b.len()];
        for (i, t) in x.basis.tableaux.iter().enumerate() {
            let j = b.position(&t.dual(cols)).ok_or_else(|| Error::Invariant(format!("dual of {t} missing")))?;
            coeffs[j] = x.coeffs[i].clone();
        }
        Ok(HomElement { basis: b, coeffs })
    }

    /// `A ∘_μ B` for `A ∈ M_{μ;ν}`, `B ∈ M_{λ;μ}`: writing `B = m_μ y` with
    /// `y` supported on `D_μ⁻¹`, the product is `A·y ∈ M_{λ;ν}`.
    pub fn circ(&self, a: &HomElem<R>, b: &HomElem<R>) -> Result<HomElem<R>> {
        if a.lambda() != b.mu() {
            return Err(Error::InvalidInput(format!(
                "cannot compose M_{{{};{}}} after M_{{{};{}}}",
                a.lambda(),
                a.mu(),
                b.lambda(),
                b.mu()
            )));
        }
        let out = self.basis(b.lambda(), a.mu())?;
        let ae = self.to_hecke(a);
        let r = self.ring();
        let mut acc = self.h.dense();
        for_each_right_coset_product(&self.h, &ae, b.mu(), |w, x| {
            let c = &b.coeffs[b.basis.coset_of(w)];
            if !r.is_zero(c) {
                for (&k, d) in x.terms() {
                    acc.add(k, &r.mul(d, c));
                }
            }
        });
        let prod = acc.finish();
        let coeffs = out.extract(&self.h, &prod)?;
        Ok(HomElement { basis: out, coeffs })
    }

    /// All products `A ∘_μ m_S` for `S ∈ Tab_{λ;μ}`, as coordinate vectors in
    /// `M_{λ;ν}`. Reads each product only at the representatives, so it relies
    /// on closure of `∘` rather than re-checking it.
    pub fn circ_with_basis(&self, a: &HomElem<R>, lambda: &Composition) -> Result<Vec<Vec<R::Elem>>> {
        let mu = a.lambda().clone();
        let inner = self.basis(lambda, &mu)?;
        let out = self.basis(lambda, a.mu())?;
        let r = self.ring();
        let ae = self.to_hecke(a);
        let mut res = vec![vec![r.zero(); out.len()]; inner.len()];
        for_each_right_coset_product(&self.h, &ae, &mu, |w, x| {
            let row = &mut res[inner.coset_of(w)];
            for (j, &k) in out.reps.iter().enumerate() {
                if let Some(c) = x.coeff_index(k) {
                    row[j] = r.add(&row[j], c);
                }
            }
        });
        Ok(res)
    }

    pub fn render(&self, x: &HomElem<R>) -> String {
        let parts: Vec<String> = x
            .basis
            .tableaux
            .iter()
            .zip(&x.coeffs)
            .filter(|(_, c)| !self.ring().is_zero(c))
            .map(|(t, c)| format!("({}) * m[{}]", self.ring().render(c), t))
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    pub fn to_json(&self, x: &HomElem<R>) -> serde_json::Value {
        serde_json::Value::Array(
            x.basis
                .tableaux
                .iter()
                .zip(&x.coeffs)
                .filter(|(_, c)| !self.ring().is_zero(c))
                .map(|(t, c)| serde_json::json!({"tableau": t, "coeff": self.ring().to_json(c)}))
                .collect(),
        )
    }
}

fn same_space<E: Clone>(x: &HomElement<E>, y: &HomElement<E>) -> Result<()> {
    if x.lambda() != y.lambda() || x.mu() != y.mu() {
        return Err(Error::InvalidInput("elements live in different hom spaces".into()));
    }
    Ok(())
}

/// Calls `f(w, x·T_w)` for every `w ∈ D_μ⁻¹`, building the products level by
/// level in length: `D_μ⁻¹` is closed under removing a right descent.
pub(crate) fn for_each_right_coset_product<R: Ring>(h: &Hecke<R>, x: &Elem<R>, mu: &Composition, mut f: impl FnMut(u32, &Elem<R>)) {
    let g = h.group();
    let reps = g.min_right_coset_reps(mu);
    let max_len = reps.iter().map(|&w| g.length(w)).max().unwrap_or(0);
    let mut levels: Vec<Vec<u32>> = vec![Vec::new(); max_len as usize + 1];
    for &w in &reps {
        levels[g.length(w) as usize].push(w);
    }
    let mut prev: HashMap<u32, HeckeElement<R::Elem>> = HashMap::new();
    prev.insert(g.identity(), x.clone());
    f(g.identity(), x);
    for level in levels.iter().skip(1) {
        let mut cur = HashMap::with_capacity(level.len());
        for &w in level {
            let i = (1..g.n()).rev().find(|&i| g.perm(w).has_right_descent(i)).expect("nonidentity has a descent");
            let parent = &prev[&g.right_s(w, i)];
            let mut acc = h.dense();
            h.right_gen_acc(parent.terms().iter().map(|(&k, c)| (k, c)), i, &mut acc);
            let y = acc.finish();
            f(w, &y);
            cur.insert(w, y);
        }
        prev = cur;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{IntegerLaurent, Laurent};

    fn comp(v: &[usize]) -> Composition {
        Composition::new(v.to_vec())
    }

    #[test]
    fn example_tableau_embeds_six_terms() {
        let hs = HomSpaces::new(IntegerLaurent, 8);
        let mu = comp(&[3, 1, 2, 2]);
        let s = Tableau::parse("1123/144/3").unwrap();
        let x = hs.m_s(&s, &mu).unwrap();
        let m_lambda = hs.to_hecke(&x);
        let lam = s.shape();
        let m = hs.hecke().m(&lam).unwrap();
        // |S_μ d S_λ| = 6 · |S_λ|
        assert_eq!(m_lambda.len(), 6 * m.len());
        let as_m_t = hs.from_hecke(&lam, &comp(&[1; 8]), &m_lambda).unwrap();
        let nonzero = as_m_t.coeffs().iter().filter(|c| !c.is_zero()).count();
        assert_eq!(nonzero, 6);
    }

    #[test]
    fn star_matches_dual() {
        let hs = HomSpaces::new(IntegerLaurent, 5);
        let (l, m) = (comp(&[2, 3]), comp(&[3, 1, 0, 1]));
        let b = HomBasis::get(&l, &m).unwrap();
        assert_eq!(b.len(), 4);
        for i in 0..b.len() {
            let x = hs.unit_vector(b.clone(), i);
            let via_hecke = hs.hecke().star(&hs.to_hecke(&x));
            let y = hs.star(&x).unwrap();
            assert_eq!(hs.to_hecke(&y), via_hecke);
        }
    }

    #[test]
    fn unit_law_and_batch_agree() {
        let hs = HomSpaces::new(IntegerLaurent, 4);
        let (l, m) = (comp(&[2, 1, 1]), comp(&[2, 2]));
        let unit = hs.m_in(&m, &m, &m).unwrap();
        let b = HomBasis::get(&l, &m).unwrap();
        let batch = hs.circ_with_basis(&unit, &l).unwrap();
        for i in 0..b.len() {
            let x = hs.unit_vector(b.clone(), i);
            let y = hs.circ(&unit, &x).unwrap();
            assert_eq!(y, x);
            assert_eq!(batch[i], y.coeffs().to_vec());
        }
        let _ = Laurent::one();
    }
}
