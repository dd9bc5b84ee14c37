//! `S^c_{λ;μ} = M^c_{λ;μ} / Σ_{ν>λ} M^c_{ν;μ} ∘_ν M^c_{λ;ν}` over a field.

use std::collections::HashMap;
use std::sync::Arc;

use super::hom::{SuperHomBasis, SuperHomElem, SuperHomSpaces};
use super::module::Vector;
use crate::coeff::{FiniteField, IntegerLaurent, Ring, RingDescriptor};
use crate::error::{Error, Result};
use crate::hecke::LayerIndex;
use crate::linalg::Subspace;
use crate::symgroup::Composition;
use crate::tableau::{CircledTableau, Tableau};

/// Feeds every `m_R ∘_ν m_S` (`R ∈ Tab^c_{ν;μ}`, `S ∈ Tab^c_{λ;ν}`) to `f`
/// until it returns `false`; returns whether it was stopped.
///
/// For fixed `S` the vectors `T_u c^P m_S` (`u ∈ D_ν`) are shared by all `R`,
/// since `m_R = Σ q^k T_{d(T)} c^{P(T)} m_ν` over the expansion of `R`.
pub fn for_each_layer_product<R: Ring>(
    hs: &SuperHomSpaces<R>,
    lambda: &Composition,
    mu: &Composition,
    nu: &Composition,
    mut f: impl FnMut(SuperHomElem<R>) -> Result<bool>,
) -> Result<bool> {
    let outer = hs.basis(nu, mu)?;
    let inner = hs.basis(lambda, nu)?;
    if outer.is_empty() || inner.is_empty() {
        return Ok(false);
    }
    let r = hs.ring();
    let m = hs.module(lambda)?;
    let cnu = outer.coords().clone();
    let g = cnu.group().clone();
    let n = lambda.size();
    let qpow: Vec<R::Elem> = (0..=n as i32).map(|k| r.q_pow(k)).collect();
    for s in 0..inner.len() {
        let vs = hs.embed(&hs.unit_vector(inner.clone(), s))?;
        let mut orbit: HashMap<u32, Vec<Vector<R>>> = HashMap::new();
        for i in 0..outer.len() {
            let mut acc = m.zero();
            for &(t, k) in outer.expansion(i) {
                let p = cnu.position_mask(t);
                let (_, u) = cnu.split(t);
                let z = orbit.entry(p).or_insert_with(|| {
                    let mut z: Vec<Vector<R>> = Vec::with_capacity(cnu.num_reps());
                    for &w in cnu.reps() {
                        z.push(if w == g.identity() {
                            m.left_clifford(p, &vs)
                        } else {
                            let i = (1..n).find(|&i| g.length(g.left_s(w, i)) < g.length(w)).expect("left descent");
                            let prev = cnu.rep_position(g.left_s(w, i)).expect("D_ν is closed under left prefixes");
                            m.left_gen(i, &z[prev])
                        });
                    }
                    z
                });
                for (o, y) in acc.iter_mut().zip(&z[u]) {
                    if !r.is_zero(y) {
                        *o = r.add(o, &r.mul(&qpow[k as usize], y));
                    }
                }
            }
            if !f(hs.from_module(lambda, mu, &acc)?)? {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Large prime with generic-looking `q`, `a` used to certify that a span is
/// already everything over `ℚ(a,q)`: ranks only drop under specialization.
fn probe_field() -> FiniteField {
    FiniteField::new(2_147_483_647, 48_271, 16_807)
}

/// `S^c_{λ;μ}` over a field: `M^c_{λ;μ}` modulo an echelonised `M^{c>λ}_{λ;μ}`.
#[derive(Clone, Debug)]
pub struct SuperSpecht<F: Ring> {
    basis: Arc<SuperHomBasis>,
    higher: Subspace<F>,
}

impl<F: Ring> SuperSpecht<F> {
    pub fn new(ring: F, lambda: &Composition, mu: &Composition) -> Result<Self> {
        Self::with_index(ring, lambda, mu, LayerIndex::Partitions)
    }

    pub fn with_index(ring: F, lambda: &Composition, mu: &Composition, index: LayerIndex) -> Result<Self> {
        Self::above_layers(ring, lambda, mu, &index.above(lambda))
    }

    /// `M^c_{λ;μ}` modulo the layers `ν ∈ nus`. Over `ℚ(a,q)` the products
    /// are computed over `ℤ[a,q^±]` and mapped in, after a probe over a
    /// large prime field has had a chance to show the quotient is zero.
    pub fn above_layers(ring: F, lambda: &Composition, mu: &Composition, nus: &[Composition]) -> Result<Self> {
        crate::hecke::check_field(&ring)?;
        let n = lambda.size();
        let basis = SuperHomBasis::get(lambda, mu)?;
        let mut higher = Subspace::with_priority(ring.clone(), basis.pivot_order())?;
        if ring.descriptor() == RingDescriptor::FractionField {
            let pf = probe_field();
            let probe = Subspace::with_priority(pf.clone(), basis.pivot_order())?;
            let probe = fill_into(probe, &SuperHomSpaces::new(pf, n), lambda, mu, nus, |c| *c)?;
            if probe.is_full() {
                for i in 0..basis.len() {
                    let mut e = vec![ring.zero(); basis.len()];
                    e[i] = ring.one();
                    higher.insert(e);
                }
            } else {
                let hs = SuperHomSpaces::new(IntegerLaurent, n);
                higher = fill_into(higher, &hs, lambda, mu, nus, |c| ring.from_laurent(c))?;
            }
        } else {
            let hs = SuperHomSpaces::new(ring.clone(), n);
            higher = fill_into(higher, &hs, lambda, mu, nus, |c| c.clone())?;
        }
        Ok(SuperSpecht { basis, higher })
    }

    pub fn ring(&self) -> &F {
        self.higher.ring()
    }

    pub fn basis(&self) -> &Arc<SuperHomBasis> {
        &self.basis
    }

    pub fn lambda(&self) -> &Composition {
        self.basis.lambda()
    }

    pub fn mu(&self) -> &Composition {
        self.basis.mu()
    }

    pub fn dim(&self) -> usize {
        self.higher.codim()
    }

    pub fn higher(&self) -> &Subspace<F> {
        &self.higher
    }

    /// Indices into `Tab^c_{λ;μ}` of the classes forming the quotient basis.
    pub fn free_tableaux(&self) -> Vec<usize> {
        self.higher.free_columns()
    }

    pub fn reduce(&self, x: &[F::Elem]) -> Vec<F::Elem> {
        self.higher.reduce(x)
    }

    pub fn coords(&self, x: &[F::Elem]) -> Vec<F::Elem> {
        self.higher.quotient_coords(x)
    }

    pub fn is_zero_class(&self, x: &[F::Elem]) -> bool {
        self.higher.contains(x)
    }

    pub fn equivalent(&self, x: &[F::Elem], y: &[F::Elem]) -> bool {
        let r = self.ring();
        let d: Vec<F::Elem> = x.iter().zip(y).map(|(a, b)| r.sub(a, b)).collect();
        self.is_zero_class(&d)
    }
}

/// A relation `Σ c_T m_T ≡ 0` in `S^c_{λ;μ}`, as tableau/coefficient pairs.
pub type SuperRelation<E> = Vec<(CircledTableau, E)>;

/// The echelon rows of `M^{c>λ}_{λ;μ}`.
pub fn super_relations<F: Ring>(s: &SuperSpecht<F>) -> Vec<SuperRelation<F::Elem>> {
    let r = s.ring();
    s.higher()
        .rows()
        .iter()
        .map(|row| row.iter().enumerate().filter(|(_, c)| !r.is_zero(c)).map(|(i, c)| (s.basis().tableau(i).clone(), c.clone())).collect())
        .collect()
}

fn super_relation_vector<F: Ring>(s: &SuperSpecht<F>, rel: &[(CircledTableau, F::Elem)]) -> Result<Vec<F::Elem>> {
    let r = s.ring();
    let mut v = vec![r.zero(); s.basis().len()];
    for (t, c) in rel {
        let i = s.basis().position(t).ok_or_else(|| Error::InvalidInput(format!("{t} not in Tab^c_{{{};{}}}", s.lambda(), s.mu())))?;
        v[i] = r.add(&v[i], c);
    }
    Ok(v)
}

/// Adding a common uncircled top row `a₁ ≤ … ≤ a_k` preserves a relation.
pub fn super_add_top_row_holds<F: Ring>(
    ring: &F,
    lambda: &Composition,
    mu: &Composition,
    rel: &[(CircledTableau, F::Elem)],
    row: &[usize],
) -> Result<bool> {
    let base = SuperSpecht::new(ring.clone(), lambda, mu)?;
    if !base.is_zero_class(&super_relation_vector(&base, rel)?) {
        return Err(Error::InvalidInput("the given combination is not a relation".into()));
    }
    if row.windows(2).any(|w| w[0] > w[1]) || row.contains(&0) {
        return Err(Error::InvalidInput("the new row must be weakly increasing and positive".into()));
    }
    let top = row.iter().max().copied().unwrap_or(0);
    let mut mu_plus = mu.parts().to_vec();
    if mu_plus.len() < top {
        mu_plus.resize(top, 0);
    }
    for &a in row {
        mu_plus[a - 1] += 1;
    }
    let mut shape = vec![row.len()];
    shape.extend_from_slice(lambda.parts());
    let (shape, mu_plus) = (Composition::new(shape), Composition::new(mu_plus));
    let big = SuperSpecht::new(ring.clone(), &shape, &mu_plus)?;
    let lifted: Vec<(CircledTableau, F::Elem)> = rel
        .iter()
        .map(|(t, c)| {
            let mut rows: Vec<Vec<usize>> = vec![row.to_vec()];
            rows.extend(t.underlying().rows().map(|r| r.iter().map(|&x| x as usize).collect()));
            let circles: Vec<usize> = t.circled_positions().iter().map(|&k| k + row.len()).collect();
            (CircledTableau::from_underlying(&Tableau::new(rows), &circles), c.clone())
        })
        .collect();
    Ok(big.is_zero_class(&super_relation_vector(&big, &lifted)?))
}

fn fill_into<R: Ring, F: Ring>(
    mut target: Subspace<F>,
    hs: &SuperHomSpaces<R>,
    lambda: &Composition,
    mu: &Composition,
    nus: &[Composition],
    map: impl Fn(&R::Elem) -> F::Elem,
) -> Result<Subspace<F>> {
    for nu in nus {
        if target.is_full() {
            break;
        }
        for_each_layer_product(hs, lambda, mu, nu, |x| {
            target.insert(x.coeffs().iter().map(&map).collect());
            Ok(!target.is_full())
        })?;
    }
    Ok(target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::FractionField;
    use crate::symgroup::{compositions, partitions};
    use crate::tableau::shifted_semistandard;

    fn comp(v: &[usize]) -> Composition {
        Composition::new(v.to_vec())
    }

    #[test]
    fn dimensions_match_shifted_counts_n3() {
        for lambda in compositions(3) {
            for mu in compositions(3) {
                let s = SuperSpecht::new(FractionField, &lambda, &mu).unwrap();
                assert_eq!(s.dim(), shifted_semistandard(&lambda, &mu).len(), "{lambda} {mu}");
            }
        }
    }

    #[test]
    fn partition_and_composition_layers_agree() {
        let f = &probe_field();
        for lambda in compositions(3) {
            let mu = comp(&[1, 1, 1]);
            let a = SuperSpecht::with_index(f.clone(), &lambda, &mu, LayerIndex::Partitions).unwrap();
            let b = SuperSpecht::with_index(f.clone(), &lambda, &mu, LayerIndex::Compositions).unwrap();
            assert!(a.higher().equals(b.higher()), "{lambda}");
        }
    }

    #[test]
    fn diagonal_quotients() {
        for lambda in partitions(4) {
            let s = SuperSpecht::new(FractionField, &lambda, &lambda).unwrap();
            let want = if lambda.is_strict_partition() { 1 << lambda.num_nonzero() } else { 0 };
            assert_eq!(s.dim(), want, "{lambda}");
        }
    }

    #[test]
    fn circle_moves_between_rows() {
        for (m, k, a, b) in [(2, 1, "1'2/2", "12/2'"), (3, 1, "1'22/2", "122/2'"), (2, 2, "11'/22", "11/22'")] {
            let lambda = comp(&[m, k]);
            let mu = comp(&[k, m]);
            let s = SuperSpecht::new(FractionField, &lambda, &mu).unwrap();
            let unit = |t: &str| {
                let i = s.basis().position(&CircledTableau::parse(t).unwrap()).unwrap();
                let mut v = vec![FractionField.zero(); s.basis().len()];
                v[i] = FractionField.one();
                v
            };
            assert!(s.equivalent(&unit(a), &unit(b)), "{a} ≢ {b}");
        }
    }

    #[test]
    fn relations_survive_a_new_top_row() {
        let f = probe_field();
        let mut checked = 0;
        for n in 1..=3 {
            for lambda in compositions(n) {
                for mu in compositions(n) {
                    let s = SuperSpecht::new(f.clone(), &lambda, &mu).unwrap();
                    for rel in super_relations(&s).iter().take(3) {
                        for row in [vec![1], vec![2], vec![4], vec![1, 1], vec![1, 3]] {
                            if n + row.len() > 4 {
                                continue;
                            }
                            assert!(super_add_top_row_holds(&f, &lambda, &mu, rel, &row).unwrap(), "{lambda} {mu} {row:?}");
                            checked += 1;
                        }
                    }
                }
            }
        }
        assert!(checked > 100, "only {checked} instances");
    }
}
