//! Trace ideals `J_λ`, Gram matrices of `S_λ`, the local transformation
//! rules inside Specht quotients, and the count of simple `H_n`-modules.

use rayon::prelude::*;
use serde::Serialize;

use super::hom::{HomBasis, HomSpaces};
use super::specht::{check_field, SpechtQuotient};
use crate::coeff::{q_binomial_poly, q_characteristic, q_factorial_poly, FractionField, IntegerLaurent, Laurent, RatFunc, Ring};
use crate::error::{Error, Result};
use crate::linalg;
use crate::symgroup::{partitions, Composition};
use crate::tableau::{row_standard, semistandard, Tableau};

/// `f_λ = [λ₁−λ₂]! [λ₂−λ₃]! ⋯ [λ_r]!`.
pub fn f_lambda_poly(lambda: &Composition) -> Laurent {
    let p = lambda.parts();
    (0..p.len()).fold(Laurent::one(), |acc, i| {
        let next = p.get(i + 1).copied().unwrap_or(0);
        acc.mul(&q_factorial_poly((p[i] - next) as u32))
    })
}

pub fn f_lambda<R: Ring>(ring: &R, lambda: &Composition) -> R::Elem {
    ring.from_laurent(&f_lambda_poly(lambda))
}

/// The tableau with constant rows `i`; represents `m_λ ∈ M_{λ;λ}`.
pub fn row_tableau(lambda: &Composition) -> Tableau {
    Tableau::new(lambda.parts().iter().enumerate().map(|(i, &l)| vec![i + 1; l]).collect())
}

/// The witness `R ∈ Tab_{λ;λ}` with `#_{ij}(R) = λ_{i+j−1} − λ_{i+j}`.
pub fn witness_tableau(lambda: &Composition) -> Tableau {
    let p = lambda.parts();
    let part = |k: usize| p.get(k).copied().unwrap_or(0);
    let r = p.len();
    let counts: Vec<Vec<usize>> = (0..r).map(|i| (0..r).map(|j| part(i + j) - part(i + j + 1)).collect()).collect();
    Tableau::from_counts(&counts)
}

fn partition_required(lambda: &Composition) -> Result<()> {
    if !lambda.is_partition() || lambda.parts().contains(&0) {
        return Err(Error::InvalidInput(format!("{lambda} is not a partition")));
    }
    Ok(())
}

/// Coordinates of `m_λ · m_T` in `M_{λ;λ}` (over ℤ[a,q^±]) for every
/// row-standard `T` of shape `λ` (in `Tab_λ` order), and for `(m_S)^*·m_T`
/// when `left` is given.
fn pairings(lambda: &Composition, left: Option<&Tableau>) -> Result<Vec<Vec<Laurent>>> {
    let n = lambda.size();
    let ones = Composition::new(vec![1; n]);
    let hs = HomSpaces::new(IntegerLaurent, n);
    let a = match left {
        None => hs.m_in(lambda, &ones, lambda)?,
        Some(s) => hs.star(&hs.m_s(s, &ones)?)?,
    };
    hs.circ_with_basis(&a, lambda)
}

/// The Hecke trace ideal `J_λ = m_λ·S_λ ⊆ S_{λ;λ} ≅ k` over ℤ[q^±], with the
/// witness of the lower bound.
#[derive(Clone, Debug, Serialize)]
pub struct TraceIdeal {
    pub lambda: Composition,
    /// Nonzero coefficients of `m_λ` in the classes of `m_λ·m_T`, deduplicated.
    pub generators: Vec<Laurent>,
    pub f: Laurent,
    pub witness: Tableau,
    /// Coefficient for `m_λ·m_{R_↓}`.
    pub witness_value: Laurent,
    /// `Π [λ_i − λ_{i+1}]!^i`.
    pub witness_expected: Laurent,
}

impl TraceIdeal {
    /// Every generator is divisible by `f_λ` in ℤ[q^±].
    pub fn divisible_by_f(&self) -> bool {
        self.generators.iter().all(|g| g.div_exact(&self.f).is_some())
    }

    /// The witness coefficient is `±q^k Π [λ_i − λ_{i+1}]!^i`.
    pub fn witness_is_unit_multiple(&self) -> bool {
        match self.witness_value.div_exact(&self.witness_expected) {
            Some(u) => u.is_monomial() && !u.has_a() && u.terms()[0].1.abs() == 1,
            None => false,
        }
    }

    /// `f_λ^r` lies in the ideal, certified through the witness.
    pub fn contains_f_power(&self) -> bool {
        let r = self.lambda.len() as u32;
        self.witness_is_unit_multiple() && self.f.pow(r).div_exact(&self.witness_expected).is_some()
    }
}

fn laurent_of(x: &RatFunc) -> Result<Laurent> {
    let d = x.den();
    if d.is_monomial() && d.terms()[0].1.abs() == 1 {
        return x.num().div_exact(d).ok_or_else(|| Error::Invariant("monomial division failed".into()));
    }
    Err(Error::Invariant(format!("coefficient {x} is not Laurent-integral")))
}

/// `J_λ` computed over ℚ(q) and certified integral.
pub fn trace_ideal(lambda: &Composition) -> Result<TraceIdeal> {
    partition_required(lambda)?;
    let quotient = SpechtQuotient::new(FractionField, lambda, lambda)?;
    let col =
        quotient.basis().position(&row_tableau(lambda)).ok_or_else(|| Error::Invariant("m_λ missing from its own hom space".into()))?;
    let rows = pairings(lambda, None)?;
    let mut generators: Vec<Laurent> = Vec::new();
    for v in &rows {
        let red = quotient.reduce_laurent(v);
        let c = laurent_of(&red[col])?;
        if !c.is_zero() && !generators.contains(&c) {
            generators.push(c);
        }
    }
    generators.sort_by_key(|g| g.to_string());
    let witness = witness_tableau(lambda);
    let ones = Composition::new(vec![1; lambda.size()]);
    let down = witness.down(lambda);
    let idx = HomBasis::get(lambda, &ones)?.position(&down).ok_or_else(|| Error::Invariant("witness lift".into()))?;
    let witness_value = laurent_of(&quotient.reduce_laurent(&rows[idx])[col])?;
    let p = lambda.parts();
    let mut witness_expected = Laurent::one();
    for i in 0..p.len() {
        let d = p[i] - p.get(i + 1).copied().unwrap_or(0);
        witness_expected = witness_expected.mul(&q_factorial_poly(d as u32).pow(i as u32 + 1));
    }
    Ok(TraceIdeal { lambda: lambda.clone(), generators, f: f_lambda_poly(lambda), witness, witness_value, witness_expected })
}

/// `G[S,T]` = coefficient of `m_λ` in the class of `(m_S)^*·m_T` in
/// `S_{λ;λ}`, for standard `S, T`.
pub fn gram_matrix<F: Ring>(ring: &F, lambda: &Composition) -> Result<Vec<Vec<F::Elem>>> {
    partition_required(lambda)?;
    check_field(ring)?;
    let quotient = SpechtQuotient::new(ring.clone(), lambda, lambda)?;
    let col = quotient.basis().position(&row_tableau(lambda)).expect("row tableau");
    let ones = Composition::new(vec![1; lambda.size()]);
    let all = row_standard(lambda);
    let standard: Vec<usize> = (0..all.len()).filter(|&i| all[i].is_semistandard()).collect();
    let basis = HomBasis::get(lambda, &ones)?;
    debug_assert_eq!(basis.tableaux(), all.as_slice());
    standard
        .par_iter()
        .map(|&i| {
            let rows = pairings(lambda, Some(&all[i]))?;
            Ok(standard.iter().map(|&j| quotient.reduce_laurent(&rows[j])[col].clone()).collect())
        })
        .collect()
}

pub fn gram_rank<F: Ring>(ring: &F, lambda: &Composition) -> Result<usize> {
    let g = gram_matrix(ring, lambda)?;
    Ok(linalg::rank(ring, &g))
}

/// `λ_i − λ_{i+1} < e` for all `i` (including the last part); every
/// partition is restricted when `e = ∞` (`None`).
pub fn is_e_restricted(lambda: &Composition, e: Option<u32>) -> bool {
    let Some(e) = e else { return true };
    let p = lambda.parts();
    (0..p.len()).all(|i| p[i] - p.get(i + 1).copied().unwrap_or(0) < e as usize)
}

/// `e = min{k : [k] = 0}`, searched up to `bound`.
pub fn q_char<R: Ring>(ring: &R, bound: u32) -> Option<u32> {
    q_characteristic(ring, bound)
}

#[derive(Clone, Debug, Serialize)]
pub struct SimpleRow {
    pub lambda: Composition,
    pub gram_rank: usize,
    pub specht_dim: usize,
    pub e_restricted: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SimpleCount {
    pub n: usize,
    pub e: Option<u32>,
    pub count: usize,
    pub table: Vec<SimpleRow>,
}

/// Simple `H_n`-modules: partitions whose Gram matrix is nonzero, with
/// `dim D_λ = rank`.
pub fn count_simples<F: Ring>(ring: &F, n: usize) -> Result<SimpleCount> {
    check_field(ring)?;
    let e = q_char(ring, n as u32);
    let table: Vec<SimpleRow> = partitions(n)
        .par_iter()
        .map(|lambda| {
            let gram_rank = gram_rank(ring, lambda)?;
            let ones = Composition::new(vec![1; n]);
            Ok(SimpleRow {
                lambda: lambda.clone(),
                gram_rank,
                specht_dim: semistandard(lambda, &ones).len(),
                e_restricted: is_e_restricted(lambda, e),
            })
        })
        .collect::<Result<_>>()?;
    let count = table.iter().filter(|r| r.gram_rank > 0).count();
    Ok(SimpleCount { n, e, count, table })
}

/// A relation `Σ c_T m_T ≡ 0`, as tableau/coefficient pairs.
pub type Relation<E> = Vec<(Tableau, E)>;

/// The echelon rows of `M^{>λ}_{λ;μ}`: a basis of the relations in `S_{λ;μ}`.
pub fn relations<F: Ring>(q: &SpechtQuotient<F>) -> Vec<Relation<F::Elem>> {
    let r = q.ring();
    q.higher()
        .rows()
        .iter()
        .map(|row| row.iter().enumerate().filter(|(_, c)| !r.is_zero(c)).map(|(i, c)| (q.basis().tableau(i).clone(), c.clone())).collect())
        .collect()
}

fn relation_vector<F: Ring>(q: &SpechtQuotient<F>, rel: &[(Tableau, F::Elem)]) -> Result<Vec<F::Elem>> {
    let r = q.ring();
    let mut v = vec![r.zero(); q.basis().len()];
    for (t, c) in rel {
        let i = q.basis().position(t).ok_or_else(|| Error::InvalidInput(format!("{t} not in Tab_{{{};{}}}", q.lambda(), q.mu())))?;
        v[i] = r.add(&v[i], c);
    }
    Ok(v)
}

fn extend_weight(mu: &Composition, len: usize) -> Vec<usize> {
    let mut v = mu.parts().to_vec();
    if v.len() < len {
        v.resize(len, 0);
    }
    v
}

/// Adding a common top row `a₁ ≤ … ≤ a_k` preserves a relation.
pub fn add_top_row_holds<F: Ring>(
    ring: &F,
    lambda: &Composition,
    mu: &Composition,
    rel: &[(Tableau, F::Elem)],
    row: &[usize],
) -> Result<bool> {
    let base = SpechtQuotient::new(ring.clone(), lambda, mu)?;
    if !base.is_zero_class(&relation_vector(&base, rel)?) {
        return Err(Error::InvalidInput("the given combination is not a relation".into()));
    }
    let top = row.iter().max().copied().unwrap_or(0);
    let mut mu_plus = extend_weight(mu, top);
    for &a in row {
        mu_plus[a - 1] += 1;
    }
    let mut shape = vec![row.len()];
    shape.extend_from_slice(lambda.parts());
    let (shape, mu_plus) = (Composition::new(shape), Composition::new(mu_plus));
    let big = SpechtQuotient::new(ring.clone(), &shape, &mu_plus)?;
    let lifted: Vec<(Tableau, F::Elem)> = rel
        .iter()
        .map(|(t, c)| {
            let mut rows: Vec<Vec<usize>> = vec![row.to_vec()];
            rows.extend(t.rows().map(|r| r.iter().map(|&x| x as usize).collect()));
            (Tableau::new(rows), c.clone())
        })
        .collect();
    Ok(big.is_zero_class(&relation_vector(&big, &lifted)?))
}

/// Joining a bar of `l` copies of `a` (at least every entry) to the bottom
/// row turns a relation into `Σ c_T [#_{ra}(T)+l; l] m_{T⁺} ≡ 0`.
pub fn add_bottom_bar_holds<F: Ring>(
    ring: &F,
    lambda: &Composition,
    mu: &Composition,
    rel: &[(Tableau, F::Elem)],
    a: usize,
    l: usize,
) -> Result<bool> {
    let base = SpechtQuotient::new(ring.clone(), lambda, mu)?;
    if !base.is_zero_class(&relation_vector(&base, rel)?) {
        return Err(Error::InvalidInput("the given combination is not a relation".into()));
    }
    if rel.iter().any(|(t, _)| t.max_entry() > a) || lambda.is_empty() {
        return Err(Error::InvalidInput("bar value must dominate every entry".into()));
    }
    let r = lambda.len();
    let mut shape = lambda.parts().to_vec();
    shape[r - 1] += l;
    let mut mu_plus = extend_weight(mu, a);
    mu_plus[a - 1] += l;
    let (shape, mu_plus) = (Composition::new(shape), Composition::new(mu_plus));
    let big = SpechtQuotient::new(ring.clone(), &shape, &mu_plus)?;
    let lifted: Vec<(Tableau, F::Elem)> = rel
        .iter()
        .map(|(t, c)| {
            let mut rows: Vec<Vec<usize>> = t.rows().map(|r| r.iter().map(|&x| x as usize).collect()).collect();
            let count = rows[r - 1].iter().filter(|&&x| x == a).count();
            rows[r - 1].extend(std::iter::repeat(a).take(l));
            let k = ring.from_laurent(&q_binomial_poly((count + l) as u32, l as u32));
            (Tableau::new(rows), ring.mul(&k, c))
        })
        .collect();
    Ok(big.is_zero_class(&relation_vector(&big, &lifted)?))
}

/// `T_i ∈ Tab_{(n−k,k);(n−l,l)}` with `#_{21}(T_i) = i`.
pub fn scalar_lemma_tableau(n: usize, k: usize, l: usize, i: usize) -> Tableau {
    let row1 = [vec![1; n - l - i], vec![2; l - k + i]].concat();
    let row2 = [vec![1; i], vec![2; k - i]].concat();
    Tableau::new(vec![row1, row2])
}

/// `m_{T_i} ≡ (−1)^i q^{C(i,2)} [k; i] m_{T_0}` in `S_{(n−k,k);(n−l,l)}`.
pub fn scalar_lemma_holds<F: Ring>(ring: &F, n: usize, k: usize, l: usize, i: usize) -> Result<bool> {
    if !(k <= l && l <= n && i <= k && k + l <= n + i.min(k) && n - l >= i) {
        return Err(Error::InvalidInput(format!("no scalar-lemma instance for n={n}, k={k}, l={l}, i={i}")));
    }
    let lambda = Composition::new(vec![n - k, k]);
    let mu = Composition::new(vec![n - l, l]);
    let q = SpechtQuotient::new(ring.clone(), &lambda, &mu)?;
    let sign = if i % 2 == 0 { 1 } else { -1 };
    let c = q_binomial_poly(k as u32, i as u32).scale(sign).shift_q((i * i.saturating_sub(1) / 2) as i32);
    let rel = vec![(scalar_lemma_tableau(n, k, l, i), ring.one()), (scalar_lemma_tableau(n, k, l, 0), ring.neg(&ring.from_laurent(&c)))];
    Ok(q.is_zero_class(&relation_vector(&q, &rel)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{Cyclotomic, FractionField};
    use num_rational::BigRational;

    fn comp(v: &[usize]) -> Composition {
        Composition::new(v.to_vec())
    }

    #[test]
    fn witness_examples() {
        assert_eq!(witness_tableau(&comp(&[6, 4, 1])), Tableau::parse("112223/1112/1").unwrap());
        assert_eq!(f_lambda_poly(&comp(&[6, 4, 1])), q_factorial_poly(2).mul(&q_factorial_poly(3)));
        assert_eq!(f_lambda_poly(&comp(&[1, 1, 1])), Laurent::one());
    }

    #[test]
    fn trace_ideal_small() {
        let j = trace_ideal(&comp(&[3])).unwrap();
        assert_eq!(j.generators, vec![q_factorial_poly(3)]);
        for l in [comp(&[2, 1]), comp(&[2, 2]), comp(&[3, 1])] {
            let j = trace_ideal(&l).unwrap();
            assert!(j.divisible_by_f() && j.contains_f_power(), "{l}");
        }
    }

    #[test]
    fn classification_at_roots_of_unity() {
        let ring = Cyclotomic::new(2, BigRational::from_integer(1.into()));
        assert_eq!(count_simples(&ring, 3).unwrap().count, 2);
        let generic = count_simples(&FractionField, 3).unwrap();
        assert_eq!(generic.count, 3);
        assert!(generic.table.iter().all(|r| r.gram_rank == r.specht_dim));
    }

    #[test]
    fn scalar_lemma_instances() {
        for n in 2..=5 {
            for l in 0..=n / 2 {
                for k in 0..=l {
                    for i in 0..=k.min(n - l) {
                        assert!(scalar_lemma_holds(&FractionField, n, k, l, i).unwrap(), "{n} {k} {l} {i}");
                    }
                }
            }
        }
    }

    #[test]
    fn local_transformations_preserve_relations() {
        use crate::symgroup::compositions;
        let ring = FractionField;
        let mut checked = 0;
        for lambda in partitions(3) {
            for mu in compositions(3) {
                let q = SpechtQuotient::new(ring.clone(), &lambda, &mu).unwrap();
                for rel in relations(&q) {
                    let top = rel.iter().map(|(t, _)| t.max_entry()).max().unwrap();
                    for row in [vec![1], vec![1, 2], vec![top + 1]] {
                        assert!(add_top_row_holds(&ring, &lambda, &mu, &rel, &row).unwrap());
                    }
                    for l in 1..=2 {
                        assert!(add_bottom_bar_holds(&ring, &lambda, &mu, &rel, top, l).unwrap());
                    }
                    checked += 1;
                }
            }
        }
        assert!(checked > 10);
    }
}
