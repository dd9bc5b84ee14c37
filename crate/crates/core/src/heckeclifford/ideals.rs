//! The ideals of `k` and `Γ_λ` that decide which `S^c_{λ;λ}` carry simple
//! `H^c_n`-modules: `K_n`, `Θ_λ`, `Δ_λ` and the trace ideal `J^c_λ`.

use rayon::prelude::*;
use serde::Serialize;

use super::clifford::clifford_product;
use super::gamma::{GammaAlgebra, GammaElem};
use super::hom::SuperHomSpaces;
use super::specht::SuperSpecht;
use crate::coeff::{even_ratio_power_poly, q2_characteristic, q2_int_poly, q_int_poly, IntegerLaurent, Laurent, Ring, RingDescriptor};
use crate::error::{Error, Result};
use crate::hecke::classify::{is_e_restricted, q_char};
use crate::linalg::{left_kernel, Subspace};
use crate::symgroup::{partitions, Composition};
use crate::tableau::{CircledTableau, Tableau};

/// Generators `(a(q−1)/[2])^s [m]!`, `0 ≤ s ≤ m/2`, of `K_m`; `K_m = (1)`
/// for `m ≤ 0`.
pub fn k_generators(m: i64) -> Vec<Laurent> {
    if m <= 0 {
        return vec![Laurent::one()];
    }
    let m = m as u32;
    (0..=m / 2).map(|s| even_ratio_power_poly(m, s)).collect()
}

/// Over a field, `K_m` is either `0` or everything.
pub fn k_is_unit<F: Ring>(ring: &F, m: i64) -> bool {
    k_generators(m).iter().any(|g| !ring.is_zero(&ring.from_laurent(g)))
}

/// `element = Σ coeff · generators[index]` with coefficients in `ℤ[a,q^±]`,
/// proving that `element` lies in the ideal spanned by the generators.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub element: Laurent,
    pub terms: Vec<(Laurent, usize)>,
}

impl Certificate {
    pub fn holds(&self, generators: &[Laurent]) -> bool {
        let sum = self.terms.iter().fold(Laurent::zero(), |acc, (c, i)| acc.add(&c.mul(&generators[*i])));
        sum == self.element
    }
}

/// `K_n ⊆ K_{n−1}`: `g_s(n) = [n] g_s(n−1)` for `2s < n`, and
/// `g_s(n) = a(q−1)⟦n/2⟧ g_{s−1}(n−1)` for `2s = n`.
pub fn k_descent_certificates(n: u32) -> Vec<Certificate> {
    let gens = k_generators(n as i64);
    gens.into_iter()
        .enumerate()
        .map(|(s, g)| {
            let term = if 2 * s < n as usize {
                (q_int_poly(n), s)
            } else {
                let c = Laurent::a().mul(&Laurent::q().sub(&Laurent::one())).mul(&q2_int_poly(n / 2));
                (c, s - 1)
            };
            Certificate { element: g, terms: vec![term] }
        })
        .collect()
}

/// `a⟦n⟧K_{n−1} ⊆ K_n`, read off from `m_n c^P γ^L_n m_n` with
/// `P = {1, …, 2s+1}` expanded once through `γ^L_n m_n = m_n γ^R_n` and once
/// through `c^P c_j = ±a^{[j∈P]} c^{P△j}`.
pub fn k_ascent_certificates(n: u32) -> Vec<Certificate> {
    let lower = k_generators(n as i64 - 1);
    let an = Laurent::a().mul(&q2_int_poly(n));
    lower
        .iter()
        .enumerate()
        .map(|(s, g)| {
            let p = (1u32 << (2 * s + 1)) - 1;
            let terms = (1..=n as usize)
                .map(|j| {
                    let prod = clifford_product(p, 1 << (j - 1));
                    let mut c = Laurent::q_pow(j as i32 - 1);
                    if prod.squares != 0 {
                        c = c.mul(&Laurent::a());
                    }
                    if prod.negative {
                        c = c.neg();
                    }
                    (c, prod.result.count_ones() as usize / 2)
                })
                .collect();
            Certificate { element: an.mul(g), terms }
        })
        .collect()
}

/// Pairs `i < j` (1-based) of equal nonzero parts; `Θ_λ` is generated by
/// the `γ_i − γ_j`.
pub fn theta_pairs(lambda: &Composition) -> Vec<(usize, usize)> {
    let p = lambda.parts();
    (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > 0 && p[i] == p[j])
        .map(|(i, j)| (i + 1, j + 1))
        .collect()
}

pub fn theta_generators<R: Ring>(g: &GammaAlgebra<R>) -> Result<Vec<GammaElem<R>>> {
    theta_pairs(g.lambda()).into_iter().map(|(i, j)| Ok(g.sub(&g.gamma(i)?, &g.gamma(j)?))).collect()
}

fn gamma_or_zero<R: Ring>(g: &GammaAlgebra<R>, i: usize) -> Result<GammaElem<R>> {
    if i > g.lambda().len() {
        Ok(g.zero())
    } else {
        g.gamma(i)
    }
}

/// `Δ_{λ;i} = K_d ⊕ K_dγ_{i+1} ⊕ K_{d−1}δ ⊕ K_{d−1}δγ_{i+1}` with
/// `d = λ_i − λ_{i+1}` and `δ = γ_i − q^dγ_{i+1}`, as `(K-index, element)`.
pub fn delta_summands<R: Ring>(g: &GammaAlgebra<R>, i: usize) -> Result<Vec<(i64, GammaElem<R>)>> {
    let lambda = g.lambda();
    let next = if i < lambda.len() { lambda.part(i) } else { 0 };
    let d = lambda.part(i - 1) as i64 - next as i64;
    let r = g.ring();
    let up = gamma_or_zero(g, i + 1)?;
    let delta = g.sub(&g.gamma(i)?, &g.scale(&r.q_pow(d as i32), &up));
    Ok(vec![(d, g.one()), (d, up.clone()), (d - 1, delta.clone()), (d - 1, g.mul(&delta, &up))])
}

/// Module generators of `Δ_{λ;i}` over the coefficient ring.
pub fn delta_factor_generators<R: Ring>(g: &GammaAlgebra<R>, i: usize) -> Result<Vec<GammaElem<R>>> {
    let r = g.ring();
    let mut out = Vec::new();
    for (m, x) in delta_summands(g, i)? {
        for k in k_generators(m) {
            let y = g.scale(&r.from_laurent(&k), &x);
            if !g.is_zero(&y) {
                out.push(y);
            }
        }
    }
    Ok(out)
}

/// Whether every factor `Δ_{λ;i}` has a generator `±q^k`, so that
/// `Δ_λ = Γ_λ` over `ℤ[a,q^±]` itself.
pub fn delta_is_whole_integrally(lambda: &Composition) -> Result<bool> {
    let g = GammaAlgebra::new(IntegerLaurent, lambda);
    for i in 1..=g.lambda().len() {
        let unit =
            delta_factor_generators(&g, i)?.iter().any(|x| x[1..].iter().all(|c| c.is_zero()) && x[0].is_monomial() && !x[0].has_a());
        if !unit {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Θ_λ`, `Δ_λ` and their neighbours inside `Γ_λ` over a field.
#[derive(Clone, Debug)]
pub struct IdealData<F: Ring> {
    pub gamma: GammaAlgebra<F>,
    pub theta: Subspace<F>,
    pub delta: Subspace<F>,
}

impl<F: Ring> IdealData<F> {
    pub fn new(ring: F, lambda: &Composition) -> Result<Self> {
        if !lambda.is_partition() {
            return Err(Error::InvalidInput(format!("{lambda} is not a partition")));
        }
        crate::hecke::check_field(&ring)?;
        let gamma = GammaAlgebra::new(ring.clone(), lambda);
        let theta = gamma.ideal(&theta_generators(&gamma)?)?;
        let mut factors = Vec::new();
        for i in 1..=lambda.len() {
            let mut s = Subspace::new(ring.clone(), gamma.dim())?;
            s.extend(delta_factor_generators(&gamma, i)?);
            factors.push(s);
        }
        // Δ_λ = Δ_{λ;r} ⋯ Δ_{λ;1}
        let refs: Vec<&Subspace<F>> = factors.iter().rev().collect();
        let delta = gamma.product_span(&refs)?;
        Ok(IdealData { gamma, theta, delta })
    }

    pub fn lambda(&self) -> &Composition {
        self.gamma.lambda()
    }

    /// A product `γ_j x` or `x γ_j` leaving `Δ_λ`, as `(j, left?, x)`.
    pub fn delta_closure_failure(&self) -> Result<Option<(usize, bool, GammaElem<F>)>> {
        let g = &self.gamma;
        for j in 1..=g.lambda().len() {
            let gj = g.gamma(j)?;
            for x in self.delta.rows() {
                if !self.delta.contains(&g.mul(&gj, x)) {
                    return Ok(Some((j, true, x.clone())));
                }
                if !self.delta.contains(&g.mul(x, &gj)) {
                    return Ok(Some((j, false, x.clone())));
                }
            }
        }
        Ok(None)
    }

    /// `Δ_λ^r`, `r` the number of parts.
    pub fn delta_power(&self) -> Result<Subspace<F>> {
        let refs: Vec<&Subspace<F>> = (0..self.lambda().len()).map(|_| &self.delta).collect();
        self.gamma.product_span(&refs)
    }

    /// `Irr^{Δ+Θ}_Θ(Γ_λ) ≠ ∅`. `Γ_λ/Θ_λ` has a unique maximal two-sided
    /// ideal, so the image of `Δ_λ+Θ_λ` escapes it iff it is everything,
    /// i.e. iff `1 ∈ Δ_λ+Θ_λ` while `Θ_λ ≠ Γ_λ`.
    pub fn simple_nonzero(&self) -> bool {
        !self.theta.is_full() && self.delta.sum(&self.theta).contains(&self.gamma.one())
    }

    /// The same question through the radical of `Γ_λ/Θ_λ`.
    pub fn escapes_radical(&self) -> Result<bool> {
        if self.theta.is_full() {
            return Ok(false);
        }
        let quotient = self.gamma.to_algebra()?.quotient(&self.theta)?;
        let rad = quotient.radical()?;
        Ok(self.delta.rows().iter().any(|x| !rad.contains(&self.theta.quotient_coords(x))))
    }
}

/// `J^c_λ ⊆ Γ_λ`: the preimage under `Γ_λ ↠ S^c_{λ;λ}`, `γ ↦ m_λγ`, of the
/// classes of `m_λ m_T` for `T ∈ Tab^c_λ`.
#[derive(Clone, Debug)]
pub struct SuperTraceIdeal<F: Ring> {
    pub data: IdealData<F>,
    /// The kernel of `Γ_λ ↠ S^c_{λ;λ}`.
    pub kernel: Subspace<F>,
    pub jc: Subspace<F>,
    pub specht_dim: usize,
}

impl<F: Ring> SuperTraceIdeal<F> {
    pub fn new(ring: F, lambda: &Composition) -> Result<Self> {
        let data = IdealData::new(ring.clone(), lambda)?;
        let specht = SuperSpecht::new(ring.clone(), lambda, lambda)?;
        let masks: Vec<Vec<usize>> = (0..data.gamma.dim() as u32).map(|m| data.gamma.part_indices(m)).collect();
        let (phis, products) = if ring.descriptor() == RingDescriptor::FractionField {
            let (a, b) = diagonal_data(&SuperHomSpaces::new(IntegerLaurent, lambda.size()), lambda, &masks)?;
            let map = |vs: Vec<Vec<Laurent>>| -> Vec<Vec<F::Elem>> {
                vs.iter().map(|v| v.iter().map(|c| ring.from_laurent(c)).collect()).collect()
            };
            (map(a), map(b))
        } else {
            diagonal_data(&SuperHomSpaces::new(ring.clone(), lambda.size()), lambda, &masks)?
        };
        let d = specht.dim();
        let dim = data.gamma.dim();
        let images: Vec<Vec<F::Elem>> = phis.iter().map(|v| specht.coords(v)).collect();
        let mut kernel = Subspace::new(ring.clone(), dim)?;
        if d == 0 {
            kernel.extend((0..dim as u32).map(|m| data.gamma.monomial(m)));
        } else {
            kernel.extend(left_kernel(&ring, &images));
        }
        if dim - kernel.rank() != d {
            return Err(Error::Invariant(format!("Γ_{lambda} does not map onto S^c_{{{lambda};{lambda}}}")));
        }
        // [φ(γ^P) | e_P] reduces a class to [0 | −preimage]
        let mut aug = Subspace::with_priority(ring.clone(), (0..d + dim).collect())?;
        for (m, img) in images.iter().enumerate() {
            let mut v = img.clone();
            v.extend(data.gamma.monomial(m as u32));
            aug.insert(v);
        }
        let mut jc = kernel.clone();
        for x in &products {
            let mut v = specht.coords(x);
            v.extend(data.gamma.zero());
            let red = aug.reduce(&v);
            if red[..d].iter().any(|c| !ring.is_zero(c)) {
                return Err(Error::Invariant("a class of S^c_{λ;λ} has no preimage in Γ_λ".into()));
            }
            jc.insert(red[d..].iter().map(|c| ring.neg(c)).collect());
        }
        Ok(SuperTraceIdeal { data, kernel, jc, specht_dim: d })
    }

    /// `Δ_λ^r + Θ_λ ⊆ J^c_λ ⊆ Δ_λ + Θ_λ`.
    pub fn sandwich_holds(&self) -> Result<bool> {
        let lower = self.data.delta_power()?.sum(&self.data.theta);
        let upper = self.data.delta.sum(&self.data.theta);
        Ok(lower.is_subspace_of(&self.jc) && self.jc.is_subspace_of(&upper))
    }

    /// The kernel of `Γ_λ ↠ S^c_{λ;λ}` is the ideal generated by `Θ_λ`.
    pub fn kernel_is_theta(&self) -> bool {
        self.kernel.equals(&self.data.theta)
    }
}

/// `(m_λ·γ^P)_P` and `(m_λ m_T)_{T ∈ Tab^c_λ}` in `Tab^c_{λ;λ}` coordinates.
#[allow(clippy::type_complexity)]
fn diagonal_data<R: Ring>(
    hs: &SuperHomSpaces<R>,
    lambda: &Composition,
    masks: &[Vec<usize>],
) -> Result<(Vec<Vec<R::Elem>>, Vec<Vec<R::Elem>>)> {
    let id = hs.identity(lambda)?;
    let mut phis = Vec::with_capacity(masks.len());
    for word in masks {
        let mut x = id.clone();
        for &i in word {
            x = hs.gamma_right(&x, i)?;
        }
        phis.push(x.into_coeffs());
    }
    let n = lambda.size();
    let ones = Composition::new(vec![1; n]);
    let column: Vec<Vec<usize>> = lambda.parts().iter().enumerate().flat_map(|(i, &p)| std::iter::repeat(vec![i + 1]).take(p)).collect();
    let m_lambda = hs.m_s(&CircledTableau::from_underlying(&Tableau::new(column), &[]), lambda)?;
    let basis = hs.basis(lambda, &ones)?;
    let products =
        (0..basis.len()).map(|t| Ok(hs.circ(&m_lambda, &hs.unit_vector(basis.clone(), t))?.into_coeffs())).collect::<Result<_>>()?;
    Ok((phis, products))
}

/// `λ_i = λ_j` for `i ≠ j` (nonzero parts) only when `e₂ | λ_i`.
pub fn is_e2_strict(lambda: &Composition, e2: Option<u32>) -> bool {
    theta_pairs(lambda).iter().all(|&(i, _)| e2.is_some_and(|e2| lambda.part(i - 1) % e2 as usize == 0))
}

/// `λ_i − λ_{i+1} < e` where `e₂ | λ_i`, and `≤ e` elsewhere.
pub fn is_super_restricted(lambda: &Composition, e: Option<u32>, e2: Option<u32>) -> bool {
    let Some(e) = e else { return true };
    let p = lambda.parts();
    (0..p.len()).all(|i| {
        let d = p[i] - p.get(i + 1).copied().unwrap_or(0);
        let divisible = e2.is_some_and(|e2| p[i] % e2 as usize == 0);
        if divisible {
            d < e as usize
        } else {
            d <= e as usize
        }
    })
}

/// The classifying condition predicted for `λ` over `ring`: `e`-restricted
/// when `2a = 0`; otherwise `e`-restricted `e₂`-strict, with `e = 2p`
/// (`∞` in characteristic 0) when `q = −1`.
pub fn predicted_simple<F: Ring>(ring: &F, lambda: &Composition) -> bool {
    let n = lambda.size() as u32;
    let e = q_char(ring, n);
    if ring.is_zero(&ring.mul(&ring.from_int(2), &ring.a())) {
        return is_e_restricted(lambda, e);
    }
    let e2 = q2_characteristic(ring, n);
    let e = if ring.is_zero(&ring.add(&ring.q(), &ring.one())) {
        match ring.characteristic() {
            0 => None,
            p => u32::try_from(2 * p).ok().filter(|&k| k <= n),
        }
    } else {
        e
    };
    is_super_restricted(lambda, e, e2) && is_e2_strict(lambda, e2)
}

#[derive(Clone, Debug, Serialize)]
pub struct SuperSimpleRow {
    pub lambda: Composition,
    pub strict: bool,
    /// The predicted classifying condition (see [`predicted_simple`]).
    pub e_restricted: bool,
    pub simple_nonzero: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuperSimpleCount {
    pub n: usize,
    pub e: Option<u32>,
    pub e2: Option<u32>,
    pub two_a_zero: bool,
    pub count: usize,
    pub predicted: usize,
    pub table: Vec<SuperSimpleRow>,
}

/// `|Irr(H^c_n)/Π|`: partitions with `Irr^{Δ+Θ}_Θ(Γ_λ) ≠ ∅`.
pub fn count_super_simples<F: Ring>(ring: &F, n: usize) -> Result<SuperSimpleCount> {
    crate::hecke::check_field(ring)?;
    let table: Vec<SuperSimpleRow> = partitions(n)
        .par_iter()
        .map(|lambda| {
            let data = IdealData::new(ring.clone(), lambda)?;
            Ok(SuperSimpleRow {
                lambda: lambda.clone(),
                strict: lambda.is_strict_partition(),
                e_restricted: predicted_simple(ring, lambda),
                simple_nonzero: data.simple_nonzero(),
            })
        })
        .collect::<Result<_>>()?;
    Ok(SuperSimpleCount {
        n,
        e: q_char(ring, n as u32),
        e2: q2_characteristic(ring, n as u32),
        two_a_zero: ring.is_zero(&ring.mul(&ring.from_int(2), &ring.a())),
        count: table.iter().filter(|r| r.simple_nonzero).count(),
        predicted: table.iter().filter(|r| r.e_restricted).count(),
        table,
    })
}

/// Partitions with `S^c_{λ;λ} ≠ 0`, i.e. `Γ_λ/Θ_λ ≠ 0`.
pub fn count_nonzero_diagonal<F: Ring>(ring: &F, n: usize) -> Result<usize> {
    let mut count = 0;
    for lambda in partitions(n) {
        if !IdealData::new(ring.clone(), &lambda)?.theta.is_full() {
            count += 1;
        }
    }
    Ok(count)
}
