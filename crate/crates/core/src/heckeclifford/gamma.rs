//! `Γ_λ`: the superalgebra generated by odd `γ_1, …, γ_r` with
//! `γ_iγ_j = −γ_jγ_i` and `γ_i² = a⟦λ_i⟧`, where `γ_i = 0` for `λ_i = 0`.

use crate::cellcheck::FiniteAlgebra;
use crate::coeff::{q2_integer, Ring};
use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::symgroup::Composition;

use super::clifford::{clifford_product, indices, mask_of};

/// Elements are coordinate vectors over the monomials `γ^P`; bit `j` of
/// `P` stands for the `j`-th nonzero part.
#[derive(Clone, Debug)]
pub struct GammaAlgebra<R: Ring> {
    ring: R,
    lambda: Composition,
    parts: Vec<usize>,
    squares: Vec<R::Elem>,
}

pub type GammaElem<R> = Vec<<R as Ring>::Elem>;

impl<R: Ring> GammaAlgebra<R> {
    pub fn new(ring: R, lambda: &Composition) -> Self {
        let parts: Vec<usize> = (1..=lambda.len()).filter(|&i| lambda.part(i - 1) > 0).collect();
        let squares = parts.iter().map(|&i| ring.mul(&ring.a(), &q2_integer(&ring, lambda.part(i - 1) as u32))).collect();
        GammaAlgebra { ring, lambda: lambda.clone(), parts, squares }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn lambda(&self) -> &Composition {
        &self.lambda
    }

    /// Number of nonzero parts.
    pub fn rank(&self) -> usize {
        self.parts.len()
    }

    pub fn dim(&self) -> usize {
        1 << self.rank()
    }

    /// 1-based part indices of the generators in mask `P`.
    pub fn part_indices(&self, mask: u32) -> Vec<usize> {
        indices(mask).into_iter().map(|j| self.parts[j - 1]).collect()
    }

    pub fn zero(&self) -> GammaElem<R> {
        vec![self.ring.zero(); self.dim()]
    }

    pub fn one(&self) -> GammaElem<R> {
        self.monomial(0)
    }

    pub fn monomial(&self, mask: u32) -> GammaElem<R> {
        let mut v = self.zero();
        v[mask as usize] = self.ring.one();
        v
    }

    /// `γ_i`, 1-based over all parts.
    pub fn gamma(&self, i: usize) -> Result<GammaElem<R>> {
        if i == 0 || i > self.lambda.len() {
            return Err(Error::InvalidInput(format!("no part {i} in {}", self.lambda)));
        }
        Ok(match self.parts.iter().position(|&p| p == i) {
            Some(j) => self.monomial(1 << j),
            None => self.zero(),
        })
    }

    /// `γ_{i_1}⋯γ_{i_k}` for increasing part indices, all nonzero parts.
    pub fn word(&self, parts: &[usize]) -> Result<GammaElem<R>> {
        let gens: Vec<usize> = parts
            .iter()
            .map(|i| self.parts.iter().position(|p| p == i).map(|j| j + 1))
            .collect::<Option<_>>()
            .ok_or_else(|| Error::InvalidInput(format!("{parts:?} are not nonzero parts of {}", self.lambda)))?;
        if gens.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidInput("part indices must increase".into()));
        }
        Ok(self.monomial(mask_of(&gens)))
    }

    pub fn mul(&self, x: &[R::Elem], y: &[R::Elem]) -> GammaElem<R> {
        let r = &self.ring;
        let mut out = self.zero();
        for (p, xp) in x.iter().enumerate().filter(|(_, c)| !r.is_zero(c)) {
            for (s, ys) in y.iter().enumerate().filter(|(_, c)| !r.is_zero(c)) {
                let prod = clifford_product(p as u32, s as u32);
                let mut c = r.mul(xp, ys);
                for j in indices(prod.squares) {
                    c = r.mul(&c, &self.squares[j - 1]);
                }
                if prod.negative {
                    c = r.neg(&c);
                }
                let o = &mut out[prod.result as usize];
                *o = r.add(o, &c);
            }
        }
        out
    }

    pub fn add(&self, x: &[R::Elem], y: &[R::Elem]) -> GammaElem<R> {
        x.iter().zip(y).map(|(a, b)| self.ring.add(a, b)).collect()
    }

    pub fn sub(&self, x: &[R::Elem], y: &[R::Elem]) -> GammaElem<R> {
        x.iter().zip(y).map(|(a, b)| self.ring.sub(a, b)).collect()
    }

    pub fn scale(&self, c: &R::Elem, x: &[R::Elem]) -> GammaElem<R> {
        x.iter().map(|a| self.ring.mul(c, a)).collect()
    }

    pub fn is_zero(&self, x: &[R::Elem]) -> bool {
        x.iter().all(|c| self.ring.is_zero(c))
    }

    pub fn to_algebra(&self) -> Result<FiniteAlgebra<R>> {
        let parity = (0..self.dim() as u32).map(|m| (m.count_ones() % 2) as u8).collect();
        FiniteAlgebra::from_fn(self.ring.clone(), parity, self.one(), |i, j| {
            Ok(self.mul(&self.monomial(i as u32), &self.monomial(j as u32)))
        })
    }

    /// The two-sided ideal generated by `gens`, over a field.
    pub fn ideal(&self, gens: &[GammaElem<R>]) -> Result<Subspace<R>> {
        let mut s = Subspace::new(self.ring.clone(), self.dim())?;
        for g in gens {
            for p in 0..self.dim() as u32 {
                let left = self.mul(&self.monomial(p), g);
                for t in 0..self.dim() as u32 {
                    s.insert(self.mul(&left, &self.monomial(t)));
                }
            }
        }
        Ok(s)
    }

    /// Span of all products `x_1⋯x_k` with `x_j` from `spans[j]`, over a field.
    pub fn product_span(&self, spans: &[&Subspace<R>]) -> Result<Subspace<R>> {
        let mut acc = Subspace::new(self.ring.clone(), self.dim())?;
        acc.insert(self.one());
        for s in spans {
            let mut next = Subspace::new(self.ring.clone(), self.dim())?;
            for x in acc.rows() {
                for y in s.rows() {
                    next.insert(self.mul(x, y));
                }
            }
            acc = next;
        }
        Ok(acc)
    }

    pub fn render(&self, x: &[R::Elem]) -> String {
        let terms: Vec<String> = x
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.ring.is_zero(c))
            .map(|(m, c)| {
                let word = self.part_indices(m as u32);
                if word.is_empty() {
                    format!("({})", self.ring.render(c))
                } else {
                    format!("({}) * γ[{}]", self.ring.render(c), super::clifford::join(&word))
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}
