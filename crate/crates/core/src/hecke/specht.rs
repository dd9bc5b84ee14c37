//! The dominance filtration on hom spaces and the quotients
//! `S_{λ;μ} = M_{λ;μ} / M^{>λ}_{λ;μ}`.

use std::sync::Arc;

use rayon::prelude::*;

use super::hom::{HomBasis, HomSpaces};
use crate::coeff::{IntegerLaurent, Laurent, Ring};
use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::symgroup::{compositions, partitions, Composition};

/// Which compositions `ν` index the layers `M^ν = M_{ν;μ} ∘_ν M_{λ;ν}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LayerIndex {
    /// Partitions only; enough when `q` is invertible since
    /// `M_ν ≅ M_{wν}`.
    Partitions,
    /// Every composition with positive parts.
    Compositions,
}

impl LayerIndex {
    /// The `ν` strictly above `λ` in dominance order.
    pub fn above(self, lambda: &Composition) -> Vec<Composition> {
        let all = match self {
            LayerIndex::Partitions => partitions(lambda.size()),
            LayerIndex::Compositions => compositions(lambda.size()),
        };
        all.into_iter().filter(|nu| lambda.strictly_dominated_by(nu)).collect()
    }
}

/// Spanning vectors (over ℤ[a,q^±]) of `M^ν_{λ;μ}`: all `m_R ∘_ν m_S` with
/// `R ∈ Tab_{ν;μ}`, `S ∈ Tab_{λ;ν}`.
pub fn layer_generators(lambda: &Composition, mu: &Composition, nu: &Composition) -> Result<Vec<Vec<Laurent>>> {
    let n = lambda.size();
    let hs = HomSpaces::new(IntegerLaurent, n);
    let outer = HomBasis::get(nu, mu)?;
    let chunks: Vec<Result<Vec<Vec<Laurent>>>> = (0..outer.len())
        .into_par_iter()
        .map(|i| {
            let a = hs.unit_vector(outer.clone(), i);
            hs.circ_with_basis(&a, lambda)
        })
        .collect();
    let mut out = Vec::new();
    for c in chunks {
        out.extend(c?.into_iter().filter(|v| v.iter().any(|x| !x.is_zero())));
    }
    Ok(out)
}

/// `S_{λ;μ}` over a field, presented as `M_{λ;μ}` modulo an echelonised
/// `M^{>λ}_{λ;μ}`.
#[derive(Clone, Debug)]
pub struct SpechtQuotient<F: Ring> {
    basis: Arc<HomBasis>,
    higher: Subspace<F>,
}

impl<F: Ring> SpechtQuotient<F> {
    pub fn new(ring: F, lambda: &Composition, mu: &Composition) -> Result<Self> {
        Self::with_index(ring, lambda, mu, LayerIndex::Partitions)
    }

    pub fn with_index(ring: F, lambda: &Composition, mu: &Composition, index: LayerIndex) -> Result<Self> {
        let nus = index.above(lambda);
        Self::above_layers(ring, lambda, mu, &nus)
    }

    /// `M_{λ;μ}` modulo `Σ_{ν ∈ nus} M^ν_{λ;μ}`.
    pub fn above_layers(ring: F, lambda: &Composition, mu: &Composition, nus: &[Composition]) -> Result<Self> {
        check_field(&ring)?;
        let basis = HomBasis::get(lambda, mu)?;
        let mut higher = Subspace::with_priority(ring.clone(), basis.pivot_order())?;
        for nu in nus {
            if higher.is_full() {
                break;
            }
            let gens = layer_generators(lambda, mu, nu)?;
            higher.extend(gens.iter().map(|v| v.iter().map(|c| ring.from_laurent(c)).collect()));
        }
        Ok(SpechtQuotient { basis, higher })
    }

    pub fn ring(&self) -> &F {
        self.higher.ring()
    }

    pub fn basis(&self) -> &Arc<HomBasis> {
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

    /// `M^{>λ}_{λ;μ}` as an echelonised subspace of `M_{λ;μ}`.
    pub fn higher(&self) -> &Subspace<F> {
        &self.higher
    }

    /// Indices (into `Tab_{λ;μ}`) of the tableaux whose classes form the
    /// canonical quotient basis.
    pub fn free_tableaux(&self) -> Vec<usize> {
        self.higher.free_columns()
    }

    /// Canonical representative of the class of `x`.
    pub fn reduce(&self, x: &[F::Elem]) -> Vec<F::Elem> {
        self.higher.reduce(x)
    }

    pub fn reduce_laurent(&self, x: &[Laurent]) -> Vec<F::Elem> {
        let r = self.ring();
        self.reduce(&x.iter().map(|c| r.from_laurent(c)).collect::<Vec<_>>())
    }

    /// Coordinates of the class of `x` in the quotient basis.
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

pub(crate) fn check_field<F: Ring>(ring: &F) -> Result<()> {
    if !ring.is_field() {
        return Err(Error::NonField(ring.descriptor().to_string()));
    }
    if ring.is_zero(&ring.q()) {
        return Err(Error::InvalidRing("quotients are only computed with q invertible".into()));
    }
    Ok(())
}
