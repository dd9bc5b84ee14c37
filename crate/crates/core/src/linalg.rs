//! Exact linear algebra over a field: incrementally echelonised subspaces
//! with a caller-chosen column priority, kernels and intersections.

use crate::coeff::Ring;
use crate::error::{Error, Result};

/// A subspace of `F^dim` kept in echelon form. The pivot of each stored row
/// is its first nonzero column in priority order, so the pivot set and the
/// residues produced by [`Subspace::reduce`] do not depend on the order in
/// which vectors were inserted.
#[derive(Clone, Debug)]
pub struct Subspace<R: Ring> {
    ring: R,
    dim: usize,
    order: Vec<usize>,
    rows: Vec<Vec<R::Elem>>,
    pivots: Vec<usize>,
    is_pivot: Vec<bool>,
}

impl<R: Ring> Subspace<R> {
    pub fn new(ring: R, dim: usize) -> Result<Self> {
        Self::with_priority(ring, (0..dim).collect())
    }

    /// `order` lists every column once, most preferred pivot first.
    pub fn with_priority(ring: R, order: Vec<usize>) -> Result<Self> {
        if !ring.is_field() {
            return Err(Error::NonField(ring.descriptor().to_string()));
        }
        let dim = order.len();
        let mut seen = vec![false; dim];
        for &c in &order {
            if c >= dim || std::mem::replace(&mut seen[c], true) {
                return Err(Error::InvalidInput("column priority is not a permutation".into()));
            }
        }
        Ok(Subspace { ring, dim, order, rows: Vec::new(), pivots: Vec::new(), is_pivot: vec![false; dim] })
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn codim(&self) -> usize {
        self.dim - self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    pub fn rows(&self) -> &[Vec<R::Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that carry residues, in priority order.
    pub fn free_columns(&self) -> Vec<usize> {
        self.order.iter().copied().filter(|&c| !self.is_pivot[c]).collect()
    }

    /// Replaces `v` by its canonical residue (zero on all pivot columns).
    pub fn reduce_in_place(&self, v: &mut [R::Elem]) {
        let r = &self.ring;
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if r.is_zero(&v[p]) {
                continue;
            }
            let c = v[p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !r.is_zero(y) {
                    *x = r.sub(x, &r.mul(&c, y));
                }
            }
        }
    }

    pub fn reduce(&self, v: &[R::Elem]) -> Vec<R::Elem> {
        let mut w = v.to_vec();
        self.reduce_in_place(&mut w);
        w
    }

    pub fn contains(&self, v: &[R::Elem]) -> bool {
        self.reduce(v).iter().all(|x| self.ring.is_zero(x))
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<R::Elem>) -> bool {
        assert_eq!(v.len(), self.dim, "vector length does not match the ambient dimension");
        self.reduce_in_place(&mut v);
        let r = &self.ring;
        let Some(&p) = self.order.iter().find(|&&c| !r.is_zero(&v[c])) else {
            return false;
        };
        let inv = r.inv(&v[p]).expect("nonzero element of a field is invertible");
        for x in v.iter_mut() {
            if !r.is_zero(x) {
                *x = r.mul(x, &inv);
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        self.is_pivot[p] = true;
        true
    }

    /// Inserts every vector, stopping early once the subspace is everything.
    pub fn extend<I: IntoIterator<Item = Vec<R::Elem>>>(&mut self, vs: I) {
        for v in vs {
            if self.is_full() {
                return;
            }
            self.insert(v);
        }
    }

    /// Coordinates of the residue of `v` on the free columns.
    pub fn quotient_coords(&self, v: &[R::Elem]) -> Vec<R::Elem> {
        let w = self.reduce(v);
        self.free_columns().into_iter().map(|c| w[c].clone()).collect()
    }

    /// The intersection with another subspace of the same ambient space.
    pub fn intersect(&self, other: &Subspace<R>) -> Subspace<R> {
        let r = &self.ring;
        // Σ α_i a_i = Σ β_j b_j  ⇔  (α, -β) in the kernel of [A | B]ᵀ.
        let mut cols: Vec<Vec<R::Elem>> = self.rows.clone();
        cols.extend(other.rows.iter().map(|b| b.iter().map(|x| r.neg(x)).collect()));
        let ker = left_kernel(r, &cols);
        let mut out = Subspace { rows: Vec::new(), pivots: Vec::new(), is_pivot: vec![false; self.dim], ..self.clone() };
        for k in ker {
            let mut v = vec![r.zero(); self.dim];
            for (coef, row) in k.iter().zip(&self.rows) {
                if r.is_zero(coef) {
                    continue;
                }
                for (x, y) in v.iter_mut().zip(row) {
                    *x = r.add(x, &r.mul(coef, y));
                }
            }
            out.insert(v);
        }
        out
    }

    /// The sum of two subspaces.
    pub fn sum(&self, other: &Subspace<R>) -> Subspace<R> {
        let mut out = self.clone();
        out.extend(other.rows.iter().cloned());
        out
    }

    pub fn is_subspace_of(&self, other: &Subspace<R>) -> bool {
        self.rows.iter().all(|v| other.contains(v))
    }

    pub fn equals(&self, other: &Subspace<R>) -> bool {
        self.rank() == other.rank() && self.is_subspace_of(other)
    }
}

/// Row-reduced echelon form (natural column order): returns the nonzero rows
/// and their pivot columns.
pub fn rref<R: Ring>(ring: &R, rows: &[Vec<R::Elem>], ncols: usize) -> (Vec<Vec<R::Elem>>, Vec<usize>) {
    let mut m: Vec<Vec<R::Elem>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(k) = (r..m.len()).find(|&k| !ring.is_zero(&m[k][c])) else { continue };
        m.swap(r, k);
        let inv = ring.inv(&m[r][c]).expect("rref requires a field");
        for x in m[r].iter_mut() {
            *x = ring.mul(x, &inv);
        }
        for k in 0..m.len() {
            if k != r && !ring.is_zero(&m[k][c]) {
                let f = m[k][c].clone();
                let (pr, rest) = if k < r {
                    let (a, b) = m.split_at_mut(r);
                    (&b[0], &mut a[k])
                } else {
                    let (a, b) = m.split_at_mut(k);
                    (&a[r], &mut b[0])
                };
                for (x, y) in rest.iter_mut().zip(pr.iter()) {
                    if !ring.is_zero(y) {
                        *x = ring.sub(x, &ring.mul(&f, y));
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank<R: Ring>(ring: &R, rows: &[Vec<R::Elem>]) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    rref(ring, rows, ncols).0.len()
}

/// Basis of `{x : M x = 0}` for `M` given by rows with `ncols` columns.
pub fn nullspace<R: Ring>(ring: &R, rows: &[Vec<R::Elem>], ncols: usize) -> Vec<Vec<R::Elem>> {
    let (m, pivots) = rref(ring, rows, ncols);
    let mut out = Vec::new();
    for f in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut x = vec![ring.zero(); ncols];
        x[f] = ring.one();
        for (row, &p) in m.iter().zip(&pivots) {
            x[p] = ring.neg(&row[f]);
        }
        out.push(x);
    }
    out
}

/// Basis of `{α : Σ α_i v_i = 0}`.
pub fn left_kernel<R: Ring>(ring: &R, vs: &[Vec<R::Elem>]) -> Vec<Vec<R::Elem>> {
    let Some(dim) = vs.first().map(|v| v.len()) else { return Vec::new() };
    let rows: Vec<Vec<R::Elem>> = (0..dim).map(|j| vs.iter().map(|v| v[j].clone()).collect()).collect();
    nullspace(ring, &rows, vs.len())
}
