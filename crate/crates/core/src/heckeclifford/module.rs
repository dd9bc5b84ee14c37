//! The circled parabolic module `M^c_λ = H^c_n m_λ`.
//!
//! Vectors use coordinates `(p, u)` for `c^p T_u m_λ`, `u ∈ D_λ`; the basis
//! `m_T = T_{d(T^×)} c^{P(T)} m_λ` (`P(T)` = reading positions of circles)
//! is triangular against them: `m_T = ±c^{u(P)} T_u m_λ + (shorter u)`, so
//! each `T ∈ Tab^c_λ` is indexed by its leading coordinate.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use super::algebra::{HCElem, HeckeClifford};
use super::clifford::{clifford_product, correction, swap_adjacent};
use crate::coeff::Ring;
use crate::error::{Error, Result};
use crate::symgroup::{Composition, SymGroup};
use crate::tableau::{CircledTableau, Tableau};

#[derive(Clone, Copy, Debug)]
enum Step {
    /// `s_iu ∈ D_λ` is longer.
    Up(u32),
    /// `s_iu = us_j` with `s_j ∈ S_λ`.
    Stay,
    /// `s_iu ∈ D_λ` is shorter.
    Down(u32),
}

/// Ring-independent coordinate data for `M^c_λ`.
#[derive(Debug)]
pub struct CircledCoords {
    lambda: Composition,
    group: Arc<SymGroup>,
    reps: Vec<u32>,
    pos: Vec<u32>,
    steps: Vec<Step>,
}

const NONE: u32 = u32::MAX;

impl CircledCoords {
    pub fn get(lambda: &Composition) -> Arc<CircledCoords> {
        type Cache = Mutex<HashMap<Composition, Arc<CircledCoords>>>;
        static CACHE: OnceLock<Cache> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(c) = cache.lock().unwrap().get(lambda) {
            return c.clone();
        }
        let c = Arc::new(Self::build(lambda));
        cache.lock().unwrap().entry(lambda.clone()).or_insert(c).clone()
    }

    fn build(lambda: &Composition) -> Self {
        let n = lambda.size();
        let group = SymGroup::get(n);
        let mut reps = group.min_left_coset_reps(lambda);
        reps.sort_by_key(|&u| (group.length(u), u));
        let mut pos = vec![NONE; group.order()];
        for (k, &u) in reps.iter().enumerate() {
            pos[u as usize] = k as u32;
        }
        let mut steps = Vec::with_capacity(reps.len() * n.saturating_sub(1));
        for &u in &reps {
            for i in 1..n {
                let s = group.left_s(u, i);
                steps.push(match pos[s as usize] {
                    NONE => Step::Stay,
                    k if group.length(s) > group.length(u) => Step::Up(k),
                    k => Step::Down(k),
                });
            }
        }
        CircledCoords { lambda: lambda.clone(), group, reps, pos, steps }
    }

    pub fn lambda(&self) -> &Composition {
        &self.lambda
    }

    pub fn n(&self) -> usize {
        self.lambda.size()
    }

    pub fn group(&self) -> &Arc<SymGroup> {
        &self.group
    }

    /// `D_λ`, shortest first.
    pub fn reps(&self) -> &[u32] {
        &self.reps
    }

    pub fn num_reps(&self) -> usize {
        self.reps.len()
    }

    /// `2ⁿ·|D_λ|`.
    pub fn dim(&self) -> usize {
        (1usize << self.n()) * self.reps.len()
    }

    pub fn index(&self, mask: u32, rep_pos: usize) -> usize {
        mask as usize * self.reps.len() + rep_pos
    }

    /// `(mask, position in D_λ)`.
    pub fn split(&self, idx: usize) -> (u32, usize) {
        ((idx / self.reps.len()) as u32, idx % self.reps.len())
    }

    pub fn rep_position(&self, w: u32) -> Option<usize> {
        let k = self.pos[w as usize];
        (k != NONE).then_some(k as usize)
    }

    fn step(&self, rep_pos: usize, i: usize) -> Step {
        self.steps[rep_pos * (self.n() - 1) + (i - 1)]
    }

    /// The coordinate of the leading term of `m_T`: circled entries and `d(T^×)`.
    pub fn coord_of(&self, t: &CircledTableau) -> Option<usize> {
        if t.shape() != self.lambda {
            return None;
        }
        let under = t.underlying();
        if !under.is_row_standard() || under.size() != self.n() {
            return None;
        }
        let u = self.group.index(&under.perm());
        let k = self.rep_position(u)?;
        let mask = t.rows().iter().flatten().filter(|e| e.circled).fold(0u32, |m, e| m | 1 << (e.value - 1));
        Some(self.index(mask, k))
    }

    /// The circled tableau whose `m_T` leads at `idx`.
    pub fn tableau_of(&self, idx: usize) -> CircledTableau {
        let (mask, k) = self.split(idx);
        let u = self.group.perm(self.reps[k]);
        let under = Tableau::from_perm(u, &self.lambda);
        let circles: Vec<usize> = (0..self.n()).filter(|&b| mask >> (u.apply(b + 1) - 1) & 1 == 1).collect();
        CircledTableau::from_underlying(&under, &circles)
    }

    /// Mask of reading positions (bit `b` = box `b+1`) of the circles of `m_T`.
    pub fn position_mask(&self, idx: usize) -> u32 {
        let (mask, k) = self.split(idx);
        let u = self.group.perm(self.reps[k]);
        (0..self.n()).filter(|&b| mask >> (u.apply(b + 1) - 1) & 1 == 1).fold(0, |m, b| m | 1 << b)
    }

    /// Inverse of [`Self::position_mask`] for a fixed `d(T^×)`.
    pub fn index_with_positions(&self, rep_pos: usize, positions: u32) -> usize {
        let u = self.group.perm(self.reps[rep_pos]);
        let mask = (0..self.n()).filter(|&b| positions >> b & 1 == 1).fold(0u32, |m, b| m | 1 << (u.apply(b + 1) - 1));
        self.index(mask, rep_pos)
    }
}

/// `M^c_λ` over a coefficient ring.
#[derive(Debug)]
pub struct CircledModule<R: Ring> {
    ring: R,
    coords: Arc<CircledCoords>,
    basis: OnceLock<Vec<Vec<R::Elem>>>,
}

pub type Vector<R> = Vec<<R as Ring>::Elem>;

impl<R: Ring> CircledModule<R> {
    pub fn new(ring: R, lambda: &Composition) -> Self {
        CircledModule { ring, coords: CircledCoords::get(lambda), basis: OnceLock::new() }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn coords(&self) -> &Arc<CircledCoords> {
        &self.coords
    }

    pub fn lambda(&self) -> &Composition {
        &self.coords.lambda
    }

    pub fn dim(&self) -> usize {
        self.coords.dim()
    }

    pub fn zero(&self) -> Vector<R> {
        vec![self.ring.zero(); self.dim()]
    }

    pub fn unit(&self, idx: usize) -> Vector<R> {
        let mut v = self.zero();
        v[idx] = self.ring.one();
        v
    }

    /// `m_λ` itself.
    pub fn generator(&self) -> Vector<R> {
        self.unit(0)
    }

    /// `c^p · v`.
    pub fn left_clifford(&self, p: u32, v: &[R::Elem]) -> Vector<R> {
        let r = &self.ring;
        let c = &self.coords;
        let mut out = self.zero();
        for (idx, x) in v.iter().enumerate() {
            if r.is_zero(x) {
                continue;
            }
            let (m, k) = c.split(idx);
            let pr = clifford_product(p, m);
            let mut y = x.clone();
            for _ in 0..pr.squares.count_ones() {
                y = r.mul(&y, &r.a());
            }
            if pr.negative {
                y = r.neg(&y);
            }
            let j = c.index(pr.result, k);
            out[j] = r.add(&out[j], &y);
        }
        out
    }

    pub fn left_c(&self, i: usize, v: &[R::Elem]) -> Vector<R> {
        self.left_clifford(1 << (i - 1), v)
    }

    /// `T_i · v`.
    pub fn left_gen(&self, i: usize, v: &[R::Elem]) -> Vector<R> {
        let r = &self.ring;
        let c = &self.coords;
        let q = r.q();
        let qm1 = r.sub(&q, &r.one());
        let a = r.a();
        let mut out = self.zero();
        let mut put = |j: usize, y: R::Elem| out[j] = r.add(&out[j], &y);
        for (idx, x) in v.iter().enumerate() {
            if r.is_zero(x) {
                continue;
            }
            let (m, k) = c.split(idx);
            let (neg, m2) = swap_adjacent(m, i);
            let x2 = if neg { r.neg(x) } else { x.clone() };
            match c.step(k, i) {
                Step::Up(k2) => put(c.index(m2, k2 as usize), x2),
                Step::Stay => put(c.index(m2, k), r.mul(&q, &x2)),
                Step::Down(k2) => {
                    put(c.index(m2, k2 as usize), r.mul(&q, &x2));
                    put(c.index(m2, k), r.mul(&qm1, &x2));
                }
            }
            let (corr, cnt) = correction(m, i);
            for t in &corr[..cnt] {
                let mut y = r.mul(&qm1, x);
                if t.a_power > 0 {
                    y = r.mul(&y, &a);
                }
                if t.negative {
                    y = r.neg(&y);
                }
                put(c.index(t.mask, k), y);
            }
        }
        out
    }

    /// `T_w · v` for a group index `w`.
    pub fn left_t(&self, w: u32, v: &[R::Elem]) -> Vector<R> {
        let word = self.coords.group.perm(w).reduced_word();
        word.iter().rev().fold(v.to_vec(), |acc, &i| self.left_gen(i, &acc))
    }

    /// `x · v` for `x ∈ H^c_n`.
    pub fn left_hc(&self, x: &HCElem<R>, v: &[R::Elem]) -> Vector<R> {
        let r = &self.ring;
        let mut by_w: BTreeMap<u32, Vec<(u32, &R::Elem)>> = BTreeMap::new();
        for (&(m, w), c) in x.terms() {
            by_w.entry(w).or_default().push((m, c));
        }
        let mut out = self.zero();
        for (w, cl) in by_w {
            let tv = self.left_t(w, v);
            for (m, c) in cl {
                let y = self.left_clifford(m, &tv);
                for (o, z) in out.iter_mut().zip(&y) {
                    if !r.is_zero(z) {
                        *o = r.add(o, &r.mul(c, z));
                    }
                }
            }
        }
        out
    }

    /// All `m_T`, indexed by leading coordinate.
    pub fn basis(&self) -> &[Vector<R>] {
        self.basis.get_or_init(|| self.build_basis())
    }

    fn build_basis(&self) -> Vec<Vector<R>> {
        let c = &self.coords;
        let g = &c.group;
        let n = c.n();
        let mut out = vec![Vec::new(); self.dim()];
        for pmask in 0..(1u32 << n) {
            // T_u c^P m_λ along D_λ, shortest first
            let mut z: Vec<Vector<R>> = Vec::with_capacity(c.num_reps());
            for (k, &u) in c.reps.iter().enumerate() {
                let v = if k == 0 {
                    self.unit(c.index(pmask, 0))
                } else {
                    let i = (1..n).find(|&i| g.length(g.left_s(u, i)) < g.length(u)).expect("left descent");
                    let prev = c.rep_position(g.left_s(u, i)).expect("D_λ is closed under left prefixes");
                    self.left_gen(i, &z[prev])
                };
                z.push(v);
            }
            for (k, v) in z.into_iter().enumerate() {
                out[c.index_with_positions(k, pmask)] = v;
            }
        }
        out
    }

    /// `Σ x_T m_T`.
    pub fn compose(&self, x: &[R::Elem]) -> Vector<R> {
        let r = &self.ring;
        let mut out = self.zero();
        for (xi, b) in x.iter().zip(self.basis()) {
            if r.is_zero(xi) {
                continue;
            }
            for (o, y) in out.iter_mut().zip(b) {
                if !r.is_zero(y) {
                    *o = r.add(o, &r.mul(xi, y));
                }
            }
        }
        out
    }

    /// Coordinates in the basis `m_T` (a unitriangular solve).
    pub fn decompose(&self, v: &[R::Elem]) -> Result<Vector<R>> {
        let r = &self.ring;
        let c = &self.coords;
        let basis = self.basis();
        let mut v = v.to_vec();
        let mut x = self.zero();
        for k in (0..c.num_reps()).rev() {
            for mask in 0..(1u32 << c.n()) {
                let idx = c.index(mask, k);
                if r.is_zero(&v[idx]) {
                    continue;
                }
                let f = r
                    .div_exact(&v[idx], &basis[idx][idx])
                    .ok_or_else(|| Error::Invariant("leading coefficient of m_T is not a unit".into()))?;
                for (o, y) in v.iter_mut().zip(&basis[idx]) {
                    if !r.is_zero(y) {
                        *o = r.sub(o, &r.mul(&f, y));
                    }
                }
                x[idx] = f;
            }
        }
        Ok(x)
    }

    /// The element `Σ v_{(p,u)} c^p T_u m_λ` of `H^c_n`.
    pub fn to_hc(&self, hc: &HeckeClifford<R>, v: &[R::Elem]) -> HCElem<R> {
        let c = &self.coords;
        let g = &c.group;
        let sub = g.young_subgroup(&c.lambda);
        let mut acc = hc.dense();
        for (idx, x) in v.iter().enumerate() {
            if self.ring.is_zero(x) {
                continue;
            }
            let (m, k) = c.split(idx);
            for &y in &sub {
                acc.add(m, g.compose(c.reps[k], y), x);
            }
        }
        acc.finish()
    }

    /// Coordinates of `x ∈ H^c_n`, failing unless `x ∈ M^c_λ`.
    pub fn from_hc(&self, hc: &HeckeClifford<R>, x: &HCElem<R>) -> Result<Vector<R>> {
        let c = &self.coords;
        let mut v = self.zero();
        for (&(m, w), coef) in x.terms() {
            if let Some(k) = c.rep_position(w) {
                v[c.index(m, k)] = coef.clone();
            }
        }
        if !hc.equal(&self.to_hc(hc, &v), x) {
            return Err(Error::InvalidInput(format!("element is not in M^c_{}", c.lambda)));
        }
        Ok(v)
    }
}
