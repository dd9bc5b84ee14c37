//! Ideal filters over a finite poset, their rigidity, the Morita context
//! attached to each layer, and the layer-dimension count of a standard
//! basis.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::algebra::{FiniteAlgebra, Vector};
use crate::coeff::Ring;
use crate::error::{Error, Result};
use crate::linalg::Subspace;

pub type Pairing<F> = Arc<dyn Fn(&[<F as Ring>::Elem], &[<F as Ring>::Elem]) -> Vector<F> + Send + Sync>;

/// `M_λ`, `N_λ`, `B_λ` as spanning sets inside `A` (read modulo `A^{<λ}`),
/// with `η: M ⊗ N → A^{≤λ}/A^{<λ}` and `ρ: N ⊗ M → B_λ`. `A` and `B_λ` act
/// by multiplication in `A`.
#[derive(Clone)]
pub struct MoritaData<F: Ring> {
    pub m: Vec<Vector<F>>,
    pub n: Vec<Vector<F>>,
    pub b: Vec<Vector<F>>,
    pub eta: Pairing<F>,
    pub rho: Pairing<F>,
}

impl<F: Ring> fmt::Debug for MoritaData<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MoritaData {{ m: {}, n: {}, b: {} }}", self.m.len(), self.n.len(), self.b.len())
    }
}

#[derive(Clone, Debug)]
pub struct FilteredAlgebraInstance<F: Ring> {
    pub name: String,
    pub algebra: FiniteAlgebra<F>,
    pub labels: Vec<String>,
    /// `leq[i][j]`: label `i` ≤ label `j`.
    pub leq: Vec<Vec<bool>>,
    /// Spanning sets of `A^{≤λ}`.
    pub ideals: Vec<Vec<Vector<F>>>,
    pub morita: Vec<MoritaData<F>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `e_basis · g` (or `g · e_basis`) leaves `A^{≤label}`, `g` its `generator`-th spanning vector.
    NotIdeal {
        label: String,
        generator: usize,
        basis: usize,
        left: bool,
    },
    NotMonotone {
        lower: String,
        upper: String,
        generator: usize,
    },
    NotCovering {
        basis: usize,
    },
    /// `x_i y_j ∉ Σ_{ν ≤ λ, μ} A^{≤ν}`.
    ProductEscapes {
        left: String,
        right: String,
        i: usize,
        j: usize,
    },
    /// The `index`-th echelon vector of `A^{≤λ} ∩ A^{≱λ}` is not in `A^{<λ}`.
    NotRigid {
        label: String,
        index: usize,
    },
    /// `A^{<λ} ⊄ A^{≤λ}`.
    LowerNotContained {
        label: String,
    },
    /// `η(u_i⊗v_j)·u_k ≠ u_i·ρ(v_j⊗u_k)`.
    FirstLaw {
        label: String,
        i: usize,
        j: usize,
        k: usize,
    },
    /// `v_j·η(u_i⊗v_k) ≠ ρ(v_j⊗u_i)·v_k`.
    SecondLaw {
        label: String,
        i: usize,
        j: usize,
        k: usize,
    },
    EtaNotOnto {
        label: String,
        image: usize,
        layer: usize,
    },
    /// `A^{≤μ}` does not kill `M_λ` although `μ ≱ λ`.
    NotAnnihilated {
        label: String,
        by: String,
        generator: usize,
        i: usize,
    },
    LayerRank {
        label: String,
        m: usize,
        n: usize,
        b: usize,
        layer: usize,
    },
    TotalDimension {
        sum: usize,
        dim: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AxiomReport {
    pub axiom: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl AxiomReport {
    fn from(axiom: &str, witness: Option<Witness>) -> Self {
        let status = if witness.is_some() { Status::Fail } else { Status::Pass };
        AxiomReport { axiom: axiom.into(), status, witness }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl<F: Ring> FilteredAlgebraInstance<F> {
    pub fn new(
        name: impl Into<String>,
        algebra: FiniteAlgebra<F>,
        labels: Vec<String>,
        leq: Vec<Vec<bool>>,
        ideals: Vec<Vec<Vector<F>>>,
        morita: Vec<MoritaData<F>>,
    ) -> Result<Self> {
        let k = labels.len();
        if leq.len() != k || leq.iter().any(|r| r.len() != k) || ideals.len() != k || morita.len() != k {
            return Err(Error::InvalidInput("labels, order, ideals and Morita data disagree in size".into()));
        }
        crate::hecke::check_field(algebra.ring())?;
        Ok(FilteredAlgebraInstance { name: name.into(), algebra, labels, leq, ideals, morita })
    }

    pub fn num_labels(&self) -> usize {
        self.labels.len()
    }

    fn label_index(&self, label: &str) -> Result<usize> {
        self.labels.iter().position(|l| l == label).ok_or_else(|| Error::InvalidInput(format!("unknown label {label}")))
    }

    fn span(&self, vs: impl IntoIterator<Item = Vector<F>>) -> Subspace<F> {
        let mut s = Subspace::new(self.algebra.ring().clone(), self.algebra.dim()).expect("checked field");
        s.extend(vs);
        s
    }

    pub fn ideal(&self, i: usize) -> Subspace<F> {
        self.span(self.ideals[i].iter().cloned())
    }

    fn sum_where(&self, pred: impl Fn(usize) -> bool) -> Subspace<F> {
        self.span((0..self.num_labels()).filter(|&j| pred(j)).flat_map(|j| self.ideals[j].iter().cloned()))
    }

    /// `A^{<λ}`.
    pub fn lower(&self, i: usize) -> Subspace<F> {
        self.sum_where(|j| j != i && self.leq[j][i])
    }

    /// `A^{≱λ} = Σ_{μ ≱ λ} A^{≤μ}`.
    pub fn not_above(&self, i: usize) -> Subspace<F> {
        self.sum_where(|j| !self.leq[i][j])
    }

    fn meet_sum(&self, i: usize, j: usize) -> Subspace<F> {
        self.sum_where(|k| self.leq[k][i] && self.leq[k][j])
    }

    fn is_sub(&self, a: &Subspace<F>, b: &Subspace<F>) -> bool {
        a.is_subspace_of(b)
    }

    fn not_ideal(&self, i: usize, g: usize, b: usize, left: bool) -> bool {
        let s = self.ideal(i);
        let e = self.algebra.unit(b);
        let x = &self.ideals[i][g];
        let p = if left { self.algebra.mul(&e, x) } else { self.algebra.mul(x, &e) };
        !s.contains(&p)
    }

    fn product_escapes(&self, i: usize, j: usize, x: usize, y: usize) -> bool {
        !self.meet_sum(i, j).contains(&self.algebra.mul(&self.ideals[i][x], &self.ideals[j][y]))
    }

    /// Two-sided closure of every `A^{≤λ}`, monotonicity, covering, and
    /// `A^{≤λ}A^{≤μ} ⊆ Σ_{ν≤λ,μ} A^{≤ν}`.
    pub fn verify_ideal_filter(&self) -> AxiomReport {
        AxiomReport::from("ideal_filter", self.ideal_filter_witness())
    }

    fn ideal_filter_witness(&self) -> Option<Witness> {
        let k = self.num_labels();
        let d = self.algebra.dim();
        for i in 0..k {
            for g in 0..self.ideals[i].len() {
                for b in 0..d {
                    for left in [true, false] {
                        if self.not_ideal(i, g, b, left) {
                            return Some(Witness::NotIdeal { label: self.labels[i].clone(), generator: g, basis: b, left });
                        }
                    }
                }
            }
        }
        for i in 0..k {
            for j in (0..k).filter(|&j| j != i && self.leq[i][j]) {
                let upper = self.ideal(j);
                if let Some(g) = self.ideals[i].iter().position(|x| !upper.contains(x)) {
                    return Some(Witness::NotMonotone { lower: self.labels[i].clone(), upper: self.labels[j].clone(), generator: g });
                }
            }
        }
        let all = self.sum_where(|_| true);
        if let Some(b) = (0..d).find(|&b| !all.contains(&self.algebra.unit(b))) {
            return Some(Witness::NotCovering { basis: b });
        }
        for i in 0..k {
            for j in 0..k {
                let target = self.meet_sum(i, j);
                for (x, u) in self.ideals[i].iter().enumerate() {
                    for (y, v) in self.ideals[j].iter().enumerate() {
                        if !target.contains(&self.algebra.mul(u, v)) {
                            return Some(Witness::ProductEscapes {
                                left: self.labels[i].clone(),
                                right: self.labels[j].clone(),
                                i: x,
                                j: y,
                            });
                        }
                    }
                }
            }
        }
        None
    }

    /// `A^{≤λ} ∩ A^{≱λ} = A^{<λ}` for every `λ`.
    pub fn verify_rigidity(&self) -> AxiomReport {
        let w = (0..self.num_labels()).find_map(|i| self.rigidity_witness(i));
        AxiomReport::from("rigidity", w)
    }

    fn rigidity_witness(&self, i: usize) -> Option<Witness> {
        let lower = self.lower(i);
        let own = self.ideal(i);
        if !self.is_sub(&lower, &own) {
            return Some(Witness::LowerNotContained { label: self.labels[i].clone() });
        }
        let inter = own.intersect(&self.not_above(i));
        inter.rows().iter().position(|x| !lower.contains(x)).map(|index| Witness::NotRigid { label: self.labels[i].clone(), index })
    }

    fn first_law_fails(&self, l: usize, i: usize, j: usize, k: usize, lower: &Subspace<F>) -> bool {
        let md = &self.morita[l];
        let lhs = self.algebra.mul(&(md.eta)(&md.m[i], &md.n[j]), &md.m[k]);
        let rhs = self.algebra.mul(&md.m[i], &(md.rho)(&md.n[j], &md.m[k]));
        !lower.contains(&diff(self.algebra.ring(), &lhs, &rhs))
    }

    fn second_law_fails(&self, l: usize, i: usize, j: usize, k: usize, lower: &Subspace<F>) -> bool {
        let md = &self.morita[l];
        let lhs = self.algebra.mul(&md.n[j], &(md.eta)(&md.m[i], &md.n[k]));
        let rhs = self.algebra.mul(&(md.rho)(&md.n[j], &md.m[i]), &md.n[k]);
        !lower.contains(&diff(self.algebra.ring(), &lhs, &rhs))
    }

    /// Both associativity laws, `η` onto `A^{≤λ}/A^{<λ}`, and `A^{≤μ}M_λ ⊆ A^{<λ}` for `μ ≱ λ`.
    pub fn verify_morita_context(&self, label: &str) -> Result<AxiomReport> {
        let l = self.label_index(label)?;
        Ok(AxiomReport::from("morita_context", self.morita_witness(l)))
    }

    fn morita_witness(&self, l: usize) -> Option<Witness> {
        let md = &self.morita[l];
        let lower = self.lower(l);
        let label = self.labels[l].clone();
        for i in 0..md.m.len() {
            for j in 0..md.n.len() {
                for k in 0..md.m.len() {
                    if self.first_law_fails(l, i, j, k, &lower) {
                        return Some(Witness::FirstLaw { label, i, j, k });
                    }
                }
            }
        }
        for j in 0..md.n.len() {
            for i in 0..md.m.len() {
                for k in 0..md.n.len() {
                    if self.second_law_fails(l, i, j, k, &lower) {
                        return Some(Witness::SecondLaw { label, i, j, k });
                    }
                }
            }
        }
        let (image, layer) = self.eta_ranks(l, &lower);
        if image != layer {
            return Some(Witness::EtaNotOnto { label, image, layer });
        }
        for mu in (0..self.num_labels()).filter(|&mu| !self.leq[l][mu]) {
            for (g, x) in self.ideals[mu].iter().enumerate() {
                if let Some(i) = md.m.iter().position(|u| !lower.contains(&self.algebra.mul(x, u))) {
                    return Some(Witness::NotAnnihilated { label, by: self.labels[mu].clone(), generator: g, i });
                }
            }
        }
        None
    }

    /// `(rank of η's image, rank of the layer)`, both modulo `A^{<λ}`.
    fn eta_ranks(&self, l: usize, lower: &Subspace<F>) -> (usize, usize) {
        let md = &self.morita[l];
        let mut img = lower.clone();
        for u in &md.m {
            for v in &md.n {
                img.insert((md.eta)(u, v));
            }
        }
        let layer = self.ideal(l).sum(lower).rank() - lower.rank();
        (img.rank() - lower.rank(), layer)
    }

    fn relative_rank(&self, vs: &[Vector<F>], lower: &Subspace<F>) -> usize {
        let mut s = lower.clone();
        s.extend(vs.iter().cloned());
        s.rank() - lower.rank()
    }

    /// For every layer, `M_λ ⊗_{B_λ} N_λ ≅ A^{≤λ}/A^{<λ}` by rank
    /// (`rank M · rank N / rank B = dim layer` with `η` onto), and the layers
    /// add up to `dim A`.
    pub fn verify_standard_basis(&self) -> AxiomReport {
        AxiomReport::from("standard_basis", self.standard_basis_witness())
    }

    /// `(rank M_λ, rank N_λ, rank B_λ, rank of η's image, dim A^{≤λ}/A^{<λ})`,
    /// all modulo `A^{<λ}`.
    pub fn layer_ranks(&self, l: usize) -> (usize, usize, usize, usize, usize) {
        let lower = self.lower(l);
        let md = &self.morita[l];
        let (m, n, b) = (self.relative_rank(&md.m, &lower), self.relative_rank(&md.n, &lower), self.relative_rank(&md.b, &lower));
        let (image, layer) = self.eta_ranks(l, &lower);
        (m, n, b, image, layer)
    }

    fn standard_basis_witness(&self) -> Option<Witness> {
        let mut sum = 0;
        for l in 0..self.num_labels() {
            let (m, n, b, image, layer) = self.layer_ranks(l);
            let free = if b == 0 { m == 0 && n == 0 && layer == 0 } else { m % b == 0 && n % b == 0 && m * n == layer * b };
            if !free || image != layer {
                return Some(Witness::LayerRank { label: self.labels[l].clone(), m, n, b, layer });
            }
            sum += if b == 0 { 0 } else { m * n / b };
        }
        (sum != self.algebra.dim()).then(|| Witness::TotalDimension { sum, dim: self.algebra.dim() })
    }

    /// Whether the failure recorded in `w` still occurs.
    pub fn replay(&self, w: &Witness) -> Result<bool> {
        Ok(match w {
            Witness::NotIdeal { label, generator, basis, left } => self.not_ideal(self.label_index(label)?, *generator, *basis, *left),
            Witness::NotMonotone { lower, upper, generator } => {
                let (i, j) = (self.label_index(lower)?, self.label_index(upper)?);
                self.leq[i][j] && !self.ideal(j).contains(&self.ideals[i][*generator])
            }
            Witness::NotCovering { basis } => !self.sum_where(|_| true).contains(&self.algebra.unit(*basis)),
            Witness::ProductEscapes { left, right, i, j } => {
                self.product_escapes(self.label_index(left)?, self.label_index(right)?, *i, *j)
            }
            Witness::NotRigid { .. } | Witness::LowerNotContained { .. } => {
                let l = match w {
                    Witness::NotRigid { label, .. } | Witness::LowerNotContained { label } => self.label_index(label)?,
                    _ => unreachable!(),
                };
                self.rigidity_witness(l).as_ref() == Some(w)
            }
            Witness::FirstLaw { label, i, j, k } => {
                let l = self.label_index(label)?;
                self.first_law_fails(l, *i, *j, *k, &self.lower(l))
            }
            Witness::SecondLaw { label, i, j, k } => {
                let l = self.label_index(label)?;
                self.second_law_fails(l, *i, *j, *k, &self.lower(l))
            }
            Witness::EtaNotOnto { label, .. } => {
                let l = self.label_index(label)?;
                let (image, layer) = self.eta_ranks(l, &self.lower(l));
                image != layer
            }
            Witness::NotAnnihilated { label, by, generator, i } => {
                let (l, mu) = (self.label_index(label)?, self.label_index(by)?);
                !self.leq[l][mu] && !self.lower(l).contains(&self.algebra.mul(&self.ideals[mu][*generator], &self.morita[l].m[*i]))
            }
            Witness::LayerRank { .. } | Witness::TotalDimension { .. } => self.standard_basis_witness().as_ref() == Some(w),
        })
    }
}

fn diff<F: Ring>(r: &F, x: &[F::Elem], y: &[F::Elem]) -> Vector<F> {
    x.iter().zip(y).map(|(a, b)| r.sub(a, b)).collect()
}
