//! Finite-dimensional superalgebras over a field, given by dense structure
//! constants on a homogeneous basis.

use crate::coeff::Ring;
use crate::error::{Error, Result};
use crate::linalg::{nullspace, rank, Subspace};

pub type Vector<F> = Vec<<F as Ring>::Elem>;

#[derive(Clone, Debug)]
pub struct FiniteAlgebra<F: Ring> {
    ring: F,
    parity: Vec<u8>,
    one: Vec<F::Elem>,
    /// `table[i][j]` = `e_i e_j`.
    table: Vec<Vec<Vec<F::Elem>>>,
}

impl<F: Ring> FiniteAlgebra<F> {
    /// `mul(i, j)` gives `e_i e_j`; `one` the unit in coordinates.
    pub fn from_fn(ring: F, parity: Vec<u8>, one: Vec<F::Elem>, mut mul: impl FnMut(usize, usize) -> Result<Vec<F::Elem>>) -> Result<Self> {
        let d = parity.len();
        if one.len() != d {
            return Err(Error::InvalidInput("unit has the wrong length".into()));
        }
        let mut table = Vec::with_capacity(d);
        for i in 0..d {
            let mut row = Vec::with_capacity(d);
            for j in 0..d {
                let v = mul(i, j)?;
                if v.len() != d {
                    return Err(Error::InvalidInput(format!("e_{i} e_{j} has {} coordinates, expected {d}", v.len())));
                }
                row.push(v);
            }
            table.push(row);
        }
        Ok(FiniteAlgebra { ring, parity, one, table })
    }

    pub fn ring(&self) -> &F {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    pub fn parity(&self) -> &[u8] {
        &self.parity
    }

    pub fn one(&self) -> Vector<F> {
        self.one.clone()
    }

    pub fn zero(&self) -> Vector<F> {
        vec![self.ring.zero(); self.dim()]
    }

    pub fn unit(&self, i: usize) -> Vector<F> {
        let mut v = self.zero();
        v[i] = self.ring.one();
        v
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[F::Elem] {
        &self.table[i][j]
    }

    pub fn mul(&self, x: &[F::Elem], y: &[F::Elem]) -> Vector<F> {
        let r = &self.ring;
        let mut out = self.zero();
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !r.is_zero(c)) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !r.is_zero(c)) {
                let c = r.mul(xi, yj);
                for (o, t) in out.iter_mut().zip(&self.table[i][j]) {
                    if !r.is_zero(t) {
                        *o = r.add(o, &r.mul(&c, t));
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, x: &[F::Elem], mut k: u64) -> Vector<F> {
        let mut acc = self.one();
        let mut base = x.to_vec();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// First failing `(i, j, k)` of `(e_i e_j) e_k = e_i (e_j e_k)`.
    pub fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let l = self.mul(&self.table[i][j], &self.unit(k));
                    let r = self.mul(&self.unit(i), &self.table[j][k]);
                    if l != r {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// Column `c` is `L_x e_c`.
    fn left_matrix_rows(&self, x: &[F::Elem]) -> Vec<Vec<F::Elem>> {
        let d = self.dim();
        let cols: Vec<Vector<F>> = (0..d).map(|c| self.mul(x, &self.unit(c))).collect();
        (0..d).map(|r| cols.iter().map(|col| col[r].clone()).collect()).collect()
    }

    /// The two-sided ideal generated by `gens`.
    pub fn ideal(&self, gens: &[Vector<F>]) -> Subspace<F> {
        let mut s = Subspace::new(self.ring.clone(), self.dim()).expect("field");
        let mut queue: Vec<Vector<F>> = gens.to_vec();
        while let Some(v) = queue.pop() {
            if s.insert(v.clone()) {
                for k in 0..self.dim() {
                    let e = self.unit(k);
                    queue.push(self.mul(&e, &v));
                    queue.push(self.mul(&v, &e));
                }
            }
        }
        s
    }

    /// The Jacobson radical. In characteristic 0 it is the radical of the
    /// trace form of the regular representation; over a prime field 𝔽_p it
    /// is cut out by the successive `p`-adic trace functionals
    /// `x ↦ (tr(L̃_x^{p^i}) mod p^{i+1}) / p^i`, `p^i ≤ dim` (Rónyai).
    pub fn radical(&self) -> Result<Subspace<F>> {
        let r = &self.ring;
        if !r.is_field() {
            return Err(Error::NonField(format!("{:?}", r.descriptor())));
        }
        let d = self.dim();
        let p = r.characteristic();
        let mut ideal: Vec<Vector<F>> = (0..d).map(|i| self.unit(i)).collect();
        let mut pi: u64 = 1;
        let mut stage = 0u32;
        loop {
            let forms: Vec<Vec<F::Elem>> = ideal
                .iter()
                .map(|b| (0..d).map(|j| self.trace_functional(&self.mul(b, &self.unit(j)), stage)).collect::<Result<Vec<_>>>())
                .collect::<Result<_>>()?;
            let kernel = nullspace(r, &transpose(r, &forms, d), ideal.len());
            ideal = kernel
                .iter()
                .map(|c| {
                    let mut v = self.zero();
                    for (ck, b) in c.iter().zip(&ideal) {
                        for (o, x) in v.iter_mut().zip(b) {
                            *o = r.add(o, &r.mul(ck, x));
                        }
                    }
                    v
                })
                .collect();
            if p == 0 || ideal.is_empty() {
                break;
            }
            pi = pi.saturating_mul(p);
            stage += 1;
            if pi > d as u64 {
                break;
            }
        }
        let mut s = Subspace::new(r.clone(), d)?;
        s.extend(ideal);
        Ok(s)
    }

    fn trace_functional(&self, z: &[F::Elem], stage: u32) -> Result<F::Elem> {
        let r = &self.ring;
        let rows = self.left_matrix_rows(z);
        if stage == 0 {
            let mut t = r.zero();
            for (k, row) in rows.iter().enumerate() {
                t = r.add(&t, &row[k]);
            }
            return Ok(t);
        }
        let p = r.characteristic();
        let d = self.dim();
        if d > 4096 {
            return Err(Error::SizeLimit(format!("radical of a {d}-dimensional algebra")));
        }
        let lift = |x: &F::Elem| r.residue(x).ok_or_else(|| Error::InvalidRing("p-adic traces need a prime field".into()));
        let pi = p.pow(stage);
        let m = pi * p;
        let mut a: Vec<Vec<u64>> = rows.iter().map(|row| row.iter().map(lift).collect::<Result<Vec<_>>>()).collect::<Result<_>>()?;
        let mut acc: Option<Vec<Vec<u64>>> = None;
        let mut k = pi;
        while k > 0 {
            if k & 1 == 1 {
                acc = Some(match acc {
                    None => a.clone(),
                    Some(b) => matmul_mod(&b, &a, m),
                });
            }
            k >>= 1;
            if k > 0 {
                a = matmul_mod(&a, &a, m);
            }
        }
        let acc = acc.expect("positive exponent");
        let t = (0..d).fold(0u64, |s, i| (s + acc[i][i]) % m);
        if t % pi != 0 {
            return Err(Error::Invariant(format!("trace {t} of a {pi}-th power is not divisible by {pi}")));
        }
        Ok(r.from_int((t / pi) as i64))
    }

    /// `A/I` on the basis vectors outside the pivots of `ideal`; `ideal`
    /// must be a two-sided ideal spanned by homogeneous vectors.
    pub fn quotient(&self, ideal: &Subspace<F>) -> Result<FiniteAlgebra<F>> {
        let keep = ideal.free_columns();
        let parity = keep.iter().map(|&i| self.parity[i]).collect();
        let one = ideal.quotient_coords(&self.one);
        FiniteAlgebra::from_fn(self.ring.clone(), parity, one, |i, j| Ok(ideal.quotient_coords(&self.table[keep[i]][keep[j]])))
    }

    /// A basis of the even part of the centre.
    pub fn even_center(&self) -> Vec<Vector<F>> {
        let r = &self.ring;
        let d = self.dim();
        let even: Vec<usize> = (0..d).filter(|&i| self.parity[i] == 0).collect();
        let mut rows = Vec::new();
        for j in 0..d {
            for out in 0..d {
                rows.push(even.iter().map(|&i| r.sub(&self.table[i][j][out], &self.table[j][i][out])).collect::<Vec<_>>());
            }
        }
        nullspace(r, &rows, even.len())
            .into_iter()
            .map(|c| {
                let mut v = self.zero();
                for (ck, &i) in c.iter().zip(&even) {
                    v[i] = ck.clone();
                }
                v
            })
            .collect()
    }

    /// Number of simple supermodules up to parity shift over a prime field:
    /// the simple factors of the even centre of `A/rad A`, counted as the
    /// dimension of the Frobenius-fixed subalgebra.
    pub fn count_simple_supermodules(&self) -> Result<usize> {
        let r = &self.ring;
        let p = r.characteristic();
        if p == 0 || r.residue(&r.one()).is_none() {
            return Err(Error::InvalidRing("simple counts need a prime field".into()));
        }
        let semisimple = self.quotient(&self.radical()?)?;
        let z = semisimple.even_center();
        let moved: Vec<Vector<F>> = z.iter().map(|x| semisimple.pow(x, p).iter().zip(x).map(|(a, b)| r.sub(a, b)).collect()).collect();
        Ok(z.len() - rank(r, &moved))
    }
}

fn transpose<F: Ring>(r: &F, rows: &[Vec<F::Elem>], ncols: usize) -> Vec<Vec<F::Elem>> {
    (0..ncols).map(|j| rows.iter().map(|row| row.get(j).cloned().unwrap_or_else(|| r.zero())).collect()).collect()
}

fn matmul_mod(a: &[Vec<u64>], b: &[Vec<u64>], m: u64) -> Vec<Vec<u64>> {
    let d = a.len();
    let mut out = vec![vec![0u64; d]; d];
    for i in 0..d {
        for (k, &x) in a[i].iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (o, &y) in out[i].iter_mut().zip(&b[k]) {
                *o = (*o + x * y) % m;
            }
        }
    }
    out
}
