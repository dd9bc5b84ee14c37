//! ℚ[q]/Φ_e(q): the specialization of q to a primitive e-th root of unity.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Integer coefficients of the e-th cyclotomic polynomial, lowest first.
pub fn cyclotomic_poly(e: u32) -> Vec<BigInt> {
    assert!(e >= 1);
    // x^e - 1 divided by Φ_d for every proper divisor d.
    let mut p = vec![BigInt::zero(); e as usize + 1];
    p[0] = BigInt::from(-1);
    p[e as usize] = BigInt::one();
    for d in 1..e {
        if e % d == 0 {
            p = div_monic(&p, &cyclotomic_poly(d));
        }
    }
    p
}

fn div_monic(f: &[BigInt], g: &[BigInt]) -> Vec<BigInt> {
    let mut r = f.to_vec();
    let mut quot = vec![BigInt::zero(); f.len() - g.len() + 1];
    for k in (0..quot.len()).rev() {
        let c = r[k + g.len() - 1].clone();
        for (j, gj) in g.iter().enumerate() {
            r[k + j] -= &c * gj;
        }
        quot[k] = c;
    }
    debug_assert!(r.iter().all(|c| c.is_zero()));
    quot
}

pub type Cyc = Vec<BigRational>;

#[derive(Clone, Debug)]
pub struct CycloField {
    pub e: u32,
    phi: Vec<BigRational>,
}

impl CycloField {
    pub fn new(e: u32) -> Self {
        let phi = cyclotomic_poly(e).into_iter().map(BigRational::from_integer).collect();
        CycloField { e, phi }
    }

    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    pub fn constant(&self, c: BigRational) -> Cyc {
        let mut v = vec![BigRational::zero(); self.degree()];
        v[0] = c;
        v
    }

    pub fn q_power(&self, k: i64) -> Cyc {
        let k = k.rem_euclid(self.e as i64) as usize;
        let mut x = vec![BigRational::zero(); k + 1];
        x[k] = BigRational::one();
        self.reduce(x)
    }

    fn reduce(&self, mut x: Vec<BigRational>) -> Cyc {
        let d = self.degree();
        while x.len() > d {
            let c = x.pop().unwrap();
            if c.is_zero() {
                continue;
            }
            let off = x.len() - d;
            for j in 0..d {
                x[off + j] -= &c * &self.phi[j];
            }
        }
        x.resize(d, BigRational::zero());
        x
    }

    pub fn add(&self, x: &Cyc, y: &Cyc) -> Cyc {
        x.iter().zip(y).map(|(a, b)| a + b).collect()
    }

    pub fn sub(&self, x: &Cyc, y: &Cyc) -> Cyc {
        x.iter().zip(y).map(|(a, b)| a - b).collect()
    }

    pub fn mul(&self, x: &Cyc, y: &Cyc) -> Cyc {
        let mut out = vec![BigRational::zero(); 2 * self.degree()];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        self.reduce(out)
    }

    /// Inverse via the extended Euclidean algorithm against Φ_e.
    pub fn inv(&self, x: &Cyc) -> Option<Cyc> {
        let trim = |mut v: Vec<BigRational>| {
            while v.last().is_some_and(|c| c.is_zero()) {
                v.pop();
            }
            v
        };
        let (mut r0, mut r1) = (self.phi.clone(), trim(x.clone()));
        if r1.is_empty() {
            return None;
        }
        let (mut s0, mut s1): (Vec<BigRational>, Vec<BigRational>) = (Vec::new(), vec![BigRational::one()]);
        while r1.len() > 1 {
            let (quot, rem) = poly_divmod(&r0, &r1);
            let s2 = trim(poly_sub(&s0, &poly_mul(&quot, &s1)));
            r0 = std::mem::replace(&mut r1, trim(rem));
            s0 = std::mem::replace(&mut s1, s2);
            if r1.is_empty() {
                return None;
            }
        }
        let c = r1[0].clone();
        let mut out: Vec<BigRational> = s1.into_iter().map(|v| v / &c).collect();
        out.resize(self.degree().max(out.len()), BigRational::zero());
        Some(self.reduce(out))
    }
}

fn poly_mul(f: &[BigRational], g: &[BigRational]) -> Vec<BigRational> {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        for (j, b) in g.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

fn poly_sub(f: &[BigRational], g: &[BigRational]) -> Vec<BigRational> {
    let n = f.len().max(g.len());
    (0..n).map(|k| f.get(k).cloned().unwrap_or_else(BigRational::zero) - g.get(k).cloned().unwrap_or_else(BigRational::zero)).collect()
}

fn poly_divmod(f: &[BigRational], g: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = f.to_vec();
    if r.len() < g.len() {
        return (Vec::new(), r);
    }
    let lg = g.last().unwrap().clone();
    let mut quot = vec![BigRational::zero(); f.len() - g.len() + 1];
    for k in (0..quot.len()).rev() {
        let c = &r[k + g.len() - 1] / &lg;
        for (j, gj) in g.iter().enumerate() {
            r[k + j] -= &c * gj;
        }
        quot[k] = c;
    }
    r.truncate(g.len() - 1);
    (quot, r)
}
