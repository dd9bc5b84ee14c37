//! Sparse polynomials in `a` and `q` with integer coefficients, where `q`
//! may carry negative exponents and `a` may not.

use std::fmt;

/// Exponent pair of a monomial `a^a q^q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub a: u32,
    pub q: i32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { a: 0, q: 0 };

    pub fn new(a: u32, q: i32) -> Self {
        Monomial { a, q }
    }

    fn mul(self, other: Monomial) -> Monomial {
        Monomial { a: self.a + other.a, q: self.q + other.q }
    }
}

/// Element of ℤ[a, q, q⁻¹]. Terms are kept sorted by `(a, q)` with no zero
/// coefficients, so structural equality is ring equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Laurent {
    terms: Vec<(Monomial, i128)>,
}

fn add_c(x: i128, y: i128) -> i128 {
    x.checked_add(y).expect("integer coefficient overflow")
}

fn mul_c(x: i128, y: i128) -> i128 {
    x.checked_mul(y).expect("integer coefficient overflow")
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i128) -> Self {
        Self::monomial(Monomial::ONE, c)
    }

    pub fn monomial(m: Monomial, c: i128) -> Self {
        if c == 0 {
            Self::zero()
        } else {
            Laurent { terms: vec![(m, c)] }
        }
    }

    pub fn q() -> Self {
        Self::monomial(Monomial::new(0, 1), 1)
    }

    pub fn q_pow(k: i32) -> Self {
        Self::monomial(Monomial::new(0, k), 1)
    }

    pub fn a() -> Self {
        Self::monomial(Monomial::new(1, 0), 1)
    }

    /// Builds from arbitrary `(a, q, c)` triples, combining duplicates.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, i128)>>(it: I) -> Self {
        let mut v: Vec<(Monomial, i128)> = it.into_iter().collect();
        v.sort_by_key(|t| t.0);
        let mut out: Vec<(Monomial, i128)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = add_c(*lc, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        Laurent { terms: out }
    }

    /// Univariate polynomial in `q` from coefficients, lowest degree first.
    pub fn from_q_coeffs(coeffs: &[i128]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(j, &c)| (Monomial::new(0, j as i32), c)))
    }

    pub fn terms(&self) -> &[(Monomial, i128)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0] == (Monomial::ONE, 1)
    }

    pub fn as_constant(&self) -> Option<i128> {
        match self.terms.as_slice() {
            [] => Some(0),
            [(m, c)] if *m == Monomial::ONE => Some(*c),
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn has_a(&self) -> bool {
        self.terms.iter().any(|t| t.0.a > 0)
    }

    /// Lexicographically largest term, `a` first.
    pub fn leading(&self) -> Option<(Monomial, i128)> {
        self.terms.last().copied()
    }

    pub fn min_q(&self) -> Option<i32> {
        self.terms.iter().map(|t| t.0.q).min()
    }

    pub fn max_q(&self) -> Option<i32> {
        self.terms.iter().map(|t| t.0.q).max()
    }

    pub fn max_a(&self) -> Option<u32> {
        self.terms.last().map(|t| t.0.a)
    }

    pub fn neg(&self) -> Self {
        Laurent { terms: self.terms.iter().map(|&(m, c)| (m, -c)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, -1)
    }

    fn combine(&self, other: &Self, sign: i128) -> Self {
        let (x, y) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(x.len() + y.len());
        let (mut i, mut j) = (0, 0);
        while i < x.len() || j < y.len() {
            if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
                out.push(x[i]);
                i += 1;
            } else if i == x.len() || y[j].0 < x[i].0 {
                out.push((y[j].0, sign * y[j].1));
                j += 1;
            } else {
                let c = add_c(x[i].1, sign * y[j].1);
                if c != 0 {
                    out.push((x[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        Laurent { terms: out }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if other.terms.len() == 1 {
            let (m, c) = other.terms[0];
            return self.mul_term(m, c);
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms[0];
            return other.mul_term(m, c);
        }
        let mut v = Vec::with_capacity(self.terms.len() * other.terms.len());
        for &(m1, c1) in &self.terms {
            for &(m2, c2) in &other.terms {
                v.push((m1.mul(m2), mul_c(c1, c2)));
            }
        }
        Self::from_terms(v)
    }

    pub fn mul_term(&self, m: Monomial, c: i128) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Laurent { terms: self.terms.iter().map(|&(m2, c2)| (m.mul(m2), mul_c(c, c2))).collect() }
    }

    pub fn scale(&self, c: i128) -> Self {
        self.mul_term(Monomial::ONE, c)
    }

    pub fn shift_q(&self, k: i32) -> Self {
        self.mul_term(Monomial::new(0, k), 1)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Gcd of the integer coefficients (nonnegative).
    pub fn content(&self) -> i128 {
        self.terms.iter().fold(0i128, |g, t| num_integer::Integer::gcd(&g, &t.1))
    }

    /// Divides every coefficient by `d`, which must divide all of them.
    pub fn div_int(&self, d: i128) -> Self {
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|&(m, c)| {
                    debug_assert_eq!(c % d, 0);
                    (m, c / d)
                })
                .collect(),
        }
    }

    /// Exact quotient `self / d` in ℤ[a,q^±], or `None` if `d` does not divide.
    pub fn div_exact(&self, d: &Laurent) -> Option<Laurent> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.terms.len() == 1 {
            let (m, c) = d.terms[0];
            let mut out = Vec::with_capacity(self.terms.len());
            for &(m2, c2) in &self.terms {
                if m2.a < m.a || c2 % c != 0 {
                    return None;
                }
                out.push((Monomial::new(m2.a - m.a, m2.q - m.q), c2 / c));
            }
            return Some(Laurent { terms: out });
        }
        // Lowest q-degree slices multiply without cancellation, which bounds
        // the quotient from below and guarantees termination.
        let q_floor = self.min_q().unwrap() - d.min_q().unwrap();
        let (lm, lc) = d.leading().unwrap();
        let mut r = self.clone();
        let mut quot = Vec::new();
        while let Some((rm, rc)) = r.leading() {
            if rm.a < lm.a || rc % lc != 0 {
                return None;
            }
            let m = Monomial::new(rm.a - lm.a, rm.q - lm.q);
            if m.q < q_floor {
                return None;
            }
            let c = rc / lc;
            quot.push((m, c));
            r = r.sub(&d.mul_term(m, c));
        }
        Some(Self::from_terms(quot))
    }

    /// Applies the substitution `q ↦ q^k` (used for q² quantities).
    pub fn subs_q_power(&self, k: i32) -> Self {
        Self::from_terms(self.terms.iter().map(|&(m, c)| (Monomial::new(m.a, m.q * k), c)))
    }

    /// Evaluates at `q = 1, a = 1`-style integer points (testing aid).
    pub fn eval_i128(&self, q: i128, a: i128) -> Option<i128> {
        let mut acc: i128 = 0;
        for &(m, c) in &self.terms {
            if m.q < 0 && q.abs() != 1 {
                return None;
            }
            let qp = if m.q >= 0 { q.checked_pow(m.q as u32)? } else { q.checked_pow((-m.q) as u32)? };
            let ap = a.checked_pow(m.a)?;
            acc = acc.checked_add(c.checked_mul(qp)?.checked_mul(ap)?)?;
        }
        Some(acc)
    }
}

impl serde::Serialize for Laurent {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, &(m, c)) in self.terms.iter().enumerate() {
            let mag = c.unsigned_abs();
            if k == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if c < 0 { " - " } else { " + " })?;
            }
            let mut parts = Vec::new();
            if mag != 1 || m == Monomial::ONE {
                parts.push(mag.to_string());
            }
            match m.a {
                0 => {}
                1 => parts.push("a".into()),
                i => parts.push(format!("a^{i}")),
            }
            match m.q {
                0 => {}
                1 => parts.push("q".into()),
                j => parts.push(format!("q^{j}")),
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}
