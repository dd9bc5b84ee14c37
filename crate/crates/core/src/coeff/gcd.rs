//! Greatest common divisors in ℤ[a, q^±] via primitive pseudo-remainder
//! sequences, carried out in arbitrary precision so that intermediate
//! coefficient growth can never overflow.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::laurent::{Laurent, Monomial};

/// Dense polynomial in `q`, lowest degree first, no trailing zeros.
type UPoly = Vec<BigInt>;
/// Dense polynomial in `a` with coefficients in ℤ[q].
type BPoly = Vec<UPoly>;

fn u_trim(mut f: UPoly) -> UPoly {
    while f.last().is_some_and(|c| c.is_zero()) {
        f.pop();
    }
    f
}

fn u_content(f: &UPoly) -> BigInt {
    f.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn u_div_int(f: &UPoly, d: &BigInt) -> UPoly {
    f.iter().map(|c| c / d).collect()
}

fn u_mul(f: &UPoly, g: &UPoly) -> UPoly {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); f.len() + g.len() - 1];
    for (i, x) in f.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in g.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    u_trim(out)
}

fn u_sub(f: &UPoly, g: &UPoly) -> UPoly {
    let n = f.len().max(g.len());
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let x = f.get(k).cloned().unwrap_or_default();
        let y = g.get(k).cloned().unwrap_or_default();
        out.push(x - y);
    }
    u_trim(out)
}

fn u_shift(f: &UPoly, k: usize) -> UPoly {
    if f.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); k];
    out.extend(f.iter().cloned());
    out
}

fn u_scale(f: &UPoly, c: &BigInt) -> UPoly {
    u_trim(f.iter().map(|x| x * c).collect())
}

fn u_prem(f: &UPoly, g: &UPoly) -> UPoly {
    let mut r = f.clone();
    let lg = g.last().unwrap().clone();
    while r.len() >= g.len() && !r.is_empty() {
        let lr = r.last().unwrap().clone();
        let k = r.len() - g.len();
        r = u_sub(&u_scale(&r, &lg), &u_shift(&u_scale(g, &lr), k));
    }
    r
}

fn u_primitive(f: &UPoly) -> UPoly {
    let c = u_content(f);
    if c.is_zero() || c.is_one() {
        f.clone()
    } else {
        u_div_int(f, &c)
    }
}

fn u_normalize_sign(f: UPoly) -> UPoly {
    if f.last().is_some_and(|c| c.is_negative()) {
        f.into_iter().map(|c| -c).collect()
    } else {
        f
    }
}

fn u_gcd(f: &UPoly, g: &UPoly) -> UPoly {
    if f.is_empty() {
        return u_normalize_sign(g.clone());
    }
    if g.is_empty() {
        return u_normalize_sign(f.clone());
    }
    let c = u_content(f).gcd(&u_content(g));
    let (mut x, mut y) = (u_primitive(f), u_primitive(g));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = u_prem(&x, &y);
        x = y;
        y = u_primitive(&r);
    }
    u_normalize_sign(u_scale(&u_primitive(&x), &c))
}

fn u_div_exact(f: &UPoly, g: &UPoly) -> Option<UPoly> {
    if g.is_empty() {
        return None;
    }
    if f.is_empty() {
        return Some(Vec::new());
    }
    if f.len() < g.len() {
        return None;
    }
    let lg = g.last().unwrap();
    let mut r = f.clone();
    let mut quot = vec![BigInt::zero(); f.len() - g.len() + 1];
    while r.len() >= g.len() && !r.is_empty() {
        let (qc, rem) = r.last().unwrap().div_rem(lg);
        if !rem.is_zero() {
            return None;
        }
        let k = r.len() - g.len();
        r = u_sub(&r, &u_shift(&u_scale(g, &qc), k));
        quot[k] = qc;
    }
    if r.is_empty() {
        Some(u_trim(quot))
    } else {
        None
    }
}

fn b_trim(mut f: BPoly) -> BPoly {
    while f.last().is_some_and(|c| c.is_empty()) {
        f.pop();
    }
    f
}

fn b_content(f: &BPoly) -> UPoly {
    f.iter().fold(Vec::new(), |g, c| u_gcd(&g, c))
}

fn b_primitive(f: &BPoly) -> BPoly {
    let c = b_content(f);
    if c.len() == 1 && c[0].is_one() {
        return f.clone();
    }
    f.iter().map(|x| u_div_exact(x, &c).expect("content divides")).collect()
}

fn b_prem(f: &BPoly, g: &BPoly) -> BPoly {
    let mut r = f.clone();
    let lg = g.last().unwrap().clone();
    while r.len() >= g.len() && !r.is_empty() {
        let lr = r.last().unwrap().clone();
        let k = r.len() - g.len();
        let mut next: BPoly = r.iter().map(|c| u_mul(c, &lg)).collect();
        for (j, gc) in g.iter().enumerate() {
            next[j + k] = u_sub(&next[j + k], &u_mul(gc, &lr));
        }
        r = b_trim(next);
    }
    r
}

fn b_gcd(f: &BPoly, g: &BPoly) -> BPoly {
    if f.is_empty() {
        return g.clone();
    }
    if g.is_empty() {
        return f.clone();
    }
    let c = u_gcd(&b_content(f), &b_content(g));
    let (mut x, mut y) = (b_primitive(f), b_primitive(g));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = b_prem(&x, &y);
        x = y;
        y = if r.is_empty() { r } else { b_primitive(&r) };
    }
    b_primitive(&x).iter().map(|u| u_mul(u, &c)).collect()
}

fn to_bpoly(f: &Laurent) -> BPoly {
    let shift = f.min_q().unwrap_or(0);
    let mut out: BPoly = vec![Vec::new(); f.max_a().map_or(0, |a| a as usize + 1)];
    for &(m, c) in f.terms() {
        let row = &mut out[m.a as usize];
        let j = (m.q - shift) as usize;
        if row.len() <= j {
            row.resize(j + 1, BigInt::zero());
        }
        row[j] = BigInt::from(c);
    }
    out
}

fn from_bpoly(f: &BPoly) -> Laurent {
    let mut terms = Vec::new();
    for (i, row) in f.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            if !c.is_zero() {
                let c = c.to_i128().expect("gcd coefficient exceeds i128");
                terms.push((Monomial::new(i as u32, j as i32), c));
            }
        }
    }
    Laurent::from_terms(terms)
}

/// Normalizes a nonzero element up to units: lowest q-exponent zero and
/// positive lexicographically leading coefficient.
pub fn normalize_unit(f: &Laurent) -> Laurent {
    let f = match f.min_q() {
        Some(k) if k != 0 => f.shift_q(-k),
        _ => f.clone(),
    };
    match f.leading() {
        Some((_, c)) if c < 0 => f.neg(),
        _ => f,
    }
}

/// Gcd in ℤ[a, q^±], normalized by [`normalize_unit`]. `gcd(0, 0) = 0`.
pub fn gcd(f: &Laurent, g: &Laurent) -> Laurent {
    if f.is_zero() {
        return normalize_unit(g);
    }
    if g.is_zero() {
        return normalize_unit(f);
    }
    if f.is_monomial() || g.is_monomial() {
        // Only an integer and a common power of `a` can be shared.
        let c = num_integer::Integer::gcd(&f.content(), &g.content());
        let amin = f.terms().iter().chain(g.terms()).map(|t| t.0.a).min().unwrap();
        return Laurent::monomial(Monomial::new(amin, 0), c);
    }
    normalize_unit(&from_bpoly(&b_gcd(&to_bpoly(f), &to_bpoly(g))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qint(k: usize) -> Laurent {
        Laurent::from_q_coeffs(&vec![1; k])
    }

    #[test]
    fn univariate_gcds() {
        assert_eq!(gcd(&qint(4), &qint(6)), qint(2));
        assert_eq!(gcd(&qint(3), &qint(4)), Laurent::one());
        let f = qint(2).mul(&Laurent::constant(6));
        let g = qint(2).mul(&Laurent::constant(4)).shift_q(-3);
        assert_eq!(gcd(&f, &g), qint(2).scale(2));
    }

    #[test]
    fn bivariate_gcds() {
        let x = Laurent::a().add(&Laurent::q());
        let y = Laurent::a().sub(&Laurent::one());
        let z = qint(3);
        let f = x.mul(&y).mul(&z);
        let g = x.mul(&z).mul(&z).scale(3);
        assert_eq!(gcd(&f, &g), normalize_unit(&x.mul(&z)));
        assert_eq!(gcd(&Laurent::a().mul(&x), &Laurent::a().scale(2)), Laurent::a());
    }
}
