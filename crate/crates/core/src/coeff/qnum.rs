//! Quantum integers, factorials and related scalars. Everything is computed
//! in ℤ[a, q^±] first and pushed into the target ring, so specializations
//! where `[2]` vanishes still receive the correct polynomial values.

use super::laurent::{Laurent, Monomial};
use super::Ring;

/// `[k] = 1 + q + … + q^{k-1}`.
pub fn q_int_poly(k: u32) -> Laurent {
    Laurent::from_q_coeffs(&vec![1; k as usize])
}

/// `⟦k⟧ = 1 + q² + … + q^{2(k-1)}`, the q²-integer.
pub fn q2_int_poly(k: u32) -> Laurent {
    q_int_poly(k).subs_q_power(2)
}

pub fn q_factorial_poly(k: u32) -> Laurent {
    (1..=k).fold(Laurent::one(), |acc, j| acc.mul(&q_int_poly(j)))
}

/// `[k₁+…+k_r]! / ([k₁]!⋯[k_r]!)`.
///
/// Panics if the division leaves a remainder, which cannot happen for a
/// correct factorial implementation.
pub fn q_multinomial_poly(parts: &[u32]) -> Laurent {
    let n: u32 = parts.iter().sum();
    let den = parts.iter().fold(Laurent::one(), |acc, &k| acc.mul(&q_factorial_poly(k)));
    q_factorial_poly(n).div_exact(&den).expect("q-multinomial division left a remainder")
}

pub fn q_binomial_poly(n: u32, k: u32) -> Laurent {
    if k > n {
        return Laurent::zero();
    }
    q_multinomial_poly(&[k, n - k])
}

/// `(a(q-1)/[2])^s · [n]!`, which is a polynomial whenever `2s ≤ n`: the
/// even factors `[2j] = [2]⟦j⟧` absorb the denominators.
pub fn even_ratio_power_poly(n: u32, s: u32) -> Laurent {
    assert!(2 * s <= n, "(a(q-1)/[2])^{s}[{n}]! is not polynomial");
    let mut acc = Laurent::monomial(Monomial::new(s, 0), 1);
    acc = acc.mul(&Laurent::q().sub(&Laurent::one()).pow(s));
    acc = acc.mul(&q_int_poly(2).pow(n / 2 - s));
    for j in (1..=n).step_by(2) {
        acc = acc.mul(&q_int_poly(j));
    }
    for k in 1..=n / 2 {
        acc = acc.mul(&q2_int_poly(k));
    }
    acc
}

pub fn q_integer<R: Ring>(ring: &R, k: u32) -> R::Elem {
    ring.from_laurent(&q_int_poly(k))
}

pub fn q2_integer<R: Ring>(ring: &R, k: u32) -> R::Elem {
    ring.from_laurent(&q2_int_poly(k))
}

pub fn q_factorial<R: Ring>(ring: &R, k: u32) -> R::Elem {
    ring.from_laurent(&q_factorial_poly(k))
}

pub fn q_multinomial<R: Ring>(ring: &R, parts: &[u32]) -> R::Elem {
    ring.from_laurent(&q_multinomial_poly(parts))
}

pub fn q_binomial<R: Ring>(ring: &R, n: u32, k: u32) -> R::Elem {
    ring.from_laurent(&q_binomial_poly(n, k))
}

pub fn even_ratio_power<R: Ring>(ring: &R, n: u32, s: u32) -> R::Elem {
    ring.from_laurent(&even_ratio_power_poly(n, s))
}

/// Least `k ≥ 1` with `[k] = 0` in the ring, searching up to `bound`.
pub fn q_characteristic<R: Ring>(ring: &R, bound: u32) -> Option<u32> {
    (1..=bound).find(|&k| ring.is_zero(&q_integer(ring, k)))
}

/// Least `k ≥ 1` with `⟦k⟧ = 0` in the ring, searching up to `bound`.
pub fn q2_characteristic<R: Ring>(ring: &R, bound: u32) -> Option<u32> {
    (1..=bound).find(|&k| ring.is_zero(&q2_integer(ring, k)))
}

#[cfg(test)]
mod tests {
    use super::super::{FiniteField, IntegerLaurent, RationalSpecialization};
    use super::*;
    use num_rational::BigRational;

    fn poincare_oracle(n: usize) -> Vec<i128> {
        // Σ_{w ∈ S_n} q^{ℓ(w)} by brute-force inversion counting.
        let mut counts = vec![0i128; n * (n.max(1) - 1) / 2 + 1];
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            let inv = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
            counts[inv] += 1;
            // next permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else { break };
            let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
            perm.swap(i, j);
            perm[i + 1..].reverse();
        }
        counts
    }

    #[test]
    fn factorial_is_poincare_polynomial() {
        for n in 0..=7 {
            assert_eq!(q_factorial_poly(n), Laurent::from_q_coeffs(&poincare_oracle(n as usize)));
        }
    }

    #[test]
    fn binomials_satisfy_pascal() {
        for n in 1..9 {
            for k in 1..n {
                let lhs = q_binomial_poly(n, k);
                let rhs = q_binomial_poly(n - 1, k - 1).add(&q_binomial_poly(n - 1, k).shift_q(k as i32));
                assert_eq!(lhs, rhs);
            }
        }
        assert_eq!(q_multinomial_poly(&[1, 1, 1]), q_factorial_poly(3));
    }

    #[test]
    fn even_ratio_power_matches_definition() {
        for n in 0..8u32 {
            for s in 0..=n / 2 {
                let p = even_ratio_power_poly(n, s);
                let lhs = p.mul(&q_int_poly(2).pow(s));
                let rhs = Laurent::a().mul(&Laurent::q().sub(&Laurent::one())).pow(s).mul(&q_factorial_poly(n));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn characteristics() {
        let ring = FiniteField::new(3, 1, 1);
        assert_eq!(q_characteristic(&ring, 10), Some(3));
        assert_eq!(q2_characteristic(&ring, 10), Some(3));
        let ring = RationalSpecialization::new(BigRational::from_integer((-1).into()), BigRational::from_integer(1.into()));
        assert_eq!(q_characteristic(&ring, 10), Some(2));
        assert_eq!(q2_characteristic(&ring, 10), None);
        assert_eq!(q_characteristic(&IntegerLaurent, 10), None);
    }
}
