//! The fraction field ℚ(a, q) as reduced quotients of ℤ[a, q^±].

use super::gcd::gcd;
use super::laurent::Laurent;

/// `num / den` with `gcd(num, den) = 1`, the denominator normalized to have
/// lowest q-exponent zero and positive leading coefficient. This makes the
/// representation unique, so derived equality is field equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Laurent,
    den: Laurent,
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: Laurent::zero(), den: Laurent::one() }
    }

    pub fn from_poly(p: Laurent) -> Self {
        RatFunc { num: p, den: Laurent::one() }
    }

    pub fn num(&self) -> &Laurent {
        &self.num
    }

    pub fn den(&self) -> &Laurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Builds `num / den` from arbitrary coprime-or-not input.
    pub fn new(num: Laurent, den: Laurent) -> Self {
        assert!(!den.is_zero(), "division by zero in Q(a,q)");
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return Self::from_poly(num);
        }
        let g = gcd(&num, &den);
        if g.is_one() {
            Self::normalized(num, den)
        } else {
            Self::normalized(num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        }
    }

    /// Fixes the unit ambiguity of an already coprime pair.
    fn normalized(mut num: Laurent, mut den: Laurent) -> Self {
        let k = den.min_q().unwrap();
        if k != 0 {
            den = den.shift_q(-k);
            num = num.shift_q(-k);
        }
        if den.leading().unwrap().1 < 0 {
            den = den.neg();
            num = num.neg();
        }
        RatFunc { num, den }
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            if self.den.is_one() {
                return Self::from_poly(self.num.add(&o.num));
            }
            return Self::new(self.num.add(&o.num), self.den.clone());
        }
        // A polynomial summand keeps the other fraction reduced.
        if self.den.is_one() {
            return RatFunc { num: self.num.mul(&o.den).add(&o.num), den: o.den.clone() };
        }
        if o.den.is_one() {
            return RatFunc { num: o.num.mul(&self.den).add(&self.num), den: self.den.clone() };
        }
        let g = gcd(&self.den, &o.den);
        let d1 = self.den.div_exact(&g).unwrap();
        let d2 = o.den.div_exact(&g).unwrap();
        let num = self.num.mul(&d2).add(&o.num.mul(&d1));
        Self::new(num, d1.mul(&o.den))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return Self::from_poly(self.num.mul(&o.num));
        }
        let (mut n1, mut d1) = (self.num.clone(), self.den.clone());
        let (mut n2, mut d2) = (o.num.clone(), o.den.clone());
        if !d2.is_one() {
            let g = gcd(&n1, &d2);
            if !g.is_one() {
                n1 = n1.div_exact(&g).unwrap();
                d2 = d2.div_exact(&g).unwrap();
            }
        }
        if !d1.is_one() {
            let g = gcd(&n2, &d1);
            if !g.is_one() {
                n2 = n2.div_exact(&g).unwrap();
                d1 = d1.div_exact(&g).unwrap();
            }
        }
        Self::normalized(n1.mul(&n2), d1.mul(&d2))
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::normalized(self.den.clone(), self.num.clone()))
    }
}

impl std::fmt::Display for RatFunc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qint(k: usize) -> Laurent {
        Laurent::from_q_coeffs(&vec![1; k])
    }

    #[test]
    fn field_operations() {
        let x = RatFunc::new(qint(4), qint(2));
        assert!(x.is_polynomial());
        let y = RatFunc::new(Laurent::one(), qint(3));
        let z = x.mul(&y).mul(&RatFunc::from_poly(qint(3)));
        assert_eq!(z, x);
        let s = y.add(&y.neg());
        assert!(s.is_zero());
        assert_eq!(y.inv().unwrap(), RatFunc::from_poly(qint(3)));
        let w = RatFunc::new(Laurent::a(), Laurent::q().scale(-2));
        assert_eq!(w.den(), &Laurent::constant(2));
        assert_eq!(w.num(), &Laurent::a().shift_q(-1).neg());
    }

    #[test]
    fn sums_of_fractions_reduce() {
        // 1/(1+q) + q/(1+q) = 1
        let d = qint(2);
        let s = RatFunc::new(Laurent::one(), d.clone()).add(&RatFunc::new(Laurent::q(), d));
        assert_eq!(s, RatFunc::from_poly(Laurent::one()));
        // 1/[2] + 1/[3] = ([3]+[2])/([2][3])
        let t = RatFunc::new(Laurent::one(), qint(2)).add(&RatFunc::new(Laurent::one(), qint(3)));
        assert_eq!(t, RatFunc::new(qint(3).add(&qint(2)), qint(2).mul(&qint(3))));
    }
}
