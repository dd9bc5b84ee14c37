//! Coefficient rings. Every algorithm in the crate is generic over [`Ring`];
//! [`RingDescriptor`] and [`AnyRing`] are the runtime-selectable side used by
//! the CLI and the C ABI.

mod cyclo;
mod gcd;
mod laurent;
mod qnum;
mod ratfunc;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

pub use cyclo::{cyclotomic_poly, Cyc, CycloField};
pub use gcd::gcd as laurent_gcd;
pub use laurent::{Laurent, Monomial};
pub use qnum::*;
pub use ratfunc::RatFunc;

use crate::error::{Error, Result};

/// A commutative ring containing distinguished elements `q` (always a unit)
/// and `a`. Elements are plain values; all operations go through the ring
/// object so that specializations can carry their parameters.
pub trait Ring: Clone + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync + 'static;

    fn descriptor(&self) -> RingDescriptor;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: i64) -> Self::Elem;
    fn q(&self) -> Self::Elem;
    fn q_inv(&self) -> Self::Elem;
    fn a(&self) -> Self::Elem;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;
    fn is_field(&self) -> bool;
    /// Multiplicative inverse, if `x` is a unit.
    fn inv(&self, x: &Self::Elem) -> Option<Self::Elem>;
    /// 0 for characteristic zero.
    fn characteristic(&self) -> u64;
    fn render(&self, x: &Self::Elem) -> String;
    fn to_json(&self, x: &Self::Elem) -> Value;

    /// Exact quotient `x / y` when it exists in the ring.
    fn div_exact(&self, x: &Self::Elem, y: &Self::Elem) -> Option<Self::Elem> {
        self.inv(y).map(|i| self.mul(x, &i))
    }

    /// The representative in `0..p` of an element of a prime field.
    fn residue(&self, _x: &Self::Elem) -> Option<u64> {
        None
    }

    fn is_one(&self, x: &Self::Elem) -> bool {
        *x == self.one()
    }

    fn add_assign(&self, x: &mut Self::Elem, y: &Self::Elem) {
        *x = self.add(x, y);
    }

    fn pow(&self, x: &Self::Elem, k: u32) -> Self::Elem {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, x);
        }
        acc
    }

    fn q_pow(&self, k: i32) -> Self::Elem {
        if k >= 0 {
            self.pow(&self.q(), k as u32)
        } else {
            self.pow(&self.q_inv(), (-k) as u32)
        }
    }

    /// The canonical homomorphism from ℤ[a, q^±].
    fn from_laurent(&self, p: &Laurent) -> Self::Elem {
        let mut acc = self.zero();
        for &(m, c) in p.terms() {
            let c = self.from_int(i64::try_from(c).expect("coefficient exceeds i64"));
            let t = self.mul(&self.mul(&c, &self.pow(&self.a(), m.a)), &self.q_pow(m.q));
            acc = self.add(&acc, &t);
        }
        acc
    }
}

/// Runtime description of a coefficient ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum RingDescriptor {
    /// ℤ[a, q, q⁻¹]; `a` is not inverted.
    IntegerLaurent,
    /// ℚ(a, q).
    FractionField,
    /// ℚ[q]/Φ_e with `a` specialized to a rational.
    Cyclotomic { e: u32, a: String },
    /// 𝔽_p with `q`, `a` specialized.
    FiniteField { p: u64, q: u64, a: u64 },
    /// ℚ with `q`, `a` specialized to rationals.
    Rational { q: String, a: String },
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::InvalidRing(format!("not a rational number: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(BigRational::new(n, d))
    } else {
        Ok(BigRational::from_integer(BigInt::from_str(s).map_err(|_| bad())?))
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

impl RingDescriptor {
    /// Parses the `--ring` grammar:
    /// `ZaQ | Qaq | Qq | cyclo:e[,a=r] | gf:p,q=v[,a=v] | Q[:q=r,a=r]`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, rest) = match s.split_once(':') {
            Some((h, r)) => (h, Some(r)),
            None => match s.split_once(',') {
                Some((h, r)) => (h, Some(r)),
                None => (s, None),
            },
        };
        let mut kv = std::collections::BTreeMap::new();
        let mut positional = Vec::new();
        if let Some(rest) = rest {
            for part in rest.split(',').map(str::trim).filter(|p| !p.is_empty()) {
                match part.split_once('=') {
                    Some((k, v)) => {
                        kv.insert(k.trim().to_string(), v.trim().to_string());
                    }
                    None => positional.push(part.to_string()),
                }
            }
        }
        let take = |kv: &mut std::collections::BTreeMap<String, String>, k: &str| kv.remove(k);
        let d = match head {
            "ZaQ" | "Zaq" | "Zq" | "Z[a,q]" => RingDescriptor::IntegerLaurent,
            "Qaq" | "QaQ" | "Qq" | "Q(a,q)" => RingDescriptor::FractionField,
            "cyclo" => {
                let e = positional
                    .first()
                    .or(kv.get("e"))
                    .ok_or_else(|| Error::InvalidRing("cyclo needs e".into()))?
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidRing("e must be a positive integer".into()))?;
                kv.remove("e");
                let a = take(&mut kv, "a").unwrap_or_else(|| "1".into());
                RingDescriptor::Cyclotomic { e, a: fmt_rational(&parse_rational(&a)?) }
            }
            "gf" => {
                let p = positional
                    .first()
                    .or(kv.get("p"))
                    .ok_or_else(|| Error::InvalidRing("gf needs p".into()))?
                    .parse::<u64>()
                    .map_err(|_| Error::InvalidRing("p must be a prime".into()))?;
                kv.remove("p");
                let num = |v: Option<String>| -> Result<u64> {
                    let v = v.unwrap_or_else(|| "1".into());
                    let x = v.parse::<i64>().map_err(|_| Error::InvalidRing(format!("bad gf value {v:?}")))?;
                    Ok(x.rem_euclid(p.max(1) as i64) as u64)
                };
                let q = num(take(&mut kv, "q"))?;
                let a = num(take(&mut kv, "a"))?;
                RingDescriptor::FiniteField { p, q, a }
            }
            "Q" => {
                let q = take(&mut kv, "q").unwrap_or_else(|| "1".into());
                let a = take(&mut kv, "a").unwrap_or_else(|| "1".into());
                RingDescriptor::Rational { q: fmt_rational(&parse_rational(&q)?), a: fmt_rational(&parse_rational(&a)?) }
            }
            _ => return Err(Error::InvalidRing(format!("unknown ring {s:?}"))),
        };
        if let Some(k) = kv.keys().next() {
            return Err(Error::InvalidRing(format!("unexpected parameter {k:?} in {s:?}")));
        }
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            RingDescriptor::Cyclotomic { e, a } => {
                if *e < 2 {
                    return Err(Error::InvalidRing("cyclotomic order must be at least 2".into()));
                }
                parse_rational(a)?;
            }
            RingDescriptor::FiniteField { p, q, a } => {
                if !is_prime(*p) || *p >= 1 << 31 {
                    return Err(Error::InvalidRing(format!("{p} is not a prime below 2^31")));
                }
                if q % p == 0 {
                    return Err(Error::InvalidRing("q must be invertible".into()));
                }
                if a >= p || q >= p {
                    return Err(Error::InvalidRing("values must be reduced mod p".into()));
                }
            }
            RingDescriptor::Rational { q, a } => {
                if parse_rational(q)?.is_zero() {
                    return Err(Error::InvalidRing("q must be invertible".into()));
                }
                parse_rational(a)?;
            }
            _ => {}
        }
        Ok(())
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, RingDescriptor::IntegerLaurent)
    }

    pub fn build(&self) -> Result<AnyRing> {
        self.validate()?;
        Ok(match self {
            RingDescriptor::IntegerLaurent => AnyRing::IntegerLaurent(IntegerLaurent),
            RingDescriptor::FractionField => AnyRing::FractionField(FractionField),
            RingDescriptor::Cyclotomic { e, a } => AnyRing::Cyclotomic(Cyclotomic::new(*e, parse_rational(a)?)),
            RingDescriptor::FiniteField { p, q, a } => AnyRing::FiniteField(FiniteField::new(*p, *q, *a)),
            RingDescriptor::Rational { q, a } => AnyRing::Rational(RationalSpecialization::new(parse_rational(q)?, parse_rational(a)?)),
        })
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::IntegerLaurent => write!(f, "ZaQ"),
            RingDescriptor::FractionField => write!(f, "Qaq"),
            RingDescriptor::Cyclotomic { e, a } => write!(f, "cyclo:{e},a={a}"),
            RingDescriptor::FiniteField { p, q, a } => write!(f, "gf:{p},q={q},a={a}"),
            RingDescriptor::Rational { q, a } => write!(f, "Q:q={q},a={a}"),
        }
    }
}

impl FromStr for RingDescriptor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

fn laurent_json(p: &Laurent) -> Value {
    Value::Array(p.terms().iter().map(|(m, c)| json!([m.a, m.q, int_json(*c)])).collect())
}

fn int_json(c: i128) -> Value {
    match i64::try_from(c) {
        Ok(v) => json!(v),
        Err(_) => json!(c.to_string()),
    }
}

fn rational_json(r: &BigRational) -> Value {
    match (r.is_integer(), r.numer().to_i64()) {
        (true, Some(v)) => json!(v),
        _ => json!(fmt_rational(r)),
    }
}

/// ℤ[a, q^±].
#[derive(Clone, Copy, Debug, Default)]
pub struct IntegerLaurent;

impl Ring for IntegerLaurent {
    type Elem = Laurent;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::IntegerLaurent
    }
    fn zero(&self) -> Laurent {
        Laurent::zero()
    }
    fn one(&self) -> Laurent {
        Laurent::one()
    }
    fn from_int(&self, n: i64) -> Laurent {
        Laurent::constant(n as i128)
    }
    fn q(&self) -> Laurent {
        Laurent::q()
    }
    fn q_inv(&self) -> Laurent {
        Laurent::q_pow(-1)
    }
    fn a(&self) -> Laurent {
        Laurent::a()
    }
    fn add(&self, x: &Laurent, y: &Laurent) -> Laurent {
        x.add(y)
    }
    fn sub(&self, x: &Laurent, y: &Laurent) -> Laurent {
        x.sub(y)
    }
    fn mul(&self, x: &Laurent, y: &Laurent) -> Laurent {
        x.mul(y)
    }
    fn neg(&self, x: &Laurent) -> Laurent {
        x.neg()
    }
    fn is_zero(&self, x: &Laurent) -> bool {
        x.is_zero()
    }
    fn is_one(&self, x: &Laurent) -> bool {
        x.is_one()
    }
    fn is_field(&self) -> bool {
        false
    }
    fn inv(&self, x: &Laurent) -> Option<Laurent> {
        match x.terms() {
            [(m, c)] if m.a == 0 && (*c == 1 || *c == -1) => Some(Laurent::monomial(Monomial::new(0, -m.q), *c)),
            _ => None,
        }
    }
    fn div_exact(&self, x: &Laurent, y: &Laurent) -> Option<Laurent> {
        x.div_exact(y)
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn render(&self, x: &Laurent) -> String {
        x.to_string()
    }
    fn to_json(&self, x: &Laurent) -> Value {
        laurent_json(x)
    }
    fn from_laurent(&self, p: &Laurent) -> Laurent {
        p.clone()
    }
    fn pow(&self, x: &Laurent, k: u32) -> Laurent {
        x.pow(k)
    }
    fn q_pow(&self, k: i32) -> Laurent {
        Laurent::q_pow(k)
    }
}

/// ℚ(a, q).
#[derive(Clone, Copy, Debug, Default)]
pub struct FractionField;

impl Ring for FractionField {
    type Elem = RatFunc;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::FractionField
    }
    fn zero(&self) -> RatFunc {
        RatFunc::zero()
    }
    fn one(&self) -> RatFunc {
        RatFunc::from_poly(Laurent::one())
    }
    fn from_int(&self, n: i64) -> RatFunc {
        RatFunc::from_poly(Laurent::constant(n as i128))
    }
    fn q(&self) -> RatFunc {
        RatFunc::from_poly(Laurent::q())
    }
    fn q_inv(&self) -> RatFunc {
        RatFunc::from_poly(Laurent::q_pow(-1))
    }
    fn a(&self) -> RatFunc {
        RatFunc::from_poly(Laurent::a())
    }
    fn add(&self, x: &RatFunc, y: &RatFunc) -> RatFunc {
        x.add(y)
    }
    fn sub(&self, x: &RatFunc, y: &RatFunc) -> RatFunc {
        x.sub(y)
    }
    fn mul(&self, x: &RatFunc, y: &RatFunc) -> RatFunc {
        x.mul(y)
    }
    fn neg(&self, x: &RatFunc) -> RatFunc {
        x.neg()
    }
    fn is_zero(&self, x: &RatFunc) -> bool {
        x.is_zero()
    }
    fn is_field(&self) -> bool {
        true
    }
    fn inv(&self, x: &RatFunc) -> Option<RatFunc> {
        x.inv()
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn render(&self, x: &RatFunc) -> String {
        x.to_string()
    }
    fn to_json(&self, x: &RatFunc) -> Value {
        if x.is_polynomial() {
            laurent_json(x.num())
        } else {
            json!({ "num": laurent_json(x.num()), "den": laurent_json(x.den()) })
        }
    }
    fn from_laurent(&self, p: &Laurent) -> RatFunc {
        RatFunc::from_poly(p.clone())
    }
    fn q_pow(&self, k: i32) -> RatFunc {
        RatFunc::from_poly(Laurent::q_pow(k))
    }
}

/// ℚ[q]/Φ_e with `a` a rational constant.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    field: CycloField,
    a: BigRational,
}

impl Cyclotomic {
    pub fn new(e: u32, a: BigRational) -> Self {
        Cyclotomic { field: CycloField::new(e), a }
    }
    pub fn e(&self) -> u32 {
        self.field.e
    }
}

impl Ring for Cyclotomic {
    type Elem = Cyc;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::Cyclotomic { e: self.field.e, a: fmt_rational(&self.a) }
    }
    fn zero(&self) -> Cyc {
        self.field.constant(BigRational::zero())
    }
    fn one(&self) -> Cyc {
        self.field.constant(BigRational::one())
    }
    fn from_int(&self, n: i64) -> Cyc {
        self.field.constant(BigRational::from_integer(n.into()))
    }
    fn q(&self) -> Cyc {
        self.field.q_power(1)
    }
    fn q_inv(&self) -> Cyc {
        self.field.q_power(-1)
    }
    fn a(&self) -> Cyc {
        self.field.constant(self.a.clone())
    }
    fn add(&self, x: &Cyc, y: &Cyc) -> Cyc {
        self.field.add(x, y)
    }
    fn sub(&self, x: &Cyc, y: &Cyc) -> Cyc {
        self.field.sub(x, y)
    }
    fn mul(&self, x: &Cyc, y: &Cyc) -> Cyc {
        self.field.mul(x, y)
    }
    fn neg(&self, x: &Cyc) -> Cyc {
        x.iter().map(|c| -c).collect()
    }
    fn is_zero(&self, x: &Cyc) -> bool {
        x.iter().all(|c| c.is_zero())
    }
    fn is_field(&self) -> bool {
        true
    }
    fn inv(&self, x: &Cyc) -> Option<Cyc> {
        self.field.inv(x)
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn render(&self, x: &Cyc) -> String {
        let mut parts = Vec::new();
        for (j, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = fmt_rational(&c.abs());
            let body = match (j, mag.as_str()) {
                (0, _) => mag.clone(),
                (1, "1") => "q".into(),
                (_, "1") => format!("q^{j}"),
                (1, _) => format!("{mag}*q"),
                _ => format!("{mag}*q^{j}"),
            };
            parts.push((c.is_negative(), body));
        }
        if parts.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (neg, body)) in parts.into_iter().enumerate() {
            s.push_str(match (k, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            });
            s.push_str(&body);
        }
        s
    }
    fn to_json(&self, x: &Cyc) -> Value {
        Value::Array(x.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(j, c)| json!([0, j, rational_json(c)])).collect())
    }
    fn q_pow(&self, k: i32) -> Cyc {
        self.field.q_power(k as i64)
    }
}

/// 𝔽_p with `q` and `a` specialized.
#[derive(Clone, Debug)]
pub struct FiniteField {
    p: u64,
    q: u64,
    a: u64,
}

impl FiniteField {
    pub fn new(p: u64, q: u64, a: u64) -> Self {
        assert!(is_prime(p) && p < (1 << 31) && q % p != 0);
        FiniteField { p, q: q % p, a: a % p }
    }
    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn pow_u(&self, mut x: u64, mut k: u64) -> u64 {
        let mut acc = 1 % self.p;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * x % self.p;
            }
            x = x * x % self.p;
            k >>= 1;
        }
        acc
    }
}

impl Ring for FiniteField {
    type Elem = u64;

    fn residue(&self, x: &u64) -> Option<u64> {
        Some(*x)
    }

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::FiniteField { p: self.p, q: self.q, a: self.a }
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_int(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
    fn q(&self) -> u64 {
        self.q
    }
    fn q_inv(&self) -> u64 {
        self.pow_u(self.q, self.p - 2)
    }
    fn a(&self) -> u64 {
        self.a
    }
    fn add(&self, x: &u64, y: &u64) -> u64 {
        (x + y) % self.p
    }
    fn sub(&self, x: &u64, y: &u64) -> u64 {
        (x + self.p - y) % self.p
    }
    fn mul(&self, x: &u64, y: &u64) -> u64 {
        x * y % self.p
    }
    fn neg(&self, x: &u64) -> u64 {
        (self.p - x) % self.p
    }
    fn is_zero(&self, x: &u64) -> bool {
        *x == 0
    }
    fn is_field(&self) -> bool {
        true
    }
    fn inv(&self, x: &u64) -> Option<u64> {
        (*x != 0).then(|| self.pow_u(*x, self.p - 2))
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn render(&self, x: &u64) -> String {
        x.to_string()
    }
    fn to_json(&self, x: &u64) -> Value {
        json!(x)
    }
    fn from_laurent(&self, p: &Laurent) -> u64 {
        let qi = self.q_inv();
        let mut acc = 0;
        for &(m, c) in p.terms() {
            let c = c.rem_euclid(self.p as i128) as u64;
            let qp = if m.q >= 0 { self.pow_u(self.q, m.q as u64) } else { self.pow_u(qi, (-m.q) as u64) };
            acc = (acc + c * qp % self.p * self.pow_u(self.a, m.a as u64)) % self.p;
        }
        acc
    }
}

/// ℚ with `q` and `a` specialized to rationals.
#[derive(Clone, Debug)]
pub struct RationalSpecialization {
    q: BigRational,
    a: BigRational,
}

impl RationalSpecialization {
    pub fn new(q: BigRational, a: BigRational) -> Self {
        assert!(!q.is_zero());
        RationalSpecialization { q, a }
    }
}

impl Ring for RationalSpecialization {
    type Elem = BigRational;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::Rational { q: fmt_rational(&self.q), a: fmt_rational(&self.a) }
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_int(&self, n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }
    fn q(&self) -> BigRational {
        self.q.clone()
    }
    fn q_inv(&self) -> BigRational {
        self.q.recip()
    }
    fn a(&self) -> BigRational {
        self.a.clone()
    }
    fn add(&self, x: &BigRational, y: &BigRational) -> BigRational {
        x + y
    }
    fn sub(&self, x: &BigRational, y: &BigRational) -> BigRational {
        x - y
    }
    fn mul(&self, x: &BigRational, y: &BigRational) -> BigRational {
        x * y
    }
    fn neg(&self, x: &BigRational) -> BigRational {
        -x
    }
    fn is_zero(&self, x: &BigRational) -> bool {
        x.is_zero()
    }
    fn is_field(&self) -> bool {
        true
    }
    fn inv(&self, x: &BigRational) -> Option<BigRational> {
        (!x.is_zero()).then(|| x.recip())
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn render(&self, x: &BigRational) -> String {
        fmt_rational(x)
    }
    fn to_json(&self, x: &BigRational) -> Value {
        rational_json(x)
    }
}

/// A ring chosen at runtime.
#[derive(Clone, Debug)]
pub enum AnyRing {
    IntegerLaurent(IntegerLaurent),
    FractionField(FractionField),
    Cyclotomic(Cyclotomic),
    FiniteField(FiniteField),
    Rational(RationalSpecialization),
}

/// Runs `$body` with `$r` bound to the concrete ring inside an [`AnyRing`].
#[macro_export]
macro_rules! with_ring {
    ($any:expr, $r:ident => $body:expr) => {
        match $any {
            $crate::coeff::AnyRing::IntegerLaurent($r) => $body,
            $crate::coeff::AnyRing::FractionField($r) => $body,
            $crate::coeff::AnyRing::Cyclotomic($r) => $body,
            $crate::coeff::AnyRing::FiniteField($r) => $body,
            $crate::coeff::AnyRing::Rational($r) => $body,
        }
    };
}

impl AnyRing {
    pub fn descriptor(&self) -> RingDescriptor {
        with_ring!(self, r => r.descriptor())
    }
    pub fn is_field(&self) -> bool {
        with_ring!(self, r => r.is_field())
    }
}

/// A ring element detached from its ring, for reporting.
#[derive(Clone, Debug, PartialEq)]
pub struct Coefficient {
    pub ring: RingDescriptor,
    pub text: String,
    pub json: Value,
}

impl Coefficient {
    pub fn new<R: Ring>(ring: &R, x: &R::Elem) -> Self {
        Coefficient { ring: ring.descriptor(), text: ring.render(x), json: ring.to_json(x) }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}
