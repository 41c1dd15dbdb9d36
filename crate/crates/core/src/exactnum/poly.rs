//! Laurent polynomials in `q` with arbitrary-precision integer coefficients.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A Laurent polynomial `sum c_i q^(min_exp + i)`.
///
/// The representation is canonical: the first and last stored coefficients
/// are nonzero, and the zero polynomial is `min_exp = 0` with no
/// coefficients. Structural equality is therefore value equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    min_exp: i64,
    coeffs: Vec<BigInt>,
}

/// Target of [`QPoly::substitute`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Substitution {
    /// `q -> 1/q`
    Inverse,
    /// `q -> -q`
    Negate,
    /// `q -> c` for an exact rational `c`
    Value(BigRational),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Substituted {
    Poly(QPoly),
    Value(BigRational),
}

impl QPoly {
    pub fn new(min_exp: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = QPoly { min_exp, coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(min_exp: i64, coeffs: &[i64]) -> Self {
        Self::new(min_exp, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        Self::new(exp, vec![c.into()])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.min_exp += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.min_exp = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.min_exp == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent carrying a nonzero coefficient (0 for the zero polynomial).
    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    /// Highest exponent carrying a nonzero coefficient.
    pub fn max_exp(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.min_exp + self.coeffs.len() as i64 - 1)
        }
    }

    /// Dense coefficients from `min_exp` upward.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let idx = exp - self.min_exp;
        if idx < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(idx as usize).cloned().unwrap_or_default()
    }

    /// Nonzero terms as `(exponent, coefficient)`, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.min_exp + i as i64, c))
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// True when no negative exponents occur.
    pub fn is_polynomial(&self) -> bool {
        self.min_exp >= 0
    }

    pub fn into_polynomial(self) -> Result<Self> {
        if self.is_polynomial() {
            Ok(self)
        } else {
            Err(Error::NotPolynomial { min_exp: self.min_exp })
        }
    }

    /// Multiply by `q^exp`.
    pub fn shift(&self, exp: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        QPoly { min_exp: self.min_exp + exp, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.min_exp, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `p(1/q)`: exponent `e` maps to `-e`.
    pub fn substitute_inverse(&self) -> Self {
        let Some(max) = self.max_exp() else {
            return Self::zero();
        };
        let coeffs = self.coeffs.iter().rev().cloned().collect();
        QPoly { min_exp: -max, coeffs }
    }

    /// `p(-q)`.
    pub fn substitute_negate(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if (self.min_exp + i as i64).is_odd() { -c } else { c.clone() })
            .collect();
        QPoly { min_exp: self.min_exp, coeffs }
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, at: &BigRational) -> Result<BigRational> {
        if at.is_zero() {
            if self.min_exp < 0 {
                return Err(Error::SubstituteAtPole { min_exp: self.min_exp });
            }
            return Ok(BigRational::from_integer(self.coeff(0)));
        }
        // Horner on the dense part, then the q^min_exp factor.
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + BigRational::from_integer(c.clone());
        }
        Ok(acc * at.pow(self.min_exp as i32))
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn substitute(&self, target: &Substitution) -> Result<Substituted> {
        Ok(match target {
            Substitution::Inverse => Substituted::Poly(self.substitute_inverse()),
            Substitution::Negate => Substituted::Poly(self.substitute_negate()),
            Substitution::Value(c) => Substituted::Value(self.eval(c)?),
        })
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Exact quotient in `Z[q, 1/q]`, or `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &QPoly) -> Option<QPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Both dense parts have nonzero constant terms, so divisibility in the
        // Laurent ring coincides with divisibility of the dense parts in Z[q].
        let quot = dense_div_exact(&self.coeffs, &divisor.coeffs)?;
        Some(QPoly::new(self.min_exp - divisor.min_exp, quot))
    }

    /// Greatest common divisor, normalized to `min_exp = 0` and a positive
    /// leading coefficient. Powers of `q` are units and never appear.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Self::zero(),
            (true, false) => return other.unit_normal(),
            (false, true) => return self.unit_normal(),
            _ => {}
        }
        let content = self.content().gcd(&other.content());
        let mut a = primitive(&self.coeffs);
        let mut b = primitive(&other.coeffs);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = pseudo_rem(&a, &b);
            a = b;
            b = primitive(&r);
        }
        QPoly::new(0, a).scale(&content).unit_normal()
    }

    /// Associate with `min_exp = 0` and positive leading coefficient.
    pub fn unit_normal(&self) -> QPoly {
        let mut p = QPoly { min_exp: 0, coeffs: self.coeffs.clone() };
        if p.leading_coeff().is_some_and(Signed::is_negative) {
            p = -p;
        }
        p
    }
}

fn trim_dense(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let mut v = v.to_vec();
    trim_dense(&mut v);
    let g = v.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if g.is_zero() || g.is_one() {
        return v;
    }
    v.iter().map(|c| c / &g).collect()
}

fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    trim_dense(&mut r);
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &lr * bc;
        }
        trim_dense(&mut r);
    }
    r
}

fn dense_div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut r = a.to_vec();
    trim_dense(&mut r);
    let db = b.len() - 1;
    if r.len() < b.len() {
        return if r.is_empty() { Some(Vec::new()) } else { None };
    }
    let mut quot = vec![BigInt::zero(); r.len() - db];
    let lb = &b[db];
    while !r.is_empty() {
        if r.len() <= db {
            return None;
        }
        let dr = r.len() - 1;
        let (qc, rem) = r[dr].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &qc * bc;
        }
        quot[shift] = qc;
        trim_dense(&mut r);
    }
    Some(quot)
}

impl<'a> Add<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.min_exp.min(rhs.min_exp);
        let hi = self.max_exp().unwrap().max(rhs.max_exp().unwrap());
        let mut out = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for p in [self, rhs] {
            let off = (p.min_exp - lo) as usize;
            for (i, c) in p.coeffs.iter().enumerate() {
                out[off + i] += c;
            }
        }
        QPoly::new(lo, out)
    }
}

impl<'a> Sub<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(self.min_exp + rhs.min_exp, out)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly { min_exp: self.min_exp, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident, $t:ty) => {
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a $t> for $t {
            type Output = $t;
            fn $m(self, rhs: &'a $t) -> $t {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<$t> for &'a $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                self.$m(&rhs)
            }
        }
    };
}
pub(crate) use forward_owned;

forward_owned!(Add, add, QPoly);
forward_owned!(Sub, sub, QPoly);
forward_owned!(Mul, mul, QPoly);

impl Zero for QPoly {
    fn zero() -> Self {
        QPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for QPoly {
    fn one() -> Self {
        QPoly::one()
    }
}

impl Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(iter: I) -> Self {
        iter.fold(QPoly::zero(), |a, b| a + b)
    }
}

impl Product for QPoly {
    fn product<I: Iterator<Item = QPoly>>(iter: I) -> Self {
        iter.fold(QPoly::one(), |a, b| a * b)
    }
}

impl From<BigInt> for QPoly {
    fn from(c: BigInt) -> Self {
        QPoly::constant(c)
    }
}

impl From<i64> for QPoly {
    fn from(c: i64) -> Self {
        QPoly::constant(c)
    }
}

/// Ascending human-readable form, e.g. `1 - 3q + 6q^2`.
impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match e {
                1 => f.write_str("q")?,
                _ => write!(f, "q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct PolyWire {
    var: String,
    min_exp: i64,
    coeffs: Vec<String>,
}

impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyWire {
            var: "q".into(),
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let w = PolyWire::deserialize(d)?;
        if w.var != "q" {
            return Err(D::Error::custom(format!("unsupported variable `{}`", w.var)));
        }
        let coeffs = w
            .coeffs
            .iter()
            .map(|c| c.parse::<BigInt>().map_err(|e| D::Error::custom(format!("bad coefficient `{c}`: {e}"))))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(QPoly::new(w.min_exp, coeffs))
    }
}
