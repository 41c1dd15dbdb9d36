//! Rational functions in `q` over the integers, kept in lowest terms.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::poly::{forward_owned, QPoly};
use crate::error::{Error, Result};

/// `num / den` with `gcd(num, den)` a unit, `den` having a nonzero constant
/// term (`min_exp = 0`) and a positive leading coefficient. Any power of `q`
/// lives in the numerator, so the representation of a value is unique.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RatWire", into = "RatWire")]
pub struct QRational {
    num: QPoly,
    den: QPoly,
}

#[derive(Serialize, Deserialize)]
struct RatWire {
    num: QPoly,
    den: QPoly,
}

impl TryFrom<RatWire> for QRational {
    type Error = Error;
    fn try_from(w: RatWire) -> Result<Self> {
        QRational::new(w.num, w.den)
    }
}

impl From<QRational> for RatWire {
    fn from(r: QRational) -> Self {
        RatWire { num: r.num, den: r.den }
    }
}

impl QRational {
    pub fn new(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: QPoly, den: QPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let shift = den.min_exp();
        let (num, den) = (num.shift(-shift), den.shift(-shift));
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        if den.leading_coeff().is_some_and(Signed::is_negative) {
            num = -num;
            den = -den;
        }
        QRational { num, den }
    }

    pub fn zero() -> Self {
        QRational { num: QPoly::zero(), den: QPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(QPoly::one())
    }

    pub fn from_poly(p: QPoly) -> Self {
        QRational { num: p, den: QPoly::one() }
    }

    pub fn from_integer(c: impl Into<BigInt>) -> Self {
        Self::from_poly(QPoly::constant(c))
    }

    pub fn from_ratio(r: &BigRational) -> Self {
        Self::normalized(QPoly::constant(r.numer().clone()), QPoly::constant(r.denom().clone()))
    }

    /// `sum c_i q^(min_exp + i)` with rational coefficients.
    pub fn from_rational_laurent(min_exp: i64, coeffs: &[BigRational]) -> Self {
        let lcm = coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let ints = coeffs.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
        Self::normalized(QPoly::new(min_exp, ints), QPoly::constant(lcm))
    }

    pub fn numer(&self) -> &QPoly {
        &self.num
    }

    pub fn denom(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The Laurent polynomial this value equals, if the denominator is 1.
    pub fn as_poly(&self) -> Option<&QPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn into_poly(self) -> Option<QPoly> {
        self.den.is_one().then_some(self.num)
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    /// Integer power; negative exponents invert.
    pub fn powi(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = e.unsigned_abs() as u32;
        Ok(QRational { num: base.num.pow(e), den: base.den.pow(e) })
    }

    pub fn eval(&self, at: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(at)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(at)? / d)
    }

    pub fn substitute_inverse(&self) -> Self {
        Self::normalized(self.num.substitute_inverse(), self.den.substitute_inverse())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::normalized(self.num.scale(c), self.den.clone())
    }
}

impl<'a> Add<&'a QRational> for &'a QRational {
    type Output = QRational;
    fn add(self, rhs: &QRational) -> QRational {
        if self.den == rhs.den {
            return QRational::normalized(&self.num + &rhs.num, self.den.clone());
        }
        QRational::normalized(&self.num * &rhs.den + &rhs.num * &self.den, &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a QRational> for &'a QRational {
    type Output = QRational;
    fn sub(self, rhs: &QRational) -> QRational {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a QRational> for &'a QRational {
    type Output = QRational;
    fn mul(self, rhs: &QRational) -> QRational {
        if self.den.is_one() && rhs.den.is_one() {
            return QRational::from_poly(&self.num * &rhs.num);
        }
        QRational::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Panics on division by zero; use [`QRational::checked_div`] otherwise.
impl<'a> Div<&'a QRational> for &'a QRational {
    type Output = QRational;
    fn div(self, rhs: &QRational) -> QRational {
        self.checked_div(rhs).expect("QRational division by zero")
    }
}

impl Neg for &QRational {
    type Output = QRational;
    fn neg(self) -> QRational {
        QRational { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for QRational {
    type Output = QRational;
    fn neg(self) -> QRational {
        -&self
    }
}

forward_owned!(Add, add, QRational);
forward_owned!(Sub, sub, QRational);
forward_owned!(Mul, mul, QRational);
forward_owned!(Div, div, QRational);

impl Zero for QRational {
    fn zero() -> Self {
        QRational::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for QRational {
    fn one() -> Self {
        QRational::one()
    }
}

impl Sum for QRational {
    fn sum<I: Iterator<Item = QRational>>(iter: I) -> Self {
        iter.fold(QRational::zero(), |a, b| a + b)
    }
}

impl From<QPoly> for QRational {
    fn from(p: QPoly) -> Self {
        QRational::from_poly(p)
    }
}

impl From<BigInt> for QRational {
    fn from(c: BigInt) -> Self {
        QRational::from_integer(c)
    }
}

impl fmt::Display for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &QPoly| if p.terms().count() > 1 { format!("({p})") } else { p.to_string() };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl fmt::Debug for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QRational({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(min_exp: i64, c: &[i64]) -> QPoly {
        QPoly::from_i64s(min_exp, c)
    }

    #[test]
    fn reduces_to_lowest_terms() {
        // (1+q)(1+q+q^2) / (q(1+q)) = q^-1 (1+q+q^2)
        let r = QRational::new(p(0, &[1, 2, 2, 1]), p(1, &[1, 1])).unwrap();
        assert_eq!(r.as_poly(), Some(&p(-1, &[1, 1, 1])));
    }

    #[test]
    fn denominator_sign_and_shift_normalized() {
        let a = QRational::new(p(0, &[1]), p(2, &[-2, -2])).unwrap();
        assert_eq!(a.numer(), &p(-2, &[-1]));
        assert_eq!(a.denom(), &p(0, &[2, 2]));
        let b = QRational::new(p(-2, &[1]), p(0, &[-2, -2])).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_zero_denominator() {
        assert_eq!(QRational::new(QPoly::one(), QPoly::zero()), Err(Error::DivisionByZero));
        assert_eq!(QRational::one().checked_div(&QRational::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn field_operations() {
        let half = QRational::from_ratio(&BigRational::new(1.into(), 2.into()));
        let third = QRational::from_ratio(&BigRational::new(1.into(), 3.into()));
        let sum = &half + &third;
        assert_eq!(sum, QRational::from_ratio(&BigRational::new(5.into(), 6.into())));
        let x = QRational::new(p(0, &[1]), p(0, &[1, 1])).unwrap();
        assert_eq!(&(&x * &x.inv().unwrap()), &QRational::one());
        assert_eq!(x.powi(-2).unwrap(), QRational::from_poly(p(0, &[1, 2, 1])));
    }

    #[test]
    fn evaluation() {
        let x = QRational::new(p(1, &[1]), p(0, &[1, 2, 2, 1])).unwrap();
        assert_eq!(x.eval(&BigRational::one()).unwrap(), BigRational::new(1.into(), 6.into()));
        let pole = QRational::new(QPoly::one(), p(0, &[1, 1])).unwrap();
        assert_eq!(pole.eval(&BigRational::from_integer((-1).into())), Err(Error::DivisionByZero));
    }

    #[test]
    fn rational_laurent_constructor() {
        let r = QRational::from_rational_laurent(
            -1,
            &[BigRational::new(1.into(), 2.into()), BigRational::new((-1).into(), 3.into())],
        );
        assert_eq!(r.numer(), &p(-1, &[3, -2]));
        assert_eq!(r.denom(), &p(0, &[6]));
    }

    #[test]
    fn json_wire_format() {
        let r = QRational::new(p(0, &[1]), p(0, &[1, 1])).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(
            s,
            r#"{"num":{"var":"q","min_exp":0,"coeffs":["1"]},"den":{"var":"q","min_exp":0,"coeffs":["1","1"]}}"#
        );
        assert_eq!(serde_json::from_str::<QRational>(&s).unwrap(), r);
    }
}
