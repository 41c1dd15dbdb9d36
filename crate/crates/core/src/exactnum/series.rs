//! Truncated power series in one formal variable.

use std::fmt::Debug;
use std::ops::{Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::ratfunc::QRational;
use crate::error::{Error, Result};

/// Exact field elements usable as series coefficients: rationals for `q = 1`
/// or sampled-`q` runs, [`QRational`] for symbolic `q`.
pub trait Coefficient:
    Clone + PartialEq + Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self> + Mul<Output = Self>
{
    fn from_bigint(c: BigInt) -> Self;
    fn try_div(&self, rhs: &Self) -> Option<Self>;
}

impl Coefficient for BigRational {
    fn from_bigint(c: BigInt) -> Self {
        BigRational::from_integer(c)
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| self / rhs)
    }
}

impl Coefficient for QRational {
    fn from_bigint(c: BigInt) -> Self {
        QRational::from_integer(c)
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        self.checked_div(rhs).ok()
    }
}

/// `sum_{i <= order} c_i x^i`; nothing above `order` is known.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<C> {
    order: usize,
    coeffs: Vec<C>,
}

impl<C: Coefficient> TruncatedSeries<C> {
    /// Pads with zeros or drops terms so exactly `order + 1` coefficients remain.
    pub fn new(order: usize, mut coeffs: Vec<C>) -> Self {
        coeffs.resize(order + 1, C::zero());
        TruncatedSeries { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::new(order, vec![C::one()])
    }

    /// The series `x`.
    pub fn variable(order: usize) -> Self {
        Self::new(order, vec![C::zero(), C::one()])
    }

    /// `exp(c x)`.
    pub fn exp_scaled(c: &C, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = C::one();
        coeffs.push(term.clone());
        for i in 1..=order {
            term = (term * c.clone()).try_div(&C::from_bigint(BigInt::from(i))).expect("i > 0");
            coeffs.push(term.clone());
        }
        Self::new(order, coeffs)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, or `None` beyond the truncation order.
    pub fn coeff(&self, i: usize) -> Option<&C> {
        self.coeffs.get(i)
    }

    /// Index of the first nonzero coefficient; `None` if zero to the order.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(order.min(self.order), self.coeffs.clone())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let coeffs = (0..=order).map(|i| self.coeffs[i].clone() + rhs.coeffs[i].clone()).collect();
        Self::new(order, coeffs)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let coeffs = (0..=order).map(|i| self.coeffs[i].clone() - rhs.coeffs[i].clone()).collect();
        Self::new(order, coeffs)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.order, self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let mut out = vec![C::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(order, out)
    }

    /// Multiplicative inverse; requires an invertible constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        let inv0 = C::one().try_div(c0).ok_or(Error::DivisionUndefined("constant term is not invertible"))?;
        let mut out = vec![C::zero(); self.order + 1];
        out[0] = inv0.clone();
        for n in 1..=self.order {
            let mut acc = C::zero();
            for k in 1..=n {
                acc = acc + self.coeffs[k].clone() * out[n - k].clone();
            }
            out[n] = -(acc * inv0.clone());
        }
        Ok(Self::new(self.order, out))
    }

    /// `self / den`, cancelling a common power of the variable first. The
    /// result is known to `min(orders) - v` where `v` is that power.
    pub fn divide(&self, den: &Self) -> Result<Self> {
        let order = self.order.min(den.order);
        let v = den.coeffs[..=order]
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(Error::DivisionUndefined("denominator is zero to the truncation order"))?;
        if self.coeffs[..v].iter().any(|c| !c.is_zero()) {
            return Err(Error::DivisionUndefined("numerator does not vanish to the denominator's order"));
        }
        let reduced = order - v;
        let num = Self::new(reduced, self.coeffs[v..=order].to_vec());
        let den = Self::new(reduced, den.coeffs[v..=order].to_vec());
        Ok(num.mul(&den.inverse()?))
    }

    /// `self(inner(x))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::DivisionUndefined("inner series of a composition must have zero constant term"));
        }
        let order = self.order.min(inner.order);
        let inner = inner.truncate(order);
        let mut acc = Self::zero(order);
        for c in self.coeffs[..=order].iter().rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] = acc.coeffs[0].clone() + c.clone();
        }
        Ok(acc)
    }

    /// `n! * c_n` for each `n`: the sequence an exponential generating function encodes.
    pub fn egf_values(&self) -> Vec<C> {
        let mut fact = BigInt::one();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                if n > 0 {
                    fact *= n;
                }
                c.clone() * C::from_bigint(fact.clone())
            })
            .collect()
    }
}

/// Quotient of two truncated series, cancelling a shared leading zero.
pub fn series_compose_div<C: Coefficient>(
    numerator: &TruncatedSeries<C>,
    denominator: &TruncatedSeries<C>,
) -> Result<TruncatedSeries<C>> {
    numerator.divide(denominator)
}
