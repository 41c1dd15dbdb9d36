//! q-integers, q-factorials, q-binomials, the three q-Stirling variants,
//! the binomially shifted Stirling sums, the q-exponential and q-Eulerian
//! polynomials.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{QPoly, QRational, TruncatedSeries};

/// `[n]_q = 1 + q + ... + q^(n-1)`; `[0]_q = 0`.
pub fn q_int(n: usize) -> QPoly {
    QPoly::new(0, vec![BigInt::one(); n])
}

/// `[n]!_q = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: usize) -> QPoly {
    (1..=n).map(q_int).product()
}

/// Gaussian binomial `[n]! / ([k]! [n-k]!)`, computed by exact division.
pub fn q_binomial(n: usize, k: usize) -> Result<QPoly> {
    if k > n {
        return Err(Error::IndexOutOfRange(format!("q_binomial({n}, {k}) needs k <= n")));
    }
    let den = q_factorial(k) * q_factorial(n - k);
    Ok(q_factorial(n).div_exact(&den).expect("Gaussian binomials are polynomials"))
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `C(n, k)` for a possibly negative lower index (zero outside `0..=n`).
pub fn binomial_signed(n: usize, k: i64) -> BigInt {
    if k < 0 {
        BigInt::zero()
    } else {
        binomial(n, k as usize)
    }
}

/// Classical Stirling numbers of the second kind `{n, k}` for `n <= max_n`.
pub fn stirling2_table(max_n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for n in 1..=max_n {
        let prev = &rows[n - 1];
        let row = (0..=n)
            .map(|k| {
                let a = if k >= 1 { prev.get(k - 1).cloned().unwrap_or_default() } else { BigInt::zero() };
                let b = prev.get(k).cloned().unwrap_or_default() * k;
                a + b
            })
            .collect();
        rows.push(row);
    }
    rows
}

pub fn stirling2(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    stirling2_table(n)[n][k].clone()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StirlingVariant {
    /// `{n,m}_q = {n-1,m-1}_q + [m]_q {n-1,m}_q`
    Carlitz,
    /// Partitions of `{0..n-1}` weighted by `q^(sum of the block containing 0)`.
    Cigler,
    /// `S_{n+1,k} = q^(k-1) S_{n,k-1} + [k]_q S_{n,k}`
    Shifted,
}

impl StirlingVariant {
    pub const ALL: [StirlingVariant; 3] = [Self::Carlitz, Self::Cigler, Self::Shifted];
}

/// Triangle of one q-Stirling variant for `0 <= m <= n <= max_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct QStirlingTable {
    variant: StirlingVariant,
    rows: Vec<Vec<QPoly>>,
}

impl QStirlingTable {
    pub fn build(variant: StirlingVariant, max_n: usize) -> Self {
        let mut rows = vec![vec![QPoly::one()]];
        for n in 1..=max_n {
            let prev = &rows[n - 1];
            let at = |m: usize| prev.get(m).cloned().unwrap_or_default();
            let row = (0..=n)
                .map(|m| {
                    let left = if m == 0 { QPoly::zero() } else { at(m - 1) };
                    match variant {
                        StirlingVariant::Carlitz => left + q_int(m) * at(m),
                        StirlingVariant::Cigler => {
                            // element n-1 opens a block, joins one of the m-1
                            // blocks avoiding 0, or joins the 0-block
                            if m == 0 {
                                return QPoly::zero();
                            }
                            let stay = QPoly::constant(m as i64 - 1) + QPoly::monomial(1, n as i64 - 1);
                            left + stay * at(m)
                        }
                        StirlingVariant::Shifted => left.shift(m as i64 - 1) + q_int(m) * at(m),
                    }
                })
                .collect();
            rows.push(row);
        }
        QStirlingTable { variant, rows }
    }

    pub fn variant(&self) -> StirlingVariant {
        self.variant
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// Entry `(n, m)`; zero outside the triangle.
    ///
    /// Panics if `n` exceeds the table size.
    pub fn get(&self, n: usize, m: usize) -> QPoly {
        assert!(n <= self.max_n(), "row {n} beyond table size {}", self.max_n());
        self.rows[n].get(m).cloned().unwrap_or_default()
    }
}

type TableCache = RwLock<HashMap<StirlingVariant, Arc<QStirlingTable>>>;

fn cache() -> &'static TableCache {
    static CACHE: OnceLock<TableCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// A table covering at least `max_n`, shared across calls.
pub fn stirling_table(variant: StirlingVariant, max_n: usize) -> Arc<QStirlingTable> {
    if let Some(t) = cache().read().expect("cache poisoned").get(&variant) {
        if t.max_n() >= max_n {
            return Arc::clone(t);
        }
    }
    let mut w = cache().write().expect("cache poisoned");
    match w.get(&variant) {
        Some(t) if t.max_n() >= max_n => Arc::clone(t),
        _ => {
            // grow geometrically so repeated small extensions stay cheap
            let size = max_n.max(w.get(&variant).map_or(0, |t| t.max_n() * 2)).max(8);
            let t = Arc::new(QStirlingTable::build(variant, size));
            w.insert(variant, Arc::clone(&t));
            t
        }
    }
}

pub fn q_stirling(variant: StirlingVariant, n: usize, m: usize) -> QPoly {
    if m > n {
        return QPoly::zero();
    }
    stirling_table(variant, n).get(n, m)
}

/// `S_2(n, j, q) = sum_k C(n,k) q^(n-k) {k, j}`.
pub fn s2_q(n: usize, j: usize) -> QPoly {
    let st = stirling2_table(n);
    (0..=n)
        .map(|k| QPoly::monomial(binomial(n, k) * st[k].get(j).cloned().unwrap_or_default(), (n - k) as i64))
        .sum()
}

/// `S_2^{1/q}(n+1, j+1)`, read off the exponential generating function
/// `(e^t/q - 1)^j e^t / (q j!)`:
///
/// `(1/j!) sum_l C(j,l) (-1)^(j-l) q^-(l+1) (l+1)^n`.
///
/// For `n < 0` the same closed form is used with `(l+1)^n` rational.
pub fn s2_inv_q(n: i64, j: usize) -> QRational {
    let jf = BigRational::from_integer(factorial(j));
    // coefficient of q^-(l+1) stored at index j - l, starting from q^-(j+1)
    let coeffs: Vec<BigRational> = (0..=j)
        .rev()
        .map(|l| {
            let sign = if (j - l).is_multiple_of(2) { 1 } else { -1 };
            let base = BigRational::from_integer(BigInt::from(l + 1));
            let power = base.pow(n as i32);
            BigRational::from_integer(binomial(j, l) * sign) * power / &jf
        })
        .collect();
    QRational::from_rational_laurent(-(j as i64 + 1), &coeffs)
}

/// `E_q(z s) = sum_k s^k z^k / [k]!_q` truncated at `order`.
pub fn q_exponential(z_scale: &QPoly, order: usize) -> TruncatedSeries<QRational> {
    let mut power = QPoly::one();
    let coeffs = (0..=order)
        .map(|k| {
            if k > 0 {
                power = &power * z_scale;
            }
            QRational::new(power.clone(), q_factorial(k)).expect("[k]! is nonzero")
        })
        .collect();
    TruncatedSeries::new(order, coeffs)
}

/// Rectangular-tableaux q-Eulerian polynomial
/// `q^(k-k^2) sum_{i<k} (-1)^i [k-i]^n q^(ki-k) (C(n,i) q^(k-i) + C(n,i-1))`.
pub fn q_eulerian(n: usize, k: usize) -> Result<QPoly> {
    if k > n {
        return Err(Error::IndexOutOfRange(format!("q_eulerian({n}, {k}) needs k <= n")));
    }
    let ki = k as i64;
    let sum: QPoly = (0..k)
        .map(|i| {
            let ii = i as i64;
            let inner = QPoly::monomial(binomial(n, i), ki - ii) + QPoly::constant(binomial_signed(n, ii - 1));
            let term = q_int(k - i).pow(n as u32) * inner;
            let term = term.shift(ki * ii - ki);
            if i % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum();
    sum.shift(ki - ki * ki).into_polynomial()
}
