//! Poly-Bernoulli numbers and their q-analogues, the Akiyama-Tanigawa
//! triangles and Carlitz's q-Bernoulli numbers.
//!
//! Sign convention: entry points taking `k: usize` mean the combinatorial
//! branch (superscript `-k`); those taking `k: i64` use the signed superscript.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{QPoly, QRational};
use crate::objects::perm_matrix_poly;
use crate::qkernels::{binomial, factorial, q_factorial, q_int, stirling2_table, stirling_table, StirlingVariant};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyId {
    ClassicalNegk,
    ClassicalAnyk,
    CRelative,
    OrderedQ,
    LonesumQ,
    VesztergombiQ,
    PermmatrixQ,
    CenkciQ,
    AtQ,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Carrier {
    Integer,
    Rational,
    Poly,
    RationalFunction,
}

impl FamilyId {
    pub const ALL: [FamilyId; 9] = [
        Self::ClassicalNegk,
        Self::ClassicalAnyk,
        Self::CRelative,
        Self::OrderedQ,
        Self::LonesumQ,
        Self::VesztergombiQ,
        Self::PermmatrixQ,
        Self::CenkciQ,
        Self::AtQ,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::ClassicalNegk => "classical_negk",
            Self::ClassicalAnyk => "classical_anyk",
            Self::CRelative => "c_relative",
            Self::OrderedQ => "ordered_q",
            Self::LonesumQ => "lonesum_q",
            Self::VesztergombiQ => "vesztergombi_q",
            Self::PermmatrixQ => "permmatrix_q",
            Self::CenkciQ => "cenkci_q",
            Self::AtQ => "at_q",
        }
    }

    pub fn carrier(self) -> Carrier {
        match self {
            Self::ClassicalNegk | Self::CRelative => Carrier::Integer,
            Self::ClassicalAnyk => Carrier::Rational,
            Self::OrderedQ | Self::LonesumQ | Self::VesztergombiQ | Self::PermmatrixQ => Carrier::Poly,
            Self::CenkciQ | Self::AtQ => Carrier::RationalFunction,
        }
    }

    /// Whether `k` is the signed superscript rather than its magnitude.
    pub fn signed_k(self) -> bool {
        matches!(self, Self::ClassicalAnyk | Self::CenkciQ | Self::AtQ)
    }

    /// Value at `(n, k)`. For unsigned families `k` must be nonnegative and
    /// stands for the superscript `-k`.
    pub fn value(self, n: usize, k: i64) -> Result<FamilyValue> {
        let unsigned = || {
            usize::try_from(k).map_err(|_| {
                Error::OutOfRange(format!("{} takes k >= 0 (the superscript -k), got {k}", self.name()))
            })
        };
        Ok(match self {
            Self::ClassicalNegk => FamilyValue::Integer(classical_pb_negk(n, unsigned()?)),
            Self::ClassicalAnyk => FamilyValue::Rational(classical_pb(n, k)),
            Self::CRelative => FamilyValue::Integer(c_relative(n, unsigned()?)),
            Self::OrderedQ => FamilyValue::Poly(ordered_q_pb(n, unsigned()?)),
            Self::LonesumQ => FamilyValue::Poly(lonesum_q_pb(n, unsigned()?)),
            Self::VesztergombiQ => FamilyValue::Poly(vesztergombi_q_pb(n, unsigned()?)?),
            Self::PermmatrixQ => FamilyValue::Poly(permmatrix_q(n, unsigned()?)?),
            Self::CenkciQ => FamilyValue::from_rational_function(cenkci_q_pb(n, k)),
            Self::AtQ => FamilyValue::from_rational_function(at_q_pb(n, k)),
        })
    }

    /// The classical number this family reduces to at `q = 1`.
    pub fn classical_at_one(self, n: usize, k: i64) -> Result<BigRational> {
        Ok(match self {
            Self::CRelative | Self::PermmatrixQ => {
                BigRational::from_integer(c_relative(n, usize::try_from(k).map_err(|_| Error::OutOfRange(k.to_string()))?))
            }
            Self::ClassicalAnyk | Self::CenkciQ | Self::AtQ => classical_pb(n, k),
            _ => BigRational::from_integer(classical_pb_negk(
                n,
                usize::try_from(k).map_err(|_| Error::OutOfRange(k.to_string()))?,
            )),
        })
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(into = "ValueWire", try_from = "ValueWire")]
pub enum FamilyValue {
    Integer(BigInt),
    Rational(BigRational),
    Poly(QPoly),
    RationalFunction(QRational),
}

/// Big numbers travel as decimal strings.
#[derive(Serialize, Deserialize)]
#[serde(tag = "carrier", content = "value", rename_all = "snake_case")]
enum ValueWire {
    Integer(String),
    Rational(String),
    Poly(QPoly),
    RationalFunction(QRational),
}

impl From<FamilyValue> for ValueWire {
    fn from(v: FamilyValue) -> Self {
        match v {
            FamilyValue::Integer(i) => ValueWire::Integer(i.to_string()),
            FamilyValue::Rational(r) => ValueWire::Rational(r.to_string()),
            FamilyValue::Poly(p) => ValueWire::Poly(p),
            FamilyValue::RationalFunction(r) => ValueWire::RationalFunction(r),
        }
    }
}

impl TryFrom<ValueWire> for FamilyValue {
    type Error = Error;
    fn try_from(w: ValueWire) -> Result<Self> {
        let bad = |s: &str| Error::Parse(format!("bad number {s:?}"));
        Ok(match w {
            ValueWire::Integer(s) => FamilyValue::Integer(s.parse().map_err(|_| bad(&s))?),
            ValueWire::Rational(s) => FamilyValue::Rational(s.parse().map_err(|_| bad(&s))?),
            ValueWire::Poly(p) => FamilyValue::Poly(p),
            ValueWire::RationalFunction(r) => FamilyValue::RationalFunction(r),
        })
    }
}

impl FamilyValue {
    fn from_rational_function(r: QRational) -> Self {
        match r.as_poly() {
            Some(p) => FamilyValue::Poly(p.clone()),
            None => FamilyValue::RationalFunction(r),
        }
    }

    pub fn eval(&self, at: &BigRational) -> Result<BigRational> {
        match self {
            FamilyValue::Integer(i) => Ok(BigRational::from_integer(i.clone())),
            FamilyValue::Rational(r) => Ok(r.clone()),
            FamilyValue::Poly(p) => p.eval(at),
            FamilyValue::RationalFunction(r) => r.eval(at),
        }
    }
}

impl fmt::Display for FamilyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyValue::Integer(i) => write!(f, "{i}"),
            FamilyValue::Rational(r) => write!(f, "{r}"),
            FamilyValue::Poly(p) => write!(f, "{p}"),
            FamilyValue::RationalFunction(r) => write!(f, "{r}"),
        }
    }
}

fn sign(e: usize) -> BigInt {
    if e.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn rational_pow(base: usize, e: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(base)).pow(e as i32)
}

/// `B_n^(k) = (-1)^n sum_m (-1)^m m! {n,m} / (m+1)^k`.
pub fn classical_pb(n: usize, k: i64) -> BigRational {
    let st = stirling2_table(n);
    let s: BigRational = (0..=n)
        .map(|m| BigRational::from_integer(sign(m) * factorial(m) * &st[n][m]) / rational_pow(m + 1, k))
        .sum();
    s * BigRational::from_integer(sign(n))
}

/// `B_n^(-k) = sum_m m!{n+1,m+1} m!{k+1,m+1}`.
pub fn classical_pb_negk(n: usize, k: usize) -> BigInt {
    let st = stirling2_table(n.max(k) + 1);
    (0..=n.min(k))
        .map(|m| {
            let f = factorial(m);
            &f * &st[n + 1][m + 1] * &f * &st[k + 1][m + 1]
        })
        .sum()
}

/// `B_n^(-k-1) = B_n^(-k) + sum_{m=1}^n C(n,m) B_{n-m+1}^(-k)`.
pub fn pb_recursion_check(n: usize, k: usize) -> bool {
    let rhs: BigInt = classical_pb_negk(n, k)
        + (1..=n).map(|m| binomial(n, m) * classical_pb_negk(n - m + 1, k)).sum::<BigInt>();
    classical_pb_negk(n, k + 1) == rhs
}

/// `C_n^k = sum_m m!{n+1,m+1} m!{k,m}`: the number of `n x k` perm-matrices.
pub fn c_relative(n: usize, k: usize) -> BigInt {
    let st = stirling2_table(n.max(k) + 1);
    (0..=n.min(k))
        .map(|m| {
            let f = factorial(m);
            &f * &st[n + 1][m + 1] * &f * &st[k][m]
        })
        .sum()
}

/// `sum_m [m]!{n+1,m+1}_q [m]!{k+1,m+1}_q` with Carlitz q-Stirling numbers.
pub fn ordered_q_pb(n: usize, k: usize) -> QPoly {
    let t = stirling_table(StirlingVariant::Carlitz, n.max(k) + 1);
    (0..=n.min(k))
        .map(|m| {
            let f = q_factorial(m);
            &f * &t.get(n + 1, m + 1) * &f * t.get(k + 1, m + 1)
        })
        .sum()
}

/// `F_n = sum_k [k]! {n,k}_q`.
pub fn q_fubini(n: usize) -> QPoly {
    let t = stirling_table(StirlingVariant::Carlitz, n);
    (0..=n).map(|k| q_factorial(k) * t.get(n, k)).sum()
}

/// `sum_m m! {n+1,m+1}* m! {k+1,m+1}*` with Cigler's zero-block weight and
/// plain factorials.
pub fn lonesum_q_pb(n: usize, k: usize) -> QPoly {
    let t = stirling_table(StirlingVariant::Cigler, n.max(k) + 1);
    (0..=n.min(k))
        .map(|m| {
            let f = factorial(m);
            (t.get(n + 1, m + 1) * t.get(k + 1, m + 1)).scale(&(&f * &f))
        })
        .sum()
}

/// `q^(nk) sum_m S_{n+1,m+1}(1/q) S_{k+1,m+1}(1/q) [m]!^2 q^m`.
pub fn vesztergombi_q_pb(n: usize, k: usize) -> Result<QPoly> {
    let t = stirling_table(StirlingVariant::Shifted, n.max(k) + 1);
    let sum: QPoly = (0..=n.min(k))
        .map(|m| {
            let f = q_factorial(m);
            let a = t.get(n + 1, m + 1).substitute_inverse();
            let b = t.get(k + 1, m + 1).substitute_inverse();
            (a * b * &f * f).shift(m as i64)
        })
        .sum();
    sum.shift((n * k) as i64).into_polynomial()
}

/// `sum q^(ones - columns)` over `n x k` perm-matrices, by enumeration.
pub fn permmatrix_q(n: usize, k: usize) -> Result<QPoly> {
    perm_matrix_poly(n, k)
}

/// `sum_m {n,m} (-q)^(n-m) m! / (m+1)^k`.
pub fn cenkci_q_pb(n: usize, k: i64) -> QRational {
    let st = stirling2_table(n);
    // coefficient of q^(n-m) sits at index n-m
    let coeffs: Vec<BigRational> = (0..=n)
        .map(|e| {
            let m = n - e;
            BigRational::from_integer(&st[n][m] * sign(e) * factorial(m)) / rational_pow(m + 1, k)
        })
        .collect();
    QRational::from_rational_laurent(0, &coeffs)
}

/// Both sides of `B^(k-1) = (n+1) B^(k) + sum_{i=1}^{n-1} q^i C(n,i+1) B_{n-i}^(k)`.
pub fn cenkci_recursion_sides(n: usize, k: i64) -> (QRational, QRational) {
    (cenkci_q_pb(n, k - 1), cenkci_recursion_rhs(n, k))
}

/// The same right-hand side paired with `B^(k+1)` instead.
pub fn cenkci_recursion_literal_sides(n: usize, k: i64) -> (QRational, QRational) {
    (cenkci_q_pb(n, k + 1), cenkci_recursion_rhs(n, k))
}

fn cenkci_recursion_rhs(n: usize, k: i64) -> QRational {
    let head = cenkci_q_pb(n, k).scale(&BigInt::from(n + 1));
    let tail: QRational = (1..n)
        .map(|i| cenkci_q_pb(n - i, k) * QRational::from_poly(QPoly::monomial(binomial(n, i + 1), i as i64)))
        .sum();
    head + tail
}

pub fn cenkci_recursion_check(n: usize, k: i64) -> bool {
    let (l, r) = cenkci_recursion_sides(n, k);
    l == r
}

pub fn cenkci_recursion_literal_check(n: usize, k: i64) -> bool {
    let (l, r) = cenkci_recursion_literal_sides(n, k);
    l == r
}

/// `B_{n,q}^(-k)` against `q sum_j (j!)^2 S_2(n,j,q) S_2^{1/q}(-k+1, j+1)`.
pub fn cenkci_comb_sides(n: usize, k: usize) -> (QRational, QRational) {
    let lhs = cenkci_q_pb(n, -(k as i64));
    let rhs: QRational = (0..=n.min(k))
        .map(|j| {
            let f = factorial(j);
            let s2 = QRational::from_poly(crate::qkernels::s2_q(n, j).scale(&(&f * &f)));
            s2 * crate::qkernels::s2_inv_q(-(k as i64), j)
        })
        .sum();
    (lhs, rhs * QRational::from_poly(QPoly::q()))
}

pub fn cenkci_comb_check(n: usize, k: usize) -> bool {
    let (l, r) = cenkci_comb_sides(n, k);
    l == r
}

/// `p_{n,k}(q) = (-1)^n sum_m (-1)^m [m]! / [m+1]^k {n,m}_q`.
pub fn at_q_pb(n: usize, k: i64) -> QRational {
    let t = stirling_table(StirlingVariant::Carlitz, n);
    let s: QRational = (0..=n)
        .map(|m| {
            let num = q_factorial(m) * t.get(n, m);
            let r = QRational::from_poly(num) * QRational::from_poly(q_int(m + 1)).powi(-k).expect("[m+1] is nonzero");
            if (n + m).is_multiple_of(2) {
                r
            } else {
                -r
            }
        })
        .sum();
    s
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AtRule {
    /// `a_{n+1,m} = (m+1)(a_{n,m} - a_{n,m+1})`
    Classical,
    /// `a_{n+1,m} = [m+1](a_{n,m} - a_{n,m+1})`
    ZengA,
    /// `a_{n+1,m} = [m] a_{n,m} - [m+1] a_{n,m+1}`
    ZengB,
}

/// Row zero of an Akiyama-Tanigawa triangle.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InitialSeq {
    /// `1/(m+1)`
    Reciprocal,
    /// `1/(m+1)^k`
    ReciprocalPower(i64),
    /// `1/[m+1]_q`
    QReciprocal,
    /// `[m+1]_q^k`
    QIntPower(i64),
    Explicit(Vec<QRational>),
}

impl InitialSeq {
    pub fn term(&self, m: usize) -> Result<QRational> {
        Ok(match self {
            InitialSeq::Reciprocal => QRational::from_ratio(&BigRational::new(BigInt::one(), BigInt::from(m + 1))),
            InitialSeq::ReciprocalPower(k) => QRational::from_ratio(&rational_pow(m + 1, -k)),
            InitialSeq::QReciprocal => QRational::from_poly(q_int(m + 1)).inv()?,
            InitialSeq::QIntPower(k) => QRational::from_poly(q_int(m + 1)).powi(*k)?,
            InitialSeq::Explicit(v) => v
                .get(m)
                .cloned()
                .ok_or_else(|| Error::IndexOutOfRange(format!("explicit initial sequence has {} terms", v.len())))?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Triangle {
    pub rule: AtRule,
    pub initial: InitialSeq,
    pub rows: Vec<Vec<QRational>>,
}

impl Triangle {
    pub fn leading_column(&self) -> Vec<QRational> {
        self.rows.iter().map(|r| r[0].clone()).collect()
    }
}

/// Builds `n_rows` rows, the first of length `row_len`, each next one shorter.
pub fn akiyama_tanigawa(rule: AtRule, initial: InitialSeq, n_rows: usize, row_len: usize) -> Result<Triangle> {
    if row_len < n_rows || row_len == 0 {
        return Err(Error::RowTooShort { n_rows, row_len });
    }
    let first = (0..row_len).map(|m| initial.term(m)).collect::<Result<Vec<_>>>()?;
    let mut rows = vec![first];
    for _ in 1..n_rows {
        let prev = rows.last().expect("nonempty");
        let next = (0..prev.len() - 1)
            .map(|m| {
                let (a, b) = (&prev[m], &prev[m + 1]);
                match rule {
                    AtRule::Classical => (a - b).scale(&BigInt::from(m + 1)),
                    AtRule::ZengA => QRational::from_poly(q_int(m + 1)) * (a - b),
                    AtRule::ZengB => QRational::from_poly(q_int(m)) * a - QRational::from_poly(q_int(m + 1)) * b,
                }
            })
            .collect();
        rows.push(next);
    }
    Ok(Triangle { rule, initial, rows })
}

/// Leading-column closed forms: rule A gives
/// `sum_m (-1)^m [m]! {n+1,m+1}_q a_{0,m}`, rule B `sum_m (-1)^m [m]! {n,m}_q a_{0,m}`.
pub fn zeng_closed_form(rule: AtRule, initial: &InitialSeq, n: usize) -> Result<QRational> {
    let t = stirling_table(StirlingVariant::Carlitz, n + 1);
    let (top, fact): (usize, fn(usize) -> QPoly) = match rule {
        AtRule::ZengA => (n + 1, q_factorial),
        AtRule::ZengB => (n, q_factorial),
        AtRule::Classical => return Err(Error::InvalidConfig("closed forms are stated for the q-rules".into())),
    };
    let shift = usize::from(rule == AtRule::ZengA);
    (0..=n)
        .map(|m| {
            let w = QRational::from_poly(fact(m) * t.get(top, m + shift)) * initial.term(m)?;
            Ok(if m % 2 == 0 { w } else { -w })
        })
        .sum()
}

/// Carlitz's `beta_n`: the closed form `sum_k (-1)^k {n+1,k+1}_q [k]!/[k+1]`
/// for `n >= 2`, the rule-A triangle with initial `1/[m+1]` below that.
pub fn carlitz_beta(n: usize) -> QRational {
    if n < 2 {
        let t = akiyama_tanigawa(AtRule::ZengA, InitialSeq::QReciprocal, n + 1, n + 1).expect("valid sizes");
        return t.rows[n][0].clone();
    }
    let t = stirling_table(StirlingVariant::Carlitz, n + 1);
    (0..=n)
        .map(|k| {
            let w = QRational::new(t.get(n + 1, k + 1) * q_factorial(k), q_int(k + 1)).expect("[k+1] is nonzero");
            if k % 2 == 0 {
                w
            } else {
                -w
            }
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_i64s(0, c)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn one() -> BigRational {
        BigRational::one()
    }

    #[test]
    fn classical_values() {
        assert_eq!(classical_pb_negk(3, 2), BigInt::from(46));
        assert_eq!(classical_pb_negk(4, 4), BigInt::from(6902));
        assert_eq!(classical_pb(2, -2), rat(14, 1));
        assert_eq!(classical_pb(5, -5), rat(329462, 1));
        for n in 0..6 {
            assert_eq!(classical_pb(n, 0), one());
            assert_eq!(classical_pb_negk(n, 0), BigInt::one());
        }
        assert_eq!(classical_pb(1, 1), rat(1, 2));
        assert_eq!(classical_pb(2, 1), rat(1, 6));
    }

    #[test]
    fn recursion_and_relative() {
        assert!(pb_recursion_check(3, 2));
        assert!(pb_recursion_check(0, 4));
        assert!(pb_recursion_check(5, 4));
        assert_eq!(c_relative(2, 2), BigInt::from(7));
        assert_eq!(c_relative(3, 0), BigInt::one());
        assert_eq!(c_relative(0, 3), BigInt::zero());
    }

    #[test]
    fn q_family_examples() {
        assert_eq!(ordered_q_pb(3, 1), p(&[4, 3, 1]));
        assert_eq!(ordered_q_pb(4, 0), QPoly::one());
        assert_eq!(ordered_q_pb(2, 2).at_one(), BigInt::from(14));
        assert_eq!(q_fubini(0), QPoly::one());
        assert_eq!(q_fubini(3), p(&[4, 5, 3, 1]));
        assert_eq!(q_fubini(4), p(&[8, 17, 20, 16, 9, 4, 1]));
        assert_eq!(vesztergombi_q_pb(2, 2).unwrap(), p(&[1, 3, 5, 4, 1]));
        assert_eq!(vesztergombi_q_pb(3, 2).unwrap(), p(&[1, 4, 9, 13, 12, 6, 1]));
        for n in 0..=6 {
            assert_eq!(vesztergombi_q_pb(n, 1).unwrap(), p(&[1, 1]).pow(n as u32));
        }
        assert_eq!(permmatrix_q(2, 2).unwrap(), p(&[3, 3, 1]));
        assert_eq!(lonesum_q_pb(2, 3).at_one(), BigInt::from(46));
    }

    #[test]
    fn cenkci_examples() {
        assert_eq!(cenkci_q_pb(2, -1), QRational::from_poly(p(&[6, -2])));
        for k in -3..3 {
            assert!(cenkci_q_pb(0, k).is_one());
        }
        assert!(cenkci_recursion_check(2, -2));
        assert!(cenkci_recursion_check(4, -3));
        assert!(cenkci_recursion_check(1, 5));
        assert!(!cenkci_recursion_literal_check(2, -2));
        assert!(cenkci_comb_check(0, 0));
    }

    #[test]
    fn at_q_examples() {
        assert!(at_q_pb(0, 3).is_one());
        assert_eq!(at_q_pb(1, -1), QRational::from_poly(p(&[1, 1])));
        for n in 0..=5 {
            for k in -3..=3 {
                assert_eq!(at_q_pb(n, k).eval(&one()).unwrap(), classical_pb(n, k), "({n},{k})");
            }
        }
    }

    #[test]
    fn akiyama_tanigawa_classical_rows() {
        let t = akiyama_tanigawa(AtRule::Classical, InitialSeq::Reciprocal, 3, 5).unwrap();
        let row = |i: usize| t.rows[i].iter().map(|x| x.eval(&one()).unwrap()).collect::<Vec<_>>();
        assert_eq!(row(1)[..3], [rat(1, 2), rat(1, 3), rat(1, 4)]);
        assert_eq!(row(2)[..3], [rat(1, 6), rat(1, 6), rat(3, 20)]);
        assert_eq!(
            akiyama_tanigawa(AtRule::Classical, InitialSeq::Reciprocal, 4, 3),
            Err(Error::RowTooShort { n_rows: 4, row_len: 3 })
        );
    }

    #[test]
    fn zeng_rules_match_closed_forms() {
        let initial = InitialSeq::Explicit(
            [(1, 2), (-3, 5), (7, 3), (2, 9), (-1, 4), (5, 7), (3, 11), (1, 13)]
                .iter()
                .map(|&(a, b)| QRational::from_ratio(&rat(a, b)))
                .collect(),
        );
        for rule in [AtRule::ZengA, AtRule::ZengB] {
            let t = akiyama_tanigawa(rule, initial.clone(), 7, 7).unwrap();
            for (n, v) in t.leading_column().into_iter().enumerate() {
                assert_eq!(v, zeng_closed_form(rule, &initial, n).unwrap(), "{rule:?} n={n}");
            }
        }
    }

    #[test]
    fn carlitz_beta_values() {
        let b2 = carlitz_beta(2);
        let den = p(&[1, 1]) * p(&[1, 1, 1]);
        assert_eq!(b2, QRational::new(QPoly::q(), den).unwrap());
        assert_eq!(b2.eval(&one()).unwrap(), rat(1, 6));
        assert!(carlitz_beta(0).is_one());
        let t = akiyama_tanigawa(AtRule::ZengA, InitialSeq::QReciprocal, 7, 7).unwrap();
        for n in 2..=6 {
            assert_eq!(carlitz_beta(n), t.rows[n][0], "n={n}");
        }
    }

    #[test]
    fn family_dispatch() {
        assert_eq!(FamilyId::ClassicalNegk.value(2, 2).unwrap(), FamilyValue::Integer(14.into()));
        assert!(matches!(FamilyId::OrderedQ.value(2, -1), Err(Error::OutOfRange(_))));
        assert_eq!(FamilyId::AtQ.value(1, -1).unwrap(), FamilyValue::Poly(p(&[1, 1])));
        for f in FamilyId::ALL {
            assert_eq!(f.name().parse::<FamilyId>().unwrap(), f);
        }
        let v = FamilyId::ClassicalAnyk.value(1, 1).unwrap();
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"{"carrier":"rational","value":"1/2"}"#);
    }
}
