//! Identity suites, generating-function checks and the Sylvester-matrix
//! conjecture harness. Every check yields a [`CheckReport`]; suites emit
//! them in a fixed order.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactnum::{IntMatrix, QPoly, QRational, TruncatedSeries};
use crate::families::{self, AtRule, FamilyId, InitialSeq};
use crate::objects::{self, MatrixClass, MatrixStatistic};
use crate::qkernels::{self, q_binomial, q_exponential, q_factorial, q_int, StirlingVariant};
use crate::rook;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Outcome recorded as data; never counts as a failure.
    Reported,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub n: Option<i64>,
    pub k: Option<i64>,
    pub order: Option<usize>,
    pub q_sample: Option<String>,
}

impl Params {
    pub fn nk(n: impl TryInto<i64>, k: impl TryInto<i64>) -> Self {
        Params { n: n.try_into().ok(), k: k.try_into().ok(), ..Default::default() }
    }

    pub fn n(n: impl TryInto<i64>) -> Self {
        Params { n: n.try_into().ok(), ..Default::default() }
    }

    pub fn with_order(mut self, order: usize) -> Self {
        self.order = Some(order);
        self
    }

    pub fn with_q(mut self, q: &BigRational) -> Self {
        self.q_sample = Some(q.to_string());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_id: String,
    pub parameters: Params,
    pub status: Status,
    pub witness: Option<Value>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json_line())
    }
}

/// Exact JSON rendering of a compared value; bignums become strings.
pub trait Witness {
    fn witness(&self) -> Value;
}

macro_rules! serde_witness {
    ($($t:ty),*) => {$(
        impl Witness for $t {
            fn witness(&self) -> Value {
                serde_json::to_value(self).expect("values serialize")
            }
        }
    )*};
}

serde_witness!(bool, QPoly, QRational);

impl Witness for BigInt {
    fn witness(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl Witness for BigRational {
    fn witness(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl<T: Witness> Witness for Vec<T> {
    fn witness(&self) -> Value {
        Value::Array(self.iter().map(Witness::witness).collect())
    }
}

fn to_value<T: Witness>(v: &T) -> Value {
    v.witness()
}

/// Pass if `lhs == rhs`, otherwise fail with both sides as the witness.
pub fn compare<T: Witness + PartialEq>(check_id: &str, parameters: Params, lhs: &T, rhs: &T) -> CheckReport {
    let ok = lhs == rhs;
    CheckReport {
        check_id: check_id.into(),
        parameters,
        status: if ok { Status::Pass } else { Status::Fail },
        witness: (!ok).then(|| json!({ "lhs": to_value(lhs), "rhs": to_value(rhs) })),
    }
}

/// Always `reported`; the witness says whether the sides agree.
pub fn report<T: Witness + PartialEq>(check_id: &str, parameters: Params, lhs: &T, rhs: &T) -> CheckReport {
    CheckReport {
        check_id: check_id.into(),
        parameters,
        status: Status::Reported,
        witness: Some(json!({ "agree": lhs == rhs, "lhs": to_value(lhs), "rhs": to_value(rhs) })),
    }
}

fn error_report(check_id: &str, parameters: Params, e: &Error) -> CheckReport {
    CheckReport {
        check_id: check_id.into(),
        parameters,
        status: Status::Fail,
        witness: Some(json!({ "error": e.to_string() })),
    }
}

fn compare_result<T: Witness + PartialEq>(check_id: &str, parameters: Params, sides: Result<(T, T)>) -> CheckReport {
    match sides {
        Ok((l, r)) => compare(check_id, parameters, &l, &r),
        Err(e) => error_report(check_id, parameters, &e),
    }
}

pub const DEFAULT_SYLVESTER_BOUND: usize = 10;

/// Sylvester matrix of `P_n = [n]_q` (degree `n-1`) and `P_{n+1}` (degree
/// `n`): `n` shifted rows of `P_n`'s coefficients over `n-1` shifted rows of
/// `P_{n+1}`'s, size `2n-1`.
pub fn sylvester_matrix(n: usize) -> IntMatrix {
    let size = (2 * n).saturating_sub(1);
    let mut m = IntMatrix::zeros(size, size);
    let rows = (0..n).map(|s| (s, n)).chain((0..n.saturating_sub(1)).map(|s| (s, n + 1)));
    for (r, (shift, len)) in rows.enumerate() {
        for j in 0..len {
            m.set(r, shift + j, BigInt::one());
        }
    }
    m
}

/// `W_n(q)`: characteristic polynomial `det(S - qI)` of [`sylvester_matrix`].
pub fn sylvester_w(n: usize) -> QPoly {
    sylvester_matrix(n).charpoly().expect("square")
}

pub fn sylvester_conjecture(n: usize) -> Result<CheckReport> {
    sylvester_conjecture_bounded(n, DEFAULT_SYLVESTER_BOUND)
}

/// Compares `pB_{n,2}(q)` with `(1+q) W_n(-q)`. On a mismatch the witness
/// also records whether the opposite sign would have matched.
pub fn sylvester_conjecture_bounded(n: usize, bound: usize) -> Result<CheckReport> {
    if n < 2 || n > bound {
        return Err(Error::OutOfRange(format!("sylvester_conjecture needs 2 <= n <= {bound}, got {n}")));
    }
    let w = sylvester_w(n);
    let lhs = families::vesztergombi_q_pb(n, 2)?;
    let rhs = QPoly::from_i64s(0, &[1, 1]) * w.substitute_negate();
    let mut r = compare("conjecture.sylvester", Params::n(n), &lhs, &rhs);
    if let Some(Value::Object(map)) = r.witness.as_mut() {
        map.insert("w_n".into(), w.witness());
        map.insert("negated_rhs_matches".into(), Value::Bool(lhs == -rhs));
    }
    Ok(r)
}

pub const MAX_GF_CLASSICAL_ORDER: usize = 12;
pub const MAX_GF_CENKCI_ORDER: usize = 10;
pub const MAX_ERNST_M: usize = 4;
pub const MAX_ERNST_ORDER: usize = 8;

/// `Li_k(z) = sum_{i>=1} z^i / i^k` as a series in `z`.
fn polylog(k: i64, order: usize) -> TruncatedSeries<BigRational> {
    let coeffs = (0..=order)
        .map(|i| {
            if i == 0 {
                BigRational::zero()
            } else {
                BigRational::from_integer(BigInt::from(i)).pow(-k as i32)
            }
        })
        .collect();
    TruncatedSeries::new(order, coeffs)
}

/// `n! [x^n] Li_k(1 - e^-x) / (1 - e^-x)` against the explicit sum.
pub fn gf_check_classical(k: i64, order: usize) -> Result<CheckReport> {
    if order > MAX_GF_CLASSICAL_ORDER {
        return Err(Error::OutOfRange(format!("order {order} > {MAX_GF_CLASSICAL_ORDER}")));
    }
    let one = BigRational::one();
    let z = TruncatedSeries::one(order + 1).sub(&TruncatedSeries::exp_scaled(&-one, order + 1));
    let series = polylog(k, order + 1).compose(&z)?.divide(&z)?;
    let got = series.egf_values();
    let want: Vec<BigRational> = (0..=order).map(|n| families::classical_pb(n, k)).collect();
    Ok(compare("gf.classical", Params { k: Some(k), ..Default::default() }.with_order(order), &got, &want))
}

/// `n! [t^n] q Li_k((1 - e^{-qt})/q) / (1 - e^{-qt})` at a rational `q`
/// against the explicit formula evaluated there.
pub fn gf_check_cenkci(k: i64, q: &BigRational, order: usize) -> Result<CheckReport> {
    if q.is_zero() {
        return Err(Error::ZeroQ);
    }
    if order > MAX_GF_CENKCI_ORDER {
        return Err(Error::OutOfRange(format!("order {order} > {MAX_GF_CENKCI_ORDER}")));
    }
    let den = TruncatedSeries::one(order + 1).sub(&TruncatedSeries::exp_scaled(&-q.clone(), order + 1));
    let inner = den.scale(&q.recip());
    let num = polylog(k, order + 1).compose(&inner)?.scale(q);
    let got = num.divide(&den)?.egf_values();
    let want = (0..=order).map(|n| families::cenkci_q_pb(n, k).eval(q)).collect::<Result<Vec<_>>>()?;
    let params = Params { k: Some(k), ..Default::default() }.with_order(order).with_q(q);
    Ok(compare("gf.cenkci", params, &got, &want))
}

/// `[n]! [z^n]` of `(1/([m]! q^C(m,2))) sum_i [m,i] (-1)^i q^C(i,2) E_q(z[m-i])`
/// against Carlitz's `{n,m}_q`, for every `n <= order`.
pub fn gf_check_ernst(m: usize, order: usize) -> Result<CheckReport> {
    if m > MAX_ERNST_M || order > MAX_ERNST_ORDER {
        return Err(Error::OutOfRange(format!("gf_check_ernst needs m <= {MAX_ERNST_M}, order <= {MAX_ERNST_ORDER}")));
    }
    let c2 = |x: usize| (x * x.saturating_sub(1) / 2) as i64;
    let mut sum = TruncatedSeries::zero(order);
    for i in 0..=m {
        let mut c = q_binomial(m, i)?.shift(c2(i));
        if i % 2 == 1 {
            c = -c;
        }
        sum = sum.add(&q_exponential(&q_int(m - i), order).scale(&QRational::from_poly(c)));
    }
    let norm = QRational::from_poly(q_factorial(m).shift(c2(m))).inv()?;
    let series = sum.scale(&norm);
    let got: Vec<QRational> = (0..=order)
        .map(|n| series.coeffs()[n].clone() * QRational::from_poly(q_factorial(n)))
        .collect();
    let want: Vec<QRational> =
        (0..=order).map(|n| QRational::from_poly(qkernels::q_stirling(StirlingVariant::Carlitz, n, m))).collect();
    Ok(compare("gf.ernst", Params::n(m).with_order(order), &got, &want))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub max_n: usize,
    pub max_k: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_n: 5, max_k: 5 }
    }
}

pub const SUITES: [&str; 9] = [
    "q1-collapse",
    "oracles",
    "rook-laws",
    "cross-formula",
    "gf",
    "akiyama-tanigawa",
    "cenkci-comb",
    "conjecture",
    "all",
];

/// Runs a named suite. Cells beyond a module's size limits are left out of
/// the sweep rather than reported.
pub fn run_suite(suite: &str, bounds: Bounds) -> Result<Vec<CheckReport>> {
    Ok(match suite {
        "q1-collapse" => q1_collapse(bounds),
        "oracles" => oracles(bounds),
        "rook-laws" => rook_laws(bounds),
        "cross-formula" => cross_formula(bounds),
        "gf" => gf_suite(bounds),
        "akiyama-tanigawa" => akiyama_tanigawa_suite(bounds),
        "cenkci-comb" => cenkci_comb(bounds),
        "conjecture" => conjecture_suite(bounds),
        "all" => {
            let mut out = Vec::new();
            for s in &SUITES[..SUITES.len() - 1] {
                out.extend(run_suite(s, bounds)?);
            }
            out
        }
        other => return Err(Error::UnknownSuite(other.into())),
    })
}

fn grid(bounds: Bounds) -> impl Iterator<Item = (usize, usize)> {
    (0..=bounds.max_n).flat_map(move |n| (0..=bounds.max_k).map(move |k| (n, k)))
}

fn signed_grid(bounds: Bounds) -> impl Iterator<Item = (usize, i64)> {
    let kk = bounds.max_k as i64;
    (0..=bounds.max_n).flat_map(move |n| (-kk..=kk).map(move |k| (n, k)))
}

fn q1_collapse(bounds: Bounds) -> Vec<CheckReport> {
    let one = BigRational::one();
    let mut out = Vec::new();
    for family in FamilyId::ALL {
        let cells: Vec<(usize, i64)> = if family.signed_k() {
            signed_grid(bounds).collect()
        } else {
            grid(bounds)
                .filter(|&(n, k)| family != FamilyId::PermmatrixQ || k <= objects::MAX_PERM_MATRIX_COLS && n * k <= objects::MAX_PERM_MATRIX_CELLS)
                .map(|(n, k)| (n, k as i64))
                .collect()
        };
        let id = format!("q1_collapse.{family}");
        for (n, k) in cells {
            let sides = family
                .value(n, k)
                .and_then(|v| v.eval(&one))
                .and_then(|v| Ok((v, family.classical_at_one(n, k)?)));
            out.push(compare_result(&id, Params::nk(n, k), sides));
        }
    }
    out
}

fn oracles(bounds: Bounds) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let top = bounds.max_n.max(bounds.max_k);
    for n in 0..=top.min(objects::MAX_SET_PARTITION_N) {
        for m in 0..=n {
            let sides = objects::carlitz_oracle(n, m).map(|o| (qkernels::q_stirling(StirlingVariant::Carlitz, n, m), o));
            out.push(compare_result("oracle.carlitz_inv_star", Params::nk(n, m), sides));
            let sides = objects::cigler_oracle(n, m).map(|o| (qkernels::q_stirling(StirlingVariant::Cigler, n, m), o));
            out.push(compare_result("oracle.cigler_zero_block", Params::nk(n, m), sides));
        }
    }
    for n in 0..=top.min(objects::MAX_ORDERED_PARTITION_N) {
        let sides = objects::fubini_oracle(n).map(|o| (families::q_fubini(n), o));
        out.push(compare_result("oracle.q_fubini", Params::n(n), sides));
    }
    for (n, k) in grid(bounds) {
        if n <= objects::MAX_ALTERNATING_PAIR_SIDE && k <= objects::MAX_ALTERNATING_PAIR_SIDE {
            let sides = objects::ordered_q_oracle(n, k).map(|o| (families::ordered_q_pb(n, k), o));
            out.push(compare_result("oracle.ordered_q", Params::nk(n, k), sides));
        }
        if n * k <= objects::MAX_SCAN_CELLS {
            let sides = objects::class_poly(MatrixClass::Lonesum, n, k, MatrixStatistic::NuSum)
                .map(|o| (families::lonesum_q_pb(n, k), o));
            out.push(compare_result("oracle.lonesum_q", Params::nk(n, k), sides));
            let want = families::classical_pb_negk(n, k);
            for (class, id) in [(MatrixClass::Lonesum, "oracle.lonesum_count"), (MatrixClass::GammaFree, "oracle.gamma_free_count")] {
                let sides = objects::class_count(class, n, k).map(|c| (BigInt::from(c), want.clone()));
                out.push(compare_result(id, Params::nk(n, k), sides));
            }
            let sides = objects::class_poly(MatrixClass::PermMatrix, n, k, MatrixStatistic::OnesMinusCols)
                .map(|o| (o.at_one(), families::c_relative(n, k)));
            out.push(compare_result("oracle.perm_matrix_count", Params::nk(n, k), sides));
        }
        if n * (k + 1) <= objects::MAX_SCAN_CELLS {
            let sides = objects::gamma_free_first_column_decomposition_check(n, k).map(|b| (b, true));
            out.push(compare_result("oracle.gamma_free_decomposition", Params::nk(n, k), sides));
        }
        if n + k <= objects::MAX_VESZTERGOMBI_SIZE {
            let sides = objects::vesztergombi_oracle(n, k).and_then(|o| Ok((families::vesztergombi_q_pb(n, k)?, o)));
            out.push(compare_result("oracle.vesztergombi_q", Params::nk(n, k), sides));
        }
        if n + k <= 7 {
            out.push(compare_result("oracle.v_board", Params::nk(n, k), rook::v_law_sides(n, k)));
        }
    }
    out
}

fn rook_laws(bounds: Bounds) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for n in 0..=bounds.max_n {
        out.push(compare_result("rook.j_law", Params::n(n), rook::j_law_sides(n)));
    }
    for n in 0..=bounds.max_n {
        for k in 0..=n {
            out.push(compare_result("rook.h_law", Params::nk(n, k), rook::h_law_sides(n, k)));
        }
    }
    let side = bounds.max_n.min(3);
    let boards: Vec<Vec<rook::Board>> = (0..=side).map(|s| rook::all_square_boards(s).collect()).collect();
    for (s, bs) in boards.iter().enumerate() {
        let mut bad = Vec::new();
        for b in bs {
            if let Ok((l, r)) = rook::reflection_law_sides(b) {
                if l != r {
                    bad.push(json!({ "board": b, "lhs": l.witness(), "rhs": r.witness() }));
                }
            }
        }
        out.push(sweep_report("rook.reflection", Params::n(s), bs.len(), bad));
    }
    for (n, bs) in boards.iter().enumerate().skip(1) {
        for (k, as_) in boards.iter().enumerate().skip(1) {
            let mut bad = Vec::new();
            for b in bs {
                for a in as_ {
                    if let Ok((l, r)) = rook::block_law_sides(b, a) {
                        if l != r {
                            bad.push(json!({ "b": b, "a": a, "lhs": l.witness(), "rhs": r.witness() }));
                        }
                    }
                }
            }
            out.push(sweep_report("rook.block", Params::nk(n, k), bs.len() * as_.len(), bad));
        }
    }
    out
}

/// One report for a sweep of `cases` instances; fails with the first few
/// counterexamples.
fn sweep_report(check_id: &str, parameters: Params, cases: usize, mut bad: Vec<Value>) -> CheckReport {
    if bad.is_empty() {
        return CheckReport { check_id: check_id.into(), parameters, status: Status::Pass, witness: None };
    }
    let failures = bad.len();
    bad.truncate(3);
    CheckReport {
        check_id: check_id.into(),
        parameters,
        status: Status::Fail,
        witness: Some(json!({ "cases": cases, "failures": failures, "examples": bad })),
    }
}

fn cross_formula(bounds: Bounds) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for (n, k) in grid(bounds) {
        let lhs = families::classical_pb(n, -(k as i64));
        let rhs = BigRational::from_integer(families::classical_pb_negk(n, k));
        out.push(compare("cross.explicit_vs_combinatorial", Params::nk(n, k), &lhs, &rhs));
        out.push(compare("cross.negk_recursion", Params::nk(n, k), &families::pb_recursion_check(n, k), &true));
        out.push(compare(
            "cross.symmetry.classical_negk",
            Params::nk(n, k),
            &families::classical_pb_negk(n, k),
            &families::classical_pb_negk(k, n),
        ));
        out.push(compare("cross.symmetry.ordered_q", Params::nk(n, k), &families::ordered_q_pb(n, k), &families::ordered_q_pb(k, n)));
        let sides = families::vesztergombi_q_pb(n, k).and_then(|a| Ok((a, families::vesztergombi_q_pb(k, n)?)));
        out.push(compare_result("cross.symmetry.vesztergombi_q", Params::nk(n, k), sides));
        if let Ok(v) = families::vesztergombi_q_pb(n, k) {
            let shape_ok = v.coeffs().iter().all(|c| c > &BigInt::zero()) && v.max_exp() == Some((n * k) as i64);
            out.push(compare("cross.vesztergombi_shape", Params::nk(n, k), &shape_ok, &true));
        }
    }
    let kk = bounds.max_k as i64;
    for n in 1..=bounds.max_n {
        for k in -kk..=0 {
            let (l, r) = families::cenkci_recursion_sides(n, k);
            out.push(compare("cross.cenkci_recursion", Params::nk(n, k), &l, &r));
        }
    }
    for n in 1..=bounds.max_n {
        for k in -kk..=0 {
            let (l, r) = families::cenkci_recursion_literal_sides(n, k);
            out.push(report("cross.cenkci_recursion_literal", Params::nk(n, k), &l, &r));
        }
    }
    for n in 0..=bounds.max_n.max(3) {
        for m in 0..=n {
            let c = qkernels::q_stirling(StirlingVariant::Carlitz, n, m).shift((m * m.saturating_sub(1) / 2) as i64);
            out.push(compare(
                "cross.shifted_vs_carlitz",
                Params::nk(n, m),
                &qkernels::q_stirling(StirlingVariant::Shifted, n, m),
                &c,
            ));
        }
    }
    for n in 1..=bounds.max_n.max(3) {
        for k in 1..=n {
            let sides = qkernels::q_eulerian(n, k).map(|e| {
                let at = |x: i64| e.eval(&BigRational::from_integer(x.into())).expect("polynomial");
                let got = vec![at(1), at(0), at(-1)];
                let eulerian = eulerian_number(n, k - 1);
                let narayana = qkernels::binomial(n, k) * qkernels::binomial(n, k - 1) / n;
                let want = [eulerian, narayana, qkernels::binomial(n - 1, k - 1)].map(BigRational::from_integer).to_vec();
                (got, want)
            });
            out.push(compare_result("cross.q_eulerian_specializations", Params::nk(n, k), sides));
        }
    }
    out
}

/// Classical Eulerian number `A(n, d)` from its recurrence.
fn eulerian_number(n: usize, d: usize) -> BigInt {
    let mut row = vec![BigInt::one()];
    for m in 1..=n {
        row = (0..m)
            .map(|j| {
                let a = row.get(j).cloned().unwrap_or_default() * (j + 1);
                let b = if j > 0 { row.get(j - 1).cloned().unwrap_or_default() * (m - j) } else { BigInt::zero() };
                a + b
            })
            .collect();
    }
    row.get(d).cloned().unwrap_or_default()
}

fn gf_suite(bounds: Bounds) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let push = |out: &mut Vec<CheckReport>, r: Result<CheckReport>, id: &str, p: Params| {
        out.push(r.unwrap_or_else(|e| error_report(id, p, &e)));
    };
    push(&mut out, gf_check_classical(1, 8), "gf.classical", Params::default());
    for k in 0..=bounds.max_k as i64 {
        push(&mut out, gf_check_classical(-k, 5), "gf.classical", Params::default());
    }
    let samples = [BigRational::one(), BigRational::new(2.into(), 3.into()), -BigRational::one()];
    for q in &samples {
        for k in -(bounds.max_k as i64)..=2 {
            push(&mut out, gf_check_cenkci(k, q, 6), "gf.cenkci", Params::default());
        }
    }
    for m in 0..=MAX_ERNST_M {
        push(&mut out, gf_check_ernst(m, MAX_ERNST_ORDER), "gf.ernst", Params::default());
    }
    out
}

/// Generic rational initial values used to probe the rule A / B closed forms.
pub fn generic_initial() -> InitialSeq {
    let pairs = [(1, 2), (-3, 5), (7, 3), (2, 9), (-1, 4), (5, 7), (3, 11), (1, 13), (-4, 17), (6, 19)];
    InitialSeq::Explicit(pairs.iter().map(|&(a, b)| QRational::from_ratio(&BigRational::new(a.into(), b.into()))).collect())
}

fn akiyama_tanigawa_suite(bounds: Bounds) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let one = BigRational::one();
    let r = |a: i64, b: i64| QRational::from_ratio(&BigRational::new(a.into(), b.into()));
    match families::akiyama_tanigawa(AtRule::Classical, InitialSeq::Reciprocal, 3, 5) {
        Ok(t) => {
            out.push(compare("at.classical_row", Params::n(1), &t.rows[1][..3].to_vec(), &vec![r(1, 2), r(1, 3), r(1, 4)]));
            out.push(compare("at.classical_row", Params::n(2), &t.rows[2][..3].to_vec(), &vec![r(1, 6), r(1, 6), r(3, 20)]));
        }
        Err(e) => out.push(error_report("at.classical_row", Params::default(), &e)),
    }
    let rows = bounds.max_n.max(6) + 1;
    let initial = generic_initial();
    for (rule, id) in [(AtRule::ZengA, "at.zeng_a_closed_form"), (AtRule::ZengB, "at.zeng_b_closed_form")] {
        match families::akiyama_tanigawa(rule, initial.clone(), rows.min(10), 10) {
            Ok(t) => {
                for (n, v) in t.leading_column().into_iter().enumerate() {
                    let sides = families::zeng_closed_form(rule, &initial, n).map(|c| (v.clone(), c));
                    out.push(compare_result(id, Params::n(n), sides));
                }
            }
            Err(e) => out.push(error_report(id, Params::default(), &e)),
        }
    }
    let b2 = families::carlitz_beta(2).eval(&one);
    out.push(compare_result("at.carlitz_beta_at_one", Params::n(2), b2.map(|b| (b, BigRational::new(1.into(), 6.into())))));
    if let Ok(t) = families::akiyama_tanigawa(AtRule::ZengA, InitialSeq::QReciprocal, 7, 7) {
        for n in 0..=6 {
            out.push(compare("at.carlitz_beta_vs_triangle", Params::n(n), &families::carlitz_beta(n), &t.rows[n][0]));
        }
    }
    // rule B from [m+1]^k yields (-1)^n p_{n,-k}; the unnormalized claim
    // a_{n,0} = p_{n,k} is reported alongside
    for k in -3i64..=3 {
        let n_rows = bounds.max_n + 1;
        match families::akiyama_tanigawa(AtRule::ZengB, InitialSeq::QIntPower(k), n_rows, n_rows) {
            Ok(t) => {
                for (n, v) in t.leading_column().into_iter().enumerate() {
                    let p = families::at_q_pb(n, -k);
                    let normalized = if n % 2 == 0 { p } else { -p };
                    out.push(compare("at.zeng_b_power_initial", Params::nk(n, k), &v, &normalized));
                    out.push(report("at.zeng_b_power_initial_literal", Params::nk(n, k), &v, &families::at_q_pb(n, k)));
                }
            }
            Err(e) => out.push(error_report("at.zeng_b_power_initial", Params::default(), &e)),
        }
    }
    out
}

fn cenkci_comb(bounds: Bounds) -> Vec<CheckReport> {
    grid(bounds)
        .map(|(n, k)| {
            let (l, r) = families::cenkci_comb_sides(n, k);
            report("cenkci_comb", Params::nk(n, k), &l, &r)
        })
        .collect()
}

fn conjecture_suite(bounds: Bounds) -> Vec<CheckReport> {
    (2..=bounds.max_n.clamp(2, DEFAULT_SYLVESTER_BOUND))
        .map(|n| sylvester_conjecture(n).unwrap_or_else(|e| error_report("conjecture.sylvester", Params::n(n), &e)))
        .collect()
}
