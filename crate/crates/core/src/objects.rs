//! Exhaustive generators for the weighted objects behind each family, with
//! their statistics. Nothing here calls a closed formula.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::QPoly;

/// Largest ground set accepted by [`gen_ordered_partitions`].
pub const MAX_ORDERED_PARTITION_N: usize = 9;
/// Largest `n` and `k` accepted by [`gen_alternating_pairs`].
pub const MAX_ALTERNATING_PAIR_SIDE: usize = 6;
/// Largest `rows * cols` for a full `2^(rows*cols)` matrix scan.
pub const MAX_SCAN_CELLS: usize = 24;
/// Largest `n + k` accepted by [`gen_vesztergombi`].
pub const MAX_VESZTERGOMBI_SIZE: usize = 9;

/// Generating polynomial from a histogram of exponents.
pub(crate) fn poly_from_counts(counts: &[u64]) -> QPoly {
    QPoly::new(0, counts.iter().map(|&c| BigInt::from(c)).collect())
}

fn bump(counts: &mut Vec<u64>, e: usize) {
    if counts.len() <= e {
        counts.resize(e + 1, 0);
    }
    counts[e] += 1;
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrderedPartition {
    blocks: Vec<Vec<u32>>,
}

impl OrderedPartition {
    /// Blocks are sorted internally; they must be nonempty and disjoint.
    pub fn new(blocks: Vec<Vec<u32>>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        let mut blocks = blocks;
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::InvalidConfig("empty block".into()));
            }
            b.sort_unstable();
            if !b.iter().all(|x| seen.insert(*x)) {
                return Err(Error::InvalidConfig("blocks overlap".into()));
            }
        }
        Ok(OrderedPartition { blocks })
    }

    /// Parses `137/26/45`-style single-digit notation.
    pub fn parse(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Ok(OrderedPartition { blocks: Vec::new() });
        }
        let blocks = s
            .split('/')
            .map(|b| {
                b.chars()
                    .map(|c| c.to_digit(10).ok_or_else(|| Error::Parse(format!("bad element {c:?} in {s:?}"))))
                    .collect::<Result<Vec<u32>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(blocks)
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn inv_star(&self) -> usize {
        inv_star(self)
    }
}

impl fmt::Display for OrderedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.blocks.iter().map(|b| b.iter().map(u32::to_string).collect::<String>()).join("/");
        f.write_str(&s)
    }
}

/// Pairs `(b, B_j)` with `b` in an earlier block `B_i` and `b > min B_j`.
pub fn inv_star(p: &OrderedPartition) -> usize {
    let mins: Vec<u32> = p.blocks.iter().map(|b| b[0]).collect();
    p.blocks
        .iter()
        .enumerate()
        .map(|(i, b)| mins[i + 1..].iter().map(|&m| b.iter().filter(|&&x| x > m).count()).sum::<usize>())
        .sum()
}

/// Unordered set partitions of a list, blocks ordered by their least
/// position in the list, via restricted growth strings.
pub struct SetPartitions {
    elems: Vec<u32>,
    rgs: Vec<usize>,
    done: bool,
}

impl SetPartitions {
    pub fn new(elems: Vec<u32>) -> Self {
        let rgs = vec![0; elems.len()];
        SetPartitions { elems, rgs, done: false }
    }

    fn advance(&mut self) {
        let n = self.rgs.len();
        // prefix maxima decide how far each digit may grow
        let mut pmax = vec![0usize; n];
        for i in 1..n {
            pmax[i] = pmax[i - 1].max(self.rgs[i - 1]);
        }
        for i in (1..n).rev() {
            if self.rgs[i] <= pmax[i] {
                self.rgs[i] += 1;
                for x in &mut self.rgs[i + 1..] {
                    *x = 0;
                }
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for SetPartitions {
    type Item = Vec<Vec<u32>>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let nblocks = self.rgs.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); nblocks];
        for (e, &b) in self.elems.iter().zip(&self.rgs) {
            blocks[b].push(*e);
        }
        if self.elems.is_empty() {
            self.done = true;
        } else {
            self.advance();
        }
        Some(blocks)
    }
}

/// All ordered set partitions of `{1..n}`.
pub fn gen_ordered_partitions(n: usize) -> Result<impl Iterator<Item = OrderedPartition>> {
    if n > MAX_ORDERED_PARTITION_N {
        return Err(Error::SizeTooLarge(format!("ordered partitions need n <= {MAX_ORDERED_PARTITION_N}, got {n}")));
    }
    let ground = (1..=n as u32).collect();
    Ok(SetPartitions::new(ground).flat_map(|blocks| {
        let len = blocks.len();
        blocks.into_iter().permutations(len).map(|blocks| OrderedPartition { blocks })
    }))
}

/// `sum q^{Inv*}` over ordered partitions of `{1..n}`.
pub fn fubini_oracle(n: usize) -> Result<QPoly> {
    let mut counts = Vec::new();
    for p in gen_ordered_partitions(n)? {
        bump(&mut counts, p.inv_star());
    }
    Ok(poly_from_counts(&counts))
}

/// A blue ordered partition of `{0bar, 1..n}` with `0bar` in its first block
/// and a red one of `{1..k, (k+1)bar}` with `(k+1)bar` in its last block, with
/// equally many blocks. `0bar` is stored as `0` and `(k+1)bar` as `k+1`,
/// which puts both in the right place for the inversion count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlternatingPair {
    pub blue: OrderedPartition,
    pub red: OrderedPartition,
}

impl AlternatingPair {
    pub fn weight(&self) -> usize {
        self.blue.inv_star() + self.red.inv_star()
    }
}

/// Ordered partitions of `elems`, grouped by block count, with the block
/// holding `pinned` forced to the front (`first = true`) or the back.
fn pinned_orderings(elems: Vec<u32>, pinned: u32, first: bool) -> Vec<Vec<OrderedPartition>> {
    let mut by_len: Vec<Vec<OrderedPartition>> = vec![Vec::new(); elems.len() + 1];
    for blocks in SetPartitions::new(elems) {
        let (fixed, rest): (Vec<_>, Vec<_>) = blocks.into_iter().partition(|b| b.contains(&pinned));
        let fixed = fixed.into_iter().next().expect("pinned element is in the ground set");
        let len = rest.len();
        for perm in rest.into_iter().permutations(len) {
            let blocks = if first {
                std::iter::once(fixed.clone()).chain(perm).collect()
            } else {
                perm.into_iter().chain(std::iter::once(fixed.clone())).collect()
            };
            by_len[len + 1].push(OrderedPartition { blocks });
        }
    }
    by_len
}

pub fn gen_alternating_pairs(n: usize, k: usize) -> Result<impl Iterator<Item = AlternatingPair>> {
    if n > MAX_ALTERNATING_PAIR_SIDE || k > MAX_ALTERNATING_PAIR_SIDE {
        return Err(Error::SizeTooLarge(format!(
            "alternating pairs need n, k <= {MAX_ALTERNATING_PAIR_SIDE}, got ({n}, {k})"
        )));
    }
    let blue = pinned_orderings((0..=n as u32).collect(), 0, true);
    let red = pinned_orderings((1..=k as u32 + 1).collect(), k as u32 + 1, false);
    let pairs = blue
        .into_iter()
        .zip(red)
        .flat_map(|(bs, rs)| {
            bs.into_iter()
                .cartesian_product(rs)
                .map(|(blue, red)| AlternatingPair { blue, red })
                .collect::<Vec<_>>()
        });
    Ok(pairs)
}

pub fn ordered_q_oracle(n: usize, k: usize) -> Result<QPoly> {
    let mut counts = Vec::new();
    for p in gen_alternating_pairs(n, k)? {
        bump(&mut counts, p.weight());
    }
    Ok(poly_from_counts(&counts))
}

/// Largest `n` accepted by the set-partition oracles.
pub const MAX_SET_PARTITION_N: usize = 10;

/// `sum q^{Inv*}` over partitions of `{1..n}` into `m` blocks listed by
/// increasing minima.
pub fn carlitz_oracle(n: usize, m: usize) -> Result<QPoly> {
    if n > MAX_SET_PARTITION_N {
        return Err(Error::SizeTooLarge(format!("set partitions need n <= {MAX_SET_PARTITION_N}")));
    }
    let mut counts = Vec::new();
    for blocks in SetPartitions::new((1..=n as u32).collect()).filter(|b| b.len() == m) {
        bump(&mut counts, OrderedPartition { blocks }.inv_star());
    }
    Ok(poly_from_counts(&counts))
}

/// `sum q^{sum of the block holding 0}` over partitions of `{0..n-1}` into
/// `m` blocks.
pub fn cigler_oracle(n: usize, m: usize) -> Result<QPoly> {
    if n > MAX_SET_PARTITION_N {
        return Err(Error::SizeTooLarge(format!("set partitions need n <= {MAX_SET_PARTITION_N}")));
    }
    let mut counts = Vec::new();
    for blocks in SetPartitions::new((0..n as u32).collect()).filter(|b| b.len() == m) {
        let w: u32 = blocks.first().map_or(0, |b| b.iter().sum());
        bump(&mut counts, w as usize);
    }
    Ok(poly_from_counts(&counts))
}

/// Dense 0/1 matrix with each row stored as a bitmask (bit `j` = column `j`).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<Vec<u8>>", try_from = "Vec<Vec<u8>>")]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    bits: Vec<u64>,
}

impl BinaryMatrix {
    pub const MAX_COLS: usize = 64;

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(cols <= Self::MAX_COLS, "at most {} columns", Self::MAX_COLS);
        BinaryMatrix { rows, cols, bits: vec![0; rows] }
    }

    pub fn ones(rows: usize, cols: usize) -> Self {
        let mut m = Self::zeros(rows, cols);
        let full = m.full_mask();
        m.bits.iter_mut().for_each(|r| *r = full);
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    m.bits[i] |= 1 << j;
                }
            }
        }
        m
    }

    pub fn from_rows<T: AsRef<[u8]>>(rows: &[T]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        if cols > Self::MAX_COLS {
            return Err(Error::SizeTooLarge(format!("{cols} columns, at most {}", Self::MAX_COLS)));
        }
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
            for (j, &v) in r.iter().enumerate() {
                match v {
                    0 => {}
                    1 => m.bits[i] |= 1 << j,
                    _ => return Err(Error::Parse(format!("entry {v} is not 0 or 1"))),
                }
            }
        }
        Ok(m)
    }

    /// Row `i` is bits `i*cols .. (i+1)*cols` of `code`.
    pub fn from_code(rows: usize, cols: usize, code: u64) -> Self {
        let mut m = Self::zeros(rows, cols);
        let full = m.full_mask();
        for (i, r) in m.bits.iter_mut().enumerate() {
            *r = (code >> (i * cols)) & full;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn full_mask(&self) -> u64 {
        if self.cols == 64 {
            u64::MAX
        } else {
            (1u64 << self.cols) - 1
        }
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i] >> j & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        if v {
            self.bits[i] |= 1 << j;
        } else {
            self.bits[i] &= !(1 << j);
        }
    }

    pub fn row_mask(&self, i: usize) -> u64 {
        self.bits[i]
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j) as u8).collect()).collect()
    }
}

impl From<BinaryMatrix> for Vec<Vec<u8>> {
    fn from(m: BinaryMatrix) -> Self {
        m.to_rows()
    }
}

impl TryFrom<Vec<Vec<u8>>> for BinaryMatrix {
    type Error = Error;
    fn try_from(rows: Vec<Vec<u8>>) -> Result<Self> {
        BinaryMatrix::from_rows(&rows)
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.to_rows().iter().map(|r| r.iter().map(|v| char::from(b'0' + v)).collect()).collect();
        write!(f, "BinaryMatrix[{}x{}: {}]", self.rows, self.cols, rows.join(" "))
    }
}

fn pairs_of_rows(m: &BinaryMatrix) -> impl Iterator<Item = (u64, u64)> + '_ {
    (0..m.rows).tuple_combinations().map(|(a, b)| (m.bits[a], m.bits[b]))
}

fn lowest(x: u64) -> u32 {
    x.trailing_zeros()
}

fn highest(x: u64) -> u32 {
    63 - x.leading_zeros()
}

/// No 2x2 minor equals `[[0,1],[1,0]]` or `[[1,0],[0,1]]`; equivalently the
/// rows are totally ordered by inclusion.
pub fn is_lonesum(m: &BinaryMatrix) -> bool {
    pairs_of_rows(m).all(|(a, b)| a & !b == 0 || b & !a == 0)
}

/// No minor `[[1,1],[1,0]]` or `[[1,1],[1,1]]`: no `a(i1,j1) = a(i1,j2) =
/// a(i2,j1) = 1` with `i1 < i2`, `j1 < j2`.
pub fn is_gamma_free(m: &BinaryMatrix) -> bool {
    pairs_of_rows(m).all(|(top, bottom)| {
        let shared = top & bottom;
        shared == 0 || lowest(shared) >= highest(top)
    })
}

/// Every column has a 1 and no minor `[[0,1],[1,0]]` or `[[1,1],[1,0]]`.
pub fn is_perm_matrix(m: &BinaryMatrix) -> bool {
    let cover = m.bits.iter().fold(0, |acc, r| acc | r);
    cover == m.full_mask()
        && pairs_of_rows(m).all(|(top, bottom)| {
            let only_top = top & !bottom;
            only_top == 0 || bottom == 0 || highest(only_top) < lowest(bottom)
        })
}

/// Sum of the 1-based indices of all-zero rows and all-zero columns.
pub fn nu_weight(m: &BinaryMatrix) -> usize {
    let zero_rows: usize = (0..m.rows).filter(|&i| m.bits[i] == 0).map(|i| i + 1).sum();
    let cover = m.bits.iter().fold(0, |acc, r| acc | r);
    let zero_cols: usize = (0..m.cols).filter(|&j| cover >> j & 1 == 0).map(|j| j + 1).sum();
    zero_rows + zero_cols
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatrixClass {
    Lonesum,
    GammaFree,
    PermMatrix,
}

impl MatrixClass {
    pub fn contains(self, m: &BinaryMatrix) -> bool {
        match self {
            MatrixClass::Lonesum => is_lonesum(m),
            MatrixClass::GammaFree => is_gamma_free(m),
            MatrixClass::PermMatrix => is_perm_matrix(m),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatrixStatistic {
    /// [`nu_weight`]
    NuSum,
    /// Number of ones minus number of columns.
    OnesMinusCols,
    /// Constant weight: the class polynomial is the plain count.
    None,
}

impl MatrixStatistic {
    pub fn eval(self, m: &BinaryMatrix) -> usize {
        match self {
            MatrixStatistic::NuSum => nu_weight(m),
            MatrixStatistic::OnesMinusCols => m.count_ones().saturating_sub(m.cols()),
            MatrixStatistic::None => 0,
        }
    }
}

/// All `n x k` matrices of the class, by scanning every 0/1 filling.
pub fn gen_matrix_class(class: MatrixClass, n: usize, k: usize) -> Result<impl Iterator<Item = BinaryMatrix>> {
    if n * k > MAX_SCAN_CELLS {
        return Err(Error::SizeTooLarge(format!("{n}x{k} scan exceeds {MAX_SCAN_CELLS} cells")));
    }
    Ok((0u64..1 << (n * k)).map(move |code| BinaryMatrix::from_code(n, k, code)).filter(move |m| class.contains(m)))
}

pub fn class_poly(class: MatrixClass, n: usize, k: usize, statistic: MatrixStatistic) -> Result<QPoly> {
    let mut counts = Vec::new();
    for m in gen_matrix_class(class, n, k)? {
        bump(&mut counts, statistic.eval(&m));
    }
    Ok(poly_from_counts(&counts))
}

pub fn class_count(class: MatrixClass, n: usize, k: usize) -> Result<u64> {
    Ok(gen_matrix_class(class, n, k)?.count() as u64)
}

/// Largest `rows * cols` for [`perm_matrix_poly`].
pub const MAX_PERM_MATRIX_CELLS: usize = 36;
/// Largest column count for [`perm_matrix_poly`]; each row tries `2^cols` masks.
pub const MAX_PERM_MATRIX_COLS: usize = 10;

/// `sum q^{ones - cols}` over `n x k` perm-matrices, built row by row and
/// pruned on the pairwise row condition; reaches sizes the full scan cannot.
pub fn perm_matrix_poly(n: usize, k: usize) -> Result<QPoly> {
    if n * k > MAX_PERM_MATRIX_CELLS || k > MAX_PERM_MATRIX_COLS {
        return Err(Error::SizeTooLarge(format!(
            "{n}x{k} perm-matrix search needs n*k <= {MAX_PERM_MATRIX_CELLS} and k <= {MAX_PERM_MATRIX_COLS}"
        )));
    }
    fn compatible(top: u64, bottom: u64) -> bool {
        let only_top = top & !bottom;
        only_top == 0 || bottom == 0 || highest(only_top) < lowest(bottom)
    }
    fn go(rows: &mut Vec<u64>, n: usize, k: usize, full: u64, counts: &mut Vec<u64>) {
        if rows.len() == n {
            let cover = rows.iter().fold(0, |a, r| a | r);
            if cover == full {
                let ones: u32 = rows.iter().map(|r| r.count_ones()).sum();
                bump(counts, ones as usize - k);
            }
            return;
        }
        for r in 0..=full {
            if rows.iter().all(|&t| compatible(t, r)) {
                rows.push(r);
                go(rows, n, k, full, counts);
                rows.pop();
            }
        }
    }
    let full = (1u64 << k) - 1;
    let mut counts = Vec::new();
    go(&mut Vec::with_capacity(n), n, k, full, &mut counts);
    Ok(poly_from_counts(&counts))
}

/// `|G(n, k+1)| = |G(n, k)| + sum over nonempty row sets R of |G(n - |R| + 1, k)|`
/// for Gamma-free counts `G`, sorting matrices by the rows holding a 1 in the
/// first column.
pub fn gamma_free_first_column_decomposition_check(n: usize, k: usize) -> Result<bool> {
    if n * (k + 1) > MAX_SCAN_CELLS {
        return Err(Error::SizeTooLarge(format!("{n}x{} scan exceeds {MAX_SCAN_CELLS} cells", k + 1)));
    }
    let lhs = class_count(MatrixClass::GammaFree, n, k + 1)?;
    let mut rhs = class_count(MatrixClass::GammaFree, n, k)?;
    for r in 1..=n {
        let ways = crate::qkernels::binomial(n, r);
        let ways = u64::try_from(ways).expect("small binomial");
        rhs += ways * class_count(MatrixClass::GammaFree, n - r + 1, k)?;
    }
    Ok(lhs == rhs)
}

/// Permutation in one-line notation with values `1..=n+k`.
pub type Permutation = Vec<usize>;

/// Inversions: pairs `i < j` with `pi_i > pi_j`.
pub fn inversions(p: &[usize]) -> usize {
    p.iter().tuple_combinations().filter(|(a, b)| a > b).count()
}

pub fn is_vesztergombi(p: &[usize], n: usize, k: usize) -> bool {
    p.iter().enumerate().all(|(i, &v)| {
        let d = v as i64 - (i as i64 + 1);
        -(k as i64) <= d && d <= n as i64
    })
}

/// Permutations of `[n+k]` with `-k <= pi(i) - i <= n`, in lexicographic order.
pub fn gen_vesztergombi(n: usize, k: usize) -> Result<impl Iterator<Item = Permutation>> {
    let size = n + k;
    if size > MAX_VESZTERGOMBI_SIZE {
        return Err(Error::SizeTooLarge(format!("Vesztergombi permutations need n + k <= {MAX_VESZTERGOMBI_SIZE}")));
    }
    fn extend(prefix: &mut Permutation, used: &mut [bool], n: usize, k: usize, out: &mut Vec<Permutation>) {
        let size = used.len();
        let pos = prefix.len() + 1;
        if pos > size {
            out.push(prefix.clone());
            return;
        }
        let lo = pos.saturating_sub(k).max(1);
        let hi = (pos + n).min(size);
        for v in lo..=hi {
            if !used[v - 1] {
                used[v - 1] = true;
                prefix.push(v);
                extend(prefix, used, n, k, out);
                prefix.pop();
                used[v - 1] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(size), &mut vec![false; size], n, k, &mut out);
    Ok(out.into_iter())
}

pub fn vesztergombi_oracle(n: usize, k: usize) -> Result<QPoly> {
    let mut counts = Vec::new();
    for p in gen_vesztergombi(n, k)? {
        bump(&mut counts, inversions(&p));
    }
    Ok(poly_from_counts(&counts))
}
