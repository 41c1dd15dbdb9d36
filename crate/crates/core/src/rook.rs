//! Boards, rook placements and the Garsia-Remmel q-rook numbers.
//!
//! The inversion statistic counts positions of the whole rectangular array
//! that have no rook weakly to their right in the same row and no rook
//! strictly below in the same column. The board mask only restricts where
//! rooks may stand; counting masked-out positions too is what makes the
//! reflection and H_n laws hold on arbitrary masks.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::QPoly;
use crate::objects::{poly_from_counts, BinaryMatrix};
use crate::qkernels::{q_factorial, stirling_table, StirlingVariant};

/// Default cap on `rows * cols` for [`q_rook_number`].
pub const DEFAULT_MAX_AREA: usize = 30;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Board {
    cells: BinaryMatrix,
}

impl Board {
    pub fn new(cells: BinaryMatrix) -> Self {
        Board { cells }
    }

    pub fn from_rows<T: AsRef<[u8]>>(rows: &[T]) -> Result<Self> {
        Ok(Board { cells: BinaryMatrix::from_rows(rows)? })
    }

    /// All-ones `rows x cols`.
    pub fn j(rows: usize, cols: usize) -> Self {
        Board { cells: BinaryMatrix::ones(rows, cols) }
    }

    /// Ones on and above the secondary diagonal: `i <= n - j + 1` (1-based).
    pub fn h(n: usize) -> Self {
        Board { cells: BinaryMatrix::from_fn(n, n, |i, j| i + j < n) }
    }

    /// Lower triangular `T_n`: `i >= j`.
    pub fn t_lower(n: usize) -> Self {
        Board { cells: BinaryMatrix::from_fn(n, n, |i, j| i >= j) }
    }

    /// Upper triangular `T^k`: `i <= j`.
    pub fn t_upper(k: usize) -> Self {
        Board { cells: BinaryMatrix::from_fn(k, k, |i, j| i <= j) }
    }

    pub fn cells(&self) -> &BinaryMatrix {
        &self.cells
    }

    pub fn rows(&self) -> usize {
        self.cells.rows()
    }

    pub fn cols(&self) -> usize {
        self.cells.cols()
    }

    pub fn area(&self) -> usize {
        self.rows() * self.cols()
    }

    pub fn has(&self, i: usize, j: usize) -> bool {
        self.cells.get(i, j)
    }

    pub fn reflect_updown(&self) -> Self {
        let r = self.rows();
        Board { cells: BinaryMatrix::from_fn(r, self.cols(), |i, j| self.has(r - 1 - i, j)) }
    }

    pub fn rotate_180(&self) -> Self {
        let (r, c) = (self.rows(), self.cols());
        Board { cells: BinaryMatrix::from_fn(r, c, |i, j| self.has(r - 1 - i, c - 1 - j)) }
    }

    /// `[[self, J], [J, lower]]` with all-ones glue blocks.
    pub fn block_over(&self, lower: &Board) -> Result<Self> {
        if self.rows() != self.cols() || lower.rows() != lower.cols() {
            return Err(Error::DimensionMismatch(format!(
                "block_over needs square blocks, got {}x{} over {}x{}",
                self.rows(),
                self.cols(),
                lower.rows(),
                lower.cols()
            )));
        }
        let (n, k) = (self.rows(), lower.rows());
        let size = n + k;
        if size > BinaryMatrix::MAX_COLS {
            return Err(Error::SizeTooLarge(format!("{size} columns")));
        }
        let cells = BinaryMatrix::from_fn(size, size, |i, j| match (i < n, j < n) {
            (true, true) => self.has(i, j),
            (false, false) => lower.has(i - n, j - n),
            _ => true,
        });
        Ok(Board { cells })
    }
}

/// `(n+k) x (n+k)` band with `v_ij = 1` iff `-k <= i - j <= n`.
pub fn build_v_matrix(n: usize, k: usize) -> Board {
    let size = n + k;
    Board {
        cells: BinaryMatrix::from_fn(size, size, |i, j| {
            let d = i as i64 - j as i64;
            -(k as i64) <= d && d <= n as i64
        }),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RookConfig {
    board: Board,
    rooks: Vec<(usize, usize)>,
}

impl RookConfig {
    /// Rooks are 0-based `(row, col)` on present cells, pairwise
    /// non-attacking.
    pub fn new(board: Board, mut rooks: Vec<(usize, usize)>) -> Result<Self> {
        rooks.sort_unstable();
        for &(i, j) in &rooks {
            if i >= board.rows() || j >= board.cols() || !board.has(i, j) {
                return Err(Error::InvalidConfig(format!("rook at ({i}, {j}) is not on the board")));
            }
        }
        if !rooks.iter().map(|r| r.0).all_unique() || !rooks.iter().map(|r| r.1).all_unique() {
            return Err(Error::InvalidConfig("two rooks share a row or column".into()));
        }
        Ok(RookConfig { board, rooks })
    }

    /// Full placement from a permutation in 1-based one-line notation.
    pub fn from_permutation(board: Board, perm: &[usize]) -> Result<Self> {
        let rooks = perm.iter().enumerate().map(|(i, &v)| (i, v.wrapping_sub(1))).collect();
        Self::new(board, rooks)
    }

    pub fn board(&self) -> &Board {
        &self.board
    }

    pub fn rooks(&self) -> &[(usize, usize)] {
        &self.rooks
    }
}

fn inv_of_rows(row_rook: &[Option<usize>], cols: usize) -> usize {
    let full = if cols == 64 { u64::MAX } else { (1u64 << cols) - 1 };
    let mut below = 0u64;
    let mut count = 0;
    for r in row_rook.iter().rev() {
        let open = match r {
            Some(c) => full & !((2u64 << c).wrapping_sub(1)),
            None => full,
        };
        count += (open & !below).count_ones() as usize;
        if let Some(c) = r {
            below |= 1 << c;
        }
    }
    count
}

pub fn gr_inv(c: &RookConfig) -> usize {
    let mut row_rook = vec![None; c.board.rows()];
    for &(i, j) in &c.rooks {
        row_rook[i] = Some(j);
    }
    inv_of_rows(&row_rook, c.board.cols())
}

/// Depth-first over rows; `visit` sees each `k`-rook placement as a
/// per-row column choice.
fn each_placement(b: &Board, k: usize, mut visit: impl FnMut(&[Option<usize>])) {
    fn go(
        b: &Board,
        row: usize,
        left: usize,
        used: u64,
        acc: &mut Vec<Option<usize>>,
        visit: &mut dyn FnMut(&[Option<usize>]),
    ) {
        if row == b.rows() {
            if left == 0 {
                visit(acc);
            }
            return;
        }
        if b.rows() - row > left {
            acc.push(None);
            go(b, row + 1, left, used, acc, visit);
            acc.pop();
        }
        if left > 0 {
            let mut avail = b.cells().row_mask(row) & !used;
            while avail != 0 {
                let c = avail.trailing_zeros() as usize;
                avail &= avail - 1;
                acc.push(Some(c));
                go(b, row + 1, left - 1, used | 1 << c, acc, visit);
                acc.pop();
            }
        }
    }
    if k <= b.rows().min(b.cols()) {
        go(b, 0, k, 0, &mut Vec::with_capacity(b.rows()), &mut visit);
    }
}

/// Every `k`-rook placement on the board.
pub fn placements(b: &Board, k: usize) -> Vec<RookConfig> {
    let mut out = Vec::new();
    each_placement(b, k, |rows| {
        let rooks = rows.iter().enumerate().filter_map(|(i, c)| c.map(|c| (i, c))).collect();
        out.push(RookConfig { board: b.clone(), rooks });
    });
    out
}

pub fn q_rook_number(b: &Board, k: usize) -> Result<QPoly> {
    q_rook_number_bounded(b, k, DEFAULT_MAX_AREA)
}

pub fn q_rook_number_bounded(b: &Board, k: usize, max_area: usize) -> Result<QPoly> {
    if b.area() > max_area {
        return Err(Error::SizeTooLarge(format!("board area {} exceeds {max_area}", b.area())));
    }
    let mut counts = vec![0u64; b.area() + 1];
    each_placement(b, k, |rows| counts[inv_of_rows(rows, b.cols())] += 1);
    Ok(poly_from_counts(&counts))
}

/// Plain number of `k`-rook placements, by choosing `k` cells and
/// discarding attacking sets.
pub fn rook_count(b: &Board, k: usize) -> u64 {
    let cells: Vec<(usize, usize)> =
        (0..b.rows()).cartesian_product(0..b.cols()).filter(|&(i, j)| b.has(i, j)).collect();
    cells
        .into_iter()
        .combinations(k)
        .filter(|set| set.iter().map(|c| c.0).all_unique() && set.iter().map(|c| c.1).all_unique())
        .count() as u64
}

fn c2(n: usize) -> i64 {
    (n * n.saturating_sub(1) / 2) as i64
}

/// `(R_n^{J_{n,n}}, [n]!)`.
pub fn j_law_sides(n: usize) -> Result<(QPoly, QPoly)> {
    Ok((q_rook_number_bounded(&Board::j(n, n), n, usize::MAX)?, q_factorial(n)))
}

/// `(R_k^{H_n}, q^{C(n,2)} S_{n+1,n+1-k})`.
pub fn h_law_sides(n: usize, k: usize) -> Result<(QPoly, QPoly)> {
    let lhs = q_rook_number_bounded(&Board::h(n), k, usize::MAX)?;
    let s = stirling_table(StirlingVariant::Shifted, n + 1).get(n + 1, (n + 1).saturating_sub(k));
    let rhs = if k > n { QPoly::zero() } else { s.shift(c2(n)) };
    Ok((lhs, rhs))
}

/// `(R_n^{A'}, q^{C(n,2)} R_n^A(1/q))` for a square board `A`.
pub fn reflection_law_sides(a: &Board) -> Result<(QPoly, QPoly)> {
    if a.rows() != a.cols() {
        return Err(Error::NonSquare { rows: a.rows(), cols: a.cols() });
    }
    let n = a.rows();
    let lhs = q_rook_number_bounded(&a.reflect_updown(), n, usize::MAX)?;
    let rhs = q_rook_number_bounded(a, n, usize::MAX)?.substitute_inverse().shift(c2(n));
    Ok((lhs, rhs))
}

/// `(R_{n+k}^{B/A}, sum_i R_{k-i}^A R_{n-i}^{B*} [i]!^2 q^{-i^2})` with `B`
/// `n x n`, `A` `k x k` and `B*` the 180-degree rotation of `B`.
pub fn block_law_sides(b: &Board, a: &Board) -> Result<(QPoly, QPoly)> {
    let composite = b.block_over(a)?;
    let (n, k) = (b.rows(), a.rows());
    let lhs = q_rook_number_bounded(&composite, n + k, usize::MAX)?;
    let b_star = b.rotate_180();
    let mut rhs = QPoly::zero();
    for i in 0..=n.min(k) {
        let f = q_factorial(i);
        let term = q_rook_number_bounded(a, k - i, usize::MAX)? * q_rook_number_bounded(&b_star, n - i, usize::MAX)?;
        rhs = rhs + (term * &f * f).shift(-((i * i) as i64));
    }
    Ok((lhs, rhs))
}

/// `(R_{n+k}^{V_{n+k}}, vesztergombi_q_pb(n, k))`.
pub fn v_law_sides(n: usize, k: usize) -> Result<(QPoly, QPoly)> {
    let lhs = q_rook_number_bounded(&build_v_matrix(n, k), n + k, usize::MAX)?;
    Ok((lhs, crate::families::vesztergombi_q_pb(n, k)?))
}

/// Every square 0/1 board of side `n`.
pub fn all_square_boards(n: usize) -> impl Iterator<Item = Board> {
    (0u64..1 << (n * n)).map(move |code| Board::new(BinaryMatrix::from_code(n, n, code)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_i64s(0, c)
    }

    #[test]
    fn constructors() {
        assert_eq!(Board::h(3).cells().to_rows(), vec![vec![1, 1, 1], vec![1, 1, 0], vec![1, 0, 0]]);
        assert_eq!(Board::t_lower(3).reflect_updown(), Board::h(3));
        assert_eq!(Board::h(3).reflect_updown(), Board::t_lower(3));
        let v5 = build_v_matrix(3, 2);
        assert_eq!(
            v5.cells().to_rows(),
            vec![
                vec![1, 1, 1, 0, 0],
                vec![1, 1, 1, 1, 0],
                vec![1, 1, 1, 1, 1],
                vec![1, 1, 1, 1, 1],
                vec![0, 1, 1, 1, 1],
            ]
        );
    }

    #[test]
    fn v_is_reflected_block_of_staircases() {
        for n in 0..4 {
            for k in 0..4 {
                let b = Board::h(k).rotate_180().block_over(&Board::h(n)).unwrap();
                assert_eq!(b.reflect_updown(), build_v_matrix(n, k), "({n},{k})");
            }
        }
    }

    #[test]
    fn rotation_is_an_involution() {
        let b = Board::from_rows(&[[1, 0, 1], [0, 0, 1]]).unwrap();
        assert_eq!(b.rotate_180().rotate_180(), b);
        assert!(Board::j(2, 3).block_over(&Board::j(1, 1)).is_err());
    }

    #[test]
    fn v5_sample_placement() {
        let c = RookConfig::from_permutation(build_v_matrix(3, 2), &[3, 1, 5, 2, 4]).unwrap();
        assert_eq!(gr_inv(&c), 4);
        let empty = RookConfig::new(Board::j(0, 0), vec![]).unwrap();
        assert_eq!(gr_inv(&empty), 0);
        let id = RookConfig::from_permutation(Board::j(4, 4), &[1, 2, 3, 4]).unwrap();
        assert_eq!(gr_inv(&id), 0);
        assert!(RookConfig::from_permutation(build_v_matrix(3, 2), &[4, 1, 5, 2, 3]).is_err());
        assert!(RookConfig::new(Board::j(2, 2), vec![(0, 0), (1, 0)]).is_err());
    }

    #[test]
    fn rook_numbers() {
        assert_eq!(q_rook_number(&Board::j(3, 3), 3).unwrap(), p(&[1, 2, 2, 1]));
        let b = Board::from_rows(&[[1, 0], [1, 1]]).unwrap();
        assert_eq!(q_rook_number(&b, 0).unwrap(), QPoly::monomial(1, 4));
        assert_eq!(q_rook_number(&Board::j(2, 2), 3).unwrap(), QPoly::zero());
        assert!(matches!(q_rook_number(&Board::j(6, 6), 2), Err(Error::SizeTooLarge(_))));
        for k in 0..=3 {
            let b = Board::from_rows(&[[1, 1, 0], [0, 1, 1], [1, 0, 1]]).unwrap();
            assert_eq!(q_rook_number(&b, k).unwrap().at_one(), rook_count(&b, k).into());
            assert_eq!(placements(&b, k).len() as u64, rook_count(&b, k));
        }
    }

    #[test]
    fn laws_small() {
        for n in 0..=4 {
            let (l, r) = j_law_sides(n).unwrap();
            assert_eq!(l, r);
            for k in 0..=n {
                let (l, r) = h_law_sides(n, k).unwrap();
                assert_eq!(l, r, "H_{n} k={k}");
            }
        }
        for a in all_square_boards(2) {
            let (l, r) = reflection_law_sides(&a).unwrap();
            assert_eq!(l, r, "{a:?}");
            for b in all_square_boards(2) {
                let (l, r) = block_law_sides(&b, &a).unwrap();
                assert_eq!(l, r, "{b:?} / {a:?}");
            }
        }
        let (l, r) = v_law_sides(3, 2).unwrap();
        assert_eq!(l, r);
    }
}
