//! Latin squares as permutation codes: transversal search, row-code bounds, and
//! the confirmed-bachelor extension that reaches full remoteness for odd `n`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use thiserror::Error;

use crate::metric::{permutation_remoteness, MetricError};
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatinError {
    #[error("order must be between 1 and 32, got {0}")]
    InvalidOrder(usize),
    #[error("row {row} has length {len}, expected {n}")]
    Ragged { row: usize, len: usize, n: usize },
    #[error("symbol {symbol} out of range at ({row}, {col})")]
    SymbolOutOfRange { row: usize, col: usize, symbol: usize },
    #[error("symbol {symbol} repeated in {line} {index}")]
    Repeated { symbol: usize, line: &'static str, index: usize },
    #[error("cannot parse `{0}` as a symbol")]
    Parse(String),
    #[error("k = {k} must lie in 1..={n}")]
    RowCount { k: usize, n: usize },
    #[error("confirmed bachelor squares are searched for odd orders >= 3, got {0}")]
    BachelorOrder(usize),
    #[error("no confirmed bachelor square found within {attempts} attempts (not a proof of nonexistence)")]
    BudgetExhausted { attempts: u64 },
    #[error(transparent)]
    Metric(#[from] MetricError),
}

const MAX_ORDER: usize = 32;

/// An `n x n` array over `{0, .., n-1}` with every symbol once per row and column.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LatinSquare {
    n: usize,
    cells: Vec<u8>,
}

impl LatinSquare {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<LatinSquare, LatinError> {
        let n = rows.len();
        if n == 0 || n > MAX_ORDER {
            return Err(LatinError::InvalidOrder(n));
        }
        let mut cells = Vec::with_capacity(n * n);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(LatinError::Ragged { row: r, len: row.len(), n });
            }
            for (c, &s) in row.iter().enumerate() {
                if s >= n {
                    return Err(LatinError::SymbolOutOfRange { row: r, col: c, symbol: s });
                }
                cells.push(s as u8);
            }
        }
        let sq = LatinSquare { n, cells };
        sq.validate()?;
        Ok(sq)
    }

    fn validate(&self) -> Result<(), LatinError> {
        let n = self.n;
        for i in 0..n {
            let mut row_seen = 0u64;
            let mut col_seen = 0u64;
            for j in 0..n {
                let s = self.get(i, j);
                if row_seen & (1 << s) != 0 {
                    return Err(LatinError::Repeated { symbol: s, line: "row", index: i });
                }
                row_seen |= 1 << s;
                let s = self.get(j, i);
                if col_seen & (1 << s) != 0 {
                    return Err(LatinError::Repeated { symbol: s, line: "column", index: i });
                }
                col_seen |= 1 << s;
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> usize {
        self.cells[row * self.n + col] as usize
    }

    /// Row `i` read as the image sequence of a permutation.
    pub fn row(&self, i: usize) -> Permutation {
        Permutation::from_images((0..self.n).map(|j| self.get(i, j))).expect("rows are permutations")
    }

    pub fn rows(&self) -> Vec<Permutation> {
        (0..self.n).map(|i| self.row(i)).collect()
    }

    pub fn is_cyclic(&self) -> bool {
        *self == cyclic_latin(self.n)
    }

    /// `L(i, j) - i - j mod n`; identically zero exactly on the cyclic square.
    pub fn delta(&self, i: usize, j: usize) -> usize {
        (self.get(i, j) + 2 * self.n - i - j) % self.n
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.n {
            self.cells.swap(a * self.n + j, b * self.n + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.n {
            self.cells.swap(i * self.n + a, i * self.n + b);
        }
    }

    fn rename(&mut self, map: &[usize]) {
        for s in self.cells.iter_mut() {
            *s = map[*s as usize] as u8;
        }
    }
}

impl fmt::Display for LatinSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            for j in 0..self.n {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LatinSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LatinSquare(\n{self})")
    }
}

impl FromStr for LatinSquare {
    type Err = LatinError;

    /// `n` lines of comma-separated symbols; blank lines are ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut rows = Vec::new();
        for line in s.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let row = line
                .split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| LatinError::Parse(String::from(t.trim()))))
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(row);
        }
        LatinSquare::from_rows(rows)
    }
}

/// `L(i, j) = (i + j) mod n`: the rows are the powers of the standard cycle.
pub fn cyclic_latin(n: usize) -> LatinSquare {
    assert!((1..=MAX_ORDER).contains(&n), "invalid order {n}");
    LatinSquare {
        n,
        cells: (0..n * n).map(|k| ((k / n + k % n) % n) as u8).collect(),
    }
}

/// One cell per row and per column with all symbols distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transversal {
    /// `row_of_col[c]` is the row of the chosen cell in column `c`.
    pub row_of_col: Vec<usize>,
}

impl Transversal {
    pub fn positions(&self) -> Vec<(usize, usize)> {
        let mut cells: Vec<(usize, usize)> = self.row_of_col.iter().enumerate().map(|(c, &r)| (r, c)).collect();
        cells.sort_unstable();
        cells
    }

    /// The permutation `c -> L(row_of_col[c], c)`, at distance `n - 1` from every row.
    pub fn as_permutation(&self, square: &LatinSquare) -> Permutation {
        Permutation::from_images(self.row_of_col.iter().enumerate().map(|(c, &r)| square.get(r, c)))
            .expect("transversal symbols are distinct")
    }
}

/// Column-by-column backtracking over transversals; `visit` returns false to stop.
fn for_each_transversal(square: &LatinSquare, forced: Option<(usize, usize)>, visit: &mut dyn FnMut(&[usize]) -> bool) {
    fn go(
        sq: &LatinSquare,
        col: usize,
        rows_used: u64,
        syms_used: u64,
        forced: Option<(usize, usize)>,
        pick: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let n = sq.order();
        if col == n {
            return visit(pick);
        }
        for r in 0..n {
            if let Some((fr, fc)) = forced {
                if (fc == col) != (fr == r) {
                    continue;
                }
            }
            let s = sq.get(r, col);
            if rows_used & (1 << r) != 0 || syms_used & (1 << s) != 0 {
                continue;
            }
            pick.push(r);
            let go_on = go(sq, col + 1, rows_used | 1 << r, syms_used | 1 << s, forced, pick, visit);
            pick.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
    let mut pick = Vec::with_capacity(square.order());
    go(square, 0, 0, 0, forced, &mut pick, visit);
}

/// First transversal in column-major backtracking order, or `None` if there is none.
pub fn find_transversal(square: &LatinSquare) -> Option<Transversal> {
    transversal_through(square, None)
}

/// A transversal through `cell = (row, col)` (any transversal when `None`).
pub fn transversal_through(square: &LatinSquare, cell: Option<(usize, usize)>) -> Option<Transversal> {
    let mut found = None;
    for_each_transversal(square, cell, &mut |pick| {
        found = Some(Transversal {
            row_of_col: pick.to_vec(),
        });
        false
    });
    found
}

/// All transversals of the square.
pub fn all_transversals(square: &LatinSquare) -> Vec<Transversal> {
    let mut out = Vec::new();
    for_each_transversal(square, None, &mut |pick| {
        out.push(Transversal {
            row_of_col: pick.to_vec(),
        });
        true
    });
    out
}

/// Cells through which no transversal passes, in row-major order.
pub fn uncovered_cells(square: &LatinSquare) -> Vec<(usize, usize)> {
    let n = square.order();
    let mut covered = vec![false; n * n];
    for_each_transversal(square, None, &mut |pick| {
        for (c, &r) in pick.iter().enumerate() {
            covered[r * n + c] = true;
        }
        true
    });
    (0..n * n).filter(|&k| !covered[k]).map(|k| (k / n, k % n)).collect()
}

/// Lower bound on the remoteness of the first `k` rows: `n - floor(n/k)`,
/// improved to `n - n/k + 1` for the cyclic square when `k` is even and divides `n`.
pub fn first_k_rows_bound(square: &LatinSquare, k: usize) -> Result<usize, LatinError> {
    let n = square.order();
    if k == 0 || k > n {
        return Err(LatinError::RowCount { k, n });
    }
    if k % 2 == 0 && n % k == 0 && square.is_cyclic() {
        Ok(n - n / k + 1)
    } else {
        Ok(n - n / k)
    }
}

/// The bound together with the exact remoteness of the first `k` rows (brute force over `S_n`).
pub fn first_k_rows_remoteness(square: &LatinSquare, k: usize) -> Result<(usize, usize), LatinError> {
    let bound = first_k_rows_bound(square, k)?;
    let rows: Vec<Permutation> = (0..k).map(|i| square.row(i)).collect();
    let (exact, _) = permutation_remoteness(&rows)?;
    Ok((bound, exact))
}

/// A Latin square together with a cell through which no transversal passes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BachelorSquare {
    pub square: LatinSquare,
    pub cell: (usize, usize),
}

/// Calls `visit` on every Latin square of order `n` whose first row is the identity.
fn for_each_normalized_square(n: usize, visit: &mut dyn FnMut(&LatinSquare) -> bool) {
    fn fill(
        n: usize,
        k: usize,
        cells: &mut Vec<u8>,
        row_used: &mut [u64],
        col_used: &mut [u64],
        visit: &mut dyn FnMut(&LatinSquare) -> bool,
    ) -> bool {
        if k == n * n {
            return visit(&LatinSquare { n, cells: cells.clone() });
        }
        let (r, c) = (k / n, k % n);
        for s in 0..n {
            if row_used[r] & (1 << s) != 0 || col_used[c] & (1 << s) != 0 {
                continue;
            }
            cells[k] = s as u8;
            row_used[r] |= 1 << s;
            col_used[c] |= 1 << s;
            let go_on = fill(n, k + 1, cells, row_used, col_used, visit);
            row_used[r] &= !(1 << s);
            col_used[c] &= !(1 << s);
            if !go_on {
                return false;
            }
        }
        true
    }
    let mut cells = vec![0u8; n * n];
    let mut row_used = vec![0u64; n];
    let mut col_used = vec![0u64; n];
    for (j, cell) in cells.iter_mut().enumerate().take(n) {
        *cell = j as u8;
        row_used[0] |= 1 << j;
        col_used[j] |= 1 << j;
    }
    fill(n, n, &mut cells, &mut row_used, &mut col_used, visit);
}

/// Orders up to this size are searched exhaustively (first row fixed to the identity).
pub const EXHAUSTIVE_BACHELOR_ORDER: usize = 5;

/// Searches for a confirmed bachelor square of odd order `n`.
///
/// Orders up to 5 are enumerated exhaustively in a fixed order. Larger orders use
/// randomized row completion with restarts: `workers` independent streams seeded
/// from `seed`, each trying up to `attempts_per_worker` squares. The result is the
/// first hit of the lowest-numbered successful worker, so it depends only on the
/// arguments. Failure never certifies nonexistence.
pub fn find_bachelor_square(
    n: usize,
    seed: u64,
    workers: usize,
    attempts_per_worker: u64,
) -> Result<BachelorSquare, LatinError> {
    if n < 3 || n % 2 == 0 || n > 15 {
        return Err(LatinError::BachelorOrder(n));
    }
    if n <= EXHAUSTIVE_BACHELOR_ORDER {
        let mut found = None;
        let mut tried = 0u64;
        for_each_normalized_square(n, &mut |sq| {
            tried += 1;
            if let Some(&cell) = uncovered_cells(sq).first() {
                found = Some(BachelorSquare { square: sq.clone(), cell });
                return false;
            }
            true
        });
        return found.ok_or(LatinError::BudgetExhausted { attempts: tried });
    }
    let workers = workers.max(1);
    let run = |w: usize| random_bachelor_search(n, seed.wrapping_add(w as u64), attempts_per_worker);
    #[cfg(feature = "parallel")]
    let results: Vec<Option<BachelorSquare>> = {
        use rayon::prelude::*;
        (0..workers).into_par_iter().map(run).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let results: Vec<Option<BachelorSquare>> = (0..workers).map(run).collect();
    results
        .into_iter()
        .flatten()
        .next()
        .ok_or(LatinError::BudgetExhausted {
            attempts: attempts_per_worker * workers as u64,
        })
}

fn random_bachelor_search(n: usize, seed: u64, attempts: u64) -> Option<BachelorSquare> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..attempts {
        let sq = random_latin_square(n, &mut rng);
        if let Some(&cell) = uncovered_cells(&sq).first() {
            return Some(BachelorSquare { square: sq, cell });
        }
    }
    None
}

fn shuffle(v: &mut [usize], rng: &mut ChaCha8Rng) {
    for i in (1..v.len()).rev() {
        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
        v.swap(i, j);
    }
}

/// Random Latin square by row-by-row completion with randomized backtracking.
/// A Latin rectangle always extends, so each row search succeeds.
pub fn random_latin_square(n: usize, rng: &mut ChaCha8Rng) -> LatinSquare {
    let mut first: Vec<usize> = (0..n).collect();
    shuffle(&mut first, rng);
    let mut rows: Vec<Vec<usize>> = vec![first];
    let mut col_used: Vec<u64> = rows[0].iter().map(|&s| 1u64 << s).collect();
    while rows.len() < n {
        let order: Vec<Vec<usize>> = (0..n)
            .map(|_| {
                let mut o: Vec<usize> = (0..n).collect();
                shuffle(&mut o, rng);
                o
            })
            .collect();
        let mut row = vec![0usize; n];
        let ok = complete_row(0, 0, &col_used, &order, &mut row);
        assert!(ok, "Latin rectangles always extend");
        for (c, &s) in row.iter().enumerate() {
            col_used[c] |= 1 << s;
        }
        rows.push(row);
    }
    LatinSquare::from_rows(rows).expect("completion yields a Latin square")
}

fn complete_row(col: usize, used: u64, col_used: &[u64], order: &[Vec<usize>], row: &mut [usize]) -> bool {
    if col == row.len() {
        return true;
    }
    for &s in &order[col] {
        if used & (1 << s) != 0 || col_used[col] & (1 << s) != 0 {
            continue;
        }
        row[col] = s;
        if complete_row(col + 1, used | 1 << s, col_used, order, row) {
            return true;
        }
    }
    false
}

/// One invertible step applied while normalizing a bachelor square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NormalizeStep {
    SwapRows(usize, usize),
    SwapCols(usize, usize),
    /// Symbol `s` becomes `map[s]`.
    Rename(Vec<usize>),
}

/// Moves the bachelor cell to `(0, n-1)` and renames symbols so row 0 is the identity.
/// Returns the normalized square and the steps applied, in order.
pub fn normalize_bachelor(b: &BachelorSquare) -> (BachelorSquare, Vec<NormalizeStep>) {
    let n = b.square.order();
    let mut sq = b.square.clone();
    let mut steps = Vec::new();
    let (r, c) = b.cell;
    if r != 0 {
        sq.swap_rows(r, 0);
        steps.push(NormalizeStep::SwapRows(r, 0));
    }
    if c != n - 1 {
        sq.swap_cols(c, n - 1);
        steps.push(NormalizeStep::SwapCols(c, n - 1));
    }
    let mut map = vec![0; n];
    for j in 0..n {
        map[sq.get(0, j)] = j;
    }
    if map.iter().enumerate().any(|(s, &t)| s != t) {
        sq.rename(&map);
        steps.push(NormalizeStep::Rename(map));
    }
    (BachelorSquare { square: sq, cell: (0, n - 1) }, steps)
}

/// Applies recorded normalization steps to a square.
pub fn apply_steps(square: &LatinSquare, steps: &[NormalizeStep]) -> LatinSquare {
    let mut sq = square.clone();
    for step in steps {
        match step {
            NormalizeStep::SwapRows(a, b) => sq.swap_rows(*a, *b),
            NormalizeStep::SwapCols(a, b) => sq.swap_cols(*a, *b),
            NormalizeStep::Rename(map) => sq.rename(map),
        }
    }
    sq
}

/// The transpositions `(0 1), (2 3), .., (n-3 n-2)`.
pub fn pairing_transpositions(n: usize) -> Vec<Permutation> {
    (0..(n - 1) / 2)
        .map(|i| Permutation::from_cycles(n, &[[2 * i, 2 * i + 1]]).expect("valid transposition"))
        .collect()
}

#[derive(Clone, Debug)]
pub struct ExtendedCode {
    /// Normalized bachelor square: identity first row, bachelor cell at `(0, n-1)`.
    pub bachelor: BachelorSquare,
    /// Rows of the square followed by the pairing transpositions; `(3n - 1)/2` words.
    pub code: Vec<Permutation>,
}

/// Rows of a normalized confirmed bachelor square plus `(n-1)/2` disjoint
/// transpositions avoiding the bachelor column: a code of remoteness `n`.
pub fn extended_latin_code(n: usize, seed: u64, workers: usize, attempts_per_worker: u64) -> Result<ExtendedCode, LatinError> {
    let found = find_bachelor_square(n, seed, workers, attempts_per_worker)?;
    Ok(extend_bachelor(&found))
}

pub fn extend_bachelor(found: &BachelorSquare) -> ExtendedCode {
    let (bachelor, _) = normalize_bachelor(found);
    let n = bachelor.square.order();
    let mut code = bachelor.square.rows();
    code.extend(pairing_transpositions(n));
    ExtendedCode { bachelor, code }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_order_three() {
        assert_eq!(cyclic_latin(3).to_string(), "0,1,2\n1,2,0\n2,0,1\n");
    }

    #[test]
    fn cyclic_delta_vanishes() {
        for n in 1..=9 {
            let sq = cyclic_latin(n);
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(sq.delta(i, j), 0);
                }
            }
        }
    }

    #[test]
    fn cyclic_rows_are_cycle_powers() {
        let sq = cyclic_latin(5);
        let k = Permutation::standard_cycle(5);
        for i in 0..5 {
            assert_eq!(sq.row(i), k.pow(i as i64));
        }
    }

    #[test]
    fn validation_rejects_non_latin() {
        assert!(matches!(
            LatinSquare::from_rows(vec![vec![0, 1], vec![0, 1]]),
            Err(LatinError::Repeated { line: "column", .. })
        ));
        assert!(matches!(
            LatinSquare::from_rows(vec![vec![0, 0], vec![1, 1]]),
            Err(LatinError::Repeated { line: "row", .. })
        ));
        assert!(matches!(
            LatinSquare::from_rows(vec![vec![0, 1], vec![1]]),
            Err(LatinError::Ragged { .. })
        ));
        assert!(matches!("0,1\n1,x".parse::<LatinSquare>(), Err(LatinError::Parse(_))));
        let sq: LatinSquare = "0,1,2\n1,2,0\n2,0,1\n".parse().unwrap();
        assert!(sq.is_cyclic());
    }

    #[test]
    fn transversals_of_cyclic_squares() {
        let three = cyclic_latin(3);
        assert!(find_transversal(&three).is_some());
        // the diagonal j -> 2j
        let diag = Transversal {
            row_of_col: (0..3).map(|j| j % 3).collect(),
        };
        let pi = diag.as_permutation(&three);
        assert_eq!(pi, Permutation::affine_mod(3, 2, 0).unwrap());
        for row in three.rows() {
            assert_eq!(pi.distance(&row), 2);
        }
        assert!(find_transversal(&cyclic_latin(4)).is_none());
        assert!(find_transversal(&cyclic_latin(5)).is_some());
        assert!(find_transversal(&cyclic_latin(6)).is_none());
    }

    #[test]
    fn transversal_is_at_distance_n_minus_one_from_rows() {
        for n in [5, 7] {
            let sq = cyclic_latin(n);
            for t in all_transversals(&sq) {
                let pi = t.as_permutation(&sq);
                assert!(sq.rows().iter().all(|row| pi.distance(row) == n - 1));
                assert_eq!(t.positions().len(), n);
            }
        }
    }

    #[test]
    fn full_rows_have_exact_distance_sum() {
        let sq = cyclic_latin(6);
        let pi = Permutation::parse("(0 3 1)(2 5)", Some(6)).unwrap();
        let total: usize = sq.rows().iter().map(|r| pi.distance(r)).sum();
        assert_eq!(total, 6 * 5);
    }

    #[test]
    fn row_bounds() {
        let four = cyclic_latin(4);
        assert_eq!(first_k_rows_bound(&four, 2).unwrap(), 3);
        assert_eq!(first_k_rows_bound(&four, 4).unwrap(), 4);
        assert_eq!(first_k_rows_remoteness(&four, 4).unwrap(), (4, 4));
        assert_eq!(first_k_rows_bound(&cyclic_latin(6), 3).unwrap(), 4);
        assert!(matches!(first_k_rows_bound(&four, 0), Err(LatinError::RowCount { .. })));
        assert!(matches!(first_k_rows_bound(&four, 5), Err(LatinError::RowCount { .. })));
    }

    #[test]
    fn bachelor_order_checks() {
        assert!(matches!(find_bachelor_square(4, 0, 1, 10), Err(LatinError::BachelorOrder(4))));
        assert!(matches!(find_bachelor_square(1, 0, 1, 10), Err(LatinError::BachelorOrder(1))));
        // Every cell of an order-3 square lies on a transversal.
        assert!(matches!(find_bachelor_square(3, 0, 1, 10), Err(LatinError::BudgetExhausted { .. })));
    }

    #[test]
    fn bachelor_of_order_five() {
        let b = find_bachelor_square(5, 0, 1, 0).unwrap();
        assert!(transversal_through(&b.square, Some(b.cell)).is_none());
        assert_eq!(b.square.row(0), Permutation::identity(5));
    }

    #[test]
    fn normalization_preserves_the_empty_cell() {
        let b = find_bachelor_square(5, 0, 1, 0).unwrap();
        let mut sq = b.square.clone();
        sq.swap_rows(0, 3);
        sq.swap_cols(1, 4);
        sq.rename(&[2, 0, 4, 1, 3]);
        let cell = uncovered_cells(&sq)[0];
        let scrambled = BachelorSquare { square: sq, cell };

        let (norm, steps) = normalize_bachelor(&scrambled);
        assert_eq!(apply_steps(&scrambled.square, &steps), norm.square);
        assert_eq!(norm.square.row(0), Permutation::identity(5));
        assert_eq!(norm.cell, (0, 4));
        assert!(transversal_through(&norm.square, Some(norm.cell)).is_none());
    }

    #[test]
    fn random_squares_are_latin_and_seeded() {
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..5 {
            let x = random_latin_square(7, &mut a);
            assert_eq!(x, random_latin_square(7, &mut b));
            assert!(LatinSquare::from_rows((0..7).map(|i| x.row(i).to_vec()).collect()).is_ok());
        }
    }

    #[test]
    fn extended_code_shape() {
        let ext = extended_latin_code(5, 0, 1, 0).unwrap();
        assert_eq!(ext.code.len(), 7);
        assert_eq!(ext.code.len(), 5 + (5 - 1) / 2);
        assert_eq!(ext.bachelor.square.row(0), Permutation::identity(5));
        assert_eq!(pairing_transpositions(5)[1].to_string(), "0,1,3,2,4");
    }
}
