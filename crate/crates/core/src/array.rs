//! Partially filled arrays, their parameters, wrapped diagonals and the
//! `diag` filling procedure.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{HeffterError, Result};
use crate::residue;

/// A 1-based `(row, column)` position.
pub type Cell = (usize, usize);

/// The tuple `(m, n, s, k, λ, t)` of a `^λH_t(m,n;s,k)`.
///
/// Fields are public so that arbitrary tuples can be fed to
/// [`crate::verify::necessary_conditions`]; [`HeffterParams::new`] is the
/// validating constructor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HeffterParams {
    pub m: usize,
    pub n: usize,
    pub s: usize,
    pub k: usize,
    pub lambda: usize,
    pub t: usize,
}

impl HeffterParams {
    pub fn new(m: usize, n: usize, s: usize, k: usize, lambda: usize, t: usize) -> Result<Self> {
        let p = HeffterParams {
            m,
            n,
            s,
            k,
            lambda,
            t,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn square(n: usize, k: usize, lambda: usize, t: usize) -> Result<Self> {
        Self::new(n, n, k, k, lambda, t)
    }

    /// Checks the structural invariants: `ms = nk`, `2 <= s <= n`,
    /// `2 <= k <= m`, `λ | 2nk` and `t | 2nk/λ`.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(HeffterError::InvalidParams(msg));
        let HeffterParams {
            m,
            n,
            s,
            k,
            lambda,
            t,
        } = *self;
        if m * s != n * k {
            return bad(format!("m*s = {} differs from n*k = {}", m * s, n * k));
        }
        if !(2 <= s && s <= n) {
            return bad(format!("need 2 <= s <= n, got s = {s}, n = {n}"));
        }
        if !(2 <= k && k <= m) {
            return bad(format!("need 2 <= k <= m, got k = {k}, m = {m}"));
        }
        if lambda == 0 || t == 0 {
            return bad("lambda and t must be positive".into());
        }
        if (2 * n * k) % lambda != 0 {
            return bad(format!(
                "lambda = {lambda} does not divide 2nk = {}",
                2 * n * k
            ));
        }
        if (2 * n * k / lambda) % t != 0 {
            return bad(format!(
                "t = {t} does not divide 2nk/lambda = {}",
                2 * n * k / lambda
            ));
        }
        Ok(())
    }

    /// `v = 2nk/λ + t`, or `None` when λ does not divide `2nk`.
    pub fn checked_modulus(&self) -> Option<usize> {
        if self.lambda == 0 || !(2 * self.n * self.k).is_multiple_of(self.lambda) {
            return None;
        }
        Some(2 * self.n * self.k / self.lambda + self.t)
    }

    /// `v = 2nk/λ + t`. Only meaningful for validated parameters.
    pub fn modulus(&self) -> usize {
        2 * self.n * self.k / self.lambda + self.t
    }

    /// `v/t`: the subgroup `J` of order `t` is the set of multiples of this.
    pub fn subgroup_step(&self) -> usize {
        self.modulus() / self.t
    }

    /// Whether the residue `r` (in `[0, v)`) lies in `J`.
    pub fn in_subgroup(&self, r: usize) -> bool {
        r.is_multiple_of(self.subgroup_step())
    }

    pub fn is_square(&self) -> bool {
        self.m == self.n
    }
}

/// An `m x n` partially filled array of signed integer entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PFArray {
    m: usize,
    n: usize,
    cells: BTreeMap<Cell, i64>,
}

impl PFArray {
    pub fn new(m: usize, n: usize) -> Self {
        PFArray {
            m,
            n,
            cells: BTreeMap::new(),
        }
    }

    pub fn from_cells<I>(m: usize, n: usize, cells: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Cell, i64)>,
    {
        let mut a = PFArray::new(m, n);
        for (cell, value) in cells {
            a.insert(cell, value)?;
        }
        Ok(a)
    }

    /// Builds an array from a dense grid where `None` marks an empty cell.
    pub fn from_rows(rows: &[Vec<Option<i64>>]) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        let mut a = PFArray::new(m, n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(HeffterError::Parse(format!(
                    "row {} has {} fields, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            for (j, v) in row.iter().enumerate() {
                if let Some(v) = v {
                    a.insert((i + 1, j + 1), *v)?;
                }
            }
        }
        Ok(a)
    }

    pub fn rows(&self) -> usize {
        self.m
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    pub fn is_square(&self) -> bool {
        self.m == self.n
    }

    fn check_bounds(&self, cell: Cell) -> Result<()> {
        let (r, c) = cell;
        if r == 0 || c == 0 || r > self.m || c > self.n {
            return Err(HeffterError::OutOfRange {
                cell,
                m: self.m,
                n: self.n,
            });
        }
        Ok(())
    }

    /// Fills an empty cell. Filling an occupied cell is an error.
    pub fn insert(&mut self, cell: Cell, value: i64) -> Result<()> {
        self.check_bounds(cell)?;
        if self.cells.contains_key(&cell) {
            return Err(HeffterError::Collision { cell });
        }
        self.cells.insert(cell, value);
        Ok(())
    }

    /// Sets a cell, overwriting whatever was there.
    pub fn set(&mut self, cell: Cell, value: i64) -> Result<()> {
        self.check_bounds(cell)?;
        self.cells.insert(cell, value);
        Ok(())
    }

    pub fn remove(&mut self, cell: Cell) -> Option<i64> {
        self.cells.remove(&cell)
    }

    pub fn get(&self, cell: Cell) -> Option<i64> {
        self.cells.get(&cell).copied()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Filled cells with their entries, sorted by `(row, column)`.
    pub fn iter(&self) -> impl Iterator<Item = (Cell, i64)> + '_ {
        self.cells.iter().map(|(&c, &v)| (c, v))
    }

    /// `skel(A)`: the set of filled positions.
    pub fn skeleton(&self) -> BTreeSet<Cell> {
        self.cells.keys().copied().collect()
    }

    /// Filled cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        self.cells.keys().copied().collect()
    }

    /// `E(A)` in row-major order.
    pub fn entries(&self) -> Vec<i64> {
        self.cells.values().copied().collect()
    }

    /// Filled cells of row `i`, left to right.
    pub fn row(&self, i: usize) -> Vec<(Cell, i64)> {
        self.cells
            .range((i, 0)..=(i, usize::MAX))
            .map(|(&c, &v)| (c, v))
            .collect()
    }

    /// Filled cells of column `j`, top to bottom.
    pub fn col(&self, j: usize) -> Vec<(Cell, i64)> {
        self.cells
            .iter()
            .filter(|(c, _)| c.1 == j)
            .map(|(&c, &v)| (c, v))
            .collect()
    }

    pub fn row_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.m];
        for &(r, _) in self.cells.keys() {
            counts[r - 1] += 1;
        }
        counts
    }

    pub fn col_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.n];
        for &(_, c) in self.cells.keys() {
            counts[c - 1] += 1;
        }
        counts
    }

    pub fn row_sums(&self) -> Vec<i64> {
        let mut sums = vec![0; self.m];
        for (&(r, _), &v) in &self.cells {
            sums[r - 1] += v;
        }
        sums
    }

    pub fn col_sums(&self) -> Vec<i64> {
        let mut sums = vec![0; self.n];
        for (&(_, c), &v) in &self.cells {
            sums[c - 1] += v;
        }
        sums
    }

    /// Entry-wise map keeping the skeleton.
    pub fn map_entries(&self, f: impl Fn(i64) -> i64) -> PFArray {
        PFArray {
            m: self.m,
            n: self.n,
            cells: self.cells.iter().map(|(&c, &v)| (c, f(v))).collect(),
        }
    }

    pub fn negated(&self) -> PFArray {
        self.map_entries(|v| -v)
    }

    /// Entries replaced by their least non-negative residues mod `v`.
    pub fn reduced(&self, v: usize) -> PFArray {
        self.map_entries(|x| residue(x, v) as i64)
    }

    /// Row `i` of the result is row `perm[i-1]` of `self` (1-based values).
    pub fn permute_rows(&self, perm: &[usize]) -> PFArray {
        assert_eq!(perm.len(), self.m);
        let mut inv = vec![0; self.m + 1];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i + 1;
        }
        PFArray {
            m: self.m,
            n: self.n,
            cells: self
                .cells
                .iter()
                .map(|(&(r, c), &v)| ((inv[r], c), v))
                .collect(),
        }
    }

    /// Column `j` of the result is column `perm[j-1]` of `self`.
    pub fn permute_cols(&self, perm: &[usize]) -> PFArray {
        assert_eq!(perm.len(), self.n);
        let mut inv = vec![0; self.n + 1];
        for (j, &p) in perm.iter().enumerate() {
            inv[p] = j + 1;
        }
        PFArray {
            m: self.m,
            n: self.n,
            cells: self
                .cells
                .iter()
                .map(|(&(r, c), &v)| ((r, inv[c]), v))
                .collect(),
        }
    }

    pub fn transpose(&self) -> PFArray {
        PFArray {
            m: self.n,
            n: self.m,
            cells: self.cells.iter().map(|(&(r, c), &v)| ((c, r), v)).collect(),
        }
    }

    /// Installs the entries described by `spec`, failing on any collision.
    pub fn apply_diag(&mut self, spec: &DiagSpec) -> Result<()> {
        if !self.is_square() {
            return Err(HeffterError::NotSquare {
                m: self.m,
                n: self.n,
            });
        }
        let n = self.n;
        let mut staged = Vec::with_capacity(spec.len);
        for i in 0..spec.len as i64 {
            let r = wrap(spec.row as i64 + i * spec.step, n);
            let c = wrap(spec.col as i64 + i * spec.step, n);
            let cell = (r, c);
            if self.cells.contains_key(&cell) || staged.iter().any(|&(x, _)| x == cell) {
                return Err(HeffterError::Collision { cell });
            }
            staged.push((cell, spec.start + i * spec.entry_step));
        }
        self.cells.extend(staged);
        Ok(())
    }

    /// Whether `skel(A)` is exactly `D_i ∪ … ∪ D_{i+k-1}` for some `i`.
    pub fn is_cyclically_k_diagonal(&self, k: usize) -> bool {
        if !self.is_square() || k == 0 || k > self.n {
            return false;
        }
        let n = self.n;
        if self.cells.len() != k * n {
            return false;
        }
        let mut present = vec![0usize; n + 1];
        for &cell in self.cells.keys() {
            present[diagonal_index(n, cell)] += 1;
        }
        (1..=n).any(|i| (0..k).all(|d| present[wrap((i + d) as i64, n)] == n))
    }
}

/// Reduces an index into the residue system `{1, …, n}`.
pub fn wrap(x: i64, n: usize) -> usize {
    let r = (x - 1).rem_euclid(n as i64) as usize;
    r + 1
}

/// The `i` such that `cell` lies on `D_i` of an `n x n` array.
pub fn diagonal_index(n: usize, cell: Cell) -> usize {
    wrap(cell.0 as i64 - cell.1 as i64 + 1, n)
}

/// `D_i = {(i,1), (i+1,2), …, (i-1,n)}` with row indices wrapped into `[1,n]`.
pub fn diagonal_cells(n: usize, i: usize) -> Result<Vec<Cell>> {
    if i == 0 || i > n {
        return Err(HeffterError::DiagonalIndex { index: i, n });
    }
    Ok((1..=n).map(|c| (wrap((i + c - 1) as i64, n), c)).collect())
}

/// Parameters of `diag(r, c, s, Δ₁, Δ₂, ℓ)`: install
/// `A[r + iΔ₁, c + iΔ₁] = s + iΔ₂` for `i` in `0..ℓ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiagSpec {
    pub row: usize,
    pub col: usize,
    pub start: i64,
    pub step: i64,
    pub entry_step: i64,
    pub len: usize,
}

impl DiagSpec {
    pub fn new(row: usize, col: usize, start: i64, step: i64, entry_step: i64, len: usize) -> Self {
        DiagSpec {
            row,
            col,
            start,
            step,
            entry_step,
            len,
        }
    }
}

/// Returns `a` with `spec` applied; `a` itself is left untouched.
pub fn apply_diag(a: &PFArray, spec: &DiagSpec) -> Result<PFArray> {
    let mut out = a.clone();
    out.apply_diag(spec)?;
    Ok(out)
}
