//! Cyclic orderings of rows and columns, partial sums, simplicity,
//! compatibility and the Crazy Knight's Tour Problem.

use std::collections::HashSet;

use serde::Serialize;

use crate::array::{Cell, HeffterParams, PFArray};
use crate::error::{HeffterError, Result};
use crate::perm::Perm;
use crate::residue;

/// Result of a bounded search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    /// The whole space was searched without success.
    Exhausted,
    /// The budget ran out first.
    Incomplete,
}

impl<T> SearchOutcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }
}

/// `(s₁, …, s_k)` with `s_i` the sum of the first `i` entries, mod `v`.
pub fn partial_sums(entries: &[i64], v: usize) -> Vec<usize> {
    let mut acc = 0usize;
    entries
        .iter()
        .map(|&x| {
            acc = (acc + residue(x, v)) % v;
            acc
        })
        .collect()
}

/// All partial sums pairwise distinct modulo `v`.
pub fn is_simple(entries: &[i64], v: usize) -> bool {
    let mut seen = HashSet::with_capacity(entries.len());
    partial_sums(entries, v).into_iter().all(|s| seen.insert(s))
}

fn collisions(entries: &[i64], v: usize) -> usize {
    let ps = partial_sums(entries, v);
    let mut c = 0;
    for i in 0..ps.len() {
        for j in i + 1..ps.len() {
            if ps[i] == ps[j] {
                c += 1;
            }
        }
    }
    c
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Line {
    Row(usize),
    Column(usize),
}

/// One cyclic order per row (`α_r`) and per column (`α_c`) of a skeleton.
///
/// Cells are addressed by their index in the row-major list of filled
/// cells. Each cycle is stored starting from its leftmost (topmost) cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderingPair {
    cells: Vec<Cell>,
    rows: Vec<Vec<usize>>,
    cols: Vec<Vec<usize>>,
}

fn canonical_cycle(mut cycle: Vec<usize>) -> Vec<usize> {
    if let Some(pos) = cycle
        .iter()
        .enumerate()
        .min_by_key(|(_, &x)| x)
        .map(|(i, _)| i)
    {
        cycle.rotate_left(pos);
    }
    cycle
}

fn reversed_cycle(cycle: &[usize]) -> Vec<usize> {
    let mut r: Vec<usize> = cycle.iter().rev().copied().collect();
    r.rotate_right(1);
    r
}

impl OrderingPair {
    /// Builds a pair from explicit per-line cyclic cell sequences, checking
    /// that each covers exactly the filled cells of its line.
    pub fn from_lines(a: &PFArray, rows: Vec<Vec<Cell>>, cols: Vec<Vec<Cell>>) -> Result<Self> {
        let cells = a.cells();
        let index = |c: &Cell| {
            cells
                .binary_search(c)
                .map_err(|_| HeffterError::Precondition(format!("cell {c:?} is not filled")))
        };
        if rows.len() != a.rows() || cols.len() != a.cols() {
            return Err(HeffterError::Precondition(
                "need one cycle per row and per column".into(),
            ));
        }
        let mut row_idx = Vec::with_capacity(rows.len());
        for (i, line) in rows.iter().enumerate() {
            let mut want: Vec<Cell> = a.row(i + 1).into_iter().map(|(c, _)| c).collect();
            let mut got = line.clone();
            got.sort_unstable();
            want.sort_unstable();
            if got != want {
                return Err(HeffterError::Precondition(format!(
                    "row {} cycle does not match its filled cells",
                    i + 1
                )));
            }
            row_idx.push(canonical_cycle(
                line.iter().map(&index).collect::<Result<Vec<_>>>()?,
            ));
        }
        let mut col_idx = Vec::with_capacity(cols.len());
        for (j, line) in cols.iter().enumerate() {
            let mut want: Vec<Cell> = a.col(j + 1).into_iter().map(|(c, _)| c).collect();
            let mut got = line.clone();
            got.sort_unstable();
            want.sort_unstable();
            if got != want {
                return Err(HeffterError::Precondition(format!(
                    "column {} cycle does not match its filled cells",
                    j + 1
                )));
            }
            col_idx.push(canonical_cycle(
                line.iter().map(&index).collect::<Result<Vec<_>>>()?,
            ));
        }
        Ok(OrderingPair {
            cells,
            rows: row_idx,
            cols: col_idx,
        })
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn index_of(&self, cell: Cell) -> Option<usize> {
        self.cells.binary_search(&cell).ok()
    }

    pub fn row_cycle(&self, i: usize) -> Vec<Cell> {
        self.rows[i - 1].iter().map(|&x| self.cells[x]).collect()
    }

    pub fn col_cycle(&self, j: usize) -> Vec<Cell> {
        self.cols[j - 1].iter().map(|&x| self.cells[x]).collect()
    }

    pub fn line_cycle(&self, line: Line) -> Vec<Cell> {
        match line {
            Line::Row(i) => self.row_cycle(i),
            Line::Column(j) => self.col_cycle(j),
        }
    }

    fn perm_of(&self, lines: &[Vec<usize>]) -> Perm {
        Perm::from_cycles(self.cells.len(), lines)
    }

    /// `α_r` on cell indices.
    pub fn alpha_r(&self) -> Perm {
        self.perm_of(&self.rows)
    }

    /// `α_c` on cell indices.
    pub fn alpha_c(&self) -> Perm {
        self.perm_of(&self.cols)
    }

    /// Same pair with every row cycle reversed (`ω_r⁻¹`).
    pub fn inverse_rows(&self) -> OrderingPair {
        OrderingPair {
            cells: self.cells.clone(),
            rows: self.rows.iter().map(|c| reversed_cycle(c)).collect(),
            cols: self.cols.clone(),
        }
    }

    pub fn inverse_cols(&self) -> OrderingPair {
        OrderingPair {
            cells: self.cells.clone(),
            rows: self.rows.clone(),
            cols: self.cols.iter().map(|c| reversed_cycle(c)).collect(),
        }
    }

    /// The ordering `ω` of a line: its entries in cycle order.
    pub fn line_entries(&self, a: &PFArray, line: Line) -> Vec<i64> {
        self.line_cycle(line)
            .into_iter()
            .map(|c| a.get(c).expect("orderings built from this skeleton"))
            .collect()
    }

    pub fn lines(&self) -> impl Iterator<Item = Line> {
        let m = self.rows.len();
        let n = self.cols.len();
        (1..=m).map(Line::Row).chain((1..=n).map(Line::Column))
    }

    /// Every row and column ordering is simple modulo `v`.
    pub fn is_simple(&self, a: &PFArray, v: usize) -> bool {
        self.lines().all(|l| is_simple(&self.line_entries(a, l), v))
    }

    /// JSON view: per line, its cell sequence, entries and partial sums.
    pub fn to_value(&self, a: &PFArray, v: usize) -> serde_json::Value {
        let view = |line: Line| {
            let entries = self.line_entries(a, line);
            serde_json::json!({
                "line": line,
                "cells": self.line_cycle(line),
                "entries": entries,
                "partial_sums": partial_sums(&entries, v),
                "simple": is_simple(&entries, v),
            })
        };
        serde_json::json!({
            "rows": (1..=self.rows.len()).map(|i| view(Line::Row(i))).collect::<Vec<_>>(),
            "columns": (1..=self.cols.len()).map(|j| view(Line::Column(j))).collect::<Vec<_>>(),
        })
    }
}

/// Left to right in every row, top to bottom in every column.
pub fn natural_orderings(a: &PFArray) -> OrderingPair {
    let rows = (1..=a.rows())
        .map(|i| a.row(i).into_iter().map(|(c, _)| c).collect())
        .collect();
    let cols = (1..=a.cols())
        .map(|j| a.col(j).into_iter().map(|(c, _)| c).collect())
        .collect();
    OrderingPair::from_lines(a, rows, cols).expect("natural lines match the skeleton")
}

/// Natural orderings of every row and column are simple.
pub fn is_globally_simple(a: &PFArray, v: usize) -> bool {
    natural_orderings(a).is_simple(a, v)
}

/// Depth-first search for a simple cyclic order of one line. The first
/// cell is fixed; the rest are tried in natural order, so the natural
/// ordering is the first candidate. Returns positions into `entries`.
fn simple_line_order(entries: &[i64], v: usize, budget: &mut u64) -> SearchOutcome<Vec<usize>> {
    let len = entries.len();
    if len == 0 {
        return SearchOutcome::Found(Vec::new());
    }
    let mut order = vec![0usize];
    let mut used = vec![false; len];
    used[0] = true;
    let mut sums = vec![residue(entries[0], v)];
    let mut seen: HashSet<usize> = sums.iter().copied().collect();

    fn dfs(
        entries: &[i64],
        v: usize,
        order: &mut Vec<usize>,
        used: &mut [bool],
        sums: &mut Vec<usize>,
        seen: &mut HashSet<usize>,
        budget: &mut u64,
    ) -> Option<bool> {
        if order.len() == entries.len() {
            return Some(true);
        }
        for next in 1..entries.len() {
            if used[next] {
                continue;
            }
            if *budget == 0 {
                return None;
            }
            *budget -= 1;
            let s = (sums.last().unwrap() + residue(entries[next], v)) % v;
            if seen.contains(&s) {
                continue;
            }
            used[next] = true;
            order.push(next);
            sums.push(s);
            seen.insert(s);
            match dfs(entries, v, order, used, sums, seen, budget) {
                Some(true) => return Some(true),
                None => return None,
                Some(false) => {}
            }
            seen.remove(&s);
            sums.pop();
            order.pop();
            used[next] = false;
        }
        Some(false)
    }

    match dfs(
        entries, v, &mut order, &mut used, &mut sums, &mut seen, budget,
    ) {
        Some(true) => SearchOutcome::Found(order),
        Some(false) => SearchOutcome::Exhausted,
        None => SearchOutcome::Incomplete,
    }
}

/// Looks for a simple cyclic ordering of every row and column.
///
/// Lines are independent, so each is searched on its own; the most
/// constrained lines (most repeated partial sums under the natural order)
/// go first so that an impossible line is found early. `max_nodes` caps
/// the total number of extension steps.
pub fn find_simple_orderings(a: &PFArray, v: usize, max_nodes: u64) -> SearchOutcome<OrderingPair> {
    let natural = natural_orderings(a);
    if natural.is_simple(a, v) {
        return SearchOutcome::Found(natural);
    }
    let mut lines: Vec<(Line, Vec<Cell>, Vec<i64>)> = natural
        .lines()
        .map(|l| (l, natural.line_cycle(l), natural.line_entries(a, l)))
        .collect();
    // Rows before columns, then most collisions first.
    lines.sort_by_key(|(l, _, e)| {
        (
            matches!(l, Line::Column(_)),
            std::cmp::Reverse(collisions(e, v)),
        )
    });
    let mut rows = vec![Vec::new(); a.rows()];
    let mut cols = vec![Vec::new(); a.cols()];
    let mut budget = max_nodes;
    for (line, cells, entries) in lines {
        let order = match simple_line_order(&entries, v, &mut budget) {
            SearchOutcome::Found(o) => o,
            SearchOutcome::Exhausted => return SearchOutcome::Exhausted,
            SearchOutcome::Incomplete => return SearchOutcome::Incomplete,
        };
        let seq: Vec<Cell> = order.into_iter().map(|i| cells[i]).collect();
        match line {
            Line::Row(i) => rows[i - 1] = seq,
            Line::Column(j) => cols[j - 1] = seq,
        }
    }
    SearchOutcome::Found(
        OrderingPair::from_lines(a, rows, cols).expect("search permutes existing cells"),
    )
}

/// `α_c ∘ α_r` is a single cycle through the whole skeleton.
pub fn are_compatible(op: &OrderingPair) -> bool {
    op.alpha_c().after(&op.alpha_r()).is_full_cycle()
}

/// Parity patterns under which compatible orderings can exist:
/// all of `m, n, s, k` odd; `m` odd with `n, s` even; or `n` odd with
/// `m, k` even.
pub fn compatibility_parity_filter(p: &HeffterParams) -> bool {
    let odd = |x: usize| x % 2 == 1;
    (odd(p.m) && odd(p.n) && odd(p.s) && odd(p.k))
        || (odd(p.m) && !odd(p.n) && !odd(p.s))
        || (odd(p.n) && !odd(p.m) && !odd(p.k))
}

/// Row orientations `r_i` and column orientations `c_j`, each `±1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Orientations {
    pub rows: Vec<i8>,
    pub cols: Vec<i8>,
}

impl Orientations {
    pub fn all_positive(m: usize, n: usize) -> Self {
        Orientations {
            rows: vec![1; m],
            cols: vec![1; n],
        }
    }
}

/// Orders each row along `r_i` and each column along `c_j`.
fn oriented_orderings(a: &PFArray, o: &Orientations) -> OrderingPair {
    let rows = (1..=a.rows())
        .map(|i| {
            let mut cells: Vec<Cell> = a.row(i).into_iter().map(|(c, _)| c).collect();
            if o.rows[i - 1] < 0 {
                cells = reversed_cells(cells);
            }
            cells
        })
        .collect();
    let cols = (1..=a.cols())
        .map(|j| {
            let mut cells: Vec<Cell> = a.col(j).into_iter().map(|(c, _)| c).collect();
            if o.cols[j - 1] < 0 {
                cells = reversed_cells(cells);
            }
            cells
        })
        .collect();
    OrderingPair::from_lines(a, rows, cols).expect("oriented lines match the skeleton")
}

fn reversed_cells(mut cells: Vec<Cell>) -> Vec<Cell> {
    cells.reverse();
    cells.rotate_right(1);
    cells
}

/// Successor tables for the knight walk: for each cell index, the next
/// filled cell of its row (column) in the forward and backward direction.
struct WalkTables {
    row_fwd: Vec<usize>,
    row_bwd: Vec<usize>,
    col_fwd: Vec<usize>,
    col_bwd: Vec<usize>,
    row_of: Vec<usize>,
    col_of: Vec<usize>,
}

impl WalkTables {
    fn new(a: &PFArray) -> Self {
        let cells = a.cells();
        let n = cells.len();
        let idx = |c: &Cell| cells.binary_search(c).unwrap();
        let mut t = WalkTables {
            row_fwd: vec![0; n],
            row_bwd: vec![0; n],
            col_fwd: vec![0; n],
            col_bwd: vec![0; n],
            row_of: cells.iter().map(|c| c.0 - 1).collect(),
            col_of: cells.iter().map(|c| c.1 - 1).collect(),
        };
        for i in 1..=a.rows() {
            let line: Vec<usize> = a.row(i).iter().map(|(c, _)| idx(c)).collect();
            for (p, &x) in line.iter().enumerate() {
                t.row_fwd[x] = line[(p + 1) % line.len()];
                t.row_bwd[x] = line[(p + line.len() - 1) % line.len()];
            }
        }
        for j in 1..=a.cols() {
            let line: Vec<usize> = a.col(j).iter().map(|(c, _)| idx(c)).collect();
            for (p, &x) in line.iter().enumerate() {
                t.col_fwd[x] = line[(p + 1) % line.len()];
                t.col_bwd[x] = line[(p + line.len() - 1) % line.len()];
            }
        }
        t
    }

    /// Number of distinct cells visited by `L_{R,C}` from cell 0.
    fn tour_len(&self, rows: &[bool], cols: &[bool]) -> usize {
        let step = |x: usize| {
            let y = if rows[self.row_of[x]] {
                self.row_bwd[x]
            } else {
                self.row_fwd[x]
            };
            if cols[self.col_of[y]] {
                self.col_bwd[y]
            } else {
                self.col_fwd[y]
            }
        };
        let mut len = 1;
        let mut x = step(0);
        while x != 0 {
            x = step(x);
            len += 1;
        }
        len
    }
}

/// Bounded Crazy Knight's Tour search. Orientations are enumerated with
/// `r₁ = +1` fixed (negating every orientation inverts the walk), in
/// binary order starting from all `+1`.
pub fn knight_tour_bounded(a: &PFArray, max_candidates: u64) -> SearchOutcome<Orientations> {
    let (m, n) = (a.rows(), a.cols());
    let total = a.len();
    if total == 0 || m == 0 {
        return SearchOutcome::Exhausted;
    }
    let tables = WalkTables::new(a);
    let free = m - 1 + n;
    let space: Option<u64> = if free < 64 { Some(1u64 << free) } else { None };
    let mut rows = vec![false; m];
    let mut cols = vec![false; n];
    let mut mask: u64 = 0;
    loop {
        if space.is_some_and(|s| mask >= s) {
            return SearchOutcome::Exhausted;
        }
        if mask >= max_candidates {
            return SearchOutcome::Incomplete;
        }
        for (b, r) in rows.iter_mut().enumerate().skip(1) {
            *r = mask >> (b - 1) & 1 == 1;
        }
        for (b, c) in cols.iter_mut().enumerate() {
            *c = mask >> (m - 1 + b) & 1 == 1;
        }
        if tables.tour_len(&rows, &cols) == total {
            let sign = |neg: &bool| if *neg { -1 } else { 1 };
            return SearchOutcome::Found(Orientations {
                rows: rows.iter().map(sign).collect(),
                cols: cols.iter().map(sign).collect(),
            });
        }
        mask += 1;
    }
}

/// Exhaustive Crazy Knight's Tour search.
pub fn knight_tour(a: &PFArray) -> Option<Orientations> {
    knight_tour_bounded(a, u64::MAX).found()
}

/// Orderings induced by a knight-tour solution.
pub fn orderings_from_orientations(a: &PFArray, o: &Orientations) -> Result<OrderingPair> {
    if o.rows.len() != a.rows() || o.cols.len() != a.cols() {
        return Err(HeffterError::Precondition(
            "orientation lengths do not match the array".into(),
        ));
    }
    let op = oriented_orderings(a, o);
    if !are_compatible(&op) {
        return Err(HeffterError::Precondition(
            "orientations are not a knight-tour solution".into(),
        ));
    }
    Ok(op)
}
