//! Depth-first exhaustive search for small arrays.
//!
//! Cells are visited in row-major order. At each cell the search either
//! places an entry or, when the skeleton is not fixed, leaves the cell
//! empty (tried last). Entries are the representatives `±1, ±2, …` of
//! residues outside `J`, with the involution (if any) only as `+v/2`;
//! candidates go by increasing absolute value, positive first. The entry
//! completing a row or column is forced by its zero sum.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::array::{diagonal_cells, Cell, HeffterParams, PFArray};
use crate::error::{HeffterError, Result};
use crate::residue;
use crate::verify::verify;

/// Caps on a search run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub time_cap: Duration,
}

impl SearchBudget {
    pub const DEFAULT_NODES: u64 = 50_000_000;

    pub fn new(max_nodes: u64, time_cap: Duration) -> Result<Self> {
        if max_nodes == 0 || time_cap.is_zero() {
            return Err(HeffterError::InvalidParams(
                "search caps must be positive".into(),
            ));
        }
        Ok(SearchBudget {
            max_nodes,
            time_cap,
        })
    }

    pub fn nodes(max_nodes: u64) -> Result<Self> {
        Self::new(max_nodes, Duration::from_secs(3600))
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: Self::DEFAULT_NODES,
            time_cap: Duration::from_secs(60),
        }
    }
}

/// Which cells the search may fill.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SkeletonConstraint {
    Cells(BTreeSet<Cell>),
    /// Union of the wrapped diagonals `D_i` of a square array.
    Diagonals(Vec<usize>),
}

impl SkeletonConstraint {
    pub fn allowed(&self, m: usize, n: usize) -> Result<Vec<Cell>> {
        match self {
            SkeletonConstraint::Cells(cells) => {
                if let Some(&cell) = cells
                    .iter()
                    .find(|c| c.0 == 0 || c.1 == 0 || c.0 > m || c.1 > n)
                {
                    return Err(HeffterError::OutOfRange { cell, m, n });
                }
                Ok(cells.iter().copied().collect())
            }
            SkeletonConstraint::Diagonals(ds) => {
                if m != n {
                    return Err(HeffterError::NotSquare { m, n });
                }
                let mut set = BTreeSet::new();
                for &d in ds {
                    set.extend(diagonal_cells(n, d)?);
                }
                Ok(set.into_iter().collect())
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    /// True when the answer is definitive: an array was found, or the whole
    /// space was searched.
    pub complete: bool,
    pub nodes: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub array: Option<PFArray>,
    pub certificate: Certificate,
}

enum Flow {
    Found,
    Continue,
    Abort,
}

struct Searcher<'a> {
    p: HeffterParams,
    v: usize,
    cells: Vec<Cell>,
    rest_row: Vec<usize>,
    rest_col: Vec<usize>,
    candidates: Vec<i64>,
    class_left: Vec<usize>,
    row_cnt: Vec<usize>,
    col_cnt: Vec<usize>,
    row_sum: Vec<usize>,
    col_sum: Vec<usize>,
    row_ps: Vec<Vec<usize>>,
    col_ps: Vec<Vec<usize>>,
    values: Vec<Option<i64>>,
    simple: bool,
    nodes: u64,
    budget: SearchBudget,
    start: Instant,
    accept: &'a mut dyn FnMut(&PFArray) -> bool,
    found: Option<PFArray>,
}

impl Searcher<'_> {
    fn class(&self, x: i64) -> usize {
        let r = residue(x, self.v);
        r.min(self.v - r)
    }

    /// Representative of residue `r` in `±[1, v/2]`, involution positive.
    fn rep(&self, r: usize) -> i64 {
        if 2 * r <= self.v {
            r as i64
        } else {
            r as i64 - self.v as i64
        }
    }

    fn out_of_budget(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            return true;
        }
        self.nodes.is_multiple_of(4096) && self.start.elapsed() > self.budget.time_cap
    }

    fn dfs(&mut self, idx: usize) -> Flow {
        if idx == self.cells.len() {
            return self.leaf();
        }
        let (r, c) = self.cells[idx];
        let (ri, ci) = (r - 1, c - 1);
        let need_r = self.p.s - self.row_cnt[ri];
        let need_c = self.p.k - self.col_cnt[ci];

        if need_r > 0
            && need_c > 0
            && need_r - 1 <= self.rest_row[idx]
            && need_c - 1 <= self.rest_col[idx]
        {
            let forced_r = (need_r == 1).then(|| (self.v - self.row_sum[ri]) % self.v);
            let forced_c = (need_c == 1).then(|| (self.v - self.col_sum[ci]) % self.v);
            let forced = match (forced_r, forced_c) {
                (Some(a), Some(b)) if a != b => None,
                (Some(a), _) | (None, Some(a)) => Some(Some(a)),
                (None, None) => Some(None),
            };
            let list: Vec<i64> = match forced {
                None => Vec::new(),
                Some(Some(res)) => {
                    let x = self.rep(res);
                    if self.candidates.contains(&x) {
                        vec![x]
                    } else {
                        Vec::new()
                    }
                }
                Some(None) => self.candidates.clone(),
            };
            for x in list {
                let class = self.class(x);
                if self.class_left[class] == 0 {
                    continue;
                }
                if self.out_of_budget() {
                    return Flow::Abort;
                }
                let res = residue(x, self.v);
                let new_r = (self.row_sum[ri] + res) % self.v;
                let new_c = (self.col_sum[ci] + res) % self.v;
                if self.simple {
                    let clash = |last: bool, s: usize, seen: &[usize]| {
                        !last && (s == 0 || seen.contains(&s))
                    };
                    if clash(need_r == 1, new_r, &self.row_ps[ri])
                        || clash(need_c == 1, new_c, &self.col_ps[ci])
                    {
                        continue;
                    }
                }
                let old = (self.row_sum[ri], self.col_sum[ci]);
                self.class_left[class] -= 1;
                self.row_cnt[ri] += 1;
                self.col_cnt[ci] += 1;
                self.row_sum[ri] = new_r;
                self.col_sum[ci] = new_c;
                self.row_ps[ri].push(new_r);
                self.col_ps[ci].push(new_c);
                self.values[idx] = Some(x);
                let flow = self.dfs(idx + 1);
                self.values[idx] = None;
                self.row_ps[ri].pop();
                self.col_ps[ci].pop();
                self.row_sum[ri] = old.0;
                self.col_sum[ci] = old.1;
                self.row_cnt[ri] -= 1;
                self.col_cnt[ci] -= 1;
                self.class_left[class] += 1;
                match flow {
                    Flow::Continue => {}
                    other => return other,
                }
            }
        }

        if need_r <= self.rest_row[idx] && need_c <= self.rest_col[idx] {
            if self.out_of_budget() {
                return Flow::Abort;
            }
            return self.dfs(idx + 1);
        }
        Flow::Continue
    }

    fn leaf(&mut self) -> Flow {
        let a = PFArray::from_cells(
            self.p.m,
            self.p.n,
            self.cells
                .iter()
                .zip(&self.values)
                .filter_map(|(&cell, x)| x.map(|x| (cell, x))),
        )
        .expect("search stays in bounds");
        let ok = verify(&a, &self.p).map(|r| r.is_heffter()).unwrap_or(false);
        debug_assert!(ok, "search produced an invalid array");
        if ok && (self.accept)(&a) {
            self.found = Some(a);
            Flow::Found
        } else {
            Flow::Continue
        }
    }
}

/// Searches for a `^λH_t(m,n;s,k)`, optionally restricted to some cells.
/// Without a restriction every position is allowed and the search picks
/// the skeleton as well.
pub fn exhaustive_search(
    p: &HeffterParams,
    constraint: Option<&SkeletonConstraint>,
    budget: &SearchBudget,
) -> Result<SearchResult> {
    exhaustive_search_with(p, constraint, budget, false, |_| true)
}

/// As [`exhaustive_search`]; with `simple` set, natural row and column
/// orderings must be simple, and `accept` can reject finished arrays so
/// the search moves on to the next one.
pub fn exhaustive_search_with(
    p: &HeffterParams,
    constraint: Option<&SkeletonConstraint>,
    budget: &SearchBudget,
    simple: bool,
    mut accept: impl FnMut(&PFArray) -> bool,
) -> Result<SearchResult> {
    p.validate()?;
    let cells = match constraint {
        Some(c) => c.allowed(p.m, p.n)?,
        None => (1..=p.m)
            .flat_map(|r| (1..=p.n).map(move |c| (r, c)))
            .collect(),
    };
    let v = p.modulus();
    let mut rest_row = vec![0; cells.len()];
    let mut rest_col = vec![0; cells.len()];
    let mut seen_r = vec![0; p.m];
    let mut seen_c = vec![0; p.n];
    for (i, &(r, c)) in cells.iter().enumerate().rev() {
        rest_row[i] = seen_r[r - 1];
        rest_col[i] = seen_c[c - 1];
        seen_r[r - 1] += 1;
        seen_c[c - 1] += 1;
    }

    let mut candidates = Vec::new();
    let mut class_left = vec![0; v / 2 + 1];
    for (x, left) in class_left.iter_mut().enumerate().skip(1) {
        if p.in_subgroup(x) {
            continue;
        }
        if 2 * x == v {
            *left = p.lambda / 2;
            candidates.push(x as i64);
        } else {
            *left = p.lambda;
            candidates.extend([x as i64, -(x as i64)]);
        }
    }

    let mut s = Searcher {
        p: *p,
        v,
        values: vec![None; cells.len()],
        cells,
        rest_row,
        rest_col,
        candidates,
        class_left,
        row_cnt: vec![0; p.m],
        col_cnt: vec![0; p.n],
        row_sum: vec![0; p.m],
        col_sum: vec![0; p.n],
        row_ps: vec![Vec::new(); p.m],
        col_ps: vec![Vec::new(); p.n],
        simple,
        nodes: 0,
        budget: *budget,
        start: Instant::now(),
        accept: &mut accept,
        found: None,
    };
    let flow = s.dfs(0);
    Ok(SearchResult {
        certificate: Certificate {
            complete: !matches!(flow, Flow::Abort),
            nodes: s.nodes,
        },
        array: s.found,
    })
}
