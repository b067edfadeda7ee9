//! Relative difference families from simple orderings and their cyclic
//! development into cycle decompositions of `^λK_{(v/t)×t}`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::array::PFArray;
use crate::error::{HeffterError, Result};
use crate::orderings::{partial_sums, Line, OrderingPair};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LineKind {
    Rows,
    Columns,
}

/// A closed walk `(x₀, x₁, …, x_{ℓ−1})` in `Z_v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleGraph {
    pub vertices: Vec<usize>,
    pub v: usize,
}

impl CycleGraph {
    pub fn new(vertices: Vec<usize>, v: usize) -> Self {
        CycleGraph {
            vertices: vertices.into_iter().map(|x| x % v).collect(),
            v,
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Vertices pairwise distinct.
    pub fn is_simple(&self) -> bool {
        let mut seen = vec![false; self.v];
        self.vertices
            .iter()
            .all(|&x| !std::mem::replace(&mut seen[x], true))
    }

    pub fn translate(&self, g: usize) -> CycleGraph {
        CycleGraph {
            vertices: self.vertices.iter().map(|&x| (x + g) % self.v).collect(),
            v: self.v,
        }
    }

    /// Consecutive pairs, closing edge included, as `(min, max)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let l = self.vertices.len();
        (0..l).map(move |i| {
            let (a, b) = (self.vertices[i], self.vertices[(i + 1) % l]);
            (a.min(b), a.max(b))
        })
    }

    pub fn canonical(&self) -> Vec<usize> {
        canonical_cycle(&self.vertices)
    }
}

/// Least rotation of the sequence or of its reverse.
pub fn canonical_cycle(vs: &[usize]) -> Vec<usize> {
    let l = vs.len();
    let mut best: Option<Vec<usize>> = None;
    let rev: Vec<usize> = vs.iter().rev().copied().collect();
    for seq in [vs, &rev[..]] {
        for r in 0..l {
            let cand: Vec<usize> = seq[r..].iter().chain(&seq[..r]).copied().collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

/// One cycle per row (or column) whose vertices are the partial sums of
/// that line's ordering; the last vertex is `0`.
pub fn line_cycles(
    a: &PFArray,
    op: &OrderingPair,
    which: LineKind,
    v: usize,
) -> Result<Vec<CycleGraph>> {
    let lines: Vec<Line> = match which {
        LineKind::Rows => (1..=a.rows()).map(Line::Row).collect(),
        LineKind::Columns => (1..=a.cols()).map(Line::Column).collect(),
    };
    lines
        .into_iter()
        .map(|line| {
            let cycle = CycleGraph::new(partial_sums(&op.line_entries(a, line), v), v);
            if cycle.is_simple() {
                Ok(cycle)
            } else {
                Err(HeffterError::NotSimple {
                    line: format!("{line:?}"),
                })
            }
        })
        .collect()
}

/// Base blocks of a would-be `(v, t, Γ, λ)`-DF.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferenceFamily {
    pub blocks: Vec<CycleGraph>,
    pub v: usize,
    pub t: usize,
    pub lambda: usize,
}

impl DifferenceFamily {
    /// How often each element of `Z_v` occurs in `ΔF`.
    pub fn difference_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.v];
        for b in &self.blocks {
            for (x, y) in b.edges() {
                counts[(x + self.v - y) % self.v] += 1;
                counts[(y + self.v - x) % self.v] += 1;
            }
        }
        counts
    }
}

/// `ΔF` covers every element outside `J` exactly `λ` times and misses `J`.
pub fn check_difference_family(f: &DifferenceFamily) -> bool {
    if f.t == 0 || f.v == 0 || !f.v.is_multiple_of(f.t) {
        return false;
    }
    let step = f.v / f.t;
    f.difference_counts()
        .iter()
        .enumerate()
        .all(|(d, &c)| c == if d % step == 0 { 0 } else { f.lambda })
}

/// Every translate `B + g`, `g ∈ Z_v`, of every block.
pub fn develop(f: &DifferenceFamily) -> Vec<CycleGraph> {
    f.blocks
        .iter()
        .flat_map(|b| (0..f.v).map(move |g| b.translate(g)))
        .collect()
}

/// Edge multiplicities of a list of cycles.
pub fn edge_multiset(cycles: &[CycleGraph]) -> BTreeMap<(usize, usize), usize> {
    let mut counts = BTreeMap::new();
    for c in cycles {
        for e in c.edges() {
            *counts.entry(e).or_insert(0) += 1;
        }
    }
    counts
}

/// The cycles' edges are exactly those of `^λK_{(v/t)×t}`: `λ` copies of
/// `{x, y}` whenever `x − y ∉ J`, none otherwise.
pub fn check_decomposition(cycles: &[CycleGraph], v: usize, t: usize, lambda: usize) -> bool {
    if t == 0 || v == 0 || !v.is_multiple_of(t) || cycles.iter().any(|c| c.v != v) {
        return false;
    }
    let step = v / t;
    let counts = edge_multiset(cycles);
    if lambda == 0 {
        return counts.is_empty();
    }
    let admissible = (0..v)
        .flat_map(|x| (x + 1..v).map(move |y| (x, y)))
        .filter(|(x, y)| (y - x) % step != 0);
    let mut expected = 0usize;
    for e in admissible {
        expected += 1;
        if counts.get(&e).copied().unwrap_or(0) != lambda {
            return false;
        }
    }
    counts.len() == expected
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::orderings::natural_orderings;

    fn centered(c: &CycleGraph) -> Vec<i64> {
        c.vertices
            .iter()
            .map(|&x| {
                if 2 * x > c.v {
                    x as i64 - c.v as i64
                } else {
                    x as i64
                }
            })
            .collect()
    }

    fn family(which: LineKind) -> DifferenceFamily {
        let d = fixtures::three_fold_4x3();
        let op = natural_orderings(&d.array);
        DifferenceFamily {
            blocks: line_cycles(&d.array, &op, which, 10).unwrap(),
            v: 10,
            t: 2,
            lambda: 3,
        }
    }

    #[test]
    fn row_and_column_cycles() {
        let rows: Vec<Vec<i64>> = family(LineKind::Rows).blocks.iter().map(centered).collect();
        assert_eq!(
            rows,
            vec![
                vec![1, 3, 0],
                vec![4, -2, 0],
                vec![-3, -1, 0],
                vec![-1, -4, 0]
            ]
        );
        let cols: Vec<Vec<i64>> = family(LineKind::Columns)
            .blocks
            .iter()
            .map(centered)
            .collect();
        assert_eq!(
            cols,
            vec![
                vec![4, 1, 0],
                vec![1, 3, 0],
                vec![2, -4, 0],
                vec![-3, -1, 0]
            ]
        );
    }

    #[test]
    fn repeated_vertex_is_an_error() {
        let a = PFArray::from_rows(&[vec![Some(1), Some(2), Some(-2), Some(-1)]]).unwrap();
        let op = natural_orderings(&a);
        assert!(line_cycles(&a, &op, LineKind::Rows, 7).is_err());
    }

    #[test]
    fn difference_families() {
        let rows = family(LineKind::Rows);
        assert!(check_difference_family(&rows));
        assert!(check_difference_family(&family(LineKind::Columns)));
        let mut short = rows.clone();
        short.blocks.pop();
        assert!(!check_difference_family(&short));

        let d = fixtures::two_fold_5x3();
        let op = natural_orderings(&d.array);
        let cols = DifferenceFamily {
            blocks: line_cycles(&d.array, &op, LineKind::Columns, 16).unwrap(),
            v: 16,
            t: 1,
            lambda: 2,
        };
        assert!(check_difference_family(&cols));
    }

    #[test]
    fn translation_keeps_differences() {
        let rows = family(LineKind::Rows);
        let mut shifted = rows.clone();
        shifted.blocks[0] = shifted.blocks[0].translate(7);
        assert_eq!(rows.difference_counts(), shifted.difference_counts());
    }

    #[test]
    fn development() {
        let rows = family(LineKind::Rows);
        let dev = develop(&rows);
        assert_eq!(dev.len(), 40);
        assert_eq!(
            CycleGraph::new(vec![1, 3, 0], 10).translate(5).vertices,
            vec![6, 8, 5]
        );
        let single = DifferenceFamily {
            blocks: vec![CycleGraph::new(vec![0], 1)],
            v: 1,
            t: 1,
            lambda: 1,
        };
        assert_eq!(develop(&single), single.blocks);

        assert_eq!(dev.iter().map(|c| c.len()).sum::<usize>(), 120);
        assert!(check_decomposition(&dev, 10, 2, 3));
        let mut extra = dev.clone();
        extra.push(dev[0].clone());
        assert!(!check_decomposition(&extra, 10, 2, 3));
        assert!(check_decomposition(
            &develop(&family(LineKind::Columns)),
            10,
            2,
            3
        ));
    }

    #[test]
    fn canonical_form() {
        assert_eq!(canonical_cycle(&[3, 1, 2]), vec![1, 2, 3]);
        assert_eq!(canonical_cycle(&[3, 2, 1]), vec![1, 2, 3]);
        assert_eq!(canonical_cycle(&[2, 5, 1, 4]), vec![1, 4, 2, 5]);
        assert_eq!(canonical_cycle(&[]), Vec::<usize>::new());
    }
}
