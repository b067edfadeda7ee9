//! Rotation systems from compatible orderings, face tracing, Euler
//! characteristic and genus, and the covering relation between an array
//! and its projection.
//!
//! A directed edge is labelled `(x, (i,j), ε)` and runs from `x` to
//! `x + ε·a_{i,j}`. The local rotation at `x` is induced by
//! `γ(i,j,+1) = (α_r(i,j), −1)`, `γ(i,j,−1) = (α_c(i,j), +1)`; faces are
//! the orbits of `ρ∘τ` where `τ` reverses an edge.

use std::collections::HashMap;

use serde::Serialize;

use crate::array::{Cell, HeffterParams, PFArray};
use crate::decomp::{canonical_cycle, CycleGraph};
use crate::error::{HeffterError, Result};
use crate::orderings::{are_compatible, OrderingPair};
use crate::perm::Perm;
use crate::residue;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DirectedEdgeLabel {
    pub x: usize,
    pub cell: Cell,
    pub eps: i8,
}

#[derive(Clone, Debug)]
pub struct RotationSystem {
    v: usize,
    cells: Vec<Cell>,
    values: Vec<i64>,
    index: HashMap<Cell, usize>,
    /// On `skel(A) × {±1}`, point `2i` is `(cell i, +1)` and `2i+1` is `(cell i, −1)`.
    gamma: Perm,
}

fn point(i: usize, eps: i8) -> usize {
    2 * i + usize::from(eps < 0)
}

impl RotationSystem {
    pub fn v(&self) -> usize {
        self.v
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn gamma_perm(&self) -> &Perm {
        &self.gamma
    }

    pub fn gamma(&self, cell: Cell, eps: i8) -> (Cell, i8) {
        let p = self.gamma.apply(point(self.index[&cell], eps));
        (self.cells[p / 2], if p.is_multiple_of(2) { 1 } else { -1 })
    }

    pub fn entry(&self, cell: Cell) -> i64 {
        self.values[self.index[&cell]]
    }

    pub fn head(&self, d: DirectedEdgeLabel) -> usize {
        residue(d.x as i64 + d.eps as i64 * self.entry(d.cell), self.v)
    }

    pub fn rho(&self, d: DirectedEdgeLabel) -> DirectedEdgeLabel {
        let (cell, eps) = self.gamma(d.cell, d.eps);
        DirectedEdgeLabel { x: d.x, cell, eps }
    }

    pub fn tau(&self, d: DirectedEdgeLabel) -> DirectedEdgeLabel {
        DirectedEdgeLabel {
            x: self.head(d),
            cell: d.cell,
            eps: -d.eps,
        }
    }

    pub fn darts(&self) -> impl Iterator<Item = DirectedEdgeLabel> + '_ {
        (0..self.v).flat_map(move |x| {
            self.cells
                .iter()
                .flat_map(move |&cell| [1, -1].map(|eps| DirectedEdgeLabel { x, cell, eps }))
        })
    }

    fn dart_index(&self, d: DirectedEdgeLabel) -> usize {
        d.x * 2 * self.cells.len() + point(self.index[&d.cell], d.eps)
    }
}

/// The rotation system of a compatible pair of orderings.
pub fn build_rotation(a: &PFArray, op: &OrderingPair, v: usize) -> Result<RotationSystem> {
    if op.cells() != a.cells().as_slice() {
        return Err(HeffterError::Precondition(
            "orderings belong to another skeleton".into(),
        ));
    }
    if !are_compatible(op) {
        return Err(HeffterError::Incompatible);
    }
    let cells = a.cells();
    let values: Vec<i64> = a.entries();
    if let Some(i) = values.iter().position(|&x| residue(x, v) == 0) {
        return Err(HeffterError::Topology(format!(
            "entry at {:?} is 0 mod {v}",
            cells[i]
        )));
    }
    let ar = op.alpha_r();
    let ac = op.alpha_c();
    let mut images = vec![0; 2 * cells.len()];
    for i in 0..cells.len() {
        images[point(i, 1)] = point(ar.apply(i), -1);
        images[point(i, -1)] = point(ac.apply(i), 1);
    }
    let index = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    Ok(RotationSystem {
        v,
        cells,
        values,
        index,
        gamma: Perm::from_images(images),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FaceColor {
    Row,
    Column,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub color: FaceColor,
    pub darts: Vec<DirectedEdgeLabel>,
}

impl Face {
    /// Boundary vertices in walk order.
    pub fn vertices(&self) -> Vec<usize> {
        self.darts.iter().map(|d| d.x).collect()
    }

    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// The boundary walk repeats a vertex.
    pub fn is_degenerate(&self) -> bool {
        let mut vs = self.vertices();
        vs.sort_unstable();
        vs.windows(2).any(|w| w[0] == w[1])
    }
}

#[derive(Clone, Debug)]
pub struct FaceSet {
    pub faces: Vec<Face>,
    pub v: usize,
    pub cells: Vec<Cell>,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub genus: i64,
    /// Faces whose boundary repeats a vertex; nonzero when some ordering
    /// is compatible but not simple.
    pub degenerate_faces: usize,
}

impl FaceSet {
    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edge_count as i64 + self.faces.len() as i64
    }

    pub fn count(&self, color: FaceColor) -> usize {
        self.faces.iter().filter(|f| f.color == color).count()
    }

    /// Sorted face lengths.
    pub fn face_lengths(&self) -> Vec<usize> {
        let mut l: Vec<usize> = self.faces.iter().map(Face::len).collect();
        l.sort_unstable();
        l
    }

    pub fn summary(&self) -> serde_json::Value {
        serde_json::json!({
            "V": self.vertex_count,
            "E": self.edge_count,
            "F": self.face_count(),
            "chi": self.euler_characteristic(),
            "genus": self.genus,
            "row_faces": self.count(FaceColor::Row),
            "col_faces": self.count(FaceColor::Column),
            "degenerate_faces": self.degenerate_faces,
            "two_colorable": check_two_colorable(self),
        })
    }
}

/// `λ·v·(v−t)/2`, the edge count of `^λK_{(v/t)×t}`.
pub fn expected_edges(p: &HeffterParams) -> usize {
    let v = p.modulus();
    p.lambda * v * (v - p.t) / 2
}

/// All orbits of `ρ∘τ`, coloured by the sign they run on.
pub fn trace_faces(rs: &RotationSystem) -> Result<FaceSet> {
    let total = 2 * rs.v * rs.cells.len();
    let mut seen = vec![false; total];
    let mut faces = Vec::new();
    for start in rs.darts() {
        if seen[rs.dart_index(start)] {
            continue;
        }
        let mut darts = Vec::new();
        let mut d = start;
        loop {
            let i = rs.dart_index(d);
            if seen[i] {
                if d != start {
                    return Err(HeffterError::Topology("face orbit is not a cycle".into()));
                }
                break;
            }
            seen[i] = true;
            if d.eps != start.eps {
                return Err(HeffterError::Topology(
                    "face mixes row and column edges".into(),
                ));
            }
            darts.push(d);
            d = rs.rho(rs.tau(d));
        }
        let color = if start.eps > 0 {
            FaceColor::Column
        } else {
            FaceColor::Row
        };
        faces.push(Face { color, darts });
    }
    let vertex_count = rs.v;
    let edge_count = rs.v * rs.cells.len();
    let chi = vertex_count as i64 - edge_count as i64 + faces.len() as i64;
    if chi % 2 != 0 || chi > 2 {
        return Err(HeffterError::Topology(format!(
            "Euler characteristic {chi} is not that of a closed orientable surface"
        )));
    }
    let degenerate_faces = faces.iter().filter(|f| f.is_degenerate()).count();
    Ok(FaceSet {
        faces,
        v: rs.v,
        cells: rs.cells.clone(),
        vertex_count,
        edge_count,
        genus: (2 - chi) / 2,
        degenerate_faces,
    })
}

/// Every undirected edge `{x, x + a_{i,j}}` (one per `x` and filled cell)
/// lies on exactly one row face and one column face.
pub fn check_two_colorable(fs: &FaceSet) -> bool {
    let index: HashMap<Cell, usize> = fs.cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let n = fs.cells.len();
    let mut row = vec![0usize; fs.v * n];
    let mut col = vec![0usize; fs.v * n];
    for f in &fs.faces {
        let l = f.darts.len();
        for (k, d) in f.darts.iter().enumerate() {
            let Some(&ci) = index.get(&d.cell) else {
                return false;
            };
            // Key each edge by the tail of its forward (ε = +1) direction.
            let tail = if d.eps > 0 {
                d.x
            } else {
                f.darts[(k + 1) % l].x
            };
            if tail >= fs.v {
                return false;
            }
            let slot = tail * n + ci;
            match f.color {
                FaceColor::Row => row[slot] += 1,
                FaceColor::Column => col[slot] += 1,
            }
        }
    }
    row.iter().zip(&col).all(|(&r, &c)| r == 1 && c == 1)
}

fn canonical_multiset<'a>(cycles: impl Iterator<Item = Vec<usize>> + 'a) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = cycles.map(|c| canonical_cycle(&c)).collect();
    out.sort();
    out
}

/// Row faces are the cycles of `rows` (developed from `ω_r⁻¹`) and column
/// faces those of `cols` (developed from `ω_c`), as canonical cycles.
pub fn faces_match_decomposition(fs: &FaceSet, rows: &[CycleGraph], cols: &[CycleGraph]) -> bool {
    let faces = |color| {
        canonical_multiset(
            fs.faces
                .iter()
                .filter(move |f| f.color == color)
                .map(Face::vertices),
        )
    };
    faces(FaceColor::Row) == canonical_multiset(rows.iter().map(|c| c.vertices.clone()))
        && faces(FaceColor::Column) == canonical_multiset(cols.iter().map(|c| c.vertices.clone()))
}

/// Checks `π∘ρ′ = ρ∘π` and `π∘τ′ = τ∘π` on every labelled directed edge
/// of `A`'s graph, where `B` is `A` read modulo `v_B` and `π` reduces
/// vertices modulo `v_B`. Heads are compared as well as labels.
pub fn verify_covering(
    a: &PFArray,
    pa: &HeffterParams,
    b: &PFArray,
    pb: &HeffterParams,
    op: &OrderingPair,
) -> Result<bool> {
    let (va, vb) = (pa.modulus(), pb.modulus());
    if vb == 0 || va % vb != 0 {
        return Err(HeffterError::Precondition(format!(
            "{vb} does not divide {va}"
        )));
    }
    if a.skeleton() != b.skeleton() {
        return Ok(false);
    }
    if !op.is_simple(b, vb) {
        return Err(HeffterError::Precondition(
            "orderings are not simple for B".into(),
        ));
    }
    let upper = build_rotation(a, op, va)?;
    let lower = build_rotation(b, op, vb)?;
    let pi = |d: DirectedEdgeLabel| DirectedEdgeLabel { x: d.x % vb, ..d };
    for d in upper.darts() {
        let (r1, r2) = (pi(upper.rho(d)), lower.rho(pi(d)));
        let (t1, t2) = (pi(upper.tau(d)), lower.tau(pi(d)));
        if r1 != r2 || t1 != t2 || upper.head(upper.rho(d)) % vb != lower.head(r2) {
            return Ok(false);
        }
    }
    Ok(true)
}
