//! Projection to a quotient group and block composition.

use crate::array::{HeffterParams, PFArray};
use crate::error::{HeffterError, Result};
use crate::verify::verify;

fn require_heffter(a: &PFArray, p: &HeffterParams) -> Result<()> {
    let report = verify(a, p)?;
    if !report.is_heffter() {
        return Err(HeffterError::Precondition(format!(
            "input is not a Heffter array for {p:?}: {} violation(s)",
            report.violations.len()
        )));
    }
    Ok(())
}

/// Representative of `x` modulo `w` in `(−w/2, w/2]`.
pub fn centered(x: i64, w: usize) -> i64 {
    let w = w as i64;
    let r = x.rem_euclid(w);
    if 2 * r > w {
        r - w
    } else {
        r
    }
}

/// Reads `A` over `Z_{v/λ₂}`. An `^αH_t` becomes an `^{λ₂α}H_{t/λ₂}` on
/// the same skeleton.
pub fn project(a: &PFArray, p: &HeffterParams, lambda2: usize) -> Result<(PFArray, HeffterParams)> {
    if lambda2 == 0 || !p.t.is_multiple_of(lambda2) {
        return Err(HeffterError::Precondition(format!(
            "lambda2 = {lambda2} does not divide t = {}",
            p.t
        )));
    }
    require_heffter(a, p)?;
    let w = p.modulus() / lambda2;
    let q = HeffterParams::new(p.m, p.n, p.s, p.k, p.lambda * lambda2, p.t / lambda2)?;
    Ok((a.map_entries(|x| centered(x, w)), q))
}

/// How the filled blocks of a composition are laid out.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockPattern {
    /// Block `(i, j)` filled iff `(j − i) mod l₂ < a₁`.
    Circulant,
    /// Block `(i, j)` filled iff `(j − i·a₁) mod l₂ < a₁`.
    Staircase,
}

impl BlockPattern {
    pub fn filled(self, i: usize, j: usize, l2: usize, a1: usize) -> bool {
        let shift = match self {
            BlockPattern::Circulant => i,
            BlockPattern::Staircase => i * a1,
        };
        (j + l2 - shift % l2) % l2 < a1
    }

    fn column_counts(self, l1: usize, l2: usize, a1: usize) -> Vec<usize> {
        (0..l2)
            .map(|j| (0..l1).filter(|&i| self.filled(i, j, l2, a1)).count())
            .collect()
    }
}

/// The circulant pattern when every block column gets `a₂` blocks,
/// otherwise the staircase, which always does.
pub fn block_pattern(l1: usize, l2: usize, a1: usize, a2: usize) -> Result<BlockPattern> {
    if l1 == 0 || l2 == 0 || a1 == 0 || a2 == 0 {
        return Err(HeffterError::InvalidParams(
            "block sizes must be positive".into(),
        ));
    }
    if a1 > l2 || a2 > l1 || a1 * l1 != a2 * l2 {
        return Err(HeffterError::InvalidParams(format!(
            "need a1 <= l2, a2 <= l1 and a1*l1 = a2*l2 (l1={l1}, l2={l2}, a1={a1}, a2={a2})"
        )));
    }
    for pattern in [BlockPattern::Circulant, BlockPattern::Staircase] {
        if pattern.column_counts(l1, l2, a1).iter().all(|&c| c == a2) {
            return Ok(pattern);
        }
    }
    Err(HeffterError::Precondition("no block pattern fits".into()))
}

/// Copies an `H_t(m,n;s,k)` into the filled blocks of an `l₁ × l₂` block
/// array with `a₁` blocks per block row and `a₂` per block column.
pub fn compose(
    a: &PFArray,
    p: &HeffterParams,
    l1: usize,
    l2: usize,
    a1: usize,
    a2: usize,
) -> Result<(PFArray, HeffterParams)> {
    if p.lambda != 1 {
        return Err(HeffterError::Precondition(format!(
            "composition needs lambda = 1, got {}",
            p.lambda
        )));
    }
    let pattern = block_pattern(l1, l2, a1, a2)?;
    require_heffter(a, p)?;
    let q = HeffterParams::new(l1 * p.m, l2 * p.n, a1 * p.s, a2 * p.k, a1 * l1, p.t)?;
    let mut out = PFArray::new(q.m, q.n);
    for bi in 0..l1 {
        for bj in 0..l2 {
            if !pattern.filled(bi, bj, l2, a1) {
                continue;
            }
            for ((r, c), x) in a.iter() {
                out.insert((bi * p.m + r, bj * p.n + c), x)?;
            }
        }
    }
    Ok((out, q))
}
