//! Globally simple cyclically 5-diagonal `²H(n;5)` for `n ≡ 3 (mod 4)`.

use crate::array::{DiagSpec, HeffterParams, PFArray};
use crate::error::{HeffterError, Result};

/// The fourteen `diag` runs, labelled `A` to `N`.
pub fn diag_specs(n: usize) -> Vec<(char, DiagSpec)> {
    let m = n as i64;
    let len = |x: i64| x as usize;
    let d = DiagSpec::new;
    vec![
        ('A', d(3, 3, (m - 3) / 2, 2, -1, len((m - 5) / 2))),
        ('B', d(4, 4, -(m - 2), 2, 1, len((m - 3) / 2))),
        ('C', d(3, 2, m + 1, 2, 2, len((m - 1) / 2))),
        ('D', d(4, 3, 3 * m - 1, 2, -2, len((m - 3) / 2))),
        ('E', d(2, 3, -3 * m, 2, 2, len((m - 1) / 2))),
        ('F', d(3, 4, -(m + 2), 2, -2, len((m - 3) / 2))),
        ('G', d(3, 1, -(15 * m + 3) / 4, 4, 1, len((m - 3) / 4))),
        ('H', d(4, 2, -(3 * m + 3), 4, -1, len((m + 1) / 4))),
        ('I', d(5, 3, -(19 * m - 9) / 4, 4, 1, len((m - 3) / 4))),
        ('J', d(6, 4, -(4 * m + 1), 4, -1, len((m - 3) / 4))),
        ('K', d(1, 3, (17 * m + 1) / 4, 4, 1, len((m - 3) / 4))),
        ('L', d(2, 4, 5 * m - 2, 4, -1, len((m + 1) / 4))),
        ('M', d(3, 5, (13 * m + 13) / 4, 4, 1, len((m - 3) / 4))),
        ('N', d(4, 6, 4 * m, 4, -1, len((m - 3) / 4))),
    ]
}

/// The twelve cells filled by hand.
pub fn ad_hoc_cells(n: usize) -> Vec<((usize, usize), i64)> {
    let m = n as i64;
    vec![
        ((1, 1), -m),
        ((1, 2), -2 * m + 1),
        ((1, n), 2 * m + 1),
        ((2, 1), 2 * m + 2),
        ((2, 2), m - 1),
        ((2, n), -(5 * m - 1)),
        ((n - 2, n - 2), -(m - 1) / 2),
        ((n - 2, n), 5 * m),
        ((n, 1), -2 * m),
        ((n, 2), 3 * m + 2),
        ((n, n - 2), -(3 * m + 1)),
        ((n, n), 1),
    ]
}

pub fn five_diag_params(n: usize) -> HeffterParams {
    HeffterParams::square(n, 5, 2, 1).expect("n >= 5")
}

/// Entries are left unreduced, as produced by the recipe.
pub fn build_5diag(n: usize) -> Result<PFArray> {
    if n % 4 != 3 || n < 7 {
        return Err(HeffterError::BadCongruence {
            what: "n = 3 (mod 4), n >= 7",
            n,
        });
    }
    let mut a = PFArray::new(n, n);
    for (_, spec) in diag_specs(n) {
        a.apply_diag(&spec)?;
    }
    for (cell, x) in ad_hoc_cells(n) {
        a.insert(cell, x)?;
    }
    Ok(a)
}
