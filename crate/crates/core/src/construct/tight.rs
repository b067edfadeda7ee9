//! Tight `²H(2,n;n,2)` arrays over `Z_{2n+1}`.

use std::collections::BTreeSet;

use crate::array::{HeffterParams, PFArray};
use crate::error::{HeffterError, Result};

fn two_rows(first: &[i64]) -> PFArray {
    let n = first.len();
    let mut a = PFArray::new(2, n);
    for (j, &x) in first.iter().enumerate() {
        a.insert((1, j + 1), x).unwrap();
        a.insert((2, j + 1), -x).unwrap();
    }
    a
}

/// Parameters shared by both 2-row families.
pub fn two_row_params(n: usize) -> HeffterParams {
    HeffterParams::new(2, n, n, 2, 2, 1).expect("2 x n tight parameters are valid")
}

/// `n ≡ 2 (mod 4)`, `n ≥ 6`: first row
/// `(−1, 2, −3, 4, …, −(4i+1), 4i+2, 4i+3, −(4i+4), …, n−1, n)`, second row its negative.
pub fn build_2xn_even(n: usize) -> Result<PFArray> {
    if n % 4 != 2 || n < 6 {
        return Err(HeffterError::BadCongruence {
            what: "n = 2 (mod 4), n >= 6",
            n,
        });
    }
    let mut row = vec![-1i64, 2, -3, 4];
    for i in 1..=((n as i64 - 6) / 4) {
        row.extend([-(4 * i + 1), 4 * i + 2, 4 * i + 3, -(4 * i + 4)]);
    }
    row.extend([n as i64 - 1, n as i64]);
    Ok(two_rows(&row))
}

/// A subset of `[1, n]` summing to `target`.
///
/// Starts from the longest run `{n, n−1, …}` whose sum does not exceed
/// `target` and then raises the sum by one per step: if `1` is missing it
/// is added, otherwise the element just below the smallest missing value
/// `y` is swapped for `y`.
pub fn subset_summing_to(n: usize, target: u64) -> Result<BTreeSet<usize>> {
    let max = (n as u64) * (n as u64 + 1) / 2;
    if target < 1 || target > max {
        return Err(HeffterError::TargetOutOfRange { target, max });
    }
    let mut set = BTreeSet::new();
    let mut sum = 0u64;
    for x in (1..=n).rev() {
        if sum + x as u64 > target {
            break;
        }
        set.insert(x);
        sum += x as u64;
    }
    while sum < target {
        let y = (1..=n)
            .find(|y| !set.contains(y))
            .expect("sum below maximum");
        if y > 1 {
            set.remove(&(y - 1));
        }
        set.insert(y);
        sum += 1;
    }
    Ok(set)
}

/// `n ≡ 1 (mod 4)`, `n ≥ 5`: column `j` of the first row holds `−j` for
/// `j ∈ S` and `j` otherwise, where `S` sums to `(n² − 3n − 2)/4`.
pub fn build_2xn_odd(n: usize) -> Result<PFArray> {
    if n % 4 != 1 || n < 5 {
        return Err(HeffterError::BadCongruence {
            what: "n = 1 (mod 4), n >= 5",
            n,
        });
    }
    let target = ((n * n - 3 * n - 2) / 4) as u64;
    let s = subset_summing_to(n, target)?;
    let row: Vec<i64> = (1..=n)
        .map(|j| {
            if s.contains(&j) {
                -(j as i64)
            } else {
                j as i64
            }
        })
        .collect();
    Ok(two_rows(&row))
}
