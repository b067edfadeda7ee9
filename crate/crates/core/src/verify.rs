//! Checks for the defining conditions of a `^λH_t(m,n;s,k)`, the integer
//! strengthening, signed magic arrays, and parameter-level obstructions.

use serde::Serialize;

use crate::array::{HeffterParams, PFArray};
use crate::error::{HeffterError, Result};
use crate::residue;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    /// Filled-cell count of a row.
    A1Row,
    /// Filled-cell count of a column.
    A1Column,
    /// Multiplicity of `±E(A)` on a group element.
    B1,
    C1Row,
    C1Column,
    /// Entry outside `±{1, …, ⌊v/2⌋}`.
    IntegerRange,
    IntegerRow,
    IntegerColumn,
    Sma,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Row(usize),
    Column(usize),
    /// A residue in `[0, v)`.
    Element(usize),
    Entry(i64),
    /// The involution `v/2` lies outside `J` while `λ` is odd, so it
    /// cannot appear `λ/2` times.
    HalfMultiplicityImpossible(usize),
    Shape,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub condition: Condition,
    pub witness: Witness,
    pub detail: String,
}

impl Violation {
    fn new(condition: Condition, witness: Witness, detail: impl Into<String>) -> Self {
        Violation {
            condition,
            witness,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub passes_a1: bool,
    pub passes_b1: bool,
    pub passes_c1: bool,
    pub is_integer: bool,
    pub is_sma: bool,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    /// `a₁ ∧ b₁ ∧ c₁`.
    pub fn is_heffter(&self) -> bool {
        self.passes_a1 && self.passes_b1 && self.passes_c1
    }
}

fn check_dims(a: &PFArray, p: &HeffterParams) -> Result<()> {
    if a.rows() != p.m || a.cols() != p.n {
        return Err(HeffterError::DimensionMismatch {
            got_m: a.rows(),
            got_n: a.cols(),
            want_m: p.m,
            want_n: p.n,
        });
    }
    Ok(())
}

fn modulus_of(p: &HeffterParams) -> Result<usize> {
    p.validate()?;
    Ok(p.modulus())
}

pub fn count_violations(a: &PFArray, p: &HeffterParams) -> Result<Vec<Violation>> {
    check_dims(a, p)?;
    let mut out = Vec::new();
    for (i, &c) in a.row_counts().iter().enumerate() {
        if c != p.s {
            out.push(Violation::new(
                Condition::A1Row,
                Witness::Row(i + 1),
                format!("row {} has {c} filled cells, expected {}", i + 1, p.s),
            ));
        }
    }
    for (j, &c) in a.col_counts().iter().enumerate() {
        if c != p.k {
            out.push(Violation::new(
                Condition::A1Column,
                Witness::Column(j + 1),
                format!("column {} has {c} filled cells, expected {}", j + 1, p.k),
            ));
        }
    }
    Ok(out)
}

pub fn sum_violations(a: &PFArray, p: &HeffterParams) -> Result<Vec<Violation>> {
    check_dims(a, p)?;
    let v = modulus_of(p)?;
    let mut out = Vec::new();
    for (i, &s) in a.row_sums().iter().enumerate() {
        if residue(s, v) != 0 {
            out.push(Violation::new(
                Condition::C1Row,
                Witness::Row(i + 1),
                format!("row {} sums to {s}, not 0 mod {v}", i + 1),
            ));
        }
    }
    for (j, &s) in a.col_sums().iter().enumerate() {
        if residue(s, v) != 0 {
            out.push(Violation::new(
                Condition::C1Column,
                Witness::Column(j + 1),
                format!("column {} sums to {s}, not 0 mod {v}", j + 1),
            ));
        }
    }
    Ok(out)
}

/// Occurrence counts of the multiset `{±x mod v : x ∈ E(A)}`.
pub fn signed_multiplicities(a: &PFArray, v: usize) -> Vec<usize> {
    let mut counts = vec![0usize; v];
    for x in a.entries() {
        counts[residue(x, v)] += 1;
        counts[residue(-x, v)] += 1;
    }
    counts
}

pub fn support_violations(a: &PFArray, p: &HeffterParams) -> Result<Vec<Violation>> {
    check_dims(a, p)?;
    let v = modulus_of(p)?;
    let counts = signed_multiplicities(a, v);
    let mut out = Vec::new();
    if v % 2 == 0 && !p.in_subgroup(v / 2) && p.lambda % 2 == 1 {
        out.push(Violation::new(
            Condition::B1,
            Witness::HalfMultiplicityImpossible(v / 2),
            format!(
                "involution {} is outside J but lambda = {} is odd",
                v / 2,
                p.lambda
            ),
        ));
    }
    for (x, &c) in counts.iter().enumerate() {
        let want = if p.in_subgroup(x) { 0 } else { p.lambda };
        if c != want {
            out.push(Violation::new(
                Condition::B1,
                Witness::Element(x),
                format!("±E(A) contains {x} {c} times, expected {want}"),
            ));
        }
    }
    Ok(out)
}

pub fn integer_violations(a: &PFArray, p: &HeffterParams) -> Result<Vec<Violation>> {
    check_dims(a, p)?;
    let v = modulus_of(p)?;
    let half = (v / 2) as i64;
    let mut out = Vec::new();
    for ((r, c), x) in a.iter() {
        if x == 0 || x.abs() > half {
            out.push(Violation::new(
                Condition::IntegerRange,
                Witness::Entry(x),
                format!("entry {x} at ({r}, {c}) is outside ±[1, {half}]"),
            ));
        }
    }
    for (i, &s) in a.row_sums().iter().enumerate() {
        if s != 0 {
            out.push(Violation::new(
                Condition::IntegerRow,
                Witness::Row(i + 1),
                format!("row {} sums to {s} in Z", i + 1),
            ));
        }
    }
    for (j, &s) in a.col_sums().iter().enumerate() {
        if s != 0 {
            out.push(Violation::new(
                Condition::IntegerColumn,
                Witness::Column(j + 1),
                format!("column {} sums to {s} in Z", j + 1),
            ));
        }
    }
    Ok(out)
}

/// Condition (a₁): `s` filled cells per row, `k` per column.
pub fn check_counts(a: &PFArray, p: &HeffterParams) -> Result<bool> {
    Ok(count_violations(a, p)?.is_empty())
}

/// Condition (c₁): zero row and column sums modulo `v`.
pub fn check_sums(a: &PFArray, p: &HeffterParams) -> Result<bool> {
    Ok(sum_violations(a, p)?.is_empty())
}

/// Condition (b₁): `±E(A)` covers `Z_v \ J` exactly `λ` times and misses `J`.
pub fn check_support(a: &PFArray, p: &HeffterParams) -> Result<bool> {
    Ok(support_violations(a, p)?.is_empty())
}

/// Entries in `±[1, ⌊v/2⌋]` with zero row and column sums over `Z`.
pub fn check_integer(a: &PFArray, p: &HeffterParams) -> Result<bool> {
    Ok(integer_violations(a, p)?.is_empty())
}

pub fn sma_violations(a: &PFArray) -> Vec<Violation> {
    let mut out = Vec::new();
    let rc = a.row_counts();
    let cc = a.col_counts();
    let uniform = |c: &[usize]| c.windows(2).all(|w| w[0] == w[1]);
    if !uniform(&rc) || !uniform(&cc) {
        out.push(Violation::new(
            Condition::Sma,
            Witness::Shape,
            "row or column filled counts are not uniform",
        ));
        return out;
    }
    let total = a.len() as i64;
    // X = {0, ±1, …, ±(N-1)/2} for N odd, {±1, …, ±N/2} for N even.
    let half = total / 2;
    let mut seen = vec![0usize; (2 * half + 1) as usize];
    for x in a.entries() {
        let admissible = x.abs() <= half && (total % 2 == 1 || x != 0);
        if !admissible {
            out.push(Violation::new(
                Condition::Sma,
                Witness::Entry(x),
                format!("entry {x} is not in the symbol set"),
            ));
            continue;
        }
        seen[(x + half) as usize] += 1;
    }
    for (idx, &c) in seen.iter().enumerate() {
        let x = idx as i64 - half;
        if x == 0 && total % 2 == 0 {
            continue;
        }
        if c != 1 {
            out.push(Violation::new(
                Condition::Sma,
                Witness::Entry(x),
                format!("symbol {x} appears {c} times"),
            ));
        }
    }
    for (i, &s) in a.row_sums().iter().enumerate() {
        if s != 0 {
            out.push(Violation::new(
                Condition::Sma,
                Witness::Row(i + 1),
                format!("row {} sums to {s}", i + 1),
            ));
        }
    }
    for (j, &s) in a.col_sums().iter().enumerate() {
        if s != 0 {
            out.push(Violation::new(
                Condition::Sma,
                Witness::Column(j + 1),
                format!("column {} sums to {s}", j + 1),
            ));
        }
    }
    out
}

/// Signed magic array test.
pub fn check_sma(a: &PFArray) -> bool {
    sma_violations(a).is_empty()
}

/// Runs every check. Integer and SMA findings are listed in `violations`
/// too, so callers filter by condition when they only asked for some.
pub fn verify(a: &PFArray, p: &HeffterParams) -> Result<VerificationReport> {
    let counts = count_violations(a, p)?;
    let support = support_violations(a, p)?;
    let sums = sum_violations(a, p)?;
    let integer = integer_violations(a, p)?;
    let sma = sma_violations(a);
    let report = VerificationReport {
        passes_a1: counts.is_empty(),
        passes_b1: support.is_empty(),
        passes_c1: sums.is_empty(),
        is_integer: integer.is_empty(),
        is_sma: sma.is_empty(),
        violations: [counts, support, sums, integer, sma].concat(),
    };
    Ok(report)
}

/// A parameter-level reason why no array can exist.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Obstruction {
    /// `ms = nk`, `2 <= s <= n`, `2 <= k <= m`, or a divisibility requirement.
    Trivial { detail: String },
    /// The involution cannot appear (v odd, or v and t even), so `λ | nk`.
    LambdaMustDivideNk,
    /// `λ ≡ 2`, `v ≡ 2 (mod 4)` and `t` odd: parity of odd entries fails.
    ParityTwoModFour,
    /// A row or column has two cells, forcing `x, -x` pairs, so `λ` is even.
    TwoCellLinesNeedEvenLambda,
    /// `^2H(n;2)` does not exist.
    SquareTwoFoldPairs,
    /// Integer, `λ` odd, `t | nk/λ`: need `nk/λ ≡ 0` or `nk/λ ≡ -t ≡ ±1 (mod 4)`.
    IntegerResidueMod4,
    /// Integer, `λ` odd, `t = 2nk/λ`: `s` and `k` must be even.
    IntegerEvenLines,
    /// Integer, `λ` odd, `t ≠ 2nk/λ` not dividing `nk/λ`: need `v ≡ 0 (mod 8)`.
    IntegerModulusMod8,
}

/// Every obstruction violated by `p`. An empty list means no obstruction
/// was found, which says nothing about existence.
pub fn necessary_conditions(p: &HeffterParams, integer: bool) -> Vec<Obstruction> {
    let mut out = Vec::new();
    let HeffterParams {
        m,
        n,
        s,
        k,
        lambda,
        t,
    } = *p;
    let trivial = |d: String| Obstruction::Trivial { detail: d };
    if m * s != n * k {
        out.push(trivial(format!("m*s = {} but n*k = {}", m * s, n * k)));
    }
    if !(2 <= s && s <= n) {
        out.push(trivial(format!("need 2 <= s <= n (s = {s}, n = {n})")));
    }
    if !(2 <= k && k <= m) {
        out.push(trivial(format!("need 2 <= k <= m (k = {k}, m = {m})")));
    }
    if lambda == 0 || t == 0 {
        out.push(trivial("lambda and t must be positive".into()));
        return out;
    }
    let nk = n * k;
    if (2 * nk) % lambda != 0 {
        out.push(trivial(format!(
            "lambda = {lambda} does not divide 2nk = {}",
            2 * nk
        )));
        return out;
    }
    let base = 2 * nk / lambda;
    if base % t != 0 {
        out.push(trivial(format!(
            "t = {t} does not divide 2nk/lambda = {base}"
        )));
    }
    let v = base + t;

    if (v % 2 == 1 || t % 2 == 0) && nk % lambda != 0 {
        out.push(Obstruction::LambdaMustDivideNk);
    }
    if lambda % 4 == 2 && v % 4 == 2 && t % 2 == 1 {
        out.push(Obstruction::ParityTwoModFour);
    }
    if (s == 2 || k == 2) && lambda % 2 == 1 {
        out.push(Obstruction::TwoCellLinesNeedEvenLambda);
    }
    if lambda == 2 && s == 2 && k == 2 && m == n {
        out.push(Obstruction::SquareTwoFoldPairs);
    }
    if integer && lambda % 2 == 1 {
        // λ odd and λ | 2nk imply λ | nk.
        let q = nk / lambda;
        if q % t == 0 {
            let ok = q % 4 == 0 || (q % 2 == 1 && (q + t) % 4 == 0);
            if !ok {
                out.push(Obstruction::IntegerResidueMod4);
            }
        }
        if t == 2 * q && (s % 2 == 1 || k % 2 == 1) {
            out.push(Obstruction::IntegerEvenLines);
        }
        if t != 2 * q && q % t != 0 && v % 8 != 0 {
            out.push(Obstruction::IntegerModulusMod8);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn counts_on_fixtures() {
        let d = fixtures::three_fold_4x3();
        assert!(check_counts(&d.array, &d.params).unwrap());
        let d = fixtures::two_fold_6x4();
        assert!(check_counts(&d.array, &d.params).unwrap());
    }

    #[test]
    fn counts_report_the_row() {
        let mut d = fixtures::three_fold_4x3();
        d.array.remove((2, 3));
        assert!(!check_counts(&d.array, &d.params).unwrap());
        let v = count_violations(&d.array, &d.params).unwrap();
        assert!(v.iter().any(|x| x.witness == Witness::Row(2)));
        assert!(v.iter().any(|x| x.witness == Witness::Column(3)));
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let d = fixtures::three_fold_4x3();
        let p = HeffterParams::square(5, 3, 2, 1).unwrap();
        assert!(matches!(
            check_counts(&d.array, &p),
            Err(HeffterError::DimensionMismatch { .. })
        ));
        assert!(check_sums(&d.array, &p).is_err());
        assert!(check_support(&d.array, &p).is_err());
        assert!(check_integer(&d.array, &p).is_err());
    }

    #[test]
    fn sums_modulo_v() {
        // A 2x6 row pair with sum 13 over Z_13.
        let row = [-1i64, 2, -3, 4, 5, 6];
        let a = PFArray::from_cells(
            2,
            6,
            row.iter()
                .enumerate()
                .flat_map(|(j, &x)| [((1, j + 1), x), ((2, j + 1), -x)]),
        )
        .unwrap();
        let p = HeffterParams::new(2, 6, 6, 2, 2, 1).unwrap();
        assert_eq!(p.modulus(), 13);
        assert!(check_sums(&a, &p).unwrap());

        let d = fixtures::five_diagonal_15();
        let row1: Vec<i64> = d.array.row(1).into_iter().map(|(_, x)| x).collect();
        assert_eq!(row1, vec![-15, -29, 64, -51, 31]);
        assert!(check_sums(&d.array, &d.params).unwrap());

        let mut b = d.array.clone();
        let x = b.get((1, 1)).unwrap();
        b.set((1, 1), x + 1).unwrap();
        assert!(!check_sums(&b, &d.params).unwrap());
    }

    #[test]
    fn support_cases() {
        let d = fixtures::four_fold_4x2();
        assert!(check_support(&d.array, &d.params).unwrap());
        let d = fixtures::two_fold_5x3();
        assert_eq!(d.params.modulus(), 16);
        assert_eq!(
            d.array.entries().iter().filter(|&&x| x.abs() == 8).count(),
            1
        );
        assert!(check_support(&d.array, &d.params).unwrap());

        let mut d = fixtures::three_fold_4x3();
        // replace the entry 1 at (1,2) with 5 ∈ J
        d.array.set((1, 2), 5).unwrap();
        assert!(!check_support(&d.array, &d.params).unwrap());
        let v = support_violations(&d.array, &d.params).unwrap();
        assert!(v.iter().any(|x| x.witness == Witness::Element(5)));
    }

    #[test]
    fn involution_witness_needs_invalid_params() {
        // λ odd makes 2nk/λ even, so an even v forces t even and v/2 ∈ J.
        for n in 2..7 {
            for k in 2..=n {
                for lambda in (1..8).step_by(2) {
                    for t in 1..30 {
                        let Ok(p) = HeffterParams::square(n, k, lambda, t) else {
                            continue;
                        };
                        let v = p.modulus();
                        assert!(v % 2 == 1 || p.in_subgroup(v / 2), "{p:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn integer_flags() {
        let d = fixtures::four_fold_4x2();
        assert!(check_integer(&d.array, &d.params).unwrap());
        let d = fixtures::three_fold_4x3();
        assert!(!check_integer(&d.array, &d.params).unwrap());
        let d = fixtures::projected_13x3();
        assert!(!check_integer(&d.array, &d.params).unwrap());
        let v = integer_violations(&d.array, &d.params).unwrap();
        assert!(v
            .iter()
            .any(|x| x.condition == Condition::IntegerRow && x.witness == Witness::Row(1)));
        assert_eq!(d.array.row_sums()[0], -40);
    }

    #[test]
    fn sma_cases() {
        let one = PFArray::from_cells(1, 1, [((1, 1), 0)]).unwrap();
        assert!(check_sma(&one));
        assert!(!check_sma(&fixtures::four_fold_4x2().array));
        assert!(!check_sma(&fixtures::two_fold_6x4().array));
        let sma = PFArray::from_rows(&[vec![Some(1), Some(-1)], vec![Some(-1), Some(1)]]).unwrap();
        assert!(!check_sma(&sma));
        let magic = PFArray::from_rows(&[
            vec![Some(1), Some(-4), Some(3)],
            vec![Some(2), Some(0), Some(-2)],
            vec![Some(-3), Some(4), Some(-1)],
        ])
        .unwrap();
        assert!(check_sma(&magic));
        let mut broken = magic.clone();
        broken.set((2, 2), 5).unwrap();
        assert!(!check_sma(&broken));
    }

    #[test]
    fn obstructions() {
        let none = HeffterParams::square(4, 3, 3, 2).unwrap();
        assert!(necessary_conditions(&none, false).is_empty());
        let p42 = HeffterParams::square(5, 5, 2, 1).unwrap();
        assert_eq!(p42.modulus(), 26);
        assert!(necessary_conditions(&p42, false).contains(&Obstruction::ParityTwoModFour));
        let sq = HeffterParams::square(2, 2, 2, 1).unwrap();
        assert_eq!(
            necessary_conditions(&sq, false),
            vec![Obstruction::SquareTwoFoldPairs]
        );
        let odd = HeffterParams::square(4, 2, 1, 1).unwrap();
        assert!(
            necessary_conditions(&odd, false).contains(&Obstruction::TwoCellLinesNeedEvenLambda)
        );
        let bogus = HeffterParams {
            m: 3,
            n: 4,
            s: 3,
            k: 3,
            lambda: 1,
            t: 1,
        };
        assert!(matches!(
            necessary_conditions(&bogus, false)[0],
            Obstruction::Trivial { .. }
        ));
    }

    #[test]
    fn integer_obstructions_are_gated() {
        // Integer H(n;k) with nk ≡ 1, 2 (mod 4) cannot exist.
        let p = HeffterParams::square(5, 5, 1, 1).unwrap();
        assert!(necessary_conditions(&p, false).is_empty());
        assert_eq!(
            necessary_conditions(&p, true),
            vec![Obstruction::IntegerResidueMod4]
        );
        for (n, k, ok) in [
            (4, 3, true),
            (3, 3, false),
            (7, 3, false),
            (5, 3, true),
            (6, 3, false),
        ] {
            let p = HeffterParams::square(n, k, 1, 1).unwrap();
            assert_eq!(necessary_conditions(&p, true).is_empty(), ok, "n={n} k={k}");
        }
        // t = 2nk/λ with odd s, k.
        let p = HeffterParams::square(3, 3, 1, 18).unwrap();
        assert!(necessary_conditions(&p, true).contains(&Obstruction::IntegerEvenLines));
        // t = 2 does not divide nk = 9; v = 20 is not 0 mod 8.
        let p = HeffterParams::square(3, 3, 1, 2).unwrap();
        assert!(necessary_conditions(&p, true).contains(&Obstruction::IntegerModulusMod8));
    }
}
