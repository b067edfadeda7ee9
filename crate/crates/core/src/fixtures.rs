//! Worked examples shipped with the repository (see `fixtures/README.md`
//! for where each one comes from).

use crate::io::ArrayDoc;

macro_rules! fixture {
    ($name:literal) => {
        include_str!(concat!("../../../fixtures/", $name, ".json"))
    };
}

/// `(name, canonical JSON)` for every bundled fixture.
pub const ALL: &[(&str, &str)] = &[
    ("ex17a", fixture!("ex17a")),
    ("ex17b", fixture!("ex17b")),
    ("ex18", fixture!("ex18")),
    ("ex19", fixture!("ex19")),
    ("ex46a", fixture!("ex46a")),
    ("ex46b", fixture!("ex46b")),
    ("ex59", fixture!("ex59")),
    ("h5x3_search", fixture!("h5x3_search")),
];

pub fn load(name: &str) -> Option<ArrayDoc> {
    ALL.iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| ArrayDoc::from_json(text).expect("bundled fixture parses"))
}

pub fn all() -> Vec<(&'static str, ArrayDoc)> {
    ALL.iter()
        .map(|(n, text)| {
            (
                *n,
                ArrayDoc::from_json(text).expect("bundled fixture parses"),
            )
        })
        .collect()
}

/// `³H₂(4;3)` over `Z_10`.
pub fn three_fold_4x3() -> ArrayDoc {
    load("ex17a").unwrap()
}

/// `⁴H₄(4;2)` over `Z_8`.
pub fn four_fold_4x2() -> ArrayDoc {
    load("ex17b").unwrap()
}

/// Integer `²H₁(5;3)` over `Z_16`.
pub fn two_fold_5x3() -> ArrayDoc {
    load("ex18").unwrap()
}

/// Integer `²H(6;4)` over `Z_25`.
pub fn two_fold_6x4() -> ArrayDoc {
    load("ex19").unwrap()
}

/// Integer `H₂(13;3)` over `Z_80`.
pub fn relative_13x3() -> ArrayDoc {
    load("ex46a").unwrap()
}

/// Its reduction modulo 40: a non-integer `²H(13;3)`.
pub fn projected_13x3() -> ArrayDoc {
    load("ex46b").unwrap()
}

/// Globally simple cyclically 5-diagonal `²H(15;5)` over `Z_76`.
pub fn five_diagonal_15() -> ArrayDoc {
    load("ex59").unwrap()
}

/// Search-found cyclically 3-diagonal `²H(5;3)` on `D₅, D₁, D₂`.
pub fn searched_5x3() -> ArrayDoc {
    load("h5x3_search").unwrap()
}
