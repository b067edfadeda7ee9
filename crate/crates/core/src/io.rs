//! Canonical JSON and CSV encodings.
//!
//! JSON layout:
//! `{"params":{"m":..,"n":..,"s":..,"k":..,"lambda":..,"t":..},"cells":[{"r":..,"c":..,"v":..},...]}`
//! with cells sorted by `(r, c)`. The CSV grid has `m` lines of `n`
//! comma-separated fields, an empty field meaning an empty cell; it
//! carries no parameters, so `λ` and `t` are supplied separately.

use serde::{Deserialize, Serialize};

use crate::array::{HeffterParams, PFArray};
use crate::error::{HeffterError, Result};

/// An array together with the parameters it claims to realise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrayDoc {
    pub params: HeffterParams,
    pub array: PFArray,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCell {
    r: usize,
    c: usize,
    v: i64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDoc {
    params: HeffterParams,
    cells: Vec<RawCell>,
}

impl ArrayDoc {
    pub fn new(params: HeffterParams, array: PFArray) -> Self {
        ArrayDoc { params, array }
    }

    /// Compact canonical JSON (no trailing newline).
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.raw()).expect("plain data always serialises")
    }

    pub fn to_value(&self) -> serde_json::Value {
        serde_json::to_value(self.raw()).expect("plain data always serialises")
    }

    fn raw(&self) -> RawDoc {
        RawDoc {
            params: self.params,
            cells: self
                .array
                .iter()
                .map(|((r, c), v)| RawCell { r, c, v })
                .collect(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawDoc =
            serde_json::from_str(text).map_err(|e| HeffterError::Parse(format!("json: {e}")))?;
        let (m, n) = (raw.params.m, raw.params.n);
        if m == 0 || n == 0 {
            return Err(HeffterError::Parse(format!(
                "params: array dimensions must be positive, got {m}x{n}"
            )));
        }
        let mut array = PFArray::new(m, n);
        for (idx, cell) in raw.cells.iter().enumerate() {
            array.insert((cell.r, cell.c), cell.v).map_err(|e| {
                HeffterError::Parse(format!(
                    "cells[{idx}] (r={}, c={}, v={}): {e}",
                    cell.r, cell.c, cell.v
                ))
            })?;
        }
        Ok(ArrayDoc {
            params: raw.params,
            array,
        })
    }

    /// Reads a CSV grid; `m`, `n` come from the grid shape and `s`, `k`
    /// from the filled counts of the first row and first column.
    pub fn from_csv(text: &str, lambda: usize, t: usize) -> Result<Self> {
        let array = parse_csv(text)?;
        let s = array.row(1).len();
        let k = array.col(1).len();
        let params = HeffterParams {
            m: array.rows(),
            n: array.cols(),
            s,
            k,
            lambda,
            t,
        };
        Ok(ArrayDoc { params, array })
    }

    pub fn to_csv(&self) -> String {
        to_csv(&self.array)
    }
}

pub fn parse_csv(text: &str) -> Result<PFArray> {
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let mut row = Vec::new();
        for (col, field) in line.split(',').enumerate() {
            let field = field.trim();
            if field.is_empty() {
                row.push(None);
            } else {
                let v = field.parse::<i64>().map_err(|_| {
                    HeffterError::Parse(format!(
                        "csv line {}, field {}: `{field}` is not an integer",
                        lineno + 1,
                        col + 1
                    ))
                })?;
                row.push(Some(v));
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(HeffterError::Parse("csv: no rows".into()));
    }
    PFArray::from_rows(&rows)
}

pub fn to_csv(a: &PFArray) -> String {
    let mut out = String::new();
    for i in 1..=a.rows() {
        let fields: Vec<String> = (1..=a.cols())
            .map(|j| a.get((i, j)).map(|v| v.to_string()).unwrap_or_default())
            .collect();
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}
