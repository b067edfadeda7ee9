//! Plain-text views for `--pretty`.

use std::fmt::Write;

use heffter::orderings::{partial_sums, Line};
use heffter::{ArrayDoc, OrderingPair, VerificationReport};
use serde_json::Value;

/// Right-aligned columns separated by two spaces.
pub fn table(header: &[String], rows: &[Vec<String>]) -> String {
    let cols = header.len();
    let mut width = header.iter().map(|h| h.chars().count()).collect::<Vec<_>>();
    for row in rows {
        for (w, cell) in width.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for row in std::iter::once(header).chain(rows.iter().map(Vec::as_slice)) {
        let line: Vec<String> = (0..cols)
            .map(|i| {
                format!(
                    "{:>w$}",
                    row.get(i).map(String::as_str).unwrap_or(""),
                    w = width[i]
                )
            })
            .collect();
        writeln!(out, "{}", line.join("  ").trim_end()).unwrap();
    }
    out
}

pub fn grid(doc: &ArrayDoc) -> String {
    let p = doc.params;
    let a = &doc.array;
    let mut out = format!(
        "^{}H_{}({},{};{},{}) over Z_{}\n",
        p.lambda,
        p.t,
        p.m,
        p.n,
        p.s,
        p.k,
        p.modulus()
    );
    let header: Vec<String> = std::iter::once(String::new())
        .chain((1..=a.cols()).map(|j| j.to_string()))
        .collect();
    let rows: Vec<Vec<String>> = (1..=a.rows())
        .map(|i| {
            std::iter::once(i.to_string())
                .chain((1..=a.cols()).map(|j| a.get((i, j)).map_or(".".into(), |x| x.to_string())))
                .collect()
        })
        .collect();
    out += &table(&header, &rows);
    out
}

pub fn report(r: &VerificationReport) -> String {
    let mut out = String::new();
    for (name, ok) in [
        ("a1", r.passes_a1),
        ("b1", r.passes_b1),
        ("c1", r.passes_c1),
        ("integer", r.is_integer),
        ("sma", r.is_sma),
    ] {
        writeln!(out, "{name:<8}{}", if ok { "pass" } else { "fail" }).unwrap();
    }
    for v in &r.violations {
        writeln!(out, "  {}", v.detail).unwrap();
    }
    out
}

pub fn orderings(doc: &ArrayDoc, op: &OrderingPair) -> String {
    let v = doc.params.modulus();
    let rows: Vec<Vec<String>> = op
        .lines()
        .map(|line| {
            let entries = op.line_entries(&doc.array, line);
            let name = match line {
                Line::Row(i) => format!("row {i}"),
                Line::Column(j) => format!("col {j}"),
            };
            let join = |xs: Vec<String>| xs.join(" ");
            vec![
                name,
                join(entries.iter().map(i64::to_string).collect()),
                join(
                    partial_sums(&entries, v)
                        .iter()
                        .map(usize::to_string)
                        .collect(),
                ),
            ]
        })
        .collect();
    let header = ["line", "entries", "partial sums"].map(String::from);
    table(&header, &rows)
}

fn seqs(v: &Value) -> Vec<String> {
    v.as_array()
        .map(|xs| xs.iter().map(|x| format!("{x}")).collect())
        .unwrap_or_default()
}

pub fn decomposition(v: &Value) -> String {
    let mut out = format!(
        "{} of Z_{} (t = {}, lambda = {})\n",
        v["which"].as_str().unwrap_or(""),
        v["v"],
        v["t"],
        v["lambda"]
    );
    for b in seqs(&v["blocks"]) {
        writeln!(out, "  {b}").unwrap();
    }
    writeln!(out, "difference family: {}", v["difference_family"]).unwrap();
    if !v["cycles"].is_null() {
        writeln!(
            out,
            "developed: {} cycles, decomposition: {}",
            v["cycles"].as_array().map_or(0, Vec::len),
            v["decomposition"]
        )
        .unwrap();
    }
    out
}

pub fn summary(v: &Value) -> String {
    let keys = [
        "V",
        "E",
        "F",
        "chi",
        "genus",
        "row_faces",
        "col_faces",
        "degenerate_faces",
        "two_colorable",
    ];
    let mut out = String::new();
    for k in keys {
        writeln!(out, "{k:<18}{}", v[k]).unwrap();
    }
    if let Some(faces) = v["faces"].as_array() {
        for f in faces {
            writeln!(
                out,
                "  {:<7}{}",
                f["color"].as_str().unwrap_or(""),
                f["vertices"]
            )
            .unwrap();
        }
    }
    out
}

pub fn sweep(rows: &[Value], checks: &[&str]) -> String {
    let header: Vec<String> = std::iter::once("n")
        .chain(checks.iter().copied())
        .chain(["ms"])
        .map(String::from)
        .collect();
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            let mut line = vec![r["n"].to_string()];
            for c in checks {
                line.push(match r["checks"][c].as_bool() {
                    Some(true) => "pass".into(),
                    Some(false) => "FAIL".into(),
                    None if r["error"].is_string() => "error".into(),
                    None => "-".into(),
                });
            }
            line.push(r["ms"].to_string());
            line
        })
        .collect();
    table(&header, &body)
}
