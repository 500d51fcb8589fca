use std::fmt::Write as _;

use dkp_core::weyl::{format_word, BruhatInterval};
use dkp_core::{StratumRecord, Weight};
use serde::{Deserialize, Serialize};

use crate::args::{Format, RunSpec};

/// JSON form of a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    #[serde(rename = "type")]
    pub type_name: String,
    pub w_word: Vec<usize>,
    pub rows: Vec<RowJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowJson {
    pub y_word: Vec<usize>,
    pub len: usize,
    pub stratum_dim: usize,
    pub richardson_dim: usize,
    pub leaf_dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e1_dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<Vec<i64>>>,
}

fn headers(spec: &RunSpec) -> Vec<&'static str> {
    let mut h = vec!["y_word", "len", "stratum_dim", "richardson_dim", "leaf_dim"];
    if spec.double {
        h.push("e1_dim");
    }
    if spec.basis {
        h.push("basis");
    }
    h
}

/// `[[1,-1],[0,2]]`, or `[]` for an empty basis.
pub fn format_basis(basis: &[Weight]) -> String {
    let vecs: Vec<String> = basis
        .iter()
        .map(|v| {
            let coords: Vec<String> = v.0.iter().map(i64::to_string).collect();
            format!("[{}]", coords.join(","))
        })
        .collect();
    format!("[{}]", vecs.join(","))
}

fn cells(r: &StratumRecord, spec: &RunSpec) -> Vec<String> {
    let rank = r.y.root_system().rank();
    let mut row = vec![
        format_word(r.y.word(), rank),
        r.length_y.to_string(),
        r.stratum_dim.to_string(),
        r.richardson_dim.to_string(),
        r.leaf_dim.to_string(),
    ];
    if spec.double {
        row.push(r.double_dim.to_string());
    }
    if spec.basis {
        row.push(format_basis(&r.lattice_basis));
    }
    row
}

/// Columns separated by ` | `, each padded to its widest cell.
pub fn aligned_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect();
        padded.join(" | ").trim_end().to_string()
    };
    let mut out = String::new();
    out.push_str(&line(header.to_vec()));
    out.push('\n');
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    out.push_str(&rule.join("-+-"));
    out.push('\n');
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
        out.push('\n');
    }
    out
}

pub fn report_json(records: &[StratumRecord], spec: &RunSpec) -> ReportJson {
    ReportJson {
        type_name: spec.type_name(),
        w_word: spec.w.clone(),
        rows: records
            .iter()
            .map(|r| RowJson {
                y_word: r.y.word().to_vec(),
                len: r.length_y,
                stratum_dim: r.stratum_dim,
                richardson_dim: r.richardson_dim,
                leaf_dim: r.leaf_dim,
                e1_dim: spec.double.then_some(r.double_dim),
                basis: spec
                    .basis
                    .then(|| r.lattice_basis.iter().map(|v| v.0.clone()).collect()),
            })
            .collect(),
    }
}

/// Renders the rows in the requested format.
pub fn render_report(records: &[StratumRecord], spec: &RunSpec) -> Vec<u8> {
    let header = headers(spec);
    let rows: Vec<Vec<String>> = records.iter().map(|r| cells(r, spec)).collect();
    match spec.format {
        Format::Table => aligned_table(&header, &rows).into_bytes(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report_json(records, spec))
                .expect("report serializes");
            s.push('\n');
            s.into_bytes()
        }
        Format::Csv => {
            let mut wtr = csv::Writer::from_writer(Vec::new());
            wtr.write_record(&header).expect("write to memory");
            for row in &rows {
                wtr.write_record(row).expect("write to memory");
            }
            wtr.into_inner().expect("flush to memory")
        }
    }
}

/// Hasse diagram of the interval in DOT. Nodes follow the interval order,
/// edges are sorted by endpoint positions.
pub fn render_dot(interval: &BruhatInterval) -> Vec<u8> {
    let rank = interval.top.root_system().rank();
    let label = |i: usize| format_word(interval.elements[i].word(), rank);
    let mut edges = interval.covers.clone();
    edges.sort_unstable();
    let mut out = String::from("digraph bruhat {\n");
    for i in 0..interval.elements.len() {
        writeln!(out, "  \"{}\";", label(i)).expect("write to string");
    }
    for (a, b) in edges {
        writeln!(out, "  \"{}\" -> \"{}\";", label(a), label(b)).expect("write to string");
    }
    out.push_str("}\n");
    out.into_bytes()
}
