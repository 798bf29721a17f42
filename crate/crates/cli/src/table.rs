//! Size comparison tables.

use std::thread;
use std::time::Instant;

use anyhow::{bail, Result};
use clap::ValueEnum;

use cocoa_kit::cocoa::cocoa_size;
use cocoa_kit::families::*;
use cocoa_kit::lowerbound::certify_lower_bound;
use cocoa_kit::ops::{cocoa_to_dpw, dpw_equivalent, mh_determinize, residual_partition, Verdict};
use cocoa_kit::{Automaton, Cocoa};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Theorem1,
    Theorem2,
    Prop1,
    Prop4,
}

impl Which {
    pub fn default_kmax(self) -> usize {
        match self {
            Which::Theorem2 => 2,
            _ => 4,
        }
    }

    fn limit(self) -> usize {
        match self {
            Which::Theorem2 => 3,
            Which::Theorem1 => 6,
            Which::Prop1 | Which::Prop4 => 8,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Which::Theorem1 => "theorem1",
            Which::Theorem2 => "theorem2",
            Which::Prop1 => "prop1",
            Which::Prop4 => "prop4",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Text,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub family: String,
    pub k: usize,
    pub representation: String,
    pub states: usize,
    pub colors: Option<usize>,
    /// For chains, the residual count of member `k`.
    pub residuals: Option<usize>,
    pub note: String,
    pub wall_ms: u128,
}

#[derive(Debug, Clone, Default)]
pub struct SizeReport {
    pub rows: Vec<Row>,
}

fn residuals(aut: &Automaton) -> Result<usize> {
    let det = if aut.is_deterministic() {
        aut.clone()
    } else {
        mh_determinize(aut)?
    };
    Ok(residual_partition(&det.reachable_restrict())?.class_count())
}

fn row(family: &str, k: usize, representation: &str, states: usize) -> Row {
    Row {
        family: family.to_string(),
        k,
        representation: representation.to_string(),
        states,
        colors: None,
        residuals: None,
        note: String::new(),
        wall_ms: 0,
    }
}

fn dpw_row(family: &str, k: usize, representation: &str, dpw: &Automaton) -> Result<Row> {
    let r = dpw.reachable_restrict();
    Ok(Row {
        colors: Some(r.colors().len()),
        residuals: Some(residuals(&r)?),
        ..row(family, k, representation, r.state_count())
    })
}

fn chain_row(family: &str, k: usize, representation: &str, chain: &Cocoa) -> Result<Row> {
    Ok(Row {
        colors: Some(chain.len() + 1),
        residuals: Some(residuals(&chain.members()[k - 1])?),
        ..row(family, k, representation, cocoa_size(chain))
    })
}

/// Levels where the two chains disagree, with a separating word each.
fn differences(a: &Cocoa, b: &Cocoa) -> Result<String> {
    let mut notes = Vec::new();
    for (u, (x, y)) in a.members().iter().zip(b.members()).enumerate() {
        if let Verdict::Fails(w) = dpw_equivalent(x, y)? {
            notes.push(format!(
                "level {} differs on {}",
                u + 1,
                w.to_text(a.alphabet())
            ));
        }
    }
    Ok(notes.join("; "))
}

fn rows_for(which: Which, k: usize) -> Result<Vec<Row>> {
    let family = which.name();
    Ok(match which {
        Which::Theorem1 => {
            let chain = cocoa_c(k)?;
            let dpw = cocoa_to_dpw(&chain)?;
            let cert = certify_lower_bound(&dpw, k)?;
            vec![
                chain_row(family, k, "cocoa", &chain)?,
                dpw_row(family, k, "dpw", &dpw)?,
                row(family, k, "lower-bound", cert.bound),
            ]
        }
        Which::Theorem2 => {
            let full = cocoa_theorem2(k)?;
            let nd = cocoa_theorem2_nondominated(k)?;
            let note = differences(&full, &nd)?;
            vec![
                chain_row(family, k, "cocoa", &full)?,
                Row {
                    note,
                    ..chain_row(family, k, "cocoa-nondominated", &nd)?
                },
                dpw_row(family, k, "dpw", &cocoa_to_dpw(&full)?)?,
            ]
        }
        Which::Prop1 => vec![
            chain_row(family, k, "cocoa", &prop1_cocoa(k)?)?,
            dpw_row(family, k, "dpw", &prop1_dpw(k)?)?,
        ],
        Which::Prop4 => vec![
            chain_row(family, k, "cocoa", &chain_l(k)?)?,
            dpw_row(family, k, "dpw-p", &dpw_p(k)?)?,
            dpw_row(family, k, "dpw-phat", &dpw_phat(k)?)?,
        ],
    })
}

/// Builds the report for `k = 1..=kmax`, one thread per `k`.
pub fn build(which: Which, kmax: usize) -> Result<SizeReport> {
    if kmax == 0 || kmax > which.limit() {
        bail!(
            "--kmax for {} must lie in 1..={}",
            which.name(),
            which.limit()
        );
    }
    let per_k: Vec<Result<Vec<Row>>> = thread::scope(|s| {
        let handles: Vec<_> = (1..=kmax)
            .map(|k| {
                s.spawn(move || {
                    let start = Instant::now();
                    let mut rows = rows_for(which, k)?;
                    let ms = start.elapsed().as_millis();
                    for r in &mut rows {
                        r.wall_ms = ms;
                    }
                    Ok(rows)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("table worker panicked"))
            .collect()
    });
    let mut rows = Vec::new();
    for r in per_k {
        rows.extend(r?);
    }
    rows.sort_by(|a, b| {
        (&a.family, a.k, &a.representation).cmp(&(&b.family, b.k, &b.representation))
    });
    Ok(SizeReport { rows })
}

fn opt(v: Option<usize>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

impl SizeReport {
    fn header(timing: bool) -> Vec<&'static str> {
        let mut h = vec![
            "family",
            "k",
            "representation",
            "states",
            "colors",
            "residuals",
            "note",
        ];
        if timing {
            h.push("wall_ms");
        }
        h
    }

    fn records(&self, timing: bool) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|r| {
                let mut rec = vec![
                    r.family.clone(),
                    r.k.to_string(),
                    r.representation.clone(),
                    r.states.to_string(),
                    opt(r.colors),
                    opt(r.residuals),
                    r.note.clone(),
                ];
                if timing {
                    rec.push(r.wall_ms.to_string());
                }
                rec
            })
            .collect()
    }

    pub fn to_csv(&self, timing: bool) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(Self::header(timing))?;
        for rec in self.records(timing) {
            w.write_record(&rec)?;
        }
        Ok(String::from_utf8(w.into_inner()?)?)
    }

    /// Space-aligned columns; empty cells print as `-`.
    pub fn to_text(&self, timing: bool) -> String {
        let header: Vec<String> = Self::header(timing).into_iter().map(String::from).collect();
        let mut table = vec![header];
        for rec in self.records(timing) {
            table.push(
                rec.into_iter()
                    .map(|c| if c.is_empty() { "-".into() } else { c })
                    .collect(),
            );
        }
        let cols = table[0].len();
        let widths: Vec<usize> = (0..cols)
            .map(|c| {
                table
                    .iter()
                    .map(|r| r[c].chars().count())
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut out = String::new();
        for r in &table {
            let cells: Vec<String> = r
                .iter()
                .zip(&widths)
                .map(|(cell, &w)| format!("{cell:<w$}"))
                .collect();
            out.push_str(cells.join("  ").trim_end());
            out.push('\n');
        }
        out
    }
}
