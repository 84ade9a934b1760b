//! Text format for right-loop and group tables.
//!
//! ```text
//! # optional comment lines
//! type: group            (group files only)
//! elements: 1 2 3
//! identity: 1            (optional, defaults to the first element)
//! table:
//! 1 2 3
//! 2 3 1
//! 3 1 2
//! ```
//!
//! Row `x`, column `y` holds `x ∘ y`. Tokens are separated by whitespace.

use crate::error::{Error, Result};
use crate::permgroup::GroupTable;
use crate::rightloop::RightLoop;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    RightLoop,
    Group,
}

/// A parsed table file, not yet validated algebraically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableFile {
    pub kind: TableKind,
    pub labels: Vec<String>,
    pub identity: usize,
    pub rows: Vec<Vec<usize>>,
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn parse_table_file(text: &str) -> Result<TableFile> {
    let mut kind = TableKind::RightLoop;
    let mut labels: Option<Vec<String>> = None;
    let mut identity: Option<(usize, String)> = None;
    let mut rows: Option<Vec<Vec<usize>>> = None;
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        last_line = lineno;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rows) = rows.as_mut() {
            let labels = labels.as_ref().expect("elements precede table");
            if rows.len() < labels.len() {
                let row = line
                    .split_whitespace()
                    .map(|tok| {
                        labels
                            .iter()
                            .position(|l| l == tok)
                            .ok_or_else(|| parse_err(lineno, format!("unknown label `{tok}`")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                if row.len() != labels.len() {
                    return Err(parse_err(
                        lineno,
                        format!("row has {} entries, expected {}", row.len(), labels.len()),
                    ));
                }
                rows.push(row);
                continue;
            }
            return Err(parse_err(lineno, "unexpected content after table"));
        }
        let (key, value) = line
            .split_once(':')
            .ok_or_else(|| parse_err(lineno, format!("expected `key: value`, got `{line}`")))?;
        let value = value.trim();
        match key.trim() {
            "type" => {
                kind = match value {
                    "group" => TableKind::Group,
                    "loop" | "right-loop" => TableKind::RightLoop,
                    other => return Err(parse_err(lineno, format!("unknown type `{other}`"))),
                }
            }
            "elements" => {
                let list: Vec<String> = value.split_whitespace().map(str::to_string).collect();
                if list.is_empty() {
                    return Err(parse_err(lineno, "no elements"));
                }
                for (j, l) in list.iter().enumerate() {
                    if list[..j].contains(l) {
                        return Err(parse_err(lineno, format!("duplicate element `{l}`")));
                    }
                }
                labels = Some(list);
            }
            "identity" => identity = Some((lineno, value.to_string())),
            "table" => {
                if labels.is_none() {
                    return Err(parse_err(lineno, "`elements:` must come before `table:`"));
                }
                if !value.is_empty() {
                    return Err(parse_err(lineno, "table rows start on the next line"));
                }
                rows = Some(Vec::new());
            }
            other => return Err(parse_err(lineno, format!("unknown key `{other}`"))),
        }
    }
    let labels = labels.ok_or_else(|| parse_err(last_line, "missing `elements:`"))?;
    let rows = rows.ok_or_else(|| parse_err(last_line, "missing `table:`"))?;
    if rows.len() != labels.len() {
        return Err(parse_err(
            last_line,
            format!("table has {} rows, expected {}", rows.len(), labels.len()),
        ));
    }
    let identity = match identity {
        None => 0,
        Some((lineno, l)) => labels
            .iter()
            .position(|x| *x == l)
            .ok_or_else(|| parse_err(lineno, format!("unknown identity `{l}`")))?,
    };
    Ok(TableFile {
        kind,
        labels,
        identity,
        rows,
    })
}

impl TableFile {
    pub fn to_right_loop(&self) -> Result<RightLoop> {
        RightLoop::validate_table(&self.rows, self.identity, self.labels.clone())
    }

    /// Verifies the group axioms, associativity included.
    pub fn to_group(&self) -> Result<GroupTable> {
        let g = GroupTable::new(&self.rows, self.labels.clone())?;
        if g.identity() != self.identity {
            return Err(Error::NotAGroup(format!(
                "declared identity {} is not the identity ({})",
                self.labels[self.identity],
                g.label(g.identity())
            )));
        }
        Ok(g)
    }
}

pub fn read_right_loop(text: &str) -> Result<RightLoop> {
    parse_table_file(text)?.to_right_loop()
}

pub fn read_group(text: &str) -> Result<GroupTable> {
    parse_table_file(text)?.to_group()
}

fn write_table(kind: TableKind, labels: &[String], identity: usize, rows: &[Vec<usize>]) -> String {
    let width = labels.iter().map(String::len).max().unwrap_or(1);
    let mut out = String::new();
    if kind == TableKind::Group {
        out.push_str("type: group\n");
    }
    out.push_str(&format!("elements: {}\n", labels.join(" ")));
    out.push_str(&format!("identity: {}\n", labels[identity]));
    out.push_str("table:\n");
    for row in rows {
        let cells: Vec<String> = row.iter().map(|&v| format!("{:<width$}", labels[v])).collect();
        out.push_str(cells.join(" ").trim_end());
        out.push('\n');
    }
    out
}

pub fn write_right_loop(t: &RightLoop) -> String {
    write_table(TableKind::RightLoop, t.labels(), 0, &t.rows())
}

pub fn write_group(g: &GroupTable) -> String {
    write_table(TableKind::Group, g.labels(), g.identity(), &g.rows())
}
