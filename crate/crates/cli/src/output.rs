//! Table, CSV and JSON rendering.

use anyhow::Result;
use clap::ValueEnum;
use serde::Serialize;
use wallkit::{format_rational, Wall};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

pub fn json<T: Serialize + ?Sized>(v: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

pub fn csv(header: &[&str], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

/// Left-aligned columns separated by two spaces.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, cell) in width.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&width)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for r in rows {
        out += &line(r.iter().map(String::as_str).collect());
    }
    out
}

pub const WALL_COLUMNS: [&str; 4] = ["zeta", "zeta_sq", "critical_slope", "witnesses"];

pub fn wall_row(w: &Wall) -> Vec<String> {
    let wit: Vec<String> = w
        .witnesses
        .iter()
        .map(|x| format!("i={} F={}", x.i, x.f))
        .collect();
    vec![
        w.zeta.to_string(),
        w.zeta_sq.to_string(),
        format_rational(&w.critical_slope),
        wit.join("; "),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_pads_columns() {
        let t = table(&["a", "bb"], &[vec!["xyz".into(), "1".into()]]);
        assert_eq!(t, "a    bb\nxyz  1\n");
    }

    #[test]
    fn csv_quotes_when_needed() {
        let c = csv(&["x"], &[vec!["a,b".into()]]).unwrap();
        assert_eq!(c, "x\n\"a,b\"\n");
    }
}
