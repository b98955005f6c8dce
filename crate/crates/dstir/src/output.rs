//! Output rendering shared by all subcommands.
//!
//! Every command produces a column layout plus rows of already-rendered
//! strings; this module serializes them as CSV (header row, no quoting —
//! the value grammar contains no commas, quotes, or newlines), as a JSON
//! array of row objects, or as an aligned human-readable table. All
//! three are deterministic: identical invocations emit identical bytes.

use std::io::Write;

/// Output format selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Pretty,
}

/// A rectangular document: column names and rendered cells.
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Table {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn write_csv(&self, out: &mut impl Write) -> std::io::Result<()> {
        writeln!(out, "{}", self.columns.join(","))?;
        for row in &self.rows {
            debug_assert!(row.iter().all(|c| !c.contains([',', '"', '\n'])));
            writeln!(out, "{}", row.join(","))?;
        }
        Ok(())
    }

    pub fn write_pretty(&self, out: &mut impl Write) -> std::io::Result<()> {
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.chars().count()).collect();
        for row in &self.rows {
            for (i, cell) in row.iter().enumerate() {
                widths[i] = widths[i].max(cell.chars().count());
            }
        }
        let line = |cells: &[String], out: &mut dyn Write| -> std::io::Result<()> {
            let mut rendered = String::new();
            for (i, cell) in cells.iter().enumerate() {
                if i > 0 {
                    rendered.push_str("  ");
                }
                rendered.push_str(cell);
                let pad = widths[i].saturating_sub(cell.chars().count());
                if i + 1 < cells.len() {
                    rendered.push_str(&" ".repeat(pad));
                }
            }
            writeln!(out, "{}", rendered.trim_end())
        };
        let header: Vec<String> = self.columns.iter().map(|c| c.to_string()).collect();
        line(&header, out)?;
        for row in &self.rows {
            line(row, out)?;
        }
        Ok(())
    }
}

/// Emits a JSON document followed by a newline.
pub fn write_json(value: &serde_json::Value, out: &mut impl Write) -> std::io::Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(value)?)
}
