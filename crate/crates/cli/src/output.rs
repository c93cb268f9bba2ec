use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use anyhow::{Context as _, Result};
use serde_json::{Map, Value};

use crate::{Cli, Format};

pub struct Context {
    pub digits: u32,
    pub format: Format,
    out: Option<PathBuf>,
}

impl Context {
    pub fn new(cli: &Cli) -> Self {
        Context {
            digits: cli.digits,
            format: cli.format,
            out: cli.out.clone(),
        }
    }

    pub fn extended(&self) -> bool {
        self.digits > 15
    }

    pub fn writer(&self) -> Result<Box<dyn Write>> {
        Ok(match &self.out {
            Some(p) => Box::new(io::BufWriter::new(
                File::create(p).with_context(|| format!("cannot create {}", p.display()))?,
            )),
            None => Box::new(io::stdout().lock()),
        })
    }

    /// Writes a table in the configured format.
    pub fn emit_table(&self, table: &Table) -> Result<()> {
        let mut w = self.writer()?;
        match self.format {
            Format::Csv => table.write_csv(&mut w)?,
            Format::Json => {
                serde_json::to_writer_pretty(&mut w, &table.to_json())?;
                writeln!(w)?;
            }
            Format::Text => table.write_text(&mut w)?,
        }
        w.flush()?;
        Ok(())
    }
}

/// A titled table of string cells.
pub struct Table {
    pub title: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(title: &str, headers: &[&str]) -> Self {
        Table {
            title: title.to_string(),
            headers: headers.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn write_csv(&self, w: &mut dyn Write) -> Result<()> {
        let mut csv = csv::Writer::from_writer(w);
        csv.write_record(&self.headers)?;
        for r in &self.rows {
            csv.write_record(r)?;
        }
        csv.flush()?;
        Ok(())
    }

    pub fn write_text(&self, w: &mut dyn Write) -> Result<()> {
        let widths: Vec<usize> = (0..self.headers.len())
            .map(|c| {
                self.rows
                    .iter()
                    .map(|r| r[c].len())
                    .chain([self.headers[c].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |cells: &[String]| {
            cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        };
        writeln!(w, "{}", line(&self.headers))?;
        for r in &self.rows {
            writeln!(w, "{}", line(r))?;
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let obj: Map<String, Value> = self
                    .headers
                    .iter()
                    .cloned()
                    .zip(r.iter().map(|c| Value::String(c.clone())))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        serde_json::json!({ "table": self.title, "rows": Value::Array(rows) })
    }
}

/// Shortest round-trip text for a complex double, `re±imi`.
pub fn c64_roundtrip(re: f64, im: f64) -> String {
    let sign = if im.is_sign_negative() { '-' } else { '+' };
    format!("{re:e}{sign}{:e}i", im.abs())
}
