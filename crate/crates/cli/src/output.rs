//! Rendering of command results. Output is buffered and written once, so a
//! command either emits a complete document or nothing.

use std::path::Path;

use clap::ValueEnum;
use serde::Serialize;

use hookring::reflection_groups::BnCharacterTable;
use hookring::CharacterTable;

use crate::Failure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
    Csv,
}

pub struct Emitter {
    format: Format,
    buf: String,
    written: bool,
}

#[derive(Serialize)]
struct TableRow<'a> {
    label: String,
    values: &'a [i64],
}

#[derive(Serialize)]
struct TableDoc<'a> {
    group: String,
    classes: Vec<String>,
    centralizers: Vec<String>,
    rows: Vec<TableRow<'a>>,
}

impl Emitter {
    pub fn new(format: Format) -> Self {
        Emitter {
            format,
            buf: String::new(),
            written: false,
        }
    }

    fn json<T: Serialize>(&mut self, value: &T) -> Result<(), Failure> {
        let s = serde_json::to_string_pretty(value).map_err(|e| Failure::Internal(e.to_string()))?;
        self.buf.push_str(&s);
        self.buf.push('\n');
        Ok(())
    }

    /// A result with a human rendering and a JSON rendering.
    pub fn value<T: Serialize>(&mut self, human: &str, value: &T) -> Result<(), Failure> {
        match self.format {
            Format::Human => {
                self.buf.push_str(human);
                self.buf.push('\n');
                Ok(())
            }
            Format::Json => self.json(value),
            Format::Csv => Err(Failure::Usage(
                "--format csv is only available for `table` and `bn` without --experiments".into(),
            )),
        }
    }

    fn table(&mut self, doc: TableDoc<'_>) -> Result<(), Failure> {
        match self.format {
            Format::Json => self.json(&doc),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                let csv_err = |e: csv::Error| Failure::Internal(e.to_string());
                let mut header = vec![String::from("label")];
                header.extend(doc.classes.iter().cloned());
                w.write_record(&header).map_err(csv_err)?;
                for row in &doc.rows {
                    let mut rec = vec![row.label.clone()];
                    rec.extend(row.values.iter().map(|v| v.to_string()));
                    w.write_record(&rec).map_err(csv_err)?;
                }
                let bytes = w.into_inner().map_err(|e| Failure::Internal(e.to_string()))?;
                self.buf.push_str(&String::from_utf8(bytes).map_err(|e| Failure::Internal(e.to_string()))?);
                Ok(())
            }
            Format::Human => {
                let label_w = doc.rows.iter().map(|r| r.label.chars().count()).max().unwrap_or(0).max(5);
                let col_w: Vec<usize> = doc
                    .classes
                    .iter()
                    .enumerate()
                    .map(|(j, c)| {
                        let vals = doc.rows.iter().map(|r| r.values[j].to_string().len()).max().unwrap_or(0);
                        c.chars().count().max(vals)
                    })
                    .collect();
                let pad = |s: &str, w: usize| format!("{}{s}", " ".repeat(w.saturating_sub(s.chars().count())));
                let mut line = pad(&doc.group, label_w);
                for (c, &w) in doc.classes.iter().zip(&col_w) {
                    line.push_str("  ");
                    line.push_str(&pad(c, w));
                }
                self.buf.push_str(line.trim_end());
                self.buf.push('\n');
                for row in &doc.rows {
                    let mut line = pad(&row.label, label_w);
                    for (v, &w) in row.values.iter().zip(&col_w) {
                        line.push_str("  ");
                        line.push_str(&pad(&v.to_string(), w));
                    }
                    self.buf.push_str(&line);
                    self.buf.push('\n');
                }
                let mut line = pad("z", label_w);
                for (z, &w) in doc.centralizers.iter().zip(&col_w) {
                    line.push_str("  ");
                    line.push_str(&pad(z, w));
                }
                self.buf.push_str(&line);
                self.buf.push('\n');
                Ok(())
            }
        }
    }

    pub fn sym_table(&mut self, t: &CharacterTable) -> Result<(), Failure> {
        let doc = TableDoc {
            group: format!("S_{}", t.n()),
            classes: t.partitions().iter().map(|p| p.to_string()).collect(),
            centralizers: t.centralizers().iter().map(|z| z.to_string()).collect(),
            rows: (0..t.len())
                .map(|i| TableRow {
                    label: t.partitions()[i].to_string(),
                    values: t.row(i),
                })
                .collect(),
        };
        self.table(doc)
    }

    pub fn bn_table(&mut self, t: &BnCharacterTable) -> Result<(), Failure> {
        let doc = TableDoc {
            group: format!("B_{}", t.n()),
            classes: t.classes().iter().map(|c| c.to_string()).collect(),
            centralizers: t.centralizers().iter().map(|z| z.to_string()).collect(),
            rows: (0..t.len())
                .map(|i| TableRow {
                    label: t.labels()[i].to_string(),
                    values: t.row(i),
                })
                .collect(),
        };
        self.table(doc)
    }

    /// Writes the buffered document to `path`, or to stdout. Later calls do
    /// nothing.
    pub fn finish(&mut self, path: Option<&Path>) -> std::io::Result<()> {
        if self.written {
            return Ok(());
        }
        self.written = true;
        match path {
            Some(p) => std::fs::write(p, &self.buf),
            None => {
                use std::io::Write;
                let mut out = std::io::stdout().lock();
                out.write_all(self.buf.as_bytes())?;
                out.flush()
            }
        }
    }
}
