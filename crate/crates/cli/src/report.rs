//! The report every command produces, and its three renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use anyhow::Result;
use clap::ValueEnum;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
    /// Free-form lines shown after the table (presentations, notes).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub checks: Vec<Check>,
    /// Seconds; only set with `--timing`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time: Option<f64>,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        RunReport {
            command: command.to_string(),
            ..Default::default()
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) {
        self.parameters.insert(key.to_string(), value.to_string());
    }

    pub fn headers(&mut self, h: &[&str]) {
        self.headers = h.iter().map(|s| s.to_string()).collect();
    }

    pub fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool) {
        self.checks.push(Check {
            name: name.into(),
            passed,
        });
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render(&self, format: Format) -> Result<String> {
        Ok(match format {
            Format::Json => serde_json::to_string_pretty(self)? + "\n",
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.headers)?;
                for r in &self.rows {
                    w.write_record(r)?;
                }
                String::from_utf8(w.into_inner()?)?
            }
            Format::Table => self.table(),
        })
    }

    fn table(&self) -> String {
        let mut s = format!("{}\n", self.command);
        for (k, v) in &self.parameters {
            let _ = writeln!(s, "  {k}: {v}");
        }
        if !self.headers.is_empty() {
            let mut widths: Vec<usize> = self.headers.iter().map(String::len).collect();
            for r in &self.rows {
                for (i, c) in r.iter().enumerate() {
                    if i < widths.len() {
                        widths[i] = widths[i].max(c.len());
                    }
                }
            }
            let line = |cells: &[String]| {
                let parts: Vec<String> = cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:<w$}"))
                    .collect();
                parts.join("  ").trim_end().to_string()
            };
            s.push('\n');
            let _ = writeln!(s, "{}", line(&self.headers));
            let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
            let _ = writeln!(s, "{}", rule.join("  "));
            for r in &self.rows {
                let _ = writeln!(s, "{}", line(r));
            }
        }
        if !self.notes.is_empty() {
            s.push('\n');
            for n in &self.notes {
                let _ = writeln!(s, "{n}");
            }
        }
        if !self.checks.is_empty() {
            s.push('\n');
            for c in &self.checks {
                let tag = if c.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(s, "[{tag}] {}", c.name);
            }
        }
        if let Some(t) = self.wall_time {
            let _ = writeln!(s, "\nwall time: {t:.3} s");
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> RunReport {
        let mut r = RunReport::new("demo");
        r.param("n", 6);
        r.headers(&["a", "long header"]);
        r.row(vec!["1".into(), "x,y".into()]);
        r.check("ok", true);
        r
    }

    #[test]
    fn csv_quotes_commas() {
        let out = sample().render(Format::Csv).unwrap();
        assert_eq!(out, "a,long header\n1,\"x,y\"\n");
    }

    #[test]
    fn table_aligns_columns() {
        let out = sample().render(Format::Table).unwrap();
        assert!(out.contains("a  long header\n-  -----------\n1  x,y\n"));
        assert!(out.contains("[PASS] ok"));
    }

    #[test]
    fn json_omits_wall_time_by_default() {
        let out = sample().render(Format::Json).unwrap();
        assert!(!out.contains("wall_time"));
        assert!(out.contains("\"command\": \"demo\""));
    }
}
