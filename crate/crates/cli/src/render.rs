//! Output envelope and the table, JSON and CSV renderings.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// Everything a command produced, independent of the output format.
#[derive(Debug, Clone)]
pub struct Output {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub complete: bool,
    pub text: String,
    pub csv_header: Vec<String>,
    pub csv_rows: Vec<Vec<String>>,
    /// A verification found a mismatch.
    pub mismatch: bool,
}

impl Output {
    pub fn new(command: &str, inputs: Value, result: Value) -> Self {
        Output {
            command: command.into(),
            inputs,
            result,
            complete: true,
            text: String::new(),
            csv_header: Vec::new(),
            csv_rows: Vec::new(),
            mismatch: false,
        }
    }

    pub fn complete(mut self, complete: bool) -> Self {
        self.complete = complete;
        self
    }

    pub fn text(mut self, text: String) -> Self {
        self.text = text;
        self
    }

    pub fn csv<S: ToString>(mut self, header: &[&str], rows: Vec<Vec<S>>) -> Self {
        self.csv_header = header.iter().map(|s| s.to_string()).collect();
        self.csv_rows = rows
            .into_iter()
            .map(|r| r.into_iter().map(|c| c.to_string()).collect())
            .collect();
        self
    }

    pub fn envelope(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "complete": self.complete,
            "version": env!("CARGO_PKG_VERSION"),
        })
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => {
                let mut s = self.text.clone();
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                s
            }
            Format::Json => serde_json::to_string_pretty(&self.envelope()).unwrap() + "\n",
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.csv_header).unwrap();
                for r in &self.csv_rows {
                    w.write_record(r).unwrap();
                }
                String::from_utf8(w.into_inner().unwrap()).unwrap()
            }
        }
    }
}

/// A size set in interval notation: `{10} ∪ [12,20]`.
pub fn size_set(sizes: &[usize]) -> String {
    if sizes.is_empty() {
        return "∅".into();
    }
    let mut parts = Vec::new();
    let mut i = 0;
    while i < sizes.len() {
        let mut j = i;
        while j + 1 < sizes.len() && sizes[j + 1] == sizes[j] + 1 {
            j += 1;
        }
        if i == j {
            parts.push(format!("{{{}}}", sizes[i]));
        } else {
            parts.push(format!("[{},{}]", sizes[i], sizes[j]));
        }
        i = j + 1;
    }
    parts.join(" ∪ ")
}

/// Left-aligned columns separated by two spaces.
pub fn columns(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let mut out = String::new();
    let line = |cells: Vec<&str>, out: &mut String| {
        let n = cells.len();
        for (i, c) in cells.into_iter().enumerate() {
            if i + 1 == n {
                out.push_str(c);
            } else {
                let _ = write!(out, "{:<w$}  ", c, w = widths[i]);
            }
        }
        out.push('\n');
    };
    line(header.to_vec(), &mut out);
    for r in rows {
        line(r.iter().map(String::as_str).collect(), &mut out);
    }
    out
}

/// Exact JSON number from any decimal string.
pub fn number(digits: impl ToString) -> Value {
    serde_json::from_str(&digits.to_string()).expect("decimal integer")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_notation() {
        assert_eq!(size_set(&[7, 9, 10]), "{7} ∪ [9,10]");
        assert_eq!(size_set(&[10, 12, 13, 14, 20]), "{10} ∪ [12,14] ∪ {20}");
        assert_eq!(size_set(&[5]), "{5}");
        assert_eq!(size_set(&[]), "∅");
    }

    #[test]
    fn csv_quotes_set_literals() {
        let o = Output::new("x", json!({}), json!({})).csv(&["size", "witness"], vec![vec!["3", "{0,1,2}"]]);
        assert_eq!(o.render(Format::Csv), "size,witness\n3,\"{0,1,2}\"\n");
    }

    #[test]
    fn big_numbers_stay_exact() {
        let v = number("45274257328051640582702088538742081937252294837706668420660");
        assert_eq!(v.to_string(), "45274257328051640582702088538742081937252294837706668420660");
    }

    #[test]
    fn aligned_columns() {
        let t = columns(&["size", "witness"], &[vec!["7".into(), "{0,1,2}".into()], vec!["10".into(), "{0,1,4}".into()]]);
        assert_eq!(t, "size  witness\n7     {0,1,2}\n10    {0,1,4}\n");
    }
}
