//! Records and their CSV / JSON serializations. Floats are written with 17
//! significant digits so that both formats round-trip exactly.

use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

use crate::error::CliResult;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    #[default]
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(u64),
    Bool(bool),
    Text(String),
    Missing,
}

/// `{:.16e}`: 17 significant digits.
pub fn format_f64(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else if x.is_nan() {
        "NaN".into()
    } else if x > 0.0 {
        "inf".into()
    } else {
        "-inf".into()
    }
}

impl Cell {
    fn csv_text(&self) -> String {
        match self {
            Cell::Num(x) => format_f64(*x),
            Cell::Int(n) => n.to_string(),
            Cell::Bool(b) => b.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Missing => String::new(),
        }
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Cell::Num(x) if x.is_finite() => RawValue::from_string(format_f64(*x))
                .map_err(serde::ser::Error::custom)?
                .serialize(s),
            Cell::Num(_) | Cell::Missing => s.serialize_none(),
            Cell::Int(n) => s.serialize_u64(*n),
            Cell::Bool(b) => s.serialize_bool(*b),
            Cell::Text(t) => s.serialize_str(t),
        }
    }
}

/// One named row.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Record(pub Vec<(String, Cell)>);

impl Record {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn num(mut self, key: &str, v: f64) -> Self {
        self.0.push((key.into(), Cell::Num(v)));
        self
    }

    pub fn int(mut self, key: &str, v: usize) -> Self {
        self.0.push((key.into(), Cell::Int(v as u64)));
        self
    }

    pub fn flag(mut self, key: &str, v: bool) -> Self {
        self.0.push((key.into(), Cell::Bool(v)));
        self
    }

    pub fn text(mut self, key: &str, v: impl Into<String>) -> Self {
        self.0.push((key.into(), Cell::Text(v.into())));
        self
    }

    pub fn opt_num(mut self, key: &str, v: Option<f64>) -> Self {
        self.0.push((key.into(), v.map_or(Cell::Missing, Cell::Num)));
        self
    }

    pub fn get(&self, key: &str) -> Option<&Cell> {
        self.0.iter().find(|(k, _)| k == key).map(|(_, c)| c)
    }
}

impl Serialize for Record {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

/// Command result: a single record or a table of records sharing columns.
#[derive(Debug, Clone, PartialEq)]
pub enum Output {
    Single(Record),
    Table(Vec<Record>),
}

impl Serialize for Output {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Output::Single(r) => r.serialize(s),
            Output::Table(rows) => {
                let mut seq = s.serialize_seq(Some(rows.len()))?;
                for r in rows {
                    seq.serialize_element(r)?;
                }
                seq.end()
            }
        }
    }
}

impl Output {
    fn rows(&self) -> &[Record] {
        match self {
            Output::Single(r) => std::slice::from_ref(r),
            Output::Table(rows) => rows,
        }
    }

    pub fn render(&self, format: Format) -> CliResult<String> {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).map_err(std::io::Error::from)?;
                s.push('\n');
                Ok(s)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                if let Some(first) = self.rows().first() {
                    w.write_record(first.0.iter().map(|(k, _)| k.as_str()))
                        .map_err(std::io::Error::from)?;
                }
                for r in self.rows() {
                    w.write_record(r.0.iter().map(|(_, c)| c.csv_text()))
                        .map_err(std::io::Error::from)?;
                }
                let bytes = w.into_inner().map_err(|e| e.into_error())?;
                Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits() {
        assert_eq!(format_f64(1.0), "1.0000000000000000e0");
        assert_eq!(format_f64(-0.1), "-1.0000000000000001e-1");
        for x in [0.1, 1.0 / 3.0, -2.5e-300, 6.02e23, f64::MIN_POSITIVE] {
            assert_eq!(format_f64(x).parse::<f64>().unwrap().to_bits(), x.to_bits());
        }
    }

    #[test]
    fn json_numbers_are_raw() {
        let out = Output::Single(Record::new().num("x", 0.5).flag("ok", true).opt_num("none", None));
        let s = out.render(Format::Json).unwrap();
        assert!(s.contains("\"x\": 5.0000000000000000e-1"));
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["x"].as_f64(), Some(0.5));
        assert!(v["none"].is_null());
    }

    #[test]
    fn csv_has_header_and_rows() {
        let rows = vec![Record::new().num("a", 1.0).text("b", "x,y"), Record::new().num("a", 2.0).text("b", "z")];
        let s = Output::Table(rows).render(Format::Csv).unwrap();
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines[0], "a,b");
        assert_eq!(lines[1], "1.0000000000000000e0,\"x,y\"");
        assert_eq!(lines.len(), 3);
    }
}
