use std::io::Write;

use anyhow::Result;
use clap::ValueEnum;
use hayman_core::Float;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Tab-separated values, no header.
    Lines,
    Csv,
    Json,
}

/// Streams rows of string cells in one of the output formats.
///
/// JSON output is an array of objects keyed by column name.
pub struct RowWriter<W: Write> {
    format: Format,
    columns: Vec<&'static str>,
    out: W,
    rows: usize,
}

impl<W: Write> RowWriter<W> {
    pub fn new(format: Format, columns: &[&'static str], mut out: W) -> Result<Self> {
        match format {
            Format::Lines => {}
            Format::Csv => writeln!(out, "{}", columns.join(","))?,
            Format::Json => write!(out, "[")?,
        }
        Ok(Self {
            format,
            columns: columns.to_vec(),
            out,
            rows: 0,
        })
    }

    pub fn row(&mut self, cells: &[String]) -> Result<()> {
        debug_assert_eq!(cells.len(), self.columns.len());
        match self.format {
            Format::Lines => writeln!(self.out, "{}", cells.join("\t"))?,
            Format::Csv => {
                let mut w = csv::Writer::from_writer(&mut self.out);
                w.write_record(cells)?;
                w.flush()?;
            }
            Format::Json => {
                if self.rows > 0 {
                    write!(self.out, ",")?;
                }
                let obj = object(&self.columns, cells);
                write!(self.out, "\n  {}", serde_json::to_string(&obj)?)?;
            }
        }
        self.rows += 1;
        Ok(())
    }

    pub fn finish(mut self) -> Result<W> {
        if self.format == Format::Json {
            writeln!(self.out, "{}]", if self.rows > 0 { "\n" } else { "" })?;
        }
        self.out.flush()?;
        Ok(self.out)
    }
}

fn object(columns: &[&str], cells: &[String]) -> Value {
    let map: Map<String, Value> = columns
        .iter()
        .zip(cells)
        .map(|(k, v)| (k.to_string(), Value::String(v.clone())))
        .collect();
    Value::Object(map)
}

/// Writes a single record: `key<TAB>value` lines, a one-row CSV, or a JSON
/// object.
pub fn write_record<W: Write>(format: Format, fields: &[(&str, String)], mut out: W) -> Result<()> {
    match format {
        Format::Lines => {
            for (k, v) in fields {
                writeln!(out, "{k}\t{v}")?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record(fields.iter().map(|(k, _)| *k))?;
            w.write_record(fields.iter().map(|(_, v)| v.as_str()))?;
            w.flush()?;
        }
        Format::Json => {
            let keys: Vec<&str> = fields.iter().map(|(k, _)| *k).collect();
            let vals: Vec<String> = fields.iter().map(|(_, v)| v.clone()).collect();
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&object(&keys, &vals))?
            )?;
        }
    }
    out.flush()?;
    Ok(())
}

/// Decimal rendering of a real with up to `sig` significant digits and
/// trailing zeros removed. Positional for decimal exponents in `-5..=20`
/// (`9`, `186.82255312124217`), scientific otherwise (`9.8042e-6`).
pub fn real(x: &Float, sig: usize) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let s = format!("{:.*e}", sig.max(1), x);
    let (mantissa, exp) = s.split_once('e').unwrap_or((&s, "0"));
    let exp: i64 = exp.parse().expect("integer exponent");
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    let digits = digits.trim_end_matches('0');
    let digits = if digits.is_empty() { "0" } else { digits };
    if !(-5..=20).contains(&exp) {
        let (lead, rest) = digits.split_at(1);
        let dot = if rest.is_empty() { "" } else { "." };
        return format!("{sign}{lead}{dot}{rest}e{exp}");
    }
    let point = exp + 1;
    if point <= 0 {
        format!("{sign}0.{}{digits}", "0".repeat((-point) as usize))
    } else if point as usize >= digits.len() {
        format!(
            "{sign}{digits}{}",
            "0".repeat(point as usize - digits.len())
        )
    } else {
        let (int, frac) = digits.split_at(point as usize);
        format!("{sign}{int}.{frac}")
    }
}
