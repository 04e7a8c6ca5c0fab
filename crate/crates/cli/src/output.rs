//! CSV tables with fixed headers and locale-independent numbers.

use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::CliError;

/// Formats `x` with 12 significant digits, like C's `%.12g`.
pub fn fmt_num(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}"))
    } else {
        format!("{}e{}{:02}", trim_zeros(mantissa), if exp < 0 { '-' } else { '+' }, exp.abs())
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

pub fn fmt_opt(x: Option<f64>) -> String {
    x.map(fmt_num).unwrap_or_default()
}

/// A table written as one CSV file.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub name: String,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(name: impl Into<String>, header: Vec<&'static str>) -> Self {
        Self { name: name.into(), header, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> Result<String, CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header).map_err(|e| CliError::Other(e.into()))?;
        for row in &self.rows {
            w.write_record(row).map_err(|e| CliError::Other(e.into()))?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::Other(anyhow::anyhow!("{e}")))?;
        Ok(String::from_utf8(bytes).expect("CSV is UTF-8"))
    }

    /// Writes `<dir>/<name>.csv` and returns its path and SHA-256 digest.
    pub fn write(&self, dir: &Path) -> Result<(PathBuf, String), CliError> {
        let body = self.to_csv()?;
        let path = dir.join(format!("{}.csv", self.name));
        std::fs::write(&path, &body).map_err(|e| CliError::Other(e.into()))?;
        Ok((path, sha256_hex(body.as_bytes())))
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}
