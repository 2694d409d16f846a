use std::io::{self, Write};

use blockmean_core::Rational;
use clap::ValueEnum;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

/// How a command failed; each kind has a fixed exit code.
#[derive(Debug)]
pub enum Failure {
    /// A checked statement did not hold.
    Verdict(String),
    /// Bad flags, unreadable or malformed input, caps exceeded.
    Usage(String),
    /// Input parsed but does not meet the command's requirements.
    Precondition(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Verdict(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Precondition(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Verdict(m) | Failure::Usage(m) | Failure::Precondition(m) => m,
        }
    }
}

impl From<blockmean_core::Error> for Failure {
    fn from(e: blockmean_core::Error) -> Self {
        use blockmean_core::Error as E;
        let msg = e.to_string();
        match e {
            E::Parse { .. }
            | E::InvalidParameter(_)
            | E::TooLarge(_)
            | E::OverCap { .. }
            | E::BadCertificate(_)
            | E::NoSuchVertex { .. }
            | E::VertexOutOfRange { .. }
            | E::SelfLoop(..) => Failure::Usage(msg),
            E::NoImprovement(_) => Failure::Verdict(msg),
            _ => Failure::Precondition(msg),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

pub type Outcome = Result<(), Failure>;

pub fn decimal(r: &Rational) -> String {
    r.to_decimal(6)
}

/// `num/den (d.dddddd)`.
pub fn shown(r: &Rational) -> String {
    format!("{r} ({})", decimal(r))
}

pub fn json<T: Serialize>(value: &T) -> Outcome {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value).map_err(|e| Failure::Usage(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

pub fn csv_rows(header: &[&str], rows: &[Vec<String>]) -> Outcome {
    let mut w = csv::Writer::from_writer(io::stdout().lock());
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    w.flush()?;
    Ok(())
}

/// Left-aligned columns separated by two spaces.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> Outcome {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = io::stdout().lock();
    let line = |cells: Vec<&str>| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    writeln!(out, "{}", line(header.to_vec()))?;
    for r in rows {
        writeln!(out, "{}", line(r.iter().map(String::as_str).collect()))?;
    }
    Ok(())
}

pub fn emit(
    format: Format,
    header: &[&str],
    rows: &[Vec<String>],
    value: &impl Serialize,
) -> Outcome {
    match format {
        Format::Json => json(value),
        Format::Csv => csv_rows(header, rows),
        Format::Table => table(header, rows),
    }
}
