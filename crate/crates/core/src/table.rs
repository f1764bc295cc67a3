//! Tabulation of W, V± and Z± on a grid, written as CSV or JSON with a fixed
//! 17-significant-digit format so that output is byte-reproducible and lossless.

use std::io::Write;
use std::path::Path;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;
use serde_json::value::RawValue;

use crate::closedform::{solution_params, solution_z, Branch};
use crate::error::{Error, Result};
use crate::potential::{potential, superpotential, PotentialSpec, Sector};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    Superpotential,
    Potential,
    Solution,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableRequest {
    pub kind: TableKind,
    pub m: f64,
    pub sector: Sector,
    pub omega: f64,
    pub branch: Branch,
    pub x_min: f64,
    pub x_max: f64,
    pub points: usize,
    pub spacing: Spacing,
}

impl TableRequest {
    pub fn validate(&self) -> Result<()> {
        if !(self.x_min > 0.0 && self.x_max > self.x_min && self.x_max.is_finite()) {
            return Err(Error::InvalidParams(format!(
                "need 0 < x_min < x_max, got x_min = {}, x_max = {}",
                self.x_min, self.x_max
            )));
        }
        if self.points < 2 {
            return Err(Error::InvalidParams(format!("need at least 2 points, got {}", self.points)));
        }
        if !(self.m.is_finite() && self.m != 0.0) {
            return Err(Error::InvalidParams(format!("m must be finite and nonzero, got {}", self.m)));
        }
        if self.kind == TableKind::Solution {
            if self.m < 0.0 {
                return Err(Error::InvalidParams("solution tables need m > 0".into()));
            }
            if !(self.omega > 0.0 && self.omega.is_finite()) {
                return Err(Error::InvalidParams(format!("omega must be positive, got {}", self.omega)));
            }
        }
        Ok(())
    }

    pub fn grid(&self) -> Vec<f64> {
        let n = self.points;
        (0..n)
            .map(|i| {
                if i == 0 {
                    return self.x_min;
                }
                if i == n - 1 {
                    return self.x_max;
                }
                let t = i as f64 / (n - 1) as f64;
                match self.spacing {
                    Spacing::Linear => self.x_min + (self.x_max - self.x_min) * t,
                    Spacing::Log => (self.x_min.ln() + (self.x_max.ln() - self.x_min.ln()) * t).exp(),
                }
            })
            .collect()
    }
}

/// Column names and rows of numbers.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<f64>>,
}

pub fn build_table(req: &TableRequest) -> Result<Table> {
    req.validate()?;
    let xs = req.grid();
    match req.kind {
        TableKind::Superpotential => Ok(Table {
            columns: vec!["x", "W"],
            rows: xs.iter().map(|&x| Ok(vec![x, superpotential(x, req.m)?])).collect::<Result<_>>()?,
        }),
        TableKind::Potential => {
            let spec = PotentialSpec::new(req.m, req.sector)?;
            Ok(Table {
                columns: vec!["x", "V"],
                rows: xs.iter().map(|&x| Ok(vec![x, potential(x, spec)?])).collect::<Result<_>>()?,
            })
        }
        TableKind::Solution => {
            let p = solution_params(req.m, req.omega)?;
            let rows = xs
                .iter()
                .map(|&x| {
                    let s = solution_z(req.branch, req.sector, x, &p)?;
                    Ok(vec![x, s.z.re, s.z.im, s.dz.re, s.dz.im])
                })
                .collect::<Result<_>>()?;
            Ok(Table { columns: vec!["x", "Z_re", "Z_im", "dZ_re", "dZ_im"], rows })
        }
    }
}

pub fn format_number(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn write_csv<W: Write>(table: &Table, out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(&table.columns).map_err(io)?;
    for row in &table.rows {
        w.write_record(row.iter().map(|&v| format_number(v))).map_err(io)?;
    }
    w.flush().map_err(|e| Error::Io(e.to_string()))
}

struct JsonRow<'a> {
    columns: &'a [&'static str],
    values: Vec<Box<RawValue>>,
}

impl Serialize for JsonRow<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.columns.len()))?;
        for (k, v) in self.columns.iter().zip(&self.values) {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

pub fn write_json<W: Write>(table: &Table, mut out: W) -> Result<()> {
    let rows = table
        .rows
        .iter()
        .map(|row| {
            let values = row
                .iter()
                .map(|&v| {
                    if !v.is_finite() {
                        return Err(Error::Domain(format!("non-finite value {v} cannot be written as JSON")));
                    }
                    RawValue::from_string(format_number(v)).map_err(|e| Error::Io(e.to_string()))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(JsonRow { columns: &table.columns, values })
        })
        .collect::<Result<Vec<_>>>()?;
    serde_json::to_writer_pretty(&mut out, &rows).map_err(|e| Error::Io(e.to_string()))?;
    out.write_all(b"\n").map_err(|e| Error::Io(e.to_string()))
}

pub fn write_table<W: Write>(table: &Table, format: Format, out: W) -> Result<()> {
    match format {
        Format::Csv => write_csv(table, out),
        Format::Json => write_json(table, out),
    }
}

pub const FIGURE_X_MIN: f64 = 0.02;
pub const FIGURE_X_MAX: f64 = 5.0;
pub const FIGURE_POINTS: usize = 1000;

/// File name and request for each plotted curve: W for m = ±1 and V± for m = 2.
pub fn figure_requests() -> Vec<(&'static str, TableRequest)> {
    let base = TableRequest {
        kind: TableKind::Superpotential,
        m: 1.0,
        sector: Sector::Plus,
        omega: 1.0,
        branch: Branch::I,
        x_min: FIGURE_X_MIN,
        x_max: FIGURE_X_MAX,
        points: FIGURE_POINTS,
        spacing: Spacing::Linear,
    };
    vec![
        ("fig1_w_m+1.csv", base),
        ("fig1_w_m-1.csv", TableRequest { m: -1.0, ..base }),
        ("fig2_vplus_m2.csv", TableRequest { kind: TableKind::Potential, m: 2.0, ..base }),
        ("fig2_vminus_m2.csv", TableRequest { kind: TableKind::Potential, m: 2.0, sector: Sector::Minus, ..base }),
    ]
}

/// Writes the figure tables into `dir`, which must already exist.
pub fn write_figures(dir: &Path) -> Result<Vec<std::path::PathBuf>> {
    if !dir.is_dir() {
        return Err(Error::Io(format!("{} is not a directory", dir.display())));
    }
    let mut written = Vec::new();
    for (name, req) in figure_requests() {
        let path = dir.join(name);
        let file = std::fs::File::create(&path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        write_csv(&build_table(&req)?, std::io::BufWriter::new(file))?;
        written.push(path);
    }
    Ok(written)
}
