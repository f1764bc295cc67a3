//! Reference tables computed offline at 50 significant digits and stored as CSV.
//! `SUSY_CES_GOLDEN_DIR` points the loaders at another directory.

use std::path::{Path, PathBuf};

use num_complex::Complex64;
use serde::Deserialize;

use crate::closedform::Branch;
use crate::error::{Error, Result};
use crate::potential::Sector;

pub const GOLDEN_DIR_ENV: &str = "SUSY_CES_GOLDEN_DIR";

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
pub struct ChfRow {
    pub a_re: f64,
    pub a_im: f64,
    pub b: f64,
    pub z_re: f64,
    pub z_im: f64,
    pub f_re: f64,
    pub f_im: f64,
}

impl ChfRow {
    pub fn a(&self) -> Complex64 {
        Complex64::new(self.a_re, self.a_im)
    }

    pub fn z(&self) -> Complex64 {
        Complex64::new(self.z_re, self.z_im)
    }

    pub fn f(&self) -> Complex64 {
        Complex64::new(self.f_re, self.f_im)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
pub struct LogGammaRow {
    pub z_re: f64,
    pub z_im: f64,
    pub lg_re: f64,
    pub lg_im: f64,
}

impl LogGammaRow {
    pub fn z(&self) -> Complex64 {
        Complex64::new(self.z_re, self.z_im)
    }

    pub fn lg(&self) -> Complex64 {
        Complex64::new(self.lg_re, self.lg_im)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
pub struct SolutionRow {
    pub branch: Branch,
    pub sector: Sector,
    pub m: f64,
    pub omega: f64,
    pub x: f64,
    pub z_re: f64,
    pub z_im: f64,
}

impl SolutionRow {
    pub fn z(&self) -> Complex64 {
        Complex64::new(self.z_re, self.z_im)
    }
}

pub fn golden_dir() -> PathBuf {
    match std::env::var_os(GOLDEN_DIR_ENV) {
        Some(dir) if !dir.is_empty() => PathBuf::from(dir),
        _ => Path::new(env!("CARGO_MANIFEST_DIR")).join("golden"),
    }
}

fn load<T: for<'de> Deserialize<'de>>(file: &str) -> Result<Vec<T>> {
    let path = golden_dir().join(file);
    let mut rdr = csv::Reader::from_path(&path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    rdr.deserialize()
        .collect::<std::result::Result<Vec<T>, _>>()
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn chf_table() -> Result<Vec<ChfRow>> {
    load("chf.csv")
}

pub fn loggamma_table() -> Result<Vec<LogGammaRow>> {
    load("loggamma.csv")
}

pub fn solution_table() -> Result<Vec<SolutionRow>> {
    load("solutions.csv")
}
