use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use lqt_core::algebras::{named, AlgebraJson, StructAlgebra};
use lqt_core::homology_builders::{h_unital_check_pro, HUnitalReport};
use lqt_core::tables::{decompose_table, homology_table, ComplexKind, DecomposeTable, HomologyTable, TableError};
use lqt_core::verify::{run, ProSpec, Report, RunOptions, SweepConfig, VerifyKind};

use crate::error::InputError;

fn read(path: &Path) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|source| InputError::Read { path: path.to_path_buf(), source })
}

fn parse<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, InputError> {
    serde_json::from_str(&read(path)?).map_err(|e| InputError::json(path, e))
}

/// Loads an algebra from a structure-constant file. A corpus name such as
/// `uv` is accepted when no file of that name exists.
pub fn load_algebra(path: &Path) -> Result<(String, StructAlgebra), InputError> {
    if !path.exists() {
        if let Some(a) = path.to_str().and_then(named) {
            return Ok((path.display().to_string(), a));
        }
    }
    let j: AlgebraJson = parse(path)?;
    let a = StructAlgebra::from_json(&j)
        .map_err(|e| InputError::Invalid { path: path.to_path_buf(), message: e.to_string() })?;
    let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    Ok((name, a))
}

fn table_error(e: TableError) -> InputError {
    match e {
        TableError::Oversize { what, size, limit } => InputError::Oversize { what, size, limit },
        e => InputError::Other(e.to_string()),
    }
}

pub fn homology(kind: ComplexKind, algebra: &Path, n: usize, max_degree: usize, limit: u128) -> Result<HomologyTable, InputError> {
    let (name, a) = load_algebra(algebra)?;
    homology_table(kind, &name, &a, n, max_degree, limit).map_err(table_error)
}

pub fn decompose(algebra: &Path, n: usize, max_degree: usize, limit: u128) -> Result<DecomposeTable, InputError> {
    let (name, a) = load_algebra(algebra)?;
    decompose_table(&name, &a, n, max_degree, limit).map_err(table_error)
}

pub fn verify(kind: VerifyKind, config: &Path, opts: RunOptions) -> Result<Report, InputError> {
    let cfg: SweepConfig = parse(config)?;
    Ok(run(kind, &cfg, opts)?)
}

pub fn hunital(pro: &Path, rmax: usize, limit: u128) -> Result<HUnitalReport, InputError> {
    let spec: ProSpec = parse(pro)?;
    let (_, p) = spec.resolve().map_err(|e| InputError::Invalid { path: pro.to_path_buf(), message: e.to_string() })?;
    let dim = p.levels().iter().map(|a| a.dim()).max().unwrap_or(0);
    let size = (0..rmax + 2).fold(1u128, |acc, _| acc.saturating_mul(dim as u128));
    if size > limit {
        return Err(InputError::Oversize { what: format!("{dim}^{} bar words", rmax + 2), size, limit });
    }
    h_unital_check_pro(&p, rmax).map_err(|e| InputError::Other(e.to_string()))
}

/// Writes `text` to `out`, or to stdout when absent.
pub fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), InputError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| InputError::Write { path: path.clone(), source }),
        None => {
            // a closed pipe (e.g. `| head`) is not an error
            match writeln!(std::io::stdout().lock(), "{text}") {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                    Err(InputError::Write { path: PathBuf::from("<stdout>"), source: e })
                }
                _ => Ok(()),
            }
        }
    }
}
