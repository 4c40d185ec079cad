//! Group configuration: a preset name given on the command line, or a TOML
//! file holding either a preset name or an explicit lattice datum.

use kottwitz_core::intmat::IntMat;
use kottwitz_core::preset;
use kottwitz_core::root_datum::{FrobeniusAction, RootDatum};
use num::BigInt;
use serde::Deserialize;
use std::path::Path;

/// A loaded, not yet validated, group description.
pub struct LoadedGroup {
    pub rd: RootDatum,
    pub fr: FrobeniusAction,
    pub label: Option<String>,
}

/// Failures while loading: ill-formed input (exit 4) versus data that parsed
/// but breaks a structural invariant (exit 2).
pub enum LoadError {
    Parse(String),
    Validation(String),
}

/// Raw TOML shape: exactly one of `preset` or the explicit five-field datum.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    preset: Option<String>,
    label: Option<String>,
    rank: Option<usize>,
    roots: Option<Vec<Vec<i64>>>,
    coroots: Option<Vec<Vec<i64>>>,
    simple: Option<Vec<usize>>,
    frobenius: Option<Vec<Vec<i64>>>,
}

pub fn from_preset(name: &str) -> Result<LoadedGroup, LoadError> {
    let (rd, fr) = preset::parse(name).map_err(LoadError::Parse)?;
    Ok(LoadedGroup { rd, fr, label: None })
}

pub fn from_file(path: &Path) -> Result<LoadedGroup, LoadError> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        LoadError::Parse(format!("cannot read config {}: {e}", path.display()))
    })?;
    let raw: RawConfig = toml::from_str(&text).map_err(|e| {
        LoadError::Parse(format!("cannot parse config {}: {e}", path.display()))
    })?;

    let explicit_fields = [
        raw.rank.is_some(),
        raw.roots.is_some(),
        raw.coroots.is_some(),
        raw.simple.is_some(),
        raw.frobenius.is_some(),
    ];
    let any_explicit = explicit_fields.iter().any(|&p| p);
    match (&raw.preset, any_explicit) {
        (Some(_), true) => Err(LoadError::Parse(
            "config must give either a preset or explicit data, not both".into(),
        )),
        (None, false) => Err(LoadError::Parse(
            "config must give a preset or explicit rank/roots/coroots/simple/frobenius".into(),
        )),
        (Some(name), false) => {
            let (rd, fr) = preset::parse(name).map_err(LoadError::Parse)?;
            Ok(LoadedGroup { rd, fr, label: raw.label })
        }
        (None, true) => {
            if !explicit_fields.iter().all(|&p| p) {
                return Err(LoadError::Parse(
                    "explicit config needs all of rank, roots, coroots, simple, frobenius".into(),
                ));
            }
            let rank = raw.rank.unwrap();
            let rd = RootDatum {
                rank,
                roots: int_rows(&raw.roots.unwrap()),
                coroots: int_rows(&raw.coroots.unwrap()),
                simple_indices: raw.simple.unwrap(),
            };
            let fr_rows = int_rows(&raw.frobenius.unwrap());
            let matrix = matrix_from_rows(rank, &fr_rows)?;
            // Finite order is a structural invariant, not a syntax matter.
            let fr = FrobeniusAction::new(matrix)
                .map_err(|e| LoadError::Validation(e.to_string()))?;
            Ok(LoadedGroup { rd, fr, label: raw.label })
        }
    }
}

fn int_rows(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

fn matrix_from_rows(rank: usize, rows: &[Vec<BigInt>]) -> Result<IntMat, LoadError> {
    if rows.len() != rank || rows.iter().any(|r| r.len() != rank) {
        return Err(LoadError::Parse(format!(
            "frobenius must be a {rank}x{rank} matrix of integer rows"
        )));
    }
    let mut m = IntMat::zero(rank, rank);
    for (i, row) in rows.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            m[(i, j)] = x.clone();
        }
    }
    Ok(m)
}
