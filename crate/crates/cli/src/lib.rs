//! Command implementations behind the `polyfun` binary.
//!
//! Every command returns a [`Report`]: human-readable text plus the same data
//! as [`OutputRecord`]s for `--format json`.

pub mod commands;
pub mod output;
pub mod verify;

use thiserror::Error;

pub use output::{OutputRecord, Payload, Report};

/// Largest modulus accepted on the command line. Factorization is trial
/// division and several commands expand polynomials of degree `s(n)`.
pub const MAX_MODULUS: u64 = 100_000;

/// Seed used by `verify` when neither `--seed` nor `POLYFUN_SEED` is given.
pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] polyfun_core::Error),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, CliError>;

pub fn check_modulus(n: u64, min: u64) -> Result<u64> {
    if n < min || n > MAX_MODULUS {
        return Err(CliError::Input(format!(
            "modulus {n} outside supported range {min}..={MAX_MODULUS}"
        )));
    }
    Ok(n)
}

/// Parses an inclusive range `a..b` with `2 <= a <= b`.
pub fn parse_range(text: &str) -> Result<(u64, u64)> {
    let bad = || CliError::Input(format!("expected a range like 2..10, got {text:?}"));
    let (a, b) = text.trim().split_once("..").ok_or_else(bad)?;
    let a: u64 = a.trim().parse().map_err(|_| bad())?;
    let b: u64 = b.trim().parse().map_err(|_| bad())?;
    if a < 2 || a > b {
        return Err(CliError::Input(format!("range {a}..{b} must satisfy 2 <= a <= b")));
    }
    check_modulus(b, 2)?;
    Ok((a, b))
}

/// `--seed`, then `POLYFUN_SEED`, then [`DEFAULT_SEED`].
pub fn resolve_seed(flag: Option<u64>, env: Option<&str>) -> Result<u64> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    match env {
        Some(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Input(format!("POLYFUN_SEED must be an unsigned integer, got {v:?}"))),
        None => Ok(DEFAULT_SEED),
    }
}
