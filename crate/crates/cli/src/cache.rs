//! Optional per-order certificate files under `BLOCKMEAN_CACHE_DIR`.
//!
//! `<dir>/<family>-<n>.certs` holds one hex certificate per line.

use std::fs;
use std::path::PathBuf;

use blockmean_core::{CanonicalCert, Generator};

use crate::output::Failure;

fn dir() -> Option<PathBuf> {
    std::env::var_os("BLOCKMEAN_CACHE_DIR").map(PathBuf::from)
}

fn file(gen: &Generator, n: usize) -> Option<PathBuf> {
    dir().map(|d| d.join(format!("{}-{n}.certs", gen.family())))
}

/// Loads any cached orders `1..=n` into `gen`.
pub fn load(gen: &mut Generator, n: usize) -> Result<(), Failure> {
    for m in 1..=n {
        let Some(path) = file(gen, m) else {
            return Ok(());
        };
        let Ok(text) = fs::read_to_string(&path) else {
            continue;
        };
        let certs = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| l.trim().parse::<CanonicalCert>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| Failure::Usage(format!("cache file {}: {e}", path.display())))?;
        gen.insert_level(m, &certs)
            .map_err(|e| Failure::Usage(format!("cache file {}: {e}", path.display())))?;
    }
    Ok(())
}

/// Writes orders `1..=n` that have no cache file yet.
pub fn store(gen: &mut Generator, n: usize) -> Result<(), Failure> {
    let Some(d) = dir() else { return Ok(()) };
    fs::create_dir_all(&d)?;
    for m in 1..=n {
        let path = file(gen, m).expect("cache dir is set");
        if path.exists() {
            continue;
        }
        let mut text = String::new();
        for g in gen.level(m)? {
            text.push_str(&blockmean_core::canonical_cert(g).to_hex());
            text.push('\n');
        }
        fs::write(&path, text)?;
    }
    Ok(())
}
