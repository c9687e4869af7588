//! Plain-text set files: one strictly increasing positive integer per line,
//! `#` comment lines and blank lines ignored.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use super::NatSet;
use crate::error::{Error, Result};

/// Parses set file text into its element list. `origin` only labels errors.
pub fn parse_elements(text: &str, origin: &Path) -> Result<Vec<usize>> {
    let mut out: Vec<usize> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse_err = |message: String| Error::Parse {
            path: origin.to_path_buf(),
            line: idx + 1,
            message,
        };
        let value: usize = line
            .parse()
            .map_err(|e| parse_err(format!("not a natural number {line:?}: {e}")))?;
        if value == 0 {
            return Err(parse_err("0 is not a member of [1, N]".into()));
        }
        if let Some(&prev) = out.last() {
            if value <= prev {
                return Err(parse_err(format!(
                    "{value} does not exceed previous element {prev}"
                )));
            }
        }
        out.push(value);
    }
    Ok(out)
}

pub fn read_elements(path: impl AsRef<Path>) -> Result<Vec<usize>> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_elements(&text, path)
}

/// Reads a set file. Without an explicit horizon the largest element (or 1)
/// is used; with one, elements beyond it are an error.
pub fn read_set(path: impl AsRef<Path>, horizon: Option<usize>) -> Result<NatSet> {
    let elements = read_elements(path)?;
    let horizon = horizon.unwrap_or_else(|| elements.last().copied().unwrap_or(1));
    NatSet::from_sorted(horizon, &elements)
}

pub fn write_set<W: Write>(set: &NatSet, mut out: W) -> io::Result<()> {
    for e in set.iter() {
        writeln!(out, "{e}")?;
    }
    out.flush()
}

pub fn write_set_file(set: &NatSet, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let io_err = |source| Error::Io {
        path: PathBuf::from(path),
        source,
    };
    let file = fs::File::create(path).map_err(io_err)?;
    write_set(set, io::BufWriter::new(file)).map_err(io_err)
}
