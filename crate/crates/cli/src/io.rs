//! File formats and atomic output.
//!
//! Sequence CSV: single column, header `r`, one decimal value per line.
//! Pair CSV: header `x,y`, one pair per line.
//! Symbol messages: comma-separated decimals on a single line, no newline.
//!
//! Every writer goes through a temp file in the destination directory
//! followed by a rename, so a failed run never leaves a partial artifact.

use std::io::Write;
use std::path::Path;

use crate::CliError;

pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<(), CliError> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty());
    let mut tmp = tempfile::NamedTempFile::new_in(dir.unwrap_or(Path::new(".")))
        .map_err(|e| CliError::file(path, &e))?;
    tmp.write_all(contents)
        .map_err(|e| CliError::file(path, &e))?;
    tmp.persist(path)
        .map_err(|e| CliError::file(path, &e.error))?;
    Ok(())
}

pub fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::file(path, &e))
}

pub fn sequence_csv(values: &[usize]) -> String {
    let mut out = String::with_capacity(2 + values.len() * 4);
    out.push_str("r\n");
    for v in values {
        out.push_str(&v.to_string());
        out.push('\n');
    }
    out
}

pub fn parse_sequence_csv(path: &Path, contents: &str) -> Result<Vec<usize>, CliError> {
    let mut lines = contents.lines();
    match lines.next().map(str::trim) {
        Some("r") => {}
        other => {
            return Err(CliError::invalid_file(
                path,
                &format!("expected header line \"r\", found {other:?}"),
            ))
        }
    }
    let mut values = Vec::new();
    for (number, line) in lines.enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let v = line.parse::<usize>().map_err(|_| {
            CliError::invalid_file(path, &format!("line {}: bad value {line:?}", number + 2))
        })?;
        values.push(v);
    }
    Ok(values)
}

pub fn pairs_csv(pairs: &[(usize, usize)]) -> String {
    let mut out = String::from("x,y\n");
    for (x, y) in pairs {
        out.push_str(&format!("{x},{y}\n"));
    }
    out
}

pub fn symbols_line(symbols: &[usize]) -> String {
    symbols
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn parse_symbols_line(path: &Path, contents: &str) -> Result<Vec<usize>, CliError> {
    let trimmed = contents.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| CliError::invalid_file(path, &format!("bad symbol {:?}", tok.trim())))
        })
        .collect()
}
