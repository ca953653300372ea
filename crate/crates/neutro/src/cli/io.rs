//! Input parsing and atomic output for the batch commands.

use std::fmt;
use std::fs::File;
use std::io::Write;
use std::path::Path;

/// A command failure carrying its exit code.
///
/// | code | class |
/// |------|-------|
/// | 2    | input missing or unparseable (line number reported) |
/// | 3    | row failed validation (row index and component reported) |
/// | 4    | output not writable |
#[derive(Debug)]
pub(crate) enum CliError {
    Input(String),
    Validation(String),
    Output(String),
}

impl CliError {
    pub(crate) fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Validation(_) => 3,
            CliError::Output(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) | CliError::Validation(msg) | CliError::Output(msg) => {
                f.write_str(msg)
            }
        }
    }
}

/// Reads numeric rows from a CSV file: comma separator, '.' decimal point,
/// UTF-8. A header row is optional and detected by a non-numeric first
/// token. Rows must carry at least `columns` fields; extra fields are
/// ignored (sweep output re-fed to eval carries the measure columns).
pub(crate) fn read_rows(path: &Path, columns: usize) -> Result<Vec<Vec<f64>>, CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;

    let mut rows = Vec::new();
    let mut first = true;
    for record in reader.records() {
        let record =
            record.map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        let line = record
            .position()
            .map(|p| p.line())
            .unwrap_or(rows.len() as u64 + 1);
        if record.iter().all(|field| field.is_empty()) {
            continue;
        }
        if first {
            first = false;
            let looks_like_header = record
                .get(0)
                .map(|field| field.parse::<f64>().is_err())
                .unwrap_or(false);
            if looks_like_header {
                continue;
            }
        }
        if record.len() < columns {
            return Err(CliError::Input(format!(
                "{}: line {line}: expected {columns} columns, found {}",
                path.display(),
                record.len()
            )));
        }
        let mut row = Vec::with_capacity(columns);
        for field in record.iter().take(columns) {
            let value: f64 = field.parse().map_err(|_| {
                CliError::Input(format!(
                    "{}: line {line}: '{field}' is not a number",
                    path.display()
                ))
            })?;
            row.push(value);
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Writes the fully rendered output, atomically when a path is given:
/// a temp file in the target directory is persisted over the destination
/// only after every byte is down, so a crashed run never leaves a partial
/// artifact. With no path the bytes go to standard output in one piece.
pub(crate) fn write_output(path: Option<&Path>, bytes: &[u8]) -> Result<(), CliError> {
    match path {
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(bytes)
                .and_then(|_| lock.flush())
                .map_err(|e| CliError::Output(format!("cannot write to stdout: {e}")))
        }
        Some(path) => {
            let dir = match path.parent() {
                Some(parent) if !parent.as_os_str().is_empty() => parent,
                _ => Path::new("."),
            };
            let write = || -> std::io::Result<()> {
                let mut temp = tempfile::NamedTempFile::new_in(dir)?;
                temp.write_all(bytes)?;
                temp.flush()?;
                let file: File = temp.persist(path).map_err(|e| e.error)?;
                file.sync_all()?;
                Ok(())
            };
            write().map_err(|e| CliError::Output(format!("cannot write {}: {e}", path.display())))
        }
    }
}
