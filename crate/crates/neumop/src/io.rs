//! Plain-text CSV readers/writers for matrices and vectors, plus flat
//! key=value config files.
//!
//! Matrix files hold one row per line, comma-separated decimal floats.
//! Readers reject ragged rows. Vector files are accepted either as a single
//! column (one value per line) or a single row.

use std::fs;
use std::io::Write;
use std::path::Path;

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

fn read_to_string(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

fn parse_rows(path: &Path, text: &str) -> Result<Vec<Vec<f64>>> {
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut row = Vec::new();
        for field in line.split(',') {
            let field = field.trim();
            let value: f64 = field.parse().map_err(|_| Error::Parse {
                path: path.display().to_string(),
                line: lineno + 1,
                msg: format!("not a number: {field:?}"),
            })?;
            row.push(value);
        }
        if let Some(first) = rows.first() {
            if row.len() != first.len() {
                return Err(Error::Parse {
                    path: path.display().to_string(),
                    line: lineno + 1,
                    msg: format!("ragged row: {} fields, expected {}", row.len(), first.len()),
                });
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::Parse {
            path: path.display().to_string(),
            line: 0,
            msg: "empty file".into(),
        });
    }
    Ok(rows)
}

pub fn read_matrix(path: impl AsRef<Path>) -> Result<DMatrix<f64>> {
    let path = path.as_ref();
    let rows = parse_rows(path, &read_to_string(path)?)?;
    let nrows = rows.len();
    let ncols = rows[0].len();
    Ok(DMatrix::from_fn(nrows, ncols, |i, j| rows[i][j]))
}

pub fn read_vector(path: impl AsRef<Path>) -> Result<DVector<f64>> {
    let path = path.as_ref();
    let rows = parse_rows(path, &read_to_string(path)?)?;
    if rows[0].len() == 1 {
        Ok(DVector::from_iterator(rows.len(), rows.iter().map(|r| r[0])))
    } else if rows.len() == 1 {
        Ok(DVector::from_row_slice(&rows[0]))
    } else {
        Err(Error::Parse {
            path: path.display().to_string(),
            line: 0,
            msg: format!("expected a vector, got a {}x{} matrix", rows.len(), rows[0].len()),
        })
    }
}

pub fn write_matrix(path: impl AsRef<Path>, m: &DMatrix<f64>) -> Result<()> {
    let path = path.as_ref();
    let mut out = String::new();
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            if j > 0 {
                out.push(',');
            }
            out.push_str(&format!("{}", m[(i, j)]));
        }
        out.push('\n');
    }
    write_text(path, &out)
}

pub fn write_vector(path: impl AsRef<Path>, v: &DVector<f64>) -> Result<()> {
    let path = path.as_ref();
    let mut out = String::new();
    for i in 0..v.len() {
        out.push_str(&format!("{}\n", v[i]));
    }
    write_text(path, &out)
}

pub fn write_text(path: impl AsRef<Path>, text: &str) -> Result<()> {
    let path = path.as_ref();
    let mut file = fs::File::create(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    file.write_all(text.as_bytes()).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Flat `key=value` file: one pair per line, `#` starts a comment, blank
/// lines ignored. Later duplicates win.
pub fn read_key_values(path: impl AsRef<Path>) -> Result<Vec<(String, String)>> {
    let path = path.as_ref();
    let text = read_to_string(path)?;
    let mut pairs = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match line.split_once('=') {
            Some((k, v)) => pairs.push((k.trim().to_string(), v.trim().to_string())),
            None => {
                return Err(Error::Parse {
                    path: path.display().to_string(),
                    line: lineno + 1,
                    msg: format!("expected key=value, got {line:?}"),
                })
            }
        }
    }
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tmpdir() -> std::path::PathBuf {
        let dir = std::env::temp_dir().join(format!("neumop-io-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        dir
    }

    #[test]
    fn matrix_round_trip() {
        let path = tmpdir().join("m.csv");
        let m = DMatrix::from_row_slice(2, 3, &[1.5, -2.0, 0.25, 0.0, 1e-9, 3.0]);
        write_matrix(&path, &m).unwrap();
        let back = read_matrix(&path).unwrap();
        assert_eq!(m, back);
    }

    #[test]
    fn ragged_rows_rejected() {
        let path = tmpdir().join("ragged.csv");
        write_text(&path, "1,2,3\n4,5\n").unwrap();
        let err = read_matrix(&path).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn vector_accepts_column_and_row() {
        let dir = tmpdir();
        let col = dir.join("col.csv");
        write_text(&col, "1\n2\n3\n").unwrap();
        assert_eq!(read_vector(&col).unwrap(), DVector::from_row_slice(&[1.0, 2.0, 3.0]));
        let row = dir.join("row.csv");
        write_text(&row, "1,2,3\n").unwrap();
        assert_eq!(read_vector(&row).unwrap(), DVector::from_row_slice(&[1.0, 2.0, 3.0]));
    }

    #[test]
    fn key_values_parse() {
        let path = tmpdir().join("kv.txt");
        write_text(&path, "# comment\nactivation = relu\n\neta=1,2,3\n").unwrap();
        let kv = read_key_values(&path).unwrap();
        assert_eq!(kv[0], ("activation".to_string(), "relu".to_string()));
        assert_eq!(kv[1].1, "1,2,3");
    }
}
