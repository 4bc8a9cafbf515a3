//! The point-matrix file read by `--u-file`.
//!
//! Twelve coefficients, the six entries of the first row followed by the six
//! of the second. Entries are separated by commas, semicolons or line
//! breaks; `#` starts a comment. Each entry is a rational function in `t`
//! in the usual grammar, e.g. `1`, `-3/4`, `t^2 + 1`, `1/(1 - t)`.

use coxideal::exactnum::TRational;
use coxideal::multipoly::PointMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UFileError {
    Count(usize),
    Entry { index: usize, message: String },
    Degenerate(String),
}

impl std::fmt::Display for UFileError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            UFileError::Count(n) => write!(f, "expected 12 coefficients, found {n}"),
            UFileError::Entry { index, message } => write!(f, "coefficient {}: {message}", index + 1),
            UFileError::Degenerate(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for UFileError {}

pub fn parse_u(text: &str) -> Result<PointMatrix<TRational>, UFileError> {
    let entries: Vec<&str> = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(|l| l.split([',', ';']))
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    if entries.len() != 12 {
        return Err(UFileError::Count(entries.len()));
    }
    let mut values = Vec::with_capacity(12);
    for (index, e) in entries.iter().enumerate() {
        let v = TRational::parse(e).map_err(|err| UFileError::Entry {
            index,
            message: err.to_string(),
        })?;
        values.push(v);
    }
    let rows = [
        std::array::from_fn(|j| values[j].clone()),
        std::array::from_fn(|j| values[6 + j].clone()),
    ];
    PointMatrix::new(rows).map_err(|e| UFileError::Degenerate(e.to_string()))
}
