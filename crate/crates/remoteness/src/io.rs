//! File formats: permutation codes, Latin squares and edge lists.

use std::fs;
use std::path::Path;

use thiserror::Error;

use remoteness_core::{LatinError, LatinSquare, PermError, Permutation, RemotenessGraph};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("line {line}: {source}")]
    Perm { line: usize, source: PermError },
    #[error("line {line}: degree {found} differs from the first codeword's degree {expected}")]
    MixedDegrees { line: usize, expected: usize, found: usize },
    #[error("code is empty")]
    EmptyCode,
    #[error(transparent)]
    Latin(#[from] LatinError),
}

fn read(path: &Path) -> Result<String, IoError> {
    fs::read_to_string(path).map_err(|source| IoError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// One permutation per line, in image notation (`2,0,1`) or cycle notation
/// (`(0 1 2)`, which needs `degree`). Blank lines and `#` comments are skipped.
pub fn parse_code(text: &str, degree: Option<usize>) -> Result<Vec<Permutation>, IoError> {
    let mut code: Vec<Permutation> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let degree = degree.or_else(|| code.first().map(Permutation::degree));
        let p = Permutation::parse(line, degree).map_err(|source| IoError::Perm { line: i + 1, source })?;
        if let Some(first) = code.first() {
            if first.degree() != p.degree() {
                return Err(IoError::MixedDegrees {
                    line: i + 1,
                    expected: first.degree(),
                    found: p.degree(),
                });
            }
        }
        code.push(p);
    }
    if code.is_empty() {
        return Err(IoError::EmptyCode);
    }
    Ok(code)
}

pub fn read_code(path: &Path, degree: Option<usize>) -> Result<Vec<Permutation>, IoError> {
    parse_code(&read(path)?, degree)
}

pub fn format_code(code: &[Permutation]) -> String {
    code.iter().map(|p| format!("{p}\n")).collect()
}

/// `n` lines of comma-separated symbols.
pub fn read_latin(path: &Path) -> Result<LatinSquare, IoError> {
    Ok(read(path)?.parse::<LatinSquare>()?)
}

pub fn write_latin(path: &Path, square: &LatinSquare) -> Result<(), IoError> {
    write(path, &format!("{square}\n"))
}

/// Writes the remoteness graph as `a,b c,d` lines, one edge per line.
pub fn write_edge_list(path: &Path, graph: &RemotenessGraph) -> Result<(), IoError> {
    write(path, &graph.edge_list())
}

fn write(path: &Path, contents: &str) -> Result<(), IoError> {
    fs::write(path, contents).map_err(|source| IoError::Io {
        path: path.display().to_string(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn code_round_trip() {
        let code = parse_code("0,1,2\n# comment\n\n1,2,0\n", None).unwrap();
        assert_eq!(code.len(), 2);
        assert_eq!(parse_code(&format_code(&code), None).unwrap(), code);
    }

    #[test]
    fn cycle_lines_take_the_degree() {
        let code = parse_code("(0 1)\n(2 3)\n", Some(4)).unwrap();
        assert_eq!(code[1].to_vec(), vec![0, 1, 3, 2]);
    }

    #[test]
    fn bad_lines_are_reported() {
        assert!(matches!(parse_code("0,1\n0,0\n", None), Err(IoError::Perm { line: 2, .. })));
        assert!(matches!(parse_code("0,1\n0,1,2\n", None), Err(IoError::Perm { line: 2, .. } | IoError::MixedDegrees { .. })));
        assert!(matches!(parse_code("# nothing\n", None), Err(IoError::EmptyCode)));
    }
}
