//! The structure-matrix file format.
//!
//! ```text
//! # comment
//! m n [group]
//! e e … e      (m lines of n entries)
//! ```
//!
//! Entry `0` is a zero; entry `k ≥ 1` is group element `k − 1`, so `1` is the
//! identity. The group defaults to `trivial`; other names are those accepted
//! by [`FiniteGroup::by_name`].

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::matrix::StructureMatrix;
use crate::semigroup::ReesSemigroup;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset: line,
        message: format!("line {}: {}", line + 1, message.into()),
    }
}

/// Parses a matrix file into `𝓜(G, M)`. `Parse` errors carry the 0-based
/// line number as their offset.
pub fn parse_matrix(text: &str) -> Result<ReesSemigroup> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hk, header) = lines.next().ok_or_else(|| parse_err(0, "missing header `m n [group]`"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if !(2..=3).contains(&fields.len()) {
        return Err(parse_err(hk, "header must be `m n [group]`"));
    }
    let dim = |s: &str| s.parse::<usize>().map_err(|_| parse_err(hk, format!("bad dimension `{}`", s)));
    let (m, n) = (dim(fields[0])?, dim(fields[1])?);
    let group = match fields.get(2) {
        Some(name) => FiniteGroup::by_name(name)?,
        None => FiniteGroup::trivial(),
    };
    let mut entries = Vec::with_capacity(m * n);
    let mut rows = 0;
    for (k, line) in lines {
        if rows == m {
            return Err(parse_err(k, format!("more than {} rows", m)));
        }
        let row: Vec<&str> = line.split_whitespace().collect();
        if row.len() != n {
            return Err(parse_err(k, format!("expected {} entries, found {}", n, row.len())));
        }
        for e in row {
            let v: usize = e.parse().map_err(|_| parse_err(k, format!("bad entry `{}`", e)))?;
            entries.push(v.checked_sub(1));
        }
        rows += 1;
    }
    if rows != m {
        return Err(parse_err(hk, format!("expected {} rows, found {}", m, rows)));
    }
    ReesSemigroup::new(group, StructureMatrix::new(m, n, entries)?)
}

/// Writes `𝓜(G, M)` in the format read by [`parse_matrix`]. The group name is
/// omitted for the trivial group.
pub fn format_matrix(s: &ReesSemigroup) -> String {
    let m = s.matrix();
    let mut out = String::new();
    let _ = write!(out, "{} {}", m.rows(), m.cols());
    if !s.is_combinatorial() {
        let _ = write!(out, " {}", s.group().name());
    }
    out.push('\n');
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(|e| format!("{}", e.map_or(0, |g| g + 1))).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "# bordered H3\n4 4\n0 1 1 1\n1 0 1 1\n1 1 0 1\n1 1 1 1\n";
        let s = parse_matrix(text).unwrap();
        assert_eq!(s.matrix(), &StructureMatrix::hollow(3).unwrap().border());
        assert_eq!(format_matrix(&s), text.lines().skip(1).collect::<Vec<_>>().join("\n") + "\n");
        let z2 = parse_matrix("2 2 Z2\n1 2\n2 0\n").unwrap();
        assert_eq!(z2.group().order(), 2);
        assert_eq!(z2.matrix().get(0, 1), Some(1));
        assert_eq!(parse_matrix(&format_matrix(&z2)).unwrap(), z2);
    }

    #[test]
    fn errors() {
        assert!(parse_matrix("").is_err());
        assert!(parse_matrix("2 2\n1 0\n").is_err());
        assert!(parse_matrix("1 2\n1 0 1\n").is_err());
        assert!(parse_matrix("1 1\n2\n").is_err());
        assert!(parse_matrix("2 2\n1 0\n0 0\n").is_err());
        assert!(parse_matrix("1 1 S3\n1\n").is_err());
        assert!(parse_matrix("1 1\nx\n").is_err());
    }
}
