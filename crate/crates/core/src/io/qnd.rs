use std::fmt::Write;
use std::path::Path;

use super::{content_lines, read_file, IoError};
use crate::quandle::QuandleTable;

/// Rows of a `.qnd` file: square and in range, but not yet checked to be
/// bijective, so that `validate` can report the failing row.
pub fn parse_qnd_rows(text: &str) -> Result<Vec<Vec<usize>>, IoError> {
    let mut lines = content_lines(text);
    let (first, header) = lines.next().ok_or_else(|| IoError::parse(1, "missing size line"))?;
    let n: usize = header
        .parse()
        .map_err(|_| IoError::parse(first, format!("expected the size, found {header:?}")))?;
    if n == 0 {
        return Err(IoError::parse(first, "size must be positive"));
    }
    let mut rows = Vec::with_capacity(n);
    for (line, content) in lines {
        if rows.len() == n {
            return Err(IoError::parse(line, format!("more than {n} rows")));
        }
        let row = content
            .split_whitespace()
            .map(|tok| {
                let v: usize = tok
                    .parse()
                    .map_err(|_| IoError::parse(line, format!("not an index: {tok:?}")))?;
                if v >= n {
                    return Err(IoError::parse(line, format!("entry {v} outside 0..{n}")));
                }
                Ok(v)
            })
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != n {
            return Err(IoError::parse(line, format!("{} entries, expected {n}", row.len())));
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(IoError::parse(
            text.lines().count().max(1),
            format!("{} rows, expected {n}", rows.len()),
        ));
    }
    Ok(rows)
}

pub fn parse_qnd(text: &str) -> Result<QuandleTable, IoError> {
    Ok(QuandleTable::from_rows(parse_qnd_rows(text)?)?)
}

pub fn read_qnd(path: &Path) -> Result<QuandleTable, IoError> {
    parse_qnd(&read_file(path)?)
}

pub fn write_qnd(q: &QuandleTable) -> String {
    let mut out = format!("{}\n", q.len());
    for row in q.rows_vec() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        writeln!(out, "{}", cells.join(" ")).expect("writing to a string");
    }
    out
}

/// Converts a GAP-style matrix `[[1,3,2],[3,2,1],[2,1,3]]` with 1-based
/// entries, as exported from external quandle libraries, into `.qnd` rows.
/// With `transpose`, entry `(i, j)` is read as `j * i`, for libraries that
/// store right-distributive tables.
pub fn parse_gap_matrix(text: &str, transpose: bool) -> Result<Vec<Vec<usize>>, IoError> {
    let body: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = body
        .strip_prefix("[[")
        .and_then(|b| b.strip_suffix("]]"))
        .ok_or_else(|| IoError::parse(1, "expected [[..],..,[..]]"))?;
    let rows = inner
        .split("],[")
        .map(|row| {
            row.split(',')
                .map(|tok| match tok.parse::<usize>() {
                    Ok(v) if v >= 1 => Ok(v - 1),
                    _ => Err(IoError::parse(1, format!("bad entry {tok:?}"))),
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= n)) {
        return Err(IoError::parse(1, "matrix is not square with entries in 1..=n"));
    }
    Ok(if transpose {
        (0..n).map(|i| (0..n).map(|j| rows[j][i]).collect()).collect()
    } else {
        rows
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for q in [QuandleTable::dihedral(5), QuandleTable::trivial(1), QuandleTable::dihedral(4)] {
            assert_eq!(parse_qnd(&write_qnd(&q)).unwrap(), q);
        }
    }

    #[test]
    fn comments_and_errors() {
        let q = parse_qnd("# R3\n3\n0 2 1 # row 0\n2 1 0\n\n1 0 2\n").unwrap();
        assert_eq!(q, QuandleTable::dihedral(3));
        let err = parse_qnd_rows("2\n0 1\n1 x\n").unwrap_err();
        assert!(matches!(err, IoError::Parse { line: 3, .. }), "{err}");
        let err = parse_qnd_rows("2\n0 1\n1 2\n").unwrap_err();
        assert!(matches!(err, IoError::Parse { line: 3, .. }));
        assert!(parse_qnd_rows("2\n0 1\n").is_err());
        assert!(parse_qnd_rows("2\n0 1 1\n1 0\n").is_err());
        assert!(parse_qnd_rows("").is_err());
        // bijectivity is left to validation
        assert!(parse_qnd_rows("2\n0 0\n1 0\n").is_ok());
        assert!(parse_qnd("2\n0 0\n1 0\n").is_err());
    }

    #[test]
    fn gap_matrices() {
        let rows = parse_gap_matrix("[ [ 1, 3, 2 ],\n [ 3, 2, 1 ], [ 2, 1, 3 ] ]", false).unwrap();
        assert_eq!(QuandleTable::from_rows(rows).unwrap(), QuandleTable::dihedral(3));
        let t = parse_gap_matrix("[[1,1],[2,2]]", true).unwrap();
        assert_eq!(t, vec![vec![0, 1], vec![0, 1]]);
        assert!(parse_gap_matrix("[[1,2],[3,1]]", false).is_err());
        assert!(parse_gap_matrix("[1,2]", false).is_err());
    }
}
