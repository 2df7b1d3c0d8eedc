use std::fmt::Write;
use std::path::Path;

use super::{content_lines, read_file, IoError};
use crate::grp::ExplicitGroup;
use crate::permgrp::{PermGroup, Permutation};

/// Contents of a `.grp` file.
#[derive(Clone, Debug)]
pub enum GroupFile {
    Table(ExplicitGroup),
    Perm(PermGroup),
}

impl GroupFile {
    /// The group as a table, enumerating a permutation group up to `cap`.
    pub fn to_explicit(&self, cap: usize) -> Result<ExplicitGroup, IoError> {
        match self {
            GroupFile::Table(g) => Ok(g.clone()),
            GroupFile::Perm(g) => Ok(ExplicitGroup::from_perm_group(g, cap)?),
        }
    }

    /// The group as permutations; a table becomes its regular representation.
    pub fn to_perm(&self) -> Result<PermGroup, IoError> {
        match self {
            GroupFile::Perm(g) => Ok(g.clone()),
            GroupFile::Table(g) => Ok(PermGroup::new(g.order(), g.regular_permutations())?),
        }
    }
}

pub fn parse_grp(text: &str) -> Result<GroupFile, IoError> {
    let mut lines = content_lines(text);
    let (first, header) = lines.next().ok_or_else(|| IoError::parse(1, "missing header"))?;
    let mut words = header.split_whitespace();
    let kind = words.next().unwrap_or("");
    let size: usize = match (words.next().map(str::parse), words.next()) {
        (Some(Ok(v)), None) => v,
        _ => return Err(IoError::parse(first, "expected `table n` or `perm d`")),
    };
    match kind {
        "table" => {
            let mut rows = Vec::with_capacity(size);
            for (line, content) in lines {
                let row = content
                    .split_whitespace()
                    .map(|tok| {
                        tok.parse::<usize>()
                            .map_err(|_| IoError::parse(line, format!("not an index: {tok:?}")))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                if row.len() != size {
                    return Err(IoError::parse(line, format!("{} entries, expected {size}", row.len())));
                }
                rows.push(row);
            }
            if rows.len() != size {
                return Err(IoError::parse(first, format!("{} rows, expected {size}", rows.len())));
            }
            Ok(GroupFile::Table(ExplicitGroup::from_table(rows, false)?))
        }
        "perm" => {
            let gens = lines
                .map(|(line, content)| {
                    Permutation::parse_cycles(content, size)
                        .map_err(|e| IoError::parse(line, e.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(GroupFile::Perm(PermGroup::new(size, gens)?))
        }
        _ => Err(IoError::parse(first, format!("unknown group format {kind:?}"))),
    }
}

pub fn read_grp(path: &Path) -> Result<GroupFile, IoError> {
    parse_grp(&read_file(path)?)
}

pub fn write_grp_perm(g: &PermGroup) -> String {
    let mut out = format!("perm {}\n", g.degree());
    for p in g.generators() {
        writeln!(out, "{p}").expect("writing to a string");
    }
    out
}

pub fn write_grp_table(g: &ExplicitGroup) -> String {
    let mut out = format!("table {}\n", g.order());
    for a in 0..g.order() {
        let cells: Vec<String> = g.table_row(a).iter().map(usize::to_string).collect();
        writeln!(out, "{}", cells.join(" ")).expect("writing to a string");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::library;

    #[test]
    fn perm_files() {
        let GroupFile::Perm(g) = parse_grp("# S3\nperm 3\n(0 1 2)\n(0 1)\n").unwrap() else {
            panic!("expected generators");
        };
        assert_eq!(g.order_u64(), Some(6));
        let again = parse_grp(&write_grp_perm(&g)).unwrap().to_perm().unwrap();
        assert!(again.same_group(&g));
        let err = parse_grp("perm 3\n(0 1 5)\n").unwrap_err();
        assert!(matches!(err, IoError::Parse { line: 2, .. }));
    }

    #[test]
    fn table_files() {
        let z3 = library::cyclic(3);
        let text = write_grp_table(&z3);
        assert_eq!(text, "table 3\n0 1 2\n1 2 0\n2 0 1\n");
        let g = parse_grp(&text).unwrap().to_explicit(100).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(parse_grp(&text).unwrap().to_perm().unwrap().order_u64(), Some(3));
        assert!(parse_grp("table 2\n0 1\n1 1\n").is_err());
        assert!(parse_grp("matrix 2\n").is_err());
    }
}
