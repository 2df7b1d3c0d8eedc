//! `.qnd` and `.grp` files and construction spec strings.

mod grp;
mod qnd;
mod spec;

use std::path::PathBuf;

use thiserror::Error;

pub use grp::{parse_grp, read_grp, write_grp_perm, write_grp_table, GroupFile};
pub use qnd::{parse_gap_matrix, parse_qnd, parse_qnd_rows, read_qnd, write_qnd};
pub use spec::{build, load_group, ConstructSpec, Constructed, SubgroupSpec, ThetaSpec};

use crate::construct::ConstructError;
use crate::grp::GroupError;
use crate::permgrp::PermError;
use crate::quandle::QuandleError;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    File {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("bad construction spec {spec:?}: {message}")]
    Spec { spec: String, message: String },
    #[error(transparent)]
    Quandle(#[from] QuandleError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
}

impl IoError {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        IoError::Parse {
            line,
            message: message.into(),
        }
    }

    /// Whether the failure is a size or enumeration cap.
    pub fn is_cap_exceeded(&self) -> bool {
        matches!(
            self,
            IoError::Construct(ConstructError::CapExceeded(_))
                | IoError::Construct(ConstructError::Group(GroupError::CapExceeded(_)))
                | IoError::Group(GroupError::CapExceeded(_))
                | IoError::Perm(PermError::CapExceeded(_))
        )
    }
}

/// Non-empty lines with comments removed, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn read_file(path: &std::path::Path) -> Result<String, IoError> {
    std::fs::read_to_string(path).map_err(|source| IoError::File {
        path: path.to_path_buf(),
        source,
    })
}
