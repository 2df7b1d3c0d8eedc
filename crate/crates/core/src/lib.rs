//! Finite quandles and the permutation-group and finite-group machinery used
//! to decide connectedness, superconnectedness, simplicity and primitivity.

pub mod cli;
pub mod construct;
pub mod grp;
pub mod io;
pub mod partition;
pub mod permgrp;
pub mod quandle;
pub mod structure;

pub use partition::{Partition, UnionFind};
pub use permgrp::{PermError, PermGroup, Permutation};
pub use quandle::{QuandleClassReport, QuandleTable};
