//! Finite groups given by multiplication tables, and the conjugacy criteria
//! built on top of them.

mod automorphism;
pub mod criteria;
mod explicit;
pub mod library;
pub mod numbers;

use thiserror::Error;

use crate::permgrp::PermError;

pub use automorphism::GroupAutomorphism;
pub use criteria::{
    condition_opc, has_normal_p_complement_for_sylow, is_pi_element, o_pi_prime,
    pi_condition_ii, semidirect_with_automorphism, star_property, theorem_opprime_check,
    OpprimeReport, StarOutcome, DEFAULT_PI_CAP, DEFAULT_STAR_CAP,
};
pub use explicit::{ConjClass, ExplicitGroup, SubgroupView, FULL_ASSOCIATIVITY_LIMIT};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("empty multiplication table")]
    Empty,
    #[error("row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("row {row} contains {value}, outside the table")]
    EntryOutOfRange { row: usize, value: usize },
    #[error("no two-sided identity")]
    NoIdentity,
    #[error("row {row} repeats an element")]
    NotLatin { row: usize },
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("({0}·{1})·{2} ≠ {0}·({1}·{2})")]
    NotAssociative(usize, usize, usize),
    #[error("map is not a bijection of the group")]
    NotABijection,
    #[error("map does not respect the product of {0} and {1}")]
    NotAHomomorphism(usize, usize),
    #[error("group elements carry no permutation form")]
    NoPermutationLabels,
    #[error("permutation does not normalize the group")]
    NotNormalizing,
    #[error("group is not abelian")]
    NotAbelian,
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("element {element} is not a {p}-element")]
    NotPElement { element: usize, p: u64 },
    #[error("element {element} is not a π-element")]
    NotPiElement { element: usize },
    #[error("⟨{element}⟩ is not a Sylow {p}-subgroup")]
    NotSylowCyclic { element: usize, p: u64 },
    #[error("enumeration exceeded the cap of {0}")]
    CapExceeded(usize),
}
