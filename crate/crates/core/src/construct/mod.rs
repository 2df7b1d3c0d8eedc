//! Quandles built from groups: conjugation, coset, affine and `(G, t, θ)`.

mod tensor;
mod wreath;

use thiserror::Error;

use crate::grp::{ExplicitGroup, GroupAutomorphism, GroupError, SubgroupView};
use crate::permgrp::PermError;
use crate::quandle::QuandleTable;

pub use tensor::{
    class_of_theta, conjugacy_class_map, direct_power, quandles_as_conj_map, shift_automorphism,
    tensor_quandle, TensorQuandle, DEFAULT_SIZE_CAP,
};
pub use wreath::{counterexample_skeleton, wreath_companion, SkeletonReport, WreathCompanion};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("set is not closed under conjugation: {g} conjugates {x} outside it")]
    NotClosedUnderConjugation { g: usize, x: usize },
    #[error("subgroup element {0} is not fixed by the automorphism")]
    SubgroupNotFixed(usize),
    #[error("elements do not form a subgroup")]
    NotASubgroup,
    #[error("group is not abelian")]
    NotAbelian,
    #[error("map is not an automorphism")]
    NotAutomorphism,
    #[error("result would exceed the size cap of {0}")]
    CapExceeded(usize),
    #[error("t = {0} is not prime")]
    NotPrime(u64),
    #[error("|L| = {order} and t = {t} are not coprime")]
    NotCoprime { order: String, t: u64 },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// `Conj(S)` for a conjugation-closed set `S`, indexed along sorted `S`.
/// Returns the table and the group element behind each index.
pub fn conj_quandle(
    group: &ExplicitGroup,
    set: &[usize],
) -> Result<(QuandleTable, Vec<usize>), ConstructError> {
    let mut elements = set.to_vec();
    elements.sort_unstable();
    elements.dedup();
    let mut index = vec![usize::MAX; group.order()];
    for (i, &x) in elements.iter().enumerate() {
        index[x] = i;
    }
    for g in 0..group.order() {
        for &x in &elements {
            if index[group.conj(g, x)] == usize::MAX {
                return Err(ConstructError::NotClosedUnderConjugation { g, x });
            }
        }
    }
    let rows = elements
        .iter()
        .map(|&x| elements.iter().map(|&y| index[group.conj(x, y)]).collect())
        .collect();
    let table = QuandleTable::from_rows(rows).expect("conjugation rows are bijections");
    Ok((table, elements))
}

/// `(G, H, θ)` with `H ≤ Fix(θ)`.
#[derive(Clone, Debug)]
pub struct CosetQuandleSpec {
    pub group: ExplicitGroup,
    pub subgroup: SubgroupView,
    pub theta: GroupAutomorphism,
}

impl CosetQuandleSpec {
    pub fn new(
        group: ExplicitGroup,
        subgroup: SubgroupView,
        theta: GroupAutomorphism,
    ) -> Result<Self, ConstructError> {
        if !group.is_subgroup(&subgroup) {
            return Err(ConstructError::NotASubgroup);
        }
        if let Some(&h) = subgroup.elements().iter().find(|&&h| theta.apply(h) != h) {
            return Err(ConstructError::SubgroupNotFixed(h));
        }
        Ok(CosetQuandleSpec {
            group,
            subgroup,
            theta,
        })
    }

    /// Uses `H = Fix(θ)`.
    pub fn with_fixed_subgroup(group: ExplicitGroup, theta: GroupAutomorphism) -> Self {
        let subgroup = theta.fixed_subgroup();
        CosetQuandleSpec {
            group,
            subgroup,
            theta,
        }
    }
}

/// A coset quandle with its cosets, each named by its least element.
#[derive(Clone, Debug)]
pub struct CosetQuandle {
    pub table: QuandleTable,
    pub representatives: Vec<usize>,
    /// Coset index of every group element.
    pub coset_of: Vec<usize>,
}

/// `xH * yH = x θ(x⁻¹ y) H`, checked to be independent of representatives.
pub fn coset_quandle(spec: &CosetQuandleSpec) -> CosetQuandle {
    let g = &spec.group;
    let n = g.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut representatives = Vec::new();
    for x in 0..n {
        if coset_of[x] == usize::MAX {
            for &h in spec.subgroup.elements() {
                coset_of[g.mul(x, h)] = representatives.len();
            }
            representatives.push(x);
        }
    }
    let product = |x: usize, y: usize| g.mul(x, spec.theta.apply(g.mul(g.inv(x), y)));
    for x in 0..n {
        for y in 0..n {
            let (rx, ry) = (representatives[coset_of[x]], representatives[coset_of[y]]);
            assert_eq!(
                coset_of[product(x, y)],
                coset_of[product(rx, ry)],
                "coset operation depends on representatives"
            );
        }
    }
    let rows = representatives
        .iter()
        .map(|&x| representatives.iter().map(|&y| coset_of[product(x, y)]).collect())
        .collect();
    CosetQuandle {
        table: QuandleTable::from_rows(rows).expect("coset rows are bijections"),
        representatives,
        coset_of,
    }
}

/// `Aff(A, f)`: `x * y = x · f(x)⁻¹ · f(y)`, i.e. `(1 - f)(x) + f(y)`.
pub fn affine_quandle(a: &ExplicitGroup, f: &GroupAutomorphism) -> Result<QuandleTable, ConstructError> {
    if !a.is_abelian() {
        return Err(ConstructError::NotAbelian);
    }
    let n = a.order();
    let rows = (0..n)
        .map(|x| {
            let base = a.mul(x, a.inv(f.apply(x)));
            (0..n).map(|y| a.mul(base, f.apply(y))).collect()
        })
        .collect();
    Ok(QuandleTable::from_rows(rows).expect("affine rows are bijections"))
}

/// `Aff(Z_n, f)`: `x * y = (1 - f)x + f y mod n`.
pub fn affine_cyclic(n: usize, f: i64) -> Result<QuandleTable, ConstructError> {
    if n == 0 {
        return Err(ConstructError::NotAutomorphism);
    }
    let m = n as i64;
    let f = f.rem_euclid(m);
    if num_integer::gcd(f, m) != 1 {
        return Err(ConstructError::NotAutomorphism);
    }
    Ok(QuandleTable::from_fn(n, |x, y| {
        ((1 - f) * x as i64 + f * y as i64).rem_euclid(m) as usize
    })
    .expect("affine rows are bijections"))
}
