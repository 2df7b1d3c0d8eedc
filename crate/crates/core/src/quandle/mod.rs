//! Finite left quasigroups, racks and quandles given by operation tables.

mod iso;
mod report;
mod term;
mod validate;

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use crate::partition::{Partition, UnionFind};
use crate::permgrp::{PermGroup, Permutation};

pub use iso::{are_isomorphic, is_homomorphism};
pub use report::{QuandleClassReport, Witness};
pub use term::{Term, TermError};
pub use validate::{validate_rows, Classification, Validation, Violation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuandleError {
    #[error("empty table")]
    Empty,
    #[error("row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("row {row} contains {value}, outside 0..{n}")]
    EntryOutOfRange { row: usize, value: usize, n: usize },
    #[error("left-quasigroup violation at row {row}: {value} appears twice")]
    RowNotBijective { row: usize, value: usize },
    #[error("partition has {got} points, table has {expected}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("not a congruence: {0}")]
    NotACongruence(CongruenceViolation),
    #[error(transparent)]
    Term(#[from] TermError),
}

/// Which operation a congruence violation was found in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Op {
    Star,
    Ldiv,
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Op::Star => "*",
            Op::Ldiv => "\\",
        })
    }
}

/// `x α y` and `z α t`, but `x op z` and `y op t` lie in different classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CongruenceViolation {
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub t: usize,
    pub op: Op,
}

impl fmt::Display for CongruenceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let CongruenceViolation { x, y, z, t, op } = *self;
        write!(f, "{x}~{y}, {z}~{t} but {x}{op}{z} ≁ {y}{op}{t}")
    }
}

/// An `n × n` table whose rows are permutations: `row x` is `L_x`.
pub struct QuandleTable {
    n: usize,
    rows: Vec<Permutation>,
    inverse_rows: Vec<Permutation>,
    lmlt: OnceLock<PermGroup>,
    dis: OnceLock<PermGroup>,
}

impl Clone for QuandleTable {
    fn clone(&self) -> Self {
        let out = QuandleTable::from_permutations(self.rows.clone());
        if let Some(g) = self.lmlt.get() {
            let _ = out.lmlt.set(g.clone());
        }
        if let Some(g) = self.dis.get() {
            let _ = out.dis.set(g.clone());
        }
        out
    }
}

impl PartialEq for QuandleTable {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
    }
}

impl Eq for QuandleTable {}

impl fmt::Debug for QuandleTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("QuandleTable")
            .field("n", &self.n)
            .field("rows", &self.rows_vec())
            .finish()
    }
}

impl QuandleTable {
    /// Accepts any table whose rows are bijections; axioms beyond that are
    /// reported by [`QuandleTable::validate`].
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self, QuandleError> {
        let n = rows.len();
        if n == 0 {
            return Err(QuandleError::Empty);
        }
        let mut perms = Vec::with_capacity(n);
        for (x, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(QuandleError::NotSquare {
                    row: x,
                    len: row.len(),
                    n,
                });
            }
            let mut seen = vec![false; n];
            for &v in &row {
                if v >= n {
                    return Err(QuandleError::EntryOutOfRange { row: x, value: v, n });
                }
                if seen[v] {
                    return Err(QuandleError::RowNotBijective { row: x, value: v });
                }
                seen[v] = true;
            }
            perms.push(Permutation::from_images(row).expect("row checked"));
        }
        Ok(Self::from_permutations(perms))
    }

    /// Builds the table from its left translations, which must share a degree
    /// equal to their count.
    pub fn from_permutations(rows: Vec<Permutation>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.degree() == n), "row degree must equal table size");
        let inverse_rows = rows.iter().map(Permutation::inverse).collect();
        QuandleTable {
            n,
            rows,
            inverse_rows,
            lmlt: OnceLock::new(),
            dis: OnceLock::new(),
        }
    }

    /// `x * y = f(x, y)` on `{0, .., n-1}`.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self, QuandleError> {
        Self::from_rows((0..n).map(|x| (0..n).map(|y| f(x, y)).collect()).collect())
    }

    /// `x * y = y`.
    pub fn trivial(n: usize) -> Self {
        Self::from_permutations(vec![Permutation::identity(n); n])
    }

    /// `x * y = 2x - y mod n`.
    pub fn dihedral(n: usize) -> Self {
        Self::from_fn(n, |x, y| (2 * x + n - y) % n).expect("dihedral rows are bijections")
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.rows[x].apply(y)
    }

    /// `x \ y`, the unique `z` with `x * z = y`.
    #[inline]
    pub fn ldiv(&self, x: usize, y: usize) -> usize {
        self.inverse_rows[x].apply(y)
    }

    /// `L_x`.
    pub fn left_translation(&self, x: usize) -> &Permutation {
        &self.rows[x]
    }

    pub fn left_translations(&self) -> &[Permutation] {
        &self.rows
    }

    pub fn rows_vec(&self) -> Vec<Vec<usize>> {
        self.rows.iter().map(|r| r.images().collect()).collect()
    }

    pub fn validate(&self) -> Validation {
        validate::validate_table(self)
    }

    /// `LMlt(Q) = ⟨L_x⟩`.
    pub fn lmlt(&self) -> &PermGroup {
        self.lmlt.get_or_init(|| {
            PermGroup::generated_reduced(self.n, self.rows.iter()).expect("rows have degree n")
        })
    }

    /// `Dis(Q)`, the normal closure of `{L_x L_0⁻¹}` in `LMlt(Q)`.
    pub fn dis(&self) -> &PermGroup {
        self.dis.get_or_init(|| {
            let l0_inv = &self.inverse_rows[0];
            let seeds: Vec<Permutation> = self.rows[1..]
                .iter()
                .map(|r| r.after(l0_inv))
                .filter(|p| !p.is_identity())
                .collect();
            self.lmlt().normal_closure(&seeds).expect("rows have degree n")
        })
    }

    /// Orbits of `LMlt(Q)`, by closure under the rows.
    pub fn orbits(&self) -> Partition {
        let mut uf = UnionFind::new(self.n);
        for r in &self.rows {
            for y in 0..self.n {
                uf.union(y, r.apply(y));
            }
        }
        uf.into_partition()
    }

    pub fn is_connected(&self) -> bool {
        self.orbits().class_count() == 1
    }

    /// `λ_Q`: `x λ y` iff `L_x = L_y`.
    pub fn cayley_kernel(&self) -> Partition {
        Partition::from_labels(&self.rows)
    }

    /// First pair `x < y` with `L_x = L_y`.
    pub fn faithful_witness(&self) -> Option<(usize, usize)> {
        let mut first: HashMap<&Permutation, usize> = HashMap::new();
        let mut best: Option<(usize, usize)> = None;
        for (y, r) in self.rows.iter().enumerate() {
            match first.get(r) {
                Some(&x) => {
                    if best.is_none_or(|b| (x, y) < b) {
                        best = Some((x, y));
                    }
                }
                None => {
                    first.insert(r, y);
                }
            }
        }
        best
    }

    pub fn is_faithful(&self) -> bool {
        self.faithful_witness().is_none()
    }

    /// Smallest subset containing `seeds` and closed under `*` and `\`.
    pub fn subquandle_closure(&self, seeds: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.n];
        let mut members = Vec::new();
        let mut sorted_seeds = seeds.to_vec();
        sorted_seeds.sort_unstable();
        for s in sorted_seeds {
            if !inside[s] {
                inside[s] = true;
                members.push(s);
            }
        }
        let mut next = 0;
        while next < members.len() {
            let a = members[next];
            next += 1;
            let mut k = 0;
            while k < next {
                let b = members[k];
                k += 1;
                for z in [
                    self.op(a, b),
                    self.op(b, a),
                    self.ldiv(a, b),
                    self.ldiv(b, a),
                ] {
                    if !inside[z] {
                        inside[z] = true;
                        members.push(z);
                    }
                }
            }
        }
        members.sort_unstable();
        members
    }

    /// The operation restricted to a subset closed under `*` and `\`, relabelled
    /// along the sorted subset.
    pub fn restrict(&self, subset: &[usize]) -> QuandleTable {
        let mut index = vec![usize::MAX; self.n];
        for (i, &s) in subset.iter().enumerate() {
            index[s] = i;
        }
        let rows = subset
            .iter()
            .map(|&x| subset.iter().map(|&y| index[self.op(x, y)]).collect())
            .collect();
        QuandleTable::from_rows(rows).expect("subset closed under the operations")
    }

    /// Whether `subset` is a single orbit of its own left multiplication group.
    fn subset_connected(&self, subset: &[usize], inside: &[bool]) -> bool {
        let start = subset[0];
        let mut seen = vec![false; self.n];
        seen[start] = true;
        let mut count = 1;
        let mut queue = VecDeque::from([start]);
        while let Some(z) = queue.pop_front() {
            for &s in subset {
                let w = self.op(s, z);
                debug_assert!(inside[w]);
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == subset.len()
    }

    /// First pair `x < y` whose generated subquandle is disconnected.
    pub fn superconnected_witness(&self) -> Option<(usize, usize)> {
        let mut verdicts: HashMap<Vec<u64>, bool> = HashMap::new();
        let words = self.n.div_ceil(64);
        for x in 0..self.n {
            for y in x + 1..self.n {
                let closure = self.subquandle_closure(&[x, y]);
                let mut key = vec![0u64; words];
                let mut inside = vec![false; self.n];
                for &s in &closure {
                    key[s / 64] |= 1 << (s % 64);
                    inside[s] = true;
                }
                let ok = *verdicts
                    .entry(key)
                    .or_insert_with(|| self.subset_connected(&closure, &inside));
                if !ok {
                    return Some((x, y));
                }
            }
        }
        None
    }

    pub fn is_superconnected(&self) -> bool {
        self.superconnected_witness().is_none()
    }

    /// First `(x, y)` with `y ≠ x` and `x * y = y`.
    ///
    /// That test characterises superfaithfulness for quandles only, so a table
    /// that is not idempotent first reports a pair with `L_x = L_y`, if any.
    pub fn superfaithful_witness(&self) -> Option<(usize, usize)> {
        if (0..self.n).any(|x| self.op(x, x) != x) {
            if let Some(w) = self.faithful_witness() {
                return Some(w);
            }
        }
        (0..self.n)
            .flat_map(|x| (0..self.n).map(move |y| (x, y)))
            .find(|&(x, y)| x != y && self.op(x, y) == y)
    }

    /// Every left translation fixes only its own index.
    pub fn is_superfaithful(&self) -> bool {
        self.superfaithful_witness().is_none()
    }

    /// First column `x` with `y * x = z * x` for some `y < z`, as `(x, y, z)`.
    pub fn latin_witness(&self) -> Option<(usize, usize, usize)> {
        for x in 0..self.n {
            let mut seen = vec![usize::MAX; self.n];
            for y in 0..self.n {
                let v = self.op(y, x);
                if seen[v] != usize::MAX {
                    return Some((x, seen[v], y));
                }
                seen[v] = y;
            }
        }
        None
    }

    pub fn is_latin(&self) -> bool {
        self.latin_witness().is_none()
    }

    /// `Q_k` with `x *_k y = L_x^k(y)`.
    pub fn power(&self, k: i64) -> QuandleTable {
        QuandleTable::from_permutations(self.rows.iter().map(|r| r.pow(k)).collect())
    }

    /// First witness that `alpha` is not compatible with `*` and `\`.
    pub fn congruence_violation(&self, alpha: &Partition) -> Option<CongruenceViolation> {
        assert_eq!(alpha.len(), self.n, "partition size");
        for class in alpha.classes() {
            let x = class[0];
            for &y in &class[1..] {
                for z in 0..self.n {
                    let checks = [
                        (Op::Star, (x, z, y, z), self.op(x, z), self.op(y, z)),
                        (Op::Star, (z, x, z, y), self.op(z, x), self.op(z, y)),
                        (Op::Ldiv, (x, z, y, z), self.ldiv(x, z), self.ldiv(y, z)),
                        (Op::Ldiv, (z, x, z, y), self.ldiv(z, x), self.ldiv(z, y)),
                    ];
                    for (op, (a, b, c, d), u, v) in checks {
                        if !alpha.related(u, v) {
                            return Some(CongruenceViolation {
                                x: a,
                                y: c,
                                z: b,
                                t: d,
                                op,
                            });
                        }
                    }
                }
            }
        }
        None
    }

    /// `Q/α` on the classes of a congruence, in class order.
    pub fn quotient(&self, alpha: &Partition) -> Result<QuandleTable, QuandleError> {
        if alpha.len() != self.n {
            return Err(QuandleError::SizeMismatch {
                expected: self.n,
                got: alpha.len(),
            });
        }
        if let Some(w) = self.congruence_violation(alpha) {
            return Err(QuandleError::NotACongruence(w));
        }
        let m = alpha.class_count();
        let rows = (0..m)
            .map(|a| {
                let x = alpha.class(a)[0];
                (0..m)
                    .map(|b| alpha.class_of(self.op(x, alpha.class(b)[0])))
                    .collect()
            })
            .collect();
        Ok(QuandleTable::from_rows(rows).expect("quotient of a left quasigroup"))
    }

    /// Classes of `x ↦ |{y : s(x, y) = t(x, y)}|`.
    pub fn term_count_relation(&self, s: &Term, t: &Term) -> Partition {
        let counts: Vec<usize> = (0..self.n)
            .map(|x| {
                (0..self.n)
                    .filter(|&y| s.eval(self, x, y) == t.eval(self, x, y))
                    .count()
            })
            .collect();
        Partition::from_labels(&counts)
    }
}
