//! Congruences, invariant relations and admissible subgroups of quandles.

mod diagonal;
mod norm;

use std::collections::{HashMap, VecDeque};

use serde::Serialize;
use thiserror::Error;

pub use crate::partition::Partition;
use crate::partition::UnionFind;
use crate::permgrp::{PermError, PermGroup, Permutation};
use crate::quandle::{CongruenceViolation, QuandleTable};

pub use diagonal::diagonal_overgroup_shape;
pub use norm::{norm_lattice_small, norm_membership, AdmissibilityReport};

/// Default bound on group orders enumerated element by element.
pub const DEFAULT_CAP: usize = 20_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("simplicity needs at least two elements, got {0}")]
    TooSmall(usize),
    #[error("partition is not invariant under LMlt")]
    NotInvariant,
    #[error("group is not contained in {0}")]
    NotSubgroup(&'static str),
    #[error("relation is not transitive: {0}~{1}, {1}~{2}, {0}≁{2}")]
    NotTransitive(usize, usize, usize),
    #[error("enumeration exceeded the cap of {0}")]
    CapExceeded(usize),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// `L_x` maps `a α b` to a pair in different classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InvarianceWitness {
    pub generator: usize,
    pub a: usize,
    pub b: usize,
}

/// First translation that does not map classes of `alpha` onto classes.
pub fn invariance_witness(q: &QuandleTable, alpha: &Partition) -> Option<InvarianceWitness> {
    for x in 0..q.len() {
        let l = q.left_translation(x);
        for class in alpha.classes() {
            let target = alpha.class_of(l.apply(class[0]));
            if let Some(&b) = class[1..].iter().find(|&&b| alpha.class_of(l.apply(b)) != target) {
                return Some(InvarianceWitness {
                    generator: x,
                    a: class[0],
                    b,
                });
            }
        }
    }
    None
}

/// Classes of `alpha` are blocks of `LMlt(Q)`.
pub fn is_invariant(q: &QuandleTable, alpha: &Partition) -> bool {
    invariance_witness(q, alpha).is_none()
}

pub fn congruence_witness(q: &QuandleTable, alpha: &Partition) -> Option<CongruenceViolation> {
    q.congruence_violation(alpha)
}

pub fn is_congruence(q: &QuandleTable, alpha: &Partition) -> bool {
    congruence_witness(q, alpha).is_none()
}

/// Smallest congruence relating `a` and `b`.
pub fn principal_congruence(q: &QuandleTable, a: usize, b: usize) -> Partition {
    let n = q.len();
    let mut uf = UnionFind::new(n);
    let mut queue = VecDeque::from([(a, b)]);
    while let Some((u, v)) = queue.pop_front() {
        if uf.union(u, v).is_none() {
            continue;
        }
        for z in 0..n {
            queue.push_back((q.op(z, u), q.op(z, v)));
            queue.push_back((q.ldiv(z, u), q.ldiv(z, v)));
            queue.push_back((q.op(u, z), q.op(v, z)));
            queue.push_back((q.ldiv(u, z), q.ldiv(v, z)));
        }
    }
    uf.into_partition()
}

/// First principal congruence strictly between `0_Q` and `1_Q`.
///
/// Congruences are invariant, so on a connected quandle every nontrivial one
/// contains a pair `(0, b)` and only those pairs are generated.
pub fn simplicity_witness(q: &QuandleTable) -> Result<Option<Partition>, StructureError> {
    let n = q.len();
    if n < 2 {
        return Err(StructureError::TooSmall(n));
    }
    let firsts: Vec<usize> = if q.is_connected() { vec![0] } else { (0..n).collect() };
    for a in firsts {
        for b in a + 1..n {
            let c = principal_congruence(q, a, b);
            if !c.is_full() {
                return Ok(Some(c));
            }
        }
    }
    Ok(None)
}

/// Only `0_Q` and `1_Q` are congruences.
pub fn is_simple(q: &QuandleTable) -> Result<bool, StructureError> {
    Ok(simplicity_witness(q)?.is_none())
}

/// `LMlt(Q)` acts primitively; disconnected quandles are never primitive.
pub fn is_primitive(q: &QuandleTable) -> bool {
    q.lmlt().is_primitive()
}

/// A nontrivial invariant partition, or the orbit partition when disconnected.
pub fn primitivity_witness(q: &QuandleTable) -> Option<Partition> {
    let g = q.lmlt();
    if !g.is_transitive() {
        return Some(g.orbits());
    }
    if g.is_primitive() {
        return None;
    }
    let systems = g.block_systems_through_zero().expect("transitive");
    systems
        .into_iter()
        .find(|s| !s.is_trivial())
        .map(|s| s.partition().clone())
}

/// `Dis_α`, the normal closure in `LMlt(Q)` of `L_x L_y⁻¹` for `x α y`.
pub fn dis_alpha(q: &QuandleTable, alpha: &Partition) -> PermGroup {
    let mut seeds = Vec::new();
    for class in alpha.classes() {
        let inv = q.left_translation(class[0]).inverse();
        for &y in &class[1..] {
            let d = q.left_translation(y).after(&inv);
            if !d.is_identity() {
                seeds.push(d);
            }
        }
    }
    q.lmlt().normal_closure(&seeds).expect("same degree")
}

/// `Dis^α`: elements of `Dis(Q)` mapping every point into its own class.
pub fn dis_upper_alpha(q: &QuandleTable, alpha: &Partition) -> Result<PermGroup, StructureError> {
    if !is_invariant(q, alpha) {
        return Err(StructureError::NotInvariant);
    }
    Ok(q.dis().kernel_of_action(alpha)?)
}

/// `LMlt^α`: elements of `LMlt(Q)` mapping every point into its own class.
pub fn lmlt_kernel(q: &QuandleTable, alpha: &Partition) -> Result<PermGroup, StructureError> {
    if !is_invariant(q, alpha) {
        return Err(StructureError::NotInvariant);
    }
    Ok(q.lmlt().kernel_of_action(alpha)?)
}

fn check_in_lmlt(q: &QuandleTable, n: &PermGroup) -> Result<(), StructureError> {
    if q.lmlt().contains_group(n)? {
        Ok(())
    } else {
        Err(StructureError::NotSubgroup("LMlt(Q)"))
    }
}

/// `O_N`: `x ~ y` iff `y = h(x)` for some `h ∈ N`.
pub fn orbit_relation(q: &QuandleTable, n: &PermGroup) -> Result<Partition, StructureError> {
    check_in_lmlt(q, n)?;
    Ok(n.orbits())
}

/// A binary relation on `{0, .., n-1}` as a dense boolean matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    n: usize,
    pairs: Vec<bool>,
}

impl Relation {
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let pairs = (0..n * n).map(|i| f(i / n, i % n)).collect();
        Relation { n, pairs }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.pairs[x * self.n + y]
    }

    /// Every pair related in `alpha` is related here.
    pub fn contains_partition(&self, alpha: &Partition) -> bool {
        alpha
            .classes()
            .iter()
            .all(|c| c.iter().all(|&x| c.iter().all(|&y| self.contains(x, y))))
    }

    /// The relation as a partition; fails with a witness triple when it is
    /// not reflexive, symmetric and transitive.
    pub fn to_partition(&self) -> Result<Partition, StructureError> {
        let n = self.n;
        for x in 0..n {
            if !self.contains(x, x) {
                return Err(StructureError::NotTransitive(x, x, x));
            }
            for y in 0..n {
                if self.contains(x, y) && !self.contains(y, x) {
                    return Err(StructureError::NotTransitive(y, x, y));
                }
            }
        }
        for x in 0..n {
            for y in (0..n).filter(|&y| self.contains(x, y)) {
                if let Some(z) = (0..n).find(|&z| self.contains(y, z) && !self.contains(x, z)) {
                    return Err(StructureError::NotTransitive(x, y, z));
                }
            }
        }
        let labels: Vec<usize> = (0..n)
            .map(|x| (0..n).find(|&y| self.contains(x, y)).expect("reflexive"))
            .collect();
        Ok(Partition::from_labels(&labels))
    }
}

/// `C^N`: `x ~ y` iff `L_x L_y⁻¹ ∈ N`.
pub fn kernel_relation(q: &QuandleTable, n: &PermGroup) -> Result<Relation, StructureError> {
    check_in_lmlt(q, n)?;
    let inverses: Vec<Permutation> = q.left_translations().iter().map(Permutation::inverse).collect();
    let mut cache: HashMap<Permutation, bool> = HashMap::new();
    let size = q.len();
    let mut pairs = vec![false; size * size];
    for x in 0..size {
        for y in 0..size {
            let d = q.left_translation(x).after(&inverses[y]);
            let inside = *cache
                .entry(d)
                .or_insert_with_key(|d| n.contains(d).expect("same degree"));
            pairs[x * size + y] = inside;
        }
    }
    Ok(Relation { n: size, pairs })
}

/// `σ_N`: `x ~ y` iff `N_x = N_y`, by enumerating `N`.
pub fn sigma_relation(
    q: &QuandleTable,
    n: &PermGroup,
    cap: usize,
) -> Result<Partition, StructureError> {
    check_in_lmlt(q, n)?;
    let elements = n
        .elements(cap)
        .map_err(|_| StructureError::CapExceeded(cap))?;
    let words = elements.len().div_ceil(64);
    let stabilizers: Vec<Vec<u64>> = (0..q.len())
        .map(|x| {
            let mut bits = vec![0u64; words];
            for (i, h) in elements.iter().enumerate() {
                if h.apply(x) == x {
                    bits[i / 64] |= 1 << (i % 64);
                }
            }
            bits
        })
        .collect();
    Ok(Partition::from_labels(&stabilizers))
}

/// The verdicts behind both parts of the conjecture on superconnected quandles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureVerdict {
    pub superconnected: bool,
    pub simple: bool,
    pub solvable_dis: bool,
    pub abelian_dis: bool,
    /// Superconnected with nonsolvable `Dis(Q)`.
    pub counterexample_i: bool,
    /// Simple and superconnected with nonabelian `Dis(Q)`.
    pub counterexample_ii: bool,
}

pub fn conjecture_report(q: &QuandleTable) -> ConjectureVerdict {
    let superconnected = q.is_superconnected();
    let simple = is_simple(q).unwrap_or(false);
    let solvable_dis = q.dis().is_solvable();
    let abelian_dis = q.dis().is_abelian();
    ConjectureVerdict {
        superconnected,
        simple,
        solvable_dis,
        abelian_dis,
        counterexample_i: superconnected && !solvable_dis,
        counterexample_ii: simple && superconnected && !abelian_dis,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn invariance() {
        let d4 = QuandleTable::dihedral(4);
        assert!(is_invariant(&d4, &d4.cayley_kernel()));
        assert!(is_invariant(&d4, &Partition::singletons(4)));
        let d3 = QuandleTable::dihedral(3);
        let w = invariance_witness(&d3, &part("{0,1|2}")).unwrap();
        let l = d3.left_translation(w.generator);
        assert!(!part("{0,1|2}").related(l.apply(w.a), l.apply(w.b)));
    }

    #[test]
    fn congruences() {
        let d4 = QuandleTable::dihedral(4);
        assert!(is_congruence(&d4, &d4.cayley_kernel()));
        assert!(is_congruence(&d4, &Partition::singletons(4)));
        assert!(is_congruence(&d4, &Partition::full(4)));
        let t2 = QuandleTable::trivial(2);
        assert!(is_congruence(&t2, &t2.orbits()));
    }

    /// Meet of all congruences relating `a` and `b`, over every partition.
    fn principal_oracle(q: &QuandleTable, a: usize, b: usize) -> Partition {
        let n = q.len();
        let mut best = Partition::full(n);
        let mut labels = vec![0usize; n];
        loop {
            let p = Partition::from_labels(&labels);
            if p.related(a, b) && is_congruence(q, &p) {
                best = best.meet(&p);
            }
            // next restricted growth string
            let mut i = n - 1;
            loop {
                if i == 0 {
                    return best;
                }
                let max_before = labels[..i].iter().copied().max().unwrap();
                if labels[i] <= max_before {
                    labels[i] += 1;
                    labels[i + 1..].iter_mut().for_each(|l| *l = 0);
                    break;
                }
                i -= 1;
            }
        }
    }

    #[test]
    fn principal() {
        let d4 = QuandleTable::dihedral(4);
        assert!(principal_congruence(&d4, 1, 1).is_discrete());
        // every L_x moves 0 and 2 together, so 1 and 3 stay apart
        assert_eq!(principal_congruence(&d4, 0, 2), part("{0,2|1|3}"));
        for q in [QuandleTable::dihedral(4), QuandleTable::dihedral(6), QuandleTable::trivial(3)] {
            for a in 0..q.len() {
                for b in 0..q.len() {
                    assert_eq!(principal_congruence(&q, a, b), principal_oracle(&q, a, b));
                }
            }
        }
        let d3 = QuandleTable::dihedral(3);
        for (a, b) in [(0, 1), (0, 2), (1, 2)] {
            assert!(principal_congruence(&d3, a, b).is_full());
        }
    }

    #[test]
    fn simplicity_and_primitivity() {
        let d3 = QuandleTable::dihedral(3);
        assert!(is_simple(&d3).unwrap());
        assert!(is_primitive(&d3));
        let d4 = QuandleTable::dihedral(4);
        assert!(!is_simple(&d4).unwrap());
        assert!(!is_primitive(&d4));
        assert_eq!(primitivity_witness(&d4), Some(part("{0,2|1,3}")));
        assert_eq!(is_simple(&QuandleTable::trivial(1)), Err(StructureError::TooSmall(1)));
        assert!(!is_simple(&QuandleTable::trivial(3)).unwrap());
    }

    #[test]
    fn dis_operators() {
        let d4 = QuandleTable::dihedral(4);
        assert!(dis_alpha(&d4, &Partition::singletons(4)).is_trivial());
        assert!(dis_alpha(&d4, &Partition::full(4)).same_group(d4.dis()));
        assert!(dis_upper_alpha(&d4, &Partition::full(4)).unwrap().same_group(d4.dis()));
        assert!(dis_upper_alpha(&d4, &Partition::singletons(4)).unwrap().is_trivial());
        let lambda = d4.cayley_kernel();
        let upper = dis_upper_alpha(&d4, &lambda).unwrap();
        let brute = d4
            .dis()
            .elements(100)
            .unwrap()
            .into_iter()
            .filter(|h| (0..4).all(|x| lambda.related(h.apply(x), x)))
            .count();
        assert_eq!(upper.order_u64(), Some(brute as u64));
        let d3 = QuandleTable::dihedral(3);
        assert!(matches!(
            dis_upper_alpha(&d3, &part("{0,1|2}")),
            Err(StructureError::NotInvariant)
        ));
    }

    #[test]
    fn orbit_and_kernel_relations() {
        let d4 = QuandleTable::dihedral(4);
        let one = PermGroup::trivial(4);
        assert!(orbit_relation(&d4, &one).unwrap().is_discrete());
        assert_eq!(kernel_relation(&d4, &one).unwrap().to_partition().unwrap(), d4.cayley_kernel());
        assert_eq!(orbit_relation(&d4, d4.dis()).unwrap(), part("{0,2|1,3}"));
        let d5 = QuandleTable::dihedral(5);
        assert!(orbit_relation(&d5, d5.dis()).unwrap().is_full());
        let outside = PermGroup::symmetric(4);
        assert!(matches!(
            orbit_relation(&d4, &outside),
            Err(StructureError::NotSubgroup(_))
        ));
    }

    #[test]
    fn relation_extraction_fails_loudly() {
        let r = Relation::from_fn(3, |x, y| x == y || (x, y) == (0, 1) || (x, y) == (1, 0) || (x, y) == (1, 2) || (x, y) == (2, 1));
        assert!(matches!(r.to_partition(), Err(StructureError::NotTransitive(..))));
        let s = Relation::from_fn(3, |x, y| x / 2 == y / 2);
        assert_eq!(s.to_partition().unwrap(), part("{0,1|2}"));
    }

    #[test]
    fn sigma() {
        let d4 = QuandleTable::dihedral(4);
        assert!(sigma_relation(&d4, &PermGroup::trivial(4), 100).unwrap().is_full());
        let s = sigma_relation(&d4, d4.lmlt(), 100).unwrap();
        assert!(s.refines(&d4.cayley_kernel()) || d4.cayley_kernel().refines(&s));
        assert!(is_invariant(&d4, &s));
        let d5 = QuandleTable::dihedral(5);
        // Dis of an odd dihedral quandle is regular
        assert!(sigma_relation(&d5, d5.dis(), 100).unwrap().is_full());
    }

    #[test]
    fn conjecture_verdicts() {
        let r = conjecture_report(&QuandleTable::dihedral(3));
        assert!(r.superconnected && r.solvable_dis && r.abelian_dis);
        assert!(!r.counterexample_i && !r.counterexample_ii);
        let r = conjecture_report(&QuandleTable::dihedral(4));
        assert!(!r.superconnected && !r.counterexample_i);
    }
}
