use num_bigint::BigUint;
use num_integer::Integer;
use serde::Serialize;

use super::ConstructError;
use crate::grp::numbers::is_prime;
use crate::permgrp::{PermGroup, Permutation};

/// `L^t ⋊ Z_t` on `t` disjoint copies of the domain of `L`.
#[derive(Clone, Debug)]
pub struct WreathCompanion {
    pub group: PermGroup,
    /// The base `L^t`.
    pub base: PermGroup,
    /// Cyclic shift of the copies, `i·d + p ↦ ((i + 1) mod t)·d + p`.
    pub shift: Permutation,
}

fn copy_of(g: &Permutation, copy: usize, d: usize, t: usize) -> Permutation {
    let mut images: Vec<usize> = (0..t * d).collect();
    for p in 0..d {
        images[copy * d + p] = copy * d + g.apply(p);
    }
    Permutation::from_images(images).expect("copy of a permutation")
}

pub fn wreath_companion(l: &PermGroup, t: usize) -> Result<WreathCompanion, ConstructError> {
    assert!(t >= 1);
    let d = l.degree();
    let shift = Permutation::from_images((0..t * d).map(|i| (i + d) % (t * d)).collect())?;
    let copies: Vec<Permutation> = (0..t)
        .flat_map(|c| l.generators().iter().map(move |g| copy_of(g, c, d, t)))
        .collect();
    let base = PermGroup::new(t * d, copies)?;
    let mut gens: Vec<Permutation> = l.generators().iter().map(|g| copy_of(g, 0, d, t)).collect();
    gens.push(shift.clone());
    let group = PermGroup::new(t * d, gens)?;
    Ok(WreathCompanion { group, base, shift })
}

/// Checks behind the claim that `(L, t, 1)` is superconnected with
/// nonsolvable `Dis`.
#[derive(Clone, Debug, Serialize)]
pub struct SkeletonReport {
    pub t: u64,
    pub degree: usize,
    pub l_order: String,
    pub base_order: String,
    pub group_order: String,
    /// `|G| = |L|^t · t`.
    pub group_order_expected: bool,
    pub base_order_expected: bool,
    pub base_normal: bool,
    pub base_coprime_to_t: bool,
    /// `|K| · t = |G|`, so `K` is a normal `t`-complement of `⟨shift⟩`.
    pub complement: bool,
    pub base_solvable: bool,
    pub verified: bool,
    pub lines: Vec<String>,
}

pub fn counterexample_skeleton(l: &PermGroup, t: u64) -> Result<SkeletonReport, ConstructError> {
    if !is_prime(t) {
        return Err(ConstructError::NotPrime(t));
    }
    let l_order = l.order();
    if !coprime(&l_order, t) {
        return Err(ConstructError::NotCoprime {
            order: l_order.to_string(),
            t,
        });
    }
    let tt = t as usize;
    let w = wreath_companion(l, tt)?;
    let base_order = w.base.order();
    let group_order = w.group.order();
    let expected_base = l_order.pow(t as u32);
    let base_order_expected = base_order == expected_base;
    let group_order_expected = group_order == &expected_base * t;
    let base_normal = w.group.is_normal(&w.base)?;
    let base_coprime_to_t = coprime(&base_order, t);
    let complement = base_normal && base_coprime_to_t && &base_order * t == group_order;
    let base_solvable = w.base.is_solvable();

    let mut lines = vec![
        format!("|K| = {base_order} on {} points", tt * l.degree()),
        format!("|G| = {group_order} = |K| * {t}"),
        format!("K normal in G: {base_normal}; gcd(|K|, {t}) = 1: {base_coprime_to_t}"),
    ];
    if complement {
        lines.push("normal t-complement => *-property for the shift".into());
        lines.push("*-property => (L,t,1) superconnected".into());
    }
    if base_solvable {
        lines.push("solvable Dis: not a counterexample".into());
    } else {
        lines.push("Dis = L^t nonsolvable => superconnected with nonsolvable Dis".into());
    }
    let verified = complement && base_order_expected && group_order_expected && !base_solvable;
    if verified {
        lines.push("counterexample skeleton verified".into());
    }
    Ok(SkeletonReport {
        t,
        degree: tt * l.degree(),
        l_order: l_order.to_string(),
        base_order: base_order.to_string(),
        group_order: group_order.to_string(),
        group_order_expected,
        base_order_expected,
        base_normal,
        base_coprime_to_t,
        complement,
        base_solvable,
        verified,
        lines,
    })
}

fn coprime(a: &BigUint, t: u64) -> bool {
    a.gcd(&BigUint::from(t)) == BigUint::from(1u8)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn companion_orders() {
        let w = wreath_companion(&PermGroup::symmetric(3), 2).unwrap();
        assert_eq!(w.group.order_u64(), Some(72));
        assert_eq!(w.base.order_u64(), Some(36));
        assert!(w.group.is_normal(&w.base).unwrap());
        assert_eq!(w.shift.order(), 2);
    }

    #[test]
    fn skeleton_preconditions() {
        let a5 = PermGroup::alternating(5);
        assert!(matches!(counterexample_skeleton(&a5, 2), Err(ConstructError::NotCoprime { .. })));
        assert!(matches!(counterexample_skeleton(&a5, 9), Err(ConstructError::NotPrime(9))));
        let z3 = PermGroup::cyclic(3);
        let r = counterexample_skeleton(&z3, 2).unwrap();
        assert!(r.complement && r.base_solvable && !r.verified);
        assert!(r.lines.iter().any(|l| l.contains("not a counterexample")));
    }

    #[test]
    fn a5_skeleton_small_t() {
        let r = counterexample_skeleton(&PermGroup::alternating(5), 7).unwrap();
        assert_eq!(r.base_order, BigUint::from(60u32).pow(7).to_string());
        assert!(r.verified);
    }
}
