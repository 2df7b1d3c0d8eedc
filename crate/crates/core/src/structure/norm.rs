use std::collections::HashSet;

use serde::Serialize;

use super::{kernel_relation, orbit_relation, Partition, StructureError};
use crate::permgrp::{PermGroup, Permutation};
use crate::quandle::QuandleTable;

/// Whether `N ≤ Dis(Q)` lies in `Norm(Q)`.
#[derive(Clone, Debug, Serialize)]
pub struct AdmissibilityReport {
    #[serde(skip)]
    pub group: PermGroup,
    pub order: String,
    pub normal_in_lmlt: bool,
    /// `O_N ≤ C^N`.
    pub orbit_leq_kernel_rel: bool,
    pub admissible: bool,
    /// For racks, `Norm(Q)` is the set of normal subgroups of `LMlt(Q)`
    /// inside `Dis(Q)`; this is that membership test.
    pub rack_shortcut: Option<bool>,
    pub orbit_relation: Partition,
    /// `C^N` when it is an equivalence relation.
    pub kernel_relation: Option<Partition>,
}

pub fn norm_membership(q: &QuandleTable, n: &PermGroup) -> Result<AdmissibilityReport, StructureError> {
    if !q.dis().contains_group(n)? {
        return Err(StructureError::NotSubgroup("Dis(Q)"));
    }
    let normal_in_lmlt = q.lmlt().is_normal(n)?;
    let orbits = orbit_relation(q, n)?;
    let kernel = kernel_relation(q, n)?;
    let orbit_leq_kernel_rel = kernel.contains_partition(&orbits);
    let rack = q.validate().is_rack();
    Ok(AdmissibilityReport {
        group: n.clone(),
        order: n.order().to_string(),
        normal_in_lmlt,
        orbit_leq_kernel_rel,
        admissible: normal_in_lmlt && orbit_leq_kernel_rel,
        rack_shortcut: rack.then_some(normal_in_lmlt),
        orbit_relation: orbits,
        kernel_relation: kernel.to_partition().ok(),
    })
}

/// Every member of `Norm(Q)`, by enumerating the normal subgroups of
/// `LMlt(Q)` inside `Dis(Q)`; sorted by order.
pub fn norm_lattice_small(q: &QuandleTable, cap: usize) -> Result<Vec<PermGroup>, StructureError> {
    let lmlt = q.lmlt();
    let elements = q
        .dis()
        .elements(cap)
        .map_err(|_| StructureError::CapExceeded(cap))?;
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut normal: Vec<PermGroup> = vec![PermGroup::trivial(q.len())];
    let push_new = |list: &mut Vec<PermGroup>, g: PermGroup| {
        if list.iter().any(|h| h.same_group(&g)) {
            false
        } else {
            list.push(g);
            true
        }
    };
    for e in &elements {
        if seen.contains(e) {
            continue;
        }
        let mut stack = vec![e.clone()];
        seen.insert(e.clone());
        while let Some(z) = stack.pop() {
            for g in lmlt.generators() {
                let w = z.conjugated_by(g);
                if seen.insert(w.clone()) {
                    stack.push(w);
                }
            }
        }
        push_new(&mut normal, lmlt.normal_closure(std::slice::from_ref(e))?);
    }
    let mut grew = true;
    while grew {
        grew = false;
        let current = normal.clone();
        for (i, a) in current.iter().enumerate() {
            for b in &current[i + 1..] {
                let gens = a.generators().iter().chain(b.generators()).cloned().collect();
                grew |= push_new(&mut normal, PermGroup::new(q.len(), gens)?);
            }
        }
    }
    let mut admissible = Vec::new();
    for g in normal {
        if norm_membership(q, &g)?.admissible {
            admissible.push(g);
        }
    }
    admissible.sort_by_key(|g| g.order());
    Ok(admissible)
}
