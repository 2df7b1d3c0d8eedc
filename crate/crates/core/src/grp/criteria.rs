//! The ⋆-property, `O_{π'}` and the conjugacy criteria built from them.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use super::numbers::{is_pi_prime_number, p_part, prime_support};
use super::{ExplicitGroup, GroupAutomorphism, GroupError, SubgroupView};

/// Default bound on the conjugacy class examined by [`star_property`].
pub const DEFAULT_STAR_CAP: usize = 200_000;

/// Default bound on `|G|` for [`pi_condition_ii`].
pub const DEFAULT_PI_CAP: usize = 5_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum StarOutcome {
    Holds,
    /// `witness` is conjugate to `x` in `G` but not inside `⟨x, witness⟩`.
    Fails { witness: usize },
    /// The class has more than `cap` elements; nothing was decided.
    Exceeded { cap: usize },
}

impl StarOutcome {
    pub fn holds(&self) -> Option<bool> {
        match self {
            StarOutcome::Holds => Some(true),
            StarOutcome::Fails { .. } => Some(false),
            StarOutcome::Exceeded { .. } => None,
        }
    }
}

/// Orbit of `x` under conjugation by the subgroup generated by `gens`.
pub fn conjugation_orbit(group: &ExplicitGroup, x: usize, gens: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; group.order()];
    seen[x] = true;
    let mut out = vec![x];
    let mut queue = VecDeque::from([x]);
    while let Some(z) = queue.pop_front() {
        for &g in gens {
            let w = group.conj(g, z);
            if !seen[w] {
                seen[w] = true;
                out.push(w);
                queue.push_back(w);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Decides whether every `y ∈ x^G` is conjugate to `x` inside `⟨x, y⟩`.
///
/// The conjugates of `x` by elements of `⟨x, y⟩` form the orbit of `x` under
/// conjugation by the two generators, so `⟨x, y⟩` itself is never listed.
pub fn star_property(group: &ExplicitGroup, x: usize, cap: usize) -> StarOutcome {
    let class = group.conjugacy_class(x);
    if class.size() > cap {
        return StarOutcome::Exceeded { cap };
    }
    for &y in &class.members {
        if y == x {
            continue;
        }
        let orbit = conjugation_orbit(group, x, &[x, y]);
        if orbit.binary_search(&y).is_err() {
            return StarOutcome::Fails { witness: y };
        }
    }
    StarOutcome::Holds
}

/// `x` is a π-element: every prime dividing `|x|` lies in `pi`.
pub fn is_pi_element(group: &ExplicitGroup, x: usize, pi: &[u64]) -> bool {
    prime_support(group.element_order(x) as u64)
        .iter()
        .all(|p| pi.contains(p))
}

/// `O_{π'}(G)`, the largest normal subgroup of order coprime to every prime in `pi`.
///
/// Computed as the join of the normal closures `⟨⟨g⟩⟩` of class
/// representatives whose order is coprime to `pi`.
pub fn o_pi_prime(group: &ExplicitGroup, pi: &[u64]) -> SubgroupView {
    let mut keep = Vec::new();
    for class in group.conjugacy_classes() {
        let g = class.representative;
        if g == 0 {
            continue;
        }
        let closure = group.normal_closure(&[g]);
        if is_pi_prime_number(closure.order() as u64, pi) {
            keep.push(g);
        }
    }
    if keep.is_empty() {
        group.trivial_subgroup()
    } else {
        group.normal_closure(&keep)
    }
}

/// `G = O_{π'}(G) C_G(x)`, decided as `x^{O_{π'}(G)} = x^G`.
pub fn condition_opc(group: &ExplicitGroup, x: usize, pi: &[u64]) -> bool {
    let o = o_pi_prime(group, pi);
    let orbit = conjugation_orbit(group, x, o.elements());
    orbit == group.conjugacy_class(x).members
}

/// `x^G ∩ C_G(x) = {x}`.
pub fn class_meets_centralizer_only_in_x(group: &ExplicitGroup, x: usize) -> bool {
    group
        .conjugacy_class(x)
        .members
        .iter()
        .all(|&y| y == x || group.mul(x, y) != group.mul(y, x))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OpprimeReport {
    /// `x^G ∩ C_G(x) = {x}`.
    pub cond_i: bool,
    /// `G = O_{p'}(G) C_G(x)`.
    pub cond_ii_opc: bool,
    /// `x^G` has the ⋆-property.
    pub cond_iii_star: bool,
    pub consistent: bool,
}

/// Evaluates the three equivalent conditions for a `p`-element independently.
pub fn theorem_opprime_check(
    group: &ExplicitGroup,
    x: usize,
    p: u64,
) -> Result<OpprimeReport, GroupError> {
    let order = group.element_order(x) as u64;
    if p_part(order, p) != order {
        return Err(GroupError::NotPElement { element: x, p });
    }
    let cond_i = class_meets_centralizer_only_in_x(group, x);
    let cond_ii_opc = condition_opc(group, x, &[p]);
    let cond_iii_star = star_property(group, x, DEFAULT_STAR_CAP)
        .holds()
        .ok_or(GroupError::CapExceeded(DEFAULT_STAR_CAP))?;
    Ok(OpprimeReport {
        cond_i,
        cond_ii_opc,
        cond_iii_star,
        consistent: cond_i == cond_ii_opc && cond_ii_opc == cond_iii_star,
    })
}

/// For `⟨x⟩` a Sylow `p`-subgroup: whether it has a normal `p`-complement,
/// i.e. `|O_{p'}(G)| · |x| = |G|`.
pub fn has_normal_p_complement_for_sylow(
    group: &ExplicitGroup,
    x: usize,
    p: u64,
) -> Result<bool, GroupError> {
    let order = group.element_order(x) as u64;
    if order != p_part(group.order() as u64, p) {
        return Err(GroupError::NotSylowCyclic { element: x, p });
    }
    let o = o_pi_prime(group, &[p]);
    Ok(o.order() as u64 * order == group.order() as u64)
}

/// `O_{π'}` of a subgroup, returned inside the ambient group.
fn o_pi_prime_of_subgroup(group: &ExplicitGroup, h: &SubgroupView, pi: &[u64]) -> SubgroupView {
    let (sub, embedding) = group.subgroup_as_group(h);
    let o = o_pi_prime(&sub, pi);
    SubgroupView::from_unsorted(o.elements().iter().map(|&i| embedding[i]).collect())
}

/// For every `g ∉ C_G(x)`: `⟨x, x^g⟩` has a normal π-complement and
/// `[O_{π'}(⟨x, x^g⟩), x] ∩ C_G(x) ≤ O_{π'}(C_G(x))`.
///
/// The complement is read as `H = O_{π'}(H)·⟨x⟩` for `H = ⟨x, x^g⟩` with
/// `x` and `x^g` in the same coset of `O_{π'}(H)`, which reduces to
/// `x^g x⁻¹ ∈ O_{π'}(H)`. Without the coset condition a 3-cycle of `S_3`
/// would pass vacuously, since there `H = ⟨x⟩`.
pub fn pi_condition_ii(
    group: &ExplicitGroup,
    x: usize,
    pi: &[u64],
    cap: usize,
) -> Result<bool, GroupError> {
    if !is_pi_element(group, x, pi) {
        return Err(GroupError::NotPiElement { element: x });
    }
    if group.order() > cap {
        return Err(GroupError::CapExceeded(cap));
    }
    let centralizer = group.centralizer(x);
    let o_centralizer = o_pi_prime_of_subgroup(group, &centralizer, pi);
    let mut seen = HashSet::new();
    for g in 0..group.order() {
        if centralizer.contains(g) {
            continue;
        }
        let xg = group.conj(g, x);
        if !seen.insert(xg) {
            continue;
        }
        let h = group.generated_subgroup(&[x, xg]);
        let o_h = o_pi_prime_of_subgroup(group, &h, pi);
        let complement = o_h.contains(group.mul(xg, group.inv(x)));
        let ok = complement && {
            let commutators: Vec<usize> = o_h
                .elements()
                .iter()
                .map(|&o| group.commutator(o, x))
                .collect();
            let comm = group.generated_subgroup(&commutators);
            comm.intersection(&centralizer).is_subset_of(&o_centralizer)
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `G ⋊ ⟨θ⟩` with `(g, θ^k)(h, θ^m) = (g θ^k(h), θ^{k+m})`; the pair
/// `(g, θ^k)` sits at index `k·|G| + g`.
pub fn semidirect_with_automorphism(group: &ExplicitGroup, theta: &GroupAutomorphism) -> ExplicitGroup {
    let n = group.order();
    let k = theta.order();
    let powers: Vec<GroupAutomorphism> = (0..k as i64).map(|i| theta.pow(i)).collect();
    let size = n * k;
    let rows = (0..size)
        .map(|a| {
            let (ka, ga) = (a / n, a % n);
            (0..size)
                .map(|b| {
                    let (kb, gb) = (b / n, b % n);
                    ((ka + kb) % k) * n + group.mul(ga, powers[ka].apply(gb))
                })
                .collect()
        })
        .collect();
    let labels = (0..size)
        .map(|a| format!("({},θ^{})", group.label(a % n), a / n))
        .collect();
    ExplicitGroup::from_table(rows, false)
        .expect("semidirect product of a group by an automorphism")
        .with_labels(labels)
}
