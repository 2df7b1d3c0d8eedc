use std::collections::HashSet;

use super::{Partition, StructureError};
use crate::grp::ExplicitGroup;

/// For `H = ⟨D, extra⟩ ≤ L^t` with `D` the diagonal, the partition `α` of the
/// coordinates such that `H = {x : i α j ⇒ x_i = x_j}`, or `None` when `H`
/// has no such shape.
pub fn diagonal_overgroup_shape(
    l: &ExplicitGroup,
    t: usize,
    extra: &[Vec<usize>],
    cap: usize,
) -> Result<Option<Partition>, StructureError> {
    assert!(t >= 1);
    let n = l.order();
    let mut gens: Vec<Vec<usize>> = l.generating_set().into_iter().map(|g| vec![g; t]).collect();
    gens.extend(extra.iter().cloned());
    assert!(gens.iter().all(|g| g.len() == t && g.iter().all(|&x| x < n)));

    let labels: Vec<Vec<usize>> = (0..t).map(|i| gens.iter().map(|g| g[i]).collect()).collect();
    let alpha = Partition::from_labels(&labels);

    let mut index: HashSet<Vec<usize>> = HashSet::new();
    let mut elements = vec![vec![0usize; t]];
    index.insert(elements[0].clone());
    let mut next = 0;
    while next < elements.len() {
        let x = elements[next].clone();
        next += 1;
        for g in &gens {
            let y: Vec<usize> = x.iter().zip(g).map(|(&a, &b)| l.mul(a, b)).collect();
            if !index.contains(&y) {
                if elements.len() >= cap {
                    return Err(StructureError::CapExceeded(cap));
                }
                index.insert(y.clone());
                elements.push(y);
            }
        }
    }
    let expected = (n as u128).pow(alpha.class_count() as u32);
    Ok((elements.len() as u128 == expected).then_some(alpha))
}
