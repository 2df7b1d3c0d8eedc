use std::collections::HashMap;

use super::{ExplicitGroup, GroupError, SubgroupView};
use crate::permgrp::Permutation;

/// An automorphism of an [`ExplicitGroup`], stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAutomorphism {
    images: Vec<u32>,
    /// `Some(g)` when the automorphism is known to be conjugation by `g`.
    pub inner_witness: Option<usize>,
}

impl GroupAutomorphism {
    /// Checks bijectivity and the homomorphism law on all pairs.
    pub fn new(group: &ExplicitGroup, images: Vec<usize>) -> Result<Self, GroupError> {
        let n = group.order();
        if images.len() != n {
            return Err(GroupError::NotABijection);
        }
        let mut seen = vec![false; n];
        for &im in &images {
            if im >= n || seen[im] {
                return Err(GroupError::NotABijection);
            }
            seen[im] = true;
        }
        for a in 0..n {
            for b in 0..n {
                if images[group.mul(a, b)] != group.mul(images[a], images[b]) {
                    return Err(GroupError::NotAHomomorphism(a, b));
                }
            }
        }
        Ok(GroupAutomorphism {
            images: images.into_iter().map(|i| i as u32).collect(),
            inner_witness: None,
        })
    }

    pub fn identity(group: &ExplicitGroup) -> Self {
        GroupAutomorphism {
            images: (0..group.order() as u32).collect(),
            inner_witness: Some(0),
        }
    }

    /// `x ↦ g x g⁻¹`.
    pub fn inner(group: &ExplicitGroup, g: usize) -> Self {
        GroupAutomorphism {
            images: (0..group.order()).map(|x| group.conj(g, x) as u32).collect(),
            inner_witness: Some(g),
        }
    }

    /// Conjugation by an outside permutation that normalizes a permutation group.
    pub fn from_perm_conjugation(group: &ExplicitGroup, p: &Permutation) -> Result<Self, GroupError> {
        let perms = group.perms().ok_or(GroupError::NoPermutationLabels)?;
        let index: HashMap<&Permutation, usize> =
            perms.iter().enumerate().map(|(i, q)| (q, i)).collect();
        let images = perms
            .iter()
            .map(|q| {
                let c = q.conjugated_by(p);
                index
                    .get(&c)
                    .copied()
                    .ok_or(GroupError::NotNormalizing)
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut auto = Self::new(group, images)?;
        auto.inner_witness = group.element_of_perm(p);
        Ok(auto)
    }

    /// `x ↦ x^k` on an abelian group, for `k` coprime to the exponent.
    pub fn power_map(group: &ExplicitGroup, k: i64) -> Result<Self, GroupError> {
        if !group.is_abelian() {
            return Err(GroupError::NotAbelian);
        }
        let images = (0..group.order()).map(|x| group.pow(x, k)).collect();
        Self::new(group, images)
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&i| i as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GroupAutomorphism) -> GroupAutomorphism {
        GroupAutomorphism {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
            inner_witness: None,
        }
    }

    pub fn inverse(&self) -> GroupAutomorphism {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u32;
        }
        GroupAutomorphism {
            images: inv,
            inner_witness: None,
        }
    }

    pub fn pow(&self, k: i64) -> GroupAutomorphism {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = GroupAutomorphism {
            images: (0..self.images.len() as u32).collect(),
            inner_witness: None,
        };
        for _ in 0..k.unsigned_abs() {
            acc = acc.compose(&base);
        }
        acc
    }

    pub fn order(&self) -> usize {
        let mut k = 1;
        let mut acc = self.clone();
        while !acc.is_identity() {
            acc = acc.compose(self);
            k += 1;
        }
        k
    }

    /// `Fix(θ) = {x : θ(x) = x}`.
    pub fn fixed_subgroup(&self) -> SubgroupView {
        SubgroupView::from_sorted(
            self.images
                .iter()
                .enumerate()
                .filter(|(i, &v)| *i as u32 == v)
                .map(|(i, _)| i)
                .collect(),
        )
    }
}
