//! Permutations and permutation groups.
//!
//! A [`PermGroup`] is a generator list plus a lazily built base and strong
//! generating set. Everything that needs the group order or membership goes
//! through the stabilizer chain; orbits and blocks use the generators only.

mod blocks;
mod chain;
mod perm;

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;
use thiserror::Error;

pub use blocks::BlockSystem;
pub use perm::{max_point, parse_cycle_list, Permutation};

use crate::partition::{Partition, UnionFind};
use chain::StabChain;

/// Largest degree accepted by [`PermGroup::new`].
pub const DEFAULT_DEGREE_CAP: usize = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("not a bijection: image {image} repeated at position {position}")]
    NotABijection { position: usize, image: usize },
    #[error("point {0} repeated in cycle notation")]
    RepeatedPoint(usize),
    #[error("malformed cycle notation: {0:?}")]
    Syntax(String),
    #[error("degree {degree} exceeds the cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },
    #[error("group is not transitive")]
    NotTransitive,
    #[error("partition is not invariant under the group")]
    NotInvariant,
    #[error("enumeration exceeded the cap of {0} elements")]
    CapExceeded(usize),
}

pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabChain>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        let chain = OnceLock::new();
        if let Some(c) = self.chain.get() {
            let _ = chain.set(c.clone());
        }
        PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            chain,
        }
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .finish()
    }
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self, PermError> {
        Self::with_degree_cap(degree, generators, DEFAULT_DEGREE_CAP)
    }

    pub fn with_degree_cap(
        degree: usize,
        generators: Vec<Permutation>,
        cap: usize,
    ) -> Result<Self, PermError> {
        if degree > cap {
            return Err(PermError::DegreeCapExceeded { degree, cap });
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let generators = generators.into_iter().filter(|g| !g.is_identity()).collect();
        Ok(PermGroup {
            degree,
            generators,
            chain: OnceLock::new(),
        })
    }

    /// Builds the group while discarding generators that are already members,
    /// which keeps the generating set short for groups given by many elements.
    pub fn generated_reduced<'a, I>(degree: usize, elements: I) -> Result<Self, PermError>
    where
        I: IntoIterator<Item = &'a Permutation>,
    {
        if degree > DEFAULT_DEGREE_CAP {
            return Err(PermError::DegreeCapExceeded {
                degree,
                cap: DEFAULT_DEGREE_CAP,
            });
        }
        let mut chain = StabChain::new(degree, &[], &[]);
        let mut gens = Vec::new();
        for g in elements {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
            if chain.add_generator(g) {
                gens.push(g.clone());
            }
        }
        let group = PermGroup {
            degree,
            generators: gens,
            chain: OnceLock::new(),
        };
        let _ = group.chain.set(chain);
        Ok(group)
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            chain: OnceLock::new(),
        }
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Permutation::from_cycles(n, &[(0..n).collect()]).unwrap());
            gens.push(Permutation::from_cycles(n, &[vec![0, 1]]).unwrap());
        }
        PermGroup::new(n, gens).expect("valid generators")
    }

    pub fn alternating(n: usize) -> Self {
        let gens = (2..n)
            .map(|k| Permutation::from_cycles(n, &[vec![0, 1, k]]).unwrap())
            .collect();
        PermGroup::new(n, gens).expect("valid generators")
    }

    pub fn cyclic(n: usize) -> Self {
        let gens = if n >= 2 {
            vec![Permutation::from_cycles(n, &[(0..n).collect()]).unwrap()]
        } else {
            vec![]
        };
        PermGroup::new(n, gens).expect("valid generators")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::new(self.degree, &self.generators, &[]))
    }

    /// Base points of the stabilizer chain.
    pub fn base(&self) -> Vec<usize> {
        self.chain().base()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        self.chain().strong_generators().to_vec()
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    /// The order when it fits in a `u64`.
    pub fn order_u64(&self) -> Option<u64> {
        u64::try_from(&self.order()).ok()
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool, PermError> {
        self.check_degree(p)?;
        Ok(self.chain().contains(p))
    }

    fn check_degree(&self, p: &Permutation) -> Result<(), PermError> {
        if p.degree() != self.degree {
            return Err(PermError::DegreeMismatch {
                left: self.degree,
                right: p.degree(),
            });
        }
        Ok(())
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    /// Breadth-first orbit of `point`, sorted.
    pub fn orbit(&self, point: usize) -> Vec<usize> {
        assert!(point < self.degree, "point out of range");
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut queue = VecDeque::from([point]);
        let mut out = vec![point];
        while let Some(q) = queue.pop_front() {
            for g in &self.generators {
                let r = g.apply(q);
                if !seen[r] {
                    seen[r] = true;
                    out.push(r);
                    queue.push_back(r);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn orbits(&self) -> Partition {
        let mut uf = UnionFind::new(self.degree);
        for g in &self.generators {
            for x in 0..self.degree {
                uf.union(x, g.apply(x));
            }
        }
        uf.into_partition()
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbit(0).len() == self.degree
    }

    pub fn point_stabilizer(&self, point: usize) -> PermGroup {
        assert!(point < self.degree, "point out of range");
        let chain = self.chain();
        let gens = if chain.base().first() == Some(&point) {
            chain.level_generators(1)
        } else if self.generators.iter().all(|g| g.apply(point) == point) {
            return self.clone();
        } else {
            StabChain::new(self.degree, &self.generators, &[point]).level_generators(1)
        };
        PermGroup::new(self.degree, gens).expect("same degree")
    }

    /// Generators of `H` lie in `self`.
    pub fn contains_group(&self, h: &PermGroup) -> Result<bool, PermError> {
        for g in h.generators() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.degree == other.degree
            && self.order() == other.order()
            && self.contains_group(other).unwrap_or(false)
    }

    /// Tests normality of `n` by sifting conjugates of its generators.
    pub fn is_normal(&self, n: &PermGroup) -> Result<bool, PermError> {
        if n.degree != self.degree {
            return Err(PermError::DegreeMismatch {
                left: self.degree,
                right: n.degree,
            });
        }
        for g in &self.generators {
            for h in n.generators() {
                if !n.contains(&h.conjugated_by(g))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Smallest subgroup containing `seeds` and normalized by `self`.
    pub fn normal_closure(&self, seeds: &[Permutation]) -> Result<PermGroup, PermError> {
        for s in seeds {
            self.check_degree(s)?;
        }
        let mut chain = StabChain::new(self.degree, &[], &[]);
        let mut gens: Vec<Permutation> = Vec::new();
        let mut queue: VecDeque<Permutation> = seeds.iter().cloned().collect();
        while let Some(h) = queue.pop_front() {
            if chain.add_generator(&h) {
                for g in &self.generators {
                    queue.push_back(h.conjugated_by(g));
                }
                gens.push(h);
            }
        }
        let group = PermGroup {
            degree: self.degree,
            generators: gens,
            chain: OnceLock::new(),
        };
        let _ = group.chain.set(chain);
        Ok(group)
    }

    /// `G'`, the normal closure of commutators of generator pairs.
    pub fn derived_subgroup(&self) -> PermGroup {
        let mut comms = Vec::new();
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[i + 1..] {
                let c = Permutation::commutator(a, b);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms).expect("same degree")
    }

    /// `G ⊇ G' ⊇ G'' ⊇ …` up to the first repeated term.
    pub fn derived_series(&self) -> Vec<PermGroup> {
        let mut series = vec![self.clone()];
        loop {
            let last = series.last().unwrap();
            if last.is_trivial() {
                break;
            }
            let next = last.derived_subgroup();
            if next.order() == last.order() {
                break;
            }
            series.push(next);
        }
        series
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().order() == BigUint::from(1u32)
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..]
                .iter()
                .all(|b| a.after(b) == b.after(a))
        })
    }

    /// Elements mapping every point into its own class of `partition`.
    ///
    /// The partition must be a block system for the group; the kernel is the
    /// pointwise stabilizer of the class points in the diagonal action on
    /// points plus classes.
    pub fn kernel_of_action(&self, partition: &Partition) -> Result<PermGroup, PermError> {
        if partition.len() != self.degree {
            return Err(PermError::DegreeMismatch {
                left: self.degree,
                right: partition.len(),
            });
        }
        let n = self.degree;
        let m = partition.class_count();
        let mut lifted = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            let mut images: Vec<u32> = g.raw().to_vec();
            for c in 0..m {
                let class = partition.class(c);
                let target = partition.class_of(g.apply(class[0]));
                if class.iter().any(|&x| partition.class_of(g.apply(x)) != target) {
                    return Err(PermError::NotInvariant);
                }
                images.push((n + target) as u32);
            }
            lifted.push(Permutation::from_images_unchecked(images));
        }
        let prefix: Vec<usize> = (n..n + m).collect();
        let chain = StabChain::new(n + m, &lifted, &prefix);
        let gens = chain
            .level_generators(m)
            .into_iter()
            .map(|g| Permutation::from_images_unchecked(g.raw()[..n].to_vec()))
            .collect();
        PermGroup::new(n, gens)
    }

    /// All elements by plain closure, failing once more than `cap` are found.
    pub fn elements(&self, cap: usize) -> Result<Vec<Permutation>, PermError> {
        let id = self.identity();
        let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
        let mut out = vec![id];
        let mut next = 0;
        while next < out.len() {
            let x = out[next].clone();
            next += 1;
            for g in &self.generators {
                let y = g.after(&x);
                if seen.insert(y.clone()) {
                    if out.len() >= cap {
                        return Err(PermError::CapExceeded(cap));
                    }
                    out.push(y);
                }
            }
        }
        Ok(out)
    }
}
