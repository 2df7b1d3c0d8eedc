use crate::partition::{Partition, UnionFind};

use super::{PermError, PermGroup};

/// A partition of the points into blocks of imprimitivity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSystem {
    partition: Partition,
}

impl BlockSystem {
    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn block_count(&self) -> usize {
        self.partition.class_count()
    }

    pub fn block_size(&self) -> usize {
        self.partition.class(0).len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        self.partition.classes()
    }

    pub fn is_trivial(&self) -> bool {
        self.partition.is_discrete() || self.partition.is_full()
    }
}

/// Smallest equivalence containing `(a, b)` that every generator preserves.
fn minimal_blocks(group: &PermGroup, a: usize, b: usize) -> Partition {
    let mut uf = UnionFind::new(group.degree());
    let mut pending = Vec::new();
    if uf.union(a, b).is_some() {
        pending.push((a, b));
    }
    while let Some((x, y)) = pending.pop() {
        for g in group.generators() {
            let (gx, gy) = (g.apply(x), g.apply(y));
            if uf.union(gx, gy).is_some() {
                pending.push((gx, gy));
            }
        }
    }
    uf.into_partition()
}

impl PermGroup {
    /// Minimal block system in which `seed.0` and `seed.1` share a block.
    pub fn minimal_block_system(&self, seed: (usize, usize)) -> Result<BlockSystem, PermError> {
        for p in [seed.0, seed.1] {
            if p >= self.degree() {
                return Err(PermError::PointOutOfRange {
                    point: p,
                    degree: self.degree(),
                });
            }
        }
        if !self.is_transitive() {
            return Err(PermError::NotTransitive);
        }
        Ok(BlockSystem {
            partition: minimal_blocks(self, seed.0, seed.1),
        })
    }

    /// Transitive with no block system other than the trivial ones.
    ///
    /// Seeds `(0, i)` are only needed for one `i` per orbit of the stabilizer
    /// of `0`, since the minimal block through `{0, i}` is the same for every
    /// point of that suborbit.
    pub fn is_primitive(&self) -> bool {
        if !self.is_transitive() {
            return false;
        }
        if self.degree() <= 2 {
            return true;
        }
        let suborbits = self.point_stabilizer(0).orbits();
        suborbits
            .classes()
            .iter()
            .filter(|c| c[0] != 0)
            .all(|c| minimal_blocks(self, 0, c[0]).is_full())
    }

    /// Every nontrivial block system of a transitive group, via all seeds `(0, i)`.
    pub fn block_systems_through_zero(&self) -> Result<Vec<BlockSystem>, PermError> {
        let mut out: Vec<BlockSystem> = Vec::new();
        for i in 1..self.degree() {
            let sys = self.minimal_block_system((0, i))?;
            if !sys.is_trivial() && !out.contains(&sys) {
                out.push(sys);
            }
        }
        Ok(out)
    }
}
