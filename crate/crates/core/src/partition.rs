//! Equivalence relations on `{0, .., n-1}`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Disjoint-set forest with path halving and union by size.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    classes: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
            classes: n,
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; returns the surviving and absorbed roots if they differed.
    pub fn union(&mut self, a: usize, b: usize) -> Option<(usize, usize)> {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return None;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.classes -= 1;
        Some((ra, rb))
    }

    pub fn class_count(&self) -> usize {
        self.classes
    }

    pub fn into_partition(mut self) -> Partition {
        let n = self.len();
        let roots: Vec<usize> = (0..n).map(|x| self.find(x)).collect();
        Partition::from_labels(&roots)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("point {0} appears in more than one class")]
    Repeated(usize),
    #[error("classes do not cover 0..{0}")]
    NotCovering(usize),
    #[error("malformed partition text: {0}")]
    Syntax(String),
}

/// An equivalence relation in normal form: classes are ordered by their least
/// element and each class is sorted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

impl Partition {
    /// `0_Q`.
    pub fn singletons(n: usize) -> Self {
        Partition {
            class_of: (0..n).collect(),
            classes: (0..n).map(|i| vec![i]).collect(),
        }
    }

    /// `1_Q`.
    pub fn full(n: usize) -> Self {
        Partition {
            class_of: vec![0; n],
            classes: if n == 0 { vec![] } else { vec![(0..n).collect()] },
        }
    }

    /// Two points are related iff they carry the same label.
    pub fn from_labels<T: Eq + std::hash::Hash + Clone>(labels: &[T]) -> Self {
        let mut index = std::collections::HashMap::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut class_of = Vec::with_capacity(labels.len());
        for (x, lab) in labels.iter().enumerate() {
            let c = *index.entry(lab.clone()).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[c].push(x);
            class_of.push(c);
        }
        Partition { class_of, classes }
    }

    pub fn from_classes(n: usize, classes: &[Vec<usize>]) -> Result<Self, PartitionError> {
        let mut label = vec![usize::MAX; n];
        for (c, class) in classes.iter().enumerate() {
            for &x in class {
                if x >= n {
                    return Err(PartitionError::NotCovering(n));
                }
                if label[x] != usize::MAX {
                    return Err(PartitionError::Repeated(x));
                }
                label[x] = c;
            }
        }
        if label.contains(&usize::MAX) {
            return Err(PartitionError::NotCovering(n));
        }
        Ok(Self::from_labels(&label))
    }

    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn class(&self, c: usize) -> &[usize] {
        &self.classes[c]
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    pub fn is_discrete(&self) -> bool {
        self.classes.len() == self.len()
    }

    pub fn is_full(&self) -> bool {
        self.classes.len() <= 1
    }

    /// `self ≤ other` in the lattice of equivalence relations.
    pub fn refines(&self, other: &Partition) -> bool {
        assert_eq!(self.len(), other.len());
        self.classes
            .iter()
            .all(|c| c.iter().all(|&x| other.related(x, c[0])))
    }

    pub fn join(&self, other: &Partition) -> Partition {
        let mut uf = self.to_union_find();
        for c in other.classes() {
            for &x in &c[1..] {
                uf.union(c[0], x);
            }
        }
        uf.into_partition()
    }

    pub fn meet(&self, other: &Partition) -> Partition {
        let labels: Vec<(usize, usize)> = (0..self.len())
            .map(|x| (self.class_of[x], other.class_of[x]))
            .collect();
        Partition::from_labels(&labels)
    }

    pub fn to_union_find(&self) -> UnionFind {
        let mut uf = UnionFind::new(self.len());
        for c in &self.classes {
            for &x in &c[1..] {
                uf.union(c[0], x);
            }
        }
        uf
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, class) in self.classes.iter().enumerate() {
            if k > 0 {
                f.write_str("|")?;
            }
            let items: Vec<String> = class.iter().map(|x| x.to_string()).collect();
            f.write_str(&items.join(","))?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Parses `{0,2|1,3}`; the size is the number of points mentioned.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| PartitionError::Syntax(s.to_string()))?;
        if inner.trim().is_empty() {
            return Ok(Partition::singletons(0));
        }
        let classes = inner
            .split('|')
            .map(|class| {
                class
                    .split(',')
                    .map(|x| {
                        x.trim()
                            .parse::<usize>()
                            .map_err(|_| PartitionError::Syntax(s.to_string()))
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let n = classes.iter().map(Vec::len).sum();
        Partition::from_classes(n, &classes)
    }
}

impl serde::Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_form_and_text() {
        let p = Partition::from_labels(&['b', 'a', 'b', 'a']);
        assert_eq!(p.to_string(), "{0,2|1,3}");
        assert_eq!("{0,2|1,3}".parse::<Partition>().unwrap(), p);
        assert_eq!("{1,3|2,0}".parse::<Partition>().unwrap(), p);
        assert!("{0,1|1}".parse::<Partition>().is_err());
        assert!("{0,2}".parse::<Partition>().is_err());
    }

    #[test]
    fn lattice_operations() {
        let a: Partition = "{0,1|2|3}".parse().unwrap();
        let b: Partition = "{0|1,2|3}".parse().unwrap();
        assert_eq!(a.join(&b).to_string(), "{0,1,2|3}");
        assert!(a.meet(&b).is_discrete());
        assert!(a.refines(&a.join(&b)));
        assert!(!a.refines(&b));
        assert!(Partition::singletons(4).refines(&a));
        assert!(a.refines(&Partition::full(4)));
    }

    #[test]
    fn union_find_counts() {
        let mut uf = UnionFind::new(5);
        assert!(uf.union(0, 3).is_some());
        assert!(uf.union(3, 0).is_none());
        uf.union(1, 4);
        assert_eq!(uf.class_count(), 3);
        assert_eq!(uf.into_partition().to_string(), "{0,3|1,4|2}");
    }
}
