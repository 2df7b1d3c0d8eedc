use std::collections::{HashMap, HashSet, VecDeque};
use std::hash::Hash;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::GroupError;
use crate::permgrp::{PermGroup, Permutation};

/// Tables up to this order get a full associativity check on load.
pub const FULL_ASSOCIATIVITY_LIMIT: usize = 512;
const SAMPLED_TRIPLES: usize = 10_000;

/// A finite group given by its multiplication table. The identity is element 0.
#[derive(Clone, Debug)]
pub struct ExplicitGroup {
    n: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    labels: Option<Vec<String>>,
    perms: Option<Arc<Vec<Permutation>>>,
}

/// A subgroup as a sorted element list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubgroupView {
    elements: Vec<usize>,
}

impl SubgroupView {
    pub fn from_sorted(elements: Vec<usize>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        SubgroupView { elements }
    }

    pub fn from_unsorted(mut elements: Vec<usize>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        SubgroupView { elements }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &SubgroupView) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn intersection(&self, other: &SubgroupView) -> SubgroupView {
        SubgroupView {
            elements: self
                .elements
                .iter()
                .copied()
                .filter(|&x| other.contains(x))
                .collect(),
        }
    }
}

/// A conjugacy class; `representative` is its least element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClass {
    pub representative: usize,
    pub members: Vec<usize>,
}

impl ConjClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }
}

impl ExplicitGroup {
    /// Loads a multiplication table, relabelling so that the identity is element 0.
    ///
    /// Associativity is checked on every triple up to order 512 (or always when
    /// `strict`), otherwise on 10 000 deterministically sampled triples.
    pub fn from_table(rows: Vec<Vec<usize>>, strict: bool) -> Result<Self, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::NotSquare { row: i, len: row.len(), n });
            }
            if let Some(&v) = row.iter().find(|&&v| v >= n) {
                return Err(GroupError::EntryOutOfRange { row: i, value: v });
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|x| rows[e][x] == x && rows[x][e] == x))
            .ok_or(GroupError::NoIdentity)?;
        // swap labels e <-> 0
        let relabel = |x: usize| {
            if x == e {
                0
            } else if x == 0 {
                e
            } else {
                x
            }
        };
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[relabel(a) * n + relabel(b)] = relabel(rows[a][b]) as u32;
            }
        }
        for a in 0..n {
            let mut seen = vec![false; n];
            for b in 0..n {
                let v = table[a * n + b] as usize;
                if seen[v] {
                    return Err(GroupError::NotLatin { row: a });
                }
                seen[v] = true;
            }
        }
        let mut inverse = vec![0u32; n];
        for a in 0..n {
            let b = (0..n)
                .find(|&b| table[a * n + b] == 0)
                .ok_or(GroupError::NoInverse(a))?;
            if table[b * n + a] != 0 {
                return Err(GroupError::NoInverse(a));
            }
            inverse[a] = b as u32;
        }
        let g = ExplicitGroup {
            n,
            table,
            inverse,
            labels: None,
            perms: None,
        };
        g.check_associativity(strict)?;
        Ok(g)
    }

    fn check_associativity(&self, strict: bool) -> Result<(), GroupError> {
        let n = self.n;
        let check = |a: usize, b: usize, c: usize| {
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                Err(GroupError::NotAssociative(a, b, c))
            } else {
                Ok(())
            }
        };
        if strict || n <= FULL_ASSOCIATIVITY_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..SAMPLED_TRIPLES {
                check(rng.random_range(0..n), rng.random_range(0..n), rng.random_range(0..n))?;
            }
        }
        Ok(())
    }

    /// Enumerates `⟨gens⟩` for any element type with a multiplication. The
    /// identity becomes element 0 and the remaining order is breadth-first.
    pub fn from_closure<T, F>(
        identity: T,
        gens: &[T],
        mul: F,
        cap: usize,
    ) -> Result<(Self, Vec<T>), GroupError>
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &T) -> T,
    {
        let mut index: HashMap<T, usize> = HashMap::from([(identity.clone(), 0)]);
        let mut elements = vec![identity];
        let mut next = 0;
        while next < elements.len() {
            let x = elements[next].clone();
            next += 1;
            for g in gens {
                let y = mul(&x, g);
                if !index.contains_key(&y) {
                    if elements.len() >= cap {
                        return Err(GroupError::CapExceeded(cap));
                    }
                    index.insert(y.clone(), elements.len());
                    elements.push(y);
                }
            }
        }
        let n = elements.len();
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = index[&mul(&elements[a], &elements[b])] as u32;
            }
        }
        let mut inverse = vec![0u32; n];
        for a in 0..n {
            for b in 0..n {
                if table[a * n + b] == 0 {
                    inverse[a] = b as u32;
                    break;
                }
            }
        }
        Ok((
            ExplicitGroup {
                n,
                table,
                inverse,
                labels: None,
                perms: None,
            },
            elements,
        ))
    }

    /// Materializes a permutation group; elements are labelled in cycle notation.
    pub fn from_perm_group(group: &PermGroup, cap: usize) -> Result<Self, GroupError> {
        let (mut g, perms) = Self::from_closure(
            group.identity(),
            group.generators(),
            |a: &Permutation, b: &Permutation| a.after(b),
            cap,
        )?;
        g.labels = Some(perms.iter().map(|p| p.to_string()).collect());
        g.perms = Some(Arc::new(perms));
        Ok(g)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// `g x g⁻¹`.
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `a b a⁻¹ b⁻¹`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn pow(&self, x: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(x) } else { x };
        let mut acc = 0;
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    pub fn table_row(&self, a: usize) -> Vec<usize> {
        (0..self.n).map(|b| self.mul(a, b)).collect()
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The permutation realizing element `x`, for groups built from permutations.
    pub fn perm(&self, x: usize) -> Option<&Permutation> {
        self.perms.as_ref().map(|p| &p[x])
    }

    pub fn perms(&self) -> Option<&[Permutation]> {
        self.perms.as_ref().map(|p| p.as_slice())
    }

    pub fn element_of_perm(&self, p: &Permutation) -> Option<usize> {
        self.perms.as_ref()?.iter().position(|q| q == p)
    }

    /// Looks an element up by label, by permutation in cycle notation, or by index.
    pub fn parse_element(&self, text: &str) -> Result<usize, GroupError> {
        let text = text.trim();
        if let Some(labels) = &self.labels {
            if let Some(i) = labels.iter().position(|l| l == text) {
                return Ok(i);
            }
        }
        if text.starts_with('(') {
            if let Some(perms) = &self.perms {
                let degree = perms[0].degree();
                let p = Permutation::parse_cycles(text, degree)?;
                return self
                    .element_of_perm(&p)
                    .ok_or_else(|| GroupError::UnknownElement(text.to_string()));
            }
        }
        match text.parse::<usize>() {
            Ok(i) if i < self.n => Ok(i),
            _ => Err(GroupError::UnknownElement(text.to_string())),
        }
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (a + 1..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn whole(&self) -> SubgroupView {
        SubgroupView::from_sorted((0..self.n).collect())
    }

    pub fn trivial_subgroup(&self) -> SubgroupView {
        SubgroupView::from_sorted(vec![0])
    }

    /// Closure of `seeds` under multiplication.
    pub fn generated_subgroup(&self, seeds: &[usize]) -> SubgroupView {
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut out = vec![0];
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &s in seeds {
                let y = self.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        SubgroupView::from_unsorted(out)
    }

    /// Smallest normal subgroup containing `seeds`.
    pub fn normal_closure(&self, seeds: &[usize]) -> SubgroupView {
        let mut conjugates = HashSet::new();
        for &s in seeds {
            for g in 0..self.n {
                conjugates.insert(self.conj(g, s));
            }
        }
        let mut gens: Vec<usize> = conjugates.into_iter().collect();
        gens.sort_unstable();
        self.generated_subgroup(&gens)
    }

    pub fn is_normal(&self, h: &SubgroupView) -> bool {
        h.elements()
            .iter()
            .all(|&x| (0..self.n).all(|g| h.contains(self.conj(g, x))))
    }

    pub fn is_subgroup(&self, h: &SubgroupView) -> bool {
        h.contains(0)
            && h.elements().iter().all(|&a| {
                h.contains(self.inv(a)) && h.elements().iter().all(|&b| h.contains(self.mul(a, b)))
            })
    }

    /// A short generating set, chosen greedily in element order.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut current = self.trivial_subgroup();
        for x in 0..self.n {
            if current.order() == self.n {
                break;
            }
            if !current.contains(x) {
                gens.push(x);
                current = self.generated_subgroup(&gens);
            }
        }
        gens
    }

    /// The conjugacy class `x^G`.
    pub fn conjugacy_class(&self, x: usize) -> ConjClass {
        let members = SubgroupView::from_unsorted((0..self.n).map(|g| self.conj(g, x)).collect())
            .elements;
        ConjClass {
            representative: members[0],
            members,
        }
    }

    pub fn conjugacy_classes(&self) -> Vec<ConjClass> {
        let mut assigned = vec![false; self.n];
        let mut out = Vec::new();
        for x in 0..self.n {
            if assigned[x] {
                continue;
            }
            let class = self.conjugacy_class(x);
            for &m in &class.members {
                assigned[m] = true;
            }
            out.push(class);
        }
        out
    }

    pub fn centralizer(&self, x: usize) -> SubgroupView {
        SubgroupView::from_sorted(
            (0..self.n)
                .filter(|&g| self.mul(g, x) == self.mul(x, g))
                .collect(),
        )
    }

    /// `N_G(⟨x⟩)`.
    pub fn normalizer_of_cyclic(&self, x: usize) -> SubgroupView {
        let cyclic = self.generated_subgroup(&[x]);
        SubgroupView::from_sorted(
            (0..self.n)
                .filter(|&g| cyclic.contains(self.conj(g, x)))
                .collect(),
        )
    }

    /// The subgroup as a group in its own right, with the embedding into `self`.
    pub fn subgroup_as_group(&self, h: &SubgroupView) -> (ExplicitGroup, Vec<usize>) {
        let elems = h.elements();
        let m = elems.len();
        let mut local = HashMap::with_capacity(m);
        for (i, &x) in elems.iter().enumerate() {
            local.insert(x, i);
        }
        let mut table = vec![0u32; m * m];
        for (i, &a) in elems.iter().enumerate() {
            for (j, &b) in elems.iter().enumerate() {
                table[i * m + j] = local[&self.mul(a, b)] as u32;
            }
        }
        let inverse = elems.iter().map(|&a| local[&self.inv(a)] as u32).collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| elems.iter().map(|&x| l[x].clone()).collect());
        let perms = self
            .perms
            .as_ref()
            .map(|p| Arc::new(elems.iter().map(|&x| p[x].clone()).collect()));
        (
            ExplicitGroup {
                n: m,
                table,
                inverse,
                labels,
                perms,
            },
            elems.to_vec(),
        )
    }

    /// `G × H` with element `(g, h)` at index `g·|H| + h`.
    pub fn direct_product(&self, other: &ExplicitGroup) -> ExplicitGroup {
        let (n, m) = (self.n, other.n);
        let size = n * m;
        let mut table = vec![0u32; size * size];
        for a in 0..size {
            let (a1, a2) = (a / m, a % m);
            for b in 0..size {
                let (b1, b2) = (b / m, b % m);
                table[a * size + b] = (self.mul(a1, b1) * m + other.mul(a2, b2)) as u32;
            }
        }
        let inverse = (0..size)
            .map(|a| (self.inv(a / m) * m + other.inv(a % m)) as u32)
            .collect();
        let labels = (0..size)
            .map(|a| format!("({},{})", self.label(a / m), other.label(a % m)))
            .collect();
        ExplicitGroup {
            n: size,
            table,
            inverse,
            labels: Some(labels),
            perms: None,
        }
    }

    /// Regular permutation representation (left multiplication).
    pub fn regular_permutations(&self) -> Vec<Permutation> {
        (0..self.n)
            .map(|a| {
                Permutation::from_images_unchecked((0..self.n).map(|b| self.mul(a, b) as u32).collect())
            })
            .collect()
    }
}
