//! Deterministic Schreier–Sims.
//!
//! Each level keeps a Schreier tree for the orbit of its base point under the
//! strong generators fixing all earlier base points. Tree entries are never
//! rewritten once set, so a Schreier generator that has been sifted once stays
//! valid while the chain grows; per-generator cursors record which
//! (orbit point, generator) pairs are already done.

use num_bigint::BigUint;

use super::Permutation;

/// Total number of cached transversal entries (in points) across all levels.
const CACHE_BUDGET: usize = 1 << 24;

const NOT_IN_ORBIT: u32 = u32::MAX;

#[derive(Clone, Debug)]
struct Level {
    point: usize,
    /// Indices into `StabChain::gens`.
    gens: Vec<usize>,
    /// How many orbit positions have been processed with `gens[k]`.
    cursor: Vec<usize>,
    orbit: Vec<u32>,
    /// For a non-root orbit point `q`: the global generator index `s` and point `p` with `q = s(p)`.
    tree_gen: Vec<u32>,
    tree_parent: Vec<u32>,
    /// Optional cached `u_q⁻¹` for orbit points.
    inv_cache: Vec<Option<Permutation>>,
}

impl Level {
    fn new(point: usize, degree: usize, cache: &mut usize) -> Self {
        let mut tree_gen = vec![NOT_IN_ORBIT; degree];
        tree_gen[point] = NOT_IN_ORBIT - 1;
        let mut inv_cache = vec![None; degree];
        if *cache + degree <= CACHE_BUDGET {
            inv_cache[point] = Some(Permutation::identity(degree));
            *cache += degree;
        }
        Level {
            point,
            gens: Vec::new(),
            cursor: Vec::new(),
            orbit: vec![point as u32],
            tree_gen,
            tree_parent: vec![NOT_IN_ORBIT; degree],
            inv_cache,
        }
    }

    #[inline]
    fn in_orbit(&self, q: usize) -> bool {
        self.tree_gen[q] != NOT_IN_ORBIT
    }
}

#[derive(Clone, Debug)]
pub(crate) struct StabChain {
    degree: usize,
    gens: Vec<Permutation>,
    gen_inv: Vec<Permutation>,
    levels: Vec<Level>,
    cached: usize,
}

impl StabChain {
    /// Builds a chain for `⟨generators⟩` whose base begins with `base_prefix`.
    pub(crate) fn new(degree: usize, generators: &[Permutation], base_prefix: &[usize]) -> Self {
        let mut chain = StabChain {
            degree,
            gens: Vec::new(),
            gen_inv: Vec::new(),
            levels: Vec::new(),
            cached: 0,
        };
        for &b in base_prefix {
            if chain.levels.iter().all(|l| l.point != b) {
                let lvl = Level::new(b, degree, &mut chain.cached);
                chain.levels.push(lvl);
            }
        }
        for g in generators {
            chain.add_generator(g);
        }
        chain
    }

    pub(crate) fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    /// Strong generators fixing the first `level` base points.
    pub(crate) fn level_generators(&self, level: usize) -> Vec<Permutation> {
        if level >= self.levels.len() {
            return Vec::new();
        }
        self.levels[level]
            .gens
            .iter()
            .map(|&i| self.gens[i].clone())
            .collect()
    }

    pub(crate) fn strong_generators(&self) -> &[Permutation] {
        &self.gens
    }

    pub(crate) fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub(crate) fn contains(&self, g: &Permutation) -> bool {
        let (res, level) = self.strip(g.clone(), 0);
        level == self.levels.len() && res.is_identity()
    }

    /// Adds `g` to the group; returns whether the group grew.
    pub(crate) fn add_generator(&mut self, g: &Permutation) -> bool {
        assert_eq!(g.degree(), self.degree);
        let (res, level) = self.strip(g.clone(), 0);
        if level == self.levels.len() && res.is_identity() {
            return false;
        }
        self.insert_strong(res, level);
        self.complete(level);
        true
    }

    fn insert_strong(&mut self, h: Permutation, level: usize) {
        if level == self.levels.len() {
            let point = h
                .first_moved_point()
                .expect("non-identity residue fixes every point");
            let lvl = Level::new(point, self.degree, &mut self.cached);
            self.levels.push(lvl);
        }
        let idx = self.gens.len();
        self.gen_inv.push(h.inverse());
        self.gens.push(h);
        for l in 0..=level {
            self.levels[l].gens.push(idx);
            self.levels[l].cursor.push(0);
        }
    }

    fn complete(&mut self, start: usize) {
        let mut i = start;
        loop {
            match self.process_level(i) {
                Some(j) => i = j,
                None if i == 0 => break,
                None => i -= 1,
            }
        }
    }

    /// Closes the orbit at `level` and sifts pending Schreier generators.
    /// Returns the level of a newly inserted strong generator, if one was found.
    fn process_level(&mut self, level: usize) -> Option<usize> {
        loop {
            let mut progressed = false;
            for k in 0..self.levels[level].gens.len() {
                loop {
                    let lvl = &self.levels[level];
                    if lvl.cursor[k] >= lvl.orbit.len() {
                        break;
                    }
                    progressed = true;
                    let q = lvl.orbit[lvl.cursor[k]] as usize;
                    let s = lvl.gens[k];
                    let r = self.gens[s].apply(q);
                    self.levels[level].cursor[k] += 1;
                    if !self.levels[level].in_orbit(r) {
                        self.extend_orbit(level, q, s, r);
                        continue;
                    }
                    let lvl = &self.levels[level];
                    if lvl.tree_gen[r] == s as u32 && lvl.tree_parent[r] == q as u32 {
                        continue;
                    }
                    let h = self.gens[s].after(&self.rep(level, q));
                    let (res, j) = self.strip(h, level);
                    if j < self.levels.len() || !res.is_identity() {
                        self.insert_strong(res, j);
                        return Some(j);
                    }
                }
            }
            if !progressed {
                return None;
            }
        }
    }

    fn extend_orbit(&mut self, level: usize, q: usize, s: usize, r: usize) {
        let cached = match &self.levels[level].inv_cache[q] {
            Some(uq_inv) if self.cached + self.degree <= CACHE_BUDGET => {
                Some(uq_inv.after(&self.gen_inv[s]))
            }
            _ => None,
        };
        if cached.is_some() {
            self.cached += self.degree;
        }
        let lvl = &mut self.levels[level];
        lvl.tree_gen[r] = s as u32;
        lvl.tree_parent[r] = q as u32;
        lvl.orbit.push(r as u32);
        lvl.inv_cache[r] = cached;
    }

    /// Coset representative `u_q` with `u_q(base point) = q`.
    fn rep(&self, level: usize, mut q: usize) -> Permutation {
        let lvl = &self.levels[level];
        let mut acc = Permutation::identity(self.degree);
        loop {
            if let Some(c) = &lvl.inv_cache[q] {
                return acc.after(&c.inverse());
            }
            if q == lvl.point {
                return acc;
            }
            let s = lvl.tree_gen[q] as usize;
            acc = acc.after(&self.gens[s]);
            q = lvl.tree_parent[q] as usize;
        }
    }

    /// `u_q⁻¹ ∘ g`.
    fn rep_inv_times(&self, level: usize, mut q: usize, mut g: Permutation) -> Permutation {
        let lvl = &self.levels[level];
        loop {
            if let Some(c) = &lvl.inv_cache[q] {
                return c.after(&g);
            }
            if q == lvl.point {
                return g;
            }
            let s = lvl.tree_gen[q] as usize;
            g = self.gen_inv[s].after(&g);
            q = lvl.tree_parent[q] as usize;
        }
    }

    /// Sifts `g` starting at `from`; returns the residue and the level where sifting stopped.
    fn strip(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for l in from..self.levels.len() {
            let b = g.apply(self.levels[l].point);
            if !self.levels[l].in_orbit(b) {
                return (g, l);
            }
            g = self.rep_inv_times(l, b, g);
        }
        (g, self.levels.len())
    }
}
