use super::QuandleTable;

/// Per-element invariant preserved by isomorphisms: cycle type of `L_x` and
/// the number of `y` with `y * x = x`.
fn invariants(q: &QuandleTable) -> Vec<(Vec<usize>, usize)> {
    (0..q.len())
        .map(|x| {
            let mut cycle_type: Vec<usize> =
                q.left_translation(x).cycles().iter().map(Vec::len).collect();
            cycle_type.sort_unstable();
            let stabilizing = (0..q.len()).filter(|&y| q.op(y, x) == x).count();
            (cycle_type, stabilizing)
        })
        .collect()
}

/// Greedy generating set: each element not yet in the closure of the previous ones.
fn generators(q: &QuandleTable) -> Vec<usize> {
    let mut inside = vec![false; q.len()];
    let mut gens = Vec::new();
    for x in 0..q.len() {
        if !inside[x] {
            gens.push(x);
            for s in q.subquandle_closure(&gens) {
                inside[s] = true;
            }
        }
    }
    gens
}

struct Search<'a> {
    a: &'a QuandleTable,
    b: &'a QuandleTable,
    inv_a: Vec<(Vec<usize>, usize)>,
    inv_b: Vec<(Vec<usize>, usize)>,
    gens: Vec<usize>,
}

const UNSET: usize = usize::MAX;

impl Search<'_> {
    /// Sets `f(x) = y` and closes the partial map under the operations.
    fn extend(&self, f: &mut [usize], used: &mut [bool], x: usize, y: usize) -> bool {
        let mut mapped: Vec<usize> = (0..f.len()).filter(|&i| f[i] != UNSET).collect();
        let mut pending = vec![(x, y)];
        while let Some((u, v)) = pending.pop() {
            if f[u] != UNSET {
                if f[u] != v {
                    return false;
                }
                continue;
            }
            if used[v] || self.inv_a[u] != self.inv_b[v] {
                return false;
            }
            f[u] = v;
            used[v] = true;
            mapped.push(u);
            for &w in &mapped {
                let fw = f[w];
                pending.push((self.a.op(u, w), self.b.op(v, fw)));
                pending.push((self.a.op(w, u), self.b.op(fw, v)));
                pending.push((self.a.ldiv(u, w), self.b.ldiv(v, fw)));
                pending.push((self.a.ldiv(w, u), self.b.ldiv(fw, v)));
            }
        }
        true
    }

    fn run(&self, depth: usize, f: &[usize], used: &[bool]) -> Option<Vec<usize>> {
        if depth == self.gens.len() {
            return f.iter().all(|&v| v != UNSET).then(|| f.to_vec());
        }
        let g = self.gens[depth];
        for c in 0..self.b.len() {
            if used[c] || self.inv_a[g] != self.inv_b[c] {
                continue;
            }
            let mut f2 = f.to_vec();
            let mut used2 = used.to_vec();
            if self.extend(&mut f2, &mut used2, g, c) {
                if let Some(found) = self.run(depth + 1, &f2, &used2) {
                    return Some(found);
                }
            }
        }
        None
    }
}

/// An isomorphism `f: a → b` as its image list, if one exists.
pub fn are_isomorphic(a: &QuandleTable, b: &QuandleTable) -> Option<Vec<usize>> {
    if a.len() != b.len() {
        return None;
    }
    let inv_a = invariants(a);
    let inv_b = invariants(b);
    let (mut sa, mut sb) = (inv_a.clone(), inv_b.clone());
    sa.sort();
    sb.sort();
    if sa != sb {
        return None;
    }
    let search = Search {
        a,
        b,
        inv_a,
        inv_b,
        gens: generators(a),
    };
    let f = search.run(0, &vec![UNSET; a.len()], &vec![false; b.len()])?;
    debug_assert!(is_homomorphism(a, b, &f));
    Some(f)
}

/// `f(x * y) = f(x) * f(y)` for all pairs.
pub fn is_homomorphism(a: &QuandleTable, b: &QuandleTable, f: &[usize]) -> bool {
    (0..a.len()).all(|x| (0..a.len()).all(|y| f[a.op(x, y)] == b.op(f[x], f[y])))
}
