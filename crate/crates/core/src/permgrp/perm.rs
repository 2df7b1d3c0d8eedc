use std::fmt;

use super::PermError;

/// A bijection of `{0, .., n-1}` stored as its image vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image list, rejecting anything that is not a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (i, &im) in images.iter().enumerate() {
            if im >= n {
                return Err(PermError::PointOutOfRange { point: im, degree: n });
            }
            if seen[im] {
                return Err(PermError::NotABijection { position: i, image: im });
            }
            seen[im] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|i| i as u32).collect(),
        })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.iter().map(|&i| i as usize).collect()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(PermError::PointOutOfRange { point: p, degree });
                }
                if touched[p] {
                    return Err(PermError::RepeatedPoint(p));
                }
                touched[p] = true;
                images[p] = cycle[(k + 1) % cycle.len()];
            }
        }
        Self::from_images(images)
    }

    /// Parses cycle notation such as `(0 1 2)(3 4)`; the identity is `()`.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self, PermError> {
        Self::from_cycles(degree, &parse_cycle_list(text)?)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.images.iter().map(|&i| i as usize)
    }

    pub(crate) fn raw(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i as u32 == im)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.after(other))
    }

    /// Unchecked composition `self ∘ other`; panics on degree mismatch.
    #[inline]
    pub fn after(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: other.images.iter().map(|&j| self.images[j as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &im) in self.images.iter().enumerate() {
            inv[im as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `g ∘ self ∘ g⁻¹`.
    pub fn conjugated_by(&self, g: &Permutation) -> Permutation {
        // (g p g^-1)(g(i)) = g(p(i))
        let mut out = vec![0u32; self.images.len()];
        for (i, &im) in self.images.iter().enumerate() {
            out[g.images[i] as usize] = g.images[im as usize];
        }
        Permutation { images: out }
    }

    /// Commutator `a b a⁻¹ b⁻¹`.
    pub fn commutator(a: &Permutation, b: &Permutation) -> Permutation {
        b.conjugated_by(a).after(&b.inverse())
    }

    pub fn pow(&self, exp: i64) -> Permutation {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.after(&sq);
            }
            sq = sq.after(&sq);
            e >>= 1;
        }
        acc
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.apply(start);
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            out.push(cycle);
        }
        out
    }

    /// Order as the lcm of cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64))
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = usize> + '_ {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &im)| *i as u32 == im)
            .map(|(i, _)| i)
    }

    pub fn first_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &im)| *i as u32 != im)
            .map(|(i, _)| i)
    }

    /// The same permutation acting on `{0, .., degree-1}` with the extra points fixed.
    pub fn extend(&self, degree: usize) -> Permutation {
        assert!(degree >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree() as u32..degree as u32);
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

/// Parses `(a b c)(d e)` into point lists without fixing a degree.
pub fn parse_cycle_list(text: &str) -> Result<Vec<Vec<usize>>, PermError> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    if rest.is_empty() {
        return Err(PermError::Syntax(text.to_string()));
    }
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| PermError::Syntax(text.to_string()))?;
        let close = body
            .find(')')
            .ok_or_else(|| PermError::Syntax(text.to_string()))?;
        let points = body[..close]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().map_err(|_| PermError::Syntax(text.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        if points.len() > 1 {
            cycles.push(points);
        }
        rest = body[close + 1..].trim_start();
    }
    Ok(cycles)
}

/// Largest point mentioned in a cycle string, if any.
pub fn max_point(text: &str) -> Result<Option<usize>, PermError> {
    Ok(parse_cycle_list(text)?.into_iter().flatten().max())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(text, n).unwrap()
    }

    #[test]
    fn compose_transpositions() {
        // (0 1)∘(1 2): 0 -> 1, 1 -> 2, 2 -> 0
        let c = p("(0 1)", 3).compose(&p("(1 2)", 3)).unwrap();
        assert_eq!(c.images().collect::<Vec<_>>(), vec![1, 2, 0]);
        assert_eq!(c, p("(0 1 2)", 3));
        // the opposite order is the other 3-cycle
        let d = p("(1 2)", 3).compose(&p("(0 1)", 3)).unwrap();
        assert_eq!(d, p("(0 2 1)", 3));
    }

    #[test]
    fn compose_identity_and_inverse() {
        let q = p("(0 3 1)(2 4)", 5);
        assert_eq!(q.compose(&Permutation::identity(5)).unwrap(), q);
        assert!(q.compose(&q.inverse()).unwrap().is_identity());
    }

    #[test]
    fn compose_rejects_degree_mismatch() {
        let err = p("(0 1)", 2).compose(&p("(0 1)", 3)).unwrap_err();
        assert!(matches!(err, PermError::DegreeMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn cycle_notation_round_trip() {
        assert_eq!(Permutation::identity(4).to_string(), "()");
        let q = p("(3 4)(0 1 2)", 6);
        assert_eq!(q.to_string(), "(0 1 2)(3 4)");
        assert_eq!(p(&q.to_string(), 6), q);
        assert_eq!(p("()", 3), Permutation::identity(3));
    }

    #[test]
    fn parse_errors() {
        assert!(Permutation::parse_cycles("(0 1", 3).is_err());
        assert!(Permutation::parse_cycles("(0 5)", 3).is_err());
        assert!(Permutation::parse_cycles("(0 1)(1 2)", 3).is_err());
        assert!(Permutation::parse_cycles("0 1", 3).is_err());
    }

    #[test]
    fn order_power_conjugate() {
        let q = p("(0 1 2)(3 4)", 5);
        assert_eq!(q.order(), 6);
        assert!(q.pow(6).is_identity());
        assert_eq!(q.pow(-1), q.inverse());
        let g = p("(0 3)", 5);
        let c = q.conjugated_by(&g);
        assert_eq!(c, g.after(&q).after(&g.inverse()));
        let comm = Permutation::commutator(&g, &q);
        assert_eq!(comm, g.after(&q).after(&g.inverse()).after(&q.inverse()));
    }
}
