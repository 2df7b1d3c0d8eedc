use rayon::prelude::*;

use super::{conj_quandle, ConstructError};
use crate::grp::{semidirect_with_automorphism, ConjClass, ExplicitGroup, GroupAutomorphism, SubgroupView};
use crate::quandle::QuandleTable;

/// Default bound on the number of elements of a constructed quandle.
pub const DEFAULT_SIZE_CAP: usize = 5_000;

fn checked_power(n: usize, t: usize) -> Option<usize> {
    n.checked_pow(u32::try_from(t).ok()?)
}

fn decode(mut index: usize, n: usize, t: usize) -> Vec<usize> {
    let mut out = vec![0; t];
    for slot in out.iter_mut().rev() {
        *slot = index % n;
        index /= n;
    }
    out
}

fn encode(tuple: &[usize], n: usize) -> usize {
    tuple.iter().fold(0, |acc, &x| acc * n + x)
}

/// `G^t` with `(x_1, .., x_t)` at index `Σ x_i |G|^{t-i}`.
pub fn direct_power(g: &ExplicitGroup, t: usize, cap: usize) -> Result<ExplicitGroup, ConstructError> {
    let n = g.order();
    let size = checked_power(n, t)
        .filter(|&s| s <= cap)
        .ok_or(ConstructError::CapExceeded(cap))?;
    let tuples: Vec<Vec<usize>> = (0..size).map(|i| decode(i, n, t)).collect();
    let rows = tuples
        .iter()
        .map(|a| {
            tuples
                .iter()
                .map(|b| {
                    let c: Vec<usize> = a.iter().zip(b).map(|(&x, &y)| g.mul(x, y)).collect();
                    encode(&c, n)
                })
                .collect()
        })
        .collect();
    let labels = tuples
        .iter()
        .map(|x| {
            let parts: Vec<String> = x.iter().map(|&e| g.label(e)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    Ok(ExplicitGroup::from_table(rows, false)?.with_labels(labels))
}

/// `θ_t(x_1, .., x_t) = (θ(x_t), x_1, .., x_{t-1})` on `G^t`, returned with
/// the materialized power.
pub fn shift_automorphism(
    g: &ExplicitGroup,
    theta: &GroupAutomorphism,
    t: usize,
    cap: usize,
) -> Result<(ExplicitGroup, GroupAutomorphism), ConstructError> {
    assert!(t >= 1);
    let power = direct_power(g, t, cap)?;
    let n = g.order();
    let images = (0..power.order())
        .map(|i| encode(&shift(&decode(i, n, t), theta), n))
        .collect();
    let auto = GroupAutomorphism::new(&power, images)?;
    Ok((power, auto))
}

fn shift(x: &[usize], theta: &GroupAutomorphism) -> Vec<usize> {
    let t = x.len();
    let mut out = Vec::with_capacity(t);
    out.push(theta.apply(x[t - 1]));
    out.extend_from_slice(&x[..t - 1]);
    out
}

/// `(G, t, θ)`: the coset quandle of `G^t` over the diagonal copy of `Fix(θ)`
/// with the automorphism `θ_t`.
#[derive(Clone, Debug)]
pub struct TensorQuandle {
    pub table: QuandleTable,
    /// Canonical representative of each coset: its first coordinate is the
    /// least element of its `Fix(θ)`-coset.
    pub tuples: Vec<Vec<usize>>,
    pub fixed: SubgroupView,
}

/// Builds `(G, t, θ)` from the coset formula without materializing `G^t`.
pub fn tensor_quandle(
    g: &ExplicitGroup,
    t: usize,
    theta: &GroupAutomorphism,
    cap: usize,
) -> Result<TensorQuandle, ConstructError> {
    assert!(t >= 1);
    let n = g.order();
    let fixed = theta.fixed_subgroup();
    let size = checked_power(n, t)
        .map(|s| s / fixed.order())
        .filter(|&s| s <= cap)
        .ok_or(ConstructError::CapExceeded(cap))?;

    // for each g, the h ∈ Fix(θ) with g·h least in g·Fix(θ)
    let mut normalizer = vec![0usize; n];
    let mut rank = vec![usize::MAX; n];
    let mut firsts = Vec::new();
    for x in 0..n {
        let (least, h) = fixed
            .elements()
            .iter()
            .map(|&h| (g.mul(x, h), h))
            .min()
            .expect("Fix(θ) contains the identity");
        normalizer[x] = h;
        if least == x {
            rank[x] = firsts.len();
            firsts.push(x);
        }
    }
    let tail = checked_power(n, t - 1).expect("bounded by the size check");
    let tuples: Vec<Vec<usize>> = (0..size)
        .map(|i| {
            let mut tuple = vec![firsts[i / tail]];
            tuple.extend(decode(i % tail, n, t - 1));
            tuple
        })
        .collect();
    // z = x θ_t(x⁻¹y) has z_0 = x_0 θ(x_{t-1}⁻¹ y_{t-1}) and
    // z_i = x_i x_{i-1}⁻¹ y_{i-1} for i ≥ 1
    let rows: Vec<Vec<usize>> = tuples
        .par_iter()
        .map(|x| {
            let head: Vec<usize> = (0..n)
                .map(|e| g.mul(x[0], theta.apply(g.mul(g.inv(x[t - 1]), e))))
                .collect();
            let steps: Vec<usize> = (1..t).map(|i| g.mul(x[i], g.inv(x[i - 1]))).collect();
            tuples
                .iter()
                .map(|y| {
                    let z0 = head[y[t - 1]];
                    let h = normalizer[z0];
                    let rest = steps
                        .iter()
                        .zip(y)
                        .fold(0, |acc, (&a, &b)| acc * n + g.mul(g.mul(a, b), h));
                    rank[g.mul(z0, h)] * tail + rest
                })
                .collect()
        })
        .collect();
    Ok(TensorQuandle {
        table: QuandleTable::from_rows(rows).expect("coset rows are bijections"),
        tuples,
        fixed,
    })
}

/// `G ⋊ ⟨θ⟩` and the conjugacy class of `(1, θ)`, checked against
/// `{(g θ(g)⁻¹, θ) : g ∈ G}`.
pub fn class_of_theta(
    g: &ExplicitGroup,
    theta: &GroupAutomorphism,
    cap: usize,
) -> Result<(ExplicitGroup, ConjClass), ConstructError> {
    let n = g.order();
    let k = theta.order();
    if n.saturating_mul(k) > cap {
        return Err(ConstructError::CapExceeded(cap));
    }
    let semi = semidirect_with_automorphism(g, theta);
    let offset = if k > 1 { n } else { 0 };
    let class = semi.conjugacy_class(offset);
    let mut formula: Vec<usize> = (0..n)
        .map(|x| offset + g.mul(x, g.inv(theta.apply(x))))
        .collect();
    formula.sort_unstable();
    formula.dedup();
    assert_eq!(class.members, formula, "class of (1, θ) differs from the formula");
    Ok((semi, class))
}

/// Two quandles and a map between them, index to index.
#[derive(Clone, Debug)]
pub struct QuandleMap {
    pub source: QuandleTable,
    pub target: QuandleTable,
    pub map: Vec<usize>,
}

/// `x Fix(θ) ↦ (x θ(x)⁻¹, θ)` from `(G, 1, θ)` to the class of `(1, θ)`.
pub fn quandles_as_conj_map(
    g: &ExplicitGroup,
    theta: &GroupAutomorphism,
    cap: usize,
) -> Result<QuandleMap, ConstructError> {
    let source = tensor_quandle(g, 1, theta, cap)?;
    let (semi, class) = class_of_theta(g, theta, cap)?;
    let (target, elements) = conj_quandle(&semi, &class.members)?;
    let offset = if theta.order() > 1 { g.order() } else { 0 };
    let map = source
        .tuples
        .iter()
        .map(|x| {
            let image = offset + g.mul(x[0], g.inv(theta.apply(x[0])));
            elements.binary_search(&image).expect("image lies in the class")
        })
        .collect();
    Ok(QuandleMap {
        source: source.table,
        target,
        map,
    })
}

/// `h C_G(x) ↦ h x h⁻¹` from `(G, 1, x̂)` to the class of `x`.
pub fn conjugacy_class_map(g: &ExplicitGroup, x: usize, cap: usize) -> Result<QuandleMap, ConstructError> {
    let theta = GroupAutomorphism::inner(g, x);
    let source = tensor_quandle(g, 1, &theta, cap)?;
    let (target, elements) = conj_quandle(g, &g.conjugacy_class(x).members)?;
    let map = source
        .tuples
        .iter()
        .map(|h| elements.binary_search(&g.conj(h[0], x)).expect("conjugate of x"))
        .collect();
    Ok(QuandleMap {
        source: source.table,
        target,
        map,
    })
}
