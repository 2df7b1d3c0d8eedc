//! Small groups used as fixtures and in examples.

use super::ExplicitGroup;
use crate::permgrp::{PermGroup, Permutation};

const CAP: usize = 1 << 20;

fn perm_group(degree: usize, gens: &[&str]) -> PermGroup {
    let gens = gens
        .iter()
        .map(|g| Permutation::parse_cycles(g, degree).expect("valid cycle notation"))
        .collect();
    PermGroup::new(degree, gens).expect("valid generators")
}

fn explicit(group: &PermGroup) -> ExplicitGroup {
    ExplicitGroup::from_perm_group(group, CAP).expect("small group")
}

/// `Z_n` with element `i` the residue `i`.
pub fn cyclic(n: usize) -> ExplicitGroup {
    assert!(n >= 1);
    let (g, elements) =
        ExplicitGroup::from_closure(0usize, &[1 % n], |a, b| (a + b) % n, CAP).expect("small");
    debug_assert!(elements.iter().enumerate().all(|(i, &e)| i == e));
    g.with_labels((0..n).map(|i| i.to_string()).collect())
}

pub fn symmetric(n: usize) -> ExplicitGroup {
    explicit(&PermGroup::symmetric(n))
}

pub fn alternating(n: usize) -> ExplicitGroup {
    explicit(&PermGroup::alternating(n))
}

/// Dihedral group of order `2m`, acting on the vertices of an `m`-gon.
pub fn dihedral(m: usize) -> ExplicitGroup {
    assert!(m >= 3);
    let rotation: Vec<usize> = (0..m).map(|i| (i + 1) % m).collect();
    let reflection: Vec<usize> = (0..m).map(|i| (m - i) % m).collect();
    let gens = vec![
        Permutation::from_images(rotation).unwrap(),
        Permutation::from_images(reflection).unwrap(),
    ];
    explicit(&PermGroup::new(m, gens).unwrap())
}

/// Quaternion group `Q_8` as unit quaternions `±1, ±i, ±j, ±k`.
pub fn quaternion() -> ExplicitGroup {
    type Quat = [i8; 4];
    fn mul(a: &Quat, b: &Quat) -> Quat {
        [
            a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
            a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
        ]
    }
    let (g, elements) =
        ExplicitGroup::from_closure([1, 0, 0, 0], &[[0, 1, 0, 0], [0, 0, 1, 0]], mul, CAP)
            .expect("small");
    let labels = elements
        .iter()
        .map(|q| {
            let (i, v) = q.iter().enumerate().find(|(_, v)| **v != 0).unwrap();
            format!("{}{}", if *v < 0 { "-" } else { "" }, ["1", "i", "j", "k"][i])
        })
        .collect();
    g.with_labels(labels)
}

/// `SL(2,3)` as 2×2 matrices over `F_3`, entries row-major.
pub fn sl2_3() -> ExplicitGroup {
    type Mat = [u8; 4];
    fn mul(a: &Mat, b: &Mat) -> Mat {
        [
            (a[0] * b[0] + a[1] * b[2]) % 3,
            (a[0] * b[1] + a[1] * b[3]) % 3,
            (a[2] * b[0] + a[3] * b[2]) % 3,
            (a[2] * b[1] + a[3] * b[3]) % 3,
        ]
    }
    let (g, elements) =
        ExplicitGroup::from_closure([1, 0, 0, 1], &[[1, 1, 0, 1], [1, 0, 1, 1]], mul, CAP)
            .expect("small");
    let labels = elements.iter().map(|m| format!("{m:?}")).collect();
    g.with_labels(labels)
}

/// The Frobenius group of order 20, `x ↦ ax + b` over `Z_5`.
pub fn frobenius20() -> ExplicitGroup {
    explicit(&perm_group(5, &["(0 1 2 3 4)", "(1 2 4 3)"]))
}

/// Permutation-group versions of the fixtures that have a natural action.
pub fn perm_fixture(name: &str) -> Option<PermGroup> {
    Some(match name {
        "s3" => PermGroup::symmetric(3),
        "s4" => PermGroup::symmetric(4),
        "s5" => PermGroup::symmetric(5),
        "a4" => PermGroup::alternating(4),
        "a5" => PermGroup::alternating(5),
        "z2" => PermGroup::cyclic(2),
        "z3" => PermGroup::cyclic(3),
        "d8" => perm_group(4, &["(0 1 2 3)", "(1 3)"]),
        "f20" => perm_group(5, &["(0 1 2 3 4)", "(1 2 4 3)"]),
        _ => return None,
    })
}

/// The named fixture groups, smallest first.
pub fn fixtures() -> Vec<(&'static str, ExplicitGroup)> {
    let mut out = vec![
        ("Z2", cyclic(2)),
        ("Z3", cyclic(3)),
        ("Z4", cyclic(4)),
        ("Z5", cyclic(5)),
        ("Z6", cyclic(6)),
        ("S3", symmetric(3)),
        ("D8", dihedral(4)),
        ("Q8", quaternion()),
        ("Z8", cyclic(8)),
        ("Z9", cyclic(9)),
        ("Z10", cyclic(10)),
        ("A4", alternating(4)),
        ("S3xZ2", symmetric(3).direct_product(&cyclic(2))),
        ("Z12", cyclic(12)),
        ("F20", frobenius20()),
        ("S4", symmetric(4)),
        ("SL(2,3)", sl2_3()),
        ("A5", alternating(5)),
        ("S5", symmetric(5)),
    ];
    out.sort_by_key(|(_, g)| g.order());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_orders() {
        let orders: Vec<(&str, usize)> = fixtures().iter().map(|(n, g)| (*n, g.order())).collect();
        for (name, expected) in [
            ("S3", 6),
            ("D8", 8),
            ("Q8", 8),
            ("A4", 12),
            ("S3xZ2", 12),
            ("F20", 20),
            ("S4", 24),
            ("SL(2,3)", 24),
            ("A5", 60),
            ("S5", 120),
        ] {
            assert!(orders.contains(&(name, expected)), "{name}");
        }
        assert!(!quaternion().is_abelian());
        // Q8 has a unique involution; D8 has five
        let involutions = |g: &ExplicitGroup| (0..g.order()).filter(|&x| g.element_order(x) == 2).count();
        assert_eq!(involutions(&quaternion()), 1);
        assert_eq!(involutions(&dihedral(4)), 5);
        assert_eq!(involutions(&sl2_3()), 1);
        assert_eq!(frobenius20().conjugacy_classes().len(), 5);
    }
}
