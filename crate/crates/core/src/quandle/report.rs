use std::collections::BTreeMap;

use serde::Serialize;

use super::{Classification, QuandleTable, Violation};
use crate::partition::Partition;
use crate::structure;

/// Why a predicate in a [`QuandleClassReport`] is false.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Element { x: usize },
    Pair { x: usize, y: usize },
    Triple { x: usize, y: usize, z: usize },
    Partition { classes: Partition },
    GroupOrder { order: String },
    Size { n: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct QuandleClassReport {
    pub n: usize,
    pub classification: Classification,
    pub is_left_quasigroup: bool,
    pub is_rack: bool,
    pub is_quandle: bool,
    pub connected: bool,
    pub faithful: bool,
    pub latin: bool,
    pub superfaithful: bool,
    pub superconnected: bool,
    pub simple: bool,
    pub primitive: bool,
    /// `Dis(Q)` is solvable.
    pub solvable_dis: bool,
    /// `Dis(Q)` is abelian.
    pub abelian_dis: bool,
    pub lmlt_order: String,
    pub dis_order: String,
    pub orbit_sizes: Vec<usize>,
    /// `|Q/λ_Q|`.
    pub cayley_quotient_size: usize,
    /// One entry per false predicate, keyed by its field name.
    pub witnesses: BTreeMap<&'static str, Witness>,
}

fn violation_witness(v: &Violation) -> Witness {
    match *v {
        Violation::LeftQuasigroup { row, a, b, .. } => Witness::Triple { x: row, y: a, z: b },
        Violation::Idempotence { x } => Witness::Element { x },
        Violation::LeftDistributivity { x, y, z } => Witness::Triple { x, y, z },
    }
}

impl QuandleClassReport {
    pub fn of(q: &QuandleTable) -> Self {
        let mut witnesses = BTreeMap::new();
        let validation = q.validate();
        let is_rack = validation.is_rack();
        let is_quandle = validation.is_quandle();
        if !is_rack {
            let v = validation
                .violations
                .iter()
                .find(|v| matches!(v, Violation::LeftDistributivity { .. }))
                .expect("distributivity witness");
            witnesses.insert("is_rack", violation_witness(v));
        }
        if !is_quandle {
            witnesses.insert("is_quandle", violation_witness(&validation.violations[0]));
        }

        let orbits = q.orbits();
        let connected = orbits.class_count() == 1;
        if !connected {
            witnesses.insert("connected", Witness::Partition { classes: orbits.clone() });
        }
        let faithful = match q.faithful_witness() {
            Some((x, y)) => {
                witnesses.insert("faithful", Witness::Pair { x, y });
                false
            }
            None => true,
        };
        let latin = match q.latin_witness() {
            Some((x, y, z)) => {
                witnesses.insert("latin", Witness::Triple { x, y, z });
                false
            }
            None => true,
        };
        let superfaithful = match q.superfaithful_witness() {
            Some((x, y)) => {
                witnesses.insert("superfaithful", Witness::Pair { x, y });
                false
            }
            None => true,
        };
        let superconnected = match q.superconnected_witness() {
            Some((x, y)) => {
                witnesses.insert("superconnected", Witness::Pair { x, y });
                false
            }
            None => true,
        };
        let simple = match structure::simplicity_witness(q) {
            Ok(None) => true,
            Ok(Some(c)) => {
                witnesses.insert("simple", Witness::Partition { classes: c });
                false
            }
            Err(_) => {
                witnesses.insert("simple", Witness::Size { n: q.len() });
                false
            }
        };
        let primitive = match structure::primitivity_witness(q) {
            None => true,
            Some(p) => {
                witnesses.insert("primitive", Witness::Partition { classes: p });
                false
            }
        };
        let dis = q.dis();
        let series = dis.derived_series();
        let last = series.last().expect("nonempty series");
        let solvable_dis = last.is_trivial();
        if !solvable_dis {
            witnesses.insert("solvable_dis", Witness::GroupOrder { order: last.order().to_string() });
        }
        let abelian_dis = dis.is_abelian();
        if !abelian_dis {
            let derived = series.get(1).cloned().unwrap_or_else(|| dis.derived_subgroup());
            witnesses.insert("abelian_dis", Witness::GroupOrder { order: derived.order().to_string() });
        }

        QuandleClassReport {
            n: q.len(),
            classification: validation.classification,
            is_left_quasigroup: true,
            is_rack,
            is_quandle,
            connected,
            faithful,
            latin,
            superfaithful,
            superconnected,
            simple,
            primitive,
            solvable_dis,
            abelian_dis,
            lmlt_order: q.lmlt().order().to_string(),
            dis_order: dis.order().to_string(),
            orbit_sizes: orbits.class_sizes(),
            cayley_quotient_size: q.cayley_kernel().class_count(),
            witnesses,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_witness_law(r: &QuandleClassReport) {
        let flags = [
            ("is_rack", r.is_rack),
            ("is_quandle", r.is_quandle),
            ("connected", r.connected),
            ("faithful", r.faithful),
            ("latin", r.latin),
            ("superfaithful", r.superfaithful),
            ("superconnected", r.superconnected),
            ("simple", r.simple),
            ("primitive", r.primitive),
            ("solvable_dis", r.solvable_dis),
            ("abelian_dis", r.abelian_dis),
        ];
        for (name, value) in flags {
            assert_eq!(r.witnesses.contains_key(name), !value, "{name}");
        }
        assert!(!r.superconnected || r.connected);
        assert!(!r.superfaithful || r.faithful);
    }

    #[test]
    fn dihedral_reports() {
        let r = QuandleClassReport::of(&QuandleTable::dihedral(3));
        assert!(r.connected && r.latin && r.superconnected && r.simple && r.primitive);
        assert_eq!(r.lmlt_order, "6");
        check_witness_law(&r);
        let r = QuandleClassReport::of(&QuandleTable::dihedral(4));
        assert!(!r.connected && !r.faithful && !r.superconnected);
        assert_eq!(r.orbit_sizes, vec![2, 2]);
        assert_eq!(r.cayley_quotient_size, 2);
        check_witness_law(&r);
        let r = QuandleClassReport::of(&QuandleTable::trivial(2));
        assert!(!r.connected);
        check_witness_law(&r);
        check_witness_law(&QuandleClassReport::of(&QuandleTable::trivial(1)));
    }

    #[test]
    fn non_quandle_reports() {
        let rack = QuandleTable::from_fn(3, |_, y| (y + 1) % 3).unwrap();
        let r = QuandleClassReport::of(&rack);
        assert!(r.is_rack && !r.is_quandle);
        check_witness_law(&r);
    }
}
