use proptest::prelude::*;

use quandlekit::construct::affine_cyclic;
use quandlekit::io::{parse_qnd, write_qnd};
use quandlekit::structure::{is_primitive, is_simple};
use quandlekit::{PermGroup, Permutation, QuandleClassReport, QuandleTable};

fn affine() -> impl Strategy<Value = QuandleTable> {
    (2usize..=16, 1i64..16).prop_filter_map("f must be a unit", |(n, f)| affine_cyclic(n, f).ok())
}

fn permutation(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(images).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn qnd_round_trip(q in affine()) {
        prop_assert_eq!(parse_qnd(&write_qnd(&q)).unwrap(), q);
    }

    #[test]
    fn affine_tables_are_quandles(q in affine()) {
        prop_assert!(q.validate().is_quandle());
    }

    #[test]
    fn report_implications(q in affine()) {
        let r = QuandleClassReport::of(&q);
        if r.superconnected {
            prop_assert!(r.connected);
        }
        if r.superfaithful {
            prop_assert!(r.faithful);
        }
        if r.latin {
            prop_assert!(r.connected);
        }
        if q.len() >= 2 && is_primitive(&q) {
            prop_assert_eq!(is_simple(&q), Ok(true));
        }
    }

    #[test]
    fn inverse_and_conjugation(p in permutation(7), g in permutation(7)) {
        prop_assert!(p.after(&p.inverse()).is_identity());
        let c = p.conjugated_by(&g);
        prop_assert_eq!(c.order(), p.order());
        prop_assert_eq!(p.pow(p.order() as i64), Permutation::identity(7));
    }

    #[test]
    fn group_order_divides_factorial(a in permutation(6), b in permutation(6)) {
        let g = PermGroup::new(6, vec![a.clone(), b.clone()]).unwrap();
        let order = g.order_u64().unwrap();
        prop_assert_eq!(720 % order, 0);
        prop_assert!(g.contains(&a.after(&b)).unwrap());
        prop_assert_eq!(g.elements(1000).unwrap().len() as u64, order);
    }
}
