//! Conjugation, coset, affine and tensor quandles built from groups.

use quandlekit::construct::{
    affine_cyclic, conj_quandle, coset_quandle, quandles_as_conj_map, tensor_quandle, CosetQuandleSpec,
};
use quandlekit::grp::{library, GroupAutomorphism};
use quandlekit::quandle::are_isomorphic;
use quandlekit::QuandleClassReport;

fn summary(name: &str, q: &quandlekit::QuandleTable) {
    let r = QuandleClassReport::of(q);
    println!(
        "{name:<24} n = {:<4} connected {:<5} superconnected {:<5} simple {:<5} |Dis| = {}",
        r.n, r.connected, r.superconnected, r.simple, r.dis_order
    );
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a4 = library::alternating(4);
    let x = a4.parse_element("(0 1 2)")?;
    let (tetrahedral, _) = conj_quandle(&a4, &a4.conjugacy_class(x).members)?;
    summary("Conj(A4, (0 1 2))", &tetrahedral);

    let s3 = library::symmetric(3);
    let theta = GroupAutomorphism::inner(&s3, s3.parse_element("(0 1)")?);
    let coset = coset_quandle(&CosetQuandleSpec::with_fixed_subgroup(s3.clone(), theta.clone()));
    summary("Q(S3, Fix(inner (0 1)))", &coset.table);

    // the same quandle as a class of S3 ⋊ <θ>
    let map = quandles_as_conj_map(&s3, &theta, 10_000)?;
    println!("  formula map onto the class of (1, θ) is an isomorphism: {}", are_isomorphic(&map.source, &map.target).is_some());

    summary("Aff(Z5, 2)", &affine_cyclic(5, 2)?);

    for (name, g, t) in [("Z2", library::cyclic(2), 3), ("Z3", library::cyclic(3), 2), ("A5", library::alternating(5), 2)] {
        let q = tensor_quandle(&g, t, &GroupAutomorphism::identity(&g), 5_000)?;
        summary(&format!("({name},{t},1)"), &q.table);
        println!("  superfaithful {}", q.table.is_superfaithful());
    }
    Ok(())
}
