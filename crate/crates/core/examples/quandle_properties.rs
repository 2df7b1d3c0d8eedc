//! Validation and the full property report for small quandles.

use quandlekit::construct::affine_cyclic;
use quandlekit::io::parse_qnd_rows;
use quandlekit::quandle::validate_rows;
use quandlekit::{QuandleClassReport, QuandleTable};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let quandles = [
        ("R3", QuandleTable::dihedral(3)),
        ("R4", QuandleTable::dihedral(4)),
        ("T3", QuandleTable::trivial(3)),
        ("Aff(Z7, 3)", affine_cyclic(7, 3)?),
        ("Aff(Z9, 2)", affine_cyclic(9, 2)?),
    ];
    println!("{:<11} {:>3} conn faith latin sfaith sconn simple prim |LMlt|", "", "n");
    for (name, q) in &quandles {
        let r = QuandleClassReport::of(q);
        println!(
            "{name:<11} {:>3} {:>4} {:>5} {:>5} {:>6} {:>5} {:>6} {:>4} {:>6}",
            r.n, r.connected, r.faithful, r.latin, r.superfaithful, r.superconnected, r.simple, r.primitive, r.lmlt_order
        );
    }

    // idempotent with bijective rows, but not left distributive
    let rows = parse_qnd_rows("3\n0 1 2\n2 1 0\n1 0 2\n")?;
    let v = validate_rows(&rows);
    println!("\n{}", v.classification);
    for violation in &v.violations {
        println!("  {violation}");
    }
    Ok(())
}
