//! Congruences, quotients, displacement subgroups of congruences and admissible subgroups.

use quandlekit::construct::affine_cyclic;
use quandlekit::structure::{
    dis_alpha, dis_upper_alpha, is_congruence, is_primitive, is_simple, norm_lattice_small,
    principal_congruence, simplicity_witness,
};
use quandlekit::{Partition, QuandleTable};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let r4 = QuandleTable::dihedral(4);
    let alpha = principal_congruence(&r4, 0, 2);
    println!("R4: Cg(0, 2) = {alpha}");
    let parity: Partition = "{0,2|1,3}".parse()?;
    println!("R4: {parity} is a congruence: {}", is_congruence(&r4, &parity));
    let quotient = r4.quotient(&parity)?;
    println!("R4 / {parity} has {} elements", quotient.len());
    println!("Dis_α has order {}, Dis^α has order {}", dis_alpha(&r4, &parity).order(), dis_upper_alpha(&r4, &parity)?.order());

    let r6 = QuandleTable::dihedral(6);
    match simplicity_witness(&r6)? {
        Some(beta) => println!("R6 is not simple: {beta}"),
        None => println!("R6 is simple"),
    }

    let q = affine_cyclic(7, 3)?;
    println!("Aff(Z7, 3): simple {}, primitive {}", is_simple(&q)?, is_primitive(&q));
    let orders: Vec<String> = norm_lattice_small(&q, 5_000)?.iter().map(|n| n.order().to_string()).collect();
    println!("admissible normal subgroups of LMlt have orders {}", orders.join(", "));
    Ok(())
}
