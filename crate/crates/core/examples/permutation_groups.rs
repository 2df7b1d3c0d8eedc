//! Schreier–Sims orders, membership, derived series and block systems.

use quandlekit::{PermGroup, Permutation};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let s5 = PermGroup::symmetric(5);
    let a5 = PermGroup::alternating(5);
    println!("|S5| = {}, |A5| = {}", s5.order(), a5.order());
    println!("A5 normal in S5: {}", s5.is_normal(&a5)?);

    let cycle = Permutation::parse_cycles("(0 1 2)", 5)?;
    let swap = Permutation::parse_cycles("(0 1)", 5)?;
    println!("(0 1 2) in A5: {}, (0 1) in A5: {}", a5.contains(&cycle)?, a5.contains(&swap)?);

    let s4 = PermGroup::symmetric(4);
    let orders: Vec<String> = s4.derived_series().iter().map(|g| g.order().to_string()).collect();
    println!("derived series of S4: {}", orders.join(" > "));
    println!("S4 solvable: {}, A5 solvable: {}", s4.is_solvable(), a5.is_solvable());

    // D8 acting on the square preserves the diagonals
    let d8 = PermGroup::new(
        4,
        vec![Permutation::parse_cycles("(0 1 2 3)", 4)?, Permutation::parse_cycles("(0 2)", 4)?],
    )?;
    println!("D8 primitive: {}", d8.is_primitive());
    for system in d8.block_systems_through_zero()? {
        println!("  blocks {}", system.partition());
    }
    let kernel = d8.kernel_of_action(&"{0,2|1,3}".parse()?)?;
    println!("kernel on the diagonals has order {}", kernel.order());
    Ok(())
}
