//! The permutation representation of A5 wr Z7 and the chain of checks that makes
//! (A5, 7, 1) superconnected with nonsolvable displacement group.

use quandlekit::construct::{counterexample_skeleton, wreath_companion};
use quandlekit::PermGroup;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a5 = PermGroup::alternating(5);
    let companion = wreath_companion(&a5, 7)?;
    println!(
        "L^t ⋊ Z_t on {} points: |G| = {}, |K| = {}",
        companion.group.degree(),
        companion.group.order(),
        companion.base.order()
    );

    let report = counterexample_skeleton(&a5, 7)?;
    for line in &report.lines {
        println!("{line}");
    }

    let s3 = PermGroup::symmetric(3);
    let small = counterexample_skeleton(&s3, 5)?;
    println!("\nS3, t = 5:");
    for line in &small.lines {
        println!("{line}");
    }
    match counterexample_skeleton(&a5, 2) {
        Err(e) => println!("\nA5, t = 2: {e}"),
        Ok(_) => unreachable!("60 and 2 are not coprime"),
    }
    Ok(())
}
