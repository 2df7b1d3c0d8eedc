//! The star property, `O_{p'}` and the normal-complement criteria on small groups.

use quandlekit::grp::numbers::prime_support;
use quandlekit::grp::{
    condition_opc, has_normal_p_complement_for_sylow, library, o_pi_prime, pi_condition_ii,
    star_property, theorem_opprime_check, StarOutcome, DEFAULT_PI_CAP, DEFAULT_STAR_CAP,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (name, g) in [("S3", library::symmetric(3)), ("S4", library::symmetric(4)), ("A5", library::alternating(5))] {
        println!("{name}, order {}", g.order());
        for class in g.conjugacy_classes() {
            let x = class.representative;
            if x == g.identity() {
                continue;
            }
            let pi = prime_support(g.element_order(x) as u64);
            let star = match star_property(&g, x, DEFAULT_STAR_CAP) {
                StarOutcome::Holds => "holds".to_string(),
                StarOutcome::Fails { witness } => format!("fails at {}", g.label(witness)),
                StarOutcome::Exceeded { cap } => format!("class over {cap}"),
            };
            let opc = condition_opc(&g, x, &pi);
            let ii = pi_condition_ii(&g, x, &pi, DEFAULT_PI_CAP)?;
            println!("  {:<12} class {:>2}  star {star:<20} G = O·C {opc}  (ii) {ii}", g.label(x), class.members.len());
            if let [p] = pi[..] {
                let report = theorem_opprime_check(&g, x, p)?;
                println!("  {:<12} three conditions agree: {}", "", report.consistent);
            }
        }
    }

    let s4 = library::symmetric(4);
    println!("O_2'(S4) has order {}", o_pi_prime(&s4, &[2]).order());
    println!("O_3'(S4) has order {}", o_pi_prime(&s4, &[3]).order());

    let s3 = library::symmetric(3);
    for text in ["(0 1)", "(0 1 2)"] {
        let x = s3.parse_element(text)?;
        let p = prime_support(s3.element_order(x) as u64)[0];
        let complement = has_normal_p_complement_for_sylow(&s3, x, p)?;
        println!("S3, <{text}> Sylow {p}-subgroup with normal complement: {complement}");
    }
    Ok(())
}
