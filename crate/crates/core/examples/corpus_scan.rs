//! Scans the bundled `.qnd` corpus for counterexamples, as `quandlekit scan` does.

use std::path::Path;

use quandlekit::cli::scan_dir;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/quandles");
    let (records, summary) = scan_dir(&dir, true)?;
    for record in &records {
        let name = record.path.file_name().unwrap().to_string_lossy();
        match (&record.report, &record.conjecture) {
            (Some(r), Some(c)) => println!(
                "{name:<28} n = {:<3} superconnected {:<5} solvable Dis {:<5} counterexample {}",
                r.n,
                r.superconnected,
                c.solvable_dis,
                record.is_counterexample()
            ),
            _ => println!("{name:<28} {}", record.error.as_deref().unwrap_or("no report")),
        }
    }
    println!("\n{}", serde_json::to_string(&summary)?);
    Ok(())
}
