//! A small seeded run of the differential fuzzer over random bound quivers.

use moritakit::fuzz::{run_suite, FuzzConfig};

fn main() -> moritakit::Result<()> {
    let cfg = FuzzConfig {
        seed: 42,
        case_count: 12,
        ..FuzzConfig::default()
    };
    let report = run_suite(&cfg)?;
    for c in &report.cases {
        println!(
            "case {:>2}: {} vertices, {} arrows, {} relations, {} violations",
            c.index, c.vertices, c.arrows, c.relations, c.violations
        );
    }
    println!(
        "{} violations, {} skipped",
        report.violations.len(),
        report.skipped
    );
    Ok(())
}
