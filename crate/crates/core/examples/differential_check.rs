//! Seeded differential run over random rational tuples, the library side of
//! `multisubres check`.
//!
//!     cargo run --release --example differential_check -- 500

use multisubres::cli::check::{run_check, CheckConfig};

fn main() -> multisubres::Result<()> {
    let cases = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(50);
    let report = run_check(&CheckConfig {
        cases,
        ..CheckConfig::default()
    })?;
    println!(
        "{} ({} comparisons, {} cases with the root oracle)",
        report.summary(),
        report.comparisons,
        report.oracle_cases
    );
    for f in &report.failures {
        println!("  {f}");
    }
    Ok(())
}
