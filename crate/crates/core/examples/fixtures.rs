//! Runs the bundled catalog of worked examples, or the directory named by
//! `FUJITA_FIXTURE_DIR`.
//!
//! `cargo run --example fixtures`

use fujita::fixtures;
use fujita::toric::FanChecks;

fn main() -> fujita::Result<()> {
    let mut failed = 0;
    for f in fixtures::catalog()? {
        let report = fixtures::run(&f, FanChecks::default());
        let status = if report.passed() { "ok" } else { "FAILED" };
        println!(
            "{:28} {status} ({}/{})",
            f.id,
            report.passed_count(),
            report.expectations.len()
        );
        failed += usize::from(!report.passed());
    }
    std::process::exit(i32::from(failed > 0));
}
