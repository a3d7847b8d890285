//! Parsing a JSON model file and producing the reports the CLI prints.
//!
//! `cargo run --example model_file`

use fujita::cli::model_file::ModelFile;
use fujita::cli::report;
use fujita::toric::FanChecks;

const MODEL: &str = r#"{
  "model": {"kind": "del_pezzo", "degree": 6},
  "line_bundle": [3, -1, -1, -1],
  "divisor": ["1/2", 2, 0, 0]
}"#;

fn main() -> fujita::Result<()> {
    let file = ModelFile::parse(MODEL)?;
    let checks = FanChecks::default();
    println!(
        "{}",
        serde_json::to_string_pretty(&report::invariants_report(&file, checks)?).unwrap()
    );
    println!(
        "{}",
        serde_json::to_string_pretty(&report::zariski_report(&file, checks)?).unwrap()
    );
    Ok(())
}
