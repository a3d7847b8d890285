//! Catalog of worked examples with their expected invariants.
//!
//! The built-in catalog is compiled in from `fixtures/*.json`. Setting
//! `FUJITA_FIXTURE_DIR` replaces it with every `*.json` file in that
//! directory.

use std::path::Path;

use serde_json::Value;

use crate::cli::model_file::ModelFile;
use crate::cli::report::flat_report;
use crate::error::{Error, Result};
use crate::toric::FanChecks;

pub const FIXTURE_DIR_ENV: &str = "FUJITA_FIXTURE_DIR";

const BUILTIN: [(&str, &str); 7] = [
    (
        "cubic-threefold",
        include_str!("../fixtures/cubic-threefold.json"),
    ),
    ("x22-lines", include_str!("../fixtures/x22-lines.json")),
    (
        "bt-cubic-fibration",
        include_str!("../fixtures/bt-cubic-fibration.json"),
    ),
    ("pgl2-p3", include_str!("../fixtures/pgl2-p3.json")),
    (
        "mu-threefold-divisor",
        include_str!("../fixtures/mu-threefold-divisor.json"),
    ),
    (
        "toric-no-control",
        include_str!("../fixtures/toric-no-control.json"),
    ),
    (
        "cubic-surface-anticanonical",
        include_str!("../fixtures/cubic-surface-anticanonical.json"),
    ),
];

#[derive(Clone, Debug, PartialEq)]
pub struct Fixture {
    pub id: String,
    pub file: ModelFile,
}

impl Fixture {
    pub fn from_file(file: ModelFile) -> Result<Fixture> {
        let id = file
            .id
            .clone()
            .ok_or_else(|| Error::Fixture("fixture file without an id".into()))?;
        Ok(Fixture { id, file })
    }

    pub fn description(&self) -> &str {
        self.file.description.as_deref().unwrap_or("")
    }

    pub fn anchor(&self) -> &str {
        self.file.anchor.as_deref().unwrap_or("")
    }
}

pub fn builtin() -> Vec<Fixture> {
    BUILTIN
        .iter()
        .map(|(id, text)| {
            let file = ModelFile::parse(text)
                .unwrap_or_else(|e| panic!("built-in fixture {id} does not parse: {e}"));
            Fixture::from_file(file).expect("built-in fixtures have ids")
        })
        .collect()
}

/// All `*.json` fixtures in `dir`, sorted by id.
pub fn load_dir(dir: &Path) -> Result<Vec<Fixture>> {
    let entries =
        std::fs::read_dir(dir).map_err(|e| Error::Fixture(format!("{}: {e}", dir.display())))?;
    let mut fixtures = Vec::new();
    for entry in entries {
        let path = entry.map_err(|e| Error::Fixture(e.to_string()))?.path();
        if path.extension().and_then(|e| e.to_str()) != Some("json") {
            continue;
        }
        let text = std::fs::read_to_string(&path)
            .map_err(|e| Error::Fixture(format!("{}: {e}", path.display())))?;
        let file = ModelFile::parse(&text)
            .map_err(|e| Error::Fixture(format!("{}: {e}", path.display())))?;
        fixtures.push(Fixture::from_file(file)?);
    }
    fixtures.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(fixtures)
}

/// The built-in catalog, or the directory named by `FUJITA_FIXTURE_DIR`.
pub fn catalog() -> Result<Vec<Fixture>> {
    match std::env::var_os(FIXTURE_DIR_ENV) {
        Some(dir) => load_dir(Path::new(&dir)),
        None => Ok(builtin()),
    }
}

pub fn find<'a>(fixtures: &'a [Fixture], id: &str) -> Result<&'a Fixture> {
    fixtures
        .iter()
        .find(|f| f.id == id)
        .ok_or_else(|| Error::UnknownFixture(id.to_string()))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Expectation {
    pub key: String,
    pub expected: Value,
    pub actual: Option<Value>,
}

impl Expectation {
    pub fn passed(&self) -> bool {
        self.actual.as_ref() == Some(&self.expected)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FixtureReport {
    pub id: String,
    pub expectations: Vec<Expectation>,
    /// Set when the pipeline itself failed.
    pub error: Option<String>,
}

impl FixtureReport {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.expectations.iter().all(Expectation::passed)
    }

    pub fn passed_count(&self) -> usize {
        self.expectations.iter().filter(|e| e.passed()).count()
    }
}

/// Computes every invariant the fixture declares and compares exactly.
pub fn run(fixture: &Fixture, checks: FanChecks) -> FixtureReport {
    let (actual, error) = match flat_report(&fixture.file, checks) {
        Ok(map) => (map, None),
        Err(e) => (Default::default(), Some(e.to_string())),
    };
    let expectations = fixture
        .file
        .expected
        .iter()
        .map(|(key, expected)| Expectation {
            key: key.clone(),
            expected: expected.clone(),
            actual: actual.get(key).cloned(),
        })
        .collect();
    FixtureReport {
        id: fixture.id.clone(),
        expectations,
        error,
    }
}

pub fn run_fixture(id: &str) -> Result<FixtureReport> {
    let fixtures = catalog()?;
    Ok(run(find(&fixtures, id)?, FanChecks::default()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_ids_match_file_names() {
        for (fixture, (id, _)) in builtin().iter().zip(BUILTIN.iter()) {
            assert_eq!(&fixture.id, id);
            assert!(!fixture.file.expected.is_empty());
        }
    }

    #[test]
    fn unknown_fixture() {
        assert_eq!(
            find(&builtin(), "no-such-fixture").unwrap_err(),
            Error::UnknownFixture("no-such-fixture".into())
        );
    }
}
