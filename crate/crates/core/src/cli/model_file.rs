//! The JSON model format shared by the command line and the fixture catalog.
//!
//! ```json
//! {
//!   "model": {"kind": "lattice", "rank": 1, "canonical": [-2],
//!             "effective_generators": [[1]]},
//!   "line_bundle": [1],
//!   "subvarieties": [{"name": "line", "model": {...}, "restricted_bundle": [1]}]
//! }
//! ```
//!
//! Rationals are integers or `"p/q"` strings; floats are rejected.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::cones::ConeQ;
use crate::delpezzo::DelPezzoModel;
use crate::error::{Error, Result};
use crate::invariants::{DivisorClass, Provenance, VarietyModel};
use crate::qlinalg::{format_rat, parse_rat, MatQ, Rat, VecQ};
use crate::toric::{self, Fan, FanChecks, ToricDivisor};

/// A rational number on the wire.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Q(pub Rat);

impl Serialize for Q {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rat(&self.0))
    }
}

struct QVisitor;

impl Visitor<'_> for QVisitor {
    type Value = Q;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an integer or a \"p/q\" string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Q, E> {
        Ok(Q(Rat::from_integer(v.into())))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Q, E> {
        Ok(Q(Rat::from_integer(v.into())))
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<Q, E> {
        Err(E::custom(format!(
            "floating-point value {v} is not allowed; write rationals as \"p/q\""
        )))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Q, E> {
        parse_rat(v)
            .map(Q)
            .ok_or_else(|| E::custom(format!("`{v}` is not a rational number")))
    }
}

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Q, D::Error> {
        d.deserialize_any(QVisitor)
    }
}

fn to_vecq(v: &[Q]) -> VecQ {
    VecQ::new(v.iter().map(|q| q.0.clone()).collect())
}

pub fn from_vecq(v: &VecQ) -> Vec<Q> {
    v.entries().iter().cloned().map(Q).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ModelSpec {
    Lattice {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        rank: usize,
        canonical: Vec<Q>,
        effective_generators: Vec<Vec<Q>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        intersection_form: Option<Vec<Vec<Q>>>,
    },
    DelPezzo {
        degree: i64,
    },
    Toric {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        rays: Vec<Vec<i64>>,
        max_cones: Vec<Vec<usize>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BundleSpec {
    Class(Vec<Q>),
    Toric { toric_coeffs: Vec<i64> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubvarietySpec {
    pub name: String,
    pub model: ModelSpec,
    pub restricted_bundle: BundleSpec,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub anchor: Option<String>,
    pub model: ModelSpec,
    pub line_bundle: BundleSpec,
    /// Class to decompose in `zariski`; defaults to the line bundle.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub divisor: Option<BundleSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub subvarieties: Vec<SubvarietySpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub expected: BTreeMap<String, Value>,
}

impl ModelFile {
    /// Parses JSON; errors carry line and column.
    pub fn parse(text: &str) -> Result<ModelFile> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("model files serialize")
    }
}

/// A model ready for computation.
#[derive(Clone, Debug)]
pub struct BuiltModel {
    pub model: VarietyModel,
    pub del_pezzo: Option<DelPezzoModel>,
}

impl BuiltModel {
    pub fn fan(&self) -> Option<&Arc<Fan>> {
        match self.model.provenance() {
            Provenance::Toric(fan) => Some(fan),
            _ => None,
        }
    }

    pub fn bundle(&self, spec: &BundleSpec) -> Result<DivisorClass> {
        match spec {
            BundleSpec::Class(coords) => {
                if coords.len() != self.model.ns_rank() {
                    return Err(Error::Parse(format!(
                        "class has {} coordinates, model `{}` has rank {}",
                        coords.len(),
                        self.model.name(),
                        self.model.ns_rank()
                    )));
                }
                Ok(DivisorClass::new(to_vecq(coords)))
            }
            BundleSpec::Toric { toric_coeffs } => {
                let fan = self.fan().ok_or_else(|| {
                    Error::Parse("toric_coeffs given for a non-toric model".into())
                })?;
                if toric_coeffs.len() != fan.rays().len() {
                    return Err(Error::Parse(format!(
                        "toric_coeffs has {} entries, fan has {} rays",
                        toric_coeffs.len(),
                        fan.rays().len()
                    )));
                }
                fan.class_of(&ToricDivisor::new(toric_coeffs.clone()))
            }
        }
    }
}

fn rank_checked(name: &str, rows: &[Vec<Q>], rank: usize) -> Result<Vec<VecQ>> {
    rows.iter()
        .map(|r| {
            if r.len() != rank {
                Err(Error::Parse(format!(
                    "{name} row has {} entries, rank is {rank}",
                    r.len()
                )))
            } else {
                Ok(to_vecq(r))
            }
        })
        .collect()
}

pub fn build_model(spec: &ModelSpec, checks: FanChecks) -> Result<BuiltModel> {
    match spec {
        ModelSpec::Lattice {
            name,
            rank,
            canonical,
            effective_generators,
            intersection_form,
        } => {
            if canonical.len() != *rank {
                return Err(Error::Parse(format!(
                    "canonical class has {} entries, rank is {rank}",
                    canonical.len()
                )));
            }
            let gens = rank_checked("effective_generators", effective_generators, *rank)?;
            let form = match intersection_form {
                Some(rows) => {
                    if rows.len() != *rank {
                        return Err(Error::Parse("intersection_form must be square".into()));
                    }
                    Some(MatQ::from_rows(
                        *rank,
                        &rank_checked("intersection_form", rows, *rank)?,
                    )?)
                }
                None => None,
            };
            let model = VarietyModel::new(
                name.clone().unwrap_or_else(|| "lattice model".into()),
                DivisorClass::new(to_vecq(canonical)),
                ConeQ::new(*rank, gens)?,
                form,
                Provenance::Raw,
            )?;
            Ok(BuiltModel {
                model,
                del_pezzo: None,
            })
        }
        ModelSpec::DelPezzo { degree } => {
            let dp = DelPezzoModel::new(*degree)?;
            Ok(BuiltModel {
                model: dp.model().clone(),
                del_pezzo: Some(dp),
            })
        }
        ModelSpec::Toric {
            name,
            rays,
            max_cones,
        } => {
            let dim = rays.first().map(Vec::len).unwrap_or(0);
            let fan = Fan::with_checks(dim, rays.clone(), max_cones.clone(), checks)?;
            let model =
                toric::toric_model(name.clone().unwrap_or_else(|| "toric model".into()), fan)?;
            Ok(BuiltModel {
                model,
                del_pezzo: None,
            })
        }
    }
}
