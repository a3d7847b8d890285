//! JSON reports. Object keys are sorted and rationals are canonical
//! strings, so output is byte-for-byte deterministic.

use num_traits::{Signed, Zero};
use serde_json::{json, Map, Value};

use super::model_file::{build_model, BuiltModel, ModelFile};
use crate::delpezzo::{self, ZariskiDecomposition};
use crate::error::{Error, Result};
use crate::invariants::{self, DivisorClass};
use crate::qlinalg::{format_rat, MatQ, Rat, VecQ};
use crate::toric::{self, FanChecks, ToricDivisor};

use super::model_file::BundleSpec;

pub fn rat_json(r: &Rat) -> Value {
    Value::String(format_rat(r))
}

pub fn class_json(c: &DivisorClass) -> Value {
    vec_json(c.coords())
}

pub fn vec_json(v: &VecQ) -> Value {
    Value::Array(v.entries().iter().map(rat_json).collect())
}

fn rigid_json(model: &BuiltModel, class: &DivisorClass) -> Result<Value> {
    match invariants::is_rigid_class(&model.model, class) {
        Ok(r) => Ok(Value::Bool(r)),
        Err(Error::RigidityUndecidable) => Ok(Value::Null),
        Err(e) => Err(e),
    }
}

/// `a`, `b`, the face and rigidity of the adjoint divisor, cross-checked by
/// the surface or toric path when the model allows it.
pub fn invariants_report(file: &ModelFile, checks: FanChecks) -> Result<Value> {
    let built = build_model(&file.model, checks)?;
    let bundle = built.bundle(&file.line_bundle)?;
    let r = invariants::b_invariant(&built.model, &bundle)?;
    let mut out = Map::new();
    out.insert("a".into(), rat_json(&r.fujita.a));
    out.insert("b".into(), json!(r.b));
    out.insert("ns_rank".into(), json!(built.model.ns_rank()));
    out.insert("adjoint_class".into(), class_json(&r.fujita.boundary_class));
    out.insert(
        "face_generators".into(),
        Value::Array(r.face_generators.iter().map(class_json).collect()),
    );
    out.insert(
        "rigid".into(),
        rigid_json(&built, &r.fujita.boundary_class)?,
    );
    let mut paths = vec![json!("polyhedral")];
    if let Some(dp) = &built.del_pezzo {
        let surface = delpezzo::surface_b(dp, &bundle)?;
        if surface.b != r.b || surface.a != r.fujita.a {
            return Err(Error::PathDisagreement(format!(
                "polyhedral (a, b) = ({}, {}), surface case ({}, {})",
                format_rat(&r.fujita.a),
                r.b,
                format_rat(&surface.a),
                surface.b
            )));
        }
        paths.push(json!("surface_case"));
    }
    if let (Some(fan), BundleSpec::Toric { toric_coeffs }) = (built.fan(), &file.line_bundle) {
        let balanced =
            toric::toric_balanced_all_subvarieties(fan, &ToricDivisor::new(toric_coeffs.clone()))?;
        out.insert(
            "balanced_all_toric_subvarieties".into(),
            Value::Bool(balanced),
        );
        paths.push(json!("toric_polytope"));
    }
    out.insert("paths".into(), Value::Array(paths));
    Ok(Value::Object(out))
}

pub fn balanced_report(file: &ModelFile, checks: FanChecks) -> Result<Value> {
    let built = build_model(&file.model, checks)?;
    let bundle = built.bundle(&file.line_bundle)?;
    let x = invariants::b_invariant(&built.model, &bundle)?;
    let mut verdicts = Vec::new();
    for sub in &file.subvarieties {
        let y = build_model(&sub.model, checks)?;
        let restricted = y.bundle(&sub.restricted_bundle)?;
        let datum = invariants::SubvarietyDatum {
            name: sub.name.clone(),
            model: y.model.clone().with_name(sub.name.clone()),
            restricted_bundle: restricted,
        };
        let v = invariants::balanced_verdict(&built.model, &bundle, &datum)?;
        verdicts.push(json!({
            "name": sub.name,
            "a": rat_json(&v.pair_y.0),
            "b": v.pair_y.1,
            "ns_rank": y.model.ns_rank(),
            "verdict": v.classification.as_str(),
        }));
    }
    Ok(json!({
        "x": {
            "a": rat_json(&x.fujita.a),
            "b": x.b,
            "ns_rank": built.model.ns_rank(),
        },
        "subvarieties": verdicts,
    }))
}

pub fn zariski_report(file: &ModelFile, checks: FanChecks) -> Result<Value> {
    let built = build_model(&file.model, checks)?;
    let class = built.bundle(file.divisor.as_ref().unwrap_or(&file.line_bundle))?;
    let form = built
        .model
        .intersection_form()
        .ok_or_else(|| {
            Error::InvalidModel("Zariski decomposition needs an intersection form".into())
        })?
        .clone();
    let z = match &built.del_pezzo {
        Some(dp) => delpezzo::zariski_decompose(dp, &class)?,
        None => delpezzo::zariski_on_model(&built.model, &class)?,
    };
    let curves: Vec<DivisorClass> = built
        .model
        .eff_cone()
        .generators()
        .iter()
        .map(|g| DivisorClass::new(g.clone()))
        .collect();
    Ok(json!({
        "divisor": class_json(&class),
        "positive": class_json(&z.positive),
        "negative": z.negative_support.iter().map(|(c, e)| json!({
            "class": class_json(c),
            "mult": rat_json(e),
        })).collect::<Vec<_>>(),
        "checks": zariski_checks(&form, &curves, &class, &z)?,
    }))
}

/// Residual checks of a decomposition, echoed in the report.
pub fn zariski_checks(
    form: &MatQ,
    curves: &[DivisorClass],
    class: &DivisorClass,
    z: &ZariskiDecomposition,
) -> Result<Value> {
    let dot = |a: &DivisorClass, b: &DivisorClass| form.bilinear(a.coords(), b.coords());
    let sums = &z.positive.add(&z.negative_part())? == class;
    let mut orthogonal = true;
    let mut positive_weights = true;
    for (c, e) in &z.negative_support {
        orthogonal &= dot(&z.positive, c)?.is_zero();
        positive_weights &= e.is_positive();
    }
    let mut nef = true;
    for c in curves {
        nef &= !dot(&z.positive, c)?.is_negative();
    }
    let k = z.negative_support.len();
    let gram = MatQ::from_fn(k, k, |i, j| {
        dot(&z.negative_support[i].0, &z.negative_support[j].0).expect("form dims")
    });
    let negative_definite = k == 0 || gram.inertia() == Some((0, k, 0));
    Ok(json!({
        "sums_to_divisor": sums,
        "positive_orthogonal_to_support": orthogonal,
        "positive_weights": positive_weights,
        "positive_part_nef": nef,
        "support_negative_definite": negative_definite,
    }))
}

/// Flat `key → value` map compared against fixture expectations: `a`, `b`,
/// `ns_rank`, `rigid`, and `<name>.a`, `<name>.b`, `<name>.ns_rank`,
/// `<name>.verdict` per subvariety.
pub fn flat_report(file: &ModelFile, checks: FanChecks) -> Result<Map<String, Value>> {
    let mut flat = Map::new();
    let inv = invariants_report(file, checks)?;
    for key in [
        "a",
        "b",
        "ns_rank",
        "rigid",
        "balanced_all_toric_subvarieties",
    ] {
        if let Some(v) = inv.get(key) {
            flat.insert(key.into(), v.clone());
        }
    }
    if !file.subvarieties.is_empty() {
        let bal = balanced_report(file, checks)?;
        for entry in bal["subvarieties"].as_array().into_iter().flatten() {
            let name = entry["name"].as_str().unwrap_or_default();
            for key in ["a", "b", "ns_rank", "verdict"] {
                flat.insert(format!("{name}.{key}"), entry[key].clone());
            }
        }
    }
    Ok(flat)
}
