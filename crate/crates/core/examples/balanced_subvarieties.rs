//! Comparing (a, b) of a variety with those of a subvariety.
//!
//! `cargo run --example balanced_subvarieties`

use fujita::{balanced_verdict, DelPezzoModel, DivisorClass, SubvarietyDatum, VarietyModel};

fn main() -> fujita::Result<()> {
    let cubic = VarietyModel::lattice("cubic threefold", &[-2], &[&[1]], None)?;
    let line = SubvarietyDatum {
        name: "line".into(),
        model: VarietyModel::lattice("P^1", &[-2], &[&[1]], None)?,
        restricted_bundle: DivisorClass::from_ints(&[1]),
    };
    let v = balanced_verdict(&cubic, &DivisorClass::from_ints(&[1]), &line)?;
    println!("line in the cubic threefold: {v}");

    // a cubic surface fibre inside a fibration with b = 2
    let fibration = VarietyModel::lattice("fibration", &[-1, -1], &[&[0, 1], &[3, -1]], None)?;
    let fibre = DelPezzoModel::new(3)?;
    let sub = SubvarietyDatum {
        name: "fibre".into(),
        restricted_bundle: fibre.model().anticanonical(),
        model: fibre.into_model(),
    };
    let v = balanced_verdict(&fibration, &DivisorClass::from_ints(&[1, 1]), &sub)?;
    println!("cubic surface fibre: {v}");
    Ok(())
}
