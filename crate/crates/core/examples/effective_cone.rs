//! Facets of an effective cone and exact membership tests.
//!
//! `cargo run --example effective_cone`

use fujita::{ConeQ, DelPezzoModel, VecQ};

fn main() -> fujita::Result<()> {
    // a small cone in Q^3 given by integer generators
    let cone = ConeQ::from_int_rows(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 1], &[0, 0, 1]])?;
    println!("cone of dimension {} with facets:", cone.dim());
    for f in cone.facets() {
        println!("  {f}");
    }
    for p in [[1, 1, 0], [2, 1, 1], [1, -1, 0]] {
        let v = VecQ::from_ints(&p);
        println!("{v}: {:?}", cone.contains(&v)?);
    }

    // the cubic surface: 27 lines span a cone with 99 facets
    let cubic = DelPezzoModel::new(3)?;
    let eff = cubic.model().eff_cone();
    println!(
        "cubic surface: {} generators, {} facets",
        eff.generators().len(),
        eff.facets().len()
    );
    let k = cubic.model().anticanonical();
    let face = eff.minimal_face(k.coords())?;
    println!("-K spans a face of dimension {}", face.span_dim);
    Ok(())
}
