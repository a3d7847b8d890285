//! a and b for a model given only by its Néron-Severi data.
//!
//! `cargo run --example lattice_invariants`

use fujita::{b_invariant, DivisorClass, VarietyModel};

fn main() -> fujita::Result<()> {
    // Picard rank one with K = -2H: the cubic threefold with L = H
    let cubic = VarietyModel::lattice("cubic threefold", &[-2], &[&[1]], None)?;
    let r = b_invariant(&cubic, &DivisorClass::from_ints(&[1]))?;
    println!("{}: a = {}, b = {}", cubic.name(), r.fujita.a, r.b);

    // rank two: a cubic surface fibration with effective cone spanned by
    // h2 and the boundary class 3h1 - h2
    let fibration = VarietyModel::lattice("fibration", &[-1, -1], &[&[0, 1], &[3, -1]], None)?;
    let l = DivisorClass::from_ints(&[1, 1]);
    let r = b_invariant(&fibration, &l)?;
    println!(
        "{}: a = {}, b = {}, adjoint divisor {} on a face spanned by {:?}",
        fibration.name(),
        r.fujita.a,
        r.b,
        r.fujita.boundary_class,
        r.face_generators
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );
    Ok(())
}
