//! Exceptional curves, Zariski decompositions and the surface case analysis.
//!
//! `cargo run --example del_pezzo_surfaces`

use fujita::delpezzo::{self, BalanceWitness};
use fujita::qlinalg::int;
use fujita::{DelPezzoModel, DivisorClass};

fn main() -> fujita::Result<()> {
    for degree in (1..=8).rev() {
        let s = DelPezzoModel::new(degree)?;
        println!("degree {degree}: {} (-1)-curves", s.negative_curves().len());
    }

    let s = DelPezzoModel::new(5)?;
    // 2H + 3E1 - E2: the exceptional part is pulled off by Zariski
    let d = DivisorClass::from_ints(&[2, 3, -1, 0, 0]);
    let z = delpezzo::zariski_decompose(&s, &d)?;
    println!(
        "D = {d}\n  P = {} (P^2 = {})",
        z.positive,
        s.intersect(&z.positive, &z.positive)
    );
    for (curve, mult) in &z.negative_support {
        println!("  N contains {mult} x {curve}");
    }

    for l in [
        s.model().anticanonical(),
        s.model()
            .anticanonical()
            .add(&s.exceptional(1).scale(&int(2)))?,
        DivisorClass::from_ints(&[4, -2, -1, -1, -1]),
    ] {
        let case = delpezzo::surface_b(&s, &l)?;
        let bal = delpezzo::surface_balanced(&s, &l)?;
        let witness = match bal.witness {
            BalanceWitness::RigidAdjoint { .. } => "rigid adjoint divisor".to_string(),
            BalanceWitness::ConicFibre { fibre } => format!("conic fibre {fibre}"),
        };
        println!(
            "L = {l}: a = {}, b = {} ({:?}), balanced = {} via {witness}",
            case.a, case.b, case.case, bal.balanced
        );
    }
    Ok(())
}
