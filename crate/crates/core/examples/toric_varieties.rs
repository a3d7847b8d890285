//! Toric models: classes from rays, rigidity through divisor polytopes and
//! the fibration formula for b.
//!
//! `cargo run --example toric_varieties`

use fujita::invariants;
use fujita::qlinalg::int;
use fujita::toric::{self, fans, ToricDivisor};

fn main() -> fujita::Result<()> {
    let fan = fans::blown_up_p3_along_line();
    let model = toric::toric_model("P^3 blown up along a line", fan.clone())?;
    let l = ToricDivisor::new(vec![1; fan.rays().len()]);
    let r = invariants::b_invariant(&model, &fan.class_of(&l)?)?;
    println!(
        "{}: rank {}, a = {}, b = {}",
        model.name(),
        fan.ns_rank(),
        r.fujita.a,
        r.b
    );
    println!(
        "adjoint divisor rigid: {}",
        toric::class_is_rigid(&fan, &r.fujita.boundary_class)?
    );
    println!(
        "balanced with respect to every invariant subvariety: {}",
        toric::toric_balanced_all_subvarieties(&fan, &l)?
    );

    // a divisor polytope and its dimension
    let plane = fans::projective_plane();
    let adjoint = toric::adjoint_divisor(&ToricDivisor::new(vec![1, 1, 2]), &int(1));
    let p = toric::divisor_polytope(&plane, &adjoint)?;
    println!("P^2, polytope of (0, 0, 1): dimension {}", p.dim);

    // b via the minimal face against b via the ruling of the blown-up plane
    let bl = fans::blown_up_plane();
    let check =
        toric::fibration_b_crosscheck(&bl, &ToricDivisor::new(vec![0, 0, 2, -1]), &[vec![1, -1]])?;
    println!(
        "Bl_1 P^2: b via face = {}, b via fibration = {}",
        check.b_via_face, check.b_via_fibration
    );
    Ok(())
}
